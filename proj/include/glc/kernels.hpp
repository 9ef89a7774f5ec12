#pragma once

// Row-reduction kernels over packed bitsets. A "row matrix" stores one bitset
// of `words` 64-bit words per row, rows contiguous. The search code keeps
// adjacency and incidence in this layout, so frontier expansion and parity
// computation reduce to OR/XOR over the rows picked by a selector bitset.
//
// Every kernel has a scalar reference implementation; wider variants are
// picked at runtime from the CPU's capabilities and must produce identical
// output.

#include <cstddef>
#include <cstdint>

namespace glc::kernels {

struct RowOps {
  const char* name;
  /// out = OR of row i for every set bit i of `select`.
  void (*union_rows)(const std::uint64_t* rows, std::size_t words, const std::uint64_t* select,
                     std::size_t select_words, std::uint64_t* out);
  /// out = XOR of row i for every set bit i of `select`.
  void (*xor_rows)(const std::uint64_t* rows, std::size_t words, const std::uint64_t* select,
                   std::size_t select_words, std::uint64_t* out);
  std::size_t (*popcount)(const std::uint64_t* bits, std::size_t words);
};

const RowOps& scalar();

/// AVX2 variants, or nullptr when not built in or not supported by this CPU.
const RowOps* avx2();

/// The variant used by the library: AVX2 when available unless scalar is forced.
const RowOps& active();

/// Pins `active()` to the scalar reference (for tests and benchmarks).
void force_scalar(bool on);

}  // namespace glc::kernels
