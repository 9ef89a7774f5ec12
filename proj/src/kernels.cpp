#include "glc/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstring>

namespace glc::kernels {

#if defined(GLC_HAVE_AVX2_TU)
const RowOps& avx2_ops();
#endif

namespace {

template <typename Combine>
void reduce_rows(const std::uint64_t* rows, std::size_t words, const std::uint64_t* select,
                 std::size_t select_words, std::uint64_t* out, Combine combine) {
  std::memset(out, 0, words * sizeof(std::uint64_t));
  for (std::size_t s = 0; s < select_words; ++s) {
    std::uint64_t bits = select[s];
    while (bits) {
      const std::size_t row = s * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const std::uint64_t* r = rows + row * words;
      for (std::size_t w = 0; w < words; ++w) out[w] = combine(out[w], r[w]);
    }
  }
}

void union_rows_scalar(const std::uint64_t* rows, std::size_t words, const std::uint64_t* select,
                       std::size_t select_words, std::uint64_t* out) {
  reduce_rows(rows, words, select, select_words, out,
              [](std::uint64_t a, std::uint64_t b) { return a | b; });
}

void xor_rows_scalar(const std::uint64_t* rows, std::size_t words, const std::uint64_t* select,
                     std::size_t select_words, std::uint64_t* out) {
  reduce_rows(rows, words, select, select_words, out,
              [](std::uint64_t a, std::uint64_t b) { return a ^ b; });
}

std::size_t popcount_scalar(const std::uint64_t* bits, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount(bits[w]));
  return total;
}

const RowOps kScalar{"scalar", union_rows_scalar, xor_rows_scalar, popcount_scalar};

std::atomic<bool> g_force_scalar{false};

}  // namespace

const RowOps& scalar() { return kScalar; }

const RowOps* avx2() {
#if defined(GLC_HAVE_AVX2_TU)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_ops() : nullptr;
#else
  return nullptr;
#endif
}

const RowOps& active() {
  if (!g_force_scalar.load(std::memory_order_relaxed)) {
    if (const RowOps* wide = avx2()) return *wide;
  }
  return kScalar;
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace glc::kernels
