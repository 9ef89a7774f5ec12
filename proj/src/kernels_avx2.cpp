// Compiled with -mavx2; only reachable through kernels::avx2() after a CPU check.

#include <immintrin.h>

#include <bit>
#include <cstring>

#include "glc/kernels.hpp"

namespace glc::kernels {

namespace {

template <bool Xor>
void reduce_rows_avx2(const std::uint64_t* rows, std::size_t words, const std::uint64_t* select,
                      std::size_t select_words, std::uint64_t* out) {
  const std::size_t lanes = words / 4 * 4;
  std::memset(out, 0, words * sizeof(std::uint64_t));
  for (std::size_t s = 0; s < select_words; ++s) {
    std::uint64_t bits = select[s];
    while (bits) {
      const std::size_t row = s * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const std::uint64_t* r = rows + row * words;
      std::size_t w = 0;
      for (; w < lanes; w += 4) {
        const __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + w));
        const __m256i val = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + w));
        const __m256i res = Xor ? _mm256_xor_si256(acc, val) : _mm256_or_si256(acc, val);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), res);
      }
      for (; w < words; ++w) out[w] = Xor ? (out[w] ^ r[w]) : (out[w] | r[w]);
    }
  }
}

void union_rows_avx2(const std::uint64_t* rows, std::size_t words, const std::uint64_t* select,
                     std::size_t select_words, std::uint64_t* out) {
  reduce_rows_avx2<false>(rows, words, select, select_words, out);
}

void xor_rows_avx2(const std::uint64_t* rows, std::size_t words, const std::uint64_t* select,
                   std::size_t select_words, std::uint64_t* out) {
  reduce_rows_avx2<true>(rows, words, select, select_words, out);
}

// Nibble lookup popcount (Mula et al.), summed with SAD against zero.
std::size_t popcount_avx2(const std::uint64_t* bits, std::size_t words) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i total = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits + w));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    total = _mm256_add_epi64(total, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
  std::size_t sum = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; w < words; ++w) sum += static_cast<std::size_t>(std::popcount(bits[w]));
  return sum;
}

const RowOps kAvx2{"avx2", union_rows_avx2, xor_rows_avx2, popcount_avx2};

}  // namespace

const RowOps& avx2_ops() { return kAvx2; }

}  // namespace glc::kernels
