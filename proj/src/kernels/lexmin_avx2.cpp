#include <immintrin.h>

#include <bit>

#include "mcgaction/kernels.hpp"

namespace mcg::kernels {

namespace {

inline std::uint8_t hmin_epu8(__m256i v) {
  __m128i x = _mm_min_epu8(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  x = _mm_min_epu8(x, _mm_srli_epi16(x, 8));
  return static_cast<std::uint8_t>(_mm_cvtsi128_si32(_mm_minpos_epu16(x)));
}

}  // namespace

// Candidate set kept as one byte mask per 32 conjugators; each position
// narrows it to the conjugators attaining the column minimum.
std::size_t lexmin_conjugate_avx2(std::span<const std::uint8_t> rows, std::size_t stride,
                                  std::size_t order, std::span<const std::uint8_t> v,
                                  std::span<std::uint8_t> out) {
  constexpr std::size_t kLanes = 32;
  const std::size_t blocks = (order + kLanes - 1) / kLanes;
  __m256i mask[8];  // order <= 255

  const __m256i lane = _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
                                        17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t live = order - b * kLanes < kLanes ? order - b * kLanes : kLanes;
    // lane < live, as unsigned bytes
    const __m256i limit = _mm256_set1_epi8(static_cast<char>(live));
    mask[b] = _mm256_cmpgt_epi8(limit, lane);
  }
  const __m256i ones = _mm256_set1_epi8(static_cast<char>(0xFF));

  std::size_t p = 0;
  std::size_t survivors = order;
  for (; p < v.size() && survivors > 1; ++p) {
    const std::uint8_t* row = rows.data() + v[p] * stride;
    __m256i acc = ones;
    for (std::size_t b = 0; b < blocks; ++b) {
      const __m256i vals = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + b * kLanes));
      acc = _mm256_min_epu8(acc, _mm256_or_si256(vals, _mm256_andnot_si256(mask[b], ones)));
    }
    const std::uint8_t m = hmin_epu8(acc);
    out[p] = m;
    const __m256i target = _mm256_set1_epi8(static_cast<char>(m));
    survivors = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const __m256i vals = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + b * kLanes));
      mask[b] = _mm256_and_si256(mask[b], _mm256_cmpeq_epi8(vals, target));
      survivors += static_cast<std::size_t>(
          std::popcount(static_cast<std::uint32_t>(_mm256_movemask_epi8(mask[b]))));
    }
  }

  std::size_t best = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(mask[b]));
    if (bits != 0) {
      best = b * kLanes + static_cast<std::size_t>(std::countr_zero(bits));
      break;
    }
  }
  for (; p < v.size(); ++p) out[p] = rows[v[p] * stride + best];
  return best;
}

}  // namespace mcg::kernels
