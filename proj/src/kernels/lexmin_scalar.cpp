#include "mcgaction/kernels.hpp"

namespace mcg::kernels {

std::size_t lexmin_conjugate_scalar(std::span<const std::uint8_t> rows, std::size_t stride,
                                    std::size_t order, std::span<const std::uint8_t> v,
                                    std::span<std::uint8_t> out) {
  const std::size_t k = v.size();
  std::size_t best = 0;
  for (std::size_t x = 1; x < order; ++x) {
    for (std::size_t p = 0; p < k; ++p) {
      const std::uint8_t cand = rows[v[p] * stride + x];
      const std::uint8_t cur = rows[v[p] * stride + best];
      if (cand != cur) {
        if (cand < cur) best = x;
        break;
      }
    }
  }
  for (std::size_t p = 0; p < k; ++p) out[p] = rows[v[p] * stride + best];
  return best;
}

}  // namespace mcg::kernels
