#include <atomic>

#include "mcgaction/kernels.hpp"

namespace mcg::kernels {

namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detected()};
  return isa;
}

}  // namespace

const char* name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected() { return cpu_has(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active() { return selected().load(std::memory_order_relaxed); }

void force(Isa isa) { selected().store(cpu_has(isa) ? isa : Isa::Scalar); }

std::size_t lexmin_conjugate(std::span<const std::uint8_t> rows, std::size_t stride,
                             std::size_t order, std::span<const std::uint8_t> v,
                             std::span<std::uint8_t> out) {
#if defined(__x86_64__) || defined(_M_X64)
  if (active() == Isa::Avx2) return lexmin_conjugate_avx2(rows, stride, order, v, out);
#endif
  return lexmin_conjugate_scalar(rows, stride, order, v, out);
}

}  // namespace mcg::kernels
