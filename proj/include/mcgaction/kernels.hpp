#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Lexicographic minimum of an element tuple over simultaneous conjugation.
//
// rows is a conjugation table laid out as rows[e * stride + x] = x e x^-1,
// stride a multiple of 32 and rows padded past `order` (padding is never
// read as a candidate). Each kernel writes the least tuple
// (x v[0] x^-1, ..., x v[k-1] x^-1) into out and returns the smallest x
// attaining it. All variants return identical results.
namespace mcg::kernels {

enum class Isa { Scalar, Avx2 };

const char* name(Isa isa);

// Best variant supported by the running CPU.
Isa detected();

// Variant used by lexmin_conjugate(); defaults to detected(). Forcing an ISA
// the CPU lacks falls back to Scalar.
Isa active();
void force(Isa isa);

std::size_t lexmin_conjugate_scalar(std::span<const std::uint8_t> rows, std::size_t stride,
                                    std::size_t order, std::span<const std::uint8_t> v,
                                    std::span<std::uint8_t> out);

#if defined(__x86_64__) || defined(_M_X64)
std::size_t lexmin_conjugate_avx2(std::span<const std::uint8_t> rows, std::size_t stride,
                                  std::size_t order, std::span<const std::uint8_t> v,
                                  std::span<std::uint8_t> out);
#endif

std::size_t lexmin_conjugate(std::span<const std::uint8_t> rows, std::size_t stride,
                             std::size_t order, std::span<const std::uint8_t> v,
                             std::span<std::uint8_t> out);

}  // namespace mcg::kernels
