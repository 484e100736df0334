#pragma once

#include <vector>

#include "mcgaction/word.hpp"

namespace mcg {

// Genus g with n marked points. Valid: g >= 2; g == 1 with n >= 1 (the
// torus modes are best-effort, see README); g == 0 with n >= 3.
struct Signature {
  int g = 0;
  int n = 0;

  bool valid() const;
  void validate() const;  // throws Error
  int rank() const { return 2 * g + n - 1; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);

// [a1..ag, b1..bg, g1..gn]
std::vector<Symbol> alphabet(const Signature& sig);

// Alphabet minus the eliminated symbol g_n; requires n >= 1.
std::vector<Symbol> free_basis(const Signature& sig);

bool in_alphabet(const Signature& sig, Symbol s);

// prod [a_i, b_i] * prod g_j, with [x, y] = x y x^-1 y^-1.
Word surface_relator(const Signature& sig);

// Rewrites g_n as (g1 .. g_{n-1})^-1 (prod [a_i, b_i])^-1. Requires n >= 1.
Word eliminate_redundant(const Word& u, const Signature& sig);

}  // namespace mcg
