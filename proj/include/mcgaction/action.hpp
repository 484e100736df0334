#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcgaction/surface.hpp"
#include "mcgaction/word.hpp"

namespace mcg {

// Humphries twists plus the half-twists (Hurwitz moves) of the full group.
enum class GenKind : std::uint8_t { B, Bi, A1, A2, Ai, C12, C2i, Di, Omega };

struct Generator {
  GenKind kind = GenKind::B;
  int index = 0;  // unused for B, A1, A2, C12

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

// CLI token: tb, tb<i>, ta1, ta2, ta<i>, tc1_2, tc<2i>_<2i+2>, td<i>, w<i>.
std::string token(const Generator& gen);

enum class GeneratorMode { Pure, Full };

// Ordered generating set of P(g,n), extended by the Hurwitz moves in Full mode.
// For g = 0 this is always w1..w_{n-1}.
std::vector<Generator> catalog(const Signature& sig, GeneratorMode mode = GeneratorMode::Pure);
bool in_catalog(const Signature& sig, const Generator& gen);

struct Factor {
  Generator gen;
  int exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Word in mapping-class generators; adjacent equal generators are merged and
// zero exponents dropped on construction.
class MCGWord {
 public:
  MCGWord() = default;
  MCGWord(std::initializer_list<Factor> fs);
  explicit MCGWord(std::vector<Factor> fs);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  friend MCGWord operator*(const MCGWord& a, const MCGWord& b);
  MCGWord pow(int k) const;
  friend bool operator==(const MCGWord&, const MCGWord&) = default;

 private:
  std::vector<Factor> factors_;
};

std::string to_string(const MCGWord& w);

// Endomorphism of the free group on alphabet(sig), stored as the image of
// every alphabet symbol in alphabet order.
class Automorphism {
 public:
  explicit Automorphism(Signature sig);  // identity
  Automorphism(Signature sig, std::vector<Word> images);

  const Signature& signature() const { return sig_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(Symbol s) const;
  Word apply(const Word& u) const;
  bool is_identity() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  Signature sig_;
  std::vector<Word> images_;
};

// Helper loops appearing in the generator images.
Word sigma_word(const Signature& sig);                // a2^-1 b1 a1 b1^-1
Word lambda_word(int i, const Signature& sig);        // g_j .. g_n a1, j = i - 2g + 2
Word mu_word(int i, const Signature& sig);            // a_{i+2}^-1 b_{i+1} a_{i+1} b_{i+1}^-1

Automorphism generator_automorphism(const Generator& gen, const Signature& sig);
Automorphism inverse_automorphism(const Generator& gen, const Signature& sig);

// (outer . inner)(x) = outer(inner(x))
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

// Rightmost factor acts first.
Automorphism mcg_automorphism(const MCGWord& w, const Signature& sig);
Word apply_mcg_word(const MCGWord& w, const Word& u, const Signature& sig);

// Witness y with phi(x) = y psi(x) y^-1 on the free basis after eliminating
// g_n; requires n >= 1.
std::optional<Word> outer_equal(const Automorphism& phi, const Automorphism& psi);

// Free-group-level sufficient test over the whole redundant alphabet; the
// only Out test available when n = 0.
std::optional<Word> outer_equal_free(const Automorphism& phi, const Automorphism& psi);

// y with phi(relator) = y relator y^-1 in the free group.
std::optional<Word> preserves_relator(const Automorphism& phi);

}  // namespace mcg
