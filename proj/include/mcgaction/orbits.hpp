#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcgaction/action.hpp"
#include "mcgaction/finite_group.hpp"

namespace mcg {

// Entries per vector: 2g + n (one per alphabet symbol).
inline int vector_length(const Signature& sig) { return 2 * sig.g + sig.n; }

// Images of a1..ag, b1..bg, g1..gn (alphabet order) under an epimorphism
// pi1 -> G.
struct GeneratingVector {
  Signature sig;
  std::vector<Element> entries;

  Element A(int i) const { return entries[i - 1]; }
  Element B(int i) const { return entries[sig.g + i - 1]; }
  Element C(int j) const { return entries[2 * sig.g + j - 1]; }

  friend bool operator==(const GeneratingVector&, const GeneratingVector&) = default;
  friend auto operator<=>(const GeneratingVector& a, const GeneratingVector& b) {
    return a.entries <=> b.entries;
  }
};

GeneratingVector make_vector(const Signature& sig, std::vector<Element> A, std::vector<Element> B,
                             std::vector<Element> C);

// prod [A_i, B_i] prod C_j == e
bool satisfies_relation(const GeneratingVector& v, const FiniteGroup& G);
bool generates(const GeneratingVector& v, const FiniteGroup& G);

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct Policy {
  bool nontrivial_c = false;  // every C_j != e
  bool surjective = false;    // entries generate G
  bool dedupe = true;         // keep one canonical vector per Inn(G)-class
  std::uint64_t budget = 10'000'000;  // bound on |G|^(2g+n)
  std::function<bool(const GeneratingVector&)> filter;  // extra predicate, optional
};

Element evaluate(const Word& u, const GeneratingVector& v, const FiniteGroup& G);

// Precomposition of the epimorphism with a fixed automorphism, compiled to
// slot indices for repeated use.
class CompiledAction {
 public:
  CompiledAction(const Automorphism& phi);
  GeneratingVector apply(const GeneratingVector& v, const FiniteGroup& G) const;
  void apply(std::span<const Element> in, std::span<Element> out, const FiniteGroup& G) const;

 private:
  struct Step {
    std::uint16_t slot;
    bool inverse;
  };
  Signature sig_;
  std::vector<std::vector<Step>> images_;
};

GeneratingVector act(const Generator& gen, const GeneratingVector& v, const FiniteGroup& G);
GeneratingVector act_inverse(const Generator& gen, const GeneratingVector& v, const FiniteGroup& G);

// Least vector under simultaneous conjugation by G (SIMD-dispatched kernel).
GeneratingVector canonical_form(const GeneratingVector& v, const FiniteGroup& G);

// Sorted ascending. Throws BudgetExceeded when |G|^(2g+n) > policy.budget.
std::vector<GeneratingVector> enumerate_vectors(const Signature& sig, const FiniteGroup& G,
                                                const Policy& policy);

struct Orbit {
  std::size_t size = 0;
  GeneratingVector representative;       // least canonical vector of the orbit
  std::vector<GeneratingVector> members;  // filled when requested, sorted
};

struct OrbitReport {
  Signature sig;
  std::string group_name;
  GeneratorMode mode = GeneratorMode::Pure;
  std::vector<std::string> generators;
  std::size_t vector_count = 0;
  std::vector<Orbit> orbits;  // sorted by representative
};

struct OrbitOptions {
  unsigned threads = 1;
  bool keep_members = false;
};

// Orbits of the canonical vectors under the catalog generators and their
// inverses. Policy.dedupe is forced on.
OrbitReport enumerate_orbits(const Signature& sig, const FiniteGroup& G, Policy policy,
                             GeneratorMode mode, const OrbitOptions& options = {});

}  // namespace mcg
