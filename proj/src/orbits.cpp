#include "mcgaction/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>

#include "mcgaction/kernels.hpp"

namespace mcg {

namespace {

std::size_t slot_of(const Signature& sig, Symbol s) {
  if (!in_alphabet(sig, s)) {
    throw Error("symbol " + to_string(s) + " is not in the alphabet of " + to_string(sig));
  }
  switch (s.kind) {
    case Kind::Alpha:
      return s.index - 1u;
    case Kind::Beta:
      return static_cast<std::size_t>(sig.g) + s.index - 1u;
    default:
      return static_cast<std::size_t>(2 * sig.g) + s.index - 1u;
  }
}

void check_entries(const GeneratingVector& v, const FiniteGroup& G) {
  if (v.entries.size() != static_cast<std::size_t>(vector_length(v.sig))) {
    throw Error("generating vector for " + to_string(v.sig) + " needs " +
                std::to_string(vector_length(v.sig)) + " entries, got " +
                std::to_string(v.entries.size()));
  }
  for (Element e : v.entries) {
    if (e >= G.order()) {
      throw Error("entry " + std::to_string(e) + " is not an element of " + G.name());
    }
  }
}

}  // namespace

GeneratingVector make_vector(const Signature& sig, std::vector<Element> A, std::vector<Element> B,
                             std::vector<Element> C) {
  sig.validate();
  if (A.size() != static_cast<std::size_t>(sig.g) || B.size() != static_cast<std::size_t>(sig.g) ||
      C.size() != static_cast<std::size_t>(sig.n)) {
    throw Error("generating vector shape does not match " + to_string(sig));
  }
  GeneratingVector v{sig, std::move(A)};
  v.entries.insert(v.entries.end(), B.begin(), B.end());
  v.entries.insert(v.entries.end(), C.begin(), C.end());
  return v;
}

bool satisfies_relation(const GeneratingVector& v, const FiniteGroup& G) {
  check_entries(v, G);
  Element acc = G.identity();
  for (int i = 1; i <= v.sig.g; ++i) {
    const Element a = v.A(i), b = v.B(i);
    acc = G.mul(acc, G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
  }
  for (int j = 1; j <= v.sig.n; ++j) acc = G.mul(acc, v.C(j));
  return acc == G.identity();
}

bool generates(const GeneratingVector& v, const FiniteGroup& G) {
  check_entries(v, G);
  const std::vector<bool> mask = G.closure(v.entries);
  return std::all_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

Element evaluate(const Word& u, const GeneratingVector& v, const FiniteGroup& G) {
  check_entries(v, G);
  Element acc = G.identity();
  for (const Letter& l : u.letters()) {
    const Element x = v.entries[slot_of(v.sig, l.symbol)];
    acc = G.mul(acc, l.inverse ? G.inv(x) : x);
  }
  return acc;
}

CompiledAction::CompiledAction(const Automorphism& phi) : sig_(phi.signature()) {
  for (const Word& img : phi.images()) {
    std::vector<Step> steps;
    for (const Letter& l : img.letters()) {
      steps.push_back({static_cast<std::uint16_t>(slot_of(sig_, l.symbol)), l.inverse});
    }
    images_.push_back(std::move(steps));
  }
}

void CompiledAction::apply(std::span<const Element> in, std::span<Element> out,
                           const FiniteGroup& G) const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    Element acc = G.identity();
    for (const Step& s : images_[k]) {
      const Element x = in[s.slot];
      acc = G.mul(acc, s.inverse ? G.inv(x) : x);
    }
    out[k] = acc;
  }
}

GeneratingVector CompiledAction::apply(const GeneratingVector& v, const FiniteGroup& G) const {
  if (!(v.sig == sig_)) throw Error("act: vector signature does not match the automorphism");
  check_entries(v, G);
  GeneratingVector out{sig_, std::vector<Element>(v.entries.size())};
  apply(v.entries, out.entries, G);
  return out;
}

GeneratingVector act(const Generator& gen, const GeneratingVector& v, const FiniteGroup& G) {
  return CompiledAction(generator_automorphism(gen, v.sig)).apply(v, G);
}

GeneratingVector act_inverse(const Generator& gen, const GeneratingVector& v,
                             const FiniteGroup& G) {
  return CompiledAction(inverse_automorphism(gen, v.sig)).apply(v, G);
}

GeneratingVector canonical_form(const GeneratingVector& v, const FiniteGroup& G) {
  check_entries(v, G);
  GeneratingVector out{v.sig, std::vector<Element>(v.entries.size())};
  kernels::lexmin_conjugate(G.conjugation_rows(), G.stride(), G.order(), v.entries, out.entries);
  return out;
}

namespace {

std::uint64_t saturating_power(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

bool accepted(const GeneratingVector& v, const FiniteGroup& G, const Policy& policy) {
  if (policy.nontrivial_c) {
    for (int j = 1; j <= v.sig.n; ++j) {
      if (v.C(j) == G.identity()) return false;
    }
  }
  if (policy.surjective && !generates(v, G)) return false;
  if (policy.filter && !policy.filter(v)) return false;
  return true;
}

std::string key_of(std::span<const Element> entries) {
  return std::string(reinterpret_cast<const char*>(entries.data()), entries.size());
}

}  // namespace

std::vector<GeneratingVector> enumerate_vectors(const Signature& sig, const FiniteGroup& G,
                                                const Policy& policy) {
  sig.validate();
  const int slots = vector_length(sig);
  const std::uint64_t needed = saturating_power(G.order(), slots);
  if (needed > policy.budget) {
    const std::string count = needed == std::numeric_limits<std::uint64_t>::max()
                                  ? "more than 2^64"
                                  : std::to_string(needed);
    throw BudgetExceeded("enumeration over " + G.name() + " at " + to_string(sig) + " needs " +
                         count + " candidate vectors (|G|^" + std::to_string(slots) +
                         "), budget is " + std::to_string(policy.budget));
  }

  // Odometer over every free slot; with n >= 1 the last entry C_n is solved
  // from the relation.
  const int free_slots = sig.n >= 1 ? slots - 1 : slots;
  const int order = G.order();
  std::vector<GeneratingVector> out;
  GeneratingVector v{sig, std::vector<Element>(slots, 0)};
  std::vector<int> digits(free_slots, 0);
  for (;;) {
    for (int k = 0; k < free_slots; ++k) v.entries[k] = static_cast<Element>(digits[k]);
    Element acc = G.identity();
    for (int i = 1; i <= sig.g; ++i) {
      const Element a = v.A(i), b = v.B(i);
      acc = G.mul(acc, G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    }
    for (int j = 1; j < sig.n; ++j) acc = G.mul(acc, v.C(j));
    bool ok = true;
    if (sig.n >= 1) {
      v.entries[slots - 1] = G.inv(acc);
    } else {
      ok = acc == G.identity();
    }
    if (ok && accepted(v, G, policy)) {
      out.push_back(policy.dedupe ? canonical_form(v, G) : v);
    }
    int k = free_slots - 1;
    while (k >= 0 && ++digits[k] == order) digits[k--] = 0;
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrbitReport enumerate_orbits(const Signature& sig, const FiniteGroup& G, Policy policy,
                             GeneratorMode mode, const OrbitOptions& options) {
  policy.dedupe = true;
  const std::vector<GeneratingVector> vectors = enumerate_vectors(sig, G, policy);

  OrbitReport report;
  report.sig = sig;
  report.group_name = G.name();
  report.mode = mode;
  report.vector_count = vectors.size();

  std::vector<CompiledAction> moves;
  for (const Generator& gen : catalog(sig, mode)) {
    report.generators.push_back(token(gen));
    moves.emplace_back(generator_automorphism(gen, sig));
    moves.emplace_back(inverse_automorphism(gen, sig));
  }

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) index.emplace(key_of(vectors[i].entries), i);

  const std::size_t slots = static_cast<std::size_t>(vector_length(sig));
  auto neighbours = [&](std::size_t i, std::vector<std::size_t>& out) {
    std::vector<Element> moved(slots), canon(slots);
    out.clear();
    for (const CompiledAction& m : moves) {
      m.apply(vectors[i].entries, moved, G);
      kernels::lexmin_conjugate(G.conjugation_rows(), G.stride(), G.order(), moved, canon);
      auto it = index.find(key_of(canon));
      if (it == index.end()) {
        throw Error("policy is not invariant under the action: a move leaves the enumerated set");
      }
      out.push_back(it->second);
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  constexpr std::size_t kParallelThreshold = 64;
  std::vector<long> orbit_of(vectors.size(), -1);
  std::vector<std::size_t> frontier, next;
  std::vector<std::vector<std::size_t>> adj;

  for (std::size_t seed = 0; seed < vectors.size(); ++seed) {
    if (orbit_of[seed] >= 0) continue;
    const long id = static_cast<long>(report.orbits.size());
    Orbit orbit;
    orbit.representative = vectors[seed];
    orbit_of[seed] = id;
    std::vector<std::size_t> members{seed};
    frontier = {seed};

    while (!frontier.empty()) {
      // Neighbours are computed in parallel; the merge below is sequential
      // in frontier order, so the result never depends on the schedule.
      adj.assign(frontier.size(), {});
      if (threads == 1 || frontier.size() < kParallelThreshold) {
        for (std::size_t k = 0; k < frontier.size(); ++k) neighbours(frontier[k], adj[k]);
      } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        {
          std::vector<std::jthread> pool;
          for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
              for (std::size_t k; (k = cursor.fetch_add(1)) < frontier.size();) {
                try {
                  neighbours(frontier[k], adj[k]);
                } catch (...) {
                  if (!failed.exchange(true)) failure = std::current_exception();
                  return;
                }
              }
            });
          }
        }
        if (failure) std::rethrow_exception(failure);
      }
      next.clear();
      for (const auto& list : adj) {
        for (std::size_t j : list) {
          if (orbit_of[j] < 0) {
            orbit_of[j] = id;
            next.push_back(j);
            members.push_back(j);
          }
        }
      }
      frontier.swap(next);
    }

    orbit.size = members.size();
    if (options.keep_members) {
      std::sort(members.begin(), members.end());
      for (std::size_t j : members) orbit.members.push_back(vectors[j]);
    }
    report.orbits.push_back(std::move(orbit));
  }
  return report;
}

}  // namespace mcg
