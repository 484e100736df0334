#include "mcgaction/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

#include "mcgaction/text.hpp"

namespace mcg {

std::string to_string(CheckMode m) {
  switch (m) {
    case CheckMode::OutEquality:
      return "out-equality";
    case CheckMode::RelatorPreservation:
      return "relator-preservation";
    case CheckMode::IdentityInOut:
      return "identity-in-out";
    case CheckMode::IdentityExact:
      return "identity-exact";
    case CheckMode::GammaConjugation:
      return "gamma-conjugation";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(results.begin(), results.end(),
                                        [s](const CheckResult& r) { return r.status == s; }));
}

namespace {

struct Tuples {
  std::vector<Word> lhs, rhs;
  std::vector<Symbol> symbols;
};

// Image tuples compared by the Out tests: the eliminated free basis when
// n >= 1, the whole redundant alphabet otherwise.
Tuples out_tuples(const Automorphism& phi, const Automorphism& psi) {
  const Signature& sig = phi.signature();
  Tuples t;
  if (sig.n >= 1) {
    t.symbols = free_basis(sig);
    for (Symbol x : t.symbols) {
      t.lhs.push_back(eliminate_redundant(phi.image(x), sig));
      t.rhs.push_back(eliminate_redundant(psi.image(x), sig));
    }
  } else {
    t.symbols = alphabet(sig);
    t.lhs = phi.images();
    t.rhs = psi.images();
  }
  return t;
}

Tuples gamma_tuples(const Automorphism& phi, const Automorphism& psi) {
  Tuples t;
  for (int k = 1; k <= phi.signature().n; ++k) {
    t.symbols.push_back(gamma(k));
    t.lhs.push_back(phi.image(gamma(k)));
    t.rhs.push_back(psi.image(gamma(k)));
  }
  return t;
}

std::string first_difference(const Tuples& t) {
  for (std::size_t i = 0; i < t.symbols.size(); ++i) {
    if (t.lhs[i] != t.rhs[i]) {
      return to_string(t.symbols[i]) + ": " + to_string(t.lhs[i]) + " vs " + to_string(t.rhs[i]);
    }
  }
  return "";
}

bool reverify(const Tuples& t, const Word& y) {
  for (std::size_t i = 0; i < t.lhs.size(); ++i) {
    if (conjugate(t.rhs[i], y) != t.lhs[i]) return false;
  }
  return true;
}

}  // namespace

CheckResult run_check(const RelationCheck& check, const Signature& sig) {
  CheckResult r{check.name, check.mode, Status::Fail, std::nullopt, ""};
  try {
    const Automorphism phi = mcg_automorphism(check.lhs, sig);
    const Automorphism psi = mcg_automorphism(check.rhs, sig);

    switch (check.mode) {
      case CheckMode::RelatorPreservation: {
        const Word rel = surface_relator(sig);
        r.witness = preserves_relator(phi);
        if (!r.witness) {
          r.detail = "image of relator is " + to_string(phi.apply(rel));
        } else if (conjugate(rel, *r.witness) != phi.apply(rel)) {
          r.detail = "witness failed re-verification";
          r.witness.reset();
        }
        break;
      }
      case CheckMode::IdentityExact: {
        if (phi == psi) {
          r.witness = Word{};
        } else {
          Tuples t;
          t.symbols = alphabet(sig);
          t.lhs = phi.images();
          t.rhs = psi.images();
          r.detail = "maps differ at " + first_difference(t);
        }
        break;
      }
      case CheckMode::OutEquality:
      case CheckMode::IdentityInOut:
      case CheckMode::GammaConjugation: {
        const Tuples t = check.mode == CheckMode::GammaConjugation ? gamma_tuples(phi, psi)
                                                                   : out_tuples(phi, psi);
        r.witness = simultaneous_conjugator(t.lhs, t.rhs);
        if (!r.witness) {
          r.detail = "no common conjugator; " + first_difference(t);
        } else if (!reverify(t, *r.witness)) {
          r.detail = "witness failed re-verification";
          r.witness.reset();
        } else if (sig.n == 0 && check.mode != CheckMode::GammaConjugation) {
          r.detail = "free-level";
        }
        break;
      }
    }

    if (r.witness) {
      if (check.expected_witness && *check.expected_witness != *r.witness) {
        r.detail = "witness " + to_string(*r.witness) + " differs from expected " +
                   to_string(*check.expected_witness);
      } else {
        r.status = Status::Pass;
      }
    }
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.witness.reset();
    r.detail = std::string("error: ") + e.what();
  }
  return r;
}

std::vector<CheckResult> run_checks(const std::vector<RelationCheck>& checks,
                                    const Signature& sig, unsigned threads) {
  std::vector<CheckResult> out(checks.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(checks.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) out[i] = run_check(checks[i], sig);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) out[i] = run_check(checks[i], sig);
    });
  }
  pool.clear();
  return out;
}

namespace {

MCGWord one(Generator g, int e = 1) { return MCGWord{{g, e}}; }
Generator omega(int i) { return {GenKind::Omega, i}; }

CheckResult skipped(std::string name, std::string why) {
  return {std::move(name), CheckMode::OutEquality, Status::Skipped, std::nullopt, std::move(why)};
}

std::vector<RelationCheck> relator_checks(const Signature& sig) {
  std::vector<RelationCheck> out;
  for (const Generator& gen : catalog(sig, GeneratorMode::Full)) {
    RelationCheck c{"relator " + token(gen), one(gen), {}, CheckMode::RelatorPreservation, Word{}};
    if (gen.kind == GenKind::Ai) {
      // a1^-1 P^-1 a1 P with P = g_j .. g_n
      const Word p = multiply(lambda_word(gen.index, sig), Word::of(alpha(1), -1));
      const Word a1 = Word::of(alpha(1));
      c.expected_witness = invert(a1) * invert(p) * a1 * p;
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Braid-group relations among w1..w_{n-1}. On the sphere the loop and the full
// turn are identities in Out. In positive genus the loop is not a relation; the full turn acts on
// the gamma tuple as conjugation by g1 .. gn.
std::vector<RelationCheck> omega_checks(const Signature& sig, bool full_sphere) {
  const int n = sig.n;
  std::vector<RelationCheck> out;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      out.push_back({"commute " + token(omega(i)) + " " + token(omega(j)),
                     one(omega(i)) * one(omega(j)), one(omega(j)) * one(omega(i)),
                     CheckMode::OutEquality, std::nullopt});
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    const MCGWord x = one(omega(i)), y = one(omega(i + 1));
    out.push_back({"braid " + token(omega(i)) + " " + token(omega(i + 1)), x * y * x,
                   y * x * y, CheckMode::OutEquality, std::nullopt});
  }

  MCGWord loop;
  for (int i = 1; i <= n - 2; ++i) loop = loop * one(omega(i));
  loop = loop * one(omega(n - 1), 2);
  for (int i = n - 2; i >= 1; --i) loop = loop * one(omega(i));
  MCGWord cycle;
  for (int i = 1; i <= n - 1; ++i) cycle = cycle * one(omega(i));

  const Word g1 = Word::of(gamma(1));
  if (full_sphere) {
    out.push_back({"loop " + to_string(loop) + " = 1", loop, {}, CheckMode::IdentityInOut, g1});
    out.push_back({"full turn (" + to_string(cycle) + ")^" + std::to_string(n) + " = 1", cycle.pow(n),
                   {}, CheckMode::IdentityInOut, Word{}});
  } else {
    WordBuilder full;
    for (int k = 1; k <= n; ++k) full.append({gamma(k), false});
    out.push_back({"full turn (" + to_string(cycle) + ")^" + std::to_string(n) + " on gammas",
                   cycle.pow(n), {}, CheckMode::GammaConjugation, std::move(full).build()});
  }
  return out;
}

struct PairPlan {
  std::vector<RelationCheck> checks;
  std::vector<CheckResult> skips;
};

PairPlan pair_checks(const Signature& sig, const AdjacencyTable& adjacency) {
  const auto cat = catalog(sig, GeneratorMode::Full);
  auto position = [&](const Generator& g) {
    auto it = std::find(cat.begin(), cat.end(), g);
    if (it == cat.end()) {
      throw Error("adjacency entry " + token(g) + " is not a generator for " + to_string(sig));
    }
    return it - cat.begin();
  };
  struct Row {
    std::ptrdiff_t lo, hi;
    Generator x, y;
    Adjacency kind;
  };
  std::vector<Row> rows;
  for (const auto& [pair, kind] : adjacency) {
    auto a = position(pair.first), b = position(pair.second);
    rows.push_back({std::min(a, b), std::max(a, b), pair.first, pair.second, kind});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& l, const Row& r) { return std::tie(l.lo, l.hi) < std::tie(r.lo, r.hi); });

  PairPlan plan;
  for (const Row& row : rows) {
    const MCGWord x = one(row.x), y = one(row.y);
    const std::string label = token(row.x) + " " + token(row.y);
    switch (row.kind) {
      case Adjacency::Disjoint:
        plan.checks.push_back(
            {"pair " + label + " commute", x * y, y * x, CheckMode::OutEquality, std::nullopt});
        break;
      case Adjacency::OnePoint:
        plan.checks.push_back(
            {"pair " + label + " braid", x * y * x, y * x * y, CheckMode::OutEquality, std::nullopt});
        break;
      case Adjacency::Unspecified:
        plan.skips.push_back(skipped("pair " + label, "adjacency unspecified"));
        break;
    }
  }
  return plan;
}

}  // namespace

AdjacencyTable humphries_adjacency(const Signature& sig) {
  const auto cat = catalog(sig, GeneratorMode::Pure);
  auto one_point = [](const Generator& x, const Generator& y) {
    auto is = [](const Generator& g, GenKind k) { return g.kind == k; };
    if (is(x, GenKind::B)) {
      return is(y, GenKind::A1) || is(y, GenKind::A2) || is(y, GenKind::Ai);
    }
    if (is(x, GenKind::Bi) && x.index == 1 && (is(y, GenKind::A2) || is(y, GenKind::C12))) {
      return true;
    }
    // gamma_{2i,2i+2} runs through handles i+1 and i+2, crossing beta_i and beta_{i+1}.
    if (is(x, GenKind::Bi) && is(y, GenKind::C2i)) {
      return x.index == y.index || x.index == y.index + 1;
    }
    return false;
  };
  AdjacencyTable table;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      const bool hit = one_point(cat[i], cat[j]) || one_point(cat[j], cat[i]);
      table[{cat[i], cat[j]}] = hit ? Adjacency::OnePoint : Adjacency::Disjoint;
    }
  }
  return table;
}

Report genus0_suite(int n, unsigned threads) {
  if (n < 3) throw Error("genus-0 suite needs n >= 3");
  const Signature sig{0, n};
  std::vector<RelationCheck> checks = relator_checks(sig);
  for (auto& c : omega_checks(sig, true)) checks.push_back(std::move(c));
  return {sig, "genus0", run_checks(checks, sig, threads)};
}

Report pairwise_suite(const Signature& sig, const AdjacencyTable& adjacency, unsigned threads) {
  sig.validate();
  PairPlan plan = pair_checks(sig, adjacency);
  Report r{sig, "pairwise", run_checks(plan.checks, sig, threads)};
  for (auto& s : plan.skips) r.results.push_back(std::move(s));
  return r;
}

Report relator_suite(const Signature& sig, unsigned threads) {
  sig.validate();
  return {sig, "relator", run_checks(relator_checks(sig), sig, threads)};
}

Report full_suite(const Signature& sig, unsigned threads) {
  sig.validate();
  if (sig.g == 0) {
    Report r = genus0_suite(sig.n, threads);
    r.suite = "all";
    return r;
  }
  std::vector<RelationCheck> checks = relator_checks(sig);
  for (const Generator& gen : catalog(sig, GeneratorMode::Full)) {
    checks.push_back({"inverse " + token(gen) + "^-1 " + token(gen), MCGWord{{gen, -1}, {gen, 1}},
                      {}, CheckMode::IdentityExact, Word{}});
    checks.push_back({"inverse " + token(gen) + " " + token(gen) + "^-1", MCGWord{{gen, 1}, {gen, -1}},
                      {}, CheckMode::IdentityExact, Word{}});
  }
  for (int i = 1; i <= sig.n - 1; ++i) {
    const Generator d{GenKind::Di, i};
    checks.push_back({"trivial " + token(d), one(d), {}, CheckMode::IdentityInOut, Word{}});
  }
  if (sig.n >= 2) {
    for (auto& c : omega_checks(sig, false)) checks.push_back(std::move(c));
  }
  PairPlan plan = pair_checks(sig, humphries_adjacency(sig));
  for (auto& c : plan.checks) checks.push_back(std::move(c));

  Report r{sig, "all", run_checks(checks, sig, threads)};
  for (auto& s : plan.skips) r.results.push_back(std::move(s));
  r.results.push_back(skipped("handle relations", "out of scope: involve untabulated c_{i,j}"));
  r.results.push_back(skipped("star relations", "out of scope: involve untabulated c_{i,j}"));
  if (sig.n >= 2) {
    r.results.push_back(skipped("loop relation", "not a relation in positive genus"));
    r.results.push_back(skipped("half-twist/twist mixed relations", "out of scope"));
  }
  return r;
}

}  // namespace mcg
