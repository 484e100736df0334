#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcgaction/action.hpp"

namespace mcg {

enum class CheckMode {
  OutEquality,          // lhs == rhs in Out
  RelatorPreservation,  // lhs maps the relator to a conjugate of itself
  IdentityInOut,        // lhs is inner
  IdentityExact,        // lhs == rhs symbol by symbol, redundant alphabet
  GammaConjugation,     // lhs and rhs agree on g1..gn up to one common conjugator
};

std::string to_string(CheckMode m);

struct RelationCheck {
  std::string name;
  MCGWord lhs;
  MCGWord rhs;
  CheckMode mode = CheckMode::OutEquality;
  // When set, the witness found must equal this word exactly.
  std::optional<Word> expected_witness;
};

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  CheckMode mode = CheckMode::OutEquality;
  Status status = Status::Skipped;
  std::optional<Word> witness;
  std::string detail;
};

struct Report {
  Signature sig;
  std::string suite;
  std::vector<CheckResult> results;

  int count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
};

// Runs one check and re-verifies its witness. Never throws on a failing
// relation; the failure is returned in the result.
CheckResult run_check(const RelationCheck& check, const Signature& sig);

// Checks run concurrently on `threads` workers; results keep input order.
std::vector<CheckResult> run_checks(const std::vector<RelationCheck>& checks,
                                    const Signature& sig, unsigned threads = 1);

enum class Adjacency { Disjoint, OnePoint, Unspecified };
using AdjacencyTable = std::map<std::pair<Generator, Generator>, Adjacency>;

// Intersection pattern of the Humphries curves: every pair of pure catalog
// generators, keyed with the earlier catalog entry first.
AdjacencyTable humphries_adjacency(const Signature& sig);

// Commutation, braid, loop and full-turn relations of the M(0,n)
// presentation plus relator preservation.
Report genus0_suite(int n, unsigned threads = 1);

// Commutation for Disjoint pairs, braid relation for OnePoint pairs.
Report pairwise_suite(const Signature& sig, const AdjacencyTable& adjacency,
                      unsigned threads = 1);

// Relator preservation of every generator.
Report relator_suite(const Signature& sig, unsigned threads = 1);

Report full_suite(const Signature& sig, unsigned threads = 1);

}  // namespace mcg
