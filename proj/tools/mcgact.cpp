// mcgact: command-line front end for the mapping class group action.
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcgaction/kernels.hpp"
#include "mcgaction/orbits.hpp"
#include "mcgaction/report.hpp"
#include "mcgaction/text.hpp"
#include "mcgaction/verifier.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int g = -1;
  int n = -1;
  std::string mode = "pure";
  std::string format = "text";
  std::string word;
  std::string target;
  std::string vector;
  std::string group;
  std::string suite = "all";
  std::string kernel = "auto";
  bool nontrivial_c = false;
  bool surjective = false;
  bool members = false;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("MCGACT_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("MCGACT_BUDGET is not a non-negative integer: ") + env);
  }
  return 10'000'000;
}

void add_signature(CLI::App* cmd, Options& o) {
  cmd->add_option("--g", o.g, "genus")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", o.n, "number of marked points")->required()->check(CLI::NonNegativeNumber);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
}

void add_mode(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "pure or full mapping class group")
      ->check(CLI::IsMember({"pure", "full"}));
}

mcg::Signature signature(const Options& o) {
  const mcg::Signature sig{o.g, o.n};
  if (!sig.valid()) {
    throw UsageError("unsupported signature " + mcg::to_string(sig) +
                     ": need g >= 2, or g = 1 with n >= 1, or g = 0 with n >= 3");
  }
  return sig;
}

mcg::GeneratorMode mode_of(const Options& o) {
  return o.mode == "full" ? mcg::GeneratorMode::Full : mcg::GeneratorMode::Pure;
}

void emit(const Options& o, const nlohmann::json& doc, const std::string& text) {
  if (o.format == "machine") {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

// Entries are element names or 0-based indices, separated by spaces or commas.
mcg::GeneratingVector parse_vector(const std::string& text, const mcg::Signature& sig,
                                   const mcg::FiniteGroup& G) {
  std::map<std::string, mcg::Element> by_name;
  for (int k = 0; k < G.order(); ++k) by_name.emplace(G.elements()[k], static_cast<mcg::Element>(k));
  std::string spaced = text;
  for (char& c : spaced) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(spaced);
  std::vector<mcg::Element> entries;
  for (std::string tok; in >> tok;) {
    auto it = by_name.find(tok);
    if (it != by_name.end()) {
      entries.push_back(it->second);
      continue;
    }
    std::size_t used = 0;
    int idx = -1;
    try {
      idx = std::stoi(tok, &used);
    } catch (const std::exception&) {
    }
    if (used != tok.size() || idx < 0 || idx >= G.order()) {
      throw UsageError("vector entry '" + tok + "' is not an element of " + G.name());
    }
    entries.push_back(static_cast<mcg::Element>(idx));
  }
  mcg::GeneratingVector v{sig, std::move(entries)};
  if (v.entries.size() != static_cast<std::size_t>(mcg::vector_length(sig))) {
    throw UsageError("vector needs " + std::to_string(mcg::vector_length(sig)) + " entries (A..., B..., C...)");
  }
  if (!mcg::satisfies_relation(v, G)) {
    throw UsageError("vector does not satisfy the surface relation");
  }
  return v;
}

int run_inspect(const Options& o) {
  const mcg::Signature sig = signature(o);
  emit(o, mcg::atlas_document(sig, mode_of(o)), mcg::atlas_text(sig, mode_of(o)));
  return kOk;
}

int run_apply(const Options& o) {
  const mcg::Signature sig = signature(o);
  const mcg::MCGWord w = mcg::parse_mcg_word(o.word, sig);
  if (o.target.empty() == o.vector.empty()) {
    throw UsageError("apply needs exactly one of --target or --vector");
  }
  if (!o.target.empty()) {
    const mcg::Word u = mcg::parse_pi1_word(o.target, sig);
    const mcg::Word out = mcg::apply_mcg_word(w, u, sig);
    emit(o, mcg::apply_document(sig, w, u, out), mcg::apply_text(sig, w, u, out));
    return kOk;
  }
  if (o.group.empty()) throw UsageError("--vector needs --group");
  const mcg::FiniteGroup G = mcg::load_group_file(o.group);
  const mcg::GeneratingVector v = parse_vector(o.vector, sig, G);
  const mcg::GeneratingVector out =
      mcg::CompiledAction(mcg::mcg_automorphism(w, sig)).apply(v, G);
  emit(o, mcg::apply_document(w, v, out, G), mcg::apply_text(w, v, out, G));
  return kOk;
}

int run_verify(const Options& o) {
  const mcg::Signature sig = signature(o);
  mcg::Report report;
  if (o.suite == "genus0") {
    if (sig.g != 0) throw UsageError("suite genus0 needs --g 0");
    report = mcg::genus0_suite(sig.n, o.threads);
  } else if (o.suite == "pairwise") {
    report = mcg::pairwise_suite(sig, mcg::humphries_adjacency(sig), o.threads);
  } else if (o.suite == "relator") {
    report = mcg::relator_suite(sig, o.threads);
  } else {
    report = mcg::full_suite(sig, o.threads);
  }
  emit(o, mcg::verify_document(report), mcg::verify_text(report));
  return report.ok() ? kOk : kVerificationFailed;
}

int run_orbits(const Options& o) {
  const mcg::Signature sig = signature(o);
  if (o.group.empty()) throw UsageError("orbits needs --group");
  const mcg::FiniteGroup G = mcg::load_group_file(o.group);
  mcg::Policy policy;
  policy.nontrivial_c = o.nontrivial_c;
  policy.surjective = o.surjective;
  policy.budget = o.budget;
  const mcg::OrbitReport report =
      mcg::enumerate_orbits(sig, G, policy, mode_of(o), {o.threads, o.members});
  emit(o, mcg::orbits_document(report, G), mcg::orbits_text(report, G));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Mapping class group action on surface groups: atlas, evaluation, "
               "relation checks and generating-vector orbits"};
  app.require_subcommand(1);

  try {
    o.budget = default_budget();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto* inspect = app.add_subcommand("inspect", "print the image table of every catalog generator");
  add_signature(inspect, o);
  add_mode(inspect, o);
  add_format(inspect, o);

  auto* apply = app.add_subcommand("apply", "evaluate a mapping class word");
  add_signature(apply, o);
  add_format(apply, o);
  apply->add_option("--word", o.word, "mapping class word, e.g. \"tb ta1^-1\"")->required();
  apply->add_option("--target", o.target, "pi1 word, e.g. \"a1 b1^-1\"");
  apply->add_option("--vector", o.vector, "generating vector entries A..., B..., C...");
  apply->add_option("--group", o.group, "group document")->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "check the relations the action must respect");
  add_signature(verify, o);
  add_format(verify, o);
  verify->add_option("--suite", o.suite, "which relations to check")
      ->check(CLI::IsMember({"all", "genus0", "pairwise", "relator"}));
  verify->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* orbits = app.add_subcommand("orbits", "orbits of generating vectors");
  add_signature(orbits, o);
  add_mode(orbits, o);
  add_format(orbits, o);
  orbits->add_option("--group", o.group, "group document")->required()->check(CLI::ExistingFile);
  orbits->add_flag("--nontrivial-c", o.nontrivial_c, "require every C_j != e");
  orbits->add_flag("--surjective", o.surjective, "require the entries to generate the group");
  orbits->add_option("--budget", o.budget, "bound on |G|^(2g+n) (default from MCGACT_BUDGET)");
  orbits->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  orbits->add_flag("--members", o.members, "list every member of each orbit (machine format)");
  orbits->add_option("--kernel", o.kernel, "canonical-form kernel")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (o.kernel == "scalar") mcg::kernels::force(mcg::kernels::Isa::Scalar);
    if (o.kernel == "avx2") mcg::kernels::force(mcg::kernels::Isa::Avx2);
    if (*inspect) return run_inspect(o);
    if (*apply) return run_apply(o);
    if (*verify) return run_verify(o);
    return run_orbits(o);
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
