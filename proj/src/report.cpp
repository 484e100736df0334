#include "mcgaction/report.hpp"

#include <sstream>

#include "mcgaction/text.hpp"

namespace mcg {

using nlohmann::json;

std::string to_string(GeneratorMode mode) { return mode == GeneratorMode::Full ? "full" : "pure"; }

namespace {

json signature_json(const Signature& sig) { return {{"g", sig.g}, {"n", sig.n}}; }

std::string sym(Symbol s) { return to_string(s); }

}  // namespace

json atlas_document(const Signature& sig, GeneratorMode mode) {
  json gens = json::array();
  for (const Generator& gen : catalog(sig, mode)) {
    const Automorphism phi = generator_automorphism(gen, sig);
    json images = json::object();
    for (Symbol s : alphabet(sig)) {
      const Word& img = phi.image(s);
      if (img != Word::of(s)) images[sym(s)] = to_string(img);
    }
    gens.push_back({{"token", token(gen)}, {"images", images}});
  }
  return {{"format", "mcgaction-atlas/1"},
          {"signature", signature_json(sig)},
          {"mode", to_string(mode)},
          {"generators", gens}};
}

std::string atlas_text(const Signature& sig, GeneratorMode mode) {
  std::ostringstream os;
  os << "atlas " << to_string(sig) << " mode " << to_string(mode) << '\n';
  for (const Generator& gen : catalog(sig, mode)) {
    const Automorphism phi = generator_automorphism(gen, sig);
    os << token(gen) << ":\n";
    bool moved = false;
    for (Symbol s : alphabet(sig)) {
      const Word& img = phi.image(s);
      if (img == Word::of(s)) continue;
      os << "  " << sym(s) << " -> " << to_string(img) << '\n';
      moved = true;
    }
    if (!moved) os << "  (identity on every generator)\n";
  }
  return os.str();
}

json apply_document(const Signature& sig, const MCGWord& w, const Word& input,
                    const Word& output) {
  return {{"format", "mcgaction-apply/1"},
          {"signature", signature_json(sig)},
          {"mcg_word", to_string(w)},
          {"input", to_string(input)},
          {"output", to_string(output)}};
}

std::string apply_text(const Signature& sig, const MCGWord& w, const Word& input,
                       const Word& output) {
  return "apply " + to_string(sig) + " [" + to_string(w) + "] " + to_string(input) + " -> " +
         to_string(output) + "\n";
}

namespace {

json vector_json(const GeneratingVector& v, const FiniteGroup& G) {
  json idx = json::array(), names = json::array();
  for (Element e : v.entries) {
    idx.push_back(e);
    names.push_back(G.elements()[e]);
  }
  return {{"entries", idx}, {"names", names}};
}

}  // namespace

json apply_document(const MCGWord& w, const GeneratingVector& input,
                    const GeneratingVector& output, const FiniteGroup& G) {
  return {{"format", "mcgaction-apply/1"},
          {"signature", signature_json(input.sig)},
          {"mcg_word", to_string(w)},
          {"group", G.name()},
          {"input_vector", vector_json(input, G)},
          {"output_vector", vector_json(output, G)}};
}

std::string apply_text(const MCGWord& w, const GeneratingVector& input,
                       const GeneratingVector& output, const FiniteGroup& G) {
  return "apply " + to_string(input.sig) + " [" + to_string(w) + "] over " + G.name() + " " +
         vector_text(input, G) + " -> " + vector_text(output, G) + "\n";
}

std::string vector_text(const GeneratingVector& v, const FiniteGroup& G) {
  auto block = [&](int from, int count) {
    std::string s;
    for (int k = 0; k < count; ++k) {
      if (k) s += ", ";
      s += G.elements()[v.entries[from + k]];
    }
    return s;
  };
  std::string out = "(";
  const int g = v.sig.g, n = v.sig.n;
  if (g > 0) out += block(0, g) + " | " + block(g, g);
  if (g > 0 && n > 0) out += " | ";
  if (n > 0) out += block(2 * g, n);
  return out + ")";
}

json verify_document(const Report& report) {
  json checks = json::array();
  for (const CheckResult& r : report.results) {
    json c = {{"name", r.name}, {"mode", to_string(r.mode)}, {"status", to_string(r.status)}};
    c["witness"] = r.witness ? json(to_string(*r.witness)) : json(nullptr);
    c["detail"] = r.detail;
    checks.push_back(std::move(c));
  }
  return {{"format", "mcgaction-verify/1"},
          {"signature", signature_json(report.sig)},
          {"suite", report.suite},
          {"summary",
           {{"pass", report.count(Status::Pass)},
            {"fail", report.count(Status::Fail)},
            {"skipped", report.count(Status::Skipped)}}},
          {"ok", report.ok()},
          {"checks", checks}};
}

std::string verify_text(const Report& report) {
  std::ostringstream os;
  os << "verify " << to_string(report.sig) << " suite " << report.suite << '\n';
  for (const CheckResult& r : report.results) {
    os << (r.status == Status::Pass ? "PASS " : r.status == Status::Fail ? "FAIL " : "SKIP ")
       << r.name << " [" << to_string(r.mode) << "]";
    if (r.witness) os << " witness " << to_string(*r.witness);
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << '\n';
  }
  os << "summary: " << report.count(Status::Pass) << " pass, " << report.count(Status::Fail)
     << " fail, " << report.count(Status::Skipped) << " skipped\n";
  return os.str();
}

json orbits_document(const OrbitReport& report, const FiniteGroup& G) {
  json orbits = json::array();
  for (const Orbit& o : report.orbits) {
    json entry = {{"size", o.size}, {"representative", vector_json(o.representative, G)}};
    if (!o.members.empty()) {
      json members = json::array();
      for (const GeneratingVector& m : o.members) members.push_back(vector_json(m, G)["entries"]);
      entry["members"] = members;
    }
    orbits.push_back(std::move(entry));
  }
  return {{"format", "mcgaction-orbits/1"},
          {"signature", signature_json(report.sig)},
          {"group", report.group_name},
          {"mode", to_string(report.mode)},
          {"generators", report.generators},
          {"vector_count", report.vector_count},
          {"orbit_count", report.orbits.size()},
          {"orbits", orbits}};
}

std::string orbits_text(const OrbitReport& report, const FiniteGroup& G) {
  std::ostringstream os;
  os << "orbits " << to_string(report.sig) << " group " << report.group_name << " mode "
     << to_string(report.mode) << '\n';
  os << "generators:";
  for (const std::string& t : report.generators) os << ' ' << t;
  os << "\nvectors: " << report.vector_count << "\norbits: " << report.orbits.size() << '\n';
  for (std::size_t k = 0; k < report.orbits.size(); ++k) {
    const Orbit& o = report.orbits[k];
    os << "  #" << k + 1 << " size " << o.size << " rep " << vector_text(o.representative, G)
       << '\n';
  }
  return os.str();
}

}  // namespace mcg
