#pragma once

#include <string>

#include <json.hpp>

#include "mcgaction/orbits.hpp"
#include "mcgaction/verifier.hpp"

// Text and machine-readable renderings of every command's output. Documents
// carry a "format" tag ("mcgaction-<kind>/1") matching the schemas in docs/.
namespace mcg {

nlohmann::json atlas_document(const Signature& sig, GeneratorMode mode);
std::string atlas_text(const Signature& sig, GeneratorMode mode);

nlohmann::json apply_document(const Signature& sig, const MCGWord& w, const Word& input,
                              const Word& output);
std::string apply_text(const Signature& sig, const MCGWord& w, const Word& input,
                       const Word& output);

nlohmann::json apply_document(const MCGWord& w, const GeneratingVector& input,
                              const GeneratingVector& output, const FiniteGroup& G);
std::string apply_text(const MCGWord& w, const GeneratingVector& input,
                       const GeneratingVector& output, const FiniteGroup& G);

nlohmann::json verify_document(const Report& report);
std::string verify_text(const Report& report);

nlohmann::json orbits_document(const OrbitReport& report, const FiniteGroup& G);
std::string orbits_text(const OrbitReport& report, const FiniteGroup& G);

// "(t, t, e | r1)" style rendering with element names; A, B, C blocks
// separated by bars.
std::string vector_text(const GeneratingVector& v, const FiniteGroup& G);

std::string to_string(GeneratorMode mode);

}  // namespace mcg
