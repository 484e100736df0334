#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcgaction/word.hpp"

namespace mcg {

using Element = std::uint8_t;

// Finite group given by its multiplication table. Orders up to 255 so that
// elements fit in a byte (the orbit kernels rely on that).
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 255;

  // Validates closure, identity, inverses and associativity (exhaustive for
  // order <= 64, a fixed pseudo-random sample of triples beyond). Throws
  // Error naming the failed axiom.
  FiniteGroup(std::string name, std::vector<std::string> elements, std::vector<int> table,
              int identity);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  const std::vector<std::string>& elements() const { return elements_; }
  Element identity() const { return identity_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element x, Element e) const { return mul(mul(x, e), inv(x)); }
  bool abelian() const;

  // Subgroup generated by gens, as a membership mask.
  std::vector<bool> closure(std::span<const Element> gens) const;

  // rows[e * stride() + x] = x e x^-1, rows padded with 0xFF to stride().
  std::span<const Element> conjugation_rows() const { return conj_rows_; }
  std::size_t stride() const { return stride_; }

 private:
  std::string name_;
  int order_ = 0;
  std::vector<std::string> elements_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::size_t stride_ = 0;
  std::vector<Element> conj_rows_;
};

// Group document: {"name", "order", "elements", "table" (row-major, 0-based
// indices, table[a*order+b] = a*b), "identity"}; an optional "format" field
// must equal "mcgaction-group/1".
FiniteGroup load_group(const nlohmann::json& doc);
FiniteGroup load_group_file(const std::string& path);
nlohmann::json group_document(const FiniteGroup& G);

FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int k);
FiniteGroup dihedral_group(int n);  // order 2n

}  // namespace mcg
