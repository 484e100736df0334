#include "mcgaction/finite_group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>

namespace mcg {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> elements,
                         std::vector<int> table, int identity)
    : name_(std::move(name)), order_(static_cast<int>(elements.size())),
      elements_(std::move(elements)) {
  const int n = order_;
  if (n < 1 || n > kMaxOrder) {
    throw Error("group order must be in 1.." + std::to_string(kMaxOrder) + ", got " +
                std::to_string(n));
  }
  if (table.size() != static_cast<std::size_t>(n) * n) {
    throw Error("closure: table has " + std::to_string(table.size()) + " entries, expected " +
                std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= n) {
      throw Error("closure: entry " + std::to_string(table[i]) + " at row " +
                  std::to_string(i / n) + ", column " + std::to_string(i % n) + " out of range");
    }
  }
  if (identity < 0 || identity >= n) throw Error("identity: index out of range");
  table_.assign(table.begin(), table.end());
  identity_ = static_cast<Element>(identity);

  for (int a = 0; a < n; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      throw Error("identity: element " + elements_[identity_] + " is not neutral for " +
                  elements_[a]);
    }
  }
  inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n && found < 0; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) found = b;
    }
    if (found < 0) throw Error("inverses: element " + elements_[a] + " has no inverse");
    inverse_[a] = static_cast<Element>(found);
  }

  auto check = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw Error("associativity: fails for (" + elements_[a] + ", " + elements_[b] + ", " +
                  elements_[c] + ")");
    }
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < 200000; ++s) check(pick(rng), pick(rng), pick(rng));
  }

  stride_ = (static_cast<std::size_t>(n) + 31) / 32 * 32;
  conj_rows_.assign(stride_ * n, 0xFF);
  for (int e = 0; e < n; ++e)
    for (int x = 0; x < n; ++x) conj_rows_[e * stride_ + x] = conj(static_cast<Element>(x), e);
}

bool FiniteGroup::abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<bool> FiniteGroup::closure(std::span<const Element> gens) const {
  std::vector<bool> in(order_, false);
  std::vector<Element> queue{identity_};
  in[identity_] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element g : gens) {
      const Element p = mul(queue[head], g);
      if (!in[p]) {
        in[p] = true;
        queue.push_back(p);
      }
    }
  }
  return in;
}

FiniteGroup load_group(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw Error("group document must be an object");
    if (doc.contains("format") && doc.at("format") != "mcgaction-group/1") {
      throw Error("unsupported group format " + doc.at("format").dump());
    }
    const int order = doc.at("order").get<int>();
    auto elements = doc.at("elements").get<std::vector<std::string>>();
    if (static_cast<int>(elements.size()) != order) {
      throw Error("'elements' has " + std::to_string(elements.size()) + " names, 'order' is " +
                  std::to_string(order));
    }
    return FiniteGroup(doc.value("name", std::string("G")), std::move(elements),
                       doc.at("table").get<std::vector<int>>(), doc.at("identity").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed group document: ") + e.what());
  }
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed group document " + path + ": " + e.what());
  }
  return load_group(doc);
}

nlohmann::json group_document(const FiniteGroup& G) {
  std::vector<int> table;
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) table.push_back(G.mul(a, b));
  return {{"format", "mcgaction-group/1"}, {"name", G.name()},       {"order", G.order()},
          {"elements", G.elements()},      {"table", table},          {"identity", G.identity()}};
}

FiniteGroup cyclic_group(int n) {
  std::vector<std::string> names;
  std::vector<int> table;
  for (int a = 0; a < n; ++a) names.push_back(a == 0 ? "e" : "r" + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table.push_back((a + b) % n);
  return FiniteGroup("Z" + std::to_string(n), std::move(names), std::move(table), 0);
}

FiniteGroup symmetric_group(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s = "[";
    for (int i = 0; i < k; ++i) s += std::to_string(q[i] + 1);
    names.push_back(s + "]");
  }
  // (p*q)(i) = p(q(i)): q acts first.
  std::vector<int> table;
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = a[b[i]];
      table.push_back(static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
    }
  }
  return FiniteGroup("S" + std::to_string(k), std::move(names), std::move(table), 0);
}

FiniteGroup dihedral_group(int n) {
  // r^i s^f, index i + n f; s r s = r^-1.
  std::vector<std::string> names;
  std::vector<int> table;
  for (int f = 0; f < 2; ++f)
    for (int i = 0; i < n; ++i)
      names.push_back((i == 0 && f == 0) ? "e" : (i ? "r" + std::to_string(i) : "") + (f ? "s" : ""));
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      const int ia = a % n, fa = a / n, ib = b % n, fb = b / n;
      const int i = ((ia + (fa ? -ib : ib)) % n + n) % n;
      table.push_back(i + n * (fa ^ fb));
    }
  }
  return FiniteGroup("D" + std::to_string(n), std::move(names), std::move(table), 0);
}

}  // namespace mcg
