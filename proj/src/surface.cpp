#include "mcgaction/surface.hpp"

#include <algorithm>

namespace mcg {

bool Signature::valid() const {
  if (g < 0 || n < 0) return false;
  if (g == 0) return n >= 3;
  if (g == 1) return n >= 1;
  return true;
}

void Signature::validate() const {
  if (!valid()) {
    throw Error("unsupported signature " + to_string(*this) +
                ": need g >= 2, or g = 1 with n >= 1, or g = 0 with n >= 3");
  }
}

std::string to_string(const Signature& sig) {
  return "(" + std::to_string(sig.g) + "," + std::to_string(sig.n) + ")";
}

std::vector<Symbol> alphabet(const Signature& sig) {
  sig.validate();
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(2 * sig.g + sig.n));
  for (int i = 1; i <= sig.g; ++i) out.push_back(alpha(i));
  for (int i = 1; i <= sig.g; ++i) out.push_back(beta(i));
  for (int i = 1; i <= sig.n; ++i) out.push_back(gamma(i));
  return out;
}

std::vector<Symbol> free_basis(const Signature& sig) {
  if (sig.n < 1) throw Error("free basis requires at least one marked point (n >= 1)");
  std::vector<Symbol> out = alphabet(sig);
  out.pop_back();
  return out;
}

bool in_alphabet(const Signature& sig, Symbol s) {
  switch (s.kind) {
    case Kind::Alpha:
    case Kind::Beta:
      return s.index >= 1 && s.index <= sig.g;
    case Kind::Gamma:
      return s.index >= 1 && s.index <= sig.n;
    case Kind::Marker:
      return false;
  }
  return false;
}

namespace {

Word commutator_product(const Signature& sig) {
  WordBuilder b;
  for (int i = 1; i <= sig.g; ++i) {
    b.append({alpha(i), false}).append({beta(i), false});
    b.append({alpha(i), true}).append({beta(i), true});
  }
  return std::move(b).build();
}

}  // namespace

Word surface_relator(const Signature& sig) {
  sig.validate();
  WordBuilder b(commutator_product(sig));
  for (int j = 1; j <= sig.n; ++j) b.append({gamma(j), false});
  return std::move(b).build();
}

Word eliminate_redundant(const Word& u, const Signature& sig) {
  sig.validate();
  if (sig.n < 1) throw Error("eliminate_redundant: unsupported for closed surfaces (n = 0)");
  const Symbol last = gamma(sig.n);
  WordBuilder head(commutator_product(sig));
  for (int j = 1; j < sig.n; ++j) head.append({gamma(j), false});
  const Word replacement = invert(std::move(head).build());

  WordBuilder b;
  for (const Letter& l : u.letters()) {
    if (l.symbol != last) {
      b.append(l);
    } else if (l.inverse) {
      b.append_inverse(replacement);
    } else {
      b.append(replacement);
    }
  }
  return std::move(b).build();
}

}  // namespace mcg
