#include "mcgaction/action.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcg {

std::string token(const Generator& gen) {
  const std::string i = std::to_string(gen.index);
  switch (gen.kind) {
    case GenKind::B:
      return "tb";
    case GenKind::Bi:
      return "tb" + i;
    case GenKind::A1:
      return "ta1";
    case GenKind::A2:
      return "ta2";
    case GenKind::Ai:
      return "ta" + i;
    case GenKind::C12:
      return "tc1_2";
    case GenKind::C2i:
      return "tc" + std::to_string(2 * gen.index) + "_" + std::to_string(2 * gen.index + 2);
    case GenKind::Di:
      return "td" + i;
    case GenKind::Omega:
      return "w" + i;
  }
  return "?";
}

std::vector<Generator> catalog(const Signature& sig, GeneratorMode mode) {
  sig.validate();
  const int g = sig.g, n = sig.n;
  std::vector<Generator> out;
  if (g >= 1) {
    out.push_back({GenKind::B, 0});
    for (int i = 1; i <= g - 1; ++i) out.push_back({GenKind::Bi, i});
    out.push_back({GenKind::A1, 0});
    if (g >= 2) out.push_back({GenKind::A2, 0});
    for (int i = 2 * g; i <= 2 * g + n - 2; ++i) out.push_back({GenKind::Ai, i});
    if (g >= 2) out.push_back({GenKind::C12, 0});
    for (int i = 1; i <= g - 2; ++i) out.push_back({GenKind::C2i, i});
    for (int i = 1; i <= n - 1; ++i) out.push_back({GenKind::Di, i});
  }
  if (g == 0 || mode == GeneratorMode::Full) {
    for (int i = 1; i <= n - 1; ++i) out.push_back({GenKind::Omega, i});
  }
  return out;
}

bool in_catalog(const Signature& sig, const Generator& gen) {
  if (!sig.valid()) return false;
  auto all = catalog(sig, GeneratorMode::Full);
  return std::find(all.begin(), all.end(), gen) != all.end();
}

namespace {

std::vector<Factor> merge(const std::vector<Factor>& fs) {
  std::vector<Factor> out;
  for (const Factor& f : fs) {
    if (f.exponent == 0) continue;
    if (!out.empty() && out.back().gen == f.gen) {
      out.back().exponent += f.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(f);
    }
  }
  return out;
}

}  // namespace

MCGWord::MCGWord(std::initializer_list<Factor> fs) : factors_(merge(std::vector<Factor>(fs))) {}
MCGWord::MCGWord(std::vector<Factor> fs) : factors_(merge(fs)) {}

MCGWord operator*(const MCGWord& a, const MCGWord& b) {
  std::vector<Factor> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return MCGWord(std::move(fs));
}

MCGWord MCGWord::pow(int k) const {
  MCGWord base = *this;
  if (k < 0) {
    std::vector<Factor> inv(factors_.rbegin(), factors_.rend());
    for (Factor& f : inv) f.exponent = -f.exponent;
    base = MCGWord(std::move(inv));
    k = -k;
  }
  MCGWord out;
  for (int i = 0; i < k; ++i) out = out * base;
  return out;
}

std::string to_string(const MCGWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Factor& f : w.factors()) {
    if (!out.empty()) out += ' ';
    out += token(f.gen);
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

namespace {

std::size_t slot(const Signature& sig, Symbol s) {
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

}  // namespace

Automorphism::Automorphism(Signature sig) : sig_(sig) {
  for (Symbol s : alphabet(sig_)) images_.push_back(Word::of(s));
}

Automorphism::Automorphism(Signature sig, std::vector<Word> images)
    : sig_(sig), images_(std::move(images)) {
  if (images_.size() != alphabet(sig_).size()) {
    throw Error("automorphism needs one image per alphabet symbol");
  }
  for (const Word& w : images_) {
    for (const Letter& l : w.letters()) slot(sig_, l.symbol);
  }
}

const Word& Automorphism::image(Symbol s) const { return images_[slot(sig_, s)]; }

Word Automorphism::apply(const Word& u) const {
  WordBuilder b;
  for (const Letter& l : u.letters()) {
    const Word& img = images_[slot(sig_, l.symbol)];
    if (l.inverse) {
      b.append_inverse(img);
    } else {
      b.append(img);
    }
  }
  return std::move(b).build();
}

bool Automorphism::is_identity() const {
  auto syms = alphabet(sig_);
  for (std::size_t i = 0; i < syms.size(); ++i) {
    if (images_[i] != Word::of(syms[i])) return false;
  }
  return true;
}

Word sigma_word(const Signature& sig) {
  if (sig.g < 2) throw Error("sigma is defined only for genus g >= 2");
  return Word{{alpha(2), true}, {beta(1), false}, {alpha(1), false}, {beta(1), true}};
}

Word lambda_word(int i, const Signature& sig) {
  if (sig.n < 2 || i < 2 * sig.g || i > 2 * sig.g + sig.n - 2) {
    throw Error("lambda_" + std::to_string(i) + " out of range for " + to_string(sig));
  }
  const int j = i - 2 * sig.g + 2;
  WordBuilder b;
  for (int k = j; k <= sig.n; ++k) b.append({gamma(k), false});
  b.append({alpha(1), false});
  return std::move(b).build();
}

Word mu_word(int i, const Signature& sig) {
  if (i < 1 || i > sig.g - 2) {
    throw Error("mu_" + std::to_string(i) + " out of range for " + to_string(sig));
  }
  return Word{{alpha(i + 2), true}, {beta(i + 1), false}, {alpha(i + 1), false}, {beta(i + 1), true}};
}

namespace {

Word w(Symbol s) { return Word::of(s); }

// Both directions of a twist share one builder: sign = +1 gives the forward
// image, sign = -1 the hand-derived inverse (each helper loop is fixed by
// its own twist, so inverting amounts to flipping it).
Automorphism twist(const Generator& gen, const Signature& sig, int sign) {
  if (!in_catalog(sig, gen)) {
    throw Error("generator " + token(gen) + " is not in the catalog for " + to_string(sig));
  }
  std::vector<Word> img;
  for (Symbol s : alphabet(sig)) img.push_back(w(s));
  auto set = [&](Symbol s, Word v) { img[slot(sig, s)] = std::move(v); };
  const bool fwd = sign > 0;

  switch (gen.kind) {
    case GenKind::B:
      set(alpha(1), w(alpha(1)) * Word::of(beta(1), -sign));
      break;
    case GenKind::Bi: {
      const int k = gen.index + 1;
      set(alpha(k), w(alpha(k)) * Word::of(beta(k), -sign));
      break;
    }
    case GenKind::A1:
      set(beta(1), w(beta(1)) * Word::of(alpha(1), sign));
      break;
    case GenKind::C12:
      set(beta(2), w(beta(2)) * Word::of(alpha(2), sign));
      break;
    case GenKind::A2:
    case GenKind::C2i: {
      // x -> r x r^-1, y -> r y, z -> z r^-1.
      const bool is_a2 = gen.kind == GenKind::A2;
      const int i = gen.index;
      Word r = is_a2 ? sigma_word(sig) : mu_word(i, sig);
      if (!fwd) r = invert(r);
      const Symbol x = is_a2 ? alpha(2) : alpha(i + 2);
      const Symbol y = is_a2 ? beta(1) : beta(i + 1);
      const Symbol z = is_a2 ? beta(2) : beta(i + 2);
      set(x, conjugate(w(x), r));
      set(y, r * w(y));
      set(z, w(z) * invert(r));
      break;
    }
    case GenKind::Ai: {
      // a1 -> l^-1 a1 l, b1 -> b1 l, g_k -> l^-1 g_k l for k >= j.
      Word l = lambda_word(gen.index, sig);
      if (!fwd) l = invert(l);
      const Word li = invert(l);
      set(alpha(1), conjugate(w(alpha(1)), li));
      set(beta(1), w(beta(1)) * l);
      const int j = gen.index - 2 * sig.g + 2;
      for (int k = j; k <= sig.n; ++k) set(gamma(k), conjugate(w(gamma(k)), li));
      break;
    }
    case GenKind::Di:
      break;
    case GenKind::Omega: {
      const int i = gen.index;
      const Word gi = w(gamma(i)), gj = w(gamma(i + 1));
      if (fwd) {
        set(gamma(i), conjugate(gj, gi));
        set(gamma(i + 1), gi);
      } else {
        set(gamma(i), gj);
        set(gamma(i + 1), conjugate(gi, invert(gj)));
      }
      break;
    }
  }

  Automorphism phi(sig, std::move(img));
  if (!preserves_relator(phi)) {
    throw std::logic_error("generator " + token(gen) + (fwd ? "" : "^-1") +
                           " does not preserve the surface relator at " + to_string(sig));
  }
  return phi;
}

}  // namespace

Automorphism generator_automorphism(const Generator& gen, const Signature& sig) {
  return twist(gen, sig, +1);
}

Automorphism inverse_automorphism(const Generator& gen, const Signature& sig) {
  return twist(gen, sig, -1);
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  if (!(outer.signature() == inner.signature())) throw Error("compose: signature mismatch");
  std::vector<Word> img;
  img.reserve(inner.images().size());
  for (const Word& x : inner.images()) img.push_back(outer.apply(x));
  return Automorphism(inner.signature(), std::move(img));
}

Automorphism mcg_automorphism(const MCGWord& word, const Signature& sig) {
  Automorphism acc(sig);
  for (const Factor& f : word.factors()) {
    const Automorphism step = f.exponent > 0 ? generator_automorphism(f.gen, sig)
                                             : inverse_automorphism(f.gen, sig);
    for (int k = 0; k < std::abs(f.exponent); ++k) acc = compose(acc, step);
  }
  return acc;
}

Word apply_mcg_word(const MCGWord& word, const Word& u, const Signature& sig) {
  return mcg_automorphism(word, sig).apply(u);
}

std::optional<Word> outer_equal(const Automorphism& phi, const Automorphism& psi) {
  const Signature& sig = phi.signature();
  if (!(sig == psi.signature())) throw Error("outer_equal: signature mismatch");
  if (sig.n < 1) throw Error("outer_equal: unsupported for closed surfaces (n = 0)");
  std::vector<Word> us, vs;
  for (Symbol x : free_basis(sig)) {
    us.push_back(eliminate_redundant(phi.image(x), sig));
    vs.push_back(eliminate_redundant(psi.image(x), sig));
  }
  return simultaneous_conjugator(us, vs);
}

std::optional<Word> outer_equal_free(const Automorphism& phi, const Automorphism& psi) {
  if (!(phi.signature() == psi.signature())) throw Error("outer_equal_free: signature mismatch");
  return simultaneous_conjugator(phi.images(), psi.images());
}

std::optional<Word> preserves_relator(const Automorphism& phi) {
  const Word rel = surface_relator(phi.signature());
  return are_conjugate(phi.apply(rel), rel);
}

}  // namespace mcg
