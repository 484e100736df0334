#include "mcgaction/word.hpp"

#include <algorithm>

namespace mcg {

std::string to_string(Symbol s) {
  static constexpr char kPrefix[] = {'a', 'b', 'g', 't'};
  return kPrefix[static_cast<int>(s.kind)] + std::to_string(s.index);
}

std::string to_string(Letter l) {
  return l.inverse ? to_string(l.symbol) + "^-1" : to_string(l.symbol);
}

WordBuilder& WordBuilder::append(Letter l) {
  if (!buf_.empty() && buf_.back().cancels(l)) {
    buf_.pop_back();
  } else {
    buf_.push_back(l);
  }
  return *this;
}

WordBuilder& WordBuilder::append(const Word& w) {
  for (const Letter& l : w.letters()) append(l);
  return *this;
}

WordBuilder& WordBuilder::append_inverse(const Word& w) {
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) append(it->inverted());
  return *this;
}

Word::Word(std::span<const Letter> raw) {
  WordBuilder b;
  for (const Letter& l : raw) b.append(l);
  letters_ = std::move(b).build().letters_;
}

Word::Word(std::initializer_list<Letter> raw)
    : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::of(Symbol s, int exponent) {
  std::vector<Letter> ls(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent),
                         Letter{s, exponent < 0});
  return Word(Trusted{}, std::move(ls));
}

bool Word::contains(Kind k) const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [k](const Letter& l) { return l.symbol.kind == k; });
}

bool Word::contains(Symbol s) const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [s](const Letter& l) { return l.symbol == s; });
}

Word reduce(std::span<const Letter> raw) { return Word(raw); }

Word multiply(const Word& u, const Word& v) {
  // Only the junction can cancel.
  auto ul = u.letters();
  auto vl = v.letters();
  std::size_t k = 0;
  while (k < ul.size() && k < vl.size() && ul[ul.size() - 1 - k].cancels(vl[k])) ++k;
  std::vector<Letter> out;
  out.reserve(ul.size() + vl.size() - 2 * k);
  out.insert(out.end(), ul.begin(), ul.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), vl.begin() + static_cast<std::ptrdiff_t>(k), vl.end());
  return Word(Word::Trusted{}, std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  auto ls = u.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(it->inverted());
  return Word(Word::Trusted{}, std::move(out));
}

Word conjugate(const Word& w, const Word& y) {
  return std::move(WordBuilder(y).append(w).append_inverse(y)).build();
}

Word power(const Word& w, int exponent) {
  WordBuilder b;
  for (int i = 0; i < std::abs(exponent); ++i) {
    if (exponent > 0) {
      b.append(w);
    } else {
      b.append_inverse(w);
    }
  }
  return std::move(b).build();
}

std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter& a = s[(i + k) % n];
    const Letter& b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::size_t CyclicWord::period() const {
  const std::size_t n = letters_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = letters_[i] == letters_[i - p];
    if (ok) return p;
  }
  return n;
}

CyclicNormalForm cyclic_normal_form(const Word& u) {
  auto ls = u.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  std::span<const Letter> core = ls.subspan(lo, hi - lo);
  const std::size_t r = least_rotation(core);

  std::vector<Letter> rotated;
  rotated.reserve(core.size());
  rotated.insert(rotated.end(), core.begin() + static_cast<std::ptrdiff_t>(r), core.end());
  rotated.insert(rotated.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r));

  // core = s t with rotation t s, so u = (w s) (t s) (w s)^-1.
  WordBuilder prefix;
  for (std::size_t i = 0; i < lo; ++i) prefix.append(ls[i]);
  for (std::size_t i = 0; i < r; ++i) prefix.append(core[i]);
  return {CyclicWord(std::move(rotated)), std::move(prefix).build()};
}

std::optional<Word> are_conjugate(const Word& u, const Word& v) {
  CyclicNormalForm cu = cyclic_normal_form(u);
  CyclicNormalForm cv = cyclic_normal_form(v);
  if (!(cu.core == cv.core)) return std::nullopt;
  Word y = multiply(cu.prefix, invert(cv.prefix));
  if (conjugate(v, y) != u) throw Error("internal: conjugacy witness failed re-verification");
  return y;
}

namespace {

void reject_markers(std::span<const Word> ws) {
  for (const Word& w : ws) {
    if (w.contains(Kind::Marker)) throw Error("marker symbols are not allowed in input words");
  }
}

}  // namespace

std::optional<Word> simultaneous_conjugator(std::span<const Word> us, std::span<const Word> vs) {
  if (us.size() != vs.size()) throw Error("simultaneous_conjugator: tuple length mismatch");
  if (us.empty()) throw Error("simultaneous_conjugator: empty tuples");
  reject_markers(us);
  reject_markers(vs);

  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (vs[i].empty() != us[i].empty()) return std::nullopt;
    if (!vs[i].empty()) live.push_back(i);
  }
  if (live.empty()) return Word{};

  // Every solution of u1 = y v1 y^-1 is y0 r^m, where r generates the
  // centralizer of v1.
  const std::size_t first = live.front();
  std::optional<Word> y0 = are_conjugate(us[first], vs[first]);
  if (!y0) return std::nullopt;

  CyclicNormalForm cv = cyclic_normal_form(vs[first]);
  Word root_core(cv.core.letters().first(cv.core.period()));
  Word root = conjugate(root_core, cv.prefix);
  Word root_inv = invert(root);

  std::optional<int> shift;
  for (std::size_t idx = 1; idx < live.size(); ++idx) {
    const std::size_t i = live[idx];
    const Word& v = vs[i];
    Word target = conjugate(us[i], invert(*y0));  // need r^m v r^-m == target
    if (multiply(root, v) == multiply(v, root)) {
      if (v != target) return std::nullopt;
      continue;
    }
    // v does not commute with r, so at most one m works, and the length of
    // r^m v r^-m grows linearly in |m| once |m| exceeds this bound.
    const int bound = static_cast<int>(target.size() + v.size() + root.size()) + 2;
    std::optional<int> found;
    Word fwd = v, bwd = v;
    for (int m = 0; m <= bound && !found; ++m) {
      if (fwd == target) {
        found = m;
      } else if (bwd == target) {
        found = -m;
      }
      fwd = conjugate(fwd, root);
      bwd = conjugate(bwd, root_inv);
    }
    if (!found) return std::nullopt;
    if (shift && *shift != *found) return std::nullopt;
    shift = found;
  }

  Word y = multiply(*y0, power(root, shift.value_or(0)));
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (conjugate(vs[i], y) != us[i]) return std::nullopt;
  }
  return y;
}

Word substitute(const Word& u, const std::map<Symbol, Word>& images) {
  WordBuilder b;
  for (const Letter& l : u.letters()) {
    auto it = images.find(l.symbol);
    if (it == images.end()) throw Error("substitute: no image for symbol " + to_string(l.symbol));
    if (l.inverse) {
      b.append_inverse(it->second);
    } else {
      b.append(it->second);
    }
  }
  return std::move(b).build();
}

}  // namespace mcg
