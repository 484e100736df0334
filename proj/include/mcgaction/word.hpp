#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generator kinds, declared in the total order used for canonical rotations.
enum class Kind : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2, Marker = 3 };

struct Symbol {
  Kind kind = Kind::Alpha;
  std::uint16_t index = 1;  // 1-based

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

inline constexpr Symbol alpha(int i) { return {Kind::Alpha, static_cast<std::uint16_t>(i)}; }
inline constexpr Symbol beta(int i) { return {Kind::Beta, static_cast<std::uint16_t>(i)}; }
inline constexpr Symbol gamma(int i) { return {Kind::Gamma, static_cast<std::uint16_t>(i)}; }
inline constexpr Symbol marker(int i) { return {Kind::Marker, static_cast<std::uint16_t>(i)}; }

struct Letter {
  Symbol symbol;
  bool inverse = false;

  constexpr Letter inverted() const { return {symbol, !inverse}; }
  constexpr bool cancels(const Letter& o) const {
    return symbol == o.symbol && inverse != o.inverse;
  }

  // Symbol first; positive before negative.
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

std::string to_string(Symbol s);
std::string to_string(Letter l);

// A freely reduced word. Every constructor reduces, so instances always
// satisfy the invariant; there are no mutating members.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  static Word of(Symbol s, int exponent = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  bool contains(Kind k) const;
  bool contains(Symbol s) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  struct Trusted {};
  Word(Trusted, std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  friend Word multiply(const Word&, const Word&);
  friend Word invert(const Word&);
  friend class WordBuilder;

  std::vector<Letter> letters_;
};

// Incremental stack-based reducer; append() keeps the buffer reduced.
class WordBuilder {
 public:
  WordBuilder() = default;
  explicit WordBuilder(const Word& start) : buf_(start.letters_) {}

  WordBuilder& append(Letter l);
  WordBuilder& append(const Word& w);
  WordBuilder& append_inverse(const Word& w);
  Word build() && { return Word(Word::Trusted{}, std::move(buf_)); }

 private:
  std::vector<Letter> buf_;
};

Word reduce(std::span<const Letter> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
// x^y = y x y^-1
Word conjugate(const Word& w, const Word& y);
Word power(const Word& w, int exponent);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

struct CyclicNormalForm;

// Cyclically reduced word in least rotation under the letter order.
class CyclicWord {
 public:
  CyclicWord() = default;
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Word as_word() const { return Word(letters_); }

  // Length of the primitive period: letters == root^(size/period).
  std::size_t period() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(std::vector<Letter> l) : letters_(std::move(l)) {}
  friend CyclicNormalForm cyclic_normal_form(const Word& u);
  std::vector<Letter> letters_;
};

struct CyclicNormalForm {
  CyclicWord core;
  Word prefix;  // u == conjugate(core.as_word(), prefix)
};

CyclicNormalForm cyclic_normal_form(const Word& u);

// Some y with conjugate(v, y) == u, or nullopt when u and v are not conjugate.
std::optional<Word> are_conjugate(const Word& u, const Word& v);

// Common y with conjugate(vs[i], y) == us[i] for all i. Throws on length
// mismatch, empty tuples, or Marker letters in the input.
std::optional<Word> simultaneous_conjugator(std::span<const Word> us, std::span<const Word> vs);

// Homomorphic image of u; throws if a symbol of u has no image.
Word substitute(const Word& u, const std::map<Symbol, Word>& images);

// Index of the least rotation of a cyclic sequence (two-pointer scan).
std::size_t least_rotation(std::span<const Letter> s);

}  // namespace mcg
