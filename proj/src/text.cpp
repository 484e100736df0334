#include "mcgaction/text.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace mcg {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back({s.substr(start, i - start), start});
  }
  return out;
}

// Parses a decimal integer filling the whole view.
bool to_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

// Splits "head^exp" and parses the exponent (default 1).
std::string_view strip_exponent(const Token& t, int& exponent) {
  exponent = 1;
  const auto caret = t.text.find('^');
  if (caret == std::string_view::npos) return t.text;
  if (!to_int(t.text.substr(caret + 1), exponent)) {
    throw ParseError("malformed exponent in '" + std::string(t.text) + "'", t.column + caret);
  }
  return t.text.substr(0, caret);
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Word parse_pi1_word(std::string_view text, const Signature& sig) {
  sig.validate();
  WordBuilder b;
  for (const Token& t : split(text)) {
    int exponent = 1;
    std::string_view head = strip_exponent(t, exponent);
    if (head == "1") continue;
    if (head.size() < 2 || (head[0] != 'a' && head[0] != 'b' && head[0] != 'g') ||
        !is_digits(head.substr(1))) {
      throw ParseError("unknown token '" + std::string(t.text) + "'", t.column);
    }
    int index = 0;
    if (!to_int(head.substr(1), index) || index < 1 || index > 0xFFFF) {
      throw ParseError("bad index in '" + std::string(t.text) + "'", t.column);
    }
    const Kind kind = head[0] == 'a' ? Kind::Alpha : head[0] == 'b' ? Kind::Beta : Kind::Gamma;
    const Symbol s{kind, static_cast<std::uint16_t>(index)};
    if (!in_alphabet(sig, s)) {
      throw ParseError("'" + std::string(head) + "' is out of range for " + to_string(sig), t.column);
    }
    b.append(Word::of(s, exponent));
  }
  return std::move(b).build();
}

MCGWord parse_mcg_word(std::string_view text, const Signature& sig) {
  sig.validate();
  std::vector<Factor> fs;
  for (const Token& t : split(text)) {
    int exponent = 1;
    std::string_view head = strip_exponent(t, exponent);
    if (head == "1") continue;
    auto bad = [&] { return ParseError("unknown token '" + std::string(t.text) + "'", t.column); };
    auto num = [&](std::string_view s) {
      int v = 0;
      if (!is_digits(s) || !to_int(s, v)) throw bad();
      return v;
    };

    Generator gen;
    if (head == "tb") {
      gen = {GenKind::B, 0};
    } else if (head.starts_with("tb")) {
      gen = {GenKind::Bi, num(head.substr(2))};
    } else if (head.starts_with("ta")) {
      const int i = num(head.substr(2));
      if (i == 1) {
        gen = {GenKind::A1, 0};
      } else if (i == 2 && sig.g >= 2) {
        gen = {GenKind::A2, 0};
      } else {
        gen = {GenKind::Ai, i};
      }
    } else if (head == "tc1_2") {
      gen = {GenKind::C12, 0};
    } else if (head.starts_with("tc")) {
      const auto us = head.find('_');
      if (us == std::string_view::npos) throw bad();
      const int p = num(head.substr(2, us - 2));
      const int q = num(head.substr(us + 1));
      if (p < 2 || p % 2 != 0 || q != p + 2) throw bad();
      gen = {GenKind::C2i, p / 2};
    } else if (head.starts_with("td")) {
      gen = {GenKind::Di, num(head.substr(2))};
    } else if (head.starts_with("w")) {
      gen = {GenKind::Omega, num(head.substr(1))};
    } else {
      throw bad();
    }
    if (!in_catalog(sig, gen)) {
      throw ParseError("'" + std::string(head) + "' is not a generator for " + to_string(sig),
                       t.column);
    }
    fs.push_back({gen, exponent});
  }
  return MCGWord(std::move(fs));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  auto ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const int run = static_cast<int>(j - i);
    if (!out.empty()) out += ' ';
    out += to_string(ls[i].symbol);
    const int e = ls[i].inverse ? -run : run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace mcg
