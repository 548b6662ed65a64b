#pragma once

// Element grammar and canonical printing.
//
//   element := ['+'|'-'] term (('+'|'-') term)*
//   term    := [integer '*'] factor ('*' factor)*
//   factor  := gen ['^' posint]
//   gen     := 'S(' i ')' | 'S(' i ',' j ')'      with 1 <= i < j <= n
//
// T-generators 'T(-i)' and 'T(i,j)' (i <= j) use the same grammar and
// parse to H-polynomials.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "anfan/hring.hpp"
#include "anfan/mring.hpp"

namespace anfan {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

namespace detail {

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char get() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_++];
  }
  void expect(char c) {
    std::size_t at = pos_;
    if (get() != c)
      throw ParseError(std::string("expected '") + c + "'", at);
  }
  long integer() {
    skip_ws();
    std::size_t at = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer", at);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return neg ? -v : v;
  }
  std::size_t position() const { return pos_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

inline Gen parse_s_gen(Lexer& lex, int n) {
  std::size_t at = lex.position();
  lex.expect('S');
  lex.expect('(');
  long i = lex.integer();
  if (i < 1 || i > n)
    throw ParseError("index " + std::to_string(i) + " outside [1," +
                         std::to_string(n) + "]",
                     at);
  if (lex.peek() == ',') {
    lex.get();
    long j = lex.integer();
    lex.expect(')');
    if (j < 1 || j > n)
      throw ParseError("index " + std::to_string(j) + " outside [1," +
                           std::to_string(n) + "]",
                       at);
    if (i == j)
      throw ParseError("S(" + std::to_string(i) + "," + std::to_string(i) +
                           ") is not a generator; use S(" + std::to_string(i) +
                           ")",
                       at);
    if (i > j) throw ParseError("expected i < j in S(i,j)", at);
    return gen_root(Root{static_cast<int>(i), static_cast<int>(j)});
  }
  lex.expect(')');
  return gen_simple(static_cast<int>(i));
}

inline TVar parse_t_gen(Lexer& lex, int n) {
  std::size_t at = lex.position();
  lex.expect('T');
  lex.expect('(');
  long i = lex.integer();
  if (i < 0 && -i >= 1 && -i <= n) {
    lex.expect(')');
    return TVar::negative(static_cast<int>(-i));
  }
  if (i < 1 || i > n) throw ParseError("index outside range", at);
  lex.expect(',');
  long j = lex.integer();
  lex.expect(')');
  if (j < i || j > n) throw ParseError("expected i <= j <= n in T(i,j)", at);
  return TVar::positive(Root{static_cast<int>(i), static_cast<int>(j)});
}

}  // namespace detail

/// Parse an S-expression into a ring element. Whitespace-insensitive;
/// '^' expands to repeated factors (no normalization is applied).
inline RingElt parse_element(const std::string& text, int n) {
  detail::Lexer lex(text);
  RingElt out;
  out.n = n;
  bool first = true;
  while (!lex.eof()) {
    Int sign = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.get();
      if (c == '-') sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", lex.position());
    }
    first = false;
    // term
    Int coeff = sign;
    Monomial mono;
    bool expect_factor = true;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      coeff *= Int(lex.integer());
      if (lex.peek() == '*') {
        lex.get();
      } else {
        expect_factor = false;  // bare integer term
      }
    }
    while (expect_factor) {
      Gen g = detail::parse_s_gen(lex, n);
      int power = 1;
      if (lex.peek() == '^') {
        lex.get();
        long p = lex.integer();
        if (p < 1) throw ParseError("exponent must be positive", lex.position());
        power = static_cast<int>(p);
      }
      for (int k = 0; k < power; ++k) mono.gens.push_back(g);
      if (lex.peek() == '*') {
        lex.get();
      } else {
        break;
      }
    }
    mono.normalize();
    out.add_term(mono, coeff);
  }
  if (first) throw ParseError("empty expression", 0);
  return out;
}

/// Same grammar with T-generators, parsed into an H-polynomial.
inline HPoly parse_t_element(const std::string& text, int n) {
  detail::Lexer lex(text);
  HPoly out;
  bool first = true;
  while (!lex.eof()) {
    Int sign = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.get();
      if (c == '-') sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", lex.position());
    }
    first = false;
    Int coeff = sign;
    HMono mono;
    bool expect_factor = true;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      coeff *= Int(lex.integer());
      if (lex.peek() == '*') {
        lex.get();
      } else {
        expect_factor = false;
      }
    }
    while (expect_factor) {
      TVar v = detail::parse_t_gen(lex, n);
      int power = 1;
      if (lex.peek() == '^') {
        lex.get();
        power = static_cast<int>(lex.integer());
      }
      for (int k = 0; k < power; ++k) mono.push_back(v);
      if (lex.peek() == '*') {
        lex.get();
      } else {
        break;
      }
    }
    out.add_term(std::move(mono), coeff);
  }
  if (first) throw ParseError("empty expression", 0);
  return out;
}

/// Canonical printing order: (degree, height, lexicographic generator
/// order); coefficients carry an explicit sign, 1 is omitted.
inline std::string print_element(const RingElt& e) {
  if (e.terms.empty()) return "0";
  std::vector<std::pair<Monomial, Int>> terms(e.terms.begin(), e.terms.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree())
      return a.first.degree() < b.first.degree();
    if (a.first.height() != b.first.height())
      return a.first.height() < b.first.height();
    return a.first < b.first;
  });
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [m, c] = terms[i];
    Int abs = c < 0 ? Int(-c) : c;
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (abs != 1 || m.gens.empty()) {
      s += abs.get_str();
      if (!m.gens.empty()) s += "*";
    }
    if (!m.gens.empty()) s += to_string(m);
  }
  return s;
}

}  // namespace anfan
