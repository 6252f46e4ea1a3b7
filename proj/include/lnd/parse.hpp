#ifndef LND_PARSE_HPP
#define LND_PARSE_HPP

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

namespace detail {

// Recursive-descent reader for
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | variable | '(' expr ')'
//   rational := int ('/' nat)?
class PolyReader {
 public:
  PolyReader(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void unexpected() const {
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
  }

  Polynomial expr() {
    skip_ws();
    const bool negate = accept('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      if (peek() == '-') throw NegativeExponent(pos_);
      const std::size_t at = pos_;
      const Integer n = digits();
      if (n > Integer(static_cast<unsigned long>(ring_.exponent_cap())))
        throw ParseError("exponent exceeds cap " + std::to_string(ring_.exponent_cap()), at);
      base = pow(base, n.get_ui());
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) unexpected();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        Integer den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
        return Polynomial::constant(ring_, Rational(num, den));
      }
      return Polynomial::constant(ring_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.find(name);
      if (!idx) throw ParseUnknownVariable(name, start);
      return Polynomial::variable(ring_, *idx);
    }
    unexpected();
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) unexpected();
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

}  // namespace detail

/// Parses a polynomial over `ring`. Errors carry the byte offset.
inline Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return detail::PolyReader(text, ring).parse();
}

/// Canonical printing; parse_polynomial(print_canonical(f), f.ring()) == f.
inline std::string print_canonical(const Polynomial& f) { return to_string(f); }

/// Prints f as a polynomial in the variable `param`: ascending powers of
/// param, param written first in every term. Still valid grammar.
inline std::string print_by_parameter(const Polynomial& f, std::size_t param) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [param](const auto& a, const auto& b) { return a.first[param] < b.first[param]; });
  std::string out;
  for (const auto& [m, c] : terms) append_term(out, f.ring(), m, c, param);
  return out;
}

/// "x,s,t" -> variable list; optional "1,3,3" weights.
inline Ring parse_ring(std::string_view vars, std::string_view weights = {}) {
  std::vector<std::string> names;
  for (auto& v : detail::split(vars, ','))
    if (!v.empty()) names.push_back(v);
  if (names.empty()) throw InvalidRing("ring needs at least one variable");
  if (detail::trim(weights).empty()) return Ring(std::move(names));
  std::vector<std::int64_t> w;
  for (auto& item : detail::split(weights, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidRing("malformed weight '" + item + "'");
    }
  }
  return Ring(std::move(names), std::move(w));
}

inline Rational parse_rational(std::string_view text) {
  const std::string t = detail::trim(text);
  std::string compact;
  for (char c : t)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw InvalidArgument("empty rational");
  std::size_t i = compact[0] == '-' ? 1 : 0;
  bool slash = false;
  for (std::size_t j = i; j < compact.size(); ++j) {
    if (compact[j] == '/' && !slash && j > i && j + 1 < compact.size()) {
      slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(compact[j])))
      throw InvalidArgument("malformed rational '" + t + "'");
  }
  if (i == compact.size()) throw InvalidArgument("malformed rational '" + t + "'");
  if (slash && compact.find_first_not_of('0', compact.find('/') + 1) == std::string::npos)
    throw InvalidArgument("zero denominator in '" + t + "'");
  return Rational::from_string(compact);
}

/// "1, 0, 1/2" -> point of `ring`.
inline Point parse_point(std::string_view text, const Ring& ring) {
  std::vector<Rational> coords;
  for (auto& item : detail::split(text, ',')) coords.push_back(parse_rational(item));
  return Point(ring, std::move(coords));
}

/// Splits on ';' and parses each piece; empty pieces are skipped.
inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> out;
  for (auto& item : detail::split(text, ';'))
    if (!item.empty()) out.push_back(parse_polynomial(item, ring));
  return out;
}

}  // namespace lnd

#endif  // LND_PARSE_HPP
