#ifndef LND_POLYNOMIAL_HPP
#define LND_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnd/errors.hpp"
#include "lnd/rational.hpp"
#include "lnd/ring.hpp"

namespace lnd {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered graded-lexicographically, largest first;
/// zero coefficients are never stored, so two polynomials over the same ring
/// are equal exactly when their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Rational& c) {
    Polynomial p(ring);
    p.add_term(Monomial(ring.size(), 0), c);
    return p;
  }

  static Polynomial variable(const Ring& ring, std::size_t index) {
    if (index >= ring.size()) throw InvalidArgument("variable index out of range");
    Monomial m(ring.size(), 0);
    m[index] = 1;
    Polynomial p(ring);
    p.add_term(m, Rational(1));
    return p;
  }

  static Polynomial variable(const Ring& ring, std::string_view name) {
    return variable(ring, ring.index_of(name));
  }

  static Polynomial term(const Ring& ring, Monomial m, const Rational& c) {
    if (m.size() != ring.size()) throw InvalidArgument("monomial length does not match ring");
    for (auto e : m)
      if (e > ring.exponent_cap()) throw ExponentOverflow(ring.exponent_cap());
    Polynomial p(ring);
    p.add_term(std::move(m), c);
    return p;
  }

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && lnd::total_degree(terms_.begin()->first) == 0);
  }

  Rational constant_term() const { return coefficient(Monomial(ring_.size(), 0)); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest term under graded-lex; requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading_term() const {
    if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
    return *terms_.begin();
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, lnd::total_degree(m));
    return d;
  }

  Exponent degree_in(std::size_t var) const {
    Exponent d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
    return d;
  }

  /// True when some term has a positive exponent of `var`.
  bool involves(std::size_t var) const {
    for (const auto& [m, c] : terms_)
      if (m.at(var) != 0) return true;
    return false;
  }

  /// Accumulates c*m into the polynomial, dropping the term if it cancels.
  void add_term(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    const auto cap = a.ring_.exponent_cap();
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(multiply(ma, mb, cap), ca * cb);
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  TermMap terms_;
};

inline Polynomial pow(const Polynomial& base, unsigned long n) {
  Polynomial result = Polynomial::constant(base.ring(), Rational(1));
  Polynomial b = base;
  while (n) {
    if (n & 1u) result *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return result;
}

// --- printing ------------------------------------------------------------

/// Writes a monomial as "x^2*t"; `first` (if set) is printed before the
/// remaining variables, which follow ring order.
inline std::string format_monomial(const Ring& ring, const Monomial& m,
                                   std::optional<std::size_t> first = std::nullopt) {
  std::string out;
  auto emit = [&](std::size_t i) {
    if (m[i] == 0) return;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  };
  if (first) emit(*first);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!first || i != *first) emit(i);
  return out;
}

/// Appends one signed term to `out`; the first term gets a bare leading '-'.
inline void append_term(std::string& out, const Ring& ring, const Monomial& m, const Rational& c,
                        std::optional<std::size_t> first = std::nullopt) {
  const bool negative = c.sign() < 0;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational mag = c.abs();
  const std::string mono = format_monomial(ring, m, first);
  if (mono.empty()) {
    out += mag.to_string();
  } else if (mag.is_one()) {
    out += mono;
  } else {
    out += mag.to_string() + '*' + mono;
  }
}

/// Canonical text: terms in graded-lex descending order, explicit '*'.
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) append_term(out, f.ring(), m, c);
  return out;
}

inline std::string format_term(const Ring& ring, const Monomial& m, const Rational& c) {
  std::string out;
  append_term(out, ring, m, c);
  return out;
}

// --- points and ring maps -------------------------------------------------

/// A point of affine space with one rational coordinate per ring variable.
struct Point {
  Ring ring;
  std::vector<Rational> coordinates;

  Point() = default;
  Point(Ring r, std::vector<Rational> coords) : ring(std::move(r)), coordinates(std::move(coords)) {
    if (coordinates.size() != ring.size())
      throw InvalidArgument("point has " + std::to_string(coordinates.size()) +
                            " coordinates, ring has " + std::to_string(ring.size()) + " variables");
  }

  static Point origin(const Ring& r) { return Point(r, std::vector<Rational>(r.size(), Rational(0))); }

  const Rational& operator[](std::size_t i) const { return coordinates.at(i); }

  friend bool operator==(const Point& a, const Point& b) {
    return a.ring == b.ring && a.coordinates == b.coordinates;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coordinates.size(); ++i) {
      if (i) out += ", ";
      out += coordinates[i].to_string();
    }
    return out + ")";
  }
};

/// Algebra homomorphism k[source] -> k[target] fixed by the images of the
/// source variables.
class RingMap {
 public:
  RingMap() = default;
  RingMap(Ring source, Ring target, std::vector<Polynomial> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size())
      throw InvalidArgument("ring map needs one image per source variable");
    for (const auto& img : images_) require_same_ring(img.ring(), target_);
  }

  static RingMap identity(const Ring& ring) {
    std::vector<Polynomial> imgs;
    for (std::size_t i = 0; i < ring.size(); ++i) imgs.push_back(Polynomial::variable(ring, i));
    return RingMap(ring, ring, std::move(imgs));
  }

  const Ring& source() const noexcept { return source_; }
  const Ring& target() const noexcept { return target_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }

 private:
  Ring source_;
  Ring target_;
  std::vector<Polynomial> images_;
};

inline Rational evaluate(const Polynomial& f, const Point& p) {
  require_same_ring(f.ring(), p.ring);
  const std::size_t n = p.ring.size();
  // powers[i][e] = p_i^e, filled lazily
  std::vector<std::vector<Rational>> powers(n, std::vector<Rational>{Rational(1)});
  Rational total(0);
  for (const auto& [m, c] : f.terms()) {
    Rational value = c;
    for (std::size_t i = 0; i < n && !value.is_zero(); ++i) {
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * p.coordinates[i]);
      value *= pw[m[i]];
    }
    total += value;
  }
  return total;
}

/// Image of f under the homomorphism determined by `map`.
inline Polynomial substitute(const Polynomial& f, const RingMap& map) {
  require_same_ring(f.ring(), map.source());
  const std::size_t n = map.source().size();
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i)
    powers[i].push_back(Polynomial::constant(map.target(), Rational(1)));
  Polynomial result(map.target());
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(map.target(), c);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * map.image(i));
      term *= pw[m[i]];
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

/// Substitutes a single variable of f's ring by `value` (same ring).
inline Polynomial substitute_variable(const Polynomial& f, std::size_t var, const Polynomial& value) {
  require_same_ring(f.ring(), value.ring());
  std::vector<Polynomial> imgs;
  for (std::size_t i = 0; i < f.ring().size(); ++i)
    imgs.push_back(i == var ? value : Polynomial::variable(f.ring(), i));
  return substitute(f, RingMap(f.ring(), f.ring(), std::move(imgs)));
}

/// Moves f into `target`, sending source variable i to target variable
/// `index_map[i]`. Pure relabelling, no arithmetic.
inline Polynomial relabel(const Polynomial& f, const Ring& target,
                          const std::vector<std::size_t>& index_map) {
  if (index_map.size() != f.ring().size()) throw InvalidArgument("relabel map has wrong length");
  Polynomial r(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial t(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (index_map[i] >= target.size()) throw InvalidArgument("relabel target index out of range");
      t[index_map[i]] = m[i];
    }
    r.add_term(std::move(t), c);
  }
  return r;
}

/// Moves f into a ring that contains all of f's variables, matching by name.
inline Polynomial embed_by_name(const Polynomial& f, const Ring& target) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < f.ring().size(); ++i) {
    if (!f.involves(i)) {
      idx.push_back(target.find(f.ring().name(i)).value_or(0));
      continue;
    }
    idx.push_back(target.index_of(f.ring().name(i)));
  }
  return relabel(f, target, idx);
}

inline Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring().size()) throw InvalidArgument("variable index out of range");
  Polynomial r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(std::move(d), c * Rational(static_cast<long>(m[var])));
  }
  return r;
}

inline Polynomial partial_derivative(const Polynomial& f, std::string_view var) {
  return partial_derivative(f, f.ring().index_of(var));
}

// --- grading ---------------------------------------------------------------

/// Range of weighted degrees over the terms of a polynomial; a single value
/// when the polynomial is homogeneous.
struct DegreeSpread {
  std::int64_t min = 0;
  std::int64_t max = 0;
  bool homogeneous() const noexcept { return min == max; }
  friend bool operator==(const DegreeSpread&, const DegreeSpread&) = default;
};

inline std::int64_t weighted_degree(const Ring& ring, const Monomial& m) {
  if (!ring.graded()) throw NoGrading();
  const auto& w = *ring.weights();
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += w[i] * static_cast<std::int64_t>(m[i]);
  return d;
}

/// Weighted degree of f. Returns nullopt for the zero polynomial, which is
/// homogeneous of every degree.
inline std::optional<DegreeSpread> weighted_degree(const Polynomial& f) {
  if (!f.ring().graded()) throw NoGrading();
  if (f.is_zero()) return std::nullopt;
  DegreeSpread s{INT64_MAX, INT64_MIN};
  for (const auto& [m, c] : f.terms()) {
    const auto d = weighted_degree(f.ring(), m);
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
  }
  return s;
}

// --- division ---------------------------------------------------------------

/// f / var^k, exact. Throws NotDivisible naming the first blocking term.
inline Polynomial exact_divide_by_power(const Polynomial& f, std::size_t var, Exponent k) {
  if (var >= f.ring().size()) throw InvalidArgument("variable index out of range");
  Polynomial r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] < k) throw NotDivisible(format_term(f.ring(), m, c));
    Monomial q = m;
    q[var] -= k;
    r.add_term(std::move(q), c);
  }
  return r;
}

inline Polynomial exact_divide_by_power(const Polynomial& f, std::string_view var, Exponent k) {
  return exact_divide_by_power(f, f.ring().index_of(var), k);
}

/// Largest k such that var^k divides every term (0 for the zero polynomial).
inline Exponent common_power(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) return 0;
  Exponent k = UINT32_MAX;
  for (const auto& [m, c] : f.terms()) k = std::min(k, m[var]);
  return k;
}

/// Scales f to an integer polynomial with coprime coefficients and a
/// positive leading coefficient.
inline Polynomial primitive(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.gmp().get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.gmp().get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (f.leading_term().second.sign() < 0) scale = -scale;
  return f * scale;
}

/// Divides by the leading coefficient.
inline Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f * (Rational(1) / f.leading_term().second);
}

/// Total order used to sort polynomials canonically: term by term, larger
/// monomials first, then coefficients.
inline bool canonical_less(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (int c = grlex_compare(ia->first, ib->first); c != 0) return c < 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace lnd

#endif  // LND_POLYNOMIAL_HPP
