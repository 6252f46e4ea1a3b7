#ifndef LND_RATIONAL_HPP
#define LND_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "lnd/errors.hpp"

namespace lnd {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}               // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(static_cast<long>(v)) {}   // NOLINT
  Rational(unsigned long v) : q_(v) {}      // NOLINT
  Rational(const Integer& v) : q_(v) {}     // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "n" or "n/d" (decimal, optional leading '-').
  static Rational from_string(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(Integer(std::string(text), 10));
      return Rational(Integer(std::string(text.substr(0, slash)), 10),
                      Integer(std::string(text.substr(slash + 1)), 10));
    } catch (const std::invalid_argument&) {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
  }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& gmp() const noexcept { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational pow(unsigned long n) const {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), n);
    return Rational(num, den);
  }

  std::string to_string() const { return q_.get_str(10); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_{0};
};

inline Rational factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace lnd

#endif  // LND_RATIONAL_HPP
