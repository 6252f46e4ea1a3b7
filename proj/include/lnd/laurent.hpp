#ifndef LND_LAURENT_HPP
#define LND_LAURENT_HPP

#include <string>

#include "lnd/polynomial.hpp"

namespace lnd {

/// Element numerator / var^power of the localization k[V]_var.
///
/// Always normalized: either power == 0 or var does not divide every term of
/// the numerator. Only one inverted variable is supported.
class LaurentElement {
 public:
  LaurentElement() = default;

  LaurentElement(Polynomial numerator, std::size_t var, Exponent power)
      : numerator_(std::move(numerator)), var_(var), power_(power) {
    if (var_ >= numerator_.ring().size()) throw InvalidArgument("denominator variable out of range");
    normalize();
  }

  LaurentElement(Polynomial numerator, std::string_view var, Exponent power)
      : LaurentElement(numerator, numerator.ring().index_of(var), power) {}

  /// Embeds a polynomial (power 0).
  static LaurentElement from_polynomial(Polynomial p, std::size_t var) {
    return LaurentElement(std::move(p), var, 0);
  }

  const Polynomial& numerator() const noexcept { return numerator_; }
  const Ring& ring() const noexcept { return numerator_.ring(); }
  std::size_t denom_var() const noexcept { return var_; }
  const std::string& denom_name() const { return numerator_.ring().name(var_); }
  Exponent denom_power() const noexcept { return power_; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool is_polynomial() const noexcept { return power_ == 0; }

  friend LaurentElement operator+(const LaurentElement& a, const LaurentElement& b) {
    require_same_ring(a.ring(), b.ring());
    const std::size_t var = shared_var(a, b);
    const Exponent p = std::max(a.power_, b.power_);
    return LaurentElement(a.scaled_up(p) + b.scaled_up(p), var, p);
  }

  friend LaurentElement operator-(const LaurentElement& a) {
    return LaurentElement(-a.numerator_, a.var_, a.power_);
  }

  friend LaurentElement operator-(const LaurentElement& a, const LaurentElement& b) { return a + (-b); }

  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
    require_same_ring(a.ring(), b.ring());
    const std::size_t var = shared_var(a, b);
    return LaurentElement(a.numerator_ * b.numerator_, var, a.power_ + b.power_);
  }

  friend LaurentElement operator*(const LaurentElement& a, const Rational& c) {
    return LaurentElement(a.numerator_ * c, a.var_, a.power_);
  }

  friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
    if (a.power_ != b.power_ || !(a.numerator_ == b.numerator_)) return false;
    return a.power_ == 0 || a.var_ == b.var_;
  }

  std::string to_string() const {
    if (power_ == 0) return lnd::to_string(numerator_);
    std::string den = denom_name();
    if (power_ > 1) den += "^" + std::to_string(power_);
    return "(" + lnd::to_string(numerator_) + ")/" + den;
  }

 private:
  void normalize() {
    if (numerator_.is_zero()) {
      power_ = 0;
      return;
    }
    const Exponent k = std::min(power_, common_power(numerator_, var_));
    if (k > 0) {
      numerator_ = exact_divide_by_power(numerator_, var_, k);
      power_ -= k;
    }
  }

  // numerator * var^(p - power), i.e. the numerator over var^p.
  Polynomial scaled_up(Exponent p) const {
    if (p == power_) return numerator_;
    Monomial m(ring().size(), 0);
    m[var_] = p - power_;
    return numerator_ * Polynomial::term(ring(), m, Rational(1));
  }

  static std::size_t shared_var(const LaurentElement& a, const LaurentElement& b) {
    if (a.var_ == b.var_) return a.var_;
    if (a.power_ == 0) return b.var_;
    if (b.power_ == 0) return a.var_;
    throw MixedDenominators();
  }

  Polynomial numerator_;
  std::size_t var_ = 0;
  Exponent power_ = 0;
};

/// Builds numer / var^power in normalized form.
inline LaurentElement laurent_normalize(const Polynomial& numer, std::string_view var, Exponent power) {
  return LaurentElement(numer, var, power);
}

}  // namespace lnd

#endif  // LND_LAURENT_HPP
