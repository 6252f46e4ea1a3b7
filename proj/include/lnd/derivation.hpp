#ifndef LND_DERIVATION_HPP
#define LND_DERIVATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

inline constexpr unsigned kDefaultNilpotencyCap = 64;

/// A k-linear derivation of a polynomial ring, determined by its value on
/// each variable and extended by linearity and the Leibniz rule.
class Derivation {
 public:
  Derivation() = default;

  Derivation(Ring ring, std::vector<Polynomial> images)
      : ring_(std::move(ring)), images_(std::move(images)) {
    if (images_.size() != ring_.size())
      throw InvalidArgument("derivation needs one image per variable");
    for (const auto& img : images_) require_same_ring(img.ring(), ring_);
  }

  static Derivation zero(const Ring& ring) {
    return Derivation(ring, std::vector<Polynomial>(ring.size(), Polynomial(ring)));
  }

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }

  /// sum over variables v of images[v] * df/dv
  Polynomial operator()(const Polynomial& f) const {
    require_same_ring(f.ring(), ring_);
    Polynomial r(ring_);
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (images_[i].is_zero() || !f.involves(i)) continue;
      r += images_[i] * partial_derivative(f, i);
    }
    return r;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (images_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      const bool compound = images_[i].num_terms() > 1;
      out += (compound ? "(" : "") + lnd::to_string(images_[i]) + (compound ? ")" : "") + "*d/d" +
             ring_.name(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  Ring ring_;
  std::vector<Polynomial> images_;
};

inline Polynomial apply(const Derivation& d, const Polynomial& f) { return d(f); }

inline Polynomial apply_iter(const Derivation& d, Polynomial f, unsigned k) {
  for (unsigned i = 0; i < k && !f.is_zero(); ++i) f = d(f);
  return f;
}

/// Smallest n with d^n(f) = 0, or nullopt when n would exceed `cap`.
inline std::optional<unsigned> nilpotency_index(const Derivation& d, Polynomial f,
                                                unsigned cap = kDefaultNilpotencyCap) {
  if (cap < 1) throw InvalidArgument("nilpotency cap must be at least 1");
  for (unsigned n = 0; n <= cap; ++n) {
    if (f.is_zero()) return n;
    if (n < cap) f = d(f);
  }
  return std::nullopt;
}

struct NilpotencyReport {
  bool nilpotent = false;
  bool cap_exhausted = false;
  /// Per-variable index; nullopt where the cap ran out.
  std::vector<std::optional<unsigned>> indices;
  explicit operator bool() const noexcept { return nilpotent; }
};

/// Checks only the ring variables. That suffices: for a derivation, nilpotent
/// generators force local nilpotency on the whole ring.
inline NilpotencyReport is_locally_nilpotent(const Derivation& d, unsigned cap = kDefaultNilpotencyCap) {
  NilpotencyReport r;
  r.nilpotent = true;
  for (std::size_t i = 0; i < d.ring().size(); ++i) {
    auto n = nilpotency_index(d, Polynomial::variable(d.ring(), i), cap);
    r.indices.push_back(n);
    if (!n) {
      r.nilpotent = false;
      r.cap_exhausted = true;
    }
  }
  return r;
}

/// Base ring with one extra parameter variable, placed first in variable
/// order so that printed terms read r^k*... .
struct ExtendedRing {
  Ring base;
  Ring ring;
  std::size_t param = 0;

  static ExtendedRing make(const Ring& base, const std::string& param_name) {
    if (base.find(param_name)) throw InvalidArgument("parameter '" + param_name + "' clashes with a ring variable");
    std::vector<std::string> vars{param_name};
    vars.insert(vars.end(), base.variables().begin(), base.variables().end());
    return ExtendedRing{base, Ring(std::move(vars), std::nullopt, base.exponent_cap()), 0};
  }

  Polynomial embed(const Polynomial& f) const {
    require_same_ring(f.ring(), base);
    std::vector<std::size_t> idx(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) idx[i] = i + 1;
    return relabel(f, ring, idx);
  }

  Polynomial parameter() const { return Polynomial::variable(ring, param); }
};

/// The exponential map: sum_k d^k(f)/k! * r^k, computed in base[r].
///
/// Sign convention: for a group element a, the action is
/// (-a).f = exponential(d, f, r) with r := a. Only this flow parameter is
/// exposed.
inline Polynomial exponential(const Derivation& d, const Polynomial& f, const ExtendedRing& ext,
                              unsigned cap = kDefaultNilpotencyCap) {
  require_same_ring(f.ring(), d.ring());
  require_same_ring(ext.base, d.ring());
  Polynomial result(ext.ring);
  Polynomial current = f;
  Polynomial rk = Polynomial::constant(ext.ring, Rational(1));
  const Polynomial r = ext.parameter();
  for (unsigned k = 0; !current.is_zero(); ++k) {
    if (k > cap) throw CapExceeded(static_cast<int>(cap));
    result += ext.embed(current) * rk * (Rational(1) / factorial(k));
    current = d(current);
    rk *= r;
  }
  return result;
}

inline Polynomial exponential(const Derivation& d, const Polynomial& f, const std::string& param,
                              unsigned cap = kDefaultNilpotencyCap) {
  return exponential(d, f, ExtendedRing::make(d.ring(), param), cap);
}

/// Flows p along the orbit: coordinate i is exponential(d, x_i) evaluated
/// at (r := a, p).
inline Point orbit_point(const Derivation& d, const Rational& a, const Point& p,
                         unsigned cap = kDefaultNilpotencyCap) {
  require_same_ring(p.ring, d.ring());
  // pick a parameter name not used by the ring
  std::string param = "r";
  while (d.ring().find(param)) param += "_";
  const ExtendedRing ext = ExtendedRing::make(d.ring(), param);
  std::vector<Rational> ext_coords{a};
  ext_coords.insert(ext_coords.end(), p.coordinates.begin(), p.coordinates.end());
  const Point at(ext.ring, std::move(ext_coords));
  std::vector<Rational> out;
  for (std::size_t i = 0; i < d.ring().size(); ++i)
    out.push_back(evaluate(exponential(d, Polynomial::variable(d.ring(), i), ext, cap), at));
  return Point(d.ring(), std::move(out));
}

inline bool is_invariant(const Derivation& d, const Polynomial& f) { return d(f).is_zero(); }

/// d_tgt(m(v)) == m(d_src(v)) for every source variable v; both sides are
/// derivations along m, so agreement on generators is enough.
inline bool intertwines(const RingMap& m, const Derivation& d_src, const Derivation& d_tgt) {
  require_same_ring(m.source(), d_src.ring());
  require_same_ring(m.target(), d_tgt.ring());
  for (std::size_t i = 0; i < m.source().size(); ++i)
    if (!(d_tgt(m.image(i)) == substitute(d_src.image(i), m))) return false;
  return true;
}

/// Whether [d/dvar, d] vanishes. The commutator of two derivations is a
/// derivation, so checking the ring variables suffices.
inline bool commutes_with_partial(const Derivation& d, std::size_t var) {
  if (var >= d.ring().size()) throw InvalidArgument("variable index out of range");
  for (std::size_t j = 0; j < d.ring().size(); ++j) {
    const Polynomial xj = Polynomial::variable(d.ring(), j);
    const Polynomial lhs = partial_derivative(d.image(j), var);
    const Polynomial rhs = d(partial_derivative(xj, var));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

inline bool commutes_with_partial(const Derivation& d, std::string_view var) {
  return commutes_with_partial(d, d.ring().index_of(var));
}

}  // namespace lnd

#endif  // LND_DERIVATION_HPP
