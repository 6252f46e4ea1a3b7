#ifndef LND_TESTS_SUPPORT_HPP
#define LND_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lnd/lnd.hpp"

namespace lnd::testing {

/// Small random objects for property tests. Draws go through explicit
/// modular reduction so sequences do not depend on the standard library's
/// distribution implementations.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(std::int64_t num_bound, std::int64_t den_bound) {
    return Rational(Integer(static_cast<long>(range(-num_bound, num_bound))),
                    Integer(static_cast<long>(range(1, den_bound))));
  }

  Rational nonzero_rational(std::int64_t num_bound, std::int64_t den_bound) {
    for (;;) {
      Rational r = rational(num_bound, den_bound);
      if (!r.is_zero()) return r;
    }
  }

  Monomial monomial(const Ring& ring, unsigned max_degree) {
    Monomial m(ring.size(), 0);
    const auto deg = static_cast<unsigned>(range(0, max_degree));
    for (unsigned k = 0; k < deg; ++k) ++m[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(ring.size()) - 1))];
    return m;
  }

  Polynomial polynomial(const Ring& ring, unsigned max_terms, unsigned max_degree, std::int64_t coeff_bound = 9,
                        std::int64_t den_bound = 3) {
    Polynomial f(ring);
    const auto n = range(0, max_terms);
    for (std::int64_t i = 0; i < n; ++i) f.add_term(monomial(ring, max_degree), rational(coeff_bound, den_bound));
    return f;
  }

  Point point(const Ring& ring, std::int64_t bound = 20, std::int64_t den_bound = 5) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < ring.size(); ++i) c.push_back(rational(bound, den_bound));
    return Point(ring, std::move(c));
  }

 private:
  std::mt19937_64 eng_;
};

/// All monomials of total degree <= d in n variables, in a fixed order.
inline std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Kernel of X_i -> images[i] restricted to total degree <= d, found by
/// Gaussian elimination on coefficient vectors. Returns a basis.
inline std::vector<Polynomial> brute_force_relations(const std::vector<Polynomial>& images, const Ring& presentation,
                                                     unsigned d) {
  const auto monos = monomials_up_to(images.size(), d);
  std::vector<Polynomial> values;
  for (const auto& m : monos) {
    Polynomial v = Polynomial::constant(images.front().ring(), Rational(1));
    for (std::size_t i = 0; i < m.size(); ++i) v = v * pow(images[i], m[i]);
    values.push_back(v);
  }
  // Rows indexed by target monomials, columns by presentation monomials.
  std::map<Monomial, std::size_t, GrlexGreater> row_of;
  for (const auto& v : values)
    for (const auto& [m, c] : v.terms()) row_of.emplace(m, row_of.size());
  const std::size_t rows = row_of.size(), cols = monos.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [m, c] : values[j].terms()) a[row_of.at(m)][j] = c;

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && a[p][j].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][j];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][j].is_zero()) continue;
      const Rational f = a[i][j];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_cols.push_back(j);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto j : pivot_cols) is_pivot[j] = true;
  std::vector<Polynomial> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Polynomial rel = Polynomial::term(presentation, monos[free], Rational(1));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      if (!a[i][free].is_zero()) rel.add_term(monos[pivot_cols[i]], -a[i][free]);
    basis.push_back(rel);
  }
  return basis;
}

/// Compares relation_ideal(images) with the brute-force kernel in degree
/// <= d: every returned generator must vanish on the images, every
/// brute-force relation must lie in the ideal, and the ideal's degree <= d
/// part must have the brute-force dimension. Empty string on agreement.
inline std::string relation_ideal_disagreement(const std::vector<Polynomial>& images, unsigned d) {
  const auto rel = relation_ideal(images);
  for (const auto& p : rel.generators)
    if (!evaluate_presentation(p, images).is_zero()) return "generator " + print_canonical(p) + " does not vanish";
  const auto brute = brute_force_relations(images, rel.presentation, d);
  for (const auto& b : brute)
    if (rel.generators.empty() || !ideal_membership(b, rel.generators))
      return "relation " + print_canonical(b) + " missing from the ideal";
  const auto monos = monomials_up_to(images.size(), d);
  std::size_t standard = monos.size();
  if (!rel.generators.empty()) {
    const auto gb = buchberger(rel.generators, MonomialOrder::grlex());
    standard = 0;
    for (const auto& mono : monos) {
      bool divisible = false;
      for (const auto& g : gb.generators()) divisible = divisible || divides(leading_monomial(g, gb.order()), mono);
      if (!divisible) ++standard;
    }
  }
  if (brute.size() != monos.size() - standard)
    return "degree <= " + std::to_string(d) + " dimension " + std::to_string(monos.size() - standard) +
           ", brute force " + std::to_string(brute.size());
  return {};
}

/// Random images for relation_ideal cross-checks: 2 or 3 polynomials of
/// degree <= 3 in two variables.
inline std::vector<Polynomial> random_images(Gen& g, const Ring& target) {
  std::vector<Polynomial> images;
  for (auto k = g.range(2, 3); k > 0; --k) images.push_back(g.polynomial(target, 3, 3, 4, 2));
  return images;
}

/// Random polynomial with the round-trip bounds: <= 8 terms, degree <= 10,
/// |numerator|, denominator <= 1000.
inline Polynomial round_trip_polynomial(Gen& g, const Ring& ring) {
  Polynomial f(ring);
  for (auto n = g.range(0, 8); n > 0; --n)
    f.add_term(g.monomial(ring, 10), Rational(Integer(static_cast<long>(g.range(-1000, 1000))),
                                              Integer(static_cast<long>(g.range(1, 1000)))));
  return f;
}

inline std::vector<Polynomial> parse_all(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

}  // namespace lnd::testing

#endif  // LND_TESTS_SUPPORT_HPP
