#ifndef LND_GROEBNER_HPP
#define LND_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

enum class OrderKind { Lex, GradedLex, GradedRevLex, BlockElimination };

/// Monomial order over the ring's variable order.
///
/// BlockElimination(k) compares the first k variables by graded reverse
/// lex and breaks ties with graded reverse lex on the remaining ones, so any
/// monomial involving the first block beats every monomial that does not.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedRevLex;
  std::size_t block_size = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grlex() { return {OrderKind::GradedLex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GradedRevLex, 0}; }
  static MonomialOrder block(std::size_t k) { return {OrderKind::BlockElimination, k}; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::Lex:
        return lex_range(a, b, 0, a.size());
      case OrderKind::GradedLex:
        return grlex_compare(a, b);
      case OrderKind::GradedRevLex:
        return grevlex_range(a, b, 0, a.size());
      case OrderKind::BlockElimination: {
        const std::size_t k = std::min(block_size, a.size());
        if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
        return grevlex_range(a, b, k, a.size());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string to_string() const {
    switch (kind) {
      case OrderKind::Lex: return "lex";
      case OrderKind::GradedLex: return "grlex";
      case OrderKind::GradedRevLex: return "grevlex";
      case OrderKind::BlockElimination: return "block:" + std::to_string(block_size);
    }
    return "?";
  }

  static MonomialOrder from_string(std::string_view s) {
    if (s == "lex") return lex();
    if (s == "grlex") return grlex();
    if (s == "grevlex") return grevlex();
    if (s.rfind("block:", 0) == 0) {
      const std::string n(s.substr(6));
      try {
        std::size_t used = 0;
        const auto k = std::stoul(n, &used);
        if (used == n.size()) return block(k);
      } catch (const std::exception&) {
      }
    }
    throw InvalidArgument("unknown monomial order '" + std::string(s) + "'");
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
};

namespace gb_detail {

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Polynomial as a term vector sorted by the engine order, largest first.
using Terms = std::vector<Term>;

inline Terms to_terms(const Polynomial& f, const MonomialOrder& order) {
  Terms t;
  t.reserve(f.num_terms());
  for (const auto& [m, c] : f.terms()) t.push_back({m, c});
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return t;
}

inline Polynomial from_terms(const Terms& t, const Ring& ring) {
  Polynomial p(ring);
  for (const auto& term : t) p.add_term(term.mono, term.coeff);
  return p;
}

inline void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff.is_one()) return;
  const Rational inv = Rational(1) / t.front().coeff;
  for (auto& term : t) term.coeff *= inv;
}

/// a - c * shift * b, merged in order. `skip_a` leading terms of a are
/// dropped first (used to discard a term known to cancel).
inline Terms sub_scaled(const Terms& a, std::size_t skip_a, const Rational& c, const Monomial& shift,
                        const Terms& b, std::size_t skip_b, const MonomialOrder& order, unsigned long cap) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = skip_a, j = skip_b;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = multiply(b[j].mono, shift, cap);
    if (i == a.size()) {
      out.push_back({std::move(mb), -(c * b[j].coeff)});
      ++j;
      continue;
    }
    const int cmp = order.compare(a[i].mono, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(mb), -(c * b[j].coeff)});
      ++j;
    } else {
      Rational v = a[i].coeff - c * b[j].coeff;
      if (!v.is_zero()) out.push_back({std::move(mb), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Full reduction of f modulo monic basis `g`.
inline Terms reduce(Terms f, const std::vector<Terms>& g, const MonomialOrder& order, unsigned long cap) {
  Terms rem;
  std::size_t head = 0;
  while (head < f.size()) {
    const Term& lt = f[head];
    const Terms* divisor = nullptr;
    for (const auto& gi : g)
      if (divides(gi.front().mono, lt.mono)) {
        divisor = &gi;
        break;
      }
    if (!divisor) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    const Monomial shift = quotient(lt.mono, divisor->front().mono);
    const Rational c = lt.coeff;
    f = sub_scaled(f, head + 1, c, shift, *divisor, 1, order, cap);
    head = 0;
  }
  return rem;
}

inline Terms s_poly(const Terms& f, const Terms& g, const MonomialOrder& order, unsigned long cap) {
  const Monomial l = lcm(f.front().mono, g.front().mono);
  const Monomial sf = quotient(l, f.front().mono);
  const Monomial sg = quotient(l, g.front().mono);
  // (l/lm f) f / lc f - (l/lm g) g / lc g, with the cancelling heads dropped
  Terms fs;
  fs.reserve(f.size() - 1);
  const Rational inv_f = Rational(1) / f.front().coeff;
  for (std::size_t i = 1; i < f.size(); ++i) fs.push_back({multiply(f[i].mono, sf, cap), f[i].coeff * inv_f});
  return sub_scaled(fs, 0, Rational(1) / g.front().coeff, sg, g, 1, order, cap);
}

}  // namespace gb_detail

/// Largest monomial of f under `order`; f must be nonzero.
inline Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw InvalidArgument("leading monomial of zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || order.compare(m, *best) > 0) best = &m;
  return *best;
}

/// Reduced Groebner basis of an ideal: monic generators sorted by leading
/// monomial, ascending.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<gb_detail::Terms> basis)
      : ring_(std::move(ring)), order_(order), basis_(std::move(basis)) {
    for (const auto& b : basis_) generators_.push_back(gb_detail::from_terms(b, ring_));
  }

  const Ring& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero_ideal() const noexcept { return generators_.empty(); }

  Polynomial normal_form(const Polynomial& f) const {
    require_same_ring(f.ring(), ring_);
    auto r = gb_detail::reduce(gb_detail::to_terms(f, order_), basis_, order_, ring_.exponent_cap());
    return gb_detail::from_terms(r, ring_);
  }

  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  const std::vector<gb_detail::Terms>& raw() const noexcept { return basis_; }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<gb_detail::Terms> basis_;
  std::vector<Polynomial> generators_;
};

/// S-polynomial of f and g under `order`.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_same_ring(f.ring(), g.ring());
  auto s = gb_detail::s_poly(gb_detail::to_terms(f, order), gb_detail::to_terms(g, order), order,
                             f.ring().exponent_cap());
  return gb_detail::from_terms(s, f.ring());
}

struct BuchbergerOptions {
  /// Gebauer-Moller pair pruning on top of the coprime criterion.
  bool gebauer_moller = true;
};

/// Buchberger's algorithm with the normal selection strategy: the pair with
/// the smallest lcm degree first (weighted degree when the ring is graded),
/// ties broken by the monomial order on lcms, then by index. Deterministic
/// for fixed input and order. Returns the reduced basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                const BuchbergerOptions& opts = {}) {
  using gb_detail::Terms;
  if (gens.empty()) throw InvalidArgument("buchberger needs at least one generator");
  const Ring ring = gens.front().ring();
  for (const auto& g : gens) require_same_ring(g.ring(), ring);
  const auto cap = ring.exponent_cap();

  auto degree_of = [&](const Monomial& m) -> std::int64_t {
    return ring.graded() ? weighted_degree(ring, m) : static_cast<std::int64_t>(total_degree(m));
  };

  std::vector<Terms> basis;
  std::vector<bool> active;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Terms t = gb_detail::reduce(gb_detail::to_terms(g, order), basis, order, cap);
    if (t.empty()) continue;
    gb_detail::make_monic(t);
    basis.push_back(std::move(t));
    active.push_back(true);
  }

  struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
    std::int64_t degree;
  };
  std::vector<Pair> pairs;
  auto lm = [&](std::size_t k) -> const Monomial& { return basis[k].front().mono; };

  // Inserts pairs for the newly appended basis element k.
  auto update = [&](std::size_t k) {
    if (!opts.gebauer_moller) {
      for (std::size_t i = 0; i < k; ++i) {
        if (coprime(lm(i), lm(k))) continue;
        Monomial l = lcm(lm(i), lm(k));
        const auto d = degree_of(l);
        pairs.push_back({i, k, std::move(l), d});
      }
      return;
    }
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i)
      if (active[i]) {
        Monomial l = lcm(lm(i), lm(k));
        const auto d = degree_of(l);
        fresh.push_back({i, k, std::move(l), d});
      }
    // chain criterion among the new pairs: keep (i,k) unless another new pair's
    // lcm divides its lcm (equal lcms: keep the first, or a coprime one)
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      if (!coprime(lm(fresh[a].i), lm(k))) {
        for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
          if (a == b || !divides(fresh[b].lcm, fresh[a].lcm)) continue;
          if (fresh[b].lcm != fresh[a].lcm) drop = true;
          else if (b < a || coprime(lm(fresh[b].i), lm(k))) drop = true;
        }
      }
      if (!drop) kept.push_back(fresh[a]);
    }
    // old pairs made redundant by the new leading monomial
    std::vector<Pair> survivors;
    for (auto& p : pairs) {
      const bool redundant = divides(lm(k), p.lcm) && lcm(lm(p.i), lm(k)) != p.lcm &&
                             lcm(lm(p.j), lm(k)) != p.lcm;
      if (!redundant) survivors.push_back(std::move(p));
    }
    pairs = std::move(survivors);
    for (auto& p : kept)
      if (!coprime(lm(p.i), lm(k))) pairs.push_back(std::move(p));
    for (std::size_t i = 0; i < k; ++i)
      if (active[i] && divides(lm(k), lm(i))) active[i] = false;
  };

  for (std::size_t k = 0; k < basis.size(); ++k) update(k);

  auto pair_before = [&](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (int c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_before);
    const Pair p = *best;
    pairs.erase(best);
    Terms s = gb_detail::s_poly(basis[p.i], basis[p.j], order, cap);
    Terms r = gb_detail::reduce(std::move(s), basis, order, cap);
    if (r.empty()) continue;
    gb_detail::make_monic(r);
    basis.push_back(std::move(r));
    active.push_back(true);
    update(basis.size() - 1);
  }

  // minimize: keep one generator per minimal leading monomial
  std::vector<Terms> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(lm(j), lm(i)) && (lm(i) != lm(j) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce tails
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Terms> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Terms head{minimal[i].front()};
    Terms tail(minimal[i].begin() + 1, minimal[i].end());
    Terms reduced_tail = gb_detail::reduce(std::move(tail), others, order, cap);
    head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Terms& a, const Terms& b) { return order.compare(a.front().mono, b.front().mono) < 0; });
  return GroebnerBasis(ring, order, std::move(minimal));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

/// Every S-pair of `gens` reduces to zero modulo `gens` (confluence).
inline bool is_groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) return true;
  const auto cap = gens.front().ring().exponent_cap();
  std::vector<gb_detail::Terms> g;
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    auto t = gb_detail::to_terms(p, order);
    gb_detail::make_monic(t);
    g.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!gb_detail::reduce(gb_detail::s_poly(g[i], g[j], order, cap), g, order, cap).empty()) return false;
  return true;
}

/// f in (gens)?
inline bool ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  if (gens.empty()) return false;
  return buchberger(gens, MonomialOrder::grevlex()).contains(f);
}

/// Mutual reduction: each generator of one ideal lies in the other.
inline bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  auto all_in = [](const std::vector<Polynomial>& xs, const std::vector<Polynomial>& ys) {
    bool ys_zero = std::all_of(ys.begin(), ys.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (ys_zero) return std::all_of(xs.begin(), xs.end(), [](const Polynomial& p) { return p.is_zero(); });
    const GroebnerBasis gb = buchberger(ys, MonomialOrder::grevlex());
    return std::all_of(xs.begin(), xs.end(), [&](const Polynomial& p) { return gb.contains(p); });
  };
  return all_in(a, b) && all_in(b, a);
}

// --- presentations: relation ideals and subalgebra membership -------------

/// Ring k[X1..Xm] used to present the subalgebra generated by m elements.
inline Ring presentation_ring(std::size_t m) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= m; ++i) vars.push_back("X" + std::to_string(i));
  return Ring(std::move(vars));
}

/// Kernel of k[X1..Xm] -> target, Xi -> image_i.
struct RelationIdeal {
  Ring presentation;
  std::vector<Polynomial> generators;  ///< empty for the zero ideal
};

namespace gb_detail {

/// The ideal (Xi - g_i) in k[target vars, tags], eliminating target
/// variables via a block order. Tags are named to avoid clashes.
struct TagIdeal {
  Ring ring;
  std::size_t n_target = 0;
  std::vector<std::size_t> target_index;  // target var i -> index in ring
  GroebnerBasis basis;
};

inline TagIdeal tag_ideal(const std::vector<Polynomial>& images, const Ring& target) {
  std::vector<std::string> vars = target.variables();
  for (std::size_t i = 1; i <= images.size(); ++i) {
    std::string name = "X" + std::to_string(i);
    while (target.find(name)) name = "_" + name;
    vars.push_back(name);
  }
  // Grade the tags by the weighted degree of their images when every image
  // is homogeneous; the tag ideal is then homogeneous too.
  std::optional<std::vector<std::int64_t>> weights;
  if (target.graded()) {
    weights = *target.weights();
    for (const auto& img : images) {
      const auto deg = img.ring() == target ? weighted_degree(img) : std::nullopt;
      if (img.is_zero()) {
        weights->push_back(1);
      } else if (deg && deg->homogeneous() && deg->min > 0) {
        weights->push_back(deg->min);
      } else {
        weights.reset();
        break;
      }
    }
  }
  Ring ring(std::move(vars), std::move(weights), target.exponent_cap());
  const std::size_t n = target.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    require_same_ring(images[i].ring(), target);
    gens.push_back(Polynomial::variable(ring, n + i) - relabel(images[i], ring, idx));
  }
  if (gens.empty()) gens.push_back(Polynomial(ring));
  GroebnerBasis gb = buchberger(gens, MonomialOrder::block(n));
  return TagIdeal{ring, n, std::move(idx), std::move(gb)};
}

/// Moves a polynomial free of target variables into k[X1..Xm].
inline Polynomial to_presentation(const Polynomial& f, std::size_t n_target, const Ring& pres) {
  std::vector<std::size_t> idx(f.ring().size(), 0);
  for (std::size_t i = n_target; i < f.ring().size(); ++i) idx[i] = i - n_target;
  return relabel(f, pres, idx);
}

inline bool free_of_block(const Polynomial& f, std::size_t n_target) {
  for (std::size_t i = 0; i < n_target; ++i)
    if (f.involves(i)) return false;
  return true;
}

}  // namespace gb_detail

/// Relations among `images` (all in one ring), by elimination of the target
/// variables from (Xi - image_i) under a block order.
inline RelationIdeal relation_ideal(const std::vector<Polynomial>& images) {
  if (images.empty()) throw InvalidArgument("relation_ideal needs at least one image");
  const Ring target = images.front().ring();
  const auto tag = gb_detail::tag_ideal(images, target);
  RelationIdeal out{presentation_ring(images.size()), {}};
  for (const auto& g : tag.basis.generators())
    if (gb_detail::free_of_block(g, tag.n_target))
      out.generators.push_back(gb_detail::to_presentation(g, tag.n_target, out.presentation));
  return out;
}

/// Substitutes Xi -> values[i] into a presentation polynomial.
inline Polynomial evaluate_presentation(const Polynomial& p, const std::vector<Polynomial>& values) {
  if (values.empty()) throw InvalidArgument("no values to substitute");
  return substitute(p, RingMap(p.ring(), values.front().ring(), values));
}

/// Answers membership queries for the subalgebra k[g1..gm], reusing one
/// elimination basis of (Xi - gi).
class SubalgebraOracle {
 public:
  explicit SubalgebraOracle(std::vector<Polynomial> gens)
      : gens_(std::move(gens)),
        tag_(make_tag(gens_)),
        presentation_(presentation_ring(gens_.size())) {}

  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const Ring& presentation() const noexcept { return presentation_; }

  /// A polynomial P in k[X1..Xm] with P(gens) = f, or nullopt when f is not
  /// in the subalgebra.
  std::optional<Polynomial> represent(const Polynomial& f) const {
    require_same_ring(f.ring(), gens_.front().ring());
    std::vector<std::size_t> idx(f.ring().size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const Polynomial nf = tag_.basis.normal_form(relabel(f, tag_.ring, idx));
    if (!gb_detail::free_of_block(nf, tag_.n_target)) return std::nullopt;
    return gb_detail::to_presentation(nf, tag_.n_target, presentation_);
  }

  bool contains(const Polynomial& f) const { return represent(f).has_value(); }

 private:
  static gb_detail::TagIdeal make_tag(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw InvalidArgument("subalgebra needs at least one generator");
    return gb_detail::tag_ideal(gens, gens.front().ring());
  }

  std::vector<Polynomial> gens_;
  gb_detail::TagIdeal tag_;
  Ring presentation_;
};

/// Representation of f as a polynomial in the generators, or nullopt.
inline std::optional<Polynomial> subalgebra_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
  return SubalgebraOracle(gens).represent(f);
}

}  // namespace lnd

#endif  // LND_GROEBNER_HPP
