#ifndef LND_PAPERLAB_HPP
#define LND_PAPERLAB_HPP

// The degree-zero triangular derivation D on k[x,s,t,u,v], its six separating
// invariants, the auxiliary derivations and maps used to establish that they
// separate, and suites replaying every identity.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/groebner.hpp"
#include "lnd/kernel.hpp"
#include "lnd/laurent.hpp"
#include "lnd/parse.hpp"

namespace lnd {

/// Source text of the embedded polynomials. Tests swap entries to corrupt a
/// context on purpose.
struct PaperTexts {
  std::array<std::string, 6> f{
      "x",
      "2*x^3*t - s^2",
      "3*x^6*u - 3*x^3*t*s + s^3",
      "x*v - s",
      "x^2*t*s - s^2*v + 2*x^3*t*v - 3*x^5*u",
      "-18*x^3*t*s*u + 9*x^6*u^2 + 8*x^3*t^3 + 6*s^3*u - 3*t^2*s^2",
  };
  // over k[x,v,t,u]
  std::array<std::string, 4> h{
      "x",
      "2*x*t - v^2",
      "3*x^3*u - 3*x*v*t + v^3",
      "8*x*t^3 + 9*x^4*u^2 - 18*x^2*t*u*v - 3*t^2*v^2 + 6*x*u*v^3",
  };
};

struct PaperContext {
  Ring V;        ///< k[x,s,t,u,v], weights (1,3,3,3,2)
  Ring W;        ///< k[s,t,u,v], target of rho
  Ring Vprime;   ///< k[x,v,t,u], target of phi
  Derivation D;           ///< x^3 d/ds + s d/dt + t d/du + x^2 d/dv
  Derivation Delta;       ///< s d/dt + t d/du on W
  Derivation DeltaPrime;  ///< x^2 d/dv + x v d/dt + t d/du on Vprime
  RingMap rho;  ///< x -> 0
  RingMap phi;  ///< s -> x v
  std::array<Polynomial, 6> f;
  std::array<Polynomial, 4> h;
  LaurentElement slice_D;           ///< s/x^3
  LaurentElement slice_DeltaPrime;  ///< v/x^2
  LaurentElement slice_Delta;       ///< t/s

  /// gamma: (chi, sigma, tau, omega, nu) -> (sigma, tau, omega, nu)
  Point gamma(const Point& p) const {
    require_same_ring(p.ring, V);
    return Point(W, std::vector<Rational>(p.coordinates.begin() + 1, p.coordinates.end()));
  }

  Polynomial V_poly(std::string_view text) const { return parse_polynomial(text, V); }
  Polynomial W_poly(std::string_view text) const { return parse_polynomial(text, W); }
  Polynomial Vprime_poly(std::string_view text) const { return parse_polynomial(text, Vprime); }
};

/// Builds the context from text, re-parsing every printed constant to make
/// sure nothing drifts between the text and the stored polynomial.
inline PaperContext make_context(const PaperTexts& texts) {
  PaperContext c;
  c.V = Ring({"x", "s", "t", "u", "v"}, std::vector<std::int64_t>{1, 3, 3, 3, 2});
  c.W = Ring({"s", "t", "u", "v"}, std::vector<std::int64_t>{3, 3, 3, 2});
  c.Vprime = Ring({"x", "v", "t", "u"}, std::vector<std::int64_t>{1, 2, 3, 3});

  auto V = [&](std::string_view s) { return parse_polynomial(s, c.V); };
  auto W = [&](std::string_view s) { return parse_polynomial(s, c.W); };
  auto P = [&](std::string_view s) { return parse_polynomial(s, c.Vprime); };

  c.D = Derivation(c.V, {V("0"), V("x^3"), V("s"), V("t"), V("x^2")});
  c.Delta = Derivation(c.W, {W("0"), W("s"), W("t"), W("0")});
  c.DeltaPrime = Derivation(c.Vprime, {P("0"), P("x^2"), P("x*v"), P("t")});
  c.rho = RingMap(c.V, c.W, {W("0"), W("s"), W("t"), W("u"), W("v")});
  c.phi = RingMap(c.V, c.Vprime, {P("x"), P("x*v"), P("t"), P("u"), P("v")});
  for (std::size_t i = 0; i < 6; ++i) c.f[i] = V(texts.f[i]);
  for (std::size_t i = 0; i < 4; ++i) c.h[i] = P(texts.h[i]);
  c.slice_D = LaurentElement(V("s"), "x", 3);
  c.slice_DeltaPrime = LaurentElement(P("v"), "x", 2);
  c.slice_Delta = LaurentElement(W("t"), "s", 1);

  auto round_trip = [](const Polynomial& p) {
    if (!(parse_polynomial(print_canonical(p), p.ring()) == p))
      throw Error("embedded polynomial does not survive print/parse: " + print_canonical(p));
  };
  for (const auto& p : c.f) round_trip(p);
  for (const auto& p : c.h) round_trip(p);
  return c;
}

inline PaperContext builtin_context() { return make_context(PaperTexts{}); }

// --- reports ----------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  ///< empty on pass
};

struct VerificationReport {
  std::vector<Check> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  std::size_t passed_count() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
  }

  /// One line per check: "name ... ok" or "name ... FAIL: witness".
  std::string to_text() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.name + " ... " + (c.passed ? "ok" : "FAIL");
      if (!c.passed && !c.witness.empty()) out += ": " + c.witness;
      out += '\n';
    }
    return out;
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace paper_detail {

/// Runs `body`; it returns an empty string on success or a witness. An
/// exception fails the check with its message as witness.
inline void run_check(VerificationReport& report, std::string name, const std::function<std::string()>& body) {
  Check c{std::move(name), false, {}};
  try {
    c.witness = body();
    c.passed = c.witness.empty();
  } catch (const std::exception& e) {
    c.witness = std::string("exception: ") + e.what();
  }
  report.checks.push_back(std::move(c));
}

inline std::string expect_equal(const Polynomial& got, const Polynomial& want) {
  if (got == want) return {};
  return "got " + print_canonical(got) + ", expected " + print_canonical(want);
}

inline std::string expect_equal(const LaurentElement& got, const LaurentElement& want) {
  if (got == want) return {};
  return "got " + got.to_string() + ", expected " + want.to_string();
}

inline std::string list_text(const std::vector<LaurentElement>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + "]";
}

}  // namespace paper_detail

/// Replays every symbolic identity behind the separation argument.
inline VerificationReport verify_paper(const PaperContext& ctx) {
  using paper_detail::expect_equal;
  using paper_detail::run_check;
  VerificationReport r;
  const auto& V = ctx.V;
  const std::size_t x = V.index_of("x");

  auto nilpotent = [](const Derivation& d) -> std::string {
    auto rep = is_locally_nilpotent(d);
    return rep.nilpotent ? "" : "cap exhausted on " + d.to_string();
  };
  run_check(r, "D is locally nilpotent", [&] { return nilpotent(ctx.D); });
  run_check(r, "Delta is locally nilpotent", [&] { return nilpotent(ctx.Delta); });
  run_check(r, "DeltaPrime is locally nilpotent", [&] { return nilpotent(ctx.DeltaPrime); });
  run_check(r, "grading weights (1,3,3,3,2)", [&]() -> std::string {
    return *V.weights() == std::vector<std::int64_t>{1, 3, 3, 3, 2} ? "" : "unexpected weights";
  });

  for (std::size_t i = 0; i < 6; ++i) {
    run_check(r, "f" + std::to_string(i + 1) + " is D-invariant", [&, i]() -> std::string {
      const Polynomial d = apply(ctx.D, ctx.f[i]);
      return d.is_zero() ? "" : "D(f" + std::to_string(i + 1) + ") = " + print_canonical(d);
    });
  }

  const std::array<std::int64_t, 6> degrees{1, 6, 9, 3, 8, 12};
  for (std::size_t i = 0; i < 6; ++i) {
    run_check(r, "f" + std::to_string(i + 1) + " homogeneous of degree " + std::to_string(degrees[i]),
              [&, i]() -> std::string {
                auto d = weighted_degree(ctx.f[i]);
                if (!d) return "zero polynomial";
                if (!d->homogeneous())
                  return "degrees range " + std::to_string(d->min) + ".." + std::to_string(d->max);
                return d->min == degrees[i] ? "" : "degree " + std::to_string(d->min);
              });
  }

  // localization at x
  run_check(r, "s/x^3 is a slice of D", [&]() -> std::string {
    return verify_slice(ctx.D, ctx.slice_D) ? "" : "D(s/x^3) = " + apply_localized(ctx.D, ctx.slice_D).to_string();
  });
  run_check(r, "localized kernel of D = k[f1, 0, f2/2x^3, f3/3x^6, f4/x, 1/x]", [&]() -> std::string {
    const auto gens = slice_kernel_generators(ctx.D, Slice::make(ctx.D, ctx.slice_D));
    const std::vector<LaurentElement> want{
        LaurentElement(ctx.f[0], x, 0),
        LaurentElement(Polynomial(V), x, 0),
        LaurentElement(ctx.f[1] * Rational(1, 2), x, 3),
        LaurentElement(ctx.f[2] * Rational(1, 3), x, 6),
        LaurentElement(ctx.f[3], x, 1),
    };
    return gens == want ? "" : "got " + paper_detail::list_text(gens) + ", expected " + paper_detail::list_text(want);
  });

  // the stratum x = 0
  run_check(r, "ker Delta = k[s, 2us - t^2, v] (kernel check)", [&]() -> std::string {
    const std::vector<Polynomial> cands{ctx.W_poly("s"), ctx.W_poly("2*u*s - t^2"), ctx.W_poly("v")};
    auto out = kernel_check(ctx.Delta, cands, "s", Slice::make(ctx.Delta, ctx.slice_Delta));
    return out.status == KernelStatus::Confirmed ? "" : "status " + to_string(out.status);
  });
  run_check(r, "rho(f4) = -s", [&] { return expect_equal(substitute(ctx.f[3], ctx.rho), ctx.W_poly("-s")); });
  run_check(r, "rho(f5) = -s^2*v", [&] { return expect_equal(substitute(ctx.f[4], ctx.rho), ctx.W_poly("-s^2*v")); });
  run_check(r, "rho(f6) = 3*s^2*(2*u*s - t^2)",
            [&] { return expect_equal(substitute(ctx.f[5], ctx.rho), ctx.W_poly("3*s^2*(2*u*s - t^2)")); });
  run_check(r, "Delta o rho = rho o D",
            [&]() -> std::string { return intertwines(ctx.rho, ctx.D, ctx.Delta) ? "" : "maps do not intertwine"; });
  run_check(r, "DeltaPrime o phi = phi o D", [&]() -> std::string {
    return intertwines(ctx.phi, ctx.D, ctx.DeltaPrime) ? "" : "maps do not intertwine";
  });
  run_check(r, "D commutes with d/dv",
            [&]() -> std::string { return commutes_with_partial(ctx.D, "v") ? "" : "[d/dv, D] != 0"; });
  run_check(r, "d(f5)/dv = f2", [&] { return expect_equal(partial_derivative(ctx.f[4], "v"), ctx.f[1]); });

  // invariants lie in k + (x, s)k[V]
  const RingMap kill_xs(V, V, {ctx.V_poly("0"), ctx.V_poly("0"), ctx.V_poly("t"), ctx.V_poly("u"), ctx.V_poly("v")});
  for (std::size_t i = 0; i < 6; ++i) {
    run_check(r, "f" + std::to_string(i + 1) + " lies in (x, s)", [&, i]() -> std::string {
      if (!ctx.f[i].constant_term().is_zero()) return "constant term " + ctx.f[i].constant_term().to_string();
      const Polynomial rest = substitute(ctx.f[i], kill_xs);
      return rest.is_zero() ? "" : "f(0,0,t,u,v) = " + print_canonical(rest);
    });
  }

  // the auxiliary derivation on k[x,v,t,u]
  const std::size_t xp = ctx.Vprime.index_of("x");
  run_check(r, "h2^3 + h3^2 = x^2*h4", [&]() -> std::string {
    const Polynomial sum = pow(ctx.h[1], 3) + pow(ctx.h[2], 2);
    try {
      return expect_equal(exact_divide_by_power(sum, xp, 2), ctx.h[3]);
    } catch (const NotDivisible& e) {
      return "h2^3 + h3^2 not divisible by x^2, witness " + e.witness();
    }
  });
  for (std::size_t i = 0; i < 4; ++i) {
    run_check(r, "h" + std::to_string(i + 1) + " is DeltaPrime-invariant", [&, i]() -> std::string {
      const Polynomial d = apply(ctx.DeltaPrime, ctx.h[i]);
      return d.is_zero() ? "" : "DeltaPrime(h" + std::to_string(i + 1) + ") = " + print_canonical(d);
    });
  }
  run_check(r, "v/x^2 is a slice of DeltaPrime", [&]() -> std::string {
    return verify_slice(ctx.DeltaPrime, ctx.slice_DeltaPrime) ? "" : "DeltaPrime(v/x^2) != 1";
  });
  run_check(r, "localized kernel of DeltaPrime = k[h1, h2, h3, 1/x]", [&]() -> std::string {
    const auto gens = slice_kernel_generators(ctx.DeltaPrime, Slice::make(ctx.DeltaPrime, ctx.slice_DeltaPrime));
    const std::vector<LaurentElement> want{
        LaurentElement(ctx.h[0], xp, 0),
        LaurentElement(Polynomial(ctx.Vprime), xp, 0),
        LaurentElement(ctx.h[1] * Rational(1, 2), xp, 1),
        LaurentElement(ctx.h[2] * Rational(1, 3), xp, 3),
    };
    return gens == want ? "" : "got " + paper_detail::list_text(gens) + ", expected " + paper_detail::list_text(want);
  });
  run_check(r, "relations of h mod x = (X1, X2^3 + X3^2)", [&]() -> std::string {
    std::vector<Polynomial> residues;
    for (const auto& hi : ctx.h) residues.push_back(substitute_variable(hi, xp, Polynomial(ctx.Vprime)));
    const RelationIdeal rel = relation_ideal(residues);
    const std::vector<Polynomial> want{parse_polynomial("X1", rel.presentation),
                                       parse_polynomial("X2^3 + X3^2", rel.presentation)};
    if (ideals_equal(rel.generators, want)) return {};
    std::string got;
    for (const auto& g : rel.generators) got += (got.empty() ? "" : ", ") + print_canonical(g);
    return "relation ideal generated by " + got;
  });
  run_check(r, "(h2^3 + h3^2)/x = X1*X4 in k[h1..h4]", [&]() -> std::string {
    const Polynomial value = exact_divide_by_power(pow(ctx.h[1], 3) + pow(ctx.h[2], 2), xp, 1);
    const std::vector<Polynomial> gens(ctx.h.begin(), ctx.h.end());
    auto rep = subalgebra_membership(value, gens);
    if (!rep) return "not a member";
    return expect_equal(*rep, parse_polynomial("X1*X4", rep->ring()));
  });
  run_check(r, "ker DeltaPrime = k[h1, h2, h3, h4] (kernel check)", [&]() -> std::string {
    const std::vector<Polynomial> gens(ctx.h.begin(), ctx.h.end());
    auto out = kernel_check(ctx.DeltaPrime, gens, xp, Slice::make(ctx.DeltaPrime, ctx.slice_DeltaPrime));
    return out.status == KernelStatus::Confirmed ? "" : "status " + to_string(out.status);
  });
  return r;
}

// --- point-level experiments ---------------------------------------------------

enum class Stratum { XNonzero, XZeroSNonzero, XZeroSZero };

inline std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::XNonzero: return "XNonzero";
    case Stratum::XZeroSNonzero: return "XZeroSNonzero";
    case Stratum::XZeroSZero: return "XZeroSZero";
  }
  return "?";
}

inline std::array<Rational, 6> separating_values(const PaperContext& ctx, const Point& p) {
  require_same_ring(p.ring, ctx.V);
  std::array<Rational, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = evaluate(ctx.f[i], p);
  return out;
}

/// True iff some f_i takes different values at p and q. False means no
/// invariant at all tells the points apart.
inline bool separates(const PaperContext& ctx, const Point& p, const Point& q) {
  return separating_values(ctx, p) != separating_values(ctx, q);
}

inline Stratum stratum_of(const PaperContext& ctx, const Point& p) {
  require_same_ring(p.ring, ctx.V);
  if (!p[0].is_zero()) return Stratum::XNonzero;
  return p[1].is_zero() ? Stratum::XZeroSZero : Stratum::XZeroSNonzero;
}

namespace paper_detail {

/// Portable bounded draws (std distributions are implementation-defined).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = rng_();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  /// num/den with |num| <= bound, 1 <= den <= bound.
  Rational rational(std::int64_t bound = 100) {
    const auto num = uniform(-bound, bound);
    const auto den = uniform(1, bound);
    return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  }

  Rational nonzero_rational(std::int64_t bound = 100) {
    Rational r;
    do {
      r = rational(bound);
    } while (r.is_zero());
    return r;
  }

 private:
  std::mt19937_64 rng_;
};

/// Products f1^e1 ... f6^e6, built on first use.
class ProductCache {
 public:
  explicit ProductCache(const PaperContext& ctx) : ctx_(ctx) {}

  const Polynomial& get(const std::array<unsigned, 6>& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    Polynomial p = Polynomial::constant(ctx_.V, Rational(1));
    for (std::size_t i = 0; i < 6; ++i)
      if (e[i]) p *= pow(ctx_.f[i], e[i]);
    return cache_.emplace(e, std::move(p)).first->second;
  }

 private:
  const PaperContext& ctx_;
  std::map<std::array<unsigned, 6>, Polynomial> cache_;
};

inline std::array<unsigned, 6> random_exponents(Sampler& s) {
  std::array<unsigned, 6> e{};
  // at most three factors, each to the first or second power
  for (int k = 0; k < 3; ++k) {
    const auto i = static_cast<std::size_t>(s.uniform(0, 5));
    e[i] = std::min<unsigned>(e[i] + static_cast<unsigned>(s.uniform(0, 1)), 2);
  }
  return e;
}

inline std::string exponents_text(const std::array<unsigned, 6>& e) {
  std::string out;
  for (std::size_t i = 0; i < 6; ++i)
    if (e[i]) out += (out.empty() ? "" : "*") + ("f" + std::to_string(i + 1)) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  return out.empty() ? "1" : out;
}

struct Tally {
  std::string name;
  std::size_t count = 0;
  std::string first_failure;
  void record(bool ok, std::size_t sample, const std::function<std::string()>& witness) {
    ++count;
    if (!ok && first_failure.empty()) first_failure = "sample " + std::to_string(sample) + ": " + witness();
  }
  Check finish() const {
    return Check{name + " [" + std::to_string(count) + " cases]", first_failure.empty(), first_failure};
  }
};

}  // namespace paper_detail

/// Randomized point-level confirmation that f1..f6 separate.
/// Sample i uses the seed `seed + i`; output is deterministic.
inline VerificationReport random_suite(const PaperContext& ctx, std::uint64_t seed, std::size_t n) {
  using paper_detail::Tally;
  if (n < 1) throw InvalidArgument("random_suite needs at least one sample");
  Tally orbit{"orbit invariance of f1..f6"}, products{"orbit invariance of products of f_i"},
      stratum{"stratum classification"}, zero{"x = s = 0: all six values vanish"},
      unseparated{"x = 0, s != 0 fiber pairs are not separated"},
      shared{"x = 0, s != 0 fiber pairs share (s, 2us - t^2, v)"};
  paper_detail::ProductCache cache(ctx);
  const std::array<Polynomial, 3> rho_kernel{ctx.W_poly("s"), ctx.W_poly("2*u*s - t^2"), ctx.W_poly("v")};

  for (std::size_t i = 0; i < n; ++i) {
    paper_detail::Sampler s(seed + i);
    std::vector<Rational> coords;
    for (int k = 0; k < 5; ++k) coords.push_back(s.rational());
    const Point p(ctx.V, coords);
    const Rational a = s.rational();
    const Point q = orbit_point(ctx.D, a, p);
    const auto vp = separating_values(ctx, p), vq = separating_values(ctx, q);
    orbit.record(vp == vq, i, [&] { return "p = " + p.to_string() + ", a = " + a.to_string(); });

    const auto e = paper_detail::random_exponents(s);
    const Polynomial& g = cache.get(e);
    products.record(evaluate(g, p) == evaluate(g, q), i,
                    [&] { return paper_detail::exponents_text(e) + " at p = " + p.to_string(); });

    const Stratum expected = !coords[0].is_zero()   ? Stratum::XNonzero
                             : !coords[1].is_zero() ? Stratum::XZeroSNonzero
                                                    : Stratum::XZeroSZero;
    stratum.record(stratum_of(ctx, p) == expected && stratum_of(ctx, q) == expected, i,
                   [&] { return "p = " + p.to_string(); });

    const Point z(ctx.V, {Rational(0), Rational(0), s.rational(), s.rational(), s.rational()});
    const auto vz = separating_values(ctx, z);
    const bool all_zero = std::all_of(vz.begin(), vz.end(), [](const Rational& v) { return v.is_zero(); });
    zero.record(all_zero && stratum_of(ctx, z) == Stratum::XZeroSZero, i, [&] { return "p = " + z.to_string(); });

    // equal (sigma, nu, 2 omega sigma - tau^2), different (tau, omega)
    const Rational sigma = s.nonzero_rational(), nu = s.rational();
    const Rational tau1 = s.rational(), omega1 = s.rational();
    Rational tau2 = s.rational();
    while (tau2 == tau1) tau2 = s.rational();
    const Rational c = Rational(2) * omega1 * sigma - tau1 * tau1;
    const Rational omega2 = (c + tau2 * tau2) / (Rational(2) * sigma);
    const Point p1(ctx.V, {Rational(0), sigma, tau1, omega1, nu});
    const Point p2(ctx.V, {Rational(0), sigma, tau2, omega2, nu});
    unseparated.record(!separates(ctx, p1, p2) && stratum_of(ctx, p1) == Stratum::XZeroSNonzero, i,
                       [&] { return p1.to_string() + " vs " + p2.to_string(); });
    const Point g1 = ctx.gamma(p1), g2 = ctx.gamma(p2);
    bool same = true;
    for (const auto& k : rho_kernel) same = same && evaluate(k, g1) == evaluate(k, g2);
    shared.record(same, i, [&] { return p1.to_string() + " vs " + p2.to_string(); });
  }

  VerificationReport r;
  for (const Tally* t : {&orbit, &products, &stratum, &zero, &unseparated, &shared}) r.checks.push_back(t->finish());
  return r;
}

/// For random combinations g of products of the f_i, checks that
/// g - g(origin) lies in the ideal (x, s).
inline VerificationReport origin_ideal_suite(const PaperContext& ctx, std::uint64_t seed, std::size_t n) {
  if (n < 1) throw InvalidArgument("origin_ideal_suite needs at least one sample");
  const GroebnerBasis xs = buchberger({ctx.V_poly("x"), ctx.V_poly("s")}, MonomialOrder::grevlex());
  paper_detail::ProductCache cache(ctx);
  paper_detail::Tally constant{"constant term equals value at origin"}, member{"g - g(0) lies in (x, s)"};
  const Point origin = Point::origin(ctx.V);
  for (std::size_t i = 0; i < n; ++i) {
    paper_detail::Sampler s(seed + i);
    Polynomial g = Polynomial::constant(ctx.V, s.rational());
    const auto terms = s.uniform(1, 3);
    for (std::int64_t k = 0; k < terms; ++k) g += cache.get(paper_detail::random_exponents(s)) * s.nonzero_rational();
    const Rational at_origin = evaluate(g, origin);
    constant.record(g.constant_term() == at_origin, i, [&] { return print_canonical(g); });
    const Polynomial rest = g - Polynomial::constant(ctx.V, at_origin);
    member.record(xs.contains(rest), i, [&] { return "remainder " + print_canonical(xs.normal_form(rest)); });
  }
  VerificationReport r;
  r.checks.push_back(constant.finish());
  r.checks.push_back(member.finish());
  return r;
}

}  // namespace lnd

#endif  // LND_PAPERLAB_HPP
