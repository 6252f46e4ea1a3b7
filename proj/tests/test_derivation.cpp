#include <gtest/gtest.h>

#include "support.hpp"

using namespace lnd;
using lnd::testing::Gen;

namespace {

const PaperContext& ctx() {
  static const PaperContext c = builtin_context();
  return c;
}

Polynomial P(std::string_view text) { return ctx().V_poly(text); }

}  // namespace

TEST(Apply, Examples) {
  EXPECT_EQ(apply(ctx().D, P("s")), P("x^3"));
  EXPECT_TRUE(apply(ctx().D, ctx().f[1]).is_zero());
  EXPECT_TRUE(apply(ctx().Delta, ctx().W_poly("2*u*s - t^2")).is_zero());
  EXPECT_THROW(apply(ctx().D, ctx().W_poly("s")), RingMismatch);
}

TEST(ApplyIter, Examples) {
  EXPECT_EQ(apply_iter(ctx().D, P("t"), 2), P("x^3"));
  EXPECT_TRUE(apply_iter(ctx().D, P("u"), 4).is_zero());
  EXPECT_EQ(apply_iter(ctx().D, ctx().f[5], 0), ctx().f[5]);
}

TEST(Nilpotency, Examples) {
  EXPECT_EQ(nilpotency_index(ctx().D, P("u")), 4u);
  EXPECT_EQ(nilpotency_index(ctx().D, P("x")), 1u);
  EXPECT_EQ(nilpotency_index(ctx().D, ctx().f[5]), 1u);
  EXPECT_EQ(nilpotency_index(ctx().D, Polynomial(ctx().V)), 0u);
  const auto report = is_locally_nilpotent(ctx().D, 5);
  EXPECT_TRUE(report.nilpotent);
  EXPECT_EQ(report.indices, (std::vector<std::optional<unsigned>>{1u, 2u, 3u, 4u, 2u}));
  EXPECT_TRUE(is_locally_nilpotent(ctx().DeltaPrime, 5).nilpotent);

  const Ring r = parse_ring("x");
  const Derivation euler(r, {Polynomial::variable(r, 0)});
  for (unsigned cap : {1u, 5u, 40u}) {
    const auto e = is_locally_nilpotent(euler, cap);
    EXPECT_FALSE(e.nilpotent);
    EXPECT_TRUE(e.cap_exhausted);
  }
  EXPECT_FALSE(nilpotency_index(euler, Polynomial::variable(r, 0), 10).has_value());
}

TEST(Exponential, Examples) {
  const auto ext = ExtendedRing::make(ctx().V, "r");
  const auto pr = [&](std::string_view t) { return parse_polynomial(t, ext.ring); };
  EXPECT_EQ(exponential(ctx().D, P("u"), ext), pr("u + r*t + 1/2*r^2*s + 1/6*r^3*x^3"));
  EXPECT_EQ(exponential(ctx().D, P("x"), ext), pr("x"));
  EXPECT_EQ(exponential(ctx().D, ctx().f[2], ext), ext.embed(ctx().f[2]));
  EXPECT_THROW(ExtendedRing::make(ctx().V, "x"), InvalidArgument);

  const Ring r = parse_ring("x");
  const Derivation euler(r, {Polynomial::variable(r, 0)});
  EXPECT_THROW(exponential(euler, Polynomial::variable(r, 0), "a", 10), CapExceeded);
}

TEST(Exponential, ParameterZeroRecoversInput) {
  const auto ext = ExtendedRing::make(ctx().V, "r");
  Gen g(31);
  for (int i = 0; i < 50; ++i) {
    const auto f = g.polynomial(ctx().V, 4, 4);
    const auto mu = exponential(ctx().D, f, ext);
    ASSERT_EQ(substitute_variable(mu, ext.param, Polynomial(ext.ring)), ext.embed(f));
  }
}

TEST(OrbitPoint, Examples) {
  const Ring& V = ctx().V;
  EXPECT_EQ(orbit_point(ctx().D, Rational(1), parse_point("1,0,0,0,0", V)), parse_point("1, 1, 1/2, 1/6, 1", V));
  const auto p = parse_point("3, -1/2, 4, 7, 1/9", V);
  EXPECT_EQ(orbit_point(ctx().D, Rational(0), p), p);
  Gen g(32);
  for (int i = 0; i < 20; ++i) {
    const Rational a = g.rational(30, 7), tau = g.rational(30, 7), omega = g.rational(30, 7), nu = g.rational(30, 7);
    const Point q(V, {Rational(0), Rational(0), tau, omega, nu});
    ASSERT_EQ(orbit_point(ctx().D, a, q), Point(V, {Rational(0), Rational(0), tau, omega + a * tau, nu}));
  }
}

TEST(Invariant, Examples) {
  for (const auto& f : ctx().f) EXPECT_TRUE(is_invariant(ctx().D, f));
  EXPECT_FALSE(is_invariant(ctx().D, P("s")));
  EXPECT_TRUE(is_invariant(ctx().D, P("2*x^2*t + x*v^2 - 2*v*s")));
}

TEST(Intertwines, Examples) {
  EXPECT_TRUE(intertwines(ctx().rho, ctx().D, ctx().Delta));
  EXPECT_TRUE(intertwines(ctx().phi, ctx().D, ctx().DeltaPrime));
  EXPECT_FALSE(intertwines(ctx().rho, ctx().D, Derivation::zero(ctx().W)));
  EXPECT_THROW(intertwines(ctx().rho, ctx().Delta, ctx().D), RingMismatch);
}

TEST(CommutesWithPartial, Examples) {
  EXPECT_TRUE(commutes_with_partial(ctx().D, "v"));
  EXPECT_FALSE(commutes_with_partial(ctx().D, "s"));
  EXPECT_TRUE(commutes_with_partial(ctx().Delta, "v"));
  EXPECT_THROW(commutes_with_partial(ctx().D, "w"), UnknownVariable);
}

TEST(Properties, Leibniz) {
  Gen g(41);
  for (const Derivation* d : {&ctx().D}) {
    for (int i = 0; i < 200; ++i) {
      const auto f = g.polynomial(ctx().V, 5, 4), h = g.polynomial(ctx().V, 5, 4);
      ASSERT_EQ(apply(*d, f * h), f * apply(*d, h) + h * apply(*d, f));
    }
  }
  Gen g2(42);
  for (int i = 0; i < 100; ++i) {
    const auto f = g2.polynomial(ctx().Vprime, 5, 4), h = g2.polynomial(ctx().Vprime, 5, 4);
    ASSERT_EQ(apply(ctx().DeltaPrime, f * h), f * apply(ctx().DeltaPrime, h) + h * apply(ctx().DeltaPrime, f));
  }
}

TEST(Properties, ExponentialIsHomomorphism) {
  const auto ext = ExtendedRing::make(ctx().V, "r");
  Gen g(43);
  for (int i = 0; i < 60; ++i) {
    const auto f = g.polynomial(ctx().V, 4, 3), h = g.polynomial(ctx().V, 4, 3);
    ASSERT_EQ(exponential(ctx().D, f * h, ext), exponential(ctx().D, f, ext) * exponential(ctx().D, h, ext));
    ASSERT_EQ(exponential(ctx().D, f + h, ext), exponential(ctx().D, f, ext) + exponential(ctx().D, h, ext));
  }
}

TEST(Properties, FlowCocycle) {
  Gen g(44);
  for (int i = 0; i < 200; ++i) {
    const Rational a = g.rational(50, 9), b = g.rational(50, 9);
    const auto p = g.point(ctx().V, 50, 9);
    ASSERT_EQ(orbit_point(ctx().D, a, orbit_point(ctx().D, b, p)), orbit_point(ctx().D, a + b, p));
  }
}

TEST(Properties, DIsHomogeneousOfDegreeZero) {
  Gen g(45);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 200; ++i) {
    // A random monomial is always homogeneous; add a second one of equal weight when possible.
    const Monomial m = g.monomial(ctx().V, 5);
    Polynomial f = Polynomial::term(ctx().V, m, g.nonzero_rational(9, 3));
    const Monomial m2 = g.monomial(ctx().V, 5);
    if (weighted_degree(ctx().V, m2) == weighted_degree(ctx().V, m)) f.add_term(m2, g.nonzero_rational(9, 3));
    if (f.is_zero()) continue;
    const auto df = apply(ctx().D, f);
    if (!df.is_zero()) {
      const auto deg = weighted_degree(df);
      ASSERT_TRUE(deg->homogeneous());
      ASSERT_EQ(deg->min, weighted_degree(ctx().V, m));
    }
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(Properties, InvariantsAreConstantOnOrbits) {
  Gen g(46);
  std::vector<Polynomial> invariants(ctx().f.begin(), ctx().f.end());
  invariants.push_back(P("2*x^2*t + x*v^2 - 2*v*s"));
  invariants.push_back(ctx().f[1] * ctx().f[4] - pow(ctx().f[3], 3));
  for (int i = 0; i < 100; ++i) {
    const Rational a = g.rational(40, 7);
    const auto p = g.point(ctx().V, 40, 7);
    const auto q = orbit_point(ctx().D, a, p);
    for (const auto& f : invariants) ASSERT_EQ(evaluate(f, q), evaluate(f, p));
  }
}

TEST(DerivationJson, RoundTripAndErrors) {
  const json doc = derivation_to_json(ctx().D);
  const Derivation back = derivation_from_json(doc);
  EXPECT_EQ(back.images(), ctx().D.images());
  EXPECT_EQ(back.ring(), ctx().D.ring());

  const json partial = json::parse(R"({"ring": {"vars": ["x","s","t"]}, "derivation": {"s": "x^3"}})");
  const Derivation d = derivation_from_json(partial);
  EXPECT_EQ(d.to_string(), "x^3*d/ds");
  const json bad = json::parse(R"({"ring": {"vars": ["x","s"]}, "derivation": {"s": "w"}})");
  EXPECT_THROW(derivation_from_json(bad), UnknownVariable);
  const json bad_key = json::parse(R"({"ring": {"vars": ["x","s"]}, "derivation": {"w": "x"}})");
  EXPECT_THROW(derivation_from_json(bad_key), UnknownVariable);
  EXPECT_THROW(derivation_from_json(json::parse("[]")), FormatError);
  EXPECT_THROW(load_derivation("builtin:E"), InvalidArgument);
  EXPECT_EQ(load_derivation("builtin:DeltaPrime").derivation.ring().variables(),
            (std::vector<std::string>{"x", "v", "t", "u"}));
}
