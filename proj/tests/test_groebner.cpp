#include <gtest/gtest.h>

#include "support.hpp"

using namespace lnd;
using lnd::testing::Gen;

namespace {

const Ring& XYZ() {
  static const Ring r = parse_ring("x,y,z");
  return r;
}

const Ring& X4() {
  static const Ring r = presentation_ring(4);
  return r;
}

Polynomial Q(std::string_view text) { return parse_polynomial(text, X4()); }

std::vector<std::string> printed(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators()) out.push_back(print_canonical(g));
  return out;
}

/// Every S-pair reduces to zero modulo the basis.
void expect_confluent(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      ASSERT_TRUE(gb.normal_form(s_polynomial(g[i], g[j], gb.order())).is_zero())
          << print_canonical(g[i]) << " / " << print_canonical(g[j]);
}

const std::vector<MonomialOrder>& all_orders() {
  static const std::vector<MonomialOrder> o{MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex(),
                                            MonomialOrder::block(1), MonomialOrder::block(2)};
  return o;
}

}  // namespace

TEST(MonomialOrder, ComparesAsDocumented) {
  const Monomial a{2, 0, 0}, b{1, 2, 0}, c{0, 0, 3}, d{1, 0, 2};
  EXPECT_TRUE(MonomialOrder::lex().less(b, a));
  EXPECT_TRUE(MonomialOrder::grlex().less(a, b));
  // Equal degree: grevlex ranks the larger power of the last variable lower.
  EXPECT_TRUE(MonomialOrder::grevlex().less(d, Monomial{1, 1, 1}));
  EXPECT_TRUE(MonomialOrder::block(1).less(c, Monomial{1, 0, 0}));
  EXPECT_EQ(MonomialOrder::from_string("block:2"), MonomialOrder::block(2));
  EXPECT_EQ(MonomialOrder::from_string("grevlex").to_string(), "grevlex");
  EXPECT_THROW(MonomialOrder::from_string("deglex"), InvalidArgument);
}

TEST(Buchberger, Examples) {
  const auto x = parse_polynomial("x", XYZ());
  EXPECT_EQ(printed(buchberger({x}, MonomialOrder::lex())), (std::vector<std::string>{"x"}));

  const auto I = buchberger({Q("X1"), Q("X2^3 + X3^2")}, MonomialOrder::grevlex());
  EXPECT_TRUE(ideals_equal(I.generators(), {Q("X1"), Q("X2^3 + X3^2")}));
  EXPECT_EQ(I.size(), 2u);

  const auto tc = buchberger(lnd::testing::parse_all(XYZ(), {"y - x^2", "z - x^3"}), MonomialOrder::lex());
  EXPECT_TRUE(tc.contains(parse_polynomial("y^3 - z^2", XYZ())));
  const auto got = printed(tc);
  EXPECT_NE(std::find(got.begin(), got.end(), "y^3 - z^2"), got.end());
  EXPECT_TRUE(is_groebner_basis(tc.generators(), MonomialOrder::lex()));
}

TEST(Buchberger, TwistedCubicLexBasis) {
  const auto tc = buchberger(lnd::testing::parse_all(XYZ(), {"y - x^2", "z - x^3"}), MonomialOrder::lex());
  EXPECT_TRUE(ideals_equal(tc.generators(), lnd::testing::parse_all(XYZ(), {"x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"})));
  EXPECT_EQ(tc.size(), 4u);
}

TEST(Buchberger, ZeroAndUnitIdeals) {
  const auto zero = buchberger({Polynomial(XYZ())}, MonomialOrder::grevlex());
  EXPECT_TRUE(zero.is_zero_ideal());
  EXPECT_EQ(zero.normal_form(parse_polynomial("x", XYZ())), parse_polynomial("x", XYZ()));
  const auto unit = buchberger(lnd::testing::parse_all(XYZ(), {"x*y - 1", "x"}), MonomialOrder::grevlex());
  EXPECT_EQ(printed(unit), (std::vector<std::string>{"1"}));
  EXPECT_THROW(buchberger({}, MonomialOrder::lex()), InvalidArgument);
}

TEST(NormalForm, Examples) {
  EXPECT_TRUE(normal_form(parse_polynomial("x^2", XYZ()), buchberger({parse_polynomial("x", XYZ())}, MonomialOrder::lex())).is_zero());
  const auto I = buchberger({Q("X1"), Q("X2^3 + X3^2")}, MonomialOrder::grevlex());
  EXPECT_TRUE(normal_form(Q("X1"), I).is_zero());
  EXPECT_EQ(normal_form(Q("X4"), I), Q("X4"));
}

TEST(IdealMembership, Examples) {
  const std::vector<Polynomial> I{Q("X1"), Q("X2^3 + X3^2")};
  EXPECT_TRUE(ideal_membership(Q("X2^3 + X3^2"), I));
  EXPECT_TRUE(ideal_membership(Polynomial(X4()), I));
  EXPECT_FALSE(ideal_membership(Q("X4"), I));
  EXPECT_TRUE(ideal_membership(Q("X4*X1 + X2*(X2^3 + X3^2)"), I));
}

TEST(RelationIdeal, Examples) {
  const Ring vtu = parse_ring("v,t,u");
  const auto r1 = relation_ideal(lnd::testing::parse_all(vtu, {"0", "-v^2", "v^3", "-3*t^2*v^2"}));
  EXPECT_TRUE(ideals_equal(r1.generators, {Q("X1"), Q("X2^3 + X3^2")}));
  const auto r2 = relation_ideal(lnd::testing::parse_all(vtu, {"0", "-t^2", "v"}));
  EXPECT_TRUE(ideals_equal(r2.generators, {parse_polynomial("X1", presentation_ring(3))}));
  const Ring x = parse_ring("x");
  EXPECT_TRUE(relation_ideal({parse_polynomial("x", x)}).generators.empty());
}

TEST(RelationIdeal, TagNamesAvoidClashes) {
  const Ring r = parse_ring("X1,X2");
  const auto rel = relation_ideal(lnd::testing::parse_all(r, {"X1^2", "X1^3", "X2"}));
  EXPECT_TRUE(ideals_equal(rel.generators, {parse_polynomial("X1^3 - X2^2", presentation_ring(3))}));
}

TEST(SubalgebraMembership, Examples) {
  const auto ctx = builtin_context();
  const std::vector<Polynomial> h(ctx.h.begin(), ctx.h.end());
  const auto w = exact_divide_by_power(pow(h[1], 3) + pow(h[2], 2), "x", 1);
  EXPECT_EQ(subalgebra_membership(w, h), Q("X1*X4"));
  EXPECT_EQ(subalgebra_membership(h[0], h), Q("X1"));
  EXPECT_FALSE(subalgebra_membership(ctx.Vprime_poly("t"), h).has_value());
}

TEST(Properties, ConfluenceOnRandomIdeals) {
  Gen g(51);
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> gens;
    for (auto k = g.range(1, 3); k > 0; --k) gens.push_back(g.polynomial(XYZ(), 3, 3, 5, 2));
    for (const auto& order : all_orders()) {
      const auto gb = buchberger(gens, order);
      expect_confluent(gb);
      for (const auto& f : gens) ASSERT_TRUE(gb.contains(f));
      for (const auto& b : gb.generators()) ASSERT_TRUE(ideal_membership(b, gens));
    }
  }
}

TEST(Properties, DeterministicOutput) {
  Gen g(52);
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial> gens;
    for (auto k = g.range(1, 3); k > 0; --k) gens.push_back(g.polynomial(XYZ(), 3, 3, 5, 2));
    for (const auto& order : all_orders()) {
      ASSERT_EQ(printed(buchberger(gens, order)), printed(buchberger(gens, order)));
      auto reversed = gens;
      std::reverse(reversed.begin(), reversed.end());
      ASSERT_EQ(printed(buchberger(gens, order)), printed(buchberger(reversed, order)));
    }
  }
}

TEST(Properties, PruningDoesNotChangeBases) {
  Gen g(53);
  BuchbergerOptions plain;
  plain.gebauer_moller = false;
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial> gens;
    for (auto k = g.range(1, 3); k > 0; --k) gens.push_back(g.polynomial(XYZ(), 3, 3, 5, 2));
    for (const auto& order : all_orders()) ASSERT_EQ(printed(buchberger(gens, order)), printed(buchberger(gens, order, plain)));
  }
  const auto ctx = builtin_context();
  const auto images = std::vector<Polynomial>(ctx.f.begin(), ctx.f.begin() + 4);
  const auto a = gb_detail::tag_ideal(images, ctx.V);
  std::vector<Polynomial> raw;
  const Ring& tr = a.ring;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<std::size_t> idx(ctx.V.size());
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
    raw.push_back(Polynomial::variable(tr, ctx.V.size() + i) - relabel(images[i], tr, idx));
  }
  EXPECT_EQ(printed(buchberger(raw, MonomialOrder::block(ctx.V.size()), plain)), printed(a.basis));
}

TEST(Properties, RelationIdealMatchesBruteForce) {
  Gen g(54);
  const Ring target = parse_ring("a,b");
  for (int i = 0; i < 20; ++i) {
    const auto images = lnd::testing::random_images(g, target);
    ASSERT_EQ(lnd::testing::relation_ideal_disagreement(images, 3), "") << "instance " << i;
  }
}

TEST(Properties, BruteForceFindsKnownRelations) {
  const Ring r = parse_ring("a");
  const auto images = lnd::testing::parse_all(r, {"a^2", "a^3"});
  const auto brute = lnd::testing::brute_force_relations(images, presentation_ring(2), 3);
  ASSERT_EQ(brute.size(), 1u);
  EXPECT_TRUE(ideals_equal(brute, {parse_polynomial("X1^3 - X2^2", presentation_ring(2))}));
}

TEST(Properties, SubalgebraRepresentationsAreExact) {
  Gen g(55);
  const Ring target = parse_ring("a,b,c");
  int members = 0;
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial> gens;
    for (auto k = g.range(1, 3); k > 0; --k) gens.push_back(g.polynomial(target, 2, 2, 4, 2));
    if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    const SubalgebraOracle oracle(gens);
    const Ring pres = presentation_ring(gens.size());
    // Known members: random polynomials in the generators.
    const auto p = g.polynomial(pres, 3, 3, 4, 2);
    const auto f = evaluate_presentation(p, gens);
    const auto rep = oracle.represent(f);
    ASSERT_TRUE(rep.has_value());
    ASSERT_EQ(evaluate_presentation(*rep, gens), f);
    ++members;
    // Arbitrary polynomials: any representation returned must be exact.
    const auto q = g.polynomial(target, 3, 3, 4, 2);
    if (const auto r = oracle.represent(q)) ASSERT_EQ(evaluate_presentation(*r, gens), q);
  }
  EXPECT_GT(members, 20);
}
