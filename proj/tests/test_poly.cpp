#include "covgen/poly.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace covgen;

namespace {
const VarSet X3 = VarSet::X(3);
const VarSet X8 = VarSet::X(8);
Poly P(const VarSet& vs, const std::string& s) { return Poly::parse(vs, s); }
}  // namespace

TEST_CASE("variable sets: names, lookup, grading tables") {
  CHECK(X8.size() == 9);
  CHECK(X8.name(0) == "t");
  CHECK(X8.name(8) == "x8");
  CHECK(X8.index_of("x5") == 5);
  CHECK(X8.index_of("z2") == -1);
  const VarSet Z8 = VarSet::Z(8);
  CHECK(Z8.size() == 8);
  CHECK(Z8.name(1) == "z2");
  CHECK(Z8.name(7) == "z8");
  CHECK(Z8.weight_of(7) == 8);
  CHECK(Z8.degree_of(7) == 1);
  const VarSet XY8 = VarSet::XY(8);
  CHECK(XY8.size() == 11);
  CHECK(XY8.name(9) == "Y1");
  CHECK(XY8.is_y(10));
  CHECK(XY8.degree_of(10) == 0);
  CHECK(XY8.weight_of(10) == 1);
  CHECK(XY8.weight_of(9) == 0);
  const VarSet ZX8 = VarSet::ZX(8);
  CHECK(ZX8.name(1) == "x1");
  CHECK(ZX8.name(2) == "z2");
  CHECK(ZX8.weight_of(2) == 2);
}

TEST_CASE("canonical term order: graded, then earliest variable wins") {
  // x2*t > x1^2 (same degree; t-exponent decides), so this is canonical
  // and already primitive with positive leading coefficient.
  Poly p = P(X3, "x2*t - x1^2");
  CHECK(p.to_string() == "x2*t - x1^2");
  CHECK(p.leading().coeff == 1);
  // Total degree dominates.
  CHECK(P(X3, "x1 + x1*x2").to_string() == "x1*x2 + x1");
  // Same degree, t decides before x1.
  CHECK(P(X3, "2*x1^3 - 3*x1*x2*t + x3*t^2").to_string() ==
        "x3*t^2 - 3*x1*x2*t + 2*x1^3");
}

TEST_CASE("parse/print round trip and error handling") {
  auto roundtrip = [](const VarSet& vs, const std::string& s) {
    Poly p = P(vs, s);
    CHECK(Poly::parse(vs, p.to_string()) == p);
  };
  roundtrip(X3, "x2*t - x1^2");
  roundtrip(X3, "3/2*x1^2 - 3*x2*t + 7");
  roundtrip(X3, "- x1 + x1 - 5");
  roundtrip(VarSet::Z(8), "z8*t^3 - 2/7*z2^4 + z3*z5");
  CHECK(P(X3, "x1 - x1").is_zero());
  CHECK(P(X3, "0").is_zero());
  CHECK(P(X3, "x1 + 2*x1").to_string() == "3*x1");
  CHECK_THROWS_AS(P(X3, "x9"), usage_error);
  CHECK_THROWS_AS(P(X3, "x1 +"), usage_error);
  CHECK_THROWS_AS(P(X3, "1/0"), usage_error);
  CHECK_THROWS_AS(P(X3, ""), usage_error);
}

TEST_CASE("ring arithmetic against the schoolbook oracle") {
  // Hand-checked square first.
  Poly z2 = P(X3, "x2*t - x1^2");
  CHECK((z2 * z2).to_string() == "x2^2*t^2 - 2*x1^2*x2*t + x1^4");

  std::mt19937_64 rng(20260815);
  for (int it = 0; it < 60; ++it) {
    Poly a = oracle::random_poly(X3, 6, 3, rng);
    Poly b = oracle::random_poly(X3, 6, 3, rng);
    Poly c = oracle::random_poly(X3, 4, 3, rng);
    CHECK(a * b == oracle::naive_mul(a, b));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Poly(X3));
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("derivative: linearity and product rule") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 20; ++it) {
    Poly a = oracle::random_poly(X3, 5, 3, rng);
    Poly b = oracle::random_poly(X3, 5, 3, rng);
    for (int v = 0; v < X3.size(); ++v) {
      CHECK((a * b).derivative(v) ==
            a.derivative(v) * b + a * b.derivative(v));
      CHECK((a + b).derivative(v) == a.derivative(v) + b.derivative(v));
    }
  }
  CHECK(P(X3, "x1^3").derivative(1) == P(X3, "3*x1^2"));
  CHECK(P(X3, "t").derivative(1).is_zero());
}

TEST_CASE("isobaric grading") {
  auto g = P(X8, "x2*t - x1^2").grade();
  REQUIRE(g.has_value());
  CHECK(g->degree == 2);
  CHECK(g->weight == 2);
  // x8*t + x4^2 is isobaric of degree 2, weight 8.
  auto h = P(X8, "x8*t + 35*x4^2").grade();
  REQUIRE(h.has_value());
  CHECK(h->degree == 2);
  CHECK(h->weight == 8);
  CHECK(!P(X8, "x1 + x2").grade().has_value());   // weights differ
  CHECK(!P(X8, "x1 + x1^2").grade().has_value()); // degrees differ
  CHECK(P(X8, "t - t").grade().has_value());      // zero: trivial grading
  // Y variables count toward weight (Y2) but not degree.
  const VarSet XY3 = VarSet::XY(3);
  auto k = P(XY3, "x1*Y1*Y2 + x2*Y2*Y1").grade();
  CHECK(!k.has_value());
  auto m = Poly::parse(XY3, "x1*Y2 + 2*x2*Y1").grade();
  REQUIRE(m.has_value());
  CHECK(m->degree == 1);
  CHECK(m->weight == 2);
  CHECK(*Poly::parse(XY3, "x1*Y1*Y2^2 - x3*Y1^3").y_degree() == 3);
  CHECK(!Poly::parse(XY3, "Y1 + x1").y_degree().has_value());
}

TEST_CASE("primitive part") {
  // Already primitive, positive leading coefficient.
  auto [p1, c1] = P(X3, "x2*t - x1^2").primitive_part();
  CHECK(p1 == P(X3, "x2*t - x1^2"));
  CHECK(c1 == 1);
  // Content 3/2 against the canonical leading term x2*t: the sign moves
  // into the content so the primitive part leads with +2*x2*t.
  auto [p2, c2] = P(X3, "3/2*x1^2 - 3*x2*t").primitive_part();
  CHECK(p2 == P(X3, "2*x2*t - x1^2"));
  CHECK(c2 == rat(-3, 2));
  auto [p3, c3] = P(X3, "7").primitive_part();
  CHECK(p3 == Poly::constant(X3, 1));
  CHECK(c3 == 7);
  auto [p4, c4] = Poly(X3).primitive_part();
  CHECK(p4.is_zero());
  CHECK(c4 == 1);

  std::mt19937_64 rng(99);
  for (int it = 0; it < 40; ++it) {
    Poly a = oracle::random_poly(X3, 6, 3, rng);
    auto [prim, content] = a.primitive_part();
    CHECK(prim * content == a);
    if (!a.is_zero()) {
      CHECK(prim.leading().coeff > 0);
      Int g = 0;
      for (const Term& t : prim.terms()) {
        CHECK(is_integer(t.coeff));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num().get_mpz_t());
      }
      CHECK(g == 1);
    }
  }
}

TEST_CASE("structural helpers: min_exp, shift_down, substitutions") {
  Poly p = P(X3, "x2*t^3 - x1^2*t^2");
  CHECK(p.min_exp(0) == 2);
  CHECK(p.shift_down(0, 2) == P(X3, "x2*t - x1^2"));
  CHECK(p.substitute_zero(1) == P(X3, "x2*t^3"));
  CHECK(p.substitute_zero(3) == p);

  // Z(8) embeds into ZX(8) with z-slots shifted by one.
  const VarSet Z8 = VarSet::Z(8), ZX8 = VarSet::ZX(8);
  std::vector<int> up(size_t(Z8.size()));
  up[0] = 0;
  for (int v = 1; v < Z8.size(); ++v) up[size_t(v)] = v + 1;
  Poly q = P(Z8, "z2*t - 3*z8");
  Poly qzx = q.rename_vars(ZX8, up);
  CHECK(qzx == P(ZX8, "z2*t - 3*z8"));
  CHECK_THROWS_AS(P(ZX8, "x1").rename_vars(
                      Z8, std::vector<int>{0, -1, 1, 2, 3, 4, 5, 6, 7}),
                  internal_error);
}

TEST_CASE("Laurent wrapper: canonical form and arithmetic") {
  Laurent a(P(X3, "x2*t^2 - x1^2*t"), 3);  // = (x2*t - x1^2)/t^2
  CHECK(a.tpow == 2);
  CHECK(a.num == P(X3, "x2*t - x1^2"));
  Laurent zero(Poly(X3), 5);
  CHECK(zero.tpow == 0);
  CHECK(zero.is_zero());

  Laurent b(P(X3, "x1"), 1);
  Laurent s = a + b;
  // (x2*t - x1^2)/t^2 + x1/t = (x2*t - x1^2 + x1*t)/t^2
  CHECK(s.tpow == 2);
  CHECK(s.num == P(X3, "x2*t + x1*t - x1^2"));
  CHECK((a - a).is_zero());
  Laurent pr = a * b;
  CHECK(pr.tpow == 3);
  CHECK(pr.num == P(X3, "x1*x2*t - x1^3"));
  CHECK((a * rat(0)).is_zero());
  CHECK((a * rat(2)).num == P(X3, "2*x2*t - 2*x1^2"));
}
