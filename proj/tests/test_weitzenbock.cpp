#include "covgen/derivation.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace covgen;

namespace {

Monomial random_monomial(const VarSet& vs, int maxexp, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, maxexp);
  Monomial m(vs);
  for (int v = 0; v < vs.size(); ++v) m.set_exp(v, dist(rng));
  return m;
}

}  // namespace

TEST_CASE("d1/d2 images") {
  Derivation lo = d1(8), hi = d2(8);
  const VarSet X = VarSet::X(8);
  CHECK(lo.image(0).is_zero());
  CHECK(lo.image(1) == Poly::parse(X, "t"));
  CHECK(lo.image(2) == Poly::parse(X, "2*x1"));
  CHECK(lo.image(8) == Poly::parse(X, "8*x7"));
  CHECK(hi.image(0) == Poly::parse(X, "8*x1"));
  CHECK(hi.image(1) == Poly::parse(X, "7*x2"));
  CHECK(hi.image(7) == Poly::parse(X, "x8"));
  CHECK(hi.image(8).is_zero());
}

TEST_CASE("derivations are derivations, and [d1,d2] is the grading operator") {
  std::mt19937_64 rng(4242);
  for (int d : {3, 5, 8}) {
    Derivation lo = d1(d), hi = d2(d);
    const VarSet X = VarSet::X(d);
    for (int it = 0; it < 12; ++it) {
      Poly a = oracle::random_poly(X, 5, 2, rng);
      Poly b = oracle::random_poly(X, 5, 2, rng);
      CHECK(lo.apply(a * b) == lo.apply(a) * b + a * lo.apply(b));
      CHECK(hi.apply(a * b) == hi.apply(a) * b + a * hi.apply(b));
      CHECK(lo.apply(a + b) == lo.apply(a) + lo.apply(b));
    }
    // On an isobaric element of degree g, weight w:
    // (d1 d2 - d2 d1)(p) = (d*g - 2w) p. Monomials are isobaric.
    for (int it = 0; it < 20; ++it) {
      Monomial m = random_monomial(X, 2, rng);
      Poly p = Poly::from_sorted_terms(X, {{m, rat(1)}});
      Grading g = p.grade_checked();
      Poly comm = lo.apply(hi.apply(p)) - hi.apply(lo.apply(p));
      CHECK(comm == p * Rat(d * g.degree - 2 * g.weight));
    }
  }
}

TEST_CASE("cayley z polynomials") {
  const VarSet X = VarSet::X(8);
  CHECK(cayley_z(8, 2) == Poly::parse(X, "x2*t - x1^2"));
  CHECK(cayley_z(8, 3) == Poly::parse(X, "x3*t^2 - 3*x1*x2*t + 2*x1^3"));
  CHECK(cayley_z(8, 4) ==
        Poly::parse(X, "x4*t^3 - 4*x1*x3*t^2 + 6*x1^2*x2*t - 3*x1^4"));
  for (int d : {4, 6, 8}) {
    for (int i = 2; i <= d; ++i) {
      Poly z = cayley_z(d, i);
      CAPTURE(d);
      CAPTURE(i);
      CHECK(is_semi_invariant(d, z));
      Grading g = z.grade_checked();
      CHECK(g.degree == i);
      CHECK(g.weight == i);
    }
  }
  CHECK_THROWS_AS(cayley_z(8, 1), usage_error);
  CHECK_THROWS_AS(cayley_z(8, 9), usage_error);
}

TEST_CASE("nilpotency order: iteration agrees with d*deg - 2*wt") {
  CHECK(nilpotency_order(8, Poly::variable(VarSet::X(8), 0)) == 8);
  CHECK(nilpotency_order(3, Poly::variable(VarSet::X(3), 0)) == 3);
  for (int i = 2; i <= 5; ++i)
    CHECK(nilpotency_order(8, cayley_z(8, i)) == 6 * i);
  // Products: orders add for semi-invariants.
  Poly p = cayley_z(8, 2) * cayley_z(8, 3);
  CHECK(nilpotency_order(8, p) == 30);
  CHECK_THROWS_AS(nilpotency_order(8, Poly(VarSet::X(8))), usage_error);
}

TEST_CASE("z-coordinate map fixes the z polynomials and commutes with d2") {
  for (int d : {3, 5, 8}) {
    ZCoordinateMap phi(d);
    const VarSet ZX = VarSet::ZX(d);
    // x1 goes to itself; x2 to (z2 + x1^2)/t.
    CHECK(phi.x_image(1) == Laurent(Poly::variable(ZX, 1)));
    CHECK(phi.x_image(2) == Laurent(Poly::parse(ZX, "z2 + x1^2"), 1));
    for (int i = 2; i <= d; ++i)
      CHECK(phi.apply(cayley_z(d, i)) == Laurent(Poly::variable(ZX, i)));
    // Transport property: phi(d2 p) == (d2 on z)(phi p) for arbitrary p.
    LaurentDerivation dz = d2_on_z(d);
    Derivation hi = d2(d);
    std::mt19937_64 rng(1000 + unsigned(d));
    for (int it = 0; it < 8; ++it) {
      Poly p = oracle::random_poly(VarSet::X(d), 4, 2, rng);
      CHECK(phi.apply(hi.apply(p)) == dz.apply(phi.apply(p)));
    }
  }
}

TEST_CASE("transported d2 is a derivation on Laurent elements") {
  LaurentDerivation dz = d2_on_z(8);
  const VarSet ZX = VarSet::ZX(8);
  std::mt19937_64 rng(77);
  for (int it = 0; it < 10; ++it) {
    Laurent a(oracle::random_poly(ZX, 4, 2, rng), it % 3);
    Laurent b(oracle::random_poly(ZX, 4, 2, rng), it % 2);
    CHECK(dz.apply(a * b) == dz.apply(a) * b + a * dz.apply(b));
    CHECK(dz.apply(a + b) == dz.apply(a) + dz.apply(b));
  }
}

TEST_CASE("sigma series fixes semi-invariants and produces z/t^(i-1)") {
  for (int d : {4, 8}) {
    const VarSet X = VarSet::X(d);
    for (int i = 2; i <= d; ++i) {
      Laurent s = sigma_map(d, Poly::variable(X, i));
      CHECK(s == Laurent(cayley_z(d, i), i - 1));
    }
    CHECK(sigma_map(d, cayley_z(d, 2)) == Laurent(cayley_z(d, 2)));
    CHECK(sigma_map(d, Poly::variable(X, 0)) == Laurent(Poly::variable(X, 0)));
  }
}
