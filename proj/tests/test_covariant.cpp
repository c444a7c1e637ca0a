#include "covgen/covariant.hpp"

#include "doctest.h"

using namespace covgen;

namespace {

// A polynomial in t,x,Y1,Y2 is (the expansion of) a covariant iff both
// sl2 equivariance conditions hold:
//   (d1 - Y2 d/dY1) F = 0  and  (d2 - Y1 d/dY2) F = 0.
bool satisfies_covariant_pdes(int d, const Poly& F) {
  const VarSet XY = VarSet::XY(d);
  const VarSet X = VarSet::X(d);
  std::vector<int> up(size_t(X.size()));
  for (int v = 0; v < X.size(); ++v) up[size_t(v)] = v;
  auto lift = [&](const Derivation& D) {
    std::vector<Poly> img(size_t(XY.size()), Poly(XY));
    for (int v = 0; v < X.size(); ++v) img[size_t(v)] = D.image(v).rename_vars(XY, up);
    return Derivation(XY, std::move(img));
  };
  Derivation lo = lift(d1(d)), hi = lift(d2(d));
  int y1 = d + 1, y2 = d + 2;
  Poly e1 = lo.apply(F) - Poly::variable(XY, y2) * F.derivative(y1);
  Poly e2 = hi.apply(F) - Poly::variable(XY, y1) * F.derivative(y2);
  return e1.is_zero() && e2.is_zero();
}

ZForm zf_t(int d) { return ZForm(Poly::variable(VarSet::Z(d), 0)); }

}  // namespace

TEST_CASE("basic form and Roberts lift") {
  Covariant f = basic_form(8);
  CHECK(f.order == 8);
  CHECK(expand(f) ==
        Poly::parse(VarSet::XY(8),
                    "t*Y1^8 + 8*x1*Y1^7*Y2 + 28*x2*Y1^6*Y2^2 + 56*x3*Y1^5*Y2^3"
                    " + 70*x4*Y1^4*Y2^4 + 56*x5*Y1^3*Y2^5 + 28*x6*Y1^2*Y2^6"
                    " + 8*x7*Y1*Y2^7 + x8*Y2^8"));
  CHECK(satisfies_covariant_pdes(8, expand(f)));
  // kappa_inv demands a semi-invariant.
  CHECK_THROWS_AS(kappa_inv(8, Poly::variable(VarSet::X(8), 3)), usage_error);
}

TEST_CASE("transvectants: covariance, symmetry, determination by leading term") {
  int d = 8;
  Covariant f = basic_form(d);
  Covariant h = transvect(f, f, 2);
  CHECK(h.order == 12);
  CHECK(satisfies_covariant_pdes(d, expand(h)));
  Covariant w = transvect(f, h, 3);
  CHECK(w.order == 14);
  CHECK(satisfies_covariant_pdes(d, expand(w)));
  // (F,G)^r == (-1)^r (G,F)^r
  Covariant w2 = transvect(h, f, 3);
  CHECK(expand(w2) == -expand(w));
  Covariant e = transvect(h, f, 4);
  CHECK(expand(transvect(f, h, 4)) == expand(e));
  // A nonzero transvectant is the Roberts lift of its leading coefficient.
  for (const Covariant* c : {&h, &w, &e}) {
    Covariant lifted = kappa_inv(d, kappa(*c));
    CHECK(lifted.order == c->order);
    for (int i = 0; i <= c->order; ++i)
      CHECK(lifted.coeffs[size_t(i)] == c->coeffs[size_t(i)]);
  }
  // Odd transvectant of a covariant with itself vanishes.
  CHECK(transvect(f, f, 3).is_zero());
  CHECK(transvect(h, h, 1).is_zero());
  CHECK_THROWS_AS(transvect(f, h, 9), usage_error);
}

TEST_CASE("the four quadratic semi-invariants of the octavic") {
  const int d = 8;
  const VarSet X = VarSet::X(d);
  LaurentDerivation dz = d2_on_z(d);
  const char* expected[] = {
      "x2*t - x1^2",
      "x4*t - 4*x1*x3 + 3*x2^2",
      "x6*t - 6*x1*x5 + 15*x2*x4 - 10*x3^2",
      "x8*t - 8*x1*x7 + 28*x2*x6 - 56*x3*x5 + 35*x4^2",
  };
  for (int j = 1; j <= 4; ++j) {
    auto direct = semitransvectant(d, zf_t(d), zf_t(d), 2 * j);
    auto fast = semitransvectant_fast(d, dz, zf_t(d), zf_t(d), 2 * j);
    REQUIRE(direct.has_value());
    REQUIRE(fast.has_value());
    CHECK(*direct == *fast);
    Poly xform = z_to_x(d, *fast);
    CHECK(xform == Poly::parse(X, expected[j - 1]));
    CHECK(zform_order(d, *fast) == 16 - 4 * j);
  }
  // Odd indices vanish identically for equal operands.
  for (int r : {1, 3, 5, 7}) {
    CHECK(!semitransvectant(d, zf_t(d), zf_t(d), r).has_value());
    CHECK(!semitransvectant_fast(d, dz, zf_t(d), zf_t(d), r).has_value());
  }
}

TEST_CASE("fast and direct semitransvectants agree on a broad corpus") {
  const int d = 8;
  LaurentDerivation dz = d2_on_z(d);
  // Pool: t, the four quadratics, and a few deeper elements reached from
  // them, including odd transvection indices and a degree-4 element.
  std::vector<ZForm> pool = {zf_t(d)};
  for (int r : {2, 4, 6, 8})
    pool.push_back(*semitransvectant_fast(d, dz, zf_t(d), zf_t(d), r));
  pool.push_back(*semitransvectant_fast(d, dz, zf_t(d), pool[1], 1));
  pool.push_back(*semitransvectant_fast(d, dz, zf_t(d), pool[2], 3));
  pool.push_back(*semitransvectant_fast(d, dz, pool[1], pool[2], 2));
  // A product operand (degree 3) as well.
  pool.push_back(ZForm(pool[1].num * pool[3].num,
                       pool[1].tpow + pool[3].tpow));

  int checked = 0, nonzero = 0;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a; b < pool.size(); ++b) {
      int m = zform_order(d, pool[a]), k = zform_order(d, pool[b]);
      for (int r = 0; r <= std::min({m, k, 6}); ++r) {
        auto fast = semitransvectant_fast(d, dz, pool[a], m, pool[b], k, r);
        auto direct = semitransvectant(d, pool[a], pool[b], r);
        CHECK(fast.has_value() == direct.has_value());
        if (fast && direct) {
          CHECK(*fast == *direct);
          ++nonzero;
        }
        ++checked;
      }
    }
  }
  CHECK(checked >= 100);
  CHECK(nonzero >= 60);
}

TEST_CASE("index-0 semitransvectant is the primitive product") {
  const int d = 8;
  LaurentDerivation dz = d2_on_z(d);
  ZForm a = *semitransvectant_fast(d, dz, zf_t(d), zf_t(d), 2);
  ZForm b = *semitransvectant_fast(d, dz, zf_t(d), zf_t(d), 4);
  auto prod = semitransvectant_fast(d, dz, a, b, 0);
  REQUIRE(prod.has_value());
  CHECK(*prod == zform_primitive(ZForm(a.num * b.num, a.tpow + b.tpow)).first);
}
