#include "covgen/derivation.hpp"

#include <unordered_map>

#include "covgen/util.hpp"

namespace covgen {

Derivation::Derivation(VarSet vs, std::vector<Poly> images)
    : vs_(vs), images_(std::move(images)) {
  check(int(images_.size()) == vs_.size(), "derivation image count");
  for (const Poly& p : images_)
    check(p.varset() == vs_, "derivation image varset");
}

Poly Derivation::apply(const Poly& p) const {
  check(p.varset() == vs_, "derivation applied across varsets");
  Poly acc(vs_);
  for (int v = 0; v < vs_.size(); ++v) {
    if (images_[size_t(v)].is_zero()) continue;
    Poly dv = p.derivative(v);
    if (!dv.is_zero()) acc += dv * images_[size_t(v)];
  }
  return acc;
}

Poly Derivation::apply_iterated(const Poly& p, int times) const {
  Poly q = p;
  for (int i = 0; i < times; ++i) q = apply(q);
  return q;
}

Derivation d1(int d) {
  VarSet vs = VarSet::X(d);
  std::vector<Poly> img(size_t(vs.size()), Poly(vs));
  // d/dx_k carries coefficient k * x_{k-1}, with x_0 meaning t.
  img[1] = Poly::variable(vs, 0);
  for (int k = 2; k <= d; ++k)
    img[size_t(k)] = Poly::variable(vs, k - 1) * Rat(k);
  return Derivation(vs, std::move(img));
}

Derivation d2(int d) {
  VarSet vs = VarSet::X(d);
  std::vector<Poly> img(size_t(vs.size()), Poly(vs));
  img[0] = Poly::variable(vs, 1) * Rat(d);
  for (int k = 1; k <= d - 1; ++k)
    img[size_t(k)] = Poly::variable(vs, k + 1) * Rat(d - k);
  return Derivation(vs, std::move(img));
}

bool is_semi_invariant(int d, const Poly& p) {
  require(p.varset() == VarSet::X(d), "is_semi_invariant needs an X-form");
  return d1(d).apply(p).is_zero();
}

int nilpotency_order(int d, const Poly& p) {
  require(!p.is_zero(), "nilpotency order of zero");
  Derivation raise = d2(d);
  int cap = 0;
  for (const Term& t : p.terms()) cap = std::max(cap, d * t.mono.total());
  Poly q = raise.apply(p);
  int s = 0;
  while (!q.is_zero()) {
    ++s;
    check(s <= cap + 1, "d2 failed to nilpotate");
    q = raise.apply(q);
  }
  auto g = p.grade();
  if (g && is_semi_invariant(d, p)) {
    check(s == d * g->degree - 2 * g->weight,
          "order/grading law violated: got " + std::to_string(s));
  }
  return s;
}

Poly cayley_z(int d, int i) {
  require(i >= 2 && i <= d, "cayley_z index out of range");
  VarSet vs = VarSet::X(d);
  Poly acc(vs);
  for (int k = 0; k <= i - 2; ++k) {
    Monomial m(vs);
    m.set_exp(i - k, 1);
    m.set_exp(1, m.exp(1) + k);
    m.set_exp(0, i - k - 1);
    Rat c = Rat(binomial(unsigned(i), unsigned(k))) * ((k % 2) ? -1 : 1);
    acc += Poly::from_sorted_terms(vs, {{m, c}});
  }
  Monomial last(vs);
  last.set_exp(1, i);
  Rat c = Rat(i - 1) * (((i + 1) % 2) ? -1 : 1);
  acc += Poly::from_sorted_terms(vs, {{last, c}});
  return acc;
}

// ---- z-coordinates ------------------------------------------------------

ZCoordinateMap::ZCoordinateMap(int d) : d_(d), zx_(VarSet::ZX(d)) {
  ximg_.resize(size_t(d) + 1);
  ximg_[1] = Laurent(Poly::variable(zx_, 1));
  Laurent x1 = ximg_[1];
  for (int i = 2; i <= d; ++i) {
    // z_i = sum_{k=0}^{i-2} (-1)^k C(i,k) x_{i-k} x1^k t^{i-k-1}
    //       + (-1)^{i+1} (i-1) x1^i
    // solved for x_i (the k = 0 term): x_i = (z_i - rest) / t^{i-1}.
    Laurent rest{Poly(zx_)};
    for (int k = 1; k <= i - 2; ++k) {
      Rat c = Rat(binomial(unsigned(i), unsigned(k))) * ((k % 2) ? -1 : 1);
      Laurent term = ximg_[size_t(i - k)];
      term = term * Laurent(Poly::variable(zx_, 1, k));
      term = term * Laurent(Poly::variable(zx_, 0, i - k - 1));
      rest = rest + term * c;
    }
    Rat c = Rat(i - 1) * (((i + 1) % 2) ? -1 : 1);
    rest = rest + Laurent(Poly::variable(zx_, 1, i)) * c;
    Laurent zi(Poly::variable(zx_, i));  // slot i of ZX(d) is z_i
    Laurent num = zi - rest;
    ximg_[size_t(i)] = Laurent(num.num, num.tpow + (i - 1));
  }
}

const Laurent& ZCoordinateMap::x_image(int i) const {
  check(i >= 1 && i <= d_, "x_image index");
  return ximg_[size_t(i)];
}

Laurent ZCoordinateMap::apply(const Poly& x_poly) const {
  check(x_poly.varset() == VarSet::X(d_), "z-coordinate map needs an X-form");
  Laurent acc{Poly(zx_)};
  for (const Term& t : x_poly.terms()) {
    Laurent prod(Poly::constant(zx_, t.coeff));
    int et = t.mono.exp(0);
    if (et) prod = prod * Laurent(Poly::variable(zx_, 0, et));
    for (int i = 1; i <= d_; ++i) {
      for (int e = t.mono.exp(i); e > 0; --e) prod = prod * ximg_[size_t(i)];
      if (prod.is_zero()) break;
    }
    acc = acc + prod;
  }
  return acc;
}

// ---- Laurent derivation --------------------------------------------------

LaurentDerivation::LaurentDerivation(VarSet vs, std::vector<Laurent> images)
    : vs_(vs), images_(std::move(images)) {
  check(int(images_.size()) == vs_.size(), "derivation image count");
  for (const Laurent& l : images_)
    check(l.num.varset() == vs_, "derivation image varset");
}

Laurent LaurentDerivation::apply(const Laurent& f, int prune_var,
                                 int prune_above) const {
  check(f.num.varset() == vs_, "derivation applied across varsets");
  // D(N/t^s) = D(N)/t^s - s N D(t)/t^{s+1}, with D(N) by Leibniz over the
  // polynomial variables (t included).
  Laurent acc{Poly(vs_)};
  for (int v = 0; v < vs_.size(); ++v) {
    if (images_[size_t(v)].is_zero()) continue;
    Poly dv = f.num.derivative(v);
    if (dv.is_zero()) continue;
    acc = acc + Laurent(dv * images_[size_t(v)].num,
                        f.tpow + images_[size_t(v)].tpow);
  }
  if (f.tpow > 0 && !images_[0].is_zero()) {
    acc = acc + Laurent(f.num * images_[0].num * Rat(-f.tpow),
                        f.tpow + 1 + images_[0].tpow);
  }
  if (prune_var >= 0 && !acc.is_zero()) {
    std::vector<Term> kept;
    kept.reserve(acc.num.terms().size());
    for (const Term& t : acc.num.terms())
      if (t.mono.exp(prune_var) <= prune_above) kept.push_back(t);
    acc = Laurent(Poly::from_sorted_terms(vs_, std::move(kept)), acc.tpow);
  }
  return acc;
}

LaurentDerivation d2_on_z(int d) {
  ZCoordinateMap phi(d);
  Derivation raise = d2(d);
  const VarSet zx = VarSet::ZX(d);
  std::vector<Laurent> img(size_t(zx.size()), Laurent(Poly(zx)));
  img[0] = phi.apply(raise.image(0));  // d2(t) = d*x1, already z-free
  img[1] = phi.apply(raise.image(1));  // d2(x1) = (d-1) x2
  for (int i = 2; i <= d; ++i) {
    // Slot i of ZX(d) is z_i; transport d2(z_i) through the map. The
    // map must fix each z_i written in X-coordinates — checked here once.
    Laurent zi = phi.apply(cayley_z(d, i));
    check(zi == Laurent(Poly::variable(zx, i)),
          "z-coordinate map does not fix z_" + std::to_string(i));
    img[size_t(i)] = phi.apply(raise.apply(cayley_z(d, i)));
  }
  return LaurentDerivation(zx, std::move(img));
}

Laurent sigma_map(int d, const Poly& a) {
  require(a.varset() == VarSet::X(d), "sigma_map needs an X-form");
  const VarSet vs = VarSet::X(d);
  Derivation lower = d1(d);
  Laurent acc{Poly(vs)};
  Poly cur = a;  // d1^j(a) / j!
  Laurent ratio(-Poly::variable(vs, 1), 1);  // -x1/t
  Laurent pw(Poly::constant(vs, 1));
  for (int j = 0; !cur.is_zero(); ++j) {
    acc = acc + Laurent(cur) * pw;
    pw = pw * ratio;
    cur = lower.apply(cur) / Rat(j + 1);
  }
  return acc;
}

}  // namespace covgen
