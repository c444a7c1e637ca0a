#include "covgen/covariant.hpp"

namespace covgen {

Covariant kappa_inv(int d, const Poly& semi) {
  require(semi.varset() == VarSet::X(d), "kappa_inv needs an X-form");
  require(is_semi_invariant(d, semi), "kappa_inv: not in ker d1");
  Covariant F;
  F.d = d;
  if (semi.is_zero()) {
    F.order = 0;
    F.coeffs = {semi};
    return F;
  }
  Grading g = semi.grade_checked();
  int m = d * g.degree - 2 * g.weight;
  check(m >= 0, "semi-invariant with negative order");
  F.order = m;
  F.coeffs.reserve(size_t(m) + 1);
  F.coeffs.push_back(semi);
  Derivation raise = d2(d);
  for (int i = 1; i <= m; ++i)
    F.coeffs.push_back(raise.apply(F.coeffs.back()) / Rat(i));
  check(raise.apply(F.coeffs.back()).is_zero(),
        "kappa_inv: d2 does not nilpotate at the stated order");
  return F;
}

Covariant kappa_inv(int d, const ZForm& f) { return kappa_inv(d, z_to_x(d, f)); }

const Poly& kappa(const Covariant& F) {
  check(!F.coeffs.empty(), "kappa of empty covariant");
  return F.coeffs.front();
}

Poly expand(const Covariant& F) {
  const VarSet XY = VarSet::XY(F.d);
  const VarSet X = VarSet::X(F.d);
  std::vector<int> up(size_t(X.size()));
  for (int v = 0; v < X.size(); ++v) up[size_t(v)] = v;
  Poly acc(XY);
  for (int i = 0; i <= F.order; ++i) {
    if (F.coeffs[size_t(i)].is_zero()) continue;
    Poly c = F.coeffs[size_t(i)].rename_vars(XY, up);
    acc += c * Poly::variable(XY, F.d + 1, F.order - i) *
           Poly::variable(XY, F.d + 2, i);
  }
  return acc;
}

Covariant basic_form(int d) {
  return kappa_inv(d, Poly::variable(VarSet::X(d), 0));
}

Covariant transvect(const Covariant& F, const Covariant& G, int r) {
  require(F.d == G.d, "transvectant across different form degrees");
  require(r >= 0 && r <= std::min(F.order, G.order),
          "transvectant index out of range");
  const int M = F.order, K = G.order, d = F.d;
  Covariant W;
  W.d = d;
  W.order = M + K - 2 * r;
  W.coeffs.assign(size_t(W.order) + 1, Poly(VarSet::X(d)));
  // (F,G)^r = sum_i (-1)^i C(r,i) d^rF/dY1^{r-i}dY2^i * d^rG/dY1^i dY2^{r-i};
  // collecting the coefficient of Y1^{order-e} Y2^e gives, with a+b = e+r:
  //   W_e = sum_i (-1)^i C(r,i) sum_{a+b=e+r}
  //         [M-a]_{r-i} [a]_i [K-b]_i [b]_{r-i} F_a G_b.
  for (int e = 0; e <= W.order; ++e) {
    Poly acc(VarSet::X(d));
    for (int a = 0; a <= M; ++a) {
      int b = e + r - a;
      if (b < 0 || b > K) continue;
      if (F.coeffs[size_t(a)].is_zero() || G.coeffs[size_t(b)].is_zero())
        continue;
      Rat scal = 0;
      for (int i = 0; i <= r; ++i) {
        Int term = binomial(unsigned(r), unsigned(i)) *
                   falling(M - a, unsigned(r - i)) * falling(a, unsigned(i)) *
                   falling(K - b, unsigned(i)) * falling(b, unsigned(r - i));
        scal += Rat((i % 2) ? -term : term);
      }
      if (scal != 0) acc += F.coeffs[size_t(a)] * G.coeffs[size_t(b)] * scal;
    }
    W.coeffs[size_t(e)] = std::move(acc);
  }
  return W;
}

std::optional<ZForm> semitransvectant(int d, const ZForm& f, const ZForm& g,
                                      int r) {
  Covariant F = kappa_inv(d, f), G = kappa_inv(d, g);
  Covariant W = transvect(F, G, r);
  if (W.is_zero()) return std::nullopt;
  check(!kappa(W).is_zero(),
        "nonzero covariant with zero leading coefficient");
  return zform_primitive(x_to_z(d, kappa(W))).first;
}

std::optional<ZForm> semitransvectant_fast(int d, const LaurentDerivation& dz,
                                           const ZForm& f, int m,
                                           const ZForm& g, int k, int r) {
  require(r >= 0 && r <= std::min(m, k),
          "semitransvectant index out of range");
  // In z-coordinates the leading coefficient of (kappa_inv f, kappa_inv g)^r
  // is proportional (by the positive factor [m]_r [k]_r) to
  //   sum_i (-1)^i C(r,i) (d2^i f / [m]_i) (d2^{r-i} g / [k]_{r-i})
  // restricted to x1 = 0. Iterated d2 images are computed with terms of
  // x1-exponent above the reachable range pruned.
  const VarSet ZX = VarSet::ZX(d);
  auto images = [&](const ZForm& h) {
    std::vector<Laurent> A;
    A.reserve(size_t(r) + 1);
    Laurent cur = z_to_zx(d, h);
    for (int j = 0; j <= r; ++j) {
      Laurent restricted(cur.num.substitute_zero(1), cur.tpow);
      A.push_back(std::move(restricted));
      if (j < r) cur = dz.apply(cur, 1, r - (j + 1));
    }
    return A;
  };
  std::vector<Laurent> A = images(f), B = images(g);
  Laurent acc{Poly(ZX)};
  for (int i = 0; i <= r; ++i) {
    if (A[size_t(i)].is_zero() || B[size_t(r - i)].is_zero()) continue;
    Rat c = Rat(binomial(unsigned(r), unsigned(i))) /
            Rat(falling(m, unsigned(i)) * falling(k, unsigned(r - i)));
    if (i % 2) c = -c;
    acc = acc + A[size_t(i)] * B[size_t(r - i)] * c;
  }
  if (acc.is_zero()) return std::nullopt;
  ZForm out = zform_primitive(zx_to_z(d, acc)).first;
  check(zform_order(d, out) == m + k - 2 * r,
        "semitransvectant order law violated");
  return out;
}

std::optional<ZForm> semitransvectant_fast(int d, const LaurentDerivation& dz,
                                           const ZForm& f, const ZForm& g,
                                           int r) {
  return semitransvectant_fast(d, dz, f, zform_order(d, f), g,
                               zform_order(d, g), r);
}

}  // namespace covgen
