/* The sl2 pair of Weitzenbock derivations on the coefficient ring of a
 * binary form of degree d, written on variables t, x1, ..., xd:
 *
 *   d1 = t d/dx1 + 2 x1 d/dx2 + ... + d x_{d-1} d/dxd   (lowers weight)
 *   d2 = d x1 d/dt + (d-1) x2 d/dx1 + ... + x_d d/dx_{d-1}  (raises weight)
 *
 * Semi-invariants are exactly ker d1. On an isobaric element of degree g
 * and weight w the commutator [d1, d2] acts by the scalar d*g - 2w, which
 * is also the largest s with d2^s != 0 on a semi-invariant ("order").
 *
 * The Cayley polynomials z_2..z_d are semi-invariant coordinates on the
 * open set t != 0 with x1 eliminated; to_z_coords is the corresponding
 * ring map into C[t, x1, z2..zd][1/t], and d2_on_z is d2 transported
 * through it (computed here, never transcribed).
 */
#pragma once

#include <vector>

#include "covgen/poly.hpp"

namespace covgen {

class Derivation {
 public:
  Derivation(VarSet vs, std::vector<Poly> images);
  const VarSet& varset() const { return vs_; }
  const Poly& image(int v) const { return images_[size_t(v)]; }
  Poly apply(const Poly& p) const;
  Poly apply_iterated(const Poly& p, int times) const;

 private:
  VarSet vs_;
  std::vector<Poly> images_;
};

Derivation d1(int d);
Derivation d2(int d);

bool is_semi_invariant(int d, const Poly& p);

// Largest s with d2^s(p) != 0. Requires p != 0. For an isobaric
// semi-invariant this equals d*deg - 2*wt, and that identity is checked.
int nilpotency_order(int d, const Poly& p);

// Cayley's z_i as a polynomial in t, x1..xd (2 <= i <= d): an isobaric
// semi-invariant of degree i and weight i.
Poly cayley_z(int d, int i);

// x_i -> z-coordinate images: x1 -> x1, and for i >= 2 the Laurent
// solution of the z_i equation. apply() extends multiplicatively to any
// polynomial in C[t, x1..xd], landing in C[t, x1, z2..zd][1/t].
class ZCoordinateMap {
 public:
  explicit ZCoordinateMap(int d);
  int form_degree() const { return d_; }
  const VarSet& target() const { return zx_; }
  const Laurent& x_image(int i) const;  // 1 <= i <= d
  Laurent apply(const Poly& x_poly) const;

 private:
  int d_;
  VarSet zx_;
  std::vector<Laurent> ximg_;  // index 1..d
};

// A derivation of C[t, x1, z2..zd][1/t] given by Laurent images of the
// generators (slot order of VarSet::ZX).
class LaurentDerivation {
 public:
  LaurentDerivation(VarSet vs, std::vector<Laurent> images);
  const VarSet& varset() const { return vs_; }
  const Laurent& image(int v) const { return images_[size_t(v)]; }
  // Terms of the result whose exponent of `prune_var` exceeds
  // `prune_above` are dropped when prune_var >= 0 (used by iterated
  // applications that end in a substitution prune_var = 0).
  Laurent apply(const Laurent& f, int prune_var = -1, int prune_above = 0) const;

 private:
  VarSet vs_;
  std::vector<Laurent> images_;
};

// d2 transported to z-coordinates via ZCoordinateMap(d).
LaurentDerivation d2_on_z(int d);

// The series sum_j d1^j(a)/j! * (-x1/t)^j (finite: d1 is nilpotent).
// Fixes semi-invariants; sends x_i to z_i / t^{i-1}.
Laurent sigma_map(int d, const Poly& a);

}  // namespace covgen
