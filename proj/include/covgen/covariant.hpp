/* Covariants of the binary form as coefficient lists: a covariant of
 * order m is F = sum_{i=0..m} c_i Y1^{m-i} Y2^i with c_i in C[t,x1..xd]
 * and c_i = d2^i(c_0) / i!. The leading coefficient c_0 is a
 * semi-invariant and determines F (kappa/kappa_inv are the two
 * directions of that bijection).
 *
 * Transvectants are computed on coefficient lists; semitransvectants
 * [f,g]^r are the primitive-normalized leading coefficients of the
 * corresponding transvectants, computed either via the full lift
 * (semitransvectant, the reference route) or directly in z-coordinates
 * via the transported d2 (semitransvectant_fast, the production route).
 * Both agree exactly; the test suite enforces it.
 */
#pragma once

#include <optional>

#include "covgen/derivation.hpp"
#include "covgen/zform.hpp"

namespace covgen {

struct Covariant {
  int d = 0;
  int order = 0;
  std::vector<Poly> coeffs;  // size order+1, over VarSet::X(d)

  bool is_zero() const {
    for (const Poly& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }
};

// Roberts lift of a semi-invariant (isobaric, d1-killed): the unique
// covariant with leading coefficient `semi`. Checks d2^(m+1)(semi) == 0.
Covariant kappa_inv(int d, const Poly& semi);
Covariant kappa_inv(int d, const ZForm& f);

// Leading coefficient.
const Poly& kappa(const Covariant& F);

// Full expansion over VarSet::XY(d), mostly for tests and display.
Poly expand(const Covariant& F);

// The covariant of the generic form itself, kappa_inv(t).
Covariant basic_form(int d);

// r-th transvectant on coefficient lists; requires 0 <= r <= min(orders).
Covariant transvect(const Covariant& F, const Covariant& G, int r);

// [f,g]^r, primitive-normalized; nullopt when identically zero.
// The reference route through X-forms:
std::optional<ZForm> semitransvectant(int d, const ZForm& f, const ZForm& g,
                                      int r);
// The production route, entirely in z-coordinates. `dz` must be
// d2_on_z(d); orders m, k of f, g are passed in to avoid recomputation.
std::optional<ZForm> semitransvectant_fast(int d, const LaurentDerivation& dz,
                                           const ZForm& f, int m,
                                           const ZForm& g, int k, int r);
std::optional<ZForm> semitransvectant_fast(int d, const LaurentDerivation& dz,
                                           const ZForm& f, const ZForm& g,
                                           int r);

}  // namespace covgen
