/* Semi-invariants in z-coordinates: f = num / t^tpow with num a polynomial
 * in t, z2..zd. This is the compact working representation — the X-form
 * support of high-degree semi-invariants is enormous, their z-form is not.
 *
 * x_to_z substitutes x1 -> 0, x_i -> z_i / t^{i-1} (valid precisely on
 * ker d1; the round trip with z_to_x is the correctness invariant and is
 * exercised heavily in tests), z_to_x substitutes the X-forms of the z's
 * back and divides by the t-power, which must be exact.
 */
#pragma once

#include "json.hpp"

#include "covgen/derivation.hpp"
#include "covgen/poly.hpp"

namespace covgen {

using ZForm = Laurent;  // numerator over VarSet::Z(d)

ZForm x_to_z(int d, const Poly& semi);
Poly z_to_x(int d, const ZForm& f);

// X-side grading carried by a z-form: t counts (1,0), z_i counts (1,i)
// toward (degree, weight) of the numerator, minus (tpow, 0). Must be
// uniform across terms.
Grading zform_x_grading(int d, const ZForm& f);
// d*degree - 2*weight.
int zform_order(int d, const ZForm& f);

// Numerator replaced by its primitive part; returns the content.
std::pair<ZForm, Rat> zform_primitive(const ZForm& f);

// Embedding into the ZX ring (z-slots shift by one) and back; the inverse
// requires x1-free input.
Laurent z_to_zx(int d, const ZForm& f);
ZForm zx_to_z(int d, const Laurent& f);

nlohmann::ordered_json zform_to_json(int d, const ZForm& f);
ZForm zform_from_json(int d, const nlohmann::json& j);

}  // namespace covgen
