/* Counting side of the pipeline, all exact integer arithmetic:
 *
 *  - dim_covariants(d, i): dimension of the space of covariants of the
 *    degree-d form that are homogeneous of degree i in its coefficients.
 *    Equals the central coefficient of the Gaussian binomial [d+i, i]_T,
 *    i.e. the number of partitions of floor(d*i/2) into at most i parts
 *    each at most d.
 *  - dim_covariants_order(d, i, m): the slice of fixed order m, a
 *    difference of two adjacent coefficients of the same polynomial.
 *  - sigma_count(deltas, i): number of degree-i monomials in a free
 *    commutative algebra with deltas[k] generators of degree k < i, read
 *    off the product of 1/(1-T^k)^deltas[k].
 */
#pragma once

#include <map>
#include <vector>

#include "covgen/rational.hpp"

namespace covgen {

// Dense univariate integer polynomials (coeff of T^j at index j).
using UniPoly = std::vector<Int>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b, int truncate_deg = -1);
// Quotient of exact division (checked): b must have constant term +-1
// here, which covers every use below.
UniPoly uni_divexact(const UniPoly& a, const UniPoly& b);

// The Gaussian binomial [d+i choose i]_T as an integer polynomial.
UniPoly gaussian_binomial(int d, int i);

long dim_covariants(int d, int i);
long dim_covariants_order(int d, int i, int m);

// deltas: generator counts by degree (only degrees < i matter).
long sigma_count(const std::map<int, long>& deltas, int i);

struct DimensionRow {
  int i = 0;
  long dim_c = 0;   // dim of the degree-i covariant slice
  long sigma = 0;   // product monomials of degree i
  long dim_s = 0;   // relations among those products
  long delta = 0;   // new generators needed: dim_c - sigma + dim_s
};

}  // namespace covgen
