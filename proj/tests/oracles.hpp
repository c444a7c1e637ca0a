/* Independent (deliberately naive) reference implementations used only to
 * cross-check the engine in tests, plus deterministic random generators. */
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "covgen/poly.hpp"

namespace covgen::oracle {

// Map-based schoolbook product, no shared code with Poly::operator*.
inline Poly naive_mul(const Poly& a, const Poly& b) {
  std::map<std::vector<int>, Rat> acc;
  for (const Term& ta : a.terms())
    for (const Term& tb : b.terms()) {
      std::vector<int> key(size_t(a.varset().size()));
      for (int v = 0; v < a.varset().size(); ++v)
        key[size_t(v)] = ta.mono.exp(v) + tb.mono.exp(v);
      acc[key] += ta.coeff * tb.coeff;
    }
  std::vector<Term> ts;
  for (auto& [key, c] : acc) {
    if (c == 0) continue;
    Monomial m(a.varset());
    for (int v = 0; v < a.varset().size(); ++v) m.set_exp(v, key[size_t(v)]);
    ts.push_back({m, c});
  }
  return Poly::from_unsorted_terms(a.varset(), std::move(ts));
}

inline Poly random_poly(const VarSet& vs, int nterms, int maxexp,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp_dist(0, maxexp);
  std::uniform_int_distribution<long> num_dist(-12, 12);
  std::uniform_int_distribution<long> den_dist(1, 6);
  std::vector<Term> ts;
  for (int i = 0; i < nterms; ++i) {
    Monomial m(vs);
    for (int v = 0; v < vs.size(); ++v) m.set_exp(v, exp_dist(rng));
    Rat c(num_dist(rng), den_dist(rng));
    c.canonicalize();
    if (c != 0) ts.push_back({m, c});
  }
  return Poly::from_unsorted_terms(vs, std::move(ts));
}

// Number of partitions of n into at most `parts` parts, each at most `cap`,
// by direct enumeration over the largest part (test sizes are tiny).
inline long bounded_partitions(int n, int parts, int cap) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  if (parts == 0) return 0;
  long c = 0;
  for (int k = std::min(n, cap); k >= 1; --k)
    c += bounded_partitions(n - k, parts - 1, k);
  return c;
}

}  // namespace covgen::oracle
