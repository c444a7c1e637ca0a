/* Sparse exact-rational multivariate polynomials with a fixed canonical
 * term order (see monomial.hpp), plus a Laurent wrapper for the rings
 * localized at t. Terms are kept sorted leading-first with no zero
 * coefficients; equality is structural.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covgen/monomial.hpp"
#include "covgen/rational.hpp"
#include "covgen/varset.hpp"

namespace covgen {

// Isobaric grading: degree counts coefficient variables, weight is the
// sum of variable indices (see VarSet::weight_of).
struct Grading {
  int degree = 0;
  int weight = 0;
  bool operator==(const Grading& o) const {
    return degree == o.degree && weight == o.weight;
  }
};

struct Term {
  Monomial mono;
  Rat coeff;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(const VarSet& vs) : vs_(vs) {}

  static Poly constant(const VarSet& vs, const Rat& c);
  static Poly variable(const VarSet& vs, int v, int exp = 1);
  static Poly variable(const VarSet& vs, const std::string& name, int exp = 1);

  const VarSet& varset() const { return vs_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading() const {
    check(!terms_.empty(), "leading term of zero polynomial");
    return terms_.front();
  }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly operator/(const Rat& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int v) const;

  // Sum of per-variable gradings, when every term agrees; nullopt for 0
  // (by convention gradable as anything) is NOT used: zero returns the
  // trivial grading {0,0}; a genuinely mixed polynomial returns nullopt.
  std::optional<Grading> grade() const;
  Grading grade_checked() const;
  // Total degree in Y1, Y2 when uniform across terms.
  std::optional<int> y_degree() const;

  // Smallest exponent of variable v over all terms (0 for the zero poly).
  int min_exp(int v) const;
  // Divide every term by v^k; requires min_exp(v) >= k.
  Poly shift_down(int v, int k) const;

  // Drop all terms containing variable v (i.e. substitute v = 0).
  Poly substitute_zero(int v) const;

  // Reinterpret over `to`, sending old slot i to new slot slot_map[i];
  // slot_map[i] == -1 requires exponent 0 everywhere for slot i.
  Poly rename_vars(const VarSet& to, const std::vector<int>& slot_map) const;

  // p == content * primitive, where primitive has coprime integer
  // coefficients and positive leading coefficient. Zero -> (0, 1);
  // constants have primitive part 1.
  std::pair<Poly, Rat> primitive_part() const;

  std::string to_string() const;
  static Poly parse(const VarSet& vs, const std::string& text);

  // Internal/builder access: assumes `terms` canonical (sorted desc,
  // nonzero coefficients). Checked in debug builds only.
  static Poly from_sorted_terms(const VarSet& vs, std::vector<Term> terms);
  // Builds from arbitrary (mono, coeff) pairs: merges and sorts.
  static Poly from_unsorted_terms(const VarSet& vs, std::vector<Term> terms);

 private:
  VarSet vs_;
  std::vector<Term> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// f = num / t^tpow with t the variable at slot 0 of every ring we use.
// Canonical form: num == 0 implies tpow == 0, and never (tpow > 0 with
// every term of num divisible by t).
struct Laurent {
  Poly num;
  int tpow = 0;

  Laurent() = default;
  explicit Laurent(Poly n, int s = 0) : num(std::move(n)), tpow(s) { canonicalize(); }

  bool is_zero() const { return num.is_zero(); }

  void canonicalize() {
    if (num.is_zero()) { tpow = 0; return; }
    check(tpow >= 0, "negative t-power");
    int k = std::min(num.min_exp(0), tpow);
    if (k > 0) { num = num.shift_down(0, k); tpow -= k; }
  }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const Rat& c) const;
  bool operator==(const Laurent& o) const {
    return tpow == o.tpow && num == o.num;
  }
};

}  // namespace covgen
