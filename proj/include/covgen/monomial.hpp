/* Monomials as packed exponent vectors over a VarSet (at most kMaxVars
 * slots, exponents < 2^16 — vastly more than the pipeline ever needs).
 *
 * Fixed term order, used everywhere a polynomial is canonicalized or
 * printed: graded lexicographic — higher total exponent sum first, ties
 * broken at the first variable (in declared order t, x1, x2, ...) whose
 * exponents differ, larger exponent winning. Under this order x2*t beats
 * x1^2, so e.g. x2*t - x1^2 is already sign-canonical.
 */
#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "covgen/varset.hpp"

namespace covgen {

class Monomial {
 public:
  Monomial() : n_(0) { e_.fill(0); }
  explicit Monomial(const VarSet& vs) : n_(vs.size()) { e_.fill(0); }

  int var_count() const { return n_; }
  int exp(int v) const { return e_[v]; }
  void set_exp(int v, int e) {
    check(v >= 0 && v < n_ && e >= 0 && e < (1 << 16), "bad exponent");
    e_[v] = static_cast<std::uint16_t>(e);
  }

  // Total exponent sum (all slots, Y's included).
  int total() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += e_[v];
    return s;
  }

  bool is_one() const {
    for (int v = 0; v < n_; ++v)
      if (e_[v]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    check(n_ == o.n_, "monomial var-count mismatch");
    Monomial r = *this;
    for (int v = 0; v < n_; ++v) {
      int s = int(e_[v]) + int(o.e_[v]);
      check(s < (1 << 16), "exponent overflow");
      r.e_[v] = static_cast<std::uint16_t>(s);
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    check(n_ == o.n_, "monomial var-count mismatch");
    for (int v = 0; v < n_; ++v)
      if (e_[v] > o.e_[v]) return false;
    return true;
  }

  // this / o; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    check(o.divides(*this), "non-exact monomial division");
    Monomial r = *this;
    for (int v = 0; v < n_; ++v) r.e_[v] -= o.e_[v];
    return r;
  }

  bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Graded lex as documented above. Returns <0, 0, >0 like memcmp, with
  // >0 meaning *this is the larger (leading-er) monomial.
  int cmp(const Monomial& o) const {
    check(n_ == o.n_, "monomial var-count mismatch");
    int da = total(), db = o.total();
    if (da != db) return da < db ? -1 : 1;
    for (int v = 0; v < n_; ++v)
      if (e_[v] != o.e_[v]) return e_[v] < o.e_[v] ? -1 : 1;
    return 0;
  }
  bool operator<(const Monomial& o) const { return cmp(o) < 0; }

  std::size_t hash() const {
    // FNV-1a over the active exponent bytes.
    std::size_t h = 1469598103934665603ull;
    for (int v = 0; v < n_; ++v) {
      h ^= static_cast<std::size_t>(e_[v]);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_;
  std::uint8_t n_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace covgen
