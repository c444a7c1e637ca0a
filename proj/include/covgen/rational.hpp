/* Exact rational scalars. Thin aliases over GMP's mpq_class: canonical
 * lowest-terms form with positive denominator is maintained by GMP. */
#pragma once

#include <string>

#include <gmpxx.h>

#include "covgen/util.hpp"

namespace covgen {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  require(den != 0, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "n" or "n/d" with optional sign.
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw usage_error("bad rational literal: " + s);
  require(r.get_den() != 0, "rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace covgen
