#include "covgen/enumerative.hpp"

#include <algorithm>

#include "covgen/util.hpp"

namespace covgen {

namespace {

void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

UniPoly uni_mul(const UniPoly& a, const UniPoly& b, int truncate_deg) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size() + b.size() - 1;
  if (truncate_deg >= 0) n = std::min(n, std::size_t(truncate_deg) + 1);
  UniPoly c(n, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
      c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

UniPoly uni_divexact(const UniPoly& a, const UniPoly& b) {
  check(!b.empty() && (b[0] == 1 || b[0] == -1),
        "uni_divexact needs a unit constant term");
  if (a.empty()) return {};
  check(a.size() >= b.size(), "uni_divexact: degree underflow");
  UniPoly q(a.size() - b.size() + 1, Int(0));
  UniPoly rem = a;
  for (std::size_t j = 0; j < q.size(); ++j) {
    Int qc = rem[j] * b[0];  // b[0] is +-1, its own inverse
    q[j] = qc;
    if (qc == 0) continue;
    for (std::size_t l = 0; l < b.size(); ++l) rem[j + l] -= qc * b[l];
  }
  for (const Int& c : rem) check(c == 0, "uni_divexact: nonzero remainder");
  trim(q);
  return q;
}

UniPoly gaussian_binomial(int d, int i) {
  require(d >= 0 && i >= 0, "gaussian_binomial needs nonnegative arguments");
  // prod_{k=1..i} (1 - T^{d+k}) / (1 - T^k), assembled as one exact
  // division of expanded products.
  UniPoly num = {Int(1)}, den = {Int(1)};
  for (int k = 1; k <= i; ++k) {
    UniPoly f1(size_t(d + k) + 1, Int(0)), f2(size_t(k) + 1, Int(0));
    f1[0] = 1;
    f1[size_t(d + k)] = -1;
    f2[0] = 1;
    f2[size_t(k)] = -1;
    num = uni_mul(num, f1);
    den = uni_mul(den, f2);
  }
  UniPoly q = uni_divexact(num, den);
  check(int(q.size()) == d * i + 1, "gaussian binomial degree");
  return q;
}

long dim_covariants(int d, int i) {
  require(d >= 1 && i >= 0, "dim_covariants domain");
  UniPoly g = gaussian_binomial(d, i);
  std::size_t mid = std::size_t(d * i / 2);
  check(mid < g.size(), "gaussian binomial too short");
  check(g[mid].fits_slong_p(), "dimension overflows long");
  return g[mid].get_si();
}

long dim_covariants_order(int d, int i, int m) {
  require(d >= 1 && i >= 0 && m >= 0, "dim_covariants_order domain");
  if (m > d * i) return 0;
  if ((d * i - m) % 2) return 0;
  int w = (d * i - m) / 2;
  UniPoly g = gaussian_binomial(d, i);
  Int at = w < int(g.size()) ? g[size_t(w)] : Int(0);
  Int below = (w - 1 >= 0 && w - 1 < int(g.size())) ? g[size_t(w - 1)] : Int(0);
  Int diff = at - below;
  check(diff >= 0, "order slice dimension negative");
  check(diff.fits_slong_p(), "dimension overflows long");
  return diff.get_si();
}

long sigma_count(const std::map<int, long>& deltas, int i) {
  require(i >= 1, "sigma_count domain");
  // Coefficient of T^i in prod_k 1/(1-T^k)^{deltas[k]} over degrees k < i.
  UniPoly series = {Int(1)};
  series.resize(size_t(i) + 1, Int(0));
  for (const auto& [k, cnt] : deltas) {
    if (k >= i || k <= 0) continue;
    check(cnt >= 0, "negative generator count");
    // 1/(1-T^k): repeated truncated multiplication, cnt times.
    for (long c = 0; c < cnt; ++c) {
      // series *= sum_j T^{kj} — in-place prefix accumulation.
      for (std::size_t j = size_t(k); j <= size_t(i); ++j)
        series[j] += series[j - size_t(k)];
    }
  }
  check(series[size_t(i)].fits_slong_p(), "sigma overflows long");
  return series[size_t(i)].get_si();
}

}  // namespace covgen
