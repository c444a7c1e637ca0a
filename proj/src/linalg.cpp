#include "covgen/linalg.hpp"

#include <algorithm>

#include "covgen/util.hpp"

namespace covgen {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  check(a % p != 0, "inverse of zero residue");
  return powmod(a % p, p - 2, p);
}

u64 mpz_mod_u64(const mpz_class& z, u64 p) {
  mpz_class r = z % mpz_class(p);
  if (r < 0) r += mpz_class(p);
  return r.get_ui();
}

// Residue of a rational; throws mod_disagreement if the denominator
// vanishes mod p (forces the exact fallback path).
u64 rat_mod(const Rat& q, u64 p) {
  u64 den = mpz_mod_u64(q.get_den(), p);
  if (den == 0) throw mod_disagreement("denominator divisible by prime");
  u64 num = mpz_mod_u64(q.get_num(), p);
  return mulmod(num, invmod(den, p), p);
}

// Clears denominators row-wise; entries become mpz.
std::vector<std::vector<Int>> cleared(const RatMatrix& M) {
  std::vector<std::vector<Int>> A;
  A.reserve(M.size());
  for (const auto& row : M) {
    Int l = 1;
    for (const Rat& q : row)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> r;
    r.reserve(row.size());
    for (const Rat& q : row) {
      Rat s = q * Rat(l);
      check(is_integer(s), "clearing failed");
      r.push_back(s.get_num());
    }
    A.push_back(std::move(r));
  }
  return A;
}

}  // namespace

int rank_exact(const RatMatrix& M) {
  if (M.empty()) return 0;
  auto A = cleared(M);
  std::size_t nrows = A.size(), ncols = A[0].size();
  for (const auto& r : A) check(r.size() == ncols, "ragged matrix");
  // Bareiss fraction-free elimination with row pivoting.
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && A[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(A[piv], A[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Int t = A[r][c] * A[i][j] - A[i][c] * A[r][j];
        mpz_divexact(A[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      A[i][c] = 0;
    }
    prev = A[r][c];
    ++r;
  }
  return int(r);
}

std::vector<std::vector<Rat>> nullspace_exact(const RatMatrix& M) {
  if (M.empty()) return {};
  std::size_t ncols = M[0].size();
  // Rational RREF.
  RatMatrix A = M;
  std::vector<int> pivot_of_col(ncols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < A.size(); ++c) {
    std::size_t piv = r;
    while (piv < A.size() && A[piv][c] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[piv], A[r]);
    Rat inv = Rat(1) / A[r][c];
    for (std::size_t j = c; j < ncols; ++j) A[r][j] *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (std::size_t j = c; j < ncols; ++j) A[i][j] -= f * A[r][j];
    }
    pivot_of_col[c] = int(r);
    ++r;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[c] = 1;
    for (std::size_t cc = 0; cc < ncols; ++cc)
      if (pivot_of_col[cc] >= 0) v[cc] = -A[size_t(pivot_of_col[cc])][c];
    // Exact verification against the original matrix.
    for (const auto& row : M) {
      Rat dot = 0;
      for (std::size_t j = 0; j < ncols; ++j) dot += row[j] * v[j];
      check(dot == 0, "nullspace verification failed");
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---- exact incremental echelon -------------------------------------------

ExactEchelon::ExactEchelon(int cols, bool track_combos)
    : cols_(cols), track_(track_combos) {}

bool ExactEchelon::insert(const std::vector<Rat>& row) {
  check(int(row.size()) == cols_, "row width");
  std::vector<Rat> v = row;
  std::vector<Rat> combo;
  if (track_) {
    combo.assign(size_t(inserted_) + 1, Rat(0));
    combo.back() = 1;
  }
  ++inserted_;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rat f = v[size_t(pivot_col_[k])];
    if (f == 0) continue;
    for (int j = pivot_col_[k]; j < cols_; ++j) v[size_t(j)] -= f * rows_[k][size_t(j)];
    if (track_)
      for (std::size_t l = 0; l < combos_[k].size(); ++l)
        combo[l] -= f * combos_[k][l];
  }
  int pc = -1;
  for (int j = 0; j < cols_; ++j)
    if (v[size_t(j)] != 0) { pc = j; break; }
  if (pc < 0) {
    if (track_) {
      combo.resize(size_t(inserted_), Rat(0));
      relations_.push_back(std::move(combo));
    }
    return false;
  }
  Rat inv = Rat(1) / v[size_t(pc)];
  for (int j = pc; j < cols_; ++j) v[size_t(j)] *= inv;
  if (track_) {
    for (auto& c : combo) c *= inv;
    combo.resize(size_t(inserted_), Rat(0));
  }
  // Back-substitute into existing rows to keep the form reduced.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rat f = rows_[k][size_t(pc)];
    if (f == 0) continue;
    for (int j = pc; j < cols_; ++j) rows_[k][size_t(j)] -= f * v[size_t(j)];
    if (track_) {
      combos_[k].resize(size_t(inserted_), Rat(0));
      for (std::size_t l = 0; l < combo.size(); ++l)
        combos_[k][l] -= f * combo[l];
    }
  }
  // Insert keeping pivot columns sorted (stable reduced form).
  std::size_t pos = 0;
  while (pos < pivot_col_.size() && pivot_col_[pos] < pc) ++pos;
  rows_.insert(rows_.begin() + long(pos), std::move(v));
  pivot_col_.insert(pivot_col_.begin() + long(pos), pc);
  if (track_) combos_.insert(combos_.begin() + long(pos), std::move(combo));
  return true;
}

bool ExactEchelon::contains(const std::vector<Rat>& row) const {
  check(int(row.size()) == cols_, "row width");
  std::vector<Rat> v = row;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rat f = v[size_t(pivot_col_[k])];
    if (f == 0) continue;
    for (int j = pivot_col_[k]; j < cols_; ++j) v[size_t(j)] -= f * rows_[k][size_t(j)];
  }
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

// ---- modular twin echelon --------------------------------------------------

ModularEchelon::ModularEchelon(int cols) : cols_(cols) {}

// Reduces `row` in place against echelon `which`; true iff nonzero left.
bool ModularEchelon::reduce(int which, std::vector<u64>& row) const {
  u64 p = which == 0 ? kPrime1 : kPrime2;
  const auto& rows = rows_[which];
  const auto& pivots = pivot_col_[which];
  for (std::size_t k = 0; k < rows.size(); ++k) {
    u64 f = row[size_t(pivots[k])];
    if (f == 0) continue;
    u64 neg = p - f;
    const auto& base = rows[k];
    for (int j = pivots[k]; j < cols_; ++j)
      row[size_t(j)] = (row[size_t(j)] + mulmod(neg, base[size_t(j)], p)) % p;
  }
  for (u64 x : row)
    if (x) return true;
  return false;
}

bool ModularEchelon::insert(const std::vector<Rat>& row) {
  check(int(row.size()) == cols_, "row width");
  std::vector<u64> r1(row.size()), r2(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    r1[j] = rat_mod(row[j], kPrime1);
    r2[j] = rat_mod(row[j], kPrime2);
  }
  bool nz1 = reduce(0, r1), nz2 = reduce(1, r2);
  if (nz1 != nz2)
    throw mod_disagreement("primes disagree on row independence");
  if (!nz1) return false;
  auto push = [&](int which, std::vector<u64>& v) {
    u64 p = which == 0 ? kPrime1 : kPrime2;
    int pc = -1;
    for (int j = 0; j < cols_; ++j)
      if (v[size_t(j)]) { pc = j; break; }
    u64 inv = invmod(v[size_t(pc)], p);
    for (int j = pc; j < cols_; ++j) v[size_t(j)] = mulmod(v[size_t(j)], inv, p);
    rows_[which].push_back(std::move(v));
    pivot_col_[which].push_back(pc);
  };
  push(0, r1);
  push(1, r2);
  return true;
}

bool ModularEchelon::contains(const std::vector<Rat>& row) const {
  check(int(row.size()) == cols_, "row width");
  std::vector<u64> r1(row.size()), r2(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    r1[j] = rat_mod(row[j], kPrime1);
    r2[j] = rat_mod(row[j], kPrime2);
  }
  std::vector<u64> c1 = r1, c2 = r2;
  bool nz1 = reduce(0, c1), nz2 = reduce(1, c2);
  if (nz1 != nz2)
    throw mod_disagreement("primes disagree on membership");
  return !nz1;
}

std::unique_ptr<EchelonSpace> make_echelon(int cols, bool exact,
                                           bool track_combos) {
  if (exact) return std::make_unique<ExactEchelon>(cols, track_combos);
  check(!track_combos, "combo tracking requires the exact echelon");
  return std::make_unique<ModularEchelon>(cols);
}

}  // namespace covgen
