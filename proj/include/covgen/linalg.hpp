/* Exact and modular linear algebra over Q.
 *
 * Low degrees run fully exact (fraction-free Bareiss for ranks, rational
 * Gauss-Jordan for nullspaces and incremental spans). High degrees use
 * row echelon forms modulo two fixed ~2^61 primes; every verdict must be
 * unanimous between the primes, and the caller holds an exact upper
 * bound (the slice dimension) that pinches the true rank from above —
 * together these certify the modular answer. A disagreement between the
 * primes throws, and the caller recomputes the affected block exactly.
 *
 * The primes are deliberately FIXED, not randomized: results must be
 * byte-identical across runs and thread counts.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "covgen/rational.hpp"

namespace covgen {

using RatMatrix = std::vector<std::vector<Rat>>;

constexpr std::uint64_t kPrime1 = 2305843009213693951ull;  // 2^61 - 1
constexpr std::uint64_t kPrime2 = 4179340454199820289ull;  // 29 * 2^57 + 1

// Rank over Q, fraction-free on the denominator-cleared integer matrix.
int rank_exact(const RatMatrix& M);

// Right-nullspace basis (RREF free-column vectors, free columns set to 1
// left-to-right), each vector verified against M exactly.
std::vector<std::vector<Rat>> nullspace_exact(const RatMatrix& M);

// Thrown when the two primes disagree (or a denominator hits a prime);
// the caller falls back to exact arithmetic.
struct mod_disagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class EchelonSpace {
 public:
  virtual ~EchelonSpace() = default;
  // True when the row enlarged the span (it is then absorbed).
  virtual bool insert(const std::vector<Rat>& row) = 0;
  // Membership without insertion.
  virtual bool contains(const std::vector<Rat>& row) const = 0;
  virtual int rank() const = 0;
  virtual int cols() const = 0;
};

// Exact incremental reduced echelon. When track_combos is set, every row
// that reduces to zero yields the combination of previously inserted
// rows (by insertion index) witnessing the relation.
class ExactEchelon : public EchelonSpace {
 public:
  explicit ExactEchelon(int cols, bool track_combos = false);
  bool insert(const std::vector<Rat>& row) override;
  bool contains(const std::vector<Rat>& row) const override;
  int rank() const override { return int(rows_.size()); }
  int cols() const override { return cols_; }
  // Relations among inserted rows: each is a dense vector over insertion
  // indices [0, inserted()).
  const std::vector<std::vector<Rat>>& relations() const { return relations_; }
  int inserted() const { return inserted_; }

 private:
  int cols_;
  bool track_;
  int inserted_ = 0;
  std::vector<std::vector<Rat>> rows_;    // reduced, pivot coeff 1
  std::vector<int> pivot_col_;            // per stored row
  std::vector<std::vector<Rat>> combos_;  // per stored row, over insert idx
  std::vector<std::vector<Rat>> relations_;
};

// Row echelon modulo both fixed primes simultaneously.
class ModularEchelon : public EchelonSpace {
 public:
  explicit ModularEchelon(int cols);
  bool insert(const std::vector<Rat>& row) override;
  bool contains(const std::vector<Rat>& row) const override;
  int rank() const override { return int(pivot_col_[0].size()); }
  int cols() const override { return cols_; }

 private:
  bool reduce(int which, std::vector<std::uint64_t>& row) const;
  int cols_;
  std::vector<std::vector<std::uint64_t>> rows_[2];
  std::vector<int> pivot_col_[2];
};

std::unique_ptr<EchelonSpace> make_echelon(int cols, bool exact,
                                           bool track_combos = false);

}  // namespace covgen
