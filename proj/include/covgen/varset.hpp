/* Named variable sets for the rings the engine works in.
 *
 * For a form of degree d the coefficient variables are t, x1, ..., xd
 * (t is the leading coefficient). The Cayley variables z2, ..., zd
 * replace the x's on the open set t != 0, with x1 eliminated. Y1, Y2
 * are the form's own variables, carried only by full covariants.
 *
 * Kinds:
 *   X  : t, x1..xd            (semi-invariants, covariant coefficients)
 *   Z  : t, z2..zd            (z-coordinate numerators)
 *   ZX : t, x1, z2..zd        (intermediate ring for the z-side derivation)
 *   XY : t, x1..xd, Y1, Y2    (expanded covariants)
 *   ZY : t, z2..zd, Y1, Y2
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covgen/util.hpp"

namespace covgen {

constexpr int kMaxVars = 16;
constexpr int kMaxFormDegree = 12;

enum class VarKind : std::uint8_t { X, Z, ZX, XY, ZY };

class VarSet {
 public:
  VarSet() : kind_(VarKind::X), d_(0) {}
  VarSet(VarKind kind, int d) : kind_(kind), d_(d) {
    require(d >= 1 && d <= kMaxFormDegree, "form degree out of range");
    check(size() <= kMaxVars, "variable set too large");
  }

  static VarSet X(int d) { return VarSet(VarKind::X, d); }
  static VarSet Z(int d) { return VarSet(VarKind::Z, d); }
  static VarSet ZX(int d) { return VarSet(VarKind::ZX, d); }
  static VarSet XY(int d) { return VarSet(VarKind::XY, d); }
  static VarSet ZY(int d) { return VarSet(VarKind::ZY, d); }

  VarKind kind() const { return kind_; }
  int form_degree() const { return d_; }

  int size() const {
    switch (kind_) {
      case VarKind::X:  return d_ + 1;
      case VarKind::Z:  return d_;      // t, z2..zd
      case VarKind::ZX: return d_ + 1;  // t, x1, z2..zd
      case VarKind::XY: return d_ + 3;
      case VarKind::ZY: return d_ + 2;
    }
    return 0;
  }

  bool operator==(const VarSet& o) const { return kind_ == o.kind_ && d_ == o.d_; }
  bool operator!=(const VarSet& o) const { return !(*this == o); }

  std::string name(int v) const;
  // -1 when `nm` is not a variable of this set.
  int index_of(const std::string& nm) const;

  bool is_y(int v) const;
  // Grading of a single variable: degree counts coefficient variables
  // (t, x_i, z_i) with 1 and Y's with 0; weight is the x/z index (t: 0,
  // Y1: 0, Y2: 1).
  int degree_of(int v) const;
  int weight_of(int v) const;

  // Variable indices in display order: x/z ascending by index, then t,
  // then Y1, Y2 — the customary way (x1*x2*t, x8*t, z2*t^2).
  std::vector<int> display_order() const;

 private:
  VarKind kind_;
  int d_;
};

}  // namespace covgen
