#include "covgen/varset.hpp"

#include <algorithm>

namespace covgen {

namespace {

// Per-kind layout helpers. Each returns the role of slot v as a pair
// (tag, idx) where tag is 't', 'x', 'z' or 'Y' and idx the subscript.
struct Slot {
  char tag;
  int idx;
};

Slot slot_of(VarKind kind, int d, int v) {
  switch (kind) {
    case VarKind::X:
      return v == 0 ? Slot{'t', 0} : Slot{'x', v};
    case VarKind::Z:
      return v == 0 ? Slot{'t', 0} : Slot{'z', v + 1};
    case VarKind::ZX:
      if (v == 0) return {'t', 0};
      if (v == 1) return {'x', 1};
      return {'z', v};
    case VarKind::XY:
      if (v == 0) return {'t', 0};
      if (v <= d) return {'x', v};
      return {'Y', v - d};
    case VarKind::ZY:
      if (v == 0) return {'t', 0};
      if (v <= d - 1) return {'z', v + 1};
      return {'Y', v - (d - 1)};
  }
  throw internal_error("slot_of: bad kind");
}

}  // namespace

std::string VarSet::name(int v) const {
  check(v >= 0 && v < size(), "variable index out of range");
  Slot s = slot_of(kind_, d_, v);
  switch (s.tag) {
    case 't': return "t";
    case 'x': return "x" + std::to_string(s.idx);
    case 'z': return "z" + std::to_string(s.idx);
    case 'Y': return "Y" + std::to_string(s.idx);
  }
  throw internal_error("name: bad slot");
}

int VarSet::index_of(const std::string& nm) const {
  for (int v = 0; v < size(); ++v)
    if (name(v) == nm) return v;
  return -1;
}

bool VarSet::is_y(int v) const {
  return slot_of(kind_, d_, v).tag == 'Y';
}

int VarSet::degree_of(int v) const { return is_y(v) ? 0 : 1; }

int VarSet::weight_of(int v) const {
  Slot s = slot_of(kind_, d_, v);
  switch (s.tag) {
    case 't': return 0;
    case 'x':
    case 'z': return s.idx;
    case 'Y': return s.idx == 2 ? 1 : 0;
  }
  throw internal_error("weight_of: bad slot");
}

std::vector<int> VarSet::display_order() const {
  std::vector<int> xs, ys;
  int t = -1;
  for (int v = 0; v < size(); ++v) {
    Slot s = slot_of(kind_, d_, v);
    if (s.tag == 't') t = v;
    else if (s.tag == 'Y') ys.push_back(v);
    else xs.push_back(v);
  }
  std::sort(xs.begin(), xs.end(), [&](int a, int b) {
    return slot_of(kind_, d_, a).idx < slot_of(kind_, d_, b).idx;
  });
  std::vector<int> out = xs;
  if (t >= 0) out.push_back(t);
  for (int y : ys) out.push_back(y);
  return out;
}

}  // namespace covgen
