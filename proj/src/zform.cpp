#include "covgen/zform.hpp"

namespace covgen {

namespace {

std::vector<int> z_up_map(int d) {
  // Z(d) slot v -> ZX(d) slot: t stays, z_i shifts past x1.
  std::vector<int> up(size_t(VarSet::Z(d).size()));
  up[0] = 0;
  for (int v = 1; v < VarSet::Z(d).size(); ++v) up[size_t(v)] = v + 1;
  return up;
}

std::vector<int> z_down_map(int d) {
  std::vector<int> down(size_t(VarSet::ZX(d).size()));
  down[0] = 0;
  down[1] = -1;  // x1 must not occur
  for (int v = 2; v < VarSet::ZX(d).size(); ++v) down[size_t(v)] = v - 1;
  return down;
}

}  // namespace

ZForm x_to_z(int d, const Poly& semi) {
  require(semi.varset() == VarSet::X(d), "x_to_z needs an X-form");
  {
    Poly witness = d1(d).apply(semi);
    if (!witness.is_zero())
      throw usage_error("x_to_z: not a semi-invariant; d1 image = " +
                        witness.to_string());
  }
  const VarSet Z = VarSet::Z(d);
  // Substitute x1 -> 0, x_i -> z_i / t^(i-1): a term with exponents
  // (e_t; e_1..e_d) maps to t^e_t * prod z_i^{e_i} / t^{sum (i-1) e_i}.
  Laurent acc{Poly(Z)};
  std::vector<Term> bucket;
  int max_shift = 0;
  for (const Term& t : semi.terms()) {
    if (t.mono.exp(1) > 0) continue;
    int shift = 0;
    for (int i = 2; i <= d; ++i) shift += (i - 1) * t.mono.exp(i);
    max_shift = std::max(max_shift, shift);
  }
  for (const Term& t : semi.terms()) {
    if (t.mono.exp(1) > 0) continue;
    Monomial m(Z);
    int shift = 0;
    for (int i = 2; i <= d; ++i) {
      int e = t.mono.exp(i);
      if (e) {
        m.set_exp(i - 1, e);  // Z(d) slot of z_i is i-1
        shift += (i - 1) * e;
      }
    }
    m.set_exp(0, t.mono.exp(0) + (max_shift - shift));
    bucket.push_back({m, t.coeff});
  }
  return ZForm(Poly::from_unsorted_terms(Z, std::move(bucket)), max_shift);
}

Poly z_to_x(int d, const ZForm& f) {
  require(f.num.varset() == VarSet::Z(d), "z_to_x needs a z-form");
  const VarSet X = VarSet::X(d);
  if (f.is_zero()) return Poly(X);
  std::vector<Poly> zpow_cache(size_t(d) + 1, Poly(X));
  Poly acc(X);
  for (const Term& t : f.num.terms()) {
    Poly prod = Poly::constant(X, t.coeff);
    int et = t.mono.exp(0);
    if (et) prod *= Poly::variable(X, 0, et);
    for (int i = 2; i <= d; ++i) {
      int e = t.mono.exp(i - 1);
      for (int k = 0; k < e; ++k) prod *= cayley_z(d, i);
    }
    acc += prod;
  }
  check(acc.min_exp(0) >= f.tpow, "z_to_x: t-power does not divide");
  return acc.shift_down(0, f.tpow);
}

Grading zform_x_grading(int d, const ZForm& f) {
  require(f.num.varset() == VarSet::Z(d), "zform_x_grading needs a z-form");
  check(!f.is_zero(), "grading of the zero z-form");
  Grading g{0, 0};
  bool first = true;
  for (const Term& t : f.num.terms()) {
    int deg = t.mono.exp(0), wt = 0;
    for (int i = 2; i <= d; ++i) {
      deg += i * t.mono.exp(i - 1);
      wt += i * t.mono.exp(i - 1);
    }
    Grading h{deg - f.tpow, wt};
    if (first) { g = h; first = false; }
    else check(g == h, "z-form is not isobaric");
  }
  return g;
}

int zform_order(int d, const ZForm& f) {
  Grading g = zform_x_grading(d, f);
  int ord = d * g.degree - 2 * g.weight;
  check(ord >= 0, "negative order");
  return ord;
}

std::pair<ZForm, Rat> zform_primitive(const ZForm& f) {
  auto [prim, content] = f.num.primitive_part();
  return {ZForm(std::move(prim), f.tpow), content};
}

Laurent z_to_zx(int d, const ZForm& f) {
  return Laurent(f.num.rename_vars(VarSet::ZX(d), z_up_map(d)), f.tpow);
}

ZForm zx_to_z(int d, const Laurent& f) {
  return ZForm(f.num.rename_vars(VarSet::Z(d), z_down_map(d)), f.tpow);
}

nlohmann::ordered_json zform_to_json(int d, const ZForm& f) {
  const VarSet Z = VarSet::Z(d);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const Term& t : f.num.terms()) {
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    for (int v = 0; v < Z.size(); ++v)
      if (t.mono.exp(v)) e[Z.name(v)] = t.mono.exp(v);
    terms.push_back({{"exponents", std::move(e)},
                     {"num", t.coeff.get_num().get_str()},
                     {"den", t.coeff.get_den().get_str()}});
  }
  return {{"tpow", f.tpow}, {"terms", std::move(terms)}};
}

ZForm zform_from_json(int d, const nlohmann::json& j) {
  const VarSet Z = VarSet::Z(d);
  require(j.contains("tpow") && j.contains("terms"), "z-form JSON shape");
  std::vector<Term> ts;
  for (const auto& jt : j.at("terms")) {
    Monomial m(Z);
    for (auto it = jt.at("exponents").begin(); it != jt.at("exponents").end(); ++it) {
      int v = Z.index_of(it.key());
      require(v >= 0, "z-form JSON: unknown variable " + it.key());
      m.set_exp(v, it.value().get<int>());
    }
    Rat c(Int(jt.at("num").get<std::string>()),
          Int(jt.at("den").get<std::string>()));
    c.canonicalize();
    require(c != 0, "z-form JSON: zero coefficient term");
    ts.push_back({m, c});
  }
  ZForm f(Poly::from_unsorted_terms(Z, std::move(ts)), j.at("tpow").get<int>());
  check(f.tpow == j.at("tpow").get<int>(), "z-form JSON not canonical");
  return f;
}

}  // namespace covgen
