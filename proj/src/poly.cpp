#include "covgen/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace covgen {

namespace {

void sort_and_squeeze(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return b.mono < a.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i + 1;
    Rat c = ts[i].coeff;
    while (j < ts.size() && ts[j].mono == ts[i].mono) c += ts[j++].coeff;
    if (c != 0) {
      ts[out].mono = ts[i].mono;
      ts[out].coeff = c;
      ++out;
    }
    i = j;
  }
  ts.resize(out);
}

}  // namespace

Poly Poly::constant(const VarSet& vs, const Rat& c) {
  Poly p(vs);
  if (c != 0) p.terms_.push_back({Monomial(vs), c});
  return p;
}

Poly Poly::variable(const VarSet& vs, int v, int exp) {
  check(exp >= 0, "negative exponent");
  Poly p(vs);
  Monomial m(vs);
  m.set_exp(v, exp);
  p.terms_.push_back({m, Rat(1)});
  return p;
}

Poly Poly::variable(const VarSet& vs, const std::string& name, int exp) {
  int v = vs.index_of(name);
  require(v >= 0, "unknown variable: " + name);
  return variable(vs, v, exp);
}

Poly Poly::from_sorted_terms(const VarSet& vs, std::vector<Term> terms) {
  Poly p(vs);
  p.terms_ = std::move(terms);
#ifndef NDEBUG
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    check(p.terms_[i].coeff != 0, "zero coefficient in canonical terms");
    if (i) check(p.terms_[i].mono < p.terms_[i - 1].mono, "terms not sorted");
  }
#endif
  return p;
}

Poly Poly::from_unsorted_terms(const VarSet& vs, std::vector<Term> terms) {
  sort_and_squeeze(terms);
  Poly p(vs);
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::operator-() const {
  Poly r(vs_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check(vs_ == o.vs_, "varset mismatch in +");
  Poly r(vs_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = terms_[i].mono.cmp(o.terms_[j].mono);
    if (c > 0) r.terms_.push_back(terms_[i++]);
    else if (c < 0) r.terms_.push_back(o.terms_[j++]);
    else {
      Rat s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check(vs_ == o.vs_, "varset mismatch in *");
  if (is_zero() || o.is_zero()) return Poly(vs_);
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  acc.reserve(terms_.size() * 2);
  // Iterate with the shorter factor outside: fewer map rehashes.
  const Poly& a = terms_.size() <= o.terms_.size() ? *this : o;
  const Poly& b = terms_.size() <= o.terms_.size() ? o : *this;
  for (const Term& ta : a.terms_)
    for (const Term& tb : b.terms_) {
      Monomial m = ta.mono * tb.mono;
      auto it = acc.find(m);
      if (it == acc.end()) acc.emplace(std::move(m), ta.coeff * tb.coeff);
      else it->second += ta.coeff * tb.coeff;
    }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second != 0) ts.push_back({kv.first, std::move(kv.second)});
  sort_and_squeeze(ts);
  return from_sorted_terms(vs_, std::move(ts));
}

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return Poly(vs_);
  Poly r(vs_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Poly Poly::operator/(const Rat& c) const {
  require(c != 0, "division by zero scalar");
  return *this * (Rat(1) / c);
}

bool Poly::operator==(const Poly& o) const {
  if (!(vs_ == o.vs_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Poly Poly::derivative(int v) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) {
    int e = t.mono.exp(v);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exp(v, e - 1);
    ts.push_back({m, t.coeff * e});
  }
  // Dropping terms preserves the sort order.
  return from_sorted_terms(vs_, std::move(ts));
}

std::optional<Grading> Poly::grade() const {
  Grading g{0, 0};
  bool first = true;
  for (const Term& t : terms_) {
    Grading h{0, 0};
    for (int v = 0; v < vs_.size(); ++v) {
      h.degree += t.mono.exp(v) * vs_.degree_of(v);
      h.weight += t.mono.exp(v) * vs_.weight_of(v);
    }
    if (first) { g = h; first = false; }
    else if (!(g == h)) return std::nullopt;
  }
  return g;
}

Grading Poly::grade_checked() const {
  auto g = grade();
  check(g.has_value(), "polynomial is not isobaric: " + to_string());
  return *g;
}

std::optional<int> Poly::y_degree() const {
  int deg = 0;
  bool first = true;
  for (const Term& t : terms_) {
    int m = 0;
    for (int v = 0; v < vs_.size(); ++v)
      if (vs_.is_y(v)) m += t.mono.exp(v);
    if (first) { deg = m; first = false; }
    else if (m != deg) return std::nullopt;
  }
  return deg;
}

int Poly::min_exp(int v) const {
  if (terms_.empty()) return 0;
  int m = terms_[0].mono.exp(v);
  for (const Term& t : terms_) m = std::min(m, t.mono.exp(v));
  return m;
}

Poly Poly::shift_down(int v, int k) const {
  if (k == 0) return *this;
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) {
    int e = t.mono.exp(v);
    check(e >= k, "shift_down: exponent underflow");
    Monomial m = t.mono;
    m.set_exp(v, e - k);
    ts.push_back({m, t.coeff});
  }
  // Dividing all terms by the same monomial preserves relative order.
  return from_sorted_terms(vs_, std::move(ts));
}

Poly Poly::substitute_zero(int v) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_)
    if (t.mono.exp(v) == 0) ts.push_back(t);
  return from_sorted_terms(vs_, std::move(ts));
}

Poly Poly::rename_vars(const VarSet& to, const std::vector<int>& slot_map) const {
  check(int(slot_map.size()) == vs_.size(), "slot map size mismatch");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(to);
    for (int v = 0; v < vs_.size(); ++v) {
      int e = t.mono.exp(v);
      if (e == 0) continue;
      check(slot_map[v] >= 0, "rename_vars drops a used variable");
      m.set_exp(slot_map[v], m.exp(slot_map[v]) + e);
    }
    ts.push_back({m, t.coeff});
  }
  return from_unsorted_terms(to, std::move(ts));
}

std::pair<Poly, Rat> Poly::primitive_part() const {
  if (is_zero()) return {Poly(vs_), Rat(1)};
  Int num_gcd = 0, den_lcm = 1;
  for (const Term& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coeff.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (terms_.front().coeff < 0) content = -content;
  Poly prim = *this / content;
  check(prim.leading().coeff > 0, "primitive part sign");
  return {std::move(prim), std::move(content)};
}

// ---- printing ----------------------------------------------------------

namespace {

std::string monomial_string(const VarSet& vs, const Monomial& m) {
  std::ostringstream os;
  bool any = false;
  for (int v : vs.display_order()) {
    int e = m.exp(v);
    if (e == 0) continue;
    if (any) os << "*";
    os << vs.name(v);
    if (e > 1) os << "^" << e;
    any = true;
  }
  return any ? os.str() : std::string();
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    std::string ms = monomial_string(vs_, t.mono);
    if (ms.empty()) os << rat_to_string(c);
    else if (c == 1) os << ms;
    else os << rat_to_string(c) << "*" << ms;
    first = false;
  }
  return os.str();
}

// ---- parsing -----------------------------------------------------------

namespace {

struct Parser {
  const VarSet& vs;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw usage_error("parse error at position " + std::to_string(pos) + ": " +
                      what + " in \"" + s + "\"");
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected identifier");
    return s.substr(start, pos - start);
  }

  // factor := integer [/ integer] | var [^ integer]
  void factor(Monomial& mono, Rat& coeff) {
    skip_ws();
    if (pos >= s.size()) fail("expected factor");
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      Int num = integer();
      if (eat('/')) {
        Int den = integer();
        if (den == 0) fail("zero denominator");
        Rat q(num, den);
        q.canonicalize();
        coeff *= q;
      } else {
        coeff *= Rat(num);
      }
      return;
    }
    std::string name = identifier();
    int v = vs.index_of(name);
    if (v < 0) fail("unknown variable " + name);
    int e = 1;
    if (eat('^')) e = static_cast<int>(integer().get_si());
    mono.set_exp(v, mono.exp(v) + e);
  }

  Poly run() {
    std::vector<Term> ts;
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      if (pos >= s.size()) {
        if (first) fail("empty polynomial");
        break;
      }
      int sign = 1;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else if (!first) fail("expected + or -");
      Monomial mono(vs);
      Rat coeff(sign);
      factor(mono, coeff);
      while (eat('*')) factor(mono, coeff);
      if (coeff != 0) ts.push_back({mono, coeff});
      first = false;
    }
    return Poly::from_unsorted_terms(vs, std::move(ts));
  }
};

}  // namespace

Poly Poly::parse(const VarSet& vs, const std::string& text) {
  Parser p{vs, text};
  return p.run();
}

// ---- Laurent -----------------------------------------------------------

Laurent Laurent::operator+(const Laurent& o) const {
  int s = std::max(tpow, o.tpow);
  Poly t1 = Poly::variable(num.varset(), 0, s - tpow);
  Poly t2 = Poly::variable(num.varset(), 0, s - o.tpow);
  return Laurent(num * t1 + o.num * t2, s);
}

Laurent Laurent::operator-(const Laurent& o) const {
  return *this + Laurent(-o.num, o.tpow);
}

Laurent Laurent::operator*(const Laurent& o) const {
  return Laurent(num * o.num, tpow + o.tpow);
}

Laurent Laurent::operator*(const Rat& c) const {
  if (c == 0) return Laurent(Poly(num.varset()), 0);
  return Laurent(num * c, tpow);
}

}  // namespace covgen
