#include "covgen/search.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "covgen/derivation.hpp"
#include "covgen/linalg.hpp"
#include "covgen/reference_data.hpp"
#include "covgen/util.hpp"

namespace covgen {

std::string mode_name(Mode m) {
  return m == Mode::Generic ? "generic" : "paper";
}

Mode mode_from_name(const std::string& s) {
  if (s == "generic") return Mode::Generic;
  if (s == "paper" || s == "named") return Mode::Named;
  throw usage_error("unknown mode '" + s + "' (expected paper or generic)");
}

namespace {

std::string operand_to_string(const std::map<std::string, int>& operand) {
  std::string s;
  for (const auto& [name, e] : operand) {
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::string recipe_to_string(const GenRecipe& rec) {
  if (rec.seed) return "t";
  return "[t, " + operand_to_string(rec.operand) + "]^" + std::to_string(rec.r);
}

const GeneratorRecord* find_generator(const std::vector<GeneratorRecord>& gens,
                                      const std::string& name) {
  for (const GeneratorRecord& g : gens)
    if (g.name == name) return &g;
  return nullptr;
}

namespace {

// Exponent vector aligned with the generator list.
using ProductKey = std::vector<int>;

std::map<std::string, int> key_to_map(const std::vector<GeneratorRecord>& gens,
                                      const ProductKey& key) {
  std::map<std::string, int> m;
  for (std::size_t g = 0; g < key.size(); ++g)
    if (key[g] > 0) m[gens[g].name] = key[g];
  return m;
}

ProductKey map_to_key(const std::vector<GeneratorRecord>& gens,
                      const std::map<std::string, int>& m) {
  ProductKey key(gens.size(), 0);
  for (const auto& [name, e] : m) {
    require(e > 0, "operand exponent must be positive: " + name);
    const GeneratorRecord* g = find_generator(gens, name);
    require(g != nullptr, "unknown generator in operand: " + name);
    key[std::size_t(g - gens.data())] = e;
  }
  return key;
}

int degree_of_key(const std::vector<GeneratorRecord>& gens,
                  const ProductKey& key) {
  int s = 0;
  for (std::size_t g = 0; g < key.size(); ++g) s += key[g] * gens[g].degree;
  return s;
}

int order_of_key(const std::vector<GeneratorRecord>& gens,
                 const ProductKey& key) {
  int s = 0;
  for (std::size_t g = 0; g < key.size(); ++g) s += key[g] * gens[g].order;
  return s;
}

int factor_count(const ProductKey& key) {
  int s = 0;
  for (int e : key) s += e;
  return s;
}

// Depth-first, generator index ascending, exponent descending: the canonical
// product order used everywhere (rows, pools, syzygies).
void keys_rec(const std::vector<GeneratorRecord>& gens, std::size_t gi,
              int remaining, ProductKey& cur, std::vector<ProductKey>& out) {
  if (remaining == 0) {  // all later exponents stay zero
    out.push_back(cur);
    return;
  }
  if (gi == gens.size()) return;
  int dg = gens[gi].degree;
  for (int e = remaining / dg; e >= 0; --e) {
    cur[gi] = e;
    keys_rec(gens, gi + 1, remaining - e * dg, cur, out);
  }
  cur[gi] = 0;
}

std::vector<ProductKey> product_keys(const std::vector<GeneratorRecord>& gens,
                                     int degree) {
  std::vector<ProductKey> out;
  ProductKey cur(gens.size(), 0);
  keys_rec(gens, 0, degree, cur, out);
  return out;
}

// Cached powers of every generator z-form; `ensure` is sequential, the
// lookups afterwards are safe to share across threads.
class PowerCache {
 public:
  PowerCache(const std::vector<GeneratorRecord>& gens, int d)
      : gens_(gens), one_(Poly::constant(VarSet::Z(d), 1)) {
    pow_.resize(gens.size());
    for (auto& v : pow_) v.push_back(Laurent{one_});
  }

  void ensure(const std::vector<ProductKey>& keys) {
    for (const ProductKey& k : keys)
      for (std::size_t g = 0; g < k.size(); ++g)
        while (int(pow_[g].size()) <= k[g])
          pow_[g].push_back(pow_[g].back() * gens_[g].zform);
  }

  ZForm product(const ProductKey& key) const {
    ZForm acc{one_};
    for (std::size_t g = 0; g < key.size(); ++g)
      if (key[g] > 0) acc = acc * pow_[g][std::size_t(key[g])];
    return acc;
  }

 private:
  const std::vector<GeneratorRecord>& gens_;
  Poly one_;
  std::vector<std::vector<ZForm>> pow_;
};

// Coordinates of one isobaric slice (degree i, order m): the weight-w
// z-monomials. Row vectors of polynomial semi-invariants span a subspace of
// dimension exactly dim_covariants_order(d, i, m) inside it.
struct Block {
  int m = 0;
  int w = 0;
  long dim_slice = 0;
  std::vector<Monomial> columns;
  std::unordered_map<Monomial, int, MonomialHash> col_of;
  std::unique_ptr<EchelonSpace> space;
};

void cols_rec(int part, int remaining, Monomial& cur,
              std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (part < 2) return;
  int slot = part - 1;  // z_j sits at slot j-1 of VarSet::Z
  for (int e = remaining / part; e >= 0; --e) {
    cur.set_exp(slot, e);
    cols_rec(part - 1, remaining - e * part, cur, out);
  }
  cur.set_exp(slot, 0);
}

std::vector<Monomial> block_columns(int d, int w) {
  std::vector<Monomial> out;
  Monomial cur(VarSet::Z(d));
  cols_rec(d, w, cur, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return a.cmp(b) > 0; });
  return out;
}

Block make_block(int d, int i, int m, bool exact) {
  Block b;
  b.m = m;
  b.w = (d * i - m) / 2;
  b.dim_slice = dim_covariants_order(d, i, m);
  b.columns = block_columns(d, b.w);
  b.col_of.reserve(b.columns.size() * 2);
  for (std::size_t c = 0; c < b.columns.size(); ++c)
    b.col_of.emplace(b.columns[c], int(c));
  check(long(b.columns.size()) >= b.dim_slice,
        "slice dimension exceeds its coordinate space");
  b.space = make_echelon(int(b.columns.size()), exact);
  return b;
}

std::vector<Rat> vectorize(const Block& b, const ZForm& f) {
  std::vector<Rat> v(b.columns.size(), Rat(0));
  for (const Term& tm : f.num.terms()) {
    Monomial key = tm.mono;
    key.set_exp(0, 0);  // the t-exponent is constant across the numerator
    auto it = b.col_of.find(key);
    check(it != b.col_of.end(), "numerator term outside the block columns");
    check(v[std::size_t(it->second)] == 0, "duplicate column in one row");
    v[std::size_t(it->second)] = tm.coeff;
  }
  return v;
}

// Smallest achievable max(ord u, ord v) over two-factor splits w = u*v
// (both parts nonempty); the literal lower end of the candidate r-range.
int split_order_bound(const std::vector<GeneratorRecord>& gens,
                      const ProductKey& key, int ord_w) {
  std::vector<int> fac;
  for (std::size_t g = 0; g < key.size(); ++g)
    for (int e = 0; e < key[g]; ++e) fac.push_back(gens[g].order);
  int n = int(fac.size());
  check(n >= 2, "split bound needs a product");
  // dp[s] = bitmask over achievable sub-multiset sizes summing to s
  std::vector<std::uint32_t> dp(std::size_t(ord_w + 1), 0);
  dp[0] = 1;  // empty set, size 0
  for (int f : fac)
    for (int s = ord_w - f; s >= 0; --s)
      dp[std::size_t(s + f)] |= dp[std::size_t(s)] << 1;
  int best = ord_w;
  for (int s = 0; s <= ord_w; ++s) {
    std::uint32_t sizes = dp[std::size_t(s)] & ~1u & ~(1u << n);
    if (!sizes) continue;  // no proper nonempty split at this sum
    best = std::min(best, std::max(s, ord_w - s));
  }
  return best;
}

struct PoolItem {
  int r = 0;
  std::size_t key_pos = 0;  // into the degree-(i-1) product key list
};

// All (w, r) with r in the literal range, sorted (r, operand position).
std::vector<PoolItem> build_pool(int d,
                                 const std::vector<GeneratorRecord>& gens,
                                 const std::vector<ProductKey>& operand_keys,
                                 bool widened) {
  std::vector<PoolItem> pool;
  for (std::size_t p = 0; p < operand_keys.size(); ++p) {
    const ProductKey& k = operand_keys[p];
    int ord_w = order_of_key(gens, k);
    int hi = std::min(d, ord_w);
    int lo = 1;
    if (!widened && factor_count(k) >= 2)
      lo = std::max(lo, split_order_bound(gens, k, ord_w));
    for (int r = lo; r <= hi; ++r) pool.push_back({r, p});
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const PoolItem& a, const PoolItem& b) {
                     return a.r != b.r ? a.r < b.r : a.key_pos < b.key_pos;
                   });
  return pool;
}

struct DegreeOutcome {
  DimensionRow row;
  std::vector<GeneratorRecord> accepted;
};

struct DegreeWork {
  int d = 0;
  int i = 0;
  bool exact = false;
  const SearchOptions* opts = nullptr;
  const LaurentDerivation* dz = nullptr;
  ZForm t_form;
  std::map<int, Block> blocks;  // by order m
};

void note_progress(const SearchOptions& opts, const std::string& line) {
  if (opts.progress) *opts.progress << line << std::endl;
}

std::map<int, long> deltas_of(const std::vector<DimensionRow>& rows) {
  std::map<int, long> m;
  for (const DimensionRow& r : rows) m[r.i] = r.delta;
  return m;
}

std::optional<ZForm> eval_semitransvectant(const DegreeWork& work,
                                           const ZForm& operand, int ord_w,
                                           int r) {
  return semitransvectant_fast(work.d, *work.dz, work.t_form, work.d, operand,
                               ord_w, r);
}

// Evaluate, sanity-check grading, and try to enlarge the block span.
// Returns empty on success, otherwise the reason the candidate failed.
std::string try_extend(DegreeWork& work, const ZForm& operand_zf, int ord_w,
                       int r, int target_m, std::optional<ZForm>* out) {
  if (r < 1 || r > std::min(work.d, ord_w))
    return "r=" + std::to_string(r) + " outside [1, min(d, ord w)]";
  if (work.d + ord_w - 2 * r != target_m)
    return "order would be " + std::to_string(work.d + ord_w - 2 * r) +
           ", not " + std::to_string(target_m);
  auto it = work.blocks.find(target_m);
  if (it == work.blocks.end() || it->second.dim_slice == 0)
    return "no covariants of order " + std::to_string(target_m) +
           " at this degree";
  std::optional<ZForm> zf = eval_semitransvectant(work, operand_zf, ord_w, r);
  if (!zf) return "vanishes identically";
  check(zform_order(work.d, *zf) == target_m,
        "semitransvectant order law violated");
  Grading g = zform_x_grading(work.d, *zf);
  check(g.degree == work.i && g.weight == it->second.w,
        "candidate grading off");
  if (!it->second.space->insert(vectorize(it->second, *zf)))
    return "inside the current span";
  *out = std::move(*zf);
  return "";
}

std::vector<GeneratorRecord> fill_generic(
    DegreeWork& work, const std::vector<GeneratorRecord>& gens) {
  std::vector<GeneratorRecord> accepted;
  std::vector<ProductKey> operand_keys = product_keys(gens, work.i - 1);
  std::vector<std::optional<ZForm>> operand_zf(operand_keys.size());
  PowerCache powers(gens, work.d);
  powers.ensure(operand_keys);
  auto operand_of = [&](std::size_t p) -> const ZForm& {
    if (!operand_zf[p]) operand_zf[p] = powers.product(operand_keys[p]);
    return *operand_zf[p];
  };

  const unsigned threads = work.opts->threads;
  // Blocks in descending order, matching the customary high-order-first
  // naming of the published degree-2 generators.
  for (auto bit = work.blocks.rbegin(); bit != work.blocks.rend(); ++bit) {
    Block& b = bit->second;
    long deficiency = b.dim_slice - b.space->rank();
    if (deficiency == 0) continue;

    std::set<std::pair<std::size_t, int>> tried;
    for (int widened = 0; widened <= 1 && deficiency > 0; ++widened) {
      std::vector<PoolItem> pool;
      for (const PoolItem& it :
           build_pool(work.d, gens, operand_keys, widened != 0)) {
        int ord_w = order_of_key(gens, operand_keys[it.key_pos]);
        if (work.d + ord_w - 2 * it.r != b.m) continue;
        if (tried.count({it.key_pos, it.r})) continue;
        pool.push_back(it);
      }
      // Evaluate ahead in deterministic batches; accept strictly in order.
      std::vector<std::optional<ZForm>> evald(pool.size());
      std::vector<char> have(pool.size(), 0);
      std::size_t batch = std::max<std::size_t>(std::size_t(threads) * 2, 4);
      for (std::size_t idx = 0; idx < pool.size() && deficiency > 0; ++idx) {
        if (!have[idx]) {
          std::size_t hi = std::min(pool.size(), idx + batch);
          for (std::size_t j = idx; j < hi; ++j) operand_of(pool[j].key_pos);
          std::vector<std::optional<ZForm>> got =
              parallel_map<std::optional<ZForm>>(
                  hi - idx, threads, [&](std::size_t j) {
                    const PoolItem& it = pool[idx + j];
                    int ord_w =
                        order_of_key(gens, operand_keys[it.key_pos]);
                    return eval_semitransvectant(
                        work, *operand_zf[it.key_pos], ord_w, it.r);
                  });
          for (std::size_t j = idx; j < hi; ++j) {
            evald[j] = std::move(got[j - idx]);
            have[j] = 1;
          }
        }
        const PoolItem& it = pool[idx];
        tried.insert({it.key_pos, it.r});
        if (!evald[idx]) continue;
        ZForm zf = std::move(*evald[idx]);
        check(zform_order(work.d, zf) == b.m,
              "semitransvectant order law violated");
        if (!b.space->insert(vectorize(b, zf))) continue;
        GeneratorRecord rec;
        rec.name = "g" + std::to_string(work.i) + "_" +
                   std::to_string(accepted.size() + 1);
        rec.degree = work.i;
        rec.order = b.m;
        rec.recipe.operand = key_to_map(gens, operand_keys[it.key_pos]);
        rec.recipe.r = it.r;
        rec.zform = std::move(zf);
        accepted.push_back(std::move(rec));
        --deficiency;
      }
    }
    if (deficiency > 0) {
      std::ostringstream os;
      os << "degree " << work.i << ", order " << b.m << ": " << deficiency
         << " of " << b.dim_slice
         << " slice dimensions unreachable from the candidate pool ("
         << tried.size() << " candidates tried, widened range included)";
      throw internal_error(os.str());
    }
  }
  return accepted;
}

std::vector<GeneratorRecord> fill_named(
    DegreeWork& work, const std::vector<GeneratorRecord>& gens) {
  std::vector<GeneratorRecord> accepted;
  PowerCache powers(gens, work.d);
  std::vector<ProductKey> operand_keys = product_keys(gens, work.i - 1);
  powers.ensure(operand_keys);
  std::vector<std::optional<ZForm>> operand_zf(operand_keys.size());
  auto key_pos_of = [&](const ProductKey& k) -> std::size_t {
    auto it = std::find(operand_keys.begin(), operand_keys.end(), k);
    check(it != operand_keys.end(), "operand key missing from product list");
    return std::size_t(it - operand_keys.begin());
  };
  auto operand_of = [&](std::size_t p) -> const ZForm& {
    if (!operand_zf[p]) operand_zf[p] = powers.product(operand_keys[p]);
    return *operand_zf[p];
  };

  for (const refdata::NamedRecipe& rec : refdata::named_recipes()) {
    if (rec.degree != work.i) continue;
    GenRecipe printed;
    printed.operand = rec.operand;
    printed.r = rec.r;

    // The printed attempt.
    std::string fail;
    std::optional<ZForm> zf;
    std::set<std::pair<std::size_t, int>> tried;
    try {
      ProductKey key = map_to_key(gens, rec.operand);
      if (degree_of_key(gens, key) != work.i - 1) {
        fail = "printed operand has degree " +
               std::to_string(degree_of_key(gens, key)) + ", need " +
               std::to_string(work.i - 1);
      } else {
        std::size_t p = key_pos_of(key);
        tried.insert({p, rec.r});
        fail = try_extend(work, operand_of(p), order_of_key(gens, key), rec.r,
                          rec.order, &zf);
      }
    } catch (const usage_error& e) {
      fail = e.what();
    }

    GenRecipe used = printed;
    if (!fail.empty()) {
      // Deterministic repair: same operand with the order-matching r;
      // subscript/exponent transpositions of the printed operand (dv2^3 is
      // dv3^2); single generators of the right degree; finally the whole
      // pool at the printed order (literal range first, widened second).
      std::vector<std::pair<std::size_t, int>> alternatives;
      auto push_alt = [&](std::size_t p, int ord_w) {
        int r2 = work.d + ord_w - rec.order;
        if (r2 <= 0 || r2 % 2) return;
        alternatives.emplace_back(p, r2 / 2);
      };
      auto push_key = [&](const std::map<std::string, int>& operand) {
        try {
          ProductKey key = map_to_key(gens, operand);
          if (degree_of_key(gens, key) != work.i - 1) return;
          std::size_t p = key_pos_of(key);
          alternatives.emplace_back(p, rec.r);  // printed r first
          push_alt(p, order_of_key(gens, key));
        } catch (const usage_error&) {
        }
      };
      try {
        ProductKey key = map_to_key(gens, rec.operand);
        if (degree_of_key(gens, key) == work.i - 1)
          push_alt(key_pos_of(key), order_of_key(gens, key));
      } catch (const usage_error&) {
      }
      if (rec.operand.size() == 1) {
        const auto& [name, exp] = *rec.operand.begin();
        std::size_t cut = name.find_last_not_of("0123456789") + 1;
        if (cut < name.size()) {
          int sub = std::stoi(name.substr(cut));
          push_key({{name.substr(0, cut) + std::to_string(exp), sub}});
        }
      }
      for (const GeneratorRecord& g : gens) {
        if (g.degree != work.i - 1) continue;
        ProductKey key(gens.size(), 0);
        key[std::size_t(&g - gens.data())] = 1;
        push_alt(key_pos_of(key), g.order);
      }
      for (int widened = 0; widened <= 1; ++widened)
        for (const PoolItem& it :
             build_pool(work.d, gens, operand_keys, widened != 0)) {
          int ord_w = order_of_key(gens, operand_keys[it.key_pos]);
          if (work.d + ord_w - 2 * it.r == rec.order)
            alternatives.emplace_back(it.key_pos, it.r);
        }

      for (const auto& [p, r] : alternatives) {
        if (tried.count({p, r})) continue;
        tried.insert({p, r});
        std::string f2 =
            try_extend(work, operand_of(p),
                       order_of_key(gens, operand_keys[p]), r, rec.order, &zf);
        if (f2.empty()) {
          used.operand = key_to_map(gens, operand_keys[p]);
          used.r = r;
          used.corrected = true;
          used.printed = recipe_to_string(printed);
          used.note = fail;
          break;
        }
      }
      if (!used.corrected)
        throw internal_error("recipe " + rec.name + " = " +
                             recipe_to_string(printed) + " failed (" + fail +
                             ") and no repair candidate works");
    }

    check(find_generator(gens, rec.name) == nullptr &&
              [&] {
                for (const GeneratorRecord& a : accepted)
                  if (a.name == rec.name) return false;
                return true;
              }(),
          "duplicate generator name " + rec.name);
    GeneratorRecord out;
    out.name = rec.name;
    out.degree = work.i;
    out.order = rec.order;
    out.recipe = std::move(used);
    out.zform = std::move(*zf);
    accepted.push_back(std::move(out));
  }
  return accepted;
}

enum class DegreeAction { Extend, VerifyZero };

DegreeOutcome process_degree(const SearchState& st, int i,
                             const SearchOptions& opts,
                             const LaurentDerivation& dz, bool force_exact,
                             DegreeAction action) {
  const int d = st.d;
  DegreeWork work;
  work.d = d;
  work.i = i;
  work.exact = force_exact || i <= opts.exact_through;
  work.opts = &opts;
  work.dz = &dz;
  work.t_form = ZForm{Poly::variable(VarSet::Z(d), "t")};

  long dim_c = dim_covariants(d, i);
  long sigma = sigma_count(deltas_of(st.rows), i);
  std::vector<ProductKey> keys = product_keys(st.generators, i);
  check(long(keys.size()) == sigma,
        "degree " + std::to_string(i) + ": " + std::to_string(keys.size()) +
            " products but sigma = " + std::to_string(sigma));

  long slice_sum = 0;
  for (int m = d * i; m >= 0; m -= 2) {
    long dim = dim_covariants_order(d, i, m);
    if (dim == 0) continue;
    work.blocks.emplace(m, make_block(d, i, m, work.exact));
    slice_sum += dim;
  }
  check(slice_sum == dim_c, "order slices do not add up to the dimension");

  PowerCache powers(st.generators, d);
  powers.ensure(keys);

  struct RowVec {
    int m = 0;
    std::vector<Rat> vec;
  };
  const std::size_t chunk =
      std::max<std::size_t>(std::size_t(opts.threads) * 16, 64);
  for (std::size_t lo = 0; lo < keys.size(); lo += chunk) {
    std::size_t hi = std::min(keys.size(), lo + chunk);
    std::vector<RowVec> rows = parallel_map<RowVec>(
        hi - lo, opts.threads, [&](std::size_t j) {
          const ProductKey& k = keys[lo + j];
          ZForm f = powers.product(k);
          int m = order_of_key(st.generators, k);
          const Block& b = work.blocks.at(m);
          Grading g = zform_x_grading(d, f);
          check(g.degree == i && g.weight == b.w, "product grading off");
          return RowVec{m, vectorize(b, f)};
        });
    for (RowVec& r : rows) work.blocks.at(r.m).space->insert(r.vec);
  }

  long rank_sum = 0;
  for (const auto& [m, b] : work.blocks) rank_sum += b.space->rank();
  long dim_s = sigma - rank_sum;
  long delta = dim_c - sigma + dim_s;
  check(dim_s >= 0 && delta >= 0, "negative syzygy count or deficiency");

  DegreeOutcome out;
  out.row = DimensionRow{i, dim_c, sigma, dim_s, delta};

  if (action == DegreeAction::VerifyZero) {
    if (delta != 0) {
      std::ostringstream os;
      os << "degree " << i << ": delta = " << delta
         << ", the generating system is incomplete past max-degree";
      throw internal_error(os.str());
    }
    return out;
  }

  note_progress(opts, "  degree " + std::to_string(i) + ": dim C = " +
                          std::to_string(dim_c) + ", sigma = " +
                          std::to_string(sigma) + ", dim S = " +
                          std::to_string(dim_s) + ", delta = " +
                          std::to_string(delta) +
                          (work.exact ? " (exact)" : " (modular)"));

  out.accepted = st.mode == Mode::Named ? fill_named(work, st.generators)
                                        : fill_generic(work, st.generators);
  check(long(out.accepted.size()) == delta,
        "accepted generator count differs from delta");
  for (const auto& [m, b] : work.blocks)
    check(b.space->rank() == b.dim_slice,
          "order-" + std::to_string(m) + " block left deficient");
  return out;
}

}  // namespace

SearchState run_search(int d, const SearchOptions& opts) {
  require(d >= 1 && d <= kMaxFormDegree, "form degree out of range");
  SearchState st;
  st.d = d;
  st.mode = opts.mode;
  check(dim_covariants(d, 1) == 1, "degree-1 slice must be the form itself");
  st.rows.push_back(DimensionRow{1, 1, 0, 0, 1});
  GeneratorRecord t;
  t.name = "t";
  t.degree = 1;
  t.order = d;
  t.recipe.seed = true;
  t.zform = ZForm{Poly::variable(VarSet::Z(d), "t")};
  st.generators.push_back(std::move(t));
  st.max_degree = 1;
  return resume_search(std::move(st), opts);
}

SearchState resume_search(SearchState st, const SearchOptions& opts) {
  require(st.d >= 1 && st.d <= kMaxFormDegree, "form degree out of range");
  require(st.mode == opts.mode,
          "mode mismatch: state is " + mode_name(st.mode) + ", requested " +
              mode_name(opts.mode));
  require(opts.max_degree >= 1, "max degree must be at least 1");
  if (st.mode == Mode::Named)
    require(st.d == 8, "the named recipe table exists only for d = 8");

  const LaurentDerivation dz = d2_on_z(st.d);
  for (int i = st.max_degree + 1; i <= opts.max_degree; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    DegreeOutcome out;
    try {
      try {
        out = process_degree(st, i, opts, dz, false, DegreeAction::Extend);
      } catch (const mod_disagreement& e) {
        note_progress(opts, std::string("  degree ") + std::to_string(i) +
                                ": modular disagreement (" + e.what() +
                                "), recomputing exactly");
        out = process_degree(st, i, opts, dz, true, DegreeAction::Extend);
      }
    } catch (const internal_error& e) {
      throw internal_error("degree " + std::to_string(i) + ": " + e.what());
    }
    st.rows.push_back(out.row);
    for (GeneratorRecord& g : out.accepted)
      st.generators.push_back(std::move(g));
    st.max_degree = i;
    if (!opts.checkpoint_path.empty()) save_state(st, opts.checkpoint_path);
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    note_progress(opts, "  degree " + std::to_string(i) + ": accepted " +
                            std::to_string(out.row.delta) + " generator(s) [" +
                            std::to_string(dt) + " ms]");
  }

  if (opts.verify_completeness) {
    for (int i = opts.max_degree + 1; i <= opts.max_degree + 2; ++i) {
      if (std::count(st.verified_zero_degrees.begin(),
                     st.verified_zero_degrees.end(), i))
        continue;
      DegreeOutcome out;
      try {
        out = process_degree(st, i, opts, dz, false, DegreeAction::VerifyZero);
      } catch (const mod_disagreement&) {
        out = process_degree(st, i, opts, dz, true, DegreeAction::VerifyZero);
      }
      st.verified_zero_degrees.push_back(i);
      note_progress(opts, "  degree " + std::to_string(i) +
                              ": delta = 0 (completeness verified)");
    }
    if (!opts.checkpoint_path.empty()) save_state(st, opts.checkpoint_path);
  }
  return st;
}

std::vector<ProductMonomial> enumerate_products(
    const std::vector<GeneratorRecord>& gens, int degree) {
  require(degree >= 1, "product degree must be positive");
  std::vector<ProductMonomial> out;
  for (const ProductKey& k : product_keys(gens, degree))
    out.push_back(ProductMonomial{key_to_map(gens, k), degree});
  return out;
}

std::vector<CandidateSpec> candidate_pool(
    int d, const std::vector<GeneratorRecord>& gens, int degree) {
  require(degree >= 2, "candidates start at degree 2");
  std::vector<ProductKey> operand_keys = product_keys(gens, degree - 1);
  std::vector<CandidateSpec> out;
  for (const PoolItem& it : build_pool(d, gens, operand_keys, false))
    out.push_back(
        CandidateSpec{key_to_map(gens, operand_keys[it.key_pos]), it.r});
  return out;
}

std::vector<EvaluatedCandidate> candidate_semitransvectants(
    int d, const std::vector<GeneratorRecord>& gens, int degree,
    unsigned threads) {
  std::vector<ProductKey> operand_keys = product_keys(gens, degree - 1);
  std::vector<PoolItem> pool = build_pool(d, gens, operand_keys, false);
  PowerCache powers(gens, d);
  powers.ensure(operand_keys);
  std::vector<ZForm> operands;
  operands.reserve(operand_keys.size());
  for (const ProductKey& k : operand_keys) operands.push_back(powers.product(k));
  const LaurentDerivation dz = d2_on_z(d);
  const ZForm t_form{Poly::variable(VarSet::Z(d), "t")};
  std::vector<std::optional<ZForm>> got =
      parallel_map<std::optional<ZForm>>(pool.size(), threads, [&](std::size_t j) {
        const PoolItem& it = pool[j];
        int ord_w = order_of_key(gens, operand_keys[it.key_pos]);
        return semitransvectant_fast(d, dz, t_form, d, operands[it.key_pos],
                                     ord_w, it.r);
      });
  std::vector<EvaluatedCandidate> out;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    if (!got[j]) continue;
    EvaluatedCandidate c;
    c.spec.operand = key_to_map(gens, operand_keys[pool[j].key_pos]);
    c.spec.r = pool[j].r;
    c.order = zform_order(d, *got[j]);
    c.zform = std::move(*got[j]);
    out.push_back(std::move(c));
  }
  return out;
}

SyzygyBasis syzygy_space(int d, const std::vector<GeneratorRecord>& gens,
                         int degree, unsigned threads) {
  require(degree >= 2, "syzygies start at degree 2");
  std::vector<ProductKey> keys = product_keys(gens, degree);

  struct TrackedBlock {
    Block block;
    std::unique_ptr<ExactEchelon> space;  // owns combo tracking
    std::vector<std::size_t> row_products;
    std::vector<std::vector<Rat>> raw_rows;
  };
  std::map<int, TrackedBlock> blocks;
  for (const ProductKey& k : keys) {
    int m = order_of_key(gens, k);
    if (blocks.count(m)) continue;
    TrackedBlock tb;
    tb.block = make_block(d, degree, m, true);
    tb.space = std::make_unique<ExactEchelon>(int(tb.block.columns.size()), true);
    blocks.emplace(m, std::move(tb));
  }

  PowerCache powers(gens, d);
  powers.ensure(keys);
  std::vector<std::vector<Rat>> vecs = parallel_map<std::vector<Rat>>(
      keys.size(), threads, [&](std::size_t j) {
        int m = order_of_key(gens, keys[j]);
        return vectorize(blocks.at(m).block, powers.product(keys[j]));
      });
  for (std::size_t j = 0; j < keys.size(); ++j) {
    TrackedBlock& tb = blocks.at(order_of_key(gens, keys[j]));
    tb.space->insert(vecs[j]);
    tb.row_products.push_back(j);
    tb.raw_rows.push_back(std::move(vecs[j]));
  }

  SyzygyBasis out;
  out.degree = degree;
  for (const ProductKey& k : keys)
    out.products.push_back(ProductMonomial{key_to_map(gens, k), degree});

  struct Rel {
    std::size_t discoverer = 0;
    std::vector<Rat> vec;
  };
  std::vector<Rel> rels;
  for (const auto& [m, tb] : blocks) {
    for (const std::vector<Rat>& combo : tb.space->relations()) {
      Rel rel;
      rel.vec.assign(keys.size(), Rat(0));
      for (std::size_t local = 0; local < combo.size(); ++local)
        rel.vec[tb.row_products[local]] = combo[local];
      rel.discoverer = tb.row_products[combo.size() - 1];
      // Exact contraction against the stored coordinate rows must vanish.
      std::vector<Rat> sum(tb.block.columns.size(), Rat(0));
      for (std::size_t local = 0; local < combo.size(); ++local)
        for (std::size_t c = 0; c < sum.size(); ++c)
          sum[c] += combo[local] * tb.raw_rows[local][c];
      for (const Rat& s : sum) check(s == 0, "syzygy fails to contract to 0");
      rels.push_back(std::move(rel));
    }
  }
  std::sort(rels.begin(), rels.end(),
            [](const Rel& a, const Rel& b) { return a.discoverer < b.discoverer; });
  for (Rel& r : rels) out.relations.push_back(std::move(r.vec));
  return out;
}

nlohmann::ordered_json state_to_json(const SearchState& st) {
  nlohmann::ordered_json j;
  j["schema"] = "covgen/1";
  j["d"] = st.d;
  j["mode"] = mode_name(st.mode);
  j["max_degree"] = st.max_degree;
  j["rows"] = nlohmann::ordered_json::array();
  for (const DimensionRow& r : st.rows) {
    nlohmann::ordered_json row;
    row["i"] = r.i;
    row["dim_c"] = r.dim_c;
    row["sigma"] = r.sigma;
    row["dim_s"] = r.dim_s;
    row["delta"] = r.delta;
    j["rows"].push_back(std::move(row));
  }
  j["generators"] = nlohmann::ordered_json::array();
  for (const GeneratorRecord& g : st.generators) {
    nlohmann::ordered_json e;
    e["name"] = g.name;
    e["degree"] = g.degree;
    e["order"] = g.order;
    nlohmann::ordered_json rec;
    if (g.recipe.seed) {
      rec["seed"] = true;
    } else {
      rec["operand"] = nlohmann::ordered_json::object();
      for (const auto& [name, exp] : g.recipe.operand)
        rec["operand"][name] = exp;
      rec["r"] = g.recipe.r;
      if (g.recipe.corrected) {
        rec["corrected"] = true;
        rec["printed"] = g.recipe.printed;
        rec["note"] = g.recipe.note;
      }
    }
    e["recipe"] = std::move(rec);
    e["zform"] = zform_to_json(st.d, g.zform);
    j["generators"].push_back(std::move(e));
  }
  j["verified_zero_degrees"] = st.verified_zero_degrees;
  return j;
}

SearchState state_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.value("schema", std::string()) == "covgen/1",
          "unrecognized checkpoint schema (want covgen/1)");
  SearchState st;
  st.d = j.at("d").get<int>();
  require(st.d >= 1 && st.d <= kMaxFormDegree, "checkpoint d out of range");
  st.mode = mode_from_name(j.at("mode").get<std::string>());
  st.max_degree = j.at("max_degree").get<int>();
  for (const auto& row : j.at("rows")) {
    DimensionRow r;
    r.i = row.at("i").get<int>();
    r.dim_c = row.at("dim_c").get<long>();
    r.sigma = row.at("sigma").get<long>();
    r.dim_s = row.at("dim_s").get<long>();
    r.delta = row.at("delta").get<long>();
    st.rows.push_back(r);
  }
  for (const auto& e : j.at("generators")) {
    GeneratorRecord g;
    g.name = e.at("name").get<std::string>();
    g.degree = e.at("degree").get<int>();
    g.order = e.at("order").get<int>();
    const auto& rec = e.at("recipe");
    if (rec.value("seed", false)) {
      g.recipe.seed = true;
    } else {
      for (const auto& [name, exp] : rec.at("operand").items())
        g.recipe.operand[name] = exp.get<int>();
      g.recipe.r = rec.at("r").get<int>();
      g.recipe.corrected = rec.value("corrected", false);
      g.recipe.printed = rec.value("printed", std::string());
      g.recipe.note = rec.value("note", std::string());
    }
    g.zform = zform_from_json(st.d, e.at("zform"));
    Grading gr = zform_x_grading(st.d, g.zform);
    require(gr.degree == g.degree &&
                st.d * gr.degree - 2 * gr.weight == g.order,
            "checkpoint generator " + g.name + " has inconsistent grading");
    st.generators.push_back(std::move(g));
  }
  if (j.contains("verified_zero_degrees"))
    for (const auto& v : j.at("verified_zero_degrees"))
      st.verified_zero_degrees.push_back(v.get<int>());
  return st;
}

void save_state(const SearchState& st, const std::string& path) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    require(out.good(), "cannot write " + tmp.string());
    out << state_to_json(st).dump(1) << "\n";
    require(out.good(), "write failed for " + tmp.string());
  }
  fs::rename(tmp, p);
}

SearchState load_state(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw usage_error("checkpoint " + path + " unreadable: " + e.what());
  }
  return state_from_json(j);
}

}  // namespace covgen
