#include "covgen/search.hpp"

#include <sstream>

#include "covgen/covariant.hpp"
#include "covgen/reference_data.hpp"
#include "doctest.h"

using namespace covgen;

namespace {

SearchOptions quiet_opts(Mode mode, int max_degree) {
  SearchOptions o;
  o.mode = mode;
  o.max_degree = max_degree;
  return o;
}

}  // namespace

TEST_CASE("quadratic: the form and its discriminant generate everything") {
  SearchOptions o = quiet_opts(Mode::Generic, 4);
  o.verify_completeness = true;  // degrees 5, 6 must come out saturated
  SearchState st = run_search(2, o);
  REQUIRE(st.generators.size() == 2);
  CHECK(st.generators[0].name == "t");
  CHECK(st.generators[0].order == 2);
  CHECK(st.generators[1].degree == 2);
  CHECK(st.generators[1].order == 0);
  CHECK(st.generators[1].recipe.r == 2);  // [t, t]^2, the discriminant
  for (const DimensionRow& r : st.rows)
    CHECK(r.delta == (r.i <= 2 ? 1 : 0));
  CHECK(st.verified_zero_degrees == std::vector<int>{5, 6});
}

TEST_CASE("cubic: four generators of degrees 1..4, then nothing new") {
  SearchOptions o = quiet_opts(Mode::Generic, 6);
  o.verify_completeness = true;
  SearchState st = run_search(3, o);
  REQUIRE(st.generators.size() == 4);
  const int expect_degree[] = {1, 2, 3, 4};
  const int expect_order[] = {3, 2, 3, 0};
  for (int k = 0; k < 4; ++k) {
    CHECK(st.generators[k].degree == expect_degree[k]);
    CHECK(st.generators[k].order == expect_order[k]);
  }
  for (const DimensionRow& r : st.rows) {
    CHECK(r.delta == (r.i <= 4 ? 1 : 0));
    CHECK(r.dim_c == dim_covariants(3, r.i));
    CHECK(r.dim_c - r.sigma + r.dim_s == r.delta);
  }
  // First relation among products of the cubic system lives in degree 6.
  CHECK(st.rows[4].dim_s == 0);  // degree 5
  CHECK(st.rows[5].dim_s == 1);  // degree 6
}

TEST_CASE("product enumeration matches the free-algebra count") {
  SearchState st = run_search(3, quiet_opts(Mode::Generic, 4));
  std::map<int, long> deltas;
  for (const DimensionRow& r : st.rows) deltas[r.i] = r.delta;
  for (int i = 2; i <= 9; ++i) {
    auto prods = enumerate_products(st.generators, i);
    // sigma_i counts monomials in generators of degree < i; the degree-i
    // generators themselves add delta_i singleton products on top.
    long delta_i = deltas.count(i) ? deltas.at(i) : 0;
    CHECK(long(prods.size()) == sigma_count(deltas, i) + delta_i);
    for (const ProductMonomial& p : prods) {
      int deg = 0;
      for (const auto& [name, e] : p.exponents)
        deg += e * find_generator(st.generators, name)->degree;
      CHECK(deg == i);
    }
  }
  // Canonical order: t-powers first (descending exponent at each branch).
  auto prods = enumerate_products(st.generators, 4);
  REQUIRE(!prods.empty());
  CHECK(prods.front().exponents == std::map<std::string, int>{{"t", 4}});
}

TEST_CASE("degree-3 candidate pool for the octavic") {
  SearchState st = run_search(8, quiet_opts(Mode::Named, 2));
  REQUIRE(st.generators.size() == 5);  // t, dv1..dv4
  auto pool = candidate_pool(8, st.generators, 3);
  // Single-generator operands: r in [1, min(8, ord)]; ord dv1..dv4 =
  // 12, 8, 4, 0 give 8 + 8 + 4 + 0 candidates. The product operand t^2
  // keeps only max(ord t, ord t) = 8 <= r <= 8.
  CHECK(pool.size() == 21);
  CHECK(pool.front().operand == std::map<std::string, int>{{"dv1", 1}});
  CHECK(pool.front().r == 1);
  // The r = 8 group keeps operand-key order: t^2 enters before dv1, dv2.
  CHECK(pool[18].operand == std::map<std::string, int>{{"t", 2}});
  CHECK(pool[18].r == 8);
  CHECK(pool.back().operand == std::map<std::string, int>{{"dv2", 1}});
  CHECK(pool.back().r == 8);
  for (std::size_t k = 1; k < pool.size(); ++k)
    CHECK(pool[k - 1].r <= pool[k].r);
  // Every evaluated candidate lands on the order the grading predicts.
  auto evald = candidate_semitransvectants(8, st.generators, 3);
  for (const EvaluatedCandidate& c : evald) {
    int ord_w = 0;
    for (const auto& [name, e] : c.spec.operand)
      ord_w += e * find_generator(st.generators, name)->order;
    CHECK(c.order == 8 + ord_w - 2 * c.spec.r);
    CHECK(!c.zform.is_zero());
  }
}

TEST_CASE("cubic syzygy in degree 6 contracts to zero") {
  SearchState st = run_search(3, quiet_opts(Mode::Generic, 4));
  SyzygyBasis syz = syzygy_space(3, st.generators, 6);
  REQUIRE(syz.relations.size() == 1);
  REQUIRE(syz.products.size() == 9);
  const std::vector<Rat>& rel = syz.relations[0];
  // Last nonzero coordinate is 1, and the z-form contraction vanishes.
  int last = -1;
  for (int j = 0; j < int(rel.size()); ++j)
    if (rel[j] != 0) last = j;
  REQUIRE(last >= 0);
  CHECK(rel[std::size_t(last)] == 1);
  ZForm sum{Poly(VarSet::Z(3))};
  for (std::size_t j = 0; j < syz.products.size(); ++j) {
    if (rel[j] == 0) continue;
    ZForm prod{Poly::constant(VarSet::Z(3), 1)};
    for (const auto& [name, e] : syz.products[j].exponents)
      for (int k = 0; k < e; ++k)
        prod = prod * find_generator(st.generators, name)->zform;
    sum = sum + prod * rel[j];
  }
  CHECK(sum.is_zero());
  // The relation must involve the square of the degree-3 generator.
  bool has_square = false;
  for (std::size_t j = 0; j < syz.products.size(); ++j) {
    auto it = syz.products[j].exponents.find(st.generators[2].name);
    if (rel[j] != 0 && it != syz.products[j].exponents.end() &&
        it->second == 2)
      has_square = true;
  }
  CHECK(has_square);
}

TEST_CASE("named and generic modes agree on all dimension data") {
  SearchState named = run_search(8, quiet_opts(Mode::Named, 3));
  SearchState generic = run_search(8, quiet_opts(Mode::Generic, 3));
  REQUIRE(named.rows.size() == generic.rows.size());
  for (std::size_t k = 0; k < named.rows.size(); ++k) {
    CHECK(named.rows[k].dim_c == generic.rows[k].dim_c);
    CHECK(named.rows[k].sigma == generic.rows[k].sigma);
    CHECK(named.rows[k].dim_s == generic.rows[k].dim_s);
    CHECK(named.rows[k].delta == generic.rows[k].delta);
  }
  // Degree-2 named generators follow the published table.
  CHECK(named.generators[1].name == "dv1");
  CHECK(named.generators[1].recipe.r == 2);
  CHECK(named.generators[4].name == "dv4");
  CHECK(named.generators[4].recipe.r == 8);
  for (int k = 1; k <= 4; ++k) {
    CHECK(named.generators[k].order == 16 - 4 * k);
    CHECK_FALSE(named.generators[k].recipe.corrected);
  }
}

TEST_CASE("checkpoint JSON round-trips byte-identically and resumes") {
  SearchState full = run_search(3, quiet_opts(Mode::Generic, 4));
  std::string dumped = state_to_json(full).dump(1);
  SearchState reloaded = state_from_json(nlohmann::json::parse(dumped));
  CHECK(state_to_json(reloaded).dump(1) == dumped);

  SearchState half = run_search(3, quiet_opts(Mode::Generic, 2));
  SearchState resumed = resume_search(
      state_from_json(state_to_json(half)), quiet_opts(Mode::Generic, 4));
  CHECK(state_to_json(resumed).dump(1) == dumped);

  CHECK_THROWS_AS(resume_search(std::move(half), quiet_opts(Mode::Named, 4)),
                  usage_error);
}

TEST_CASE("thread count changes nothing") {
  SearchOptions two = quiet_opts(Mode::Generic, 5);
  two.threads = 3;
  SearchState a = run_search(4, quiet_opts(Mode::Generic, 5));
  SearchState b = run_search(4, two);
  CHECK(state_to_json(a).dump(1) == state_to_json(b).dump(1));
}

TEST_CASE("published table drives the named mode only for d = 8") {
  CHECK_THROWS_AS(run_search(5, quiet_opts(Mode::Named, 3)), usage_error);
  CHECK_THROWS_AS(run_search(0, quiet_opts(Mode::Generic, 3)), usage_error);
}

TEST_CASE("linear form: every degree is a power of the form itself") {
  SearchOptions o = quiet_opts(Mode::Generic, 5);
  o.verify_completeness = true;
  SearchState st = run_search(1, o);
  REQUIRE(st.generators.size() == 1);
  for (const DimensionRow& r : st.rows) {
    CHECK(r.dim_c == 1);
    CHECK(r.delta == (r.i == 1 ? 1 : 0));
    CHECK(r.dim_s == 0);
  }
}
