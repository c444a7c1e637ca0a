/* Degree-by-degree construction of a minimal generating system of
 * covariants (as semi-invariants in z-form).
 *
 * At each degree i the engine enumerates all degree-i products of the
 * generators found so far, spans them per isobaric block (fixed order m,
 * i.e. fixed weight), and measures the deficiency of each block against
 * the exact slice dimension. New generators are semitransvectants
 * [t, w]^r with w a degree-(i-1) product; a candidate is accepted exactly
 * when it enlarges the span. Two selection modes:
 *
 *   Generic — candidates drawn from a deterministic pool ordered by
 *     (r, operand key); for a product operand w = u*v the pool keeps
 *     max(ord u, ord v) <= r <= min(d, ord w) (most permissive split),
 *     single-generator operands allow 1 <= r <= min(d, ord g). If a
 *     deficiency survives the pool, the range widens once to
 *     1 <= r <= min(d, ord w) before giving up.
 *
 *   Named — follows the published recipe table for d = 8 (dv/tr/ch/...).
 *     Recipes that are impossible or inconsistent as printed are repaired
 *     deterministically (same operand with the order-matching r, then
 *     single generators of the right degree, then the full generic pool at
 *     the printed order); every repair is recorded on the generator.
 *
 * Bookkeeping per degree: |products| must equal sigma_i (free-algebra
 * count), dim S_i = sigma_i - rank(products), delta_i = dim C_i - sigma_i
 * + dim S_i, and after selection every block must reach its full slice
 * dimension (the completeness certificate for the degree).
 *
 * Linear algebra is exact through `exact_through` (default 7) and runs
 * modulo two fixed ~2^61 primes above that; any disagreement between the
 * primes falls back to exact arithmetic for the whole degree.
 */
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "covgen/covariant.hpp"
#include "covgen/enumerative.hpp"
#include "covgen/zform.hpp"

namespace covgen {

enum class Mode { Generic, Named };

// CLI / JSON spellings: "generic" and "paper" (the published-table mode).
std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);

struct GenRecipe {
  bool seed = false;                   // the form itself
  std::map<std::string, int> operand;  // [t, operand]^r
  int r = 0;
  bool corrected = false;  // named mode: printed recipe was repaired
  std::string printed;     // the recipe as printed, when corrected
  std::string note;        // why the printed recipe failed
};

std::string recipe_to_string(const GenRecipe& rec);

struct GeneratorRecord {
  std::string name;
  int degree = 0;
  int order = 0;
  GenRecipe recipe;
  ZForm zform;  // primitive
};

const GeneratorRecord* find_generator(const std::vector<GeneratorRecord>& gens,
                                      const std::string& name);

struct SearchOptions {
  Mode mode = Mode::Generic;
  int max_degree = 2;
  int exact_through = 7;
  unsigned threads = 1;
  bool verify_completeness = false;  // two extra degrees must have delta 0
  std::string checkpoint_path;       // saved after every completed degree
  std::ostream* progress = nullptr;  // optional per-degree progress lines
};

struct SearchState {
  int d = 0;
  Mode mode = Mode::Generic;
  int max_degree = 0;  // highest completed degree
  std::vector<DimensionRow> rows;
  std::vector<GeneratorRecord> generators;
  std::vector<int> verified_zero_degrees;
};

SearchState run_search(int d, const SearchOptions& opts);
// Continue a loaded state to opts.max_degree (d/mode must match).
SearchState resume_search(SearchState state, const SearchOptions& opts);

// Canonical list of degree-i monomials in the generators: depth-first over
// generators in acceptance order, exponent descending at each step. The
// count always equals sigma_i.
struct ProductMonomial {
  std::map<std::string, int> exponents;
  int degree = 0;
};
std::vector<ProductMonomial> enumerate_products(
    const std::vector<GeneratorRecord>& gens, int degree);

// The generic candidate pool for degree i, ordered (r, operand key).
struct CandidateSpec {
  std::map<std::string, int> operand;
  int r = 0;
};
std::vector<CandidateSpec> candidate_pool(
    int d, const std::vector<GeneratorRecord>& gens, int degree);

// Pool evaluation: zero results dropped, order filled in.
struct EvaluatedCandidate {
  CandidateSpec spec;
  ZForm zform;
  int order = 0;
};
std::vector<EvaluatedCandidate> candidate_semitransvectants(
    int d, const std::vector<GeneratorRecord>& gens, int degree,
    unsigned threads = 1);

// Exact relation basis among the degree-i products (meant for degrees the
// exact path can afford). Relations are dense over the product list, each
// scaled so its last nonzero coordinate is 1; ordered by discovering
// product.
struct SyzygyBasis {
  int degree = 0;
  std::vector<ProductMonomial> products;
  std::vector<std::vector<Rat>> relations;
};
SyzygyBasis syzygy_space(int d, const std::vector<GeneratorRecord>& gens,
                         int degree, unsigned threads = 1);

// Checkpoint JSON, schema "covgen/1"; byte-stable for a given state.
nlohmann::ordered_json state_to_json(const SearchState& st);
SearchState state_from_json(const nlohmann::json& j);
void save_state(const SearchState& st, const std::string& path);
SearchState load_state(const std::string& path);

}  // namespace covgen
