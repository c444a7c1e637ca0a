/* Rendering and audit: aligned text tables for the CLI, JSON mirrors of the
 * same data, and the published-value audit that recomputes every quantity
 * the degree-8 tables state and classifies each one as match, mismatch
 * (with the computed correction), or note.
 */
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "covgen/search.hpp"

namespace covgen {

// "(z4 + 3*z2^2)/t^2", "z2", "(...)/t" — numerator-over-t-power display.
std::string laurent_to_string(const Laurent& f);

std::string render_rows(const std::vector<DimensionRow>& rows);
nlohmann::ordered_json rows_to_json(const std::vector<DimensionRow>& rows);

// Generators grouped by degree in acceptance order, with orders.
std::string render_degree_order_table(const SearchState& st);
// One block per generator: recipe, degree, order, optionally the z-form.
std::string render_generators(const SearchState& st, bool with_zforms);

struct AuditEntry {
  std::string anchor;    // dotted path of the fact being checked
  std::string printed;   // what the publication states
  std::string computed;  // what the engine computes
  std::string status;    // "match" | "mismatch" | "note"
  std::string note;      // classification detail
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  int matches = 0;
  int mismatches = 0;
  int notes = 0;
};

// Recompute everything the published degree-8 tables state and compare.
// Requires a named-mode state completed through degree 12.
AuditReport audit_published(const SearchState& st, unsigned threads = 1);

std::string render_audit(const AuditReport& rep);
nlohmann::ordered_json audit_to_json(const AuditReport& rep);

}  // namespace covgen
