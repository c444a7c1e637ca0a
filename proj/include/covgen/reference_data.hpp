/* Published reference values for the degree-8 system, transcribed verbatim
 * (including the misprints) so the errata audit can compare them against what
 * the engine actually computes, and so the named construction mode can follow
 * the published recipe table.
 *
 * Everything in here is DATA — fixed strings and integers.  Nothing is
 * computed; the audit lives in report.cpp.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace covgen::refdata {

// One row of the published per-degree bookkeeping table.  Values are stored
// exactly as printed; `printed_note` records label slips or garbling attached
// to the row (empty when the row is printed cleanly).
struct PublishedRow {
  int i = 0;
  long dim_c = 0;
  long sigma = 0;
  long dim_s = 0;   // -1 where the row never states it
  long delta = 0;
  std::string printed_note;
};

const std::vector<PublishedRow>& published_rows();

// The published named-generator recipes, in the order the table lists them.
// Every generator past the form itself is a semitransvectant [t, w]^r where
// w is a monomial in earlier named generators.  `order` is the order the
// table/appendix assigns to the result.  Misprinted recipes are stored as
// printed; the construction mode detects and repairs them at run time.
struct NamedRecipe {
  std::string name;
  int degree = 0;
  int order = 0;
  std::map<std::string, int> operand;  // empty for the seed entry "t"
  int r = 0;
};

const std::vector<NamedRecipe>& named_recipes();

// Appendix degree/order distribution: degree -> (order -> names), the
// authoritative shape the audit checks generator tables against.
const std::map<int, std::map<int, std::vector<std::string>>>& degree_order_table();

// Printed z_2..z_8 (canonical-form reference strings for the t-module
// coordinates of the degree-8 form).
const std::vector<std::pair<int, std::string>>& printed_z_forms();

// The degree-2 generators are printed in closed form, both as z-fractions and
// as polynomials in the form coefficients.
struct PrintedDvForm {
  std::string name;
  std::string z_numerator;
  int tpow = 0;
  std::string x_form;
};

const std::vector<PrintedDvForm>& printed_dv_forms();

// Printed images of the transported derivation on C[t, z2..z8][1/t], as
// (variable name, numerator string, t-power).  Several entries are misprints
// belonging to the degree-7 operator; the audit classifies each one.
struct PrintedDerivationImage {
  std::string var;
  std::string numerator;
  int tpow = 0;
};

const std::vector<PrintedDerivationImage>& printed_derivation_images();

// The three published degree-5 relations among products of named generators,
// as (coefficient, product-monomial) lists.  Generator normalizations in the
// publication are only pinned up to sign, so the audit checks containment in
// the computed relation space over all per-generator sign choices.
struct PrintedSyzygy {
  std::string label;
  std::vector<std::pair<long, std::map<std::string, int>>> terms;
};

const std::vector<PrintedSyzygy>& printed_syzygies();

// Free-form printed slips that have no computed counterpart to diff against
// (duplicated names in the final list, wrong subscripts on labels, a display
// that omits part of an enumeration).  Surfaced as note entries in the audit.
struct PrintedNote {
  std::string anchor;   // stable key, e.g. "table.final-list.sh"
  std::string printed;
  std::string correction;
};

const std::vector<PrintedNote>& printed_notes();

}  // namespace covgen::refdata
