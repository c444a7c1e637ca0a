/* covgen command-line driver.
 *
 * Subcommands: dims (dimension table), run (generating-system search with
 * optional checkpointing/resume), errata (recompute-and-compare audit of the
 * published degree-8 tables), transvect (one-off semi-transvectant).
 *
 * stdout is deterministic for a fixed command line; progress and timing go
 * to stderr. Exit codes: 0 success, 2 usage error, 3 internal error.
 */
#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "covgen/covariant.hpp"
#include "covgen/report.hpp"
#include "covgen/search.hpp"
#include "covgen/util.hpp"
#include "covgen/zform.hpp"

namespace {

using namespace covgen;

Mode pick_mode(const std::string& flag, int d) {
  if (!flag.empty()) return mode_from_name(flag);
  return d == 8 ? Mode::Named : Mode::Generic;
}

SearchOptions make_options(Mode mode, int max_degree, unsigned threads,
                           bool verify, const std::string& checkpoint) {
  SearchOptions opts;
  opts.mode = mode;
  opts.max_degree = max_degree;
  opts.threads = threads == 0 ? 1 : threads;
  opts.verify_completeness = verify;
  opts.checkpoint_path = checkpoint;
  opts.progress = &std::cerr;
  return opts;
}

int cmd_dims(int d, int max_degree, const std::string& mode_flag,
             unsigned threads, bool as_json) {
  SearchState st = run_search(
      d, make_options(pick_mode(mode_flag, d), max_degree, threads, false, ""));
  if (as_json)
    std::cout << rows_to_json(st.rows).dump(2) << "\n";
  else
    std::cout << render_rows(st.rows);
  return 0;
}

int cmd_run(std::optional<int> d_flag, int max_degree,
            const std::string& mode_flag, const std::string& out_path,
            const std::string& resume_path, unsigned threads, bool verify,
            bool as_json) {
  SearchState st = [&] {
    if (!resume_path.empty()) {
      SearchState prev = load_state(resume_path);
      if (d_flag && *d_flag != prev.d)
        throw usage_error("--d " + std::to_string(*d_flag) +
                          " does not match the checkpoint (d = " +
                          std::to_string(prev.d) + ")");
      Mode mode = mode_flag.empty() ? prev.mode : mode_from_name(mode_flag);
      return resume_search(
          std::move(prev),
          make_options(mode, max_degree, threads, verify, out_path));
    }
    if (!d_flag) throw usage_error("--d is required unless --resume is given");
    return run_search(*d_flag,
                      make_options(pick_mode(mode_flag, *d_flag), max_degree,
                                   threads, verify, out_path));
  }();
  if (!out_path.empty()) save_state(st, out_path);
  if (as_json) {
    std::cout << state_to_json(st).dump(2) << "\n";
    return 0;
  }
  std::cout << render_rows(st.rows) << "\n"
            << render_degree_order_table(st) << "\n"
            << render_generators(st, false);
  return 0;
}

int cmd_errata(int d, const std::string& state_path, unsigned threads,
               bool as_json) {
  require(d == 8, "the published-table audit exists only for d = 8");
  SearchState st;
  if (!state_path.empty()) {
    st = load_state(state_path);
  } else {
    std::cerr << "no --state given: running the paper-mode search to degree "
                 "12 first (about a minute)\n";
    st = run_search(8, make_options(Mode::Named, 12, threads, false, ""));
  }
  AuditReport rep = audit_published(st, threads == 0 ? 1 : threads);
  if (as_json)
    std::cout << audit_to_json(rep).dump(2) << "\n";
  else
    std::cout << render_audit(rep);
  return 0;
}

int cmd_transvect(const std::string& fname, const std::string& gname, int r,
                  std::optional<int> d_flag, const std::string& state_path,
                  bool force_x, bool as_json) {
  std::optional<SearchState> st;
  if (!state_path.empty()) {
    st = load_state(state_path);
    if (d_flag && *d_flag != st->d)
      throw usage_error("--d " + std::to_string(*d_flag) +
                        " does not match the state file (d = " +
                        std::to_string(st->d) + ")");
  } else if (!d_flag) {
    throw usage_error("--d is required unless --state is given");
  }
  const int d = st ? st->d : *d_flag;
  require(d >= 1, "form degree must be at least 1");

  auto resolve = [&](const std::string& name) -> ZForm {
    if (name == "t") return ZForm{Poly::variable(VarSet::Z(d), "t")};
    if (st) {
      if (const GeneratorRecord* g = find_generator(st->generators, name))
        return g->zform;
      throw usage_error("unknown generator '" + name +
                        "' in the state file");
    }
    throw usage_error("unknown form '" + name +
                      "' (only t is built in; pass --state to use named "
                      "generators)");
  };

  const ZForm f = resolve(fname);
  const ZForm g = resolve(gname);
  const int m = zform_order(d, f);
  const int k = zform_order(d, g);
  require(r >= 0, "r must be nonnegative");
  require(r <= std::min(m, k),
          "r out of range: [f, g]^r needs r <= min(ord f, ord g) = " +
              std::to_string(std::min(m, k)));

  std::optional<ZForm> result;
  if (r == 0)
    result = zform_primitive(f * g).first;
  else
    result = semitransvectant_fast(d, d2_on_z(d), f, m, g, k, r);

  const std::string label =
      "[" + fname + ", " + gname + "]^" + std::to_string(r);
  if (!result || result->is_zero()) {
    if (as_json) {
      nlohmann::ordered_json j;
      j["transvectant"] = label;
      j["zero"] = true;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << label << " = 0 (identically zero)\n";
    }
    return 0;
  }

  const Grading gr = zform_x_grading(d, *result);
  const int order = d * gr.degree - 2 * gr.weight;
  const bool show_x = force_x || gr.degree <= 8;
  std::string x_form;
  if (show_x) x_form = z_to_x(d, *result).to_string();

  if (as_json) {
    nlohmann::ordered_json j;
    j["transvectant"] = label;
    j["zero"] = false;
    j["degree"] = gr.degree;
    j["order"] = order;
    j["weight"] = gr.weight;
    j["zform"] = laurent_to_string(*result);
    if (show_x) j["x_form"] = x_form;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << label << " = " << laurent_to_string(*result) << "\n";
  std::cout << "  degree " << gr.degree << ", order " << order << ", weight "
            << gr.weight << "\n";
  if (show_x)
    std::cout << "  X-form: " << x_form << "\n";
  else
    std::cout << "  X-form suppressed at degree " << gr.degree
              << " (pass --x to print it)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"exact generating systems of covariants for binary forms"};
  app.require_subcommand(1);

  std::optional<int> d_flag;
  int max_degree = 0;
  int r = 0;
  unsigned threads = 1;
  std::string mode_flag, out_path, resume_path, state_path;
  std::string fname, gname;
  bool verify = false, as_json = false, force_x = false;

  const auto mode_check = CLI::IsMember({"paper", "generic"});

  CLI::App* dims = app.add_subcommand(
      "dims", "dimension table: dim C_i, product count, relation count, "
              "new generators per degree");
  dims->add_option("--d", d_flag, "degree of the binary form")->required();
  dims->add_option("--max-degree", max_degree, "last covariant degree")
      ->required()
      ->check(CLI::PositiveNumber);
  dims->add_option("--mode", mode_flag, "paper (d = 8 recipe table) or generic")
      ->check(mode_check);
  dims->add_option("--threads", threads, "worker threads")
      ->check(CLI::PositiveNumber);
  dims->add_flag("--json", as_json, "emit JSON instead of the text table");

  CLI::App* run = app.add_subcommand(
      "run", "construct a minimal generating system degree by degree");
  run->add_option("--d", d_flag, "degree of the binary form");
  run->add_option("--max-degree", max_degree, "last covariant degree")
      ->required()
      ->check(CLI::PositiveNumber);
  run->add_option("--mode", mode_flag, "paper (d = 8 recipe table) or generic")
      ->check(mode_check);
  run->add_option("--out", out_path,
                  "state JSON path; also written after every degree as a "
                  "checkpoint");
  run->add_option("--resume", resume_path, "continue from a state JSON file");
  run->add_option("--threads", threads, "worker threads")
      ->check(CLI::PositiveNumber);
  run->add_flag("--verify-completeness", verify,
                "after the last degree, check two further degrees produce no "
                "new generators");
  run->add_flag("--json", as_json, "emit the state JSON on stdout instead of "
                                   "the text tables");

  CLI::App* errata = app.add_subcommand(
      "errata", "recompute every quantity the published degree-8 tables "
                "state and report match/mismatch/note per item");
  errata->add_option("--d", d_flag, "degree of the binary form (must be 8)");
  errata->add_option("--state", state_path,
                     "paper-mode state JSON through degree 12 (computed on "
                     "the fly when omitted)");
  errata->add_option("--threads", threads, "worker threads")
      ->check(CLI::PositiveNumber);
  errata->add_flag("--json", as_json, "emit JSON instead of the text report");

  CLI::App* tv = app.add_subcommand(
      "transvect", "evaluate the semi-transvectant [f, g]^r");
  tv->add_option("f", fname, "left operand: t or a generator name from "
                             "--state")
      ->required();
  tv->add_option("g", gname, "right operand")->required();
  tv->add_option("r", r, "transvectant index")->required();
  tv->add_option("--d", d_flag, "degree of the binary form");
  tv->add_option("--state", state_path,
                 "state JSON providing named generators");
  tv->add_flag("--x", force_x, "print the X-form even when it is large");
  tv->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dims->parsed())
      return cmd_dims(*d_flag, max_degree, mode_flag, threads, as_json);
    if (run->parsed())
      return cmd_run(d_flag, max_degree, mode_flag, out_path, resume_path,
                     threads, verify, as_json);
    if (errata->parsed())
      return cmd_errata(d_flag.value_or(8), state_path, threads, as_json);
    if (tv->parsed())
      return cmd_transvect(fname, gname, r, d_flag, state_path, force_x,
                           as_json);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
