#include <CLI11.hpp>
#include <iostream>

#include "braidforce/errors.hpp"
#include "braidforce/pipeline.hpp"

using namespace braidforce;

namespace {

enum Exit { ok = 0, bad_input = 2, resources = 3, no_classification = 4, internal = 1 };

// Maps the innermost exception of a (possibly nested) failure to an exit code.
int exit_code(const std::exception& e) {
  try {
    std::rethrow_if_nested(e);
  } catch (const std::exception& inner) {
    return exit_code(inner);
  }
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e)) return bad_input;
  if (dynamic_cast<const ResourceError*>(&e)) return resources;
  return internal;
}

struct TraceArgs {
  int n = 0;
  int m = 1;
  std::string word;
  std::string format = "text";
  bool elementary_only = false;
  bool factor_beta = false;
  bool no_classify = false;
  bool require_classification = false;
  bool lefschetz_sign = false;
  bool no_timings = false;
  std::size_t budget_summit = SummitOptions{}.max_elements;
  double merge_timeout = 0;
  double classify_timeout = 0;
};

int run_trace(const TraceArgs& a) {
  ForcingOptions opts;
  opts.elementary_only = a.elementary_only;
  opts.classify = !a.no_classify;
  opts.summit.max_elements = a.budget_summit;
  opts.merge_seconds = a.merge_timeout;
  opts.classify_seconds = a.classify_timeout;
  const ForcingReport r = forced_extensions(a.word, a.n, a.m, opts);

  ReportFormat f;
  f.factor_beta = a.factor_beta;
  f.lefschetz_sign = a.lefschetz_sign;
  f.timings = !a.no_timings;
  if (a.format == "json") {
    std::cout << to_json(r, f).dump(2) << "\n";
  } else {
    std::cout << to_text(r, f);
  }
  if (!r.complete()) return resources;
  if (a.require_classification && r.beta_type != ThurstonType::pseudo_anosov) {
    std::cerr << "classification unavailable: beta is "
              << (r.beta_type ? to_string(*r.beta_type) : "not classified") << "\n";
    return no_classification;
  }
  return ok;
}

int run_matrix(int n, int m, const std::string& word, bool factor) {
  const BraidWord w = parse_word(word, n);
  if (m < 1) throw ValidationError("m must be at least 1");
  RenderOptions opts;
  if (factor) opts.beta = embed_trivial(w, n + m);
  std::cout << dump(rep(w, m), opts);
  return ok;
}

int run_type(int n, const std::string& word, std::size_t budget) {
  SummitOptions opts;
  opts.max_elements = budget;
  const BraidWord w = parse_word(word, n);
  std::cout << to_string(thurston_type(w, opts));
  if (const auto r = invariant_round_multicurve(w)) std::cout << " " << r->to_string();
  std::cout << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forced extensions of braids"};
  app.require_subcommand(1);

  TraceArgs t;
  CLI::App* trace_cmd = app.add_subcommand("trace", "merged trace of zeta_{n,m}(beta), tagged and classified");
  trace_cmd->add_option("--n", t.n, "strands of beta")->required()->check(CLI::PositiveNumber);
  trace_cmd->add_option("--m", t.m, "strands appended")->required();
  trace_cmd->add_option("--word", t.word, "beta, e.g. \"1 -2\" or \"s1 s2^-1\"")->required();
  trace_cmd->add_option("--format", t.format)->check(CLI::IsMember({"text", "json"}));
  trace_cmd->add_flag("--elementary-only", t.elementary_only, "drop non-elementary terms before classifying");
  trace_cmd->add_flag("--factor-beta", t.factor_beta, "display terms as beta times a word");
  trace_cmd->add_flag("--no-classify", t.no_classify);
  trace_cmd->add_flag("--require-classification", t.require_classification,
                      "exit 4 unless beta is pseudo-Anosov");
  trace_cmd->add_flag("--lefschetz-sign", t.lefschetz_sign, "also show coefficients times (-1)^m");
  trace_cmd->add_flag("--no-timings", t.no_timings, "omit stage timings from JSON");
  trace_cmd->add_option("--budget-summit", t.budget_summit, "summit-set element limit")
      ->check(CLI::PositiveNumber);
  trace_cmd->add_option("--merge-timeout", t.merge_timeout, "seconds; 0 for none")
      ->check(CLI::NonNegativeNumber);
  trace_cmd->add_option("--classify-timeout", t.classify_timeout, "seconds; 0 for none")
      ->check(CLI::NonNegativeNumber);

  int mn = 0, mm = 1;
  std::string mword;
  bool mfactor = false;
  CLI::App* matrix_cmd = app.add_subcommand("matrix", "nonzero entries of zeta_{n,m}(word)");
  matrix_cmd->add_option("--n", mn)->required()->check(CLI::PositiveNumber);
  matrix_cmd->add_option("--m", mm)->required();
  matrix_cmd->add_option("--word", mword)->required();
  matrix_cmd->add_flag("--factor-beta", mfactor);

  int tn = 0;
  std::string tword;
  std::size_t tbudget = SummitOptions{}.max_elements;
  CLI::App* type_cmd = app.add_subcommand("type", "Nielsen-Thurston type of a braid");
  type_cmd->add_option("--n", tn)->required()->check(CLI::PositiveNumber);
  type_cmd->add_option("--word", tword)->required();
  type_cmd->add_option("--budget-summit", tbudget)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*trace_cmd) return run_trace(t);
    if (*matrix_cmd) return run_matrix(mn, mm, mword, mfactor);
    return run_type(tn, tword, tbudget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}
