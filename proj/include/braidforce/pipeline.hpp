#pragma once

// Forced extensions of a braid: trace of zeta_{n,m}, merge by conjugacy
// class in B_{n+m}, tag, classify.

#include <gmpxx.h>

#include <exception>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "braidforce/braid.hpp"
#include "braidforce/curves.hpp"
#include "braidforce/garside.hpp"
#include "braidforce/groupring.hpp"
#include "braidforce/zeta.hpp"

namespace braidforce {

enum class Tag { elementary, periodic, reducible, pseudo_anosov, forced, excluded, unclassified };
std::string to_string(Tag t);

struct TraceTerm {
  CanonicalForm representative;
  mpz_class coefficient;
  BraidWord sample_word;
  std::vector<Tag> tags;  // sorted, no repeats

  bool has(Tag t) const;
  void add(Tag t);
};

// Sum of the diagonal entries, before any projection.
GroupRingElement trace(const RepMatrix& a);
// Throws ValidationError when beta is trivial.
ClassSum merged_trace(const BraidWord& beta, int m, const SummitOptions& opts = {});

std::vector<TraceTerm> trace_terms(const ClassSum& cs);
// The strands n+1..n+m of the sample word form a single m-cycle.
bool tag_elementary(const TraceTerm& t, int n, int m);

struct Classification {
  ThurstonType beta_type = ThurstonType::pseudo_anosov;
  std::vector<TraceTerm> terms;
  bool complete = true;
  std::string note;
};

// Tags every term forced/excluded when beta is pseudo-Anosov and
// unclassified otherwise. A summit budget overrun leaves the remaining
// terms unclassified and marks the result incomplete.
Classification classify(const BraidWord& beta, std::vector<TraceTerm> terms,
                        const SummitOptions& opts = {});
Classification classify(const BraidWord& beta, const ClassSum& cs, const SummitOptions& opts = {});

struct ForcingOptions {
  bool elementary_only = false;
  bool classify = true;
  SummitOptions summit{};
  // Wall-clock limits per stage in seconds; 0 means none.
  double merge_seconds = 0;
  double classify_seconds = 0;
};

struct StageReport {
  std::string name;
  double seconds = 0;
  bool complete = true;
  std::string detail;
};

struct ForcingReport {
  int n = 0;
  int m = 0;
  BraidWord beta;
  std::optional<ThurstonType> beta_type;
  std::vector<TraceTerm> terms;
  ForcingOptions options;
  std::vector<StageReport> stages;
  std::string note;

  // The (-1)^m of the Lefschetz-side count; never folded into coefficients.
  int sign_factor() const { return m % 2 ? -1 : 1; }
  bool complete() const;
  std::size_t count(Tag t) const;
};

// An upstream failure, labelled with the stage it happened in. The original
// exception is nested.
class StageError : public std::runtime_error, public std::nested_exception {
 public:
  StageError(const std::string& stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(stage) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

ForcingReport forced_extensions(const std::string& text, int n, int m,
                                const ForcingOptions& opts = {});
ForcingReport forced_extensions(const BraidWord& beta, int m, const ForcingOptions& opts = {});

struct ReportFormat {
  bool factor_beta = false;
  bool lefschetz_sign = false;
  bool timings = true;
};

nlohmann::json to_json(const ForcingReport& r, const ReportFormat& f = {});
std::string to_text(const ForcingReport& r, const ReportFormat& f = {});

}  // namespace braidforce
