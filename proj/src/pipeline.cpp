#include "braidforce/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "braidforce/errors.hpp"

namespace braidforce {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs f, rethrowing any failure as a StageError that nests the original.
template <class F>
auto in_stage(const std::string& stage, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    std::throw_with_nested(StageError(stage, e.what()));
  }
}

SummitOptions with_limit(SummitOptions o, double seconds) {
  if (seconds > 0) o.deadline = Deadline::after(seconds);
  return o;
}

bool keeps_last_strands(const Permutation& p, int n, int m) {
  for (int k = n + 1; k <= n + m; ++k)
    if (p(k) <= n) return false;
  return true;
}

std::string term_display(const TraceTerm& t, const BraidWord& beta, bool factor_beta) {
  if (!factor_beta) return render_word(t.sample_word);
  const BraidWord rest =
      free_reduce(concat(inverse(embed_trivial(beta, t.sample_word.strands())), t.sample_word));
  return rest.letters().empty() ? "β" : "β " + render_word(rest);
}

}  // namespace

std::string to_string(Tag t) {
  switch (t) {
    case Tag::elementary:
      return "elementary";
    case Tag::periodic:
      return "periodic";
    case Tag::reducible:
      return "reducible";
    case Tag::pseudo_anosov:
      return "pseudo_anosov";
    case Tag::forced:
      return "forced";
    case Tag::excluded:
      return "excluded";
    case Tag::unclassified:
      return "unclassified";
  }
  return "?";
}

bool TraceTerm::has(Tag t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

void TraceTerm::add(Tag t) {
  if (has(t)) return;
  tags.push_back(t);
  std::sort(tags.begin(), tags.end());
}

GroupRingElement trace(const RepMatrix& a) {
  GroupRingElement s(a.strands());
  for (int i = 0; i < a.dim(); ++i) s = s + a.at(i, i);
  return s;
}

ClassSum merged_trace(const BraidWord& beta, int m, const SummitOptions& opts) {
  if (normal_form(beta) == identity_form(beta.strands())) {
    throw ValidationError("the trivial braid has no forced extensions to compute");
  }
  if (m < 1) throw ValidationError("m must be at least 1");
  return project_classes(trace(rep(beta, m)), opts);
}

std::vector<TraceTerm> trace_terms(const ClassSum& cs) {
  std::vector<TraceTerm> out;
  for (const auto& [rep, t] : cs.terms()) out.push_back(TraceTerm{rep, t.coefficient, t.sample, {}});
  std::stable_sort(out.begin(), out.end(), [](const TraceTerm& a, const TraceTerm& b) {
    const int sa = sgn(a.coefficient), sb = sgn(b.coefficient);
    if (sa != sb) return sa > sb;
    return a.representative < b.representative;
  });
  return out;
}

bool tag_elementary(const TraceTerm& t, int n, int m) {
  const Permutation p = permutation_of(t.sample_word);
  if (!keeps_last_strands(p, n, m)) return false;
  int k = n + 1, length = 0;
  do {
    k = p(k);
    ++length;
  } while (k != n + 1);
  return length == m;
}

Classification classify(const BraidWord& beta, std::vector<TraceTerm> terms,
                        const SummitOptions& opts) {
  Classification c;
  c.beta_type = thurston_type(beta, opts);
  if (c.beta_type != ThurstonType::pseudo_anosov) {
    for (TraceTerm& t : terms) t.add(Tag::unclassified);
    c.note = "beta is " + to_string(c.beta_type) +
             "; collapsible and peripheral terms are only identified for pseudo-Anosov beta";
    c.terms = std::move(terms);
    return c;
  }
  std::size_t done = 0;
  try {
    for (; done < terms.size(); ++done) {
      TraceTerm& t = terms[done];
      if (is_periodic(t.representative)) {
        t.add(Tag::periodic);
        t.add(Tag::excluded);
        c.note = "a periodic term occurred; it is excluded";
      } else if (is_reducible(to_word(t.representative), opts)) {
        t.add(Tag::reducible);
        t.add(Tag::excluded);
      } else {
        t.add(Tag::pseudo_anosov);
        t.add(Tag::forced);
      }
    }
  } catch (const ResourceError& e) {
    for (std::size_t i = done; i < terms.size(); ++i) terms[i].add(Tag::unclassified);
    c.complete = false;
    c.note = e.what();
  }
  c.terms = std::move(terms);
  return c;
}

Classification classify(const BraidWord& beta, const ClassSum& cs, const SummitOptions& opts) {
  return classify(beta, trace_terms(cs), opts);
}

bool ForcingReport::complete() const {
  return std::all_of(stages.begin(), stages.end(), [](const StageReport& s) { return s.complete; });
}

std::size_t ForcingReport::count(Tag t) const {
  return std::count_if(terms.begin(), terms.end(), [t](const TraceTerm& x) { return x.has(t); });
}

ForcingReport forced_extensions(const BraidWord& beta, int m, const ForcingOptions& opts) {
  ForcingReport r;
  r.n = beta.strands();
  r.m = m;
  r.beta = beta;
  r.options = opts;
  in_stage("validate", [&] {
    if (r.n < 2) throw ValidationError("beta needs at least 2 strands");
    if (m < 1) throw ValidationError("m must be at least 1");
    if (r.n + m > kMaxStrands) {
      throw ValidationError("n + m exceeds " + std::to_string(kMaxStrands) + " strands");
    }
    return 0;
  });

  auto start = Clock::now();
  const GroupRingElement raw = in_stage("trace", [&] {
    if (normal_form(beta) == identity_form(r.n)) {
      throw ValidationError("the trivial braid has no forced extensions to compute");
    }
    return trace(rep(beta, m));
  });
  r.stages.push_back({"trace", seconds_since(start), true, std::to_string(raw.size()) + " raw terms"});

  start = Clock::now();
  const ClassSum merged = in_stage("merge", [&] {
    return project_classes(raw, with_limit(opts.summit, opts.merge_seconds));
  });
  std::vector<TraceTerm> terms = trace_terms(merged);
  for (TraceTerm& t : terms) {
    if (!keeps_last_strands(permutation_of(t.sample_word), r.n, m)) {
      throw StageError("merge", "term " + t.sample_word.to_string() +
                                    " does not keep the added strands together");
    }
    if (tag_elementary(t, r.n, m)) t.add(Tag::elementary);
  }
  r.stages.push_back({"merge", seconds_since(start), true,
                      std::to_string(terms.size()) + " conjugacy classes"});

  if (opts.elementary_only) {
    std::erase_if(terms, [](const TraceTerm& t) { return !t.has(Tag::elementary); });
  }

  if (opts.classify) {
    start = Clock::now();
    Classification c = in_stage("classify", [&] {
      return classify(beta, std::move(terms), with_limit(opts.summit, opts.classify_seconds));
    });
    r.beta_type = c.beta_type;
    r.note = c.note;
    terms = std::move(c.terms);
    r.stages.push_back({"classify", seconds_since(start), c.complete,
                        c.complete ? "" : c.note});
  } else {
    for (TraceTerm& t : terms) t.add(Tag::unclassified);
    r.note = "classification skipped";
  }
  r.terms = std::move(terms);
  return r;
}

ForcingReport forced_extensions(const std::string& text, int n, int m, const ForcingOptions& opts) {
  const BraidWord beta = in_stage("parse", [&] { return parse_word(text, n); });
  return forced_extensions(beta, m, opts);
}

nlohmann::json to_json(const ForcingReport& r, const ReportFormat& f) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["word"] = r.beta.to_string();
  j["beta_type"] = r.beta_type ? to_string(*r.beta_type) : "unknown";
  j["sign_factor"] = r.sign_factor();
  j["terms"] = nlohmann::json::array();
  for (const TraceTerm& t : r.terms) {
    nlohmann::json jt;
    jt["word"] = term_display(t, r.beta, f.factor_beta);
    jt["sample"] = t.sample_word.to_string();
    jt["normal_form"] = t.representative.to_string();
    jt["coefficient"] = t.coefficient.get_str();
    if (f.lefschetz_sign) jt["lefschetz_coefficient"] = mpz_class(t.coefficient * r.sign_factor()).get_str();
    jt["tags"] = nlohmann::json::array();
    for (Tag tag : t.tags) jt["tags"].push_back(to_string(tag));
    j["terms"].push_back(jt);
  }
  nlohmann::json timings = nlohmann::json::object(), complete = nlohmann::json::object();
  for (const StageReport& s : r.stages) {
    if (f.timings) timings[s.name] = s.seconds;
    complete[s.name] = s.complete;
  }
  j["stages"] = {{"timings", timings},
                 {"complete", complete},
                 {"budgets",
                  {{"summit_elements", r.options.summit.max_elements},
                   {"merge_seconds", r.options.merge_seconds},
                   {"classify_seconds", r.options.classify_seconds}}}};
  j["options"] = {{"elementary_only", r.options.elementary_only}, {"classify", r.options.classify}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string to_text(const ForcingReport& r, const ReportFormat& f) {
  std::ostringstream out;
  out << "beta = " << render_word(r.beta) << " in B_" << r.n << ", m = " << r.m << "\n";
  out << "type: " << (r.beta_type ? to_string(*r.beta_type) : "unknown") << "\n";
  out << r.terms.size() << " conjugacy classes, " << r.count(Tag::forced) << " forced\n";
  for (const TraceTerm& t : r.terms) {
    mpz_class c = t.coefficient;
    if (f.lefschetz_sign) c *= r.sign_factor();
    out << (c > 0 ? "+" : "") << c.get_str() << "  " << term_display(t, r.beta, f.factor_beta) << "  [";
    for (std::size_t i = 0; i < t.tags.size(); ++i) out << (i ? "," : "") << to_string(t.tags[i]);
    out << "]\n";
  }
  if (f.lefschetz_sign) out << "coefficients multiplied by (-1)^m = " << r.sign_factor() << "\n";
  if (!r.note.empty()) out << "note: " << r.note << "\n";
  for (const StageReport& s : r.stages) {
    if (!s.complete) out << "stage " << s.name << " incomplete: " << s.detail << "\n";
  }
  return out.str();
}

}  // namespace braidforce
