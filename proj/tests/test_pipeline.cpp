#include <doctest.h>

#include <random>

#include "braidforce/errors.hpp"
#include "braidforce/pipeline.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"

using namespace braidforce;

namespace {

const std::string kBeta4 = "1 2 -3 -4";

std::multiset<std::pair<std::string, std::string>> signature(const ForcingReport& r) {
  std::multiset<std::pair<std::string, std::string>> s;
  for (const TraceTerm& t : r.terms) s.insert({t.coefficient.get_str(), t.representative.to_string()});
  return s;
}

// Finds the term conjugate to the given word.
const TraceTerm* find_term(const std::vector<TraceTerm>& terms, const BraidWord& w) {
  for (const TraceTerm& t : terms)
    if (conjugate_test(to_word(t.representative), w)) return &t;
  return nullptr;
}

}  // namespace

TEST_CASE("trace") {
  const GroupRingElement t = trace(RepMatrix::identity(4, 2));
  CHECK(t == GroupRingElement::monomial(BraidWord(6), static_cast<long>(basis_size(4, 2))));
  // The pre-merge diagonal for s1 s2^-1 and m = 2, expanded into eight signed elements.
  const GroupRingElement raw = trace(rep(parse_word("1 -2", 3), 2));
  CHECK(raw.size() == 8);
  CHECK(raw == reference::sum(5, "1", reference::s1s2inv_raw_diagonal(), "-2"));
}

TEST_CASE("trace is cyclic after merging classes") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 2);
    const RepMatrix a = rep(oracle::random_word(rng, n, 3, 1), m);
    const RepMatrix b = rep(oracle::random_word(rng, n, 3, 1), m);
    CHECK(project_classes(trace(a * b)) == project_classes(trace(b * a)));
  }
}

TEST_CASE("merged trace of s1 s2^-1, m = 2") {
  const ClassSum c = merged_trace(parse_word("1 -2", 3), 2);
  REQUIRE(c.size() == 8);
  CHECK(c == project_classes(reference::sum(5, "1 -2", reference::s1s2inv_terms())));
  const std::vector<TraceTerm> terms = trace_terms(c);
  for (const auto& [coef, w] : reference::s1s2inv_terms()) {
    const TraceTerm* t = find_term(terms, parse_word("1 -2 " + w, 5));
    REQUIRE(t != nullptr);
    CHECK(t->coefficient == coef);
  }
  CHECK_THROWS_AS(merged_trace(parse_word("1 -1", 3), 2), ValidationError);
}

TEST_CASE("merged traces of s1 s2 s3^-1 s4^-1") {
  const std::string b = kBeta4;
  const ClassSum squared = merged_trace(parse_word(b + " " + b, 5), 1);
  CHECK(squared == project_classes(reference::sum(
                       6, "", {{1, b + " " + b}, {-1, b + " A(1,6) " + b + " A(1,6)"},
                               {-1, b + " A(5,6)^-1 " + b + " A(5,6)^-1"}})));
  const ClassSum two = merged_trace(parse_word(b, 5), 2);
  CHECK(two == project_classes(reference::sum(
                   7, b, {{1, ""}, {-1, "A(1,7)"}, {-1, "A(5,6)^-1"}, {1, "A(1,7) A(5,6)^-1"}})));
  // The identities used to simplify the first trace.
  const BraidWord beta = parse_word(b, 6);
  CHECK(equal(concat(beta, parse_word("A(1,6)", 6)), concat(parse_word("A(2,6)", 6), beta)));
  CHECK(conjugate_test(concat(beta, parse_word("A(2,6) A(5,6)^-1", 6)), beta));
}

TEST_CASE("elementary terms") {
  const std::vector<TraceTerm> terms = trace_terms(merged_trace(parse_word("1 -2", 3), 2));
  // The written words whose last two strands cross, i.e. those with sigma_4.
  for (const auto& [coef, w] : reference::s1s2inv_terms()) {
    const BraidWord word = parse_word("1 -2 " + w, 5);
    const TraceTerm* t = find_term(terms, word);
    REQUIRE(t != nullptr);
    const bool crosses = permutation_of(word)(4) == 5;
    CHECK(tag_elementary(*t, 3, 2) == crosses);
  }
  for (const TraceTerm& t : trace_terms(merged_trace(parse_word("1 -2", 3), 1)))
    CHECK(tag_elementary(t, 3, 1));
  CHECK_FALSE(tag_elementary(TraceTerm{identity_form(5), 1, BraidWord(5), {}}, 3, 2));
}

TEST_CASE("classification of s1 s2^-1, m = 2") {
  const BraidWord beta = parse_word("1 -2", 3);
  const Classification c = classify(beta, merged_trace(beta, 2));
  CHECK(c.beta_type == ThurstonType::pseudo_anosov);
  CHECK(c.complete);
  const auto written = reference::s1s2inv_terms();
  for (std::size_t i = 0; i < written.size(); ++i) {
    const TraceTerm* t = find_term(c.terms, parse_word("1 -2 " + written[i].second, 5));
    REQUIRE(t != nullptr);
    CHECK(t->has(i < 5 ? Tag::excluded : Tag::forced));
    CHECK(t->has(i < 5 ? Tag::reducible : Tag::pseudo_anosov));
  }
}

TEST_CASE("classification needs a pseudo-Anosov beta") {
  const BraidWord beta = parse_word("1 1", 3);
  const Classification c = classify(beta, merged_trace(beta, 1));
  CHECK(c.beta_type == ThurstonType::reducible);
  for (const TraceTerm& t : c.terms) CHECK(t.has(Tag::unclassified));
  CHECK_FALSE(c.note.empty());
}

TEST_CASE("forced extensions end to end") {
  const ForcingReport r = forced_extensions("1 -2", 3, 2);
  CHECK(r.terms.size() == 8);
  CHECK(r.count(Tag::forced) == 3);
  CHECK(r.count(Tag::excluded) == 5);
  CHECK(r.complete());
  CHECK(r.sign_factor() == 1);
  for (const TraceTerm& t : r.terms) {
    const int verdicts = t.has(Tag::forced) + t.has(Tag::excluded) + t.has(Tag::unclassified);
    CHECK(verdicts == 1);
  }
  // Positive coefficients first.
  CHECK(r.terms.front().coefficient > 0);
  CHECK(r.terms.back().coefficient < 0);

  ForcingOptions opts;
  opts.elementary_only = true;
  const ForcingReport e = forced_extensions("1 -2", 3, 2, opts);
  CHECK(e.terms.size() == r.count(Tag::elementary));
  for (const TraceTerm& t : e.terms) {
    CHECK(t.has(Tag::elementary));
    const auto it = std::find_if(r.terms.begin(), r.terms.end(), [&](const TraceTerm& x) {
      return x.representative == t.representative;
    });
    REQUIRE(it != r.terms.end());
    CHECK(it->has(Tag::forced) == t.has(Tag::forced));
  }

  const ForcingReport small = forced_extensions("1", 2, 1);
  CHECK(small.beta_type == ThurstonType::periodic);
  CHECK_FALSE(small.terms.empty());
  for (const TraceTerm& t : small.terms) CHECK(t.has(Tag::unclassified));

  opts = {};
  opts.classify = false;
  const ForcingReport raw = forced_extensions("1 -2", 3, 2, opts);
  CHECK_FALSE(raw.beta_type);
  CHECK(raw.count(Tag::unclassified) == 8);
}

TEST_CASE("s1 s2 s3^-1 s4^-1 forces no elementary extension") {
  // 2 <= m <= min(n1, n2) = 2.
  const ForcingReport r = forced_extensions(kBeta4, 5, 2);
  CHECK(r.beta_type == ThurstonType::pseudo_anosov);
  CHECK(r.terms.size() == 4);
  CHECK(r.count(Tag::forced) == 1);
  for (const TraceTerm& t : r.terms) CHECK_FALSE((t.has(Tag::forced) && t.has(Tag::elementary)));
}

TEST_CASE("stage errors") {
  try {
    forced_extensions("1 x", 3, 2);
    FAIL("no exception");
  } catch (const StageError& e) {
    CHECK(e.stage() == "parse");
    CHECK_THROWS_AS(e.rethrow_nested(), ParseError);
  }
  try {
    forced_extensions("1 -1", 3, 2);
    FAIL("no exception");
  } catch (const StageError& e) {
    CHECK(e.stage() == "trace");
    CHECK_THROWS_AS(e.rethrow_nested(), ValidationError);
  }
  try {
    forced_extensions("1", 3, 0);
    FAIL("no exception");
  } catch (const StageError& e) {
    CHECK(e.stage() == "validate");
  }
  // Cached class representatives skip summit sets, so start cold.
  clear_class_cache();
  ForcingOptions tight;
  tight.summit.max_elements = 1;
  try {
    forced_extensions("1 -2", 3, 2, tight);
    FAIL("no exception");
  } catch (const StageError& e) {
    CHECK(e.stage() == "merge");
    CHECK_THROWS_AS(e.rethrow_nested(), ResourceError);
  }
  ForcingOptions slow;
  slow.merge_seconds = 1e-9;
  clear_class_cache();
  try {
    forced_extensions("1 -2", 3, 2, slow);
    FAIL("no exception");
  } catch (const StageError& e) {
    CHECK(e.stage() == "merge");
    CHECK_THROWS_AS(e.rethrow_nested(), ResourceError);
  }
  slow = {};
  slow.classify_seconds = 1e-9;
  try {
    forced_extensions("1 -2", 3, 2, slow);
    FAIL("no exception");
  } catch (const StageError& e) {
    // No partial report without the type of beta.
    CHECK(e.stage() == "classify");
  }
}

TEST_CASE("partial classification") {
  clear_class_cache();
  ForcingOptions opts;
  opts.summit.max_elements = 12;
  const ForcingReport r = forced_extensions("1 -2", 3, 2, opts);
  CHECK_FALSE(r.complete());
  CHECK(r.terms.size() == 8);
  CHECK(r.count(Tag::unclassified) == 7);
  for (const TraceTerm& t : r.terms) {
    const int verdicts = t.has(Tag::forced) + t.has(Tag::excluded) + t.has(Tag::unclassified);
    CHECK(verdicts == 1);
  }
  CHECK(to_text(r).find("stage classify incomplete") != std::string::npos);
  CHECK(to_json(r)["stages"]["complete"]["classify"] == false);
}

TEST_CASE("conjugation invariance of the pipeline") {
  std::mt19937 rng(47);
  const ForcingReport base = forced_extensions("1 -2", 3, 2);
  for (int trial = 0; trial < 4; ++trial) {
    const BraidWord w = oracle::random_word(rng, 3, 5, 1);
    const BraidWord conj = concat(concat(w, parse_word("1 -2", 3)), braidforce::inverse(w));
    const ForcingReport r = forced_extensions(conj, 2);
    CHECK(signature(r) == signature(base));
    CHECK(r.count(Tag::forced) == 3);
  }
}

TEST_CASE("m = 1 coefficients") {
  for (const auto& [text, n] : std::vector<std::pair<std::string, int>>{
           {"1 -2", 3}, {"1 2 -3", 4}, {kBeta4, 5}, {"1 -2 -2", 3}, {"1 2 -3 -3", 4}}) {
    const ClassSum c = merged_trace(parse_word(text, n), 1);
    for (const auto& [key, t] : c.terms()) CHECK(abs(t.coefficient) == 1);
  }
  // For a square the diagonal of M^2 holds both a12 a21 and a21 a12, which
  // are cyclic conjugates and merge into one class.
  const ClassSum sq = merged_trace(parse_word("1 -2 1 -2", 3), 1);
  int twos = 0;
  for (const auto& [key, t] : sq.terms()) twos += abs(t.coefficient) == 2;
  CHECK(sq.size() == 5);
  CHECK(twos == 2);
}

TEST_CASE("rendered words parse back") {
  const ForcingReport r = forced_extensions("1 -2", 3, 2);
  for (const TraceTerm& t : r.terms) {
    CHECK(equal(parse_word(render_word(t.sample_word), 5), t.sample_word));
  }
}

TEST_CASE("report rendering") {
  ReportFormat f;
  f.factor_beta = true;
  f.lefschetz_sign = true;
  const ForcingReport r = forced_extensions("1 -2", 3, 1);
  const nlohmann::json j = to_json(r, f);
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 1);
  CHECK(j["word"] == "1 -2");
  CHECK(j["beta_type"] == "pseudo_anosov");
  CHECK(j["sign_factor"] == -1);
  REQUIRE(j["terms"].size() == r.terms.size());
  for (const auto& t : j["terms"]) {
    CHECK(t.contains("normal_form"));
    CHECK(std::stol(t["lefschetz_coefficient"].get<std::string>()) ==
          -std::stol(t["coefficient"].get<std::string>()));
    CHECK(t["word"].get<std::string>().rfind("β", 0) == 0);
  }
  CHECK(j["stages"]["complete"]["classify"] == true);
  const std::string text = to_text(r, f);
  CHECK(text.find("pseudo_anosov") != std::string::npos);
  CHECK(text.find("(-1)^m = -1") != std::string::npos);
}
