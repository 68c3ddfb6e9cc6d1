#include <doctest.h>

#include <fstream>

#include "braidforce/pipeline.hpp"

using namespace braidforce;

namespace {

nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

nlohmann::json run(const std::string& word, int n, int m, bool factor_beta) {
  ReportFormat f;
  f.factor_beta = factor_beta;
  f.timings = false;
  return to_json(forced_extensions(word, n, m), f);
}

}  // namespace

TEST_CASE("golden reports") {
  CHECK(run("1 -2", 3, 2, true) == load("b3_s1_s2inv_m2.json"));
  CHECK(run("1 2 -3 -4", 5, 2, true) == load("b5_s1_s2_s3inv_s4inv_m2.json"));
  CHECK(run("1 2 -3 -4 1 2 -3 -4", 5, 1, false) == load("b5_s1_s2_s3inv_s4inv_squared_m1.json"));
}

TEST_CASE("golden schema") {
  const nlohmann::json j = load("b3_s1_s2inv_m2.json");
  for (const char* key : {"n", "m", "word", "beta_type", "terms", "stages"}) CHECK(j.contains(key));
  for (const auto& t : j["terms"])
    for (const char* key : {"word", "normal_form", "coefficient", "tags"}) CHECK(t.contains(key));
  CHECK(j["stages"].contains("timings"));
  CHECK(j["stages"].contains("budgets"));
}
