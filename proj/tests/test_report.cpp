#include <cstdlib>
#include <numbers>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "emlab/report.hpp"

using namespace emlab;

namespace {

SuiteReport small_report() {
  SamplerConfig cfg;
  cfg.seed = 4;
  cfg.n_samples = 500;
  return run_suite(cfg, {InequalityId::EM, InequalityId::LEMMA_A});
}

}  // namespace

TEST_CASE("format_double round trips") {
  for (const double v : {1.0 / 3.0, 0.5, std::numbers::pi, 1e-300, -2.75e17,
                         6.8125592000412641, 0.0}) {
    const std::string text = format_double(v);
    CHECK(std::strtod(text.c_str(), nullptr) == v);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("suite report JSON") {
  const SuiteReport report = small_report();
  const std::string json = suite_report_json(report);
  SUBCASE("byte stability") {
    CHECK(json == suite_report_json(small_report()));
  }
  SUBCASE("fixed key skeleton") {
    CHECK(json.rfind("{\"schema_version\":1,\"command\":\"verify\",\"config\":{\"seed\":4,"
                     "\"samples\":500,",
                     0) == 0);
  }
  SUBCASE("parses and carries the per-id records") {
    const nlohmann::json doc = nlohmann::json::parse(json);
    CHECK(doc["schema_version"] == 1);
    REQUIRE(doc["results"].size() == 2);
    CHECK(doc["results"][0]["id"] == "EM");
    CHECK(doc["results"][1]["id"] == "LEMMA_A");
    CHECK(doc["results"][0]["samples"] == 500);
    CHECK(doc["results"][0]["violations"] == 0);
    CHECK(doc["results"][0]["histogram"].size() == kHistogramBins);
    CHECK(doc["results"][0]["worst_violation"].is_null());
    CHECK(doc["results"][0]["argmin"]["triangle"].size() == 6);
  }
}

TEST_CASE("suite report CSV") {
  const std::string csv = suite_report_csv(small_report());
  CHECK(csv.rfind("id,samples,violations,min_rel_slack,argmin_sample_index,ax,ay",
                  0) == 0);
  // header + one row per id, trailing newline
  int lines = 0;
  for (char ch : csv) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 3);
  CHECK(csv.find("\nEM,500,0,") != std::string::npos);
  CHECK(csv.find("\nLEMMA_A,500,0,") != std::string::npos);
}

TEST_CASE("identity report serialization") {
  SamplerConfig cfg;
  cfg.seed = 2;
  cfg.n_samples = 300;
  const IdentityReport report = check_identities(cfg);
  const nlohmann::json doc = nlohmann::json::parse(identity_report_json(report));
  REQUIRE(doc["identities"].size() == 4);
  CHECK(doc["identities"][0]["name"] == "tangent_identity");
  CHECK(doc["identities"][0]["pass"] == true);
  const std::string csv = identity_report_csv(report);
  CHECK(csv.rfind("name,samples,max_rel_diff,tolerance,pass", 0) == 0);
}

TEST_CASE("tightness report serialization") {
  SamplerConfig cfg;
  cfg.seed = 7;
  const std::vector<TightnessResult> results = {
      minimize_slack(InequalityId::EM, 2, 200, 7)};
  const std::vector<EqualityReport> equality = {
      verify_equality_locus(InequalityId::EM, 1e-2, 20, 7)};
  const nlohmann::json doc =
      nlohmann::json::parse(tightness_report_json(cfg, 200, results, equality));
  CHECK(doc["command"] == "tighten");
  CHECK(doc["max_iter"] == 200);
  REQUIRE(doc["tightness"].size() == 1);
  CHECK(doc["tightness"][0]["id"] == "EM");
  CHECK(doc["tightness"][0]["starts"] == 3);
  CHECK(doc["tightness"][0]["argmin"]["barycentric"].size() == 3);
  CHECK(doc["equality"][0]["n_probes"] == 20);
}

TEST_CASE("catalog JSON lists all entries") {
  const nlohmann::json doc = nlohmann::json::parse(catalog_json());
  REQUIRE(doc["entries"].size() == 25);
  CHECK(doc["entries"][0]["id"] == "EM");
  CHECK(doc["entries"][0]["weights"] == "none");
  bool found_both = false;
  for (const auto& entry : doc["entries"]) {
    if (entry["weights"] == "xyz+uvw") found_both = true;
  }
  CHECK(found_both);
}
