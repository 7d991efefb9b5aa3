#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "emlab/tighten.hpp"
#include "test_util.hpp"

using namespace emlab;
using emlab::test::rel_diff;

TEST_CASE("decode at theta = 0 gives the canonical configuration") {
  const DecodedConfig config = decode(SearchPoint{});
  const SideLengths s = config.tri.sides();
  CHECK(rel_diff(s.a, 1.0) <= 1e-12);
  CHECK(rel_diff(s.b, 1.0) <= 1e-12);
  CHECK(rel_diff(s.c, 1.0) <= 1e-12);
  CHECK(s.max() == 1.0);
  CHECK(rel_diff(config.bary.lambda_a(), 1.0 / 3) <= 1e-12);
  CHECK(rel_diff(config.bary.lambda_b(), 1.0 / 3) <= 1e-12);
  CHECK(config.weights.x() == 1.0);
  CHECK(config.weights.w() == 1.0);
  CHECK(distance_to_canonical(config) <= 1e-12);
}

TEST_CASE("decode rejects non-finite input") {
  SearchPoint p;
  p.theta[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(decode(p), std::domain_error);
}

TEST_CASE("decode is continuous in theta") {
  SplitMix64 rng = sample_stream(71, 0);
  for (int trial = 0; trial < 50; ++trial) {
    SearchPoint base;
    for (auto& t : base.theta) t = rng.next_normal();
    const DecodedConfig c0 = decode(base);
    for (std::size_t d = 0; d < kSearchDim; ++d) {
      SearchPoint moved = base;
      moved.theta[d] += 1e-7;
      const DecodedConfig c1 = decode(moved);
      CHECK(std::abs(c1.tri.B().x - c0.tri.B().x) < 1e-5);
      CHECK(std::abs(c1.tri.C().y - c0.tri.C().y) < 1e-5);
      CHECK(std::abs(c1.bary.lambda_a() - c0.bary.lambda_a()) < 1e-5);
      CHECK(std::abs(c1.weights.log_u() - c0.weights.log_u()) < 1e-5);
    }
  }
}

TEST_CASE("decode respects the min-angle floor under extreme theta") {
  SearchPoint p;
  p.theta[0] = 40.0;  // pushes one angle toward the whole span
  p.theta[1] = -40.0;
  const DecodedConfig config = decode(p);
  const SideLengths s = config.tri.sides();
  const double smallest = std::acos(std::clamp(
      (s.a * s.a + s.b * s.b - s.c * s.c) / (2 * s.a * s.b), -1.0, 1.0));
  CHECK(config.tri.area() > 0.0);
  CHECK(smallest >= 0.02 * (1 - 1e-6));
}

TEST_CASE("frozen coordinates: EM decodes to unit weights for any tail") {
  SearchPoint p;
  p.theta = {0.3, -0.2, 0.1, 0.4, 5.0, -3.0, 2.0, 1.0};
  const DecodedConfig config = decode_for(InequalityId::EM, p);
  CHECK(config.weights.x() == 1.0);
  CHECK(config.weights.u() == 1.0);
  // shape and point coordinates pass through
  const DecodedConfig full = decode(p);
  CHECK(config.tri.B().x == full.tri.B().x);
  CHECK(config.bary.lambda_a() == full.bary.lambda_a());
}

TEST_CASE("free coordinate masks") {
  const auto em = free_coordinates(InequalityId::EM);
  CHECK(em == std::array<bool, 8>{true, true, true, true, false, false, false, false});
  const auto wem = free_coordinates(InequalityId::WEM);
  CHECK(wem == std::array<bool, 8>{true, true, true, true, true, true, true, true});
  const auto prod = free_coordinates(InequalityId::PROD_EM);
  CHECK(prod == std::array<bool, 8>{true, true, true, true, false, false, true, true});
  // specializations keep weights pinned
  const auto x1 = free_coordinates(InequalityId::WEM_X1);
  CHECK(x1 == em);
  const auto strong = free_coordinates(InequalityId::WBARROW_STRONG);
  CHECK(strong == em);
}

TEST_CASE("encode/decode round trip preserves the configuration") {
  const EqualityConfiguration eq = equality_configuration(InequalityId::LEMMA_A);
  const SearchPoint theta = encode(eq.tri, eq.bary, eq.weights);
  const DecodedConfig back = decode(theta);
  // same shape (angles) up to rounding, same barycentrics, same weights
  const SideLengths s0 = eq.tri.sides();
  const SideLengths s1 = back.tri.sides();
  CHECK(rel_diff(s0.a / s0.max(), s1.a) <= 1e-9);
  CHECK(rel_diff(s0.b / s0.max(), s1.b) <= 1e-9);
  CHECK(rel_diff(s0.c / s0.max(), s1.c) <= 1e-9);
  CHECK(rel_diff(back.bary.lambda_a(), eq.bary.lambda_a()) <= 1e-9);
  CHECK(rel_diff(back.bary.lambda_b(), eq.bary.lambda_b()) <= 1e-9);
  CHECK(back.weights.log_x() == 0.0);
}

TEST_CASE("minimize_slack finds the zero of EM quickly") {
  const TightnessResult result = minimize_slack(InequalityId::EM, 4, 600, 7);
  CHECK(result.starts == 5);
  CHECK(result.min_slack >= -1e-9);
  CHECK(result.min_slack <= 1e-6);
  CHECK(result.distance <= 1e-3);
  CHECK(result.converged_starts >= 1);
}

TEST_CASE("minimize_slack on the chain link confirms PA=PB=PC equality") {
  const TightnessResult result =
      minimize_slack(InequalityId::BARROW_CHAIN_A, 6, 800, 7);
  CHECK(result.min_slack <= 1e-6);
  const DecodedConfig config = result.argmin();
  const Point2 p = barycentric_to_cartesian(config.tri, config.bary);
  const VertexDistances vd = vertex_distances(config.tri, p);
  CHECK(std::abs(vd.pa - vd.pb) <= 1e-3);
  CHECK(std::abs(vd.pb - vd.pc) <= 1e-3);
}

TEST_CASE("minimize_slack explores weights where the entry reads them") {
  const TightnessResult result = minimize_slack(InequalityId::WEM, 6, 800, 7);
  CHECK(result.min_slack <= 1e-6);
  CHECK(result.distance <= 1e-3);  // includes the log-weight norm
}

TEST_CASE("parallel starts match the serial reduction") {
  const TightnessResult serial =
      minimize_slack(InequalityId::DARGUERON, 6, 400, 11, {}, nullptr, 1);
  const TightnessResult parallel =
      minimize_slack(InequalityId::DARGUERON, 6, 400, 11, {}, nullptr, 4);
  CHECK(serial.min_slack == parallel.min_slack);
  CHECK(serial.distance == parallel.distance);
  CHECK(serial.converged_starts == parallel.converged_starts);
}

TEST_CASE("local search best value never increases") {
  std::vector<double> trace;
  minimize_slack(InequalityId::BARROW, 0, 400, 3, {}, &trace);
  REQUIRE(trace.size() > 1);
  for (std::size_t i = 1; i < trace.size(); ++i) {
    CHECK(trace[i] <= trace[i - 1]);
  }
}

TEST_CASE("canonical start never drifts away from the equality point") {
  // a single canonical start must report essentially zero immediately
  const TightnessResult result = minimize_slack(InequalityId::PROD_BARROW, 0, 200, 1);
  CHECK(std::abs(result.min_slack) <= 1e-12);
  CHECK(result.distance <= 1e-3);
}

TEST_CASE("verify_equality_locus") {
  SUBCASE("EM: canonical zero and strictly positive probes") {
    const EqualityReport report = verify_equality_locus(InequalityId::EM, 1e-2, 1000, 1);
    CHECK(std::abs(report.slack_at_canonical) <= 1e-12);
    CHECK(report.n_probes == 1000);
    CHECK(report.min_probe_slack > 1e-10);
    CHECK(report.max_probe_slack > report.min_probe_slack);
  }
  SUBCASE("canonical slack vanishes for every entry") {
    for (const InequalityInfo& entry : catalog()) {
      CAPTURE(entry.name);
      const EqualityReport report = verify_equality_locus(entry.id, 1e-2, 50, 2);
      CHECK(std::abs(report.slack_at_canonical) <= 1e-12);
      CHECK(report.min_probe_slack >= -1e-12);  // never meaningfully negative
    }
  }
  SUBCASE("isolated equality entries repel probes") {
    for (const InequalityId id :
         {InequalityId::BARROW, InequalityId::DNP, InequalityId::WEM,
          InequalityId::PROD_EM_1, InequalityId::BARROW_CHAIN_B}) {
      CAPTURE(info(id).name);
      const EqualityReport report = verify_equality_locus(id, 1e-2, 500, 3);
      CHECK(report.min_probe_slack > 1e-10);
    }
  }
}
