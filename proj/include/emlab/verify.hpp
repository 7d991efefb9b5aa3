#pragma once

// Randomized property engine: evaluates catalog entries over seeded sample
// sets and aggregates slack statistics. Per-sample RNG streams make the
// result independent of worker count.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "emlab/catalog.hpp"
#include "emlab/sampler.hpp"

namespace emlab {

inline constexpr std::size_t kHistogramBins = 64;

// Fixed log10 histogram of rel_slack: bin 0 collects everything at or below
// 1e-16 (violations included), bins 1..62 cover [1e-16, 10^0.5) evenly in
// log10, bin 63 the remainder.
std::size_t histogram_bin(double rel_slack);

struct ArgminRecord {
  std::uint64_t sample_index = 0;
  std::array<double, 6> vertices{};  // ax ay bx by cx cy
  std::array<double, 3> bary{};
  std::array<double, 6> log_weights{};
  double rel_slack = 0.0;
};

struct IdRecord {
  InequalityId id{};
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;  // rel_slack < -tolerance_rel
  double min_rel_slack = 0.0;
  std::optional<ArgminRecord> argmin;
  std::array<std::uint64_t, kHistogramBins> histogram{};

  // The worst offender is the argmin when it crosses the violation line.
  const ArgminRecord* worst_violation(double tolerance_rel) const;
  void merge(const IdRecord& other);
};

struct SuiteReport {
  SamplerConfig config;
  std::vector<IdRecord> records;       // one per requested id, input order
  std::uint64_t sampling_errors = 0;   // samples whose quantities failed

  bool has_violations() const;
};

// Evaluates every id on every sample. n_threads = 0 picks the hardware
// count; the report is identical for any thread count.
SuiteReport run_suite(const SamplerConfig& cfg, const std::vector<InequalityId>& ids,
                      unsigned n_threads = 1);

struct IdentityRecord {
  std::string name;
  std::uint64_t samples = 0;
  double max_rel_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct IdentityReport {
  SamplerConfig config;
  std::vector<IdentityRecord> records;
  bool all_pass() const;
};

// Cross-checks the four dual-route computations on sampled configurations:
//   tangent_identity           geometric tangent distances vs arithmetic route (1e-9)
//   bisector_dual_path         closed-form bisectors vs ray construction     (1e-9)
//   chain_gap_identity         quartic identity at (PA, PB, PC)              (1e-12)
//   wolstenholme_decomposition slack vs sum-of-squares form at half-angles   (1e-12)
// The two geometric checks report the worst per-component relative error.
// The two algebraic identities vanish on their equality manifolds, so their
// disagreement is measured relative to the identity's dominant positive term.
IdentityReport check_identities(const SamplerConfig& cfg, unsigned n_threads = 1);

// Max |rel_slack| of the lemma entry for `vertex` (0 = A, 1 = B, 2 = C) over
// n points drawn on the segment from that vertex to the circumcenter --
// the lemma's equality locus, so the result should sit at rounding level.
double lemma_segment_scan(const Triangle& tri, int vertex, std::uint64_t n,
                          std::uint64_t seed, double eps_interior = kDefaultInteriorMargin);

}  // namespace emlab
