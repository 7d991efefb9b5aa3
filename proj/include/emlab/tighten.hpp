#pragma once

// Derivative-free slack minimization over (triangle shape, interior point,
// weights), used to confirm numerically that each catalog entry's infimum
// is zero and sits where the equality clause says it does.
//
// The search space is a fixed 8-vector theta:
//   [0..1] shape logits: softmax with a min-angle floor gives the angles
//   [2..3] barycentric logits for the interior point
//   [4..5] free logs of (x, y, z)
//   [6..7] free logs of (u, v, w)
// theta = 0 decodes to the canonical configuration: unit-max-side
// equilateral triangle, centroid, unit weights. Coordinates an entry does
// not read are frozen at 0 during search.

#include <array>
#include <cstdint>
#include <vector>

#include "emlab/catalog.hpp"
#include "emlab/sampler.hpp"

namespace emlab {

inline constexpr std::size_t kSearchDim = 8;

struct SearchPoint {
  std::array<double, kSearchDim> theta{};
};

struct SearchOptions {
  // Keeps the optimizer off degenerate shapes: entries whose infimum over
  // the open domain is approached at degeneracy are still bounded away from
  // it, and the equality claims under test concern non-degenerate triangles.
  double min_angle_floor = 0.02;
  double eps_interior = kDefaultInteriorMargin;
};

struct DecodedConfig {
  Triangle tri;
  BarycentricPoint bary;
  WeightVector weights;
};

// Total and continuous for finite theta; throws std::domain_error otherwise.
DecodedConfig decode(const SearchPoint& point, const SearchOptions& opts = {});

// Zeroes the coordinates the entry ignores, then decodes.
DecodedConfig decode_for(InequalityId id, const SearchPoint& point,
                         const SearchOptions& opts = {});

// Inverse of decode up to similarity: the decoded triangle is the
// max-side-1 realization of the same shape.
SearchPoint encode(const Triangle& tri, const BarycentricPoint& bary,
                   const WeightVector& weights, const SearchOptions& opts = {});

// Coordinates minimize_slack may move for this entry. Weight blocks open up
// only where the entry reads them and the specialized *_U1/_X1 and
// Wolstenholme forms keep weights pinned at canonical.
std::array<bool, kSearchDim> free_coordinates(InequalityId id);

// Root-sum-square deviation from the canonical configuration: angles from
// pi/3, barycentrics from 1/3, log-weights from 0.
double distance_to_canonical(const DecodedConfig& config);

struct TightnessResult {
  InequalityId id{};
  double min_slack = 0.0;   // minimum over every evaluated candidate
  SearchPoint argmin_theta;  // representative minimizer; slack within 1e-12 of min_slack
  int starts = 0;
  int converged_starts = 0;
  double distance = 0.0;  // distance_to_canonical at the argmin

  DecodedConfig argmin(const SearchOptions& opts = {}) const;
};

// Nelder-Mead (reflection 1, expansion 2, contraction 0.5, shrink 0.5) from
// n_starts seeded random points plus the canonical point; a start converges
// when its simplex slack spread drops under 1e-12. Starts own independent
// RNG streams and may run on several threads; the reduction is a
// deterministic min whose ties (candidates within the convergence spread of
// the minimum, which the search cannot tell apart) resolve to the canonical
// point first and then to the lowest start index, so the result does not
// depend on the worker count. Throws std::runtime_error if every start
// diverges to non-finite slack.
//
// best_trace, when given, receives the per-iteration best value of the last
// start (monotonically non-increasing by construction).
TightnessResult minimize_slack(InequalityId id, int n_starts, int max_iter,
                               std::uint64_t seed, const SearchOptions& opts = {},
                               std::vector<double>* best_trace = nullptr,
                               unsigned n_threads = 1);

struct EqualityReport {
  InequalityId id{};
  double slack_at_canonical = 0.0;
  int n_probes = 0;
  double min_probe_slack = 0.0;
  double max_probe_slack = 0.0;
};

// Checks the entry's equality configuration: slack there, and slack at
// n_probes random perturbations of size `radius` in the free coordinates.
// For entries with an isolated equality point the probes stay strictly
// positive; entries with a larger equality locus (the lemma segment, the
// PA=PB=PC surface) can probe arbitrarily close to zero.
EqualityReport verify_equality_locus(InequalityId id, double radius = 1e-2,
                                     int n_probes = 1000, std::uint64_t seed = 1,
                                     const SearchOptions& opts = {});

}  // namespace emlab
