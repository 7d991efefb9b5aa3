#include "emlab/sampler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace emlab {

namespace {

constexpr double kMinAngleUniform = 0.05;
constexpr double kMinAngleDegenerate = 1e-3;
constexpr double kEquilateralSigma = 0.05;
constexpr int kMaxRejectionRetries = 1000;

}  // namespace

std::string_view to_string(ShapeMode mode) {
  switch (mode) {
    case ShapeMode::UniformAngles:
      return "uniform_angles";
    case ShapeMode::NearDegenerate:
      return "near_degenerate";
    case ShapeMode::NearEquilateral:
      return "near_equilateral";
  }
  return "unknown";
}

void SamplerConfig::validate() const {
  if (n_samples < 1) throw std::invalid_argument("SamplerConfig: n_samples must be >= 1");
  if (!(weight_log_std >= 0.0) || weight_log_std > 5.0) {
    // beyond 5 the cubed weights overflow-risk the product entries
    throw std::invalid_argument("SamplerConfig: weight_log_std must be in [0, 5]");
  }
  if (!(eps_interior >= 0.0) || eps_interior >= 1.0 / 3.0) {
    throw std::invalid_argument("SamplerConfig: eps_interior out of range");
  }
  if (!(tolerance_rel > 0.0)) {
    throw std::invalid_argument("SamplerConfig: tolerance_rel must be positive");
  }
}

Triangle triangle_from_angles(double angle_a, double angle_b) {
  const double angle_c = std::numbers::pi - angle_a - angle_b;
  // Law of sines with circumdiameter 1, then rescale so the longest side is
  // exactly 1.
  double a = std::sin(angle_a);
  double b = std::sin(angle_b);
  double c = std::sin(angle_c);
  const double m = std::max({a, b, c});
  a /= m;
  b /= m;
  c /= m;
  return Triangle{{0.0, 0.0},
                  {c, 0.0},
                  {b * std::cos(angle_a), b * std::sin(angle_a)}};
}

Triangle sample_triangle(SplitMix64& rng, const SamplerConfig& cfg) {
  const double min_angle = cfg.shape_mode == ShapeMode::NearDegenerate
                               ? kMinAngleDegenerate
                               : kMinAngleUniform;
  if (cfg.shape_mode == ShapeMode::NearEquilateral) {
    for (int attempt = 0; attempt < kMaxRejectionRetries; ++attempt) {
      const double angle_a =
          std::numbers::pi / 3.0 + kEquilateralSigma * rng.next_normal();
      const double angle_b =
          std::numbers::pi / 3.0 + kEquilateralSigma * rng.next_normal();
      const double angle_c = std::numbers::pi - angle_a - angle_b;
      if (angle_a < min_angle || angle_b < min_angle || angle_c < min_angle) {
        continue;
      }
      return triangle_from_angles(angle_a, angle_b);
    }
    throw std::runtime_error("sample_triangle: rejection retries exhausted");
  }
  // Uniform over the angle simplex with the min-angle floor: fold the unit
  // square onto the unit simplex, then map affinely.
  double u1 = rng.next_double();
  double u2 = rng.next_double();
  if (u1 + u2 > 1.0) {
    u1 = 1.0 - u1;
    u2 = 1.0 - u2;
  }
  const double span = std::numbers::pi - 3.0 * min_angle;
  return triangle_from_angles(min_angle + span * u1, min_angle + span * u2);
}

BarycentricPoint clamp_to_interior(double lambda_a, double lambda_b,
                                   double lambda_c, double eps_interior) {
  const double lo = std::min({lambda_a, lambda_b, lambda_c});
  if (lo < eps_interior) {
    const double t = (eps_interior - lo) / (1.0 / 3.0 - lo);
    lambda_a += t * (1.0 / 3.0 - lambda_a);
    lambda_b += t * (1.0 / 3.0 - lambda_b);
    lambda_c = 1.0 - lambda_a - lambda_b;  // keeps the sum at exactly 1
  }
  return BarycentricPoint{lambda_a, lambda_b, lambda_c, eps_interior};
}

BarycentricPoint sample_interior_point(SplitMix64& rng, const SamplerConfig& cfg) {
  const double g0 = rng.next_normal();
  const double g1 = rng.next_normal();
  const double g2 = rng.next_normal();
  const double m = std::max({g0, g1, g2});
  const double e0 = std::exp(g0 - m);
  const double e1 = std::exp(g1 - m);
  const double e2 = std::exp(g2 - m);
  const double sum = e0 + e1 + e2;
  const double la = e0 / sum;
  const double lb = e1 / sum;
  return clamp_to_interior(la, lb, 1.0 - la - lb, cfg.eps_interior);
}

WeightVector sample_weights(SplitMix64& rng, const SamplerConfig& cfg) {
  const double s = cfg.weight_log_std;
  return WeightVector{s * rng.next_normal(), s * rng.next_normal(),
                      s * rng.next_normal(), s * rng.next_normal()};
}

SampleConfiguration sample_configuration(SplitMix64& rng, const SamplerConfig& cfg) {
  Triangle tri = sample_triangle(rng, cfg);
  BarycentricPoint bary = sample_interior_point(rng, cfg);
  WeightVector weights = sample_weights(rng, cfg);
  return {tri, bary, weights};
}

}  // namespace emlab
