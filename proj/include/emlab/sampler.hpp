#pragma once

// Seeded configuration sampling. A sample is (triangle, interior point,
// weights); triangles are normalized to max side 1 since every catalog
// entry is similarity-invariant.

#include <cstdint>
#include <string_view>

#include "emlab/catalog.hpp"
#include "emlab/geometry.hpp"
#include "emlab/rng.hpp"

namespace emlab {

enum class ShapeMode : std::uint8_t {
  UniformAngles,    // two angles uniform on the simplex, min angle 0.05 rad
  NearDegenerate,   // min angle relaxed to 1e-3 rad
  NearEquilateral,  // pi/3 angles perturbed by Normal(0, 0.05)
};

std::string_view to_string(ShapeMode mode);

struct SamplerConfig {
  std::uint64_t seed = 1;
  std::uint64_t n_samples = 10000;
  double weight_log_std = 0.5;
  ShapeMode shape_mode = ShapeMode::UniformAngles;
  double eps_interior = kDefaultInteriorMargin;
  double tolerance_rel = 1e-9;

  void validate() const;  // throws std::invalid_argument on bad fields
};

// Triangle with angles (angle_a, angle_b, pi - angle_a - angle_b), max side
// 1, vertex A at the origin and B on the positive x axis. Shared by the
// sampler and the tightness decoder.
Triangle triangle_from_angles(double angle_a, double angle_b);

Triangle sample_triangle(SplitMix64& rng, const SamplerConfig& cfg);

// Blends raw barycentrics toward the centroid just enough to lift the
// smallest coordinate to the margin. Inputs must sum to 1.
BarycentricPoint clamp_to_interior(double lambda_a, double lambda_b,
                                   double lambda_c, double eps_interior);

// Normalized exponentials of three standard normals, pulled toward the
// centroid when a coordinate lands under the interior margin.
BarycentricPoint sample_interior_point(SplitMix64& rng, const SamplerConfig& cfg);

WeightVector sample_weights(SplitMix64& rng, const SamplerConfig& cfg);

struct SampleConfiguration {
  Triangle tri;
  BarycentricPoint bary;
  WeightVector weights;
};

SampleConfiguration sample_configuration(SplitMix64& rng, const SamplerConfig& cfg);

}  // namespace emlab
