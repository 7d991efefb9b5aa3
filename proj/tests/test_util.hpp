#pragma once

#include <cmath>
#include <cstdint>

#include "emlab/sampler.hpp"

namespace emlab::test {

inline SampleConfiguration sampled_config(std::uint64_t seed, std::uint64_t index,
                                          ShapeMode mode = ShapeMode::UniformAngles,
                                          double weight_std = 0.5) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.weight_log_std = weight_std;
  cfg.shape_mode = mode;
  SplitMix64 rng = sample_stream(seed, index);
  return sample_configuration(rng, cfg);
}

inline double rel_diff(double got, double want) {
  const double scale = std::max({std::abs(got), std::abs(want), 1e-300});
  return std::abs(got - want) / scale;
}

}  // namespace emlab::test
