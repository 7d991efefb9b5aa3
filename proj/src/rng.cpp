#include "emlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace emlab {

double SplitMix64::next_normal() {
  const double u1 = next_double_open();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace emlab
