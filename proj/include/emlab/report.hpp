#pragma once

// Byte-stable report serialization. The JSON is emitted directly rather
// than through a generic library so that key order is fixed and every float
// is printed with 17 significant digits; identical inputs always produce
// identical bytes. Report content is a pure function of (command, sampler
// config, ids) -- execution details like thread count are not echoed.

#include <string>
#include <vector>

#include "emlab/tighten.hpp"
#include "emlab/verify.hpp"

namespace emlab {

// "%.17g" formatting; round-trips any finite double.
std::string format_double(double value);

std::string suite_report_json(const SuiteReport& report);
std::string suite_report_csv(const SuiteReport& report);

std::string identity_report_json(const IdentityReport& report);
std::string identity_report_csv(const IdentityReport& report);

std::string tightness_report_json(const SamplerConfig& cfg, int max_iter,
                                  const std::vector<TightnessResult>& results,
                                  const std::vector<EqualityReport>& equality);
std::string tightness_report_csv(const std::vector<TightnessResult>& results);

std::string catalog_json();

}  // namespace emlab
