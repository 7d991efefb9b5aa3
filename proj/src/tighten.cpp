#include "emlab/tighten.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "emlab/rng.hpp"

namespace emlab {

namespace {

constexpr double kThetaBound = 50.0;   // box guard; exp() stays comfortably finite
constexpr double kSpreadTol = 1e-12;   // simplex convergence criterion
constexpr double kInitialStep = 0.25;  // initial simplex edge

std::array<double, 3> softmax3(double t0, double t1) {
  const double m = std::max({t0, t1, 0.0});
  const double e0 = std::exp(t0 - m);
  const double e1 = std::exp(t1 - m);
  const double e2 = std::exp(-m);
  const double sum = e0 + e1 + e2;
  return {e0 / sum, e1 / sum, e2 / sum};
}

}  // namespace

DecodedConfig decode(const SearchPoint& point, const SearchOptions& opts) {
  for (double t : point.theta) {
    if (!std::isfinite(t)) throw std::domain_error("decode: non-finite theta");
  }
  const auto& th = point.theta;
  const auto shape = softmax3(th[0], th[1]);
  const double span = std::numbers::pi - 3.0 * opts.min_angle_floor;
  Triangle tri = triangle_from_angles(opts.min_angle_floor + span * shape[0],
                                      opts.min_angle_floor + span * shape[1]);
  const auto lambda = softmax3(th[2], th[3]);
  BarycentricPoint bary =
      clamp_to_interior(lambda[0], lambda[1], lambda[2], opts.eps_interior);
  return {tri, bary, WeightVector{th[4], th[5], th[6], th[7]}};
}

DecodedConfig decode_for(InequalityId id, const SearchPoint& point,
                         const SearchOptions& opts) {
  const auto mask = free_coordinates(id);
  SearchPoint masked = point;
  for (std::size_t i = 0; i < kSearchDim; ++i) {
    if (!mask[i]) masked.theta[i] = 0.0;
  }
  return decode(masked, opts);
}

SearchPoint encode(const Triangle& tri, const BarycentricPoint& bary,
                   const WeightVector& weights, const SearchOptions& opts) {
  const SideLengths s = tri.sides();
  // Interior angles by the law of cosines; similarity-invariant.
  const auto vertex_angle = [](double opp, double s1, double s2) {
    return std::acos(
        std::clamp((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2), -1.0, 1.0));
  };
  const double angle_a = vertex_angle(s.a, s.b, s.c);
  const double angle_b = vertex_angle(s.b, s.c, s.a);
  const double angle_c = std::numbers::pi - angle_a - angle_b;
  const double span = std::numbers::pi - 3.0 * opts.min_angle_floor;
  const double sa = (angle_a - opts.min_angle_floor) / span;
  const double sb = (angle_b - opts.min_angle_floor) / span;
  const double sc = (angle_c - opts.min_angle_floor) / span;
  if (!(sa > 0.0) || !(sb > 0.0) || !(sc > 0.0)) {
    throw std::domain_error("encode: angle at or below the min-angle floor");
  }
  SearchPoint point;
  point.theta = {std::log(sa / sc),
                 std::log(sb / sc),
                 std::log(bary.lambda_a() / bary.lambda_c()),
                 std::log(bary.lambda_b() / bary.lambda_c()),
                 weights.log_x(),
                 weights.log_y(),
                 weights.log_u(),
                 weights.log_v()};
  return point;
}

std::array<bool, kSearchDim> free_coordinates(InequalityId id) {
  std::array<bool, kSearchDim> mask{true, true, true, true, false, false, false, false};
  switch (id) {
    case InequalityId::WEM:
    case InequalityId::WDNP:
    case InequalityId::WBARROW:
      mask[4] = mask[5] = mask[6] = mask[7] = true;
      break;
    case InequalityId::DARGUERON:
    case InequalityId::PROD_EM:
    case InequalityId::PROD_DNP:
    case InequalityId::PROD_BARROW:
      mask[6] = mask[7] = true;
      break;
    default:
      break;  // weight-blind and pinned-weight entries
  }
  return mask;
}

double distance_to_canonical(const DecodedConfig& config) {
  const SideLengths s = config.tri.sides();
  const auto vertex_angle = [](double opp, double s1, double s2) {
    return std::acos(
        std::clamp((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2), -1.0, 1.0));
  };
  const double angle_a = vertex_angle(s.a, s.b, s.c);
  const double angle_b = vertex_angle(s.b, s.c, s.a);
  const double angle_c = std::numbers::pi - angle_a - angle_b;
  double sum = 0.0;
  for (double dev : {angle_a - std::numbers::pi / 3.0, angle_b - std::numbers::pi / 3.0,
                     angle_c - std::numbers::pi / 3.0,
                     config.bary.lambda_a() - 1.0 / 3.0,
                     config.bary.lambda_b() - 1.0 / 3.0,
                     config.bary.lambda_c() - 1.0 / 3.0}) {
    sum += dev * dev;
  }
  for (double lw : config.weights.logs()) sum += lw * lw;
  return std::sqrt(sum);
}

DecodedConfig TightnessResult::argmin(const SearchOptions& opts) const {
  return decode_for(id, argmin_theta, opts);
}

namespace {

struct LocalResult {
  std::vector<double> x;
  double f = std::numeric_limits<double>::infinity();
  bool converged = false;
};

// Standard Nelder-Mead on R^dim.
template <typename F>
LocalResult nelder_mead(F&& objective, const std::vector<double>& x0, int max_iter,
                        std::vector<double>* best_trace) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> xs(dim + 1, x0);
  std::vector<double> fs(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) xs[i + 1][i] += kInitialStep;
  for (std::size_t i = 0; i <= dim; ++i) fs[i] = objective(xs[i]);

  std::vector<std::size_t> order(dim + 1);
  const auto sort_order = [&] {
    for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
  };
  if (best_trace) best_trace->clear();

  LocalResult result;
  for (int iter = 0; iter < max_iter; ++iter) {
    sort_order();
    const std::size_t best = order[0];
    const std::size_t worst = order[dim];
    const std::size_t second_worst = order[dim - 1];
    if (best_trace) best_trace->push_back(fs[best]);
    if (fs[worst] - fs[best] < kSpreadTol) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += xs[i][d];
    }
    for (std::size_t d = 0; d < dim; ++d) centroid[d] /= static_cast<double>(dim);

    const auto blend = [&](double coef) {
      std::vector<double> p(dim);
      for (std::size_t d = 0; d < dim; ++d) {
        p[d] = centroid[d] + coef * (centroid[d] - xs[worst][d]);
      }
      return p;
    };

    std::vector<double> reflected = blend(1.0);
    const double f_reflected = objective(reflected);
    if (f_reflected < fs[best]) {
      std::vector<double> expanded = blend(2.0);
      const double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        xs[worst] = std::move(expanded);
        fs[worst] = f_expanded;
      } else {
        xs[worst] = std::move(reflected);
        fs[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < fs[second_worst]) {
      xs[worst] = std::move(reflected);
      fs[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < fs[worst];
    std::vector<double> contracted = blend(outside ? 0.5 : -0.5);
    const double f_contracted = objective(contracted);
    if (f_contracted < (outside ? f_reflected : fs[worst])) {
      xs[worst] = std::move(contracted);
      fs[worst] = f_contracted;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t d = 0; d < dim; ++d) {
        xs[i][d] = xs[best][d] + 0.5 * (xs[i][d] - xs[best][d]);
      }
      fs[i] = objective(xs[i]);
    }
  }

  sort_order();
  result.x = xs[order[0]];
  result.f = fs[order[0]];
  return result;
}

}  // namespace

TightnessResult minimize_slack(InequalityId id, int n_starts, int max_iter,
                               std::uint64_t seed, const SearchOptions& opts,
                               std::vector<double>* best_trace, unsigned n_threads) {
  const auto mask = free_coordinates(id);
  std::vector<std::size_t> free_dims;
  for (std::size_t i = 0; i < kSearchDim; ++i) {
    if (mask[i]) free_dims.push_back(i);
  }

  const auto embed = [&](const std::vector<double>& x) {
    SearchPoint point;
    for (std::size_t d = 0; d < free_dims.size(); ++d) point.theta[free_dims[d]] = x[d];
    return point;
  };
  const auto objective = [&](const std::vector<double>& x) {
    for (double t : x) {
      if (!std::isfinite(t) || std::abs(t) > kThetaBound) {
        return std::numeric_limits<double>::infinity();
      }
    }
    const DecodedConfig config = decode(embed(x), opts);
    const PointQuantities q = quantities(config.tri, config.bary);
    const double slack =
        evaluate(id, q, config.weights, config.tri.sides()).slack;
    return std::isfinite(slack) ? slack : std::numeric_limits<double>::infinity();
  };

  const int total_starts = n_starts + 1;  // canonical start plus the random ones
  const auto run_start = [&](int start, std::vector<double>* trace) {
    std::vector<double> x0(free_dims.size(), 0.0);
    if (start > 0) {
      SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(start));
      for (auto& v : x0) v = rng.next_normal();
    }
    return nelder_mead(objective, x0, max_iter, trace);
  };

  std::vector<LocalResult> locals(static_cast<std::size_t>(total_starts));
  if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
  if (n_threads <= 1 || total_starts == 1) {
    for (int start = 0; start < total_starts; ++start) {
      locals[start] = run_start(start, start + 1 == total_starts ? best_trace : nullptr);
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const unsigned workers =
        std::min<unsigned>(n_threads, static_cast<unsigned>(total_starts));
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int start = next.fetch_add(1); start < total_starts;
             start = next.fetch_add(1)) {
          locals[start] =
              run_start(start, start + 1 == total_starts ? best_trace : nullptr);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  TightnessResult result;
  result.id = id;
  result.starts = total_starts;
  const std::vector<double> canonical(free_dims.size(), 0.0);
  const double f_canonical = objective(canonical);
  double best_f = f_canonical;
  for (int start = 0; start < total_starts; ++start) {
    if (locals[start].converged) ++result.converged_starts;
    best_f = std::min(best_f, locals[start].f);
  }
  if (!std::isfinite(best_f)) {
    throw std::runtime_error("minimize_slack: all starts diverged to non-finite slack");
  }
  // Candidates within the convergence spread of the minimum are ties the
  // search cannot distinguish; the reduction resolves them deterministically
  // in favor of the canonical point, then by start index. Several entries
  // have flat equality loci (any interior point of an equilateral triangle
  // ties for DNP, the whole PA=PB=PC surface for the first chain link), and
  // among tied minimizers the canonical representative is the informative
  // one to report.
  result.min_slack = best_f;
  const std::vector<double>* winner = &canonical;
  if (f_canonical > best_f + kSpreadTol) {
    for (int start = 0; start < total_starts; ++start) {
      if (locals[start].f <= best_f + kSpreadTol) {
        winner = &locals[start].x;
        break;
      }
    }
  }
  result.argmin_theta = embed(*winner);
  result.distance = distance_to_canonical(decode_for(id, result.argmin_theta, opts));
  return result;
}

EqualityReport verify_equality_locus(InequalityId id, double radius, int n_probes,
                                     std::uint64_t seed, const SearchOptions& opts) {
  const EqualityConfiguration eq = equality_configuration(id);
  EqualityReport report;
  report.id = id;
  report.n_probes = n_probes;

  // Slack at the configuration itself, no encode/decode round trip.
  const PointQuantities q0 = quantities(eq.tri, eq.bary);
  report.slack_at_canonical =
      evaluate(id, q0, eq.weights, eq.tri.sides()).slack;

  const SearchPoint center = encode(eq.tri, eq.bary, eq.weights, opts);
  const auto mask = free_coordinates(id);
  std::vector<std::size_t> free_dims;
  for (std::size_t i = 0; i < kSearchDim; ++i) {
    if (mask[i]) free_dims.push_back(i);
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int probe = 0; probe < n_probes; ++probe) {
    SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(probe));
    std::vector<double> dir(free_dims.size());
    double norm2 = 0.0;
    for (auto& v : dir) {
      v = rng.next_normal();
      norm2 += v * v;
    }
    const double scale = radius / std::sqrt(norm2);
    SearchPoint point = center;
    for (std::size_t d = 0; d < free_dims.size(); ++d) {
      point.theta[free_dims[d]] += scale * dir[d];
    }
    const DecodedConfig config = decode_for(id, point, opts);
    const PointQuantities q = quantities(config.tri, config.bary);
    const double slack = evaluate(id, q, config.weights, config.tri.sides()).slack;
    lo = std::min(lo, slack);
    hi = std::max(hi, slack);
  }
  report.min_probe_slack = lo;
  report.max_probe_slack = hi;
  return report;
}

}  // namespace emlab
