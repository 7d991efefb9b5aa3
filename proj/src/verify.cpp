#include "emlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace emlab {

namespace {

constexpr double kHistLo = -16.0;  // log10 of the smallest resolved slack
constexpr double kHistHi = 0.5;    // rel_slack never exceeds 2 < 10^0.5

// Lexicographic (rel_slack, sample_index) order makes merges canonical: the
// same winner emerges regardless of how samples were partitioned.
bool better(double rel, std::uint64_t idx, const std::optional<ArgminRecord>& cur) {
  if (!cur) return true;
  if (rel != cur->rel_slack) return rel < cur->rel_slack;
  return idx < cur->sample_index;
}

ArgminRecord make_argmin(std::uint64_t index, const SampleConfiguration& sample,
                         double rel_slack) {
  ArgminRecord rec;
  rec.sample_index = index;
  rec.vertices = {sample.tri.A().x, sample.tri.A().y, sample.tri.B().x,
                  sample.tri.B().y, sample.tri.C().x, sample.tri.C().y};
  rec.bary = {sample.bary.lambda_a(), sample.bary.lambda_b(), sample.bary.lambda_c()};
  rec.log_weights = sample.weights.logs();
  rec.rel_slack = rel_slack;
  return rec;
}

unsigned resolve_threads(unsigned n_threads, std::uint64_t n_samples) {
  if (n_threads == 0) {
    n_threads = std::max(1u, std::thread::hardware_concurrency());
  }
  return static_cast<unsigned>(
      std::min<std::uint64_t>(n_threads, std::max<std::uint64_t>(1, n_samples)));
}

// Splits [0, n) into chunks, runs `work(chunk_index, lo, hi)` on each, and
// merges the partial states in chunk order via `merge`.
template <typename State, typename Work, typename Merge>
State parallel_chunks(std::uint64_t n, unsigned n_threads, Work work, Merge merge) {
  const unsigned workers = resolve_threads(n_threads, n);
  std::vector<State> parts(workers);
  if (workers == 1) {
    work(parts[0], 0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = std::min(n, lo + chunk);
      pool.emplace_back([&, t, lo, hi] { work(parts[t], lo, hi); });
    }
    for (auto& th : pool) th.join();
  }
  State result = std::move(parts[0]);
  for (unsigned t = 1; t < workers; ++t) merge(result, parts[t]);
  return result;
}

}  // namespace

std::size_t histogram_bin(double rel_slack) {
  if (!(rel_slack > 1e-16)) return 0;
  const double pos = (std::log10(rel_slack) - kHistLo) / (kHistHi - kHistLo);
  const auto bin = static_cast<long>(1 + pos * (kHistogramBins - 2));
  return static_cast<std::size_t>(
      std::clamp<long>(bin, 1, kHistogramBins - 1));
}

const ArgminRecord* IdRecord::worst_violation(double tolerance_rel) const {
  if (argmin && argmin->rel_slack < -tolerance_rel) return &*argmin;
  return nullptr;
}

void IdRecord::merge(const IdRecord& other) {
  samples += other.samples;
  violations += other.violations;
  for (std::size_t i = 0; i < kHistogramBins; ++i) histogram[i] += other.histogram[i];
  if (other.argmin &&
      better(other.argmin->rel_slack, other.argmin->sample_index, argmin)) {
    argmin = other.argmin;
    min_rel_slack = other.min_rel_slack;
  }
}

bool SuiteReport::has_violations() const {
  return std::any_of(records.begin(), records.end(),
                     [](const IdRecord& r) { return r.violations > 0; });
}

SuiteReport run_suite(const SamplerConfig& cfg, const std::vector<InequalityId>& ids,
                      unsigned n_threads) {
  cfg.validate();
  if (ids.empty()) throw std::invalid_argument("run_suite: ids must be non-empty");

  struct Partial {
    std::vector<IdRecord> records;
    std::uint64_t errors = 0;
  };

  auto work = [&](Partial& part, std::uint64_t lo, std::uint64_t hi) {
    part.records.resize(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) part.records[k].id = ids[k];
    for (std::uint64_t i = lo; i < hi; ++i) {
      SplitMix64 rng = sample_stream(cfg.seed, i);
      try {
        const SampleConfiguration sample = sample_configuration(rng, cfg);
        const PointQuantities q = quantities(sample.tri, sample.bary);
        const SideLengths sides = sample.tri.sides();
        for (std::size_t k = 0; k < ids.size(); ++k) {
          IdRecord& rec = part.records[k];
          const EvaluationResult ev = evaluate(ids[k], q, sample.weights, sides);
          ++rec.samples;
          ++rec.histogram[histogram_bin(ev.rel_slack)];
          if (ev.rel_slack < -cfg.tolerance_rel) ++rec.violations;
          if (better(ev.rel_slack, i, rec.argmin)) {
            rec.argmin = make_argmin(i, sample, ev.rel_slack);
            rec.min_rel_slack = ev.rel_slack;
          }
        }
      } catch (const std::exception&) {
        ++part.errors;  // counted, never fatal
      }
    }
  };
  auto merge = [&](Partial& into, const Partial& from) {
    into.errors += from.errors;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      into.records[k].merge(from.records[k]);
    }
  };

  Partial total = parallel_chunks<Partial>(cfg.n_samples, n_threads, work, merge);
  SuiteReport report;
  report.config = cfg;
  report.records = std::move(total.records);
  report.sampling_errors = total.errors;
  return report;
}

bool IdentityReport::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const IdentityRecord& r) { return r.pass; });
}

IdentityReport check_identities(const SamplerConfig& cfg, unsigned n_threads) {
  cfg.validate();
  constexpr std::size_t kNumChecks = 4;

  struct Partial {
    std::array<double, kNumChecks> max_diff{};
    std::array<std::uint64_t, kNumChecks> samples{};
    std::uint64_t errors = 0;
  };

  const auto rel_diff = [](double got, double want) {
    const double scale = std::max({std::abs(got), std::abs(want), 1e-300});
    return std::abs(got - want) / scale;
  };

  auto work = [&](Partial& part, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      SplitMix64 rng = sample_stream(cfg.seed, i);
      try {
        const SampleConfiguration sample = sample_configuration(rng, cfg);
        const Point2 p = barycentric_to_cartesian(sample.tri, sample.bary);
        const SideLengths sides = sample.tri.sides();
        const PointQuantities q = quantities(sample.tri, sample.bary);

        // 1: geometric tangent distances vs the arithmetic route
        const TangentDistances ti =
            tangent_distance_identity(sides, {q.d_a, q.d_b, q.d_c});
        double diff = std::max({rel_diff(q.r_a, ti.r_a), rel_diff(q.r_b, ti.r_b),
                                rel_diff(q.r_c, ti.r_c)});
        part.max_diff[0] = std::max(part.max_diff[0], diff);
        ++part.samples[0];

        // 2: closed-form bisectors vs the ray construction
        const BisectorLengths bo = bisector_lengths_oracle(sample.tri, p);
        diff = std::max({rel_diff(q.l_a, bo.l_a), rel_diff(q.l_b, bo.l_b),
                         rel_diff(q.l_c, bo.l_c)});
        part.max_diff[1] = std::max(part.max_diff[1], diff);
        ++part.samples[1];

        // 3: quartic gap identity at the vertex distances. Both sides vanish
        // together at PA = PB = PC, so the difference is measured against the
        // identity's leading positive term, not the (possibly tiny) value.
        const IdentityPair gap = chain_gap_identity(q.pa, q.pb, q.pc);
        const double gap_scale = (q.pa + q.pb + q.pc) * (q.pa + q.pb) *
                                 (q.pb + q.pc) * (q.pc + q.pa);
        part.max_diff[2] =
            std::max(part.max_diff[2], std::abs(gap.lhs - gap.rhs) / gap_scale);
        ++part.samples[2];

        // 4: Wolstenholme slack vs its sum-of-squares decomposition, at the
        // substitution the strengthened Barrow argument uses; same scaling
        // consideration as above.
        const double s1 = std::sqrt(sample.weights.x() * q.pa);
        const double s2 = std::sqrt(sample.weights.y() * q.pb);
        const double s3 = std::sqrt(sample.weights.z() * q.pc);
        const WolstenholmeResult wr = wolstenholme_slack(s1, s2, s3, 0.5 * q.alpha,
                                                         0.5 * q.beta, 0.5 * q.gamma);
        part.max_diff[3] =
            std::max(part.max_diff[3], std::abs(wr.slack - wr.decomposition) /
                                           (s1 * s1 + s2 * s2 + s3 * s3));
        ++part.samples[3];
      } catch (const std::exception&) {
        ++part.errors;
      }
    }
  };
  auto merge = [&](Partial& into, const Partial& from) {
    into.errors += from.errors;
    for (std::size_t k = 0; k < kNumChecks; ++k) {
      into.max_diff[k] = std::max(into.max_diff[k], from.max_diff[k]);
      into.samples[k] += from.samples[k];
    }
  };

  Partial total = parallel_chunks<Partial>(cfg.n_samples, n_threads, work, merge);

  static constexpr std::array<std::pair<const char*, double>, kNumChecks> kChecks{{
      {"tangent_identity", 1e-9},
      {"bisector_dual_path", 1e-9},
      {"chain_gap_identity", 1e-12},
      {"wolstenholme_decomposition", 1e-12},
  }};
  IdentityReport report;
  report.config = cfg;
  for (std::size_t k = 0; k < kNumChecks; ++k) {
    IdentityRecord rec;
    rec.name = kChecks[k].first;
    rec.samples = total.samples[k];
    rec.max_rel_diff = total.max_diff[k];
    rec.tolerance = kChecks[k].second;
    rec.pass = rec.max_rel_diff <= rec.tolerance;
    report.records.push_back(std::move(rec));
  }
  return report;
}

double lemma_segment_scan(const Triangle& tri, int vertex, std::uint64_t n,
                          std::uint64_t seed, double eps_interior) {
  if (vertex < 0 || vertex > 2) {
    throw std::invalid_argument("lemma_segment_scan: vertex must be 0, 1, or 2");
  }
  const Point2 anchor = vertex == 0 ? tri.A() : vertex == 1 ? tri.B() : tri.C();
  const InequalityId id = vertex == 0   ? InequalityId::LEMMA_A
                          : vertex == 1 ? InequalityId::LEMMA_B
                                        : InequalityId::LEMMA_C;
  const Point2 center = circumcircle(tri).center;
  const SideLengths sides = tri.sides();
  const WeightVector unit_weights;

  // P(t) = anchor + t (center - anchor) has barycentrics affine in t, so the
  // strictly interior stretch of the line is a single interval. It can be
  // empty: when either non-anchor angle is obtuse, the equality line misses
  // the interior entirely.
  const auto anchor_bc = cartesian_to_barycentric(tri, anchor);
  const auto center_bc = cartesian_to_barycentric(tri, center);
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    const double base = anchor_bc[k];
    const double slope = center_bc[k] - base;
    if (slope > 0.0) {
      t_lo = std::max(t_lo, (eps_interior - base) / slope);
    } else if (slope < 0.0) {
      t_hi = std::min(t_hi, (eps_interior - base) / slope);
    } else if (base < eps_interior) {
      t_lo = 1.0;
      t_hi = 0.0;
    }
  }
  if (!(t_lo < t_hi)) {
    throw std::domain_error(
        "lemma_segment_scan: equality line does not enter the interior");
  }

  double worst = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    SplitMix64 rng = sample_stream(seed, i);
    const double t = t_lo + (t_hi - t_lo) * rng.next_double_open();
    const Point2 p = anchor + t * (center - anchor);
    const auto bc = cartesian_to_barycentric(tri, p);
    const BarycentricPoint bary{bc[0], bc[1], bc[2], 0.0};
    const PointQuantities q = quantities(tri, bary);
    const EvaluationResult ev = evaluate(id, q, unit_weights, sides);
    worst = std::max(worst, std::abs(ev.rel_slack));
  }
  return worst;
}

}  // namespace emlab
