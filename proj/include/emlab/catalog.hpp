#pragma once

// Catalog of interior-point inequalities evaluated as slack functions.
//
// Every entry is a claim of the form lhs >= rhs about an interior point P of
// a triangle, possibly carrying two weight triples (x, y, z) and (u, v, w)
// constrained to xyz = uvw = 1. The evaluator reports slack = lhs - rhs
// as-is; it never clamps, so a negative value is visible to the caller.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "emlab/geometry.hpp"

namespace emlab {

// Positive weights (x, y, z, u, v, w) with xyz = uvw = 1 held exactly: each
// triple is stored as two free logs plus the negated sum, so the log sums
// are identically zero.
class WeightVector {
 public:
  WeightVector() = default;  // all weights 1
  WeightVector(double log_x, double log_y, double log_u, double log_v);

  double log_x() const { return lx_; }
  double log_y() const { return ly_; }
  double log_z() const { return -(lx_ + ly_); }
  double log_u() const { return lu_; }
  double log_v() const { return lv_; }
  double log_w() const { return -(lu_ + lv_); }

  double x() const;
  double y() const;
  double z() const;
  double u() const;
  double v() const;
  double w() const;

  std::array<double, 6> logs() const {
    return {log_x(), log_y(), log_z(), log_u(), log_v(), log_w()};
  }

 private:
  double lx_ = 0.0, ly_ = 0.0, lu_ = 0.0, lv_ = 0.0;
};

enum class InequalityId : std::uint8_t {
  EM,              // PA+PB+PC >= 2(d_a+d_b+d_c)
  BARROW,          // PA+PB+PC >= 2(l_a+l_b+l_c)
  DNP,             // R_A+R_B+R_C >= 2(d_a+d_b+d_c)
  WEM,             // x(PA+u^3 d_a)+y(PB+v^3 d_b)+z(PC+w^3 d_c) >= 3(u d_a+v d_b+w d_c)
  WEM_U1,          // WEM at u=v=w=1
  WEM_X1,          // WEM at x=y=z=1: sum PA >= sum (3u-u^3) d
  WDNP,            // WEM with R in place of the vertex distances
  WDNP_U1,
  WDNP_X1,
  WBARROW,         // WEM with l in place of the pedal distances
  WBARROW_U1,
  WBARROW_X1,
  PROD_EM,         // (PA+u^3 d_a)(PB+v^3 d_b)(PC+w^3 d_c) >= (u d_a+v d_b+w d_c)^3
  PROD_EM_1,       // PROD_EM at u=v=w=1
  PROD_DNP,
  PROD_DNP_1,
  PROD_BARROW,
  PROD_BARROW_1,
  WBARROW_STRONG,  // x PA+y PB+z PC >= sum sqrt(yz)(sqrt(PB/PC)+sqrt(PC/PB)) l_a
  BARROW_CHAIN_A,  // (PA+PB+PC)/2 >= quadratic ratio
  BARROW_CHAIN_B,  // quadratic ratio >= l_a+l_b+l_c
  DARGUERON,       // PA/u^2+PB/v^2+PC/w^2 >= 2(u d_a+v d_b+w d_c)
  LEMMA_A,         // PA >= (b d_c + c d_b)/a
  LEMMA_B,
  LEMMA_C,
};

inline constexpr std::size_t kCatalogSize = 25;

// Which weight components an entry actually reads.
enum class WeightArity : std::uint8_t { None, XYZ, UVW, Both };

struct EvaluationResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;      // lhs - rhs
  double rel_slack = 0.0;  // slack / max(|lhs|, |rhs|, 1e-300)
};

EvaluationResult make_result(double lhs, double rhs);

EvaluationResult evaluate(InequalityId id, const PointQuantities& q,
                          const WeightVector& w, const SideLengths& sides);

// 2 sqrt(yz * PB*PC) cos(alpha/2) = sqrt(yz)(sqrt(PB/PC)+sqrt(PC/PB)) l_a is
// an identity, so the WBARROW_STRONG slack equals the Wolstenholme slack at
// (sqrt(x PA), sqrt(y PB), sqrt(z PC)) and half-angles.
struct WolstenholmeResult {
  double slack = 0.0;          // s1^2+s2^2+s3^2 - 2 s2 s3 cos A - 2 s3 s1 cos B - 2 s1 s2 cos C
  double decomposition = 0.0;  // (s1 - s2 cos C - s3 cos B)^2 + (s2 sin C - s3 sin B)^2
};

// Requires A, B, C > 0 with A + B + C = pi within 1e-9; throws
// std::domain_error otherwise. The two fields agree to 1e-12 relative.
WolstenholmeResult wolstenholme_slack(double s1, double s2, double s3,
                                      double angle_a, double angle_b, double angle_c);

// Algebraic certificate behind BARROW_CHAIN_A:
//   (p+q+r)(p+q)(q+r)(r+p) - 2p^2(q+r)^2 - 2q^2(r+p)^2 - 2r^2(p+q)^2
//     = pq(p-q)^2 + qr(q-r)^2 + rp(r-p)^2  >= 0,
// with equality exactly at p = q = r.
struct IdentityPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

IdentityPair chain_gap_identity(double p, double q, double r);

// A configuration at which an entry's slack vanishes. Most entries use the
// unit equilateral triangle with P at the center and unit weights; the
// LEMMA_* entries use a point on the vertex-circumcenter segment and
// BARROW_CHAIN_A uses the circumcenter of an acute triangle.
struct EqualityConfiguration {
  Triangle tri;
  BarycentricPoint bary;
  WeightVector weights;
  std::string_view note;  // nonempty when the known equality condition needs a caveat
};

EqualityConfiguration equality_configuration(InequalityId id);

struct InequalityInfo {
  InequalityId id;
  std::string_view name;       // identifier as it appears in CLI and reports
  std::string_view lhs;        // human-readable recipe
  std::string_view rhs;
  std::string_view reference;  // classical name of the statement
  WeightArity arity;
  std::string_view note;       // convention or misprint caveats, if any
};

const std::array<InequalityInfo, kCatalogSize>& catalog();

const InequalityInfo& info(InequalityId id);

// Identifier lookup by name; empty for unknown names.
std::optional<InequalityId> parse_id(std::string_view name);

std::vector<InequalityId> all_ids();

}  // namespace emlab
