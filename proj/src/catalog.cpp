#include "emlab/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace emlab {

namespace {

constexpr double kTiny = 1e-300;  // rel_slack denominator floor

double cube(double v) { return v * v * v; }

}  // namespace

WeightVector::WeightVector(double log_x, double log_y, double log_u, double log_v)
    : lx_(log_x), ly_(log_y), lu_(log_u), lv_(log_v) {
  if (!std::isfinite(lx_) || !std::isfinite(ly_) || !std::isfinite(lu_) ||
      !std::isfinite(lv_)) {
    throw std::invalid_argument("WeightVector: non-finite log weight");
  }
}

double WeightVector::x() const { return std::exp(lx_); }
double WeightVector::y() const { return std::exp(ly_); }
double WeightVector::z() const { return std::exp(log_z()); }
double WeightVector::u() const { return std::exp(lu_); }
double WeightVector::v() const { return std::exp(lv_); }
double WeightVector::w() const { return std::exp(log_w()); }

EvaluationResult make_result(double lhs, double rhs) {
  EvaluationResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.rel_slack = r.slack / std::max({std::abs(lhs), std::abs(rhs), kTiny});
  return r;
}

EvaluationResult evaluate(InequalityId id, const PointQuantities& q,
                          const WeightVector& w, const SideLengths& s) {
  const double sum_p = q.pa + q.pb + q.pc;
  const double sum_d = q.d_a + q.d_b + q.d_c;
  const double sum_l = q.l_a + q.l_b + q.l_c;
  const double sum_r = q.r_a + q.r_b + q.r_c;

  switch (id) {
    case InequalityId::EM:
      return make_result(sum_p, 2.0 * sum_d);
    case InequalityId::BARROW:
      return make_result(sum_p, 2.0 * sum_l);
    case InequalityId::DNP:
      return make_result(sum_r, 2.0 * sum_d);

    case InequalityId::WEM:
      return make_result(w.x() * (q.pa + cube(w.u()) * q.d_a) +
                             w.y() * (q.pb + cube(w.v()) * q.d_b) +
                             w.z() * (q.pc + cube(w.w()) * q.d_c),
                         3.0 * (w.u() * q.d_a + w.v() * q.d_b + w.w() * q.d_c));
    case InequalityId::WEM_U1:
      return make_result(w.x() * (q.pa + q.d_a) + w.y() * (q.pb + q.d_b) +
                             w.z() * (q.pc + q.d_c),
                         3.0 * sum_d);
    case InequalityId::WEM_X1:
      return make_result(sum_p,
                         (3.0 * w.u() - cube(w.u())) * q.d_a +
                             (3.0 * w.v() - cube(w.v())) * q.d_b +
                             (3.0 * w.w() - cube(w.w())) * q.d_c);

    case InequalityId::WDNP:
      return make_result(w.x() * (q.r_a + cube(w.u()) * q.d_a) +
                             w.y() * (q.r_b + cube(w.v()) * q.d_b) +
                             w.z() * (q.r_c + cube(w.w()) * q.d_c),
                         3.0 * (w.u() * q.d_a + w.v() * q.d_b + w.w() * q.d_c));
    case InequalityId::WDNP_U1:
      return make_result(w.x() * (q.r_a + q.d_a) + w.y() * (q.r_b + q.d_b) +
                             w.z() * (q.r_c + q.d_c),
                         3.0 * sum_d);
    case InequalityId::WDNP_X1:
      return make_result(sum_r,
                         (3.0 * w.u() - cube(w.u())) * q.d_a +
                             (3.0 * w.v() - cube(w.v())) * q.d_b +
                             (3.0 * w.w() - cube(w.w())) * q.d_c);

    case InequalityId::WBARROW:
      return make_result(w.x() * (q.pa + cube(w.u()) * q.l_a) +
                             w.y() * (q.pb + cube(w.v()) * q.l_b) +
                             w.z() * (q.pc + cube(w.w()) * q.l_c),
                         3.0 * (w.u() * q.l_a + w.v() * q.l_b + w.w() * q.l_c));
    case InequalityId::WBARROW_U1:
      return make_result(w.x() * (q.pa + q.l_a) + w.y() * (q.pb + q.l_b) +
                             w.z() * (q.pc + q.l_c),
                         3.0 * sum_l);
    case InequalityId::WBARROW_X1:
      return make_result(sum_p,
                         (3.0 * w.u() - cube(w.u())) * q.l_a +
                             (3.0 * w.v() - cube(w.v())) * q.l_b +
                             (3.0 * w.w() - cube(w.w())) * q.l_c);

    case InequalityId::PROD_EM:
      return make_result((q.pa + cube(w.u()) * q.d_a) * (q.pb + cube(w.v()) * q.d_b) *
                             (q.pc + cube(w.w()) * q.d_c),
                         cube(w.u() * q.d_a + w.v() * q.d_b + w.w() * q.d_c));
    case InequalityId::PROD_EM_1:
      return make_result((q.pa + q.d_a) * (q.pb + q.d_b) * (q.pc + q.d_c),
                         cube(sum_d));
    case InequalityId::PROD_DNP:
      return make_result((q.r_a + cube(w.u()) * q.d_a) * (q.r_b + cube(w.v()) * q.d_b) *
                             (q.r_c + cube(w.w()) * q.d_c),
                         cube(w.u() * q.d_a + w.v() * q.d_b + w.w() * q.d_c));
    case InequalityId::PROD_DNP_1:
      return make_result((q.r_a + q.d_a) * (q.r_b + q.d_b) * (q.r_c + q.d_c),
                         cube(sum_d));
    case InequalityId::PROD_BARROW:
      return make_result((q.pa + cube(w.u()) * q.l_a) * (q.pb + cube(w.v()) * q.l_b) *
                             (q.pc + cube(w.w()) * q.l_c),
                         cube(w.u() * q.l_a + w.v() * q.l_b + w.w() * q.l_c));
    case InequalityId::PROD_BARROW_1:
      return make_result((q.pa + q.l_a) * (q.pb + q.l_b) * (q.pc + q.l_c),
                         cube(sum_l));

    case InequalityId::WBARROW_STRONG: {
      const auto pair_coef = [](double m, double n) {
        return std::sqrt(m / n) + std::sqrt(n / m);
      };
      return make_result(
          w.x() * q.pa + w.y() * q.pb + w.z() * q.pc,
          std::sqrt(w.y() * w.z()) * pair_coef(q.pb, q.pc) * q.l_a +
              std::sqrt(w.z() * w.x()) * pair_coef(q.pc, q.pa) * q.l_b +
              std::sqrt(w.x() * w.y()) * pair_coef(q.pa, q.pb) * q.l_c);
    }

    case InequalityId::BARROW_CHAIN_A: {
      const double num = q.pa * q.pa * (q.pb + q.pc) * (q.pb + q.pc) +
                         q.pb * q.pb * (q.pc + q.pa) * (q.pc + q.pa) +
                         q.pc * q.pc * (q.pa + q.pb) * (q.pa + q.pb);
      const double den = (q.pb + q.pc) * (q.pc + q.pa) * (q.pa + q.pb);
      return make_result(0.5 * sum_p, num / den);
    }
    case InequalityId::BARROW_CHAIN_B: {
      const double num = q.pa * q.pa * (q.pb + q.pc) * (q.pb + q.pc) +
                         q.pb * q.pb * (q.pc + q.pa) * (q.pc + q.pa) +
                         q.pc * q.pc * (q.pa + q.pb) * (q.pa + q.pb);
      const double den = (q.pb + q.pc) * (q.pc + q.pa) * (q.pa + q.pb);
      return make_result(num / den, sum_l);
    }

    case InequalityId::DARGUERON:
      return make_result(q.pa / (w.u() * w.u()) + q.pb / (w.v() * w.v()) +
                             q.pc / (w.w() * w.w()),
                         2.0 * (w.u() * q.d_a + w.v() * q.d_b + w.w() * q.d_c));

    case InequalityId::LEMMA_A:
      return make_result(q.pa, (s.b * q.d_c + s.c * q.d_b) / s.a);
    case InequalityId::LEMMA_B:
      return make_result(q.pb, (s.c * q.d_a + s.a * q.d_c) / s.b);
    case InequalityId::LEMMA_C:
      return make_result(q.pc, (s.a * q.d_b + s.b * q.d_a) / s.c);
  }
  throw std::invalid_argument("evaluate: unknown inequality id");
}

WolstenholmeResult wolstenholme_slack(double s1, double s2, double s3,
                                      double angle_a, double angle_b,
                                      double angle_c) {
  if (!(angle_a > 0.0) || !(angle_b > 0.0) || !(angle_c > 0.0) ||
      std::abs(angle_a + angle_b + angle_c - std::numbers::pi) > 1e-9) {
    throw std::domain_error("wolstenholme_slack: angles must be positive and sum to pi");
  }
  WolstenholmeResult r;
  r.slack = s1 * s1 + s2 * s2 + s3 * s3 - 2.0 * s2 * s3 * std::cos(angle_a) -
            2.0 * s3 * s1 * std::cos(angle_b) - 2.0 * s1 * s2 * std::cos(angle_c);
  const double e1 = s1 - s2 * std::cos(angle_c) - s3 * std::cos(angle_b);
  const double e2 = s2 * std::sin(angle_c) - s3 * std::sin(angle_b);
  r.decomposition = e1 * e1 + e2 * e2;
  return r;
}

IdentityPair chain_gap_identity(double p, double q, double r) {
  if (!(p > 0.0) || !(q > 0.0) || !(r > 0.0)) {
    throw std::domain_error("chain_gap_identity: arguments must be positive");
  }
  IdentityPair out;
  out.lhs = (p + q + r) * (p + q) * (q + r) * (r + p) -
            2.0 * p * p * (q + r) * (q + r) - 2.0 * q * q * (r + p) * (r + p) -
            2.0 * r * r * (p + q) * (p + q);
  out.rhs = p * q * (p - q) * (p - q) + q * r * (q - r) * (q - r) +
            r * p * (r - p) * (r - p);
  return out;
}

namespace {

Triangle unit_equilateral() {
  return Triangle{{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
}

EqualityConfiguration canonical_configuration(std::string_view note = {}) {
  return {unit_equilateral(), BarycentricPoint{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
          WeightVector{}, note};
}

// Interior point halfway between a vertex and the circumcenter, as
// barycentrics of the given triangle.
BarycentricPoint vertex_circumcenter_midpoint(const Triangle& tri, Point2 vertex) {
  const Point2 mid = 0.5 * (vertex + circumcircle(tri).center);
  const auto bc = cartesian_to_barycentric(tri, mid);
  return BarycentricPoint{bc[0], bc[1], bc[2]};
}

}  // namespace

EqualityConfiguration equality_configuration(InequalityId id) {
  info(id);  // rejects ids outside the catalog
  switch (id) {
    case InequalityId::LEMMA_A: {
      // Right triangle; P halfway along the segment from A to the circumcenter.
      const Triangle tri{{0.0, 0.0}, {4.0, 0.0}, {0.0, 3.0}};
      return {tri, vertex_circumcenter_midpoint(tri, tri.A()), WeightVector{}, {}};
    }
    case InequalityId::LEMMA_B: {
      // Acute triangle so the segment stays interior.
      const Triangle tri{{0.0, 0.0}, {4.0, 0.0}, {2.0, 3.0}};
      return {tri, vertex_circumcenter_midpoint(tri, tri.B()), WeightVector{}, {}};
    }
    case InequalityId::LEMMA_C: {
      const Triangle tri{{0.0, 0.0}, {4.0, 0.0}, {2.0, 3.0}};
      return {tri, vertex_circumcenter_midpoint(tri, tri.C()), WeightVector{}, {}};
    }
    case InequalityId::BARROW_CHAIN_A: {
      // Circumcenter of an acute triangle: PA = PB = PC there.
      const Triangle tri{{0.0, 0.0}, {4.0, 0.0}, {2.0, 3.0}};
      const auto bc = cartesian_to_barycentric(tri, circumcircle(tri).center);
      return {tri, BarycentricPoint{bc[0], bc[1], bc[2]}, WeightVector{}, {}};
    }
    case InequalityId::PROD_DNP:
      return canonical_configuration(
          "the known equality characterization (P at a vertex) is not strictly "
          "interior; the equilateral center also attains zero slack");
    default:
      return canonical_configuration();
  }
}

namespace {

using Id = InequalityId;

constexpr std::array<InequalityInfo, kCatalogSize> kCatalog{{
    {Id::EM, "EM", "PA+PB+PC", "2(d_a+d_b+d_c)", "Erdos-Mordell inequality",
     WeightArity::None, {}},
    {Id::BARROW, "BARROW", "PA+PB+PC", "2(l_a+l_b+l_c)", "Barrow's inequality",
     WeightArity::None,
     "bisector lengths use l_a = 2 PB PC cos(alpha/2)/(PB+PC); a circulating "
     "form without the factor 2 is a misprint"},
    {Id::DNP, "DNP", "R_A+R_B+R_C", "2(d_a+d_b+d_c)",
     "Dao-Nguyen-Pham inequality", WeightArity::None, {}},
    {Id::WEM, "WEM", "x(PA+u^3 d_a)+y(PB+v^3 d_b)+z(PC+w^3 d_c)",
     "3(u d_a+v d_b+w d_c)", "weighted Erdos-Mordell, xyz=uvw=1",
     WeightArity::Both,
     "d_a, d_b, d_c are the distances to sides BC, CA, AB (indexed by the "
     "opposite vertex); the bound fails under other letter orders"},
    {Id::WEM_U1, "WEM_U1", "x(PA+d_a)+y(PB+d_b)+z(PC+d_c)", "3(d_a+d_b+d_c)",
     "weighted Erdos-Mordell at u=v=w=1", WeightArity::XYZ, {}},
    {Id::WEM_X1, "WEM_X1", "PA+PB+PC",
     "(3u-u^3)d_a+(3v-v^3)d_b+(3w-w^3)d_c",
     "weighted Erdos-Mordell at x=y=z=1", WeightArity::UVW,
     "coefficients 3t-t^3 go negative for t > sqrt(3); the evaluator does not "
     "clamp them"},
    {Id::WDNP, "WDNP", "x(R_A+u^3 d_a)+y(R_B+v^3 d_b)+z(R_C+w^3 d_c)",
     "3(u d_a+v d_b+w d_c)", "weighted Dao-Nguyen-Pham, xyz=uvw=1",
     WeightArity::Both, {}},
    {Id::WDNP_U1, "WDNP_U1", "x(R_A+d_a)+y(R_B+d_b)+z(R_C+d_c)",
     "3(d_a+d_b+d_c)", "weighted Dao-Nguyen-Pham at u=v=w=1", WeightArity::XYZ,
     {}},
    {Id::WDNP_X1, "WDNP_X1", "R_A+R_B+R_C",
     "(3u-u^3)d_a+(3v-v^3)d_b+(3w-w^3)d_c",
     "weighted Dao-Nguyen-Pham at x=y=z=1", WeightArity::UVW, {}},
    {Id::WBARROW, "WBARROW", "x(PA+u^3 l_a)+y(PB+v^3 l_b)+z(PC+w^3 l_c)",
     "3(u l_a+v l_b+w l_c)", "weighted Barrow, xyz=uvw=1", WeightArity::Both,
     "rhs carries the factor 3 on all three terms; a display with the factor "
     "on the first term only is a misprint"},
    {Id::WBARROW_U1, "WBARROW_U1", "x(PA+l_a)+y(PB+l_b)+z(PC+l_c)",
     "3(l_a+l_b+l_c)", "weighted Barrow at u=v=w=1", WeightArity::XYZ, {}},
    {Id::WBARROW_X1, "WBARROW_X1", "PA+PB+PC",
     "(3u-u^3)l_a+(3v-v^3)l_b+(3w-w^3)l_c", "weighted Barrow at x=y=z=1",
     WeightArity::UVW, {}},
    {Id::PROD_EM, "PROD_EM", "(PA+u^3 d_a)(PB+v^3 d_b)(PC+w^3 d_c)",
     "(u d_a+v d_b+w d_c)^3", "product form of weighted Erdos-Mordell, uvw=1",
     WeightArity::UVW, {}},
    {Id::PROD_EM_1, "PROD_EM_1", "(PA+d_a)(PB+d_b)(PC+d_c)",
     "(d_a+d_b+d_c)^3", "product strengthening of Erdos-Mordell",
     WeightArity::None, {}},
    {Id::PROD_DNP, "PROD_DNP", "(R_A+u^3 d_a)(R_B+v^3 d_b)(R_C+w^3 d_c)",
     "(u d_a+v d_b+w d_c)^3",
     "product form of weighted Dao-Nguyen-Pham, uvw=1", WeightArity::UVW,
     "the known equality characterization (P at a vertex) is not strictly "
     "interior; the equilateral center also attains zero slack"},
    {Id::PROD_DNP_1, "PROD_DNP_1", "(R_A+d_a)(R_B+d_b)(R_C+d_c)",
     "(d_a+d_b+d_c)^3", "product strengthening of Dao-Nguyen-Pham",
     WeightArity::None, {}},
    {Id::PROD_BARROW, "PROD_BARROW", "(PA+u^3 l_a)(PB+v^3 l_b)(PC+w^3 l_c)",
     "(u l_a+v l_b+w l_c)^3", "product form of weighted Barrow, uvw=1",
     WeightArity::UVW, {}},
    {Id::PROD_BARROW_1, "PROD_BARROW_1", "(PA+l_a)(PB+l_b)(PC+l_c)",
     "(l_a+l_b+l_c)^3", "product strengthening of Barrow", WeightArity::None,
     {}},
    {Id::WBARROW_STRONG, "WBARROW_STRONG", "x PA+y PB+z PC",
     "sqrt(yz)(sqrt(PB/PC)+sqrt(PC/PB))l_a + cyclic",
     "Wolstenholme-strengthened weighted Barrow (any positive x, y, z; "
     "sampled on the xyz=1 slice, which loses no generality by homogeneity)",
     WeightArity::XYZ, {}},
    {Id::BARROW_CHAIN_A, "BARROW_CHAIN_A", "(PA+PB+PC)/2",
     "[PA^2(PB+PC)^2+PB^2(PC+PA)^2+PC^2(PA+PB)^2]/[(PB+PC)(PC+PA)(PA+PB)]",
     "two-step strengthening of Barrow, first link", WeightArity::None,
     "equality exactly when PA = PB = PC"},
    {Id::BARROW_CHAIN_B, "BARROW_CHAIN_B",
     "[PA^2(PB+PC)^2+PB^2(PC+PA)^2+PC^2(PA+PB)^2]/[(PB+PC)(PC+PA)(PA+PB)]",
     "l_a+l_b+l_c", "two-step strengthening of Barrow, second link",
     WeightArity::None, {}},
    {Id::DARGUERON, "DARGUERON", "PA/u^2+PB/v^2+PC/w^2",
     "2(u d_a+v d_b+w d_c)", "Dar-Gueron weighted Erdos-Mordell, uvw=1",
     WeightArity::UVW, {}},
    {Id::LEMMA_A, "LEMMA_A", "PA", "(b d_c + c d_b)/a",
     "vertex-distance lower bound (Dar-Gueron lemma); equality when P lies on "
     "the line through A and the circumcenter",
     WeightArity::None, {}},
    {Id::LEMMA_B, "LEMMA_B", "PB", "(c d_a + a d_c)/b",
     "vertex-distance lower bound, cyclic form", WeightArity::None, {}},
    {Id::LEMMA_C, "LEMMA_C", "PC", "(a d_b + b d_a)/c",
     "vertex-distance lower bound, cyclic form", WeightArity::None, {}},
}};

}  // namespace

const std::array<InequalityInfo, kCatalogSize>& catalog() { return kCatalog; }

const InequalityInfo& info(InequalityId id) {
  for (const auto& entry : kCatalog) {
    if (entry.id == id) return entry;
  }
  throw std::invalid_argument("info: unknown inequality id");
}

std::optional<InequalityId> parse_id(std::string_view name) {
  for (const auto& entry : kCatalog) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

std::vector<InequalityId> all_ids() {
  std::vector<InequalityId> ids;
  ids.reserve(kCatalogSize);
  for (const auto& entry : kCatalog) ids.push_back(entry.id);
  return ids;
}

}  // namespace emlab
