#include "emlab/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace emlab {

namespace {

constexpr double kDegeneracyFactor = 1e-12;   // area >= factor * (max side)^2
constexpr double kAngleClosureTol = 1e-9;     // |alpha+beta+gamma - 2pi|
constexpr double kDominanceRelTol = 1e-9;     // d <= l and R <= P slop

double point_line_distance(Point2 p, Point2 q1, Point2 q2) {
  const Point2 d = q2 - q1;
  return std::abs(cross(d, p - q1)) / norm(d);
}

}  // namespace

double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
double norm(Point2 p) { return std::hypot(p.x, p.y); }
double distance(Point2 p, Point2 q) { return norm(p - q); }

double SideLengths::max() const { return std::max({a, b, c}); }

Triangle::Triangle(Point2 a, Point2 b, Point2 c) : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(b.x) ||
      !std::isfinite(b.y) || !std::isfinite(c.x) || !std::isfinite(c.y)) {
    throw std::invalid_argument("Triangle: non-finite vertex");
  }
  double signed_area = 0.5 * cross(b_ - a_, c_ - a_);
  if (signed_area < 0.0) {
    std::swap(b_, c_);
    signed_area = -signed_area;
  }
  const double max_side =
      std::max({distance(b_, c_), distance(c_, a_), distance(a_, b_)});
  if (!(signed_area > 0.0 &&
        signed_area >= kDegeneracyFactor * max_side * max_side)) {
    throw std::invalid_argument("Triangle: degenerate (area " +
                                std::to_string(signed_area) + " below threshold)");
  }
  area_ = signed_area;
}

SideLengths Triangle::sides() const {
  return {distance(b_, c_), distance(c_, a_), distance(a_, b_)};
}

BarycentricPoint::BarycentricPoint(double lambda_a, double lambda_b,
                                   double lambda_c, double eps_interior)
    : la_(lambda_a), lb_(lambda_b), lc_(lambda_c) {
  if (!std::isfinite(la_) || !std::isfinite(lb_) || !std::isfinite(lc_)) {
    throw std::invalid_argument("BarycentricPoint: non-finite coordinate");
  }
  if (std::abs(la_ + lb_ + lc_ - 1.0) > 1e-12) {
    throw std::invalid_argument("BarycentricPoint: coordinates do not sum to 1");
  }
  const double floor = eps_interior * (1.0 - 1e-9);
  if (la_ < floor || lb_ < floor || lc_ < floor) {
    throw std::invalid_argument("BarycentricPoint: coordinate below interior margin");
  }
}

SideLengths side_lengths(const Triangle& tri) { return tri.sides(); }

Point2 barycentric_to_cartesian(const Triangle& tri, const BarycentricPoint& bary) {
  return bary.lambda_a() * tri.A() + bary.lambda_b() * tri.B() +
         bary.lambda_c() * tri.C();
}

std::array<double, 3> cartesian_to_barycentric(const Triangle& tri, Point2 p) {
  const double twice_area = 2.0 * tri.area();
  const double la = cross(tri.B() - p, tri.C() - p) / twice_area;
  const double lb = cross(tri.C() - p, tri.A() - p) / twice_area;
  return {la, lb, 1.0 - la - lb};
}

bool is_strictly_interior(const Triangle& tri, Point2 p) {
  return cross(tri.B() - p, tri.C() - p) > 0.0 &&
         cross(tri.C() - p, tri.A() - p) > 0.0 &&
         cross(tri.A() - p, tri.B() - p) > 0.0;
}

CircumCircle circumcircle(const Triangle& tri) {
  // Work in coordinates relative to A to limit cancellation.
  const Point2 b = tri.B() - tri.A();
  const Point2 c = tri.C() - tri.A();
  const double d = 2.0 * cross(b, c);
  const double b2 = dot(b, b);
  const double c2 = dot(c, c);
  const Point2 center{tri.A().x + (c.y * b2 - b.y * c2) / d,
                      tri.A().y + (b.x * c2 - c.x * b2) / d};
  const double radius = distance(center, tri.A());
  const double rb = distance(center, tri.B());
  const double rc = distance(center, tri.C());
  if (std::abs(rb - radius) > 1e-9 * radius || std::abs(rc - radius) > 1e-9 * radius) {
    throw std::domain_error("circumcircle: vertices not equidistant from center");
  }
  return {center, radius};
}

namespace {

void require_interior(const Triangle& tri, Point2 p, const char* who) {
  if (!is_strictly_interior(tri, p)) {
    throw std::domain_error(std::string(who) + ": point not strictly interior");
  }
}

}  // namespace

PedalDistances pedal_distances(const Triangle& tri, Point2 p) {
  require_interior(tri, p, "pedal_distances");
  return {point_line_distance(p, tri.B(), tri.C()),
          point_line_distance(p, tri.C(), tri.A()),
          point_line_distance(p, tri.A(), tri.B())};
}

VertexDistances vertex_distances(const Triangle& tri, Point2 p) {
  require_interior(tri, p, "vertex_distances");
  return {distance(p, tri.A()), distance(p, tri.B()), distance(p, tri.C())};
}

ApexAngles apex_angles(const Triangle& tri, Point2 p) {
  require_interior(tri, p, "apex_angles");
  const Point2 ta = tri.A() - p;
  const Point2 tb = tri.B() - p;
  const Point2 tc = tri.C() - p;
  // atan2 of cross and dot stays accurate when the angle is near pi, where
  // acos of the normalized dot loses half the digits.
  const ApexAngles ang{std::atan2(std::abs(cross(tb, tc)), dot(tb, tc)),
                       std::atan2(std::abs(cross(tc, ta)), dot(tc, ta)),
                       std::atan2(std::abs(cross(ta, tb)), dot(ta, tb))};
  if (std::abs(ang.alpha + ang.beta + ang.gamma - 2.0 * std::numbers::pi) >
      kAngleClosureTol) {
    throw std::domain_error("apex_angles: angles do not close to 2*pi");
  }
  return ang;
}

BisectorLengths bisector_lengths(const VertexDistances& vd, const ApexAngles& ang) {
  const auto one = [](double q, double r, double theta) {
    return 2.0 * q * r * std::cos(0.5 * theta) / (q + r);
  };
  return {one(vd.pb, vd.pc, ang.alpha), one(vd.pc, vd.pa, ang.beta),
          one(vd.pa, vd.pb, ang.gamma)};
}

namespace {

// From p, shoot the bisector ray of the angle subtended by (q1, q2) and
// return the distance to its crossing with segment q1-q2.
double bisector_ray_length(Point2 p, Point2 q1, Point2 q2) {
  const Point2 u = (1.0 / distance(p, q1)) * (q1 - p);
  const Point2 v = (1.0 / distance(p, q2)) * (q2 - p);
  Point2 dir = u + v;
  dir = (1.0 / norm(dir)) * dir;
  const Point2 e = q2 - q1;
  const double denom = cross(dir, e);
  const double t = cross(q1 - p, e) / denom;  // ray parameter = length
  [[maybe_unused]] const double s = cross(q1 - p, dir) / denom;  // segment parameter
  assert(s > 0.0 && s < 1.0 && "bisector foot must fall inside the side segment");
  assert(t > 0.0);
  return t;
}

}  // namespace

BisectorLengths bisector_lengths_oracle(const Triangle& tri, Point2 p) {
  require_interior(tri, p, "bisector_lengths_oracle");
  return {bisector_ray_length(p, tri.B(), tri.C()),
          bisector_ray_length(p, tri.C(), tri.A()),
          bisector_ray_length(p, tri.A(), tri.B())};
}

TangentDistances tangent_distances(const Triangle& tri, Point2 p) {
  require_interior(tri, p, "tangent_distances");
  const CircumCircle cc = circumcircle(tri);
  const auto one = [&](Point2 vertex) {
    const Point2 n = vertex - cc.center;  // normal of the tangent at vertex
    return std::abs(dot(p - vertex, n)) / norm(n);
  };
  return {one(tri.A()), one(tri.B()), one(tri.C())};
}

TangentDistances tangent_distance_identity(const SideLengths& s, const PedalDistances& d) {
  return {(s.b * d.d_c + s.c * d.d_b) / s.a,
          (s.c * d.d_a + s.a * d.d_c) / s.b,
          (s.a * d.d_b + s.b * d.d_a) / s.c};
}

PointQuantities quantities(const Triangle& tri, const BarycentricPoint& bary) {
  const Point2 p = barycentric_to_cartesian(tri, bary);
  const VertexDistances vd = vertex_distances(tri, p);
  const PedalDistances pd = pedal_distances(tri, p);
  const ApexAngles ang = apex_angles(tri, p);
  const BisectorLengths bl = bisector_lengths(vd, ang);
  const TangentDistances td = tangent_distances(tri, p);

  PointQuantities q;
  q.pa = vd.pa;
  q.pb = vd.pb;
  q.pc = vd.pc;
  q.d_a = pd.d_a;
  q.d_b = pd.d_b;
  q.d_c = pd.d_c;
  q.l_a = bl.l_a;
  q.l_b = bl.l_b;
  q.l_c = bl.l_c;
  q.r_a = td.r_a;
  q.r_b = td.r_b;
  q.r_c = td.r_c;
  q.alpha = ang.alpha;
  q.beta = ang.beta;
  q.gamma = ang.gamma;

  // Dominance invariants. Two allowances: relative, for the configurations
  // where they are exact equalities (d = l and R = PA at the equilateral
  // center), and absolute at the triangle scale, for points pinned at the
  // interior margin where both quantities shrink to the rounding floor.
  const double scale = tri.sides().max();
  const auto dominated = [scale](double lo, double hi) {
    return lo <= hi * (1.0 + kDominanceRelTol) + 1e-12 * scale;
  };
  if (!dominated(q.d_a, q.l_a) || !dominated(q.d_b, q.l_b) || !dominated(q.d_c, q.l_c)) {
    throw std::domain_error("quantities: pedal distance exceeds bisector length");
  }
  if (!dominated(q.r_a, q.pa) || !dominated(q.r_b, q.pb) || !dominated(q.r_c, q.pc)) {
    throw std::domain_error("quantities: tangent distance exceeds vertex distance");
  }
  return q;
}

}  // namespace emlab
