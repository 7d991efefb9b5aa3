#pragma once

// Planar triangle geometry for interior-point inequalities.
//
// For a triangle ABC with side lengths a = |BC|, b = |CA|, c = |AB| and an
// interior point P, this module computes:
//   PA, PB, PC        distances from P to the vertices
//   d_a, d_b, d_c     perpendicular distances from P to sides BC, CA, AB
//                     (indexed by the opposite vertex)
//   l_a, l_b, l_c     lengths of the bisectors of the apex angles
//                     BPC, CPA, APB, measured from P to the opposite side
//   R_A, R_B, R_C     distances from P to the circumcircle tangents at A, B, C
//   alpha, beta, gamma  apex angles BPC, CPA, APB (they sum to 2*pi)
//
// The bisector and tangent quantities each have two computation paths (a
// closed form and a constructive one) that are cross-checked in the tests.

#include <array>
#include <cstddef>

namespace emlab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
inline Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
double dot(Point2 p, Point2 q);
double cross(Point2 p, Point2 q);
double norm(Point2 p);
double distance(Point2 p, Point2 q);

struct SideLengths {
  double a = 0.0;  // |BC|
  double b = 0.0;  // |CA|
  double c = 0.0;  // |AB|
  double max() const;
};

// Counterclockwise, non-degenerate triangle. Construction swaps B and C if
// the input is clockwise and rejects triangles with
// |signed area| < 1e-12 * (max side)^2.
class Triangle {
 public:
  Triangle(Point2 a, Point2 b, Point2 c);

  Point2 A() const { return a_; }
  Point2 B() const { return b_; }
  Point2 C() const { return c_; }
  double area() const { return area_; }
  SideLengths sides() const;

 private:
  Point2 a_, b_, c_;
  double area_;
};

inline constexpr double kDefaultInteriorMargin = 1e-6;

// Barycentric coordinates of a strictly interior point: components sum to 1
// within 1e-12 and each is at least eps_interior (less a relative rounding
// allowance of 1e-9). eps_interior = 0 admits boundary points and is meant
// for internal testing only.
class BarycentricPoint {
 public:
  BarycentricPoint(double lambda_a, double lambda_b, double lambda_c,
                   double eps_interior = kDefaultInteriorMargin);

  double lambda_a() const { return la_; }
  double lambda_b() const { return lb_; }
  double lambda_c() const { return lc_; }

 private:
  double la_, lb_, lc_;
};

struct CircumCircle {
  Point2 center;
  double radius = 0.0;
};

struct VertexDistances {
  double pa = 0.0, pb = 0.0, pc = 0.0;
};

struct PedalDistances {
  double d_a = 0.0, d_b = 0.0, d_c = 0.0;
};

struct ApexAngles {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;  // BPC, CPA, APB in radians
};

struct BisectorLengths {
  double l_a = 0.0, l_b = 0.0, l_c = 0.0;
};

struct TangentDistances {
  double r_a = 0.0, r_b = 0.0, r_c = 0.0;
};

// Everything the inequality catalog consumes, computed once per point.
struct PointQuantities {
  double pa = 0.0, pb = 0.0, pc = 0.0;
  double d_a = 0.0, d_b = 0.0, d_c = 0.0;
  double l_a = 0.0, l_b = 0.0, l_c = 0.0;
  double r_a = 0.0, r_b = 0.0, r_c = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

SideLengths side_lengths(const Triangle& tri);

Point2 barycentric_to_cartesian(const Triangle& tri, const BarycentricPoint& bary);

// Inverse of barycentric_to_cartesian; components sum to 1. Coordinates of
// exterior points come out negative.
std::array<double, 3> cartesian_to_barycentric(const Triangle& tri, Point2 p);

// True when all three barycentric coordinates of p exceed zero strictly.
bool is_strictly_interior(const Triangle& tri, Point2 p);

CircumCircle circumcircle(const Triangle& tri);

// Perpendicular distances to sides BC, CA, AB. Throws std::domain_error if P
// is outside or on the boundary.
PedalDistances pedal_distances(const Triangle& tri, Point2 p);

VertexDistances vertex_distances(const Triangle& tri, Point2 p);

// Apex angles at P, each in (0, pi), via atan2 of cross and dot products.
ApexAngles apex_angles(const Triangle& tri, Point2 p);

// Closed form l_a = 2*PB*PC*cos(alpha/2) / (PB + PC), cyclically.
BisectorLengths bisector_lengths(const VertexDistances& vd, const ApexAngles& ang);

// Constructive path: intersects the bisector ray of each apex angle with the
// opposite side segment. The intersection parameter must fall inside the
// segment for interior P; a miss indicates a geometry bug and asserts.
BisectorLengths bisector_lengths_oracle(const Triangle& tri, Point2 p);

// Distance from P to the tangent line of the circumcircle at each vertex
// (the line through the vertex perpendicular to the circumradius).
TangentDistances tangent_distances(const Triangle& tri, Point2 p);

// Arithmetic route to the same quantities:
//   R_A = (b*d_c + c*d_b)/a,  R_B = (c*d_a + a*d_c)/b,  R_C = (a*d_b + b*d_a)/c.
TangentDistances tangent_distance_identity(const SideLengths& s, const PedalDistances& d);

// Aggregates all of the above and enforces the bundle invariants:
// angle closure, pedal/bisector dominance, tangent/vertex dominance.
PointQuantities quantities(const Triangle& tri, const BarycentricPoint& bary);

}  // namespace emlab
