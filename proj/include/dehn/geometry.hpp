#ifndef DEHN_GEOMETRY_HPP
#define DEHN_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace dehn::geometry {

struct Vec2 {
  double x = 0, y = 0;
  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

// Every 2-simplex carries its own copy of the standard simplex of R^3
// (vertices e1, e2, e3), drawn in a fixed planar frame: an equilateral
// triangle of side sqrt(2).
struct SimplexFrame {
  static constexpr double side() { return 1.4142135623730951; }
  static Vec2 corner(int k);        // k in {0,1,2}
  static Vec2 barycenter();
  static double inradius() { return 0.4082482904638630; }
  static double area() { return 0.8660254037844386; }
  static double diameter() { return side(); }

  static Vec2 from_barycentric(double b0, double b1, double b2);
  static std::array<double, 3> to_barycentric(Vec2 p);
  static bool contains(Vec2 p, double tol = 1e-12);

  // distance to the boundary of the triangle
  static double boundary_distance(Vec2 p);

  // point of side k (between corner k and corner k+1) at parameter t
  static Vec2 side_point(int k, double t);
  // if p lies within tol of side k, its parameter along that side
  static std::optional<double> side_parameter(int k, Vec2 p, double tol);

  // radial projection from the barycenter onto the boundary; returns the
  // side index and parameter as well
  static Vec2 project_from_center(Vec2 p, int* side, double* t);
};

// intersection parameters of segment [a,b] with the circle |p - c| = r,
// restricted to (0,1), sorted
std::vector<double> segment_circle_params(Vec2 a, Vec2 b, Vec2 c, double r);

// signed angular span of segment [a,b] as seen from u (|span| < pi for
// segments not through u)
double angular_span(Vec2 a, Vec2 b, Vec2 u);

double segment_point_distance(Vec2 a, Vec2 b, Vec2 p);

double triangle_area(Vec2 a, Vec2 b, Vec2 c);
double orient(Vec2 a, Vec2 b, Vec2 c);  // twice the signed area

bool point_in_triangle(Vec2 p, Vec2 a, Vec2 b, Vec2 c, double tol = 0.0);

}  // namespace dehn::geometry

#endif
