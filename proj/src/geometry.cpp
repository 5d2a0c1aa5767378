#include "dehn/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehn::geometry {

Vec2 SimplexFrame::corner(int k) {
  constexpr double s = 1.4142135623730951;       // sqrt(2)
  constexpr double h = 1.2247448713915890;       // sqrt(6)/2, triangle height
  switch (k) {
    case 0: return {0.0, 0.0};
    case 1: return {s, 0.0};
    case 2: return {s / 2, h};
  }
  throw std::invalid_argument("corner index");
}

Vec2 SimplexFrame::barycenter() {
  return {corner(0).x / 3 + corner(1).x / 3 + corner(2).x / 3,
          corner(0).y / 3 + corner(1).y / 3 + corner(2).y / 3};
}

Vec2 SimplexFrame::from_barycentric(double b0, double b1, double b2) {
  Vec2 c0 = corner(0), c1 = corner(1), c2 = corner(2);
  return {b0 * c0.x + b1 * c1.x + b2 * c2.x, b0 * c0.y + b1 * c1.y + b2 * c2.y};
}

std::array<double, 3> SimplexFrame::to_barycentric(Vec2 p) {
  Vec2 c0 = corner(0), c1 = corner(1), c2 = corner(2);
  double det = orient(c0, c1, c2);
  double b0 = orient(p, c1, c2) / det;
  double b1 = orient(c0, p, c2) / det;
  double b2 = orient(c0, c1, p) / det;
  return {b0, b1, b2};
}

bool SimplexFrame::contains(Vec2 p, double tol) {
  auto b = to_barycentric(p);
  return b[0] >= -tol && b[1] >= -tol && b[2] >= -tol;
}

double SimplexFrame::boundary_distance(Vec2 p) {
  double d = 1e300;
  for (int k = 0; k < 3; ++k)
    d = std::min(d, segment_point_distance(corner(k), corner((k + 1) % 3), p));
  return d;
}

Vec2 SimplexFrame::side_point(int k, double t) {
  Vec2 a = corner(k), b = corner((k + 1) % 3);
  return a + (b - a) * t;
}

std::optional<double> SimplexFrame::side_parameter(int k, Vec2 p, double tol) {
  Vec2 a = corner(k), b = corner((k + 1) % 3);
  Vec2 ab = b - a;
  double t = dot(p - a, ab) / dot(ab, ab);
  if (t < -tol || t > 1 + tol) return std::nullopt;
  t = std::clamp(t, 0.0, 1.0);
  if (dist(a + ab * t, p) > tol) return std::nullopt;
  return t;
}

Vec2 SimplexFrame::project_from_center(Vec2 p, int* side, double* t) {
  Vec2 o = barycenter();
  Vec2 dir = p - o;
  double best_s = 1e300;
  Vec2 best_point{};
  int best_side = -1;
  double best_t = 0;
  for (int k = 0; k < 3; ++k) {
    Vec2 a = corner(k), b = corner((k + 1) % 3);
    // o + s*dir = a + u*(b-a)
    double den = cross(dir, b - a);
    if (std::abs(den) < 1e-15) continue;
    double s = cross(a - o, b - a) / den;
    double u = cross(a - o, dir) / den;
    if (s > 1e-12 && u >= -1e-12 && u <= 1 + 1e-12 && s < best_s) {
      best_s = s;
      best_t = std::clamp(u, 0.0, 1.0);
      best_side = k;
      best_point = a + (b - a) * best_t;
    }
  }
  if (best_side < 0) throw std::invalid_argument("radial projection from the barycenter failed");
  if (side) *side = best_side;
  if (t) *t = best_t;
  return best_point;
}

std::vector<double> segment_circle_params(Vec2 a, Vec2 b, Vec2 c, double r) {
  Vec2 d = b - a;
  Vec2 f = a - c;
  double A = dot(d, d);
  double B = 2 * dot(f, d);
  double C = dot(f, f) - r * r;
  std::vector<double> out;
  if (A == 0) return out;
  double disc = B * B - 4 * A * C;
  if (disc <= 0) return out;
  double sq = std::sqrt(disc);
  for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)})
    if (t > 1e-12 && t < 1 - 1e-12) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

double angular_span(Vec2 a, Vec2 b, Vec2 u) {
  Vec2 va = a - u, vb = b - u;
  return std::atan2(cross(va, vb), dot(va, vb));
}

double segment_point_distance(Vec2 a, Vec2 b, Vec2 p) {
  Vec2 ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 == 0) return dist(a, p);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(a + ab * t, p);
}

double triangle_area(Vec2 a, Vec2 b, Vec2 c) { return std::abs(orient(a, b, c)) / 2; }

double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

bool point_in_triangle(Vec2 p, Vec2 a, Vec2 b, Vec2 c, double tol) {
  double d1 = orient(p, a, b), d2 = orient(p, b, c), d3 = orient(p, c, a);
  bool neg = d1 < -tol || d2 < -tol || d3 < -tol;
  bool pos = d1 > tol || d2 > tol || d3 > tol;
  return !(neg && pos);
}

}  // namespace dehn::geometry
