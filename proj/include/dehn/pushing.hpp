#ifndef DEHN_PUSHING_HPP
#define DEHN_PUSHING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dehn/chain.hpp"
#include "dehn/rng.hpp"

namespace dehn::pushing {

using chain::Chain1;
using chain::Chain2;
using geometry::Vec2;

// Constants of the pushing argument for chains of dimension k inside
// i-simplices.  With B the ball of radius r about the barycenter,
//   K = (2r)^k * integral over B(O,3r) of |u|^-k + vol_i(B)
// and v0 is the smallest integer with K / v0 < vol_i(B).  Supported (k,i):
// (1,2) in closed form 13*pi*r^2 (v0 = 14) and (2,3) with (148/3)*pi*r^3
// (v0 = 38); the geometric projection pipeline runs at k = 1.
struct PushingConstants {
  int k = 1;
  int i = 2;
  double r = 0.12;
  double K = 0;
  double ball_volume = 0;
  int v0 = 0;
  // Assembled end-to-end constants recorded with every certificate:
  //   C_R = v0 * diam(simplex) / r          (volume of the pushed chain)
  //   C_S = v0 * 2r * (1 + diam(simplex)/r) (volume of the homotopy chain)
  double C_R = 0;
  double C_S = 0;
  double C = 0;  // max of the two
};

PushingConstants pushing_constants(int k, int i, double r);

// Composite-Simpson evaluation of the defining integral in polar/spherical
// coordinates, for confirming the closed form.
double quadrature_K(int k, int i, double r);

// Radial projection with center u: the parts of the chain inside B(u,2r) map
// to arcs of its boundary circle, the rest is untouched.
Chain1 radial_project(const Chain1& q, Vec2 u, double r);

struct CenterChoice {
  Vec2 u{};
  int rejected = 0;
};

// Rejection-sample a projection center in B(O,r) with
// vol(pi_u Q) <= v0 * vol(Q).  A zero-volume chain gets the barycenter.
CenterChoice choose_center(const Chain1& q, const PushingConstants& pc, Rng& rng);

struct AlphaEstimate {
  double alpha = 0;  // estimated Lebesgue measure of A_v
  double lo = 0, hi = 0;  // 95% confidence interval, measure units
  int samples = 0;
  int hits = 0;
};

// Monte-Carlo estimate of alpha(v) = measure of the centers u inflating the
// chain's volume by more than the factor v.
AlphaEstimate estimate_alpha(const Chain1& q, double v, int samples, const PushingConstants& pc,
                             Rng& rng);

struct SimplexRecord {
  int face = 0;
  Vec2 center{};
  double vol_Q = 0;
  double vol_piQ = 0;
  double vol_S_piece = 0;
  int rejected = 0;
};

struct PushCertificate {
  PushingConstants constants;
  std::vector<SimplexRecord> records;
  double vol_T = 0, vol_R = 0, vol_S = 0;
  double effective_C = 0;        // max(vol_R, vol_S) / vol_T when vol_T > 0
  double flatten_error = 0;      // arc flattening bound, <= 1e-6
  double skeleton_distance = 0;  // distance of R from the 1-skeleton
  std::uint64_t seed = 0;
};

struct PushResult {
  Chain1 R;
  Chain2 S;
  PushCertificate certificate;
};

// Push a 1-chain with vertex-supported boundary into the 1-skeleton.  The
// returned data is verified before returning: boundary(R) = boundary(T) as
// signed vertex multisets, R within 1e-9 of the skeleton,
// boundary(S) = T - R at PL resolution, and both volume bounds against the
// recorded constants.
PushResult push_chain(const Chain1& T, const complex2::Complex2& complex,
                      const PushingConstants& pc, std::uint64_t seed);

struct LoopPushResult {
  chain::PLLoop loop;  // the pushed loop, supported on the 1-skeleton
  Chain2 S;
  PushCertificate certificate;
};

// Same maps applied to an ordered loop; per-face centers are chosen from the
// loop's trace exactly as in push_chain.
LoopPushResult push_loop(const chain::PLLoop& loop, const complex2::Complex2& complex,
                         const PushingConstants& pc, std::uint64_t seed);

std::string certificate_to_json(const PushCertificate& c);
std::string certificate_to_table(const PushCertificate& c);

}  // namespace dehn::pushing

#endif
