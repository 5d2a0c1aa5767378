#include "dehn/pushing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dehn::pushing {

using chain::Chain1;
using chain::Chain2;
using chain::SegPiece;
using chain::TriPiece;
using geometry::SimplexFrame;
using geometry::Vec2;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFlattenTol = 1e-6;
constexpr double kOnBoundaryTol = 1e-12;

double simplex_inradius(int i) {
  // standard i-simplex, side sqrt(2): inradius = sqrt(2) / (2*sqrt(i*(i+1)/... )
  if (i == 2) return SimplexFrame::inradius();           // 1/sqrt(6)
  if (i == 3) return 0.28867513459481287;                // 1/(2*sqrt(3))
  throw std::invalid_argument("unsupported simplex dimension");
}

}  // namespace

PushingConstants pushing_constants(int k, int i, double r) {
  if (!((k == 1 && i == 2) || (k == 2 && i == 3)))
    throw std::invalid_argument("pushing constants support (k,i) in {(1,2),(2,3)}");
  if (!(r > 0) || 3 * r >= simplex_inradius(i))
    throw std::invalid_argument("need 3r inside the simplex: 3r < inradius");
  PushingConstants pc;
  pc.k = k;
  pc.i = i;
  pc.r = r;
  if (k == 1) {
    // integral of |u|^-1 over B(0,3r) in the plane is 6*pi*r
    pc.ball_volume = kPi * r * r;
    pc.K = 2 * r * (6 * kPi * r) + pc.ball_volume;  // 13*pi*r^2
  } else {
    // integral of |u|^-2 over B(0,3r) in space is 12*pi*r
    pc.ball_volume = 4.0 / 3.0 * kPi * r * r * r;
    pc.K = (2 * r) * (2 * r) * (12 * kPi * r) + pc.ball_volume;  // (148/3)*pi*r^3
  }
  pc.v0 = static_cast<int>(std::floor(pc.K / pc.ball_volume)) + 1;
  while (!(pc.K / pc.v0 < pc.ball_volume)) ++pc.v0;
  double diam = SimplexFrame::diameter();
  pc.C_R = pc.v0 * diam / r;
  pc.C_S = pc.v0 * 2 * r * (1 + diam / r);
  pc.C = std::max(pc.C_R, pc.C_S);
  return pc;
}

double quadrature_K(int k, int i, double r) {
  auto simpson = [](auto f, double a, double b, int n) {
    // n even
    double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int j = 1; j < n; ++j) acc += f(a + j * h) * (j % 2 ? 4.0 : 2.0);
    return acc * h / 3;
  };
  double integral = 0;
  double eps = 1e-12;
  if (k == 1 && i == 2) {
    auto ftheta = [&](double theta) {
      (void)theta;
      auto fs = [&](double s) { return std::pow(s, -1.0) * s; };
      return simpson(fs, eps, 3 * r, 2048);
    };
    integral = simpson(ftheta, 0.0, 2 * kPi, 64);
    return 2 * r * integral + kPi * r * r;
  }
  if (k == 2 && i == 3) {
    auto ftheta = [&](double theta) {
      (void)theta;
      auto fphi = [&](double phi) {
        auto fs = [&](double s) { return std::pow(s, -2.0) * s * s * std::sin(phi); };
        return simpson(fs, eps, 3 * r, 1024);
      };
      return simpson(fphi, 0.0, kPi, 64);
    };
    integral = simpson(ftheta, 0.0, 2 * kPi, 32);
    return (2 * r) * (2 * r) * integral + 4.0 / 3.0 * kPi * r * r * r;
  }
  throw std::invalid_argument("unsupported (k,i)");
}

Chain1 radial_project(const Chain1& q, Vec2 u, double r) {
  if (!q.arcs.empty()) throw std::invalid_argument("radial_project expects a segment chain");
  Chain1 out;
  double R = 2 * r;
  for (const auto& s : q.segs) {
    std::vector<double> cuts{0.0};
    for (double t : geometry::segment_circle_params(s.a, s.b, u, R)) cuts.push_back(t);
    cuts.push_back(1.0);
    for (size_t j = 0; j + 1 < cuts.size(); ++j) {
      Vec2 a = s.a + (s.b - s.a) * cuts[j];
      Vec2 b = s.a + (s.b - s.a) * cuts[j + 1];
      if (cuts[j] == 0.0) a = s.a;
      if (cuts[j + 1] == 1.0) b = s.b;
      Vec2 mid = (a + b) * 0.5;
      if (geometry::dist(mid, u) < R) {
        double a0 = std::atan2(a.y - u.y, a.x - u.x);
        double span = geometry::angular_span(a, b, u);
        out.arcs.push_back({s.face, u, R, a0, a0 + span, s.mult});
      } else {
        out.segs.push_back({s.face, a, b, s.mult});
      }
    }
  }
  return out;
}

namespace {

double min_distance_to_chain(const Chain1& q, Vec2 u) {
  double d = 1e300;
  for (const auto& s : q.segs) d = std::min(d, geometry::segment_point_distance(s.a, s.b, u));
  return d;
}

Vec2 sample_in_ball(Rng& rng, Vec2 center, double r) {
  double rho = r * std::sqrt(rng.unit());
  double phi = 2 * kPi * rng.unit();
  return center + Vec2{std::cos(phi), std::sin(phi)} * rho;
}

}  // namespace

CenterChoice choose_center(const Chain1& q, const PushingConstants& pc, Rng& rng) {
  Vec2 O = SimplexFrame::barycenter();
  CenterChoice choice;
  if (q.volume() == 0) {
    choice.u = O;
    return choice;
  }
  int on_chain_retries = 0;
  for (int iter = 0; iter < 100000; ++iter) {
    Vec2 u = sample_in_ball(rng, O, pc.r);
    if (min_distance_to_chain(q, u) < 1e-12) {
      if (++on_chain_retries > 10)
        throw std::runtime_error("projection center keeps landing on the chain");
      continue;
    }
    double vol_pi = radial_project(q, u, pc.r).volume();
    if (vol_pi <= pc.v0 * q.volume()) {
      choice.u = u;
      return choice;
    }
    ++choice.rejected;
  }
  throw std::runtime_error("rejection budget exhausted; volume computation suspect");
}

AlphaEstimate estimate_alpha(const Chain1& q, double v, int samples, const PushingConstants& pc,
                             Rng& rng) {
  if (samples < 100) throw std::invalid_argument("estimate_alpha needs at least 100 samples");
  Vec2 O = SimplexFrame::barycenter();
  double volq = q.volume();
  AlphaEstimate est;
  est.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Vec2 u = sample_in_ball(rng, O, pc.r);
    if (min_distance_to_chain(q, u) < 1e-13) u = u + Vec2{1e-10, 1e-10};
    double vol_pi = radial_project(q, u, pc.r).volume();
    if (vol_pi > v * volq) ++est.hits;
  }
  double measure = pc.ball_volume;
  double n = samples, h = est.hits;
  double p = h / n;
  est.alpha = p * measure;
  const double z = 1.959963984540054;
  double denom = 1 + z * z / n;
  double center = (p + z * z / (2 * n)) / denom;
  double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  est.lo = std::max(0.0, center - half) * measure;
  est.hi = std::min(1.0, center + half) * measure;
  return est;
}

// ---------------------------------------------------------------------------
// The per-simplex push map

namespace {

struct FaceMapOutput {
  std::vector<SegPiece> r_pieces;  // ordered along the input
  std::vector<TriPiece> s_pieces;
  double s_area = 0;
};

void emit_strip(int face, Vec2 qa, Vec2 qb, Vec2 pa, Vec2 pb, int mult, FaceMapOutput* out) {
  auto degenerate = [](Vec2 a, Vec2 b, Vec2 c) {
    return (a.x == b.x && a.y == b.y) || (b.x == c.x && b.y == c.y) || (a.x == c.x && a.y == c.y);
  };
  if (!degenerate(qa, qb, pb)) {
    out->s_pieces.push_back({face, qa, qb, pb, mult});
    out->s_area += std::abs(mult) * geometry::triangle_area(qa, qb, pb);
  }
  if (!degenerate(qa, pb, pa)) {
    out->s_pieces.push_back({face, qa, pb, pa, mult});
    out->s_area += std::abs(mult) * geometry::triangle_area(qa, pb, pa);
  }
}

Vec2 project_to_side(Vec2 p) {
  if (SimplexFrame::boundary_distance(p) <= kOnBoundaryTol) return p;
  return SimplexFrame::project_from_center(p, nullptr, nullptr);
}

// Stage 2: carry one chord (away from the barycenter) onto the boundary.
void o_project_chord(int face, Vec2 a, Vec2 b, int mult, FaceMapOutput* out) {
  Vec2 O = SimplexFrame::barycenter();
  std::vector<double> cuts{0.0, 1.0};
  for (int k = 0; k < 3; ++k) {
    Vec2 dirc = SimplexFrame::corner(k) - O;
    double den = geometry::cross(b - a, dirc);
    if (std::abs(den) < 1e-15) continue;
    double s = geometry::cross(O - a, dirc) / den;
    if (s <= 1e-12 || s >= 1 - 1e-12) continue;
    Vec2 x = a + (b - a) * s;
    if (geometry::dot(x - O, dirc) > 0) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());
  Vec2 prev_q = a;
  Vec2 prev_p = project_to_side(a);
  for (size_t j = 1; j < cuts.size(); ++j) {
    Vec2 q = j + 1 == cuts.size() ? b : a + (b - a) * cuts[j];
    Vec2 p = project_to_side(q);
    if (!(prev_p.x == p.x && prev_p.y == p.y)) out->r_pieces.push_back({face, prev_p, p, mult});
    emit_strip(face, prev_q, q, prev_p, p, mult, out);
    prev_q = q;
    prev_p = p;
  }
}

// Push one interior segment: u-projection (with exact arcs flattened to
// chords), then the radial projection from the barycenter onto the sides.
void map_segment(int face, Vec2 u, double r, Vec2 a, Vec2 b, int mult, FaceMapOutput* out,
                 double* flatten_error) {
  double R = 2 * r;
  std::vector<double> cuts{0.0};
  for (double t : geometry::segment_circle_params(a, b, u, R)) cuts.push_back(t);
  cuts.push_back(1.0);

  // stage 1: polyline with pullback points on [a,b]
  std::vector<Vec2> base{a}, image{a};
  bool touched = false;
  for (size_t j = 0; j + 1 < cuts.size(); ++j) {
    Vec2 pa = a + (b - a) * cuts[j];
    Vec2 pb = a + (b - a) * cuts[j + 1];
    if (cuts[j] == 0.0) pa = a;
    if (cuts[j + 1] == 1.0) pb = b;
    Vec2 mid = (pa + pb) * 0.5;
    if (geometry::dist(mid, u) < R) {
      touched = true;
      double a0 = std::atan2(pa.y - u.y, pa.x - u.x);
      double span = geometry::angular_span(pa, pb, u);
      double maxstep = 2 * std::acos(std::max(0.0, 1 - kFlattenTol / R));
      int n = std::max(1, static_cast<int>(std::ceil(std::abs(span) / std::max(maxstep, 1e-9))));
      if (flatten_error)
        *flatten_error = std::max(*flatten_error, R * (1 - std::cos(std::abs(span) / (2 * n))));
      for (int s = 1; s <= n; ++s) {
        double ang = a0 + span * (static_cast<double>(s) / n);
        Vec2 p = u + Vec2{std::cos(ang), std::sin(ang)} * R;
        Vec2 q;
        if (s == n) {
          q = pb;
          p = (cuts[j + 1] == 1.0 && geometry::dist(b, u) >= R - 1e-12) ? b : p;
        } else {
          Vec2 d{std::cos(ang), std::sin(ang)};
          double den = geometry::cross(b - a, d);
          double sseg = std::abs(den) < 1e-15 ? 1.0 : geometry::cross(u - a, d) / den;
          q = a + (b - a) * std::clamp(sseg, 0.0, 1.0);
        }
        base.push_back(q);
        image.push_back(p);
      }
      // endpoints sitting on the circle map to themselves
      if (geometry::dist(pb, u) >= R - 1e-9 && cuts[j + 1] != 1.0) image.back() = pb;
    } else {
      base.push_back(pb);
      image.push_back(pb);
    }
  }
  if (!touched) {
    base = {a, b};
    image = {a, b};
  }
  base.front() = a;
  image.front() = (geometry::dist(a, u) < R - 1e-12) ? image.front() : a;

  // stage-1 cones between the base subdivision and the flattened projection
  for (size_t j = 0; j + 1 < base.size(); ++j)
    emit_strip(face, base[j], base[j + 1], image[j], image[j + 1], mult, out);

  // stage 2 on every chord of the image polyline
  for (size_t j = 0; j + 1 < image.size(); ++j) {
    Vec2 p = image[j], q = image[j + 1];
    if (p.x == q.x && p.y == q.y) continue;
    o_project_chord(face, p, q, mult, out);
  }
}

PushCertificate make_certificate(const PushingConstants& pc, std::uint64_t seed) {
  PushCertificate cert;
  cert.constants = pc;
  cert.seed = seed;
  return cert;
}

}  // namespace

PushResult push_chain(const Chain1& T, const complex2::Complex2& complex, const PushingConstants& pc,
                      std::uint64_t seed) {
  complex.validate();
  if (pc.k != 1) throw std::invalid_argument("geometric pushing runs at k = 1");
  if (!T.arcs.empty()) throw std::invalid_argument("push_chain expects a segment chain");
  std::map<int, int> boundary_T;
  if (!chain::boundary_on_vertices(complex, T, &boundary_T))
    throw std::invalid_argument("the chain boundary must lie in the 0-skeleton");

  PushResult res;
  res.certificate = make_certificate(pc, seed);
  Rng master(seed);

  // split into skeleton-supported pieces and per-face interior chains
  std::map<int, Chain1> interior;
  for (const auto& s : T.segs) {
    if (s.face < 0 || s.face >= static_cast<int>(complex.faces.size()))
      throw std::invalid_argument("chain piece face out of range");
    if (s.a.x == s.b.x && s.a.y == s.b.y) continue;
    Chain1 single;
    single.segs.push_back(s);
    if (chain::max_skeleton_distance(single) <= 1e-9)
      res.R.segs.push_back(s);
    else
      interior[s.face].segs.push_back(s);
  }

  for (auto& [face, q] : interior) {
    Rng face_rng = master.fork(static_cast<std::uint64_t>(face));
    CenterChoice cc = choose_center(q, pc, face_rng);
    double vol_q = q.volume();
    double vol_pi = radial_project(q, cc.u, pc.r).volume();
    if (vol_pi > pc.v0 * vol_q + 1e-12)
      throw std::logic_error("accepted center violates the v0 bound");

    FaceMapOutput out;
    for (const auto& s : q.segs)
      map_segment(face, cc.u, pc.r, s.a, s.b, s.mult, &out, &res.certificate.flatten_error);
    for (auto& piece : out.r_pieces) res.R.segs.push_back(piece);
    for (auto& tri : out.s_pieces) res.S.tris.push_back(tri);

    SimplexRecord rec;
    rec.face = face;
    rec.center = cc.u;
    rec.vol_Q = vol_q;
    rec.vol_piQ = vol_pi;
    rec.vol_S_piece = out.s_area;
    rec.rejected = cc.rejected;
    res.certificate.records.push_back(rec);
  }

  res.certificate.vol_T = T.volume();
  res.certificate.vol_R = res.R.volume();
  res.certificate.vol_S = res.S.volume();
  if (res.certificate.vol_T > 0)
    res.certificate.effective_C =
        std::max(res.certificate.vol_R, res.certificate.vol_S) / res.certificate.vol_T;
  res.certificate.skeleton_distance = chain::max_skeleton_distance(res.R);

  // verify before returning
  std::map<int, int> boundary_R;
  if (!chain::boundary_on_vertices(complex, res.R, &boundary_R) || boundary_R != boundary_T)
    throw std::logic_error("push did not preserve the chain boundary");
  if (res.certificate.skeleton_distance > 1e-9)
    throw std::logic_error("pushed chain left the 1-skeleton");
  Chain1 diff = T - res.R;
  if (!chain::chains_equal(res.S.boundary(), diff))
    throw std::logic_error("homotopy chain boundary is not T - R");
  if (res.certificate.vol_R > pc.C_R * res.certificate.vol_T + 1e-9)
    throw std::logic_error("vol(R) exceeds the recorded bound");
  if (res.certificate.vol_S > pc.C_S * res.certificate.vol_T + 1e-9)
    throw std::logic_error("vol(S) exceeds the recorded bound");
  return res;
}

LoopPushResult push_loop(const chain::PLLoop& loop, const complex2::Complex2& complex,
                         const PushingConstants& pc, std::uint64_t seed) {
  complex.validate();
  LoopPushResult res;
  res.certificate = make_certificate(pc, seed);
  Rng master(seed);

  std::map<int, Chain1> interior;
  std::vector<bool> is_interior(loop.pieces.size(), false);
  for (size_t i = 0; i < loop.pieces.size(); ++i) {
    const auto& p = loop.pieces[i];
    if (p.a.x == p.b.x && p.a.y == p.b.y) continue;
    Chain1 single;
    single.segs.push_back({p.face, p.a, p.b, 1});
    if (chain::max_skeleton_distance(single) > 1e-9) {
      is_interior[i] = true;
      interior[p.face].segs.push_back({p.face, p.a, p.b, 1});
    }
  }

  std::map<int, CenterChoice> centers;
  for (auto& [face, q] : interior) {
    Rng face_rng = master.fork(static_cast<std::uint64_t>(face));
    CenterChoice cc = choose_center(q, pc, face_rng);
    double vol_q = q.volume();
    double vol_pi = radial_project(q, cc.u, pc.r).volume();
    SimplexRecord rec;
    rec.face = face;
    rec.center = cc.u;
    rec.vol_Q = vol_q;
    rec.vol_piQ = vol_pi;
    rec.rejected = cc.rejected;
    res.certificate.records.push_back(rec);
    centers[face] = cc;
  }

  double vol_T = 0;
  for (const auto& p : loop.pieces) vol_T += geometry::dist(p.a, p.b);
  res.certificate.vol_T = vol_T;

  for (size_t i = 0; i < loop.pieces.size(); ++i) {
    const auto& p = loop.pieces[i];
    if (p.a.x == p.b.x && p.a.y == p.b.y) continue;
    if (!is_interior[i]) {
      res.loop.pieces.push_back(p);
      continue;
    }
    FaceMapOutput out;
    map_segment(p.face, centers.at(p.face).u, pc.r, p.a, p.b, 1, &out,
                &res.certificate.flatten_error);
    for (auto& rp : out.r_pieces) res.loop.pieces.push_back({rp.face, rp.a, rp.b});
    for (auto& tri : out.s_pieces) res.S.tris.push_back(tri);
    for (auto& rec : res.certificate.records)
      if (rec.face == p.face) rec.vol_S_piece += out.s_area;
  }

  res.certificate.vol_R = res.loop.length();
  res.certificate.vol_S = res.S.volume();
  if (vol_T > 0)
    res.certificate.effective_C =
        std::max(res.certificate.vol_R, res.certificate.vol_S) / vol_T;
  res.certificate.skeleton_distance = chain::max_skeleton_distance(res.loop.as_chain());
  if (res.certificate.skeleton_distance > 1e-9)
    throw std::logic_error("pushed loop left the 1-skeleton");
  if (res.certificate.vol_R > pc.C_R * vol_T + 1e-9)
    throw std::logic_error("pushed loop length exceeds the recorded bound");
  if (res.certificate.vol_S > pc.C_S * vol_T + 1e-9)
    throw std::logic_error("loop homotopy area exceeds the recorded bound");
  return res;
}

// ---------------------------------------------------------------------------

using nlohmann::json;

std::string certificate_to_json(const PushCertificate& c) {
  json j;
  j["constants"] = {{"k", c.constants.k},   {"i", c.constants.i},   {"r", c.constants.r},
                    {"K", c.constants.K},   {"v0", c.constants.v0}, {"ball_volume", c.constants.ball_volume},
                    {"C_R", c.constants.C_R}, {"C_S", c.constants.C_S}, {"C", c.constants.C}};
  json recs = json::array();
  for (const auto& r : c.records)
    recs.push_back(json{{"face", r.face},
                        {"center", json::array({r.center.x, r.center.y})},
                        {"vol_Q", r.vol_Q},
                        {"vol_piQ", r.vol_piQ},
                        {"vol_S_piece", r.vol_S_piece},
                        {"rejected", r.rejected}});
  j["records"] = recs;
  j["vol_T"] = c.vol_T;
  j["vol_R"] = c.vol_R;
  j["vol_S"] = c.vol_S;
  j["effective_C"] = c.effective_C;
  j["flatten_error"] = c.flatten_error;
  j["skeleton_distance"] = c.skeleton_distance;
  j["seed"] = c.seed;
  return j.dump(2) + "\n";
}

std::string certificate_to_table(const PushCertificate& c) {
  std::ostringstream out;
  out << "pushing constants: k=" << c.constants.k << " i=" << c.constants.i
      << " r=" << c.constants.r << " K=" << c.constants.K << " v0=" << c.constants.v0
      << " C_R=" << c.constants.C_R << " C_S=" << c.constants.C_S << "\n";
  out << "face        vol_Q      vol_piQ    vol_S      rejected\n";
  char line[160];
  for (const auto& r : c.records) {
    std::snprintf(line, sizeof line, "%-10d %-10.6f %-10.6f %-10.6f %d\n", r.face, r.vol_Q,
                  r.vol_piQ, r.vol_S_piece, r.rejected);
    out << line;
  }
  std::snprintf(line, sizeof line,
                "totals: vol_T=%.6f vol_R=%.6f vol_S=%.6f effective_C=%.4f seed=%llu\n", c.vol_T,
                c.vol_R, c.vol_S, c.effective_C, static_cast<unsigned long long>(c.seed));
  out << line;
  return out.str();
}

}  // namespace dehn::pushing
