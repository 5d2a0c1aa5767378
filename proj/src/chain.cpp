#include "dehn/chain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dehn::chain {

using geometry::SimplexFrame;

PointRef classify_point(const complex2::Complex2& c, int face, Vec2 p, double tol) {
  const auto& cyc = c.faces[static_cast<size_t>(face)];
  if (cyc.size() != 3) throw std::invalid_argument("chains live over triangulated complexes");
  auto corners = c.face_corners(face);
  for (int k = 0; k < 3; ++k)
    if (geometry::dist(p, SimplexFrame::corner(k)) <= tol) {
      PointRef r;
      r.kind = PointRef::Kind::Vertex;
      r.id = corners[static_cast<size_t>(k)];
      return r;
    }
  for (int k = 0; k < 3; ++k) {
    auto t = SimplexFrame::side_parameter(k, p, tol);
    if (t) {
      int dart = cyc[static_cast<size_t>(k)];
      PointRef r;
      r.kind = PointRef::Kind::EdgePoint;
      r.id = std::abs(dart) - 1;
      r.t = dart > 0 ? *t : 1 - *t;
      return r;
    }
  }
  PointRef r;
  r.kind = PointRef::Kind::Interior;
  r.id = face;
  r.local = p;
  return r;
}

double Chain1::volume() const {
  double v = 0;
  for (const auto& s : segs) v += std::abs(s.mult) * geometry::dist(s.a, s.b);
  for (const auto& a : arcs) v += std::abs(a.mult) * a.radius * std::abs(a.a1 - a.a0);
  return v;
}

Chain1 Chain1::operator-(const Chain1& o) const {
  Chain1 r = *this;
  for (auto s : o.segs) {
    s.mult = -s.mult;
    r.segs.push_back(s);
  }
  for (auto a : o.arcs) {
    a.mult = -a.mult;
    r.arcs.push_back(a);
  }
  return r;
}

double Chain2::volume() const {
  double v = 0;
  for (const auto& t : tris) v += std::abs(t.mult) * geometry::triangle_area(t.a, t.b, t.c);
  return v;
}

Chain1 Chain2::boundary() const {
  Chain1 b;
  for (const auto& t : tris) {
    b.segs.push_back({t.face, t.a, t.b, t.mult});
    b.segs.push_back({t.face, t.b, t.c, t.mult});
    b.segs.push_back({t.face, t.c, t.a, t.mult});
  }
  return b;
}

namespace {

struct PointKey {
  int kind;  // 0 vertex, 1 edge point, 2 interior
  int id;
  double u, v;
};

PointKey key_of(const PointRef& r) {
  switch (r.kind) {
    case PointRef::Kind::Vertex:
      return {0, r.id, 0, 0};
    case PointRef::Kind::EdgePoint:
      return {1, r.id, r.t, 0};
    default:
      return {2, r.id, r.local.x, r.local.y};
  }
}

}  // namespace

std::vector<BoundaryPoint> boundary0(const complex2::Complex2& c, const Chain1& chain, double tol) {
  struct Entry {
    PointKey key;
    PointRef ref;
    int mult;
  };
  std::vector<Entry> entries;
  auto add = [&](int face, Vec2 p, int mult) {
    PointRef r = classify_point(c, face, p, tol);
    entries.push_back({key_of(r), r, mult});
  };
  for (const auto& s : chain.segs) {
    add(s.face, s.a, -s.mult);
    add(s.face, s.b, s.mult);
  }
  for (const auto& a : chain.arcs) {
    Vec2 p0 = a.center + Vec2{std::cos(a.a0), std::sin(a.a0)} * a.radius;
    Vec2 p1 = a.center + Vec2{std::cos(a.a1), std::sin(a.a1)} * a.radius;
    add(a.face, p0, -a.mult);
    add(a.face, p1, a.mult);
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.key.kind != y.key.kind) return x.key.kind < y.key.kind;
    if (x.key.id != y.key.id) return x.key.id < y.key.id;
    if (x.key.u != y.key.u) return x.key.u < y.key.u;
    return x.key.v < y.key.v;
  });
  std::vector<BoundaryPoint> out;
  size_t i = 0;
  while (i < entries.size()) {
    size_t j = i;
    int mult = 0;
    while (j < entries.size() && entries[j].key.kind == entries[i].key.kind &&
           entries[j].key.id == entries[i].key.id &&
           std::abs(entries[j].key.u - entries[i].key.u) <= tol &&
           std::abs(entries[j].key.v - entries[i].key.v) <= tol) {
      mult += entries[j].mult;
      ++j;
    }
    if (mult != 0) out.push_back({entries[i].ref, mult});
    i = j;
  }
  return out;
}

bool boundary_on_vertices(const complex2::Complex2& c, const Chain1& chain, std::map<int, int>* out,
                          double tol) {
  auto b = boundary0(c, chain, tol);
  if (out) out->clear();
  for (const auto& p : b) {
    if (p.at.kind != PointRef::Kind::Vertex) return false;
    if (out) (*out)[p.at.id] += p.mult;
  }
  return true;
}

bool chains_equal(const Chain1& a, const Chain1& b, double tol) {
  if (!a.arcs.empty() || !b.arcs.empty())
    throw std::invalid_argument("chains_equal needs arc-free chains; flatten first");
  Chain1 diff = a - b;

  // bucket segments by (face, carrier line)
  struct Carrier {
    int face;
    double nx, ny, c;  // unit normal + offset, normalized sign
  };
  struct Item {
    double lo, hi;  // parameters along the line direction
    int mult;       // signed relative to the direction
  };
  std::vector<std::pair<Carrier, Item>> items;
  for (const auto& s : diff.segs) {
    Vec2 d = s.b - s.a;
    double len = geometry::norm(d);
    if (len * std::abs(s.mult) <= tol) continue;
    Vec2 dir{d.x / len, d.y / len};
    Vec2 n{-dir.y, dir.x};
    double c0 = geometry::dot(n, s.a);
    // canonical sign for the carrier
    int mult = s.mult;
    Vec2 cdir = dir;
    if (n.x < 0 || (std::abs(n.x) <= 1e-12 && n.y < 0)) {
      n = {-n.x, -n.y};
      c0 = -c0;
    }
    // direction canonically along (n rotated -90): fixed per carrier
    Vec2 canon{n.y, -n.x};
    if (geometry::dot(canon, cdir) < 0) mult = -mult;
    double lo = geometry::dot(canon, s.a), hi = geometry::dot(canon, s.b);
    if (lo > hi) std::swap(lo, hi);
    items.push_back({{s.face, n.x, n.y, c0}, {lo, hi, mult}});
  }
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.face != y.first.face) return x.first.face < y.first.face;
    if (x.first.nx != y.first.nx) return x.first.nx < y.first.nx;
    if (x.first.ny != y.first.ny) return x.first.ny < y.first.ny;
    return x.first.c < y.first.c;
  });

  size_t i = 0;
  while (i < items.size()) {
    size_t j = i;
    while (j < items.size() && items[j].first.face == items[i].first.face &&
           std::abs(items[j].first.nx - items[i].first.nx) <= tol &&
           std::abs(items[j].first.ny - items[i].first.ny) <= tol &&
           std::abs(items[j].first.c - items[i].first.c) <= tol)
      ++j;
    // events along the carrier
    std::vector<double> events;
    for (size_t k = i; k < j; ++k) {
      events.push_back(items[k].second.lo);
      events.push_back(items[k].second.hi);
    }
    std::sort(events.begin(), events.end());
    for (size_t k = 0; k + 1 < events.size(); ++k) {
      double lo = events[k], hi = events[k + 1];
      if (hi - lo <= tol) continue;
      double midp = (lo + hi) / 2;
      long net = 0;
      for (size_t q = i; q < j; ++q)
        if (items[q].second.lo <= midp && midp <= items[q].second.hi) net += items[q].second.mult;
      if (net != 0) return false;
    }
    i = j;
  }
  return true;
}

double max_skeleton_distance(const Chain1& chain) {
  double worst = 0;
  auto check = [&](Vec2 p) { worst = std::max(worst, SimplexFrame::boundary_distance(p)); };
  for (const auto& s : chain.segs) {
    // the distance function to the triangle boundary is concave along a
    // segment inside it, so sampling densely is enough at desk scale
    for (int k = 0; k <= 16; ++k) check(s.a + (s.b - s.a) * (k / 16.0));
  }
  for (const auto& a : chain.arcs)
    for (int k = 0; k <= 16; ++k) {
      double ang = a.a0 + (a.a1 - a.a0) * (k / 16.0);
      check(a.center + Vec2{std::cos(ang), std::sin(ang)} * a.radius);
    }
  return worst;
}

Chain1 flatten_arcs(const Chain1& chain, double tol, double* error_bound) {
  Chain1 out;
  out.segs = chain.segs;
  double err = 0;
  for (const auto& a : chain.arcs) {
    double sweep = a.a1 - a.a0;
    double span = std::abs(sweep);
    if (span == 0 || a.radius == 0) continue;
    // chord sagitta r*(1-cos(h/2)) <= tol
    double maxstep = 2 * std::acos(std::max(0.0, 1 - tol / a.radius));
    int n = std::max(1, static_cast<int>(std::ceil(span / std::max(maxstep, 1e-6))));
    Vec2 prev = a.center + Vec2{std::cos(a.a0), std::sin(a.a0)} * a.radius;
    for (int k = 1; k <= n; ++k) {
      double ang = a.a0 + sweep * (static_cast<double>(k) / n);
      Vec2 next = a.center + Vec2{std::cos(ang), std::sin(ang)} * a.radius;
      out.segs.push_back({a.face, prev, next, a.mult});
      prev = next;
    }
    err = std::max(err, a.radius * (1 - std::cos(span / (2 * n))));
  }
  if (error_bound) *error_bound = err;
  return out;
}

double PLLoop::length() const {
  double l = 0;
  for (const auto& p : pieces) l += geometry::dist(p.a, p.b);
  return l;
}

Chain1 PLLoop::as_chain() const {
  Chain1 c;
  for (const auto& p : pieces) c.segs.push_back({p.face, p.a, p.b, 1});
  return c;
}

// ---------------------------------------------------------------------------
// JSON

using nlohmann::json;

namespace {

json bary_json(Vec2 p) {
  auto b = SimplexFrame::to_barycentric(p);
  return json::array({b[0], b[1], b[2]});
}

Vec2 bary_from(const json& j) {
  return SimplexFrame::from_barycentric(j.at(0).get<double>(), j.at(1).get<double>(),
                                        j.at(2).get<double>());
}

}  // namespace

std::string chain1_to_json(const Chain1& c) {
  json pieces = json::array();
  for (const auto& s : c.segs)
    pieces.push_back(json{{"face", s.face}, {"mult", s.mult}, {"points", json::array({bary_json(s.a), bary_json(s.b)})}});
  for (const auto& a : c.arcs)
    pieces.push_back(json{{"face", a.face},
                          {"mult", a.mult},
                          {"arc",
                           json{{"center", bary_json(a.center)},
                                {"radius", a.radius},
                                {"from", a.a0},
                                {"to", a.a1}}}});
  return json{{"kind", "chain1"}, {"pieces", pieces}}.dump(2) + "\n";
}

std::string chain2_to_json(const Chain2& c) {
  json pieces = json::array();
  for (const auto& t : c.tris)
    pieces.push_back(json{{"face", t.face},
                          {"mult", t.mult},
                          {"points", json::array({bary_json(t.a), bary_json(t.b), bary_json(t.c)})}});
  return json{{"kind", "chain2"}, {"pieces", pieces}}.dump(2) + "\n";
}

std::string loop_to_json(const PLLoop& l) {
  json pieces = json::array();
  for (const auto& p : l.pieces)
    pieces.push_back(json{{"face", p.face}, {"points", json::array({bary_json(p.a), bary_json(p.b)})}});
  return json{{"kind", "loop"}, {"pieces", pieces}}.dump(2) + "\n";
}

std::string chain_kind_of_json(const std::string& text) {
  return json::parse(text).at("kind").get<std::string>();
}

Chain1 chain1_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("kind") != "chain1") throw std::invalid_argument("expected a chain1 file");
  Chain1 c;
  for (const auto& p : j.at("pieces")) {
    int face = p.at("face").get<int>();
    int mult = p.value("mult", 1);
    if (p.contains("arc")) {
      const json& a = p.at("arc");
      c.arcs.push_back({face, bary_from(a.at("center")), a.at("radius").get<double>(),
                        a.at("from").get<double>(), a.at("to").get<double>(), mult});
    } else {
      const json& pts = p.at("points");
      if (pts.size() != 2) throw std::invalid_argument("chain1 pieces have two points");
      c.segs.push_back({face, bary_from(pts.at(0)), bary_from(pts.at(1)), mult});
    }
  }
  return c;
}

Chain2 chain2_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("kind") != "chain2") throw std::invalid_argument("expected a chain2 file");
  Chain2 c;
  for (const auto& p : j.at("pieces")) {
    const json& pts = p.at("points");
    if (pts.size() != 3) throw std::invalid_argument("chain2 pieces have three points");
    c.tris.push_back({p.at("face").get<int>(), bary_from(pts.at(0)), bary_from(pts.at(1)),
                      bary_from(pts.at(2)), p.value("mult", 1)});
  }
  return c;
}

PLLoop loop_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("kind") != "loop") throw std::invalid_argument("expected a loop file");
  PLLoop l;
  for (const auto& p : j.at("pieces")) {
    const json& pts = p.at("points");
    if (pts.size() != 2) throw std::invalid_argument("loop pieces have two points");
    l.pieces.push_back({p.at("face").get<int>(), bary_from(pts.at(0)), bary_from(pts.at(1))});
  }
  return l;
}

}  // namespace dehn::chain
