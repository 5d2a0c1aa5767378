#include "dehn/plmaps.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dehn::plmaps {

using chain::PointRef;
using complex2::Complex2;
using geometry::SimplexFrame;
using geometry::Vec2;

namespace {

double edge_length() { return SimplexFrame::side(); }

// side index of edge e inside face f, or -1
int side_of_edge(const Complex2& c, int face, int edge) {
  const auto& cyc = c.faces[static_cast<size_t>(face)];
  for (int k = 0; k < static_cast<int>(cyc.size()); ++k)
    if (std::abs(cyc[static_cast<size_t>(k)]) - 1 == edge) return k;
  return -1;
}

}  // namespace

SkeletonLoop to_skeleton_loop(const chain::PLLoop& loop, const Complex2& c, double tol) {
  SkeletonLoop out;
  for (const auto& piece : loop.pieces) {
    if (geometry::dist(piece.a, piece.b) <= tol) continue;
    const auto& cyc = c.faces[static_cast<size_t>(piece.face)];
    if (cyc.size() != 3) throw std::invalid_argument("loops live over triangulated complexes");
    bool placed = false;
    for (int k = 0; k < 3 && !placed; ++k) {
      auto ta = SimplexFrame::side_parameter(k, piece.a, tol);
      auto tb = SimplexFrame::side_parameter(k, piece.b, tol);
      if (!ta || !tb) continue;
      int dart = cyc[static_cast<size_t>(k)];
      EdgeRun run;
      run.edge = std::abs(dart) - 1;
      run.t0 = dart > 0 ? *ta : 1 - *ta;
      run.t1 = dart > 0 ? *tb : 1 - *tb;
      if (run.t0 == run.t1) {
        placed = true;  // zero run, drop
        break;
      }
      out.runs.push_back(run);
      placed = true;
    }
    if (!placed) throw std::invalid_argument("loop piece leaves the 1-skeleton");
  }
  if (out.runs.empty()) return out;
  // consecutive runs must connect (shared endpoint, possibly through a vertex)
  return out;
}

std::map<int, double> generic_edge_points(const Complex2& c, const SkeletonLoop& loop,
                                          std::uint64_t seed) {
  Rng rng(seed);
  std::map<int, std::set<double>> exclusion;
  for (const auto& run : loop.runs) {
    exclusion[run.edge].insert(run.t0);
    exclusion[run.edge].insert(run.t1);
  }
  std::map<int, double> out;
  for (size_t e = 0; e < c.edges.size(); ++e) {
    double p = 1.0 / 3 + rng.unit() / 3;  // middle third
    const auto& excl = exclusion[static_cast<int>(e)];
    const double guard = 1e-6;
    for (int tries = 0; tries < 1000; ++tries) {
      bool clear = true;
      for (double x : excl)
        if (std::abs(x - p) < guard) clear = false;
      if (clear) break;
      p = 1.0 / 3 + std::fmod(p - 1.0 / 3 + 7 * guard, 1.0 / 3);
    }
    out[static_cast<int>(e)] = p;
  }
  return out;
}

int preimage_count(const SkeletonLoop& loop, int edge, double t) {
  int count = 0;
  for (const auto& run : loop.runs) {
    if (run.edge != edge) continue;
    double lo = std::min(run.t0, run.t1), hi = std::max(run.t0, run.t1);
    if (t > lo && t < hi) ++count;
  }
  return count;
}

void validate_combinatorial_loop(const CombinatorialLoop& l, const Complex2& c) {
  for (size_t i = 0; i < l.darts.size(); ++i) {
    int d = l.darts[i];
    if (d == 0 || std::abs(d) > static_cast<int>(c.edges.size()))
      throw std::invalid_argument("combinatorial loop dart out of range");
    int nxt = l.darts[(i + 1) % l.darts.size()];
    if (c.dart_head(d) != c.dart_tail(nxt))
      throw std::invalid_argument("combinatorial loop does not chain through vertices");
  }
}

namespace {

struct Station {
  int edge = 0;
  double p = 0;         // the generic point's parameter on the edge
  int entry_vertex = 0;  // vertex of the edge on the approach side
  int exit_vertex = 0;   // vertex on the departure side
};

}  // namespace

StraightenResult combinatorialize(const chain::PLLoop& eta, const Complex2& c, std::uint64_t seed) {
  c.validate();
  SkeletonLoop sk = to_skeleton_loop(eta, c);
  StraightenResult res;
  res.certificate.input_length = eta.length();
  std::map<int, double> pts = generic_edge_points(c, sk, seed);
  res.certificate.edge_points = pts;

  double ell_min = edge_length();
  for (auto& [e, p] : pts)
    ell_min = std::min({ell_min, p * edge_length(), (1 - p) * edge_length()});
  res.certificate.ell_min = ell_min;

  // crossing stations in loop order
  std::vector<Station> stations;
  for (const auto& run : sk.runs) {
    double p = pts.at(run.edge);
    double lo = std::min(run.t0, run.t1), hi = std::max(run.t0, run.t1);
    if (!(p > lo && p < hi)) continue;
    Station st;
    st.edge = run.edge;
    st.p = p;
    const auto& e = c.edges[static_cast<size_t>(run.edge)];
    bool forward = run.t1 > run.t0;
    st.entry_vertex = forward ? e.tail : e.head;
    st.exit_vertex = forward ? e.head : e.tail;
    stations.push_back(st);
  }

  // collapse arcs with equal endpoints (same edge point), drop touches
  bool changed = true;
  while (changed && stations.size() > 1) {
    changed = false;
    for (size_t i = 0; i < stations.size(); ++i) {
      size_t j = (i + 1) % stations.size();
      if (i != j && stations[i].edge == stations[j].edge) {
        stations[i].exit_vertex = stations[j].exit_vertex;
        stations.erase(stations.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (size_t i = 0; i < stations.size(); ++i) {
      if (stations[i].entry_vertex == stations[i].exit_vertex) {
        stations.erase(stations.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (stations.size() == 1) stations.clear();

  // assemble the combinatorial loop and the straightened length
  double straight = 0;
  for (size_t i = 0; i < stations.size(); ++i) {
    const Station& st = stations[i];
    const Station& nxt = stations[(i + 1) % stations.size()];
    if (st.exit_vertex != nxt.entry_vertex)
      throw std::logic_error("stations do not chain through a common star");
    const auto& e = c.edges[static_cast<size_t>(st.edge)];
    int dart = st.entry_vertex == e.tail ? st.edge + 1 : -(st.edge + 1);
    res.loop.darts.push_back(dart);
    // leg from the edge point to the exit vertex, plus the next approach leg
    double t_exit = st.exit_vertex == e.head ? 1 - st.p : st.p;
    straight += t_exit * edge_length();
    const auto& en = c.edges[static_cast<size_t>(nxt.edge)];
    double t_entry = nxt.entry_vertex == en.tail ? nxt.p : 1 - nxt.p;
    straight += t_entry * edge_length();
  }
  res.certificate.straightened_length = straight;
  res.certificate.combinatorial_length = static_cast<std::int64_t>(res.loop.darts.size());

  if (!res.loop.empty()) validate_combinatorial_loop(res.loop, c);
  if (straight > res.certificate.input_length + 1e-9)
    throw std::logic_error("straightening increased the length");
  if (!res.loop.empty() &&
      static_cast<double>(res.loop.darts.size()) > res.certificate.input_length / ell_min + 1e-9)
    throw std::logic_error("combinatorial length exceeds the length/ell_min bound");
  return res;
}

std::string straighten_certificate_to_json(const StraightenCertificate& cert) {
  nlohmann::json j;
  j["input_length"] = cert.input_length;
  j["straightened_length"] = cert.straightened_length;
  j["ell_min"] = cert.ell_min;
  j["combinatorial_length"] = cert.combinatorial_length;
  nlohmann::json pts = nlohmann::json::object();
  for (auto& [e, p] : cert.edge_points) pts[std::to_string(e)] = p;
  j["edge_points"] = pts;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Disc maps

geometry::Vec2 PLDiscMap::image_in_face(int domain_vertex, int target_face) const {
  const PointRef& ref = vertex_image[static_cast<size_t>(domain_vertex)];
  const auto& cyc = target.faces[static_cast<size_t>(target_face)];
  switch (ref.kind) {
    case PointRef::Kind::Vertex: {
      auto corners = target.face_corners(target_face);
      for (int k = 0; k < 3; ++k)
        if (corners[static_cast<size_t>(k)] == ref.id) return SimplexFrame::corner(k);
      throw std::invalid_argument("vertex image outside the assigned face");
    }
    case PointRef::Kind::EdgePoint: {
      int k = side_of_edge(target, target_face, ref.id);
      if (k < 0) throw std::invalid_argument("edge-point image outside the assigned face");
      int dart = cyc[static_cast<size_t>(k)];
      double t = dart > 0 ? ref.t : 1 - ref.t;
      return SimplexFrame::side_point(k, t);
    }
    default:
      if (ref.id != target_face)
        throw std::invalid_argument("interior image outside the assigned face");
      return ref.local;
  }
}

void PLDiscMap::validate() const {
  domain.validate();
  target.validate();
  if (!target.simplicial_invariants_hold())
    throw std::invalid_argument("disc maps target simplicial complexes");
  if (vertex_image.size() != static_cast<size_t>(domain.vertex_count) ||
      face_assignment.size() != domain.faces.size())
    throw std::invalid_argument("disc map table size mismatch");
  for (size_t f = 0; f < domain.faces.size(); ++f) {
    if (domain.faces[f].size() != 3) throw std::invalid_argument("domain must be triangulated");
    int tf = face_assignment[f];
    if (tf < 0 || tf >= static_cast<int>(target.faces.size()))
      throw std::invalid_argument("face assignment out of range");
    for (int v : domain.face_corners(static_cast<int>(f)))
      (void)image_in_face(v, tf);  // throws when outside the closure
  }
  // the boundary restriction must be combinatorial: each boundary edge maps
  // onto a whole target edge
  for (int d : domain.outer) {
    int a = domain.dart_tail(d), b = domain.dart_head(d);
    const PointRef& ia = vertex_image[static_cast<size_t>(a)];
    const PointRef& ib = vertex_image[static_cast<size_t>(b)];
    if (ia.kind != PointRef::Kind::Vertex || ib.kind != PointRef::Kind::Vertex)
      throw std::invalid_argument("boundary vertices must map to target vertices");
    bool found = false;
    for (const auto& e : target.edges)
      if ((e.tail == ia.id && e.head == ib.id) || (e.tail == ib.id && e.head == ia.id)) found = true;
    if (!found) throw std::invalid_argument("boundary edge image is not a target edge");
  }
}

namespace {

struct FaceGeometry {
  Vec2 a, b, c;
  double signed_area2;  // twice the signed area of the image
};

bool triangle_meets_interior(const PLDiscMap& f, int domain_face, const FaceGeometry& g) {
  (void)f;
  (void)domain_face;
  // contained in the boundary iff all three corners sit on one closed side
  for (int k = 0; k < 3; ++k) {
    bool all = SimplexFrame::side_parameter(k, g.a, 1e-9) &&
               SimplexFrame::side_parameter(k, g.b, 1e-9) &&
               SimplexFrame::side_parameter(k, g.c, 1e-9);
    if (all) return false;
  }
  return true;
}

bool segment_in_boundary(Vec2 a, Vec2 b) {
  for (int k = 0; k < 3; ++k)
    if (SimplexFrame::side_parameter(k, a, 1e-9) && SimplexFrame::side_parameter(k, b, 1e-9))
      return true;
  return false;
}

}  // namespace

DegreeReport component_degrees(const PLDiscMap& f, std::uint64_t seed) {
  f.validate();
  DegreeReport rep;
  Rng master(seed);

  for (int tf = 0; tf < static_cast<int>(f.target.faces.size()); ++tf) {
    // faces assigned here whose image meets the interior
    std::vector<int> members;
    std::map<int, FaceGeometry> geom;
    for (size_t df = 0; df < f.domain.faces.size(); ++df) {
      if (f.face_assignment[df] != tf) continue;
      auto corners = f.domain.face_corners(static_cast<int>(df));
      FaceGeometry g;
      g.a = f.image_in_face(corners[0], tf);
      g.b = f.image_in_face(corners[1], tf);
      g.c = f.image_in_face(corners[2], tf);
      g.signed_area2 = geometry::orient(g.a, g.b, g.c);
      if (!triangle_meets_interior(f, static_cast<int>(df), g)) continue;
      members.push_back(static_cast<int>(df));
      geom[static_cast<int>(df)] = g;
    }
    if (members.empty()) continue;

    // connectivity through domain edges whose image meets the interior
    std::map<int, int> comp;
    int ncomp = 0;
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (int df : members)
      for (int d : f.domain.faces[static_cast<size_t>(df)])
        by_edge[{std::abs(d), 0}].push_back(df);
    std::map<int, std::vector<int>> adj;
    for (auto& [key, faces] : by_edge) {
      if (faces.size() != 2) continue;
      int e = key.first - 1;
      int a = f.domain.edges[static_cast<size_t>(e)].tail;
      int b = f.domain.edges[static_cast<size_t>(e)].head;
      Vec2 ia = f.image_in_face(a, tf), ib = f.image_in_face(b, tf);
      if (segment_in_boundary(ia, ib)) continue;
      adj[faces[0]].push_back(faces[1]);
      adj[faces[1]].push_back(faces[0]);
    }
    for (int df : members) {
      if (comp.count(df)) continue;
      int id = ncomp++;
      std::vector<int> stack{df};
      comp[df] = id;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
          if (!comp.count(y)) {
            comp[y] = id;
            stack.push_back(y);
          }
      }
    }

    for (int cid = 0; cid < ncomp; ++cid) {
      ComponentReport cr;
      cr.target_face = tf;
      cr.component = cid;
      for (int df : members)
        if (comp[df] == cid) cr.domain_faces.push_back(df);

      // degree at several independent generic points
      Rng rng = master.fork(static_cast<std::uint64_t>(tf) * 1000 + static_cast<std::uint64_t>(cid));
      std::int64_t degree = 0;
      bool first = true;
      for (int sample = 0; sample < rep.generic_samples; ++sample) {
        Vec2 q{};
        for (int tries = 0; tries < 10000; ++tries) {
          double b0 = rng.unit(), b1 = rng.unit();
          if (b0 + b1 > 1) {
            b0 = 1 - b0;
            b1 = 1 - b1;
          }
          q = SimplexFrame::from_barycentric(b0, b1, 1 - b0 - b1);
          bool clear = SimplexFrame::boundary_distance(q) > 1e-6;
          for (int df : cr.domain_faces) {
            const FaceGeometry& g = geom[df];
            if (!clear) break;
            if (geometry::segment_point_distance(g.a, g.b, q) < 1e-9 ||
                geometry::segment_point_distance(g.b, g.c, q) < 1e-9 ||
                geometry::segment_point_distance(g.c, g.a, q) < 1e-9)
              clear = false;
          }
          if (clear) break;
        }
        std::int64_t d = 0;
        for (int df : cr.domain_faces) {
          const FaceGeometry& g = geom[df];
          if (g.signed_area2 == 0) continue;
          if (geometry::point_in_triangle(q, g.a, g.b, g.c)) d += g.signed_area2 > 0 ? 1 : -1;
        }
        if (first) {
          degree = d;
          first = false;
        } else if (degree != d) {
          throw std::logic_error("degree differs between generic sample points");
        }
      }
      cr.degree = degree;
      for (int df : cr.domain_faces) cr.area += std::abs(geom[df].signed_area2) / 2;
      cr.bound_ok = cr.area >= std::sqrt(3.0) / 2 * std::llabs(cr.degree) - 1e-9;
      rep.components.push_back(cr);
      rep.total_abs_degree += std::llabs(cr.degree);
      rep.total_area += cr.area;
    }
  }
  return rep;
}

std::string degree_report_to_json(const DegreeReport& rep) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : rep.components)
    comps.push_back(nlohmann::json{{"target_face", c.target_face},
                                   {"component", c.component},
                                   {"faces", c.domain_faces},
                                   {"degree", c.degree},
                                   {"area", c.area},
                                   {"bound_ok", c.bound_ok}});
  nlohmann::json j;
  j["components"] = comps;
  j["total_abs_degree"] = rep.total_abs_degree;
  j["total_area"] = rep.total_area;
  j["generic_samples"] = rep.generic_samples;
  return j.dump(2) + "\n";
}

AlignedConversion disc_to_degenerate_diagram(const PLDiscMap& f, std::uint64_t seed) {
  f.validate();
  AlignedConversion out;
  diagram::VanKampenDiagram d;
  d.domain = f.domain;
  d.target = f.target;
  d.degenerate = true;
  for (size_t v = 0; v < f.vertex_image.size(); ++v) {
    const PointRef& ref = f.vertex_image[v];
    if (ref.kind != PointRef::Kind::Vertex)
      throw std::invalid_argument("disc map is not aligned: vertex image is not a target vertex");
    d.vertex_image.push_back(ref.id);
  }
  // edge and face images follow from the vertex images
  for (const auto& e : d.domain.edges) {
    int a = d.vertex_image[static_cast<size_t>(e.tail)];
    int b = d.vertex_image[static_cast<size_t>(e.head)];
    diagram::VanKampenDiagram::EdgeImage im;
    if (a == b) {
      im.to_vertex = true;
      im.id = a;
    } else {
      bool found = false;
      for (size_t te = 0; te < d.target.edges.size() && !found; ++te) {
        if (d.target.edges[te].tail == a && d.target.edges[te].head == b) {
          im.id = static_cast<int>(te);
          found = true;
        } else if (d.target.edges[te].tail == b && d.target.edges[te].head == a) {
          im.id = static_cast<int>(te);
          im.reversed = true;
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("aligned map edge image missing from the target");
    }
    d.edge_image.push_back(im);
  }
  for (size_t df = 0; df < d.domain.faces.size(); ++df) {
    std::set<int> imgs;
    for (int v : d.domain.face_corners(static_cast<int>(df)))
      imgs.insert(d.vertex_image[static_cast<size_t>(v)]);
    diagram::VanKampenDiagram::FaceImage im;
    if (imgs.size() == 3) {
      im.kind = diagram::VanKampenDiagram::FaceImage::Kind::Face;
      im.id = f.face_assignment[df];
    } else if (imgs.size() == 2) {
      auto it = imgs.begin();
      int a = *it++;
      int b = *it;
      im.kind = diagram::VanKampenDiagram::FaceImage::Kind::Edge;
      bool found = false;
      for (size_t te = 0; te < d.target.edges.size() && !found; ++te)
        if ((d.target.edges[te].tail == a && d.target.edges[te].head == b) ||
            (d.target.edges[te].tail == b && d.target.edges[te].head == a)) {
          im.id = static_cast<int>(te);
          found = true;
        }
      if (!found) throw std::invalid_argument("degenerate face image missing from the target");
    } else {
      im.kind = diagram::VanKampenDiagram::FaceImage::Kind::Vertex;
      im.id = *imgs.begin();
    }
    d.face_image.push_back(im);
  }
  d.validate();

  DegreeReport rep = component_degrees(f, seed);
  out.def51_area = d.degenerate_area();
  out.sum_abs_degree = rep.total_abs_degree;
  out.geometric_area = rep.total_area;
  out.area_over_bound = 2 / std::sqrt(3.0) * out.geometric_area;
  if (out.def51_area < out.sum_abs_degree)
    throw std::logic_error("Def-5.1 area fell below the total degree");
  out.diagram = std::move(d);
  return out;
}

// ---------------------------------------------------------------------------
// JSON

using nlohmann::json;

namespace {

json pointref_to_json(const PointRef& r) {
  switch (r.kind) {
    case PointRef::Kind::Vertex:
      return json{{"vertex", r.id}};
    case PointRef::Kind::EdgePoint:
      return json{{"edge", r.id}, {"t", r.t}};
    default: {
      auto b = SimplexFrame::to_barycentric(r.local);
      return json{{"face", r.id}, {"bary", json::array({b[0], b[1], b[2]})}};
    }
  }
}

PointRef pointref_from_json(const json& j) {
  PointRef r;
  if (j.contains("vertex")) {
    r.kind = PointRef::Kind::Vertex;
    r.id = j.at("vertex").get<int>();
  } else if (j.contains("edge")) {
    r.kind = PointRef::Kind::EdgePoint;
    r.id = j.at("edge").get<int>();
    r.t = j.at("t").get<double>();
  } else {
    r.kind = PointRef::Kind::Interior;
    r.id = j.at("face").get<int>();
    const json& b = j.at("bary");
    r.local = SimplexFrame::from_barycentric(b.at(0).get<double>(), b.at(1).get<double>(),
                                             b.at(2).get<double>());
  }
  return r;
}

}  // namespace

std::string discmap_to_json(const PLDiscMap& f) {
  json j;
  j["vertices"] = f.domain.vertex_count;
  j["basepoint"] = f.domain.basepoint;
  json edges = json::array();
  for (const auto& e : f.domain.edges) edges.push_back({e.tail, e.head});
  j["edges"] = edges;
  j["faces"] = f.domain.faces;
  j["rotation"] = f.domain.rotation;
  j["boundary"] = f.domain.outer;
  json target;
  target["vertices"] = f.target.vertex_count;
  json tedges = json::array();
  for (const auto& e : f.target.edges) tedges.push_back({e.tail, e.head});
  target["edges"] = tedges;
  target["faces"] = f.target.faces;
  j["target"] = target;
  json imgs = json::array();
  for (const auto& r : f.vertex_image) imgs.push_back(pointref_to_json(r));
  j["vertex_images"] = imgs;
  j["face_assignment"] = f.face_assignment;
  return j.dump(2) + "\n";
}

PLDiscMap discmap_from_json(const std::string& text) {
  json j = json::parse(text);
  PLDiscMap f;
  f.domain.vertex_count = j.at("vertices").get<int>();
  f.domain.basepoint = j.value("basepoint", 0);
  for (const auto& e : j.at("edges")) f.domain.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  f.domain.faces = j.at("faces").get<std::vector<std::vector<int>>>();
  f.domain.rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
  f.domain.outer = j.at("boundary").get<std::vector<int>>();
  const json& t = j.at("target");
  f.target.vertex_count = t.at("vertices").get<int>();
  for (const auto& e : t.at("edges")) f.target.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  f.target.faces = t.at("faces").get<std::vector<std::vector<int>>>();
  f.target.simplicial = f.target.simplicial_invariants_hold();
  for (const auto& r : j.at("vertex_images")) f.vertex_image.push_back(pointref_from_json(r));
  f.face_assignment = j.at("face_assignment").get<std::vector<int>>();
  f.validate();
  return f;
}

}  // namespace dehn::plmaps
