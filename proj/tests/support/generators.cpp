#include "generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dehn/diagram.hpp"
#include "dehn/geometry.hpp"

namespace dehn::testsupport {

using chain::Chain1;
using chain::PLLoop;
using geometry::SimplexFrame;
using geometry::Vec2;

std::vector<std::vector<int>> faces_by_edge(const complex2::Complex2& c) {
  std::vector<std::vector<int>> out(c.edges.size());
  for (size_t f = 0; f < c.faces.size(); ++f)
    for (int d : c.faces[f]) out[static_cast<size_t>(std::abs(d) - 1)].push_back(static_cast<int>(f));
  return out;
}

namespace {

// point on the given side of a face's frame at an edge parameter strictly
// inside (0,1)
Vec2 side_point_of_face(const complex2::Complex2& c, int face, int edge, double edge_t) {
  const auto& cyc = c.faces[static_cast<size_t>(face)];
  for (int k = 0; k < 3; ++k) {
    int dart = cyc[static_cast<size_t>(k)];
    if (std::abs(dart) - 1 != edge) continue;
    double t = dart > 0 ? edge_t : 1 - edge_t;
    return SimplexFrame::side_point(k, t);
  }
  throw std::logic_error("edge not on face");
}

Vec2 corner_of_vertex(const complex2::Complex2& c, int face, int vertex) {
  auto corners = c.face_corners(face);
  for (int k = 0; k < 3; ++k)
    if (corners[static_cast<size_t>(k)] == vertex) return SimplexFrame::corner(k);
  throw std::logic_error("vertex not on face");
}

struct Walk {
  std::vector<int> faces;
  std::vector<int> edges;        // shared edge between consecutive faces
  std::vector<double> edge_t;    // crossing parameter on that edge
};

Walk random_dual_walk(const complex2::Complex2& c, Rng& rng, int steps) {
  auto by_edge = faces_by_edge(c);
  Walk w;
  w.faces.push_back(static_cast<int>(rng.below(c.faces.size())));
  for (int s = 0; s < steps; ++s) {
    int f = w.faces.back();
    std::vector<std::pair<int, int>> options;  // (edge, other face)
    for (int d : c.faces[static_cast<size_t>(f)]) {
      int e = std::abs(d) - 1;
      for (int g : by_edge[static_cast<size_t>(e)])
        if (g != f) options.emplace_back(e, g);
    }
    if (options.empty()) break;
    auto [e, g] = options[rng.below(options.size())];
    w.edges.push_back(e);
    w.edge_t.push_back(rng.range(0.2, 0.8));
    w.faces.push_back(g);
  }
  return w;
}

}  // namespace

Chain1 random_chain(const complex2::Complex2& c, Rng& rng) {
  Walk w = random_dual_walk(c, rng, 2 + static_cast<int>(rng.below(5)));
  Chain1 out;
  int mult = rng.below(4) == 0 ? -1 : 1;
  // start and end at vertices of the first/last faces
  auto corners_first = c.face_corners(w.faces.front());
  auto corners_last = c.face_corners(w.faces.back());
  Vec2 start = corner_of_vertex(c, w.faces.front(), corners_first[rng.below(3)]);
  Vec2 finish = corner_of_vertex(c, w.faces.back(), corners_last[rng.below(3)]);

  Vec2 prev = start;
  for (size_t i = 0; i < w.edges.size(); ++i) {
    Vec2 exit = side_point_of_face(c, w.faces[i], w.edges[i], w.edge_t[i]);
    out.segs.push_back({w.faces[i], prev, exit, mult});
    prev = side_point_of_face(c, w.faces[i + 1], w.edges[i], w.edge_t[i]);
  }
  out.segs.push_back({w.faces.back(), prev, finish, mult});
  return out;
}

PLLoop random_loop(const complex2::Complex2& c, Rng& rng) {
  // walk until the dual path returns to its starting face
  auto by_edge = faces_by_edge(c);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Walk w = random_dual_walk(c, rng, 3 + static_cast<int>(rng.below(8)));
    if (w.faces.size() < 3 || w.faces.back() == w.faces.front()) continue;
    // close up: need an edge between the last face and the first
    int last = w.faces.back(), first = w.faces.front();
    int closing = -1;
    for (int d : c.faces[static_cast<size_t>(last)]) {
      int e = std::abs(d) - 1;
      for (int g : by_edge[static_cast<size_t>(e)])
        if (g == first) closing = e;
    }
    if (closing < 0) continue;
    w.edges.push_back(closing);
    w.edge_t.push_back(rng.range(0.2, 0.8));
    w.faces.push_back(first);

    PLLoop loop;
    Vec2 entry = side_point_of_face(c, w.faces.front(), w.edges.back(), w.edge_t.back());
    Vec2 prev = entry;
    for (size_t i = 0; i < w.edges.size(); ++i) {
      Vec2 exit = side_point_of_face(c, w.faces[i], w.edges[i], w.edge_t[i]);
      loop.pieces.push_back({w.faces[i], prev, exit});
      if (i + 1 < w.edges.size())
        prev = side_point_of_face(c, w.faces[i + 1], w.edges[i], w.edge_t[i]);
    }
    return loop;
  }
  throw std::runtime_error("could not close a random loop on this complex");
}

plmaps::PLDiscMap random_single_face_discmap(int grid_n, Rng& rng) {
  plmaps::PLDiscMap f;
  f.domain = diagram::planar_disc_grid(grid_n);
  f.target = complex2::standard_model("single_triangle", 1);
  f.face_assignment.assign(f.domain.faces.size(), 0);
  f.vertex_image.resize(static_cast<size_t>(f.domain.vertex_count));

  // boundary vertices walk through the corners so each boundary edge maps
  // onto a whole target edge
  std::vector<int> boundary_vertices;
  for (int d : f.domain.outer) boundary_vertices.push_back(f.domain.dart_tail(d));
  std::vector<int> corners(boundary_vertices.size());
  corners[0] = 0;
  for (size_t i = 1; i < corners.size(); ++i)
    corners[i] = (corners[i - 1] + (rng.below(2) == 0 ? 1 : 2)) % 3;
  if (corners.back() == corners.front()) {
    // keep the closing edge nondegenerate
    int prev = corners[corners.size() - 2];
    for (int k = 0; k < 3; ++k)
      if (k != prev && k != corners.front()) {
        corners.back() = k;
        break;
      }
  }
  for (size_t i = 0; i < boundary_vertices.size(); ++i) {
    chain::PointRef r;
    r.kind = chain::PointRef::Kind::Vertex;
    r.id = corners[i];
    f.vertex_image[static_cast<size_t>(boundary_vertices[i])] = r;
  }
  std::vector<bool> is_boundary(static_cast<size_t>(f.domain.vertex_count), false);
  for (int v : boundary_vertices) is_boundary[static_cast<size_t>(v)] = true;

  for (int v = 0; v < f.domain.vertex_count; ++v) {
    if (is_boundary[static_cast<size_t>(v)]) continue;
    chain::PointRef r;
    double roll = rng.unit();
    if (roll < 0.25) {
      r.kind = chain::PointRef::Kind::Vertex;
      r.id = static_cast<int>(rng.below(3));
    } else if (roll < 0.5) {
      r.kind = chain::PointRef::Kind::EdgePoint;
      r.id = static_cast<int>(rng.below(3));
      r.t = rng.range(0.1, 0.9);
    } else {
      r.kind = chain::PointRef::Kind::Interior;
      r.id = 0;
      double b0 = rng.unit(), b1 = rng.unit();
      if (b0 + b1 > 1) {
        b0 = 1 - b0;
        b1 = 1 - b1;
      }
      r.local = SimplexFrame::from_barycentric(b0, b1, 1 - b0 - b1);
    }
    f.vertex_image[static_cast<size_t>(v)] = r;
  }
  f.validate();
  return f;
}

plmaps::PLDiscMap folded_discmap(int grid_n) {
  diagram::VanKampenDiagram d = diagram::folded_grid_diagram(grid_n);
  plmaps::PLDiscMap f;
  f.domain = d.domain;
  f.target = d.target;
  f.face_assignment.assign(f.domain.faces.size(), 0);
  for (int v : d.vertex_image) {
    chain::PointRef r;
    r.kind = chain::PointRef::Kind::Vertex;
    r.id = v;
    f.vertex_image.push_back(r);
  }
  f.validate();
  return f;
}

plmaps::PLDiscMap identity_discmap(int grid_n) {
  diagram::VanKampenDiagram d = diagram::identity_grid_diagram(grid_n);
  plmaps::PLDiscMap f;
  f.domain = d.domain;
  f.target = d.target;
  for (size_t df = 0; df < f.domain.faces.size(); ++df)
    f.face_assignment.push_back(static_cast<int>(df));
  for (int v : d.vertex_image) {
    chain::PointRef r;
    r.kind = chain::PointRef::Kind::Vertex;
    r.id = v;
    f.vertex_image.push_back(r);
  }
  f.validate();
  return f;
}

}  // namespace dehn::testsupport
