#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "dehn/diagram.hpp"

namespace dehn::diagram {

namespace {

using planar::PlanarComplex;

int grid_vid(int n, int i, int j) { return j * (n + 1) + i; }

}  // namespace

planar::PlanarComplex planar_disc_grid(int n) {
  if (n < 1) throw std::invalid_argument("disc grid needs size >= 1");
  PlanarComplex c;
  c.vertex_count = (n + 1) * (n + 1);
  std::map<std::pair<int, int>, int> eid;
  auto add_edge = [&](int a, int b) {
    c.edges.push_back({a, b});
    eid[{a, b}] = static_cast<int>(c.edges.size());
  };
  auto dart = [&](int a, int b) {
    auto it = eid.find({a, b});
    if (it != eid.end()) return it->second;
    return -eid.at({b, a});
  };
  // same cell ordering as complex2::standard_model("disc_grid", n)
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < n; ++i) add_edge(grid_vid(n, i, j), grid_vid(n, i + 1, j));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < n; ++j) add_edge(grid_vid(n, i, j), grid_vid(n, i, j + 1));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) add_edge(grid_vid(n, i + 1, j), grid_vid(n, i, j + 1));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      c.faces.push_back({dart(grid_vid(n, i, j), grid_vid(n, i + 1, j)),
                         dart(grid_vid(n, i + 1, j), grid_vid(n, i, j + 1)),
                         dart(grid_vid(n, i, j + 1), grid_vid(n, i, j))});
      c.faces.push_back({dart(grid_vid(n, i + 1, j), grid_vid(n, i + 1, j + 1)),
                         dart(grid_vid(n, i + 1, j + 1), grid_vid(n, i, j + 1)),
                         dart(grid_vid(n, i, j + 1), grid_vid(n, i + 1, j))});
    }

  // counterclockwise rotations: E, N, NW, W, S, SE
  c.rotation.resize(static_cast<size_t>(c.vertex_count));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      std::vector<int>& rot = c.rotation[static_cast<size_t>(grid_vid(n, i, j))];
      if (i < n) rot.push_back(dart(grid_vid(n, i, j), grid_vid(n, i + 1, j)));
      if (j < n) rot.push_back(dart(grid_vid(n, i, j), grid_vid(n, i, j + 1)));
      if (i > 0 && j < n) rot.push_back(dart(grid_vid(n, i, j), grid_vid(n, i - 1, j + 1)));
      if (i > 0) rot.push_back(dart(grid_vid(n, i, j), grid_vid(n, i - 1, j)));
      if (j > 0) rot.push_back(dart(grid_vid(n, i, j), grid_vid(n, i, j - 1)));
      if (i < n && j > 0) rot.push_back(dart(grid_vid(n, i, j), grid_vid(n, i + 1, j - 1)));
    }

  // outer walk, clockwise: up the left side, across the top, down the right
  // side, back along the bottom
  for (int j = 0; j < n; ++j) c.outer.push_back(dart(grid_vid(n, 0, j), grid_vid(n, 0, j + 1)));
  for (int i = 0; i < n; ++i) c.outer.push_back(dart(grid_vid(n, i, n), grid_vid(n, i + 1, n)));
  for (int j = n; j > 0; --j) c.outer.push_back(dart(grid_vid(n, n, j), grid_vid(n, n, j - 1)));
  for (int i = n; i > 0; --i) c.outer.push_back(dart(grid_vid(n, i, 0), grid_vid(n, i - 1, 0)));
  c.basepoint = 0;
  c.validate();
  return c;
}

namespace {

VanKampenDiagram::FaceImage derive_face_image(const complex2::Complex2& target,
                                              const std::vector<int>& corner_images) {
  std::set<int> imgs(corner_images.begin(), corner_images.end());
  VanKampenDiagram::FaceImage im;
  if (imgs.size() == 3) {
    std::array<int, 3> key;
    std::copy(imgs.begin(), imgs.end(), key.begin());
    for (size_t f = 0; f < target.faces.size(); ++f) {
      auto c = target.face_corners(static_cast<int>(f));
      std::array<int, 3> k2{c[0], c[1], c[2]};
      std::sort(k2.begin(), k2.end());
      if (k2 == key) {
        im.kind = VanKampenDiagram::FaceImage::Kind::Face;
        im.id = static_cast<int>(f);
        return im;
      }
    }
    throw std::invalid_argument("corner images span no target face");
  }
  if (imgs.size() == 2) {
    auto it = imgs.begin();
    int u = *it++;
    int w = *it;
    for (size_t e = 0; e < target.edges.size(); ++e)
      if ((target.edges[e].tail == u && target.edges[e].head == w) ||
          (target.edges[e].tail == w && target.edges[e].head == u)) {
        im.kind = VanKampenDiagram::FaceImage::Kind::Edge;
        im.id = static_cast<int>(e);
        return im;
      }
    throw std::invalid_argument("corner images span no target edge");
  }
  im.kind = VanKampenDiagram::FaceImage::Kind::Vertex;
  im.id = *imgs.begin();
  return im;
}

VanKampenDiagram::EdgeImage derive_edge_image(const complex2::Complex2& target, int a, int b) {
  VanKampenDiagram::EdgeImage im;
  if (a == b) {
    im.to_vertex = true;
    im.id = a;
    return im;
  }
  for (size_t e = 0; e < target.edges.size(); ++e) {
    if (target.edges[e].tail == a && target.edges[e].head == b) {
      im.id = static_cast<int>(e);
      return im;
    }
    if (target.edges[e].tail == b && target.edges[e].head == a) {
      im.id = static_cast<int>(e);
      im.reversed = true;
      return im;
    }
  }
  throw std::invalid_argument("vertex images span no target edge");
}

void rederive_images(VanKampenDiagram& d) {
  d.edge_image.clear();
  for (const auto& e : d.domain.edges)
    d.edge_image.push_back(derive_edge_image(d.target, d.vertex_image[static_cast<size_t>(e.tail)],
                                             d.vertex_image[static_cast<size_t>(e.head)]));
  d.face_image.clear();
  for (size_t f = 0; f < d.domain.faces.size(); ++f) {
    std::vector<int> imgs;
    for (int v : d.domain.face_corners(static_cast<int>(f)))
      imgs.push_back(d.vertex_image[static_cast<size_t>(v)]);
    d.face_image.push_back(derive_face_image(d.target, imgs));
  }
}

}  // namespace

VanKampenDiagram identity_grid_diagram(int n) {
  VanKampenDiagram d;
  d.domain = planar_disc_grid(n);
  d.target = complex2::standard_model("disc_grid", n);
  d.vertex_image.resize(static_cast<size_t>(d.domain.vertex_count));
  for (int v = 0; v < d.domain.vertex_count; ++v) d.vertex_image[static_cast<size_t>(v)] = v;
  rederive_images(d);
  d.degenerate = false;
  d.validate();
  return d;
}

VanKampenDiagram folded_grid_diagram(int n) {
  VanKampenDiagram d;
  d.domain = planar_disc_grid(n);
  d.target = complex2::standard_model("single_triangle", 1);
  d.vertex_image.resize(static_cast<size_t>(d.domain.vertex_count));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      d.vertex_image[static_cast<size_t>(grid_vid(n, i, j))] = (i + 2 * j) % 3;
  rederive_images(d);
  d.degenerate = false;
  d.validate();
  return d;
}

// ---------------------------------------------------------------------------
// Inverse-collapse moves.  Each move edits the domain in place, keeps the
// rotation system consistent (the face after dart d is the rotation
// predecessor of -d at its head), and rederives the images of new cells.

namespace {

struct MoveContext {
  VanKampenDiagram& d;
  PlanarComplex& dom;

  int add_vertex(int image) {
    d.vertex_image.push_back(image);
    dom.rotation.emplace_back();
    return dom.vertex_count++;
  }
  int add_edge(int a, int b) {  // returns the 1-based edge id
    dom.edges.push_back({a, b});
    d.edge_image.push_back(derive_edge_image(d.target, d.vertex_image[static_cast<size_t>(a)],
                                             d.vertex_image[static_cast<size_t>(b)]));
    return static_cast<int>(dom.edges.size());
  }
  void add_face(std::vector<int> cyc) {
    std::vector<int> imgs;
    for (int dart : cyc) imgs.push_back(d.vertex_image[static_cast<size_t>(dom.dart_tail(dart))]);
    dom.faces.push_back(std::move(cyc));
    d.face_image.push_back(derive_face_image(d.target, imgs));
  }
  void replace_face(int f, std::vector<int> cyc) {
    std::vector<int> imgs;
    for (int dart : cyc) imgs.push_back(d.vertex_image[static_cast<size_t>(dom.dart_tail(dart))]);
    dom.faces[static_cast<size_t>(f)] = std::move(cyc);
    d.face_image[static_cast<size_t>(f)] = derive_face_image(d.target, imgs);
  }
  void rot_insert_after(int v, int after, int ins) {
    auto& rot = dom.rotation[static_cast<size_t>(v)];
    auto it = std::find(rot.begin(), rot.end(), after);
    if (it == rot.end()) throw std::logic_error("rotation anchor missing");
    rot.insert(it + 1, ins);
  }
  void rot_replace(int v, int old_dart, int new_dart) {
    auto& rot = dom.rotation[static_cast<size_t>(v)];
    auto it = std::find(rot.begin(), rot.end(), old_dart);
    if (it == rot.end()) throw std::logic_error("rotation dart missing");
    *it = new_dart;
  }
};

int face_with_dart(const PlanarComplex& dom, int dart) {
  for (size_t f = 0; f < dom.faces.size(); ++f)
    for (int d : dom.faces[f])
      if (d == dart) return static_cast<int>(f);
  return -1;
}

std::vector<int> rotate_cycle_to(const std::vector<int>& cyc, int first) {
  auto it = std::find(cyc.begin(), cyc.end(), first);
  if (it == cyc.end()) throw std::logic_error("dart not in cycle");
  std::vector<int> out(it, cyc.end());
  out.insert(out.end(), cyc.begin(), it);
  return out;
}

// Split an interior edge at a new vertex carrying the tail's image; one half
// becomes degenerate.  Area and boundary word are untouched.
bool move_edge_split(VanKampenDiagram& d, Rng& rng) {
  PlanarComplex& dom = d.domain;
  std::vector<int> interior;
  for (int e = 1; e <= static_cast<int>(dom.edges.size()); ++e)
    if (face_with_dart(dom, e) >= 0 && face_with_dart(dom, -e) >= 0) interior.push_back(e);
  if (interior.empty()) return false;
  int e = interior[rng.below(interior.size())];
  int fp = face_with_dart(dom, e), fm = face_with_dart(dom, -e);

  MoveContext ctx{d, dom};
  int s = dom.edges[static_cast<size_t>(e - 1)].tail;
  int t = dom.edges[static_cast<size_t>(e - 1)].head;
  auto fplus = rotate_cycle_to(dom.faces[static_cast<size_t>(fp)], e);    // [+e, x, y]
  auto fminus = rotate_cycle_to(dom.faces[static_cast<size_t>(fm)], -e);  // [-e, x', y']
  int x = fplus[1], y = fplus[2];
  int xp = fminus[1], yp = fminus[2];
  int cp = dom.dart_head(x), cm = dom.dart_head(xp);

  int m = ctx.add_vertex(d.vertex_image[static_cast<size_t>(s)]);
  dom.edges[static_cast<size_t>(e - 1)].head = m;  // e: s -> m, now degenerate
  d.edge_image[static_cast<size_t>(e - 1)] = derive_edge_image(
      d.target, d.vertex_image[static_cast<size_t>(s)], d.vertex_image[static_cast<size_t>(m)]);
  int e2 = ctx.add_edge(m, t);
  int spp = ctx.add_edge(m, cp);
  int spm = ctx.add_edge(m, cm);

  ctx.replace_face(fp, {e, spp, y});
  ctx.add_face({e2, x, -spp});
  ctx.replace_face(fm, {-e2, spm, yp});
  ctx.add_face({-e, xp, -spm});

  dom.rotation[static_cast<size_t>(m)] = {e2, spp, -e, spm};
  ctx.rot_replace(t, -e, -e2);
  ctx.rot_insert_after(cp, y, -spp);
  ctx.rot_insert_after(cm, yp, -spm);
  return true;
}

// Blow a face up from an interior point mapped onto one of its corners: one
// sub-face inherits the image, the other two degenerate.
bool move_face_blowup(VanKampenDiagram& d, Rng& rng) {
  PlanarComplex& dom = d.domain;
  if (dom.faces.empty()) return false;
  int f = static_cast<int>(rng.below(dom.faces.size()));
  MoveContext ctx{d, dom};
  auto cyc = dom.faces[static_cast<size_t>(f)];  // [d0: p->q, d1: q->c, d2: c->p]
  int d0 = cyc[0], d1 = cyc[1], d2 = cyc[2];
  int p = dom.dart_tail(d0), q = dom.dart_tail(d1), c = dom.dart_tail(d2);
  int corner = static_cast<int>(rng.below(3));
  int zimg = d.vertex_image[static_cast<size_t>(corner == 0 ? p : corner == 1 ? q : c)];

  int z = ctx.add_vertex(zimg);
  int sp = ctx.add_edge(p, z);
  int sq = ctx.add_edge(q, z);
  int sc = ctx.add_edge(c, z);
  ctx.replace_face(f, {d0, sq, -sp});
  ctx.add_face({d1, sc, -sq});
  ctx.add_face({d2, sp, -sc});
  dom.rotation[static_cast<size_t>(z)] = {-sp, -sq, -sc};
  ctx.rot_insert_after(p, d0, sp);
  ctx.rot_insert_after(q, d1, sq);
  ctx.rot_insert_after(c, d2, sc);
  return true;
}

// Inflate an interior vertex u into a triangle of degenerate edges enclosing
// a doubly-covered copy of a target face.  Collapsing pinches the enclosure
// off as a 2-sphere carrying two homeomorphic faces, so this is the move
// that makes collapse strictly decrease area.
bool move_sphere_collar(VanKampenDiagram& d, Rng& rng) {
  PlanarComplex& dom = d.domain;
  // interior vertices only
  std::set<int> on_outer;
  for (int dart : dom.outer) {
    on_outer.insert(dom.dart_tail(dart));
    on_outer.insert(dom.dart_head(dart));
  }
  std::vector<int> candidates;
  for (int v = 0; v < dom.vertex_count; ++v)
    if (!on_outer.count(v) && dom.rotation[static_cast<size_t>(v)].size() >= 3) candidates.push_back(v);
  if (candidates.empty()) return false;
  int u = candidates[rng.below(candidates.size())];
  int a = d.vertex_image[static_cast<size_t>(u)];

  // a target face at the image vertex provides the diamond's images
  int tface = -1;
  for (size_t f = 0; f < d.target.faces.size(); ++f) {
    auto c = d.target.face_corners(static_cast<int>(f));
    if (c.size() == 3 && (c[0] == a || c[1] == a || c[2] == a)) {
      tface = static_cast<int>(f);
      break;
    }
  }
  if (tface < 0) return false;
  auto tc = d.target.face_corners(tface);
  std::rotate(tc.begin(), std::find(tc.begin(), tc.end(), a), tc.end());
  int b = tc[1], y = tc[2];

  MoveContext ctx{d, dom};
  std::vector<int> rot = dom.rotation[static_cast<size_t>(u)];
  size_t deg = rot.size();
  // three nonempty contiguous chunks
  size_t c2 = 1 + rng.below(deg - 2);
  size_t c3 = c2 + 1 + rng.below(deg - c2 - 1);
  std::vector<std::vector<int>> chunk{{rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(c2)},
                                      {rot.begin() + static_cast<std::ptrdiff_t>(c2),
                                       rot.begin() + static_cast<std::ptrdiff_t>(c3)},
                                      {rot.begin() + static_cast<std::ptrdiff_t>(c3), rot.end()}};

  int x1 = u;
  int x2 = ctx.add_vertex(a);
  int x3 = ctx.add_vertex(a);
  std::array<int, 3> xs{x1, x2, x3};

  // corner faces at the chunk boundaries, before any edits
  std::array<int, 3> last{}, first{}, mid{}, corner_face{}, tvert{};
  for (int i = 0; i < 3; ++i) {
    last[static_cast<size_t>(i)] = chunk[static_cast<size_t>(i)].back();
    first[static_cast<size_t>(i)] = chunk[static_cast<size_t>((i + 1) % 3)].front();
    int fi = face_with_dart(dom, last[static_cast<size_t>(i)]);
    if (fi < 0) throw std::logic_error("interior corner without a face");
    auto cyc = rotate_cycle_to(dom.faces[static_cast<size_t>(fi)], last[static_cast<size_t>(i)]);
    if (cyc.size() != 3 || cyc[2] != -first[static_cast<size_t>(i)])
      throw std::logic_error("corner face does not close the chunk boundary");
    corner_face[static_cast<size_t>(i)] = fi;
    mid[static_cast<size_t>(i)] = cyc[1];
    tvert[static_cast<size_t>(i)] = dom.dart_head(cyc[1]);
  }

  // reassign chunk 2 and 3 star edges from u to x2/x3
  for (int i = 1; i < 3; ++i)
    for (int dart : chunk[static_cast<size_t>(i)]) {
      auto& edge = dom.edges[static_cast<size_t>(std::abs(dart) - 1)];
      if (dart > 0)
        edge.tail = xs[static_cast<size_t>(i)];
      else
        edge.head = xs[static_cast<size_t>(i)];
    }

  int y1 = ctx.add_vertex(a);
  int y2 = ctx.add_vertex(b);
  int y4 = ctx.add_vertex(a);
  int y3 = ctx.add_vertex(y);

  int e12 = ctx.add_edge(x1, x2);
  int e23 = ctx.add_edge(x2, x3);
  int e31 = ctx.add_edge(x3, x1);
  std::array<int, 3> ecyc{e12, e23, e31};
  std::array<int, 3> diag{};
  for (int i = 0; i < 3; ++i)
    diag[static_cast<size_t>(i)] = ctx.add_edge(xs[static_cast<size_t>(i)], tvert[static_cast<size_t>(i)]);

  int r1_y2 = ctx.add_edge(x1, y2);
  int r1_y1 = ctx.add_edge(x1, y1);
  int r2_y4 = ctx.add_edge(x2, y4);
  int r2_y2 = ctx.add_edge(x2, y2);
  int r3_y1 = ctx.add_edge(x3, y1);
  int r3_y3 = ctx.add_edge(x3, y3);
  int r3_y4 = ctx.add_edge(x3, y4);
  int dm12 = ctx.add_edge(y1, y2);
  int dm24 = ctx.add_edge(y2, y4);
  int dm43 = ctx.add_edge(y4, y3);
  int dm31 = ctx.add_edge(y3, y1);
  int dmdg = ctx.add_edge(y2, y3);

  // corner faces split in two
  for (int i = 0; i < 3; ++i) {
    size_t si = static_cast<size_t>(i);
    ctx.replace_face(corner_face[si], {last[si], mid[si], -diag[si]});
    ctx.add_face({diag[si], -first[si], -ecyc[si]});
  }
  // annulus between the collar triangle and the diamond
  ctx.add_face({e12, r2_y2, -r1_y2});
  ctx.add_face({r1_y2, -dm12, -r1_y1});
  ctx.add_face({e23, r3_y4, -r2_y4});
  ctx.add_face({r2_y4, -dm24, -r2_y2});
  ctx.add_face({e31, r1_y1, -r3_y1});
  ctx.add_face({r3_y1, -dm31, -r3_y3});
  ctx.add_face({r3_y3, -dm43, -r3_y4});
  // the doubly covered target face
  ctx.add_face({dm12, dmdg, dm31});
  ctx.add_face({dm24, dm43, -dmdg});

  // rotations
  auto& rot1 = dom.rotation[static_cast<size_t>(x1)];
  rot1 = chunk[0];
  rot1.insert(rot1.end(), {diag[0], e12, r1_y2, r1_y1, -e31});
  auto& rot2 = dom.rotation[static_cast<size_t>(x2)];
  rot2 = chunk[1];
  rot2.insert(rot2.end(), {diag[1], e23, r2_y4, r2_y2, -e12});
  auto& rot3 = dom.rotation[static_cast<size_t>(x3)];
  rot3 = chunk[2];
  rot3.insert(rot3.end(), {diag[2], e31, r3_y1, r3_y3, r3_y4, -e23});
  dom.rotation[static_cast<size_t>(y1)] = {-r1_y1, dm12, -dm31, -r3_y1};
  dom.rotation[static_cast<size_t>(y2)] = {dmdg, -dm12, -r1_y2, -r2_y2, dm24};
  dom.rotation[static_cast<size_t>(y3)] = {dm31, -dmdg, -dm43, -r3_y3};
  dom.rotation[static_cast<size_t>(y4)] = {-dm43, -dm24, -r2_y4, -r3_y4};
  for (int i = 0; i < 3; ++i)
    ctx.rot_insert_after(tvert[static_cast<size_t>(i)], -first[static_cast<size_t>(i)],
                         -diag[static_cast<size_t>(i)]);
  return true;
}

}  // namespace

VanKampenDiagram make_degenerate(const VanKampenDiagram& seed, int depth, Rng& rng) {
  VanKampenDiagram d = seed;
  d.degenerate = true;
  d.validate();
  for (int step = 0; step < depth; ++step) {
    switch (rng.below(3)) {
      case 0:
        if (move_edge_split(d, rng)) break;
        [[fallthrough]];
      case 1:
        move_face_blowup(d, rng);
        break;
      default:
        if (!move_sphere_collar(d, rng)) move_face_blowup(d, rng);
        break;
    }
    d.validate();
  }
  return d;
}

}  // namespace dehn::diagram
