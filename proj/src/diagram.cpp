#include "dehn/diagram.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dehn::diagram {

int VanKampenDiagram::image_dart(int dart) const {
  const EdgeImage& im = edge_image[static_cast<size_t>(std::abs(dart) - 1)];
  if (im.to_vertex) throw std::logic_error("image_dart on a degenerate edge");
  int t = im.id + 1;
  bool rev = im.reversed != (dart < 0);
  return rev ? -t : t;
}

std::vector<int> VanKampenDiagram::boundary_darts() const {
  std::vector<int> out;
  for (auto it = domain.outer.rbegin(); it != domain.outer.rend(); ++it) out.push_back(-*it);
  return out;
}

std::vector<int> VanKampenDiagram::boundary_word() const {
  std::vector<int> w;
  for (int d : boundary_darts()) {
    const EdgeImage& im = edge_image[static_cast<size_t>(std::abs(d) - 1)];
    if (im.to_vertex) continue;
    w.push_back(image_dart(d));
  }
  return w;
}

std::int64_t VanKampenDiagram::degenerate_area() const {
  std::int64_t a = 0;
  for (const FaceImage& f : face_image)
    if (f.kind == FaceImage::Kind::Face) ++a;
  return a;
}

std::int64_t VanKampenDiagram::boundary_length() const {
  std::int64_t n = 0;
  for (int d : domain.outer)
    if (!edge_image[static_cast<size_t>(std::abs(d) - 1)].to_vertex) ++n;
  return n;
}

namespace {

bool domain_is_simplicial(const planar::PlanarComplex& dom) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : dom.edges) {
    if (e.tail == e.head) return false;
    if (!pairs.insert(std::minmax(e.tail, e.head)).second) return false;
  }
  std::set<std::array<int, 3>> triples;
  for (size_t f = 0; f < dom.faces.size(); ++f) {
    if (dom.faces[f].size() != 3) return false;
    auto c = dom.face_corners(static_cast<int>(f));
    std::array<int, 3> key{c[0], c[1], c[2]};
    std::sort(key.begin(), key.end());
    if (key[0] == key[1] || key[1] == key[2]) return false;
    if (!triples.insert(key).second) return false;
  }
  return true;
}

// target edge between u and w, as (edge index, reversed) for direction u->w
std::optional<std::pair<int, bool>> find_target_edge(const complex2::Complex2& t, int u, int w) {
  for (size_t e = 0; e < t.edges.size(); ++e) {
    if (t.edges[e].tail == u && t.edges[e].head == w) return std::make_pair(static_cast<int>(e), false);
    if (t.edges[e].tail == w && t.edges[e].head == u) return std::make_pair(static_cast<int>(e), true);
  }
  return std::nullopt;
}

std::optional<int> find_target_face(const complex2::Complex2& t, std::array<int, 3> sorted_triple) {
  for (size_t f = 0; f < t.faces.size(); ++f) {
    auto c = t.face_corners(static_cast<int>(f));
    if (c.size() != 3) continue;
    std::array<int, 3> key{c[0], c[1], c[2]};
    std::sort(key.begin(), key.end());
    if (key == sorted_triple) return static_cast<int>(f);
  }
  return std::nullopt;
}

}  // namespace

void VanKampenDiagram::validate() const {
  domain.validate();
  target.validate();
  if (vertex_image.size() != static_cast<size_t>(domain.vertex_count) ||
      edge_image.size() != domain.edges.size() || face_image.size() != domain.faces.size())
    throw std::invalid_argument("cell map size mismatch");
  for (int v : vertex_image)
    if (v < 0 || v >= target.vertex_count) throw std::invalid_argument("vertex image out of range");

  for (size_t e = 0; e < edge_image.size(); ++e) {
    int a = vertex_image[static_cast<size_t>(domain.edges[e].tail)];
    int b = vertex_image[static_cast<size_t>(domain.edges[e].head)];
    const EdgeImage& im = edge_image[e];
    if (im.to_vertex) {
      if (!degenerate) throw std::invalid_argument("combinatorial diagram with a degenerate edge");
      if (a != b || im.id != a) throw std::invalid_argument("degenerate edge image inconsistent");
    } else {
      if (im.id < 0 || im.id >= static_cast<int>(target.edges.size()))
        throw std::invalid_argument("edge image out of range");
      const auto& te = target.edges[static_cast<size_t>(im.id)];
      int ta = im.reversed ? te.head : te.tail;
      int tb = im.reversed ? te.tail : te.head;
      if (a != ta || b != tb) throw std::invalid_argument("edge image does not match vertex images");
    }
  }

  if (degenerate && !domain_is_simplicial(domain))
    throw std::invalid_argument("degenerate diagram domain must be simplicial");

  for (size_t f = 0; f < face_image.size(); ++f) {
    const auto& cyc = domain.faces[f];
    const FaceImage& im = face_image[f];
    if (degenerate) {
      // simplicial: the face image is spanned by the corner images
      auto corners = domain.face_corners(static_cast<int>(f));
      std::set<int> imgs;
      for (int v : corners) imgs.insert(vertex_image[static_cast<size_t>(v)]);
      if (imgs.size() == 3) {
        std::array<int, 3> key;
        std::copy(imgs.begin(), imgs.end(), key.begin());
        auto tf = find_target_face(target, key);
        if (!tf || im.kind != FaceImage::Kind::Face || im.id != *tf)
          throw std::invalid_argument("face image does not span a target face");
      } else if (imgs.size() == 2) {
        auto it = imgs.begin();
        int u = *it++;
        int w = *it;
        auto te = find_target_edge(target, u, w);
        if (!te || im.kind != FaceImage::Kind::Edge || im.id != te->first)
          throw std::invalid_argument("face image does not span a target edge");
      } else {
        if (im.kind != FaceImage::Kind::Vertex || im.id != *imgs.begin())
          throw std::invalid_argument("face image does not collapse to the right vertex");
      }
    } else {
      if (im.kind != FaceImage::Kind::Face)
        throw std::invalid_argument("combinatorial diagram with a squashed face");
      if (im.id < 0 || im.id >= static_cast<int>(target.faces.size()))
        throw std::invalid_argument("face image out of range");
      std::vector<int> img;
      for (int d : cyc) img.push_back(image_dart(d));
      const auto& tc = target.faces[static_cast<size_t>(im.id)];
      std::vector<int> rev;
      for (auto it = tc.rbegin(); it != tc.rend(); ++it) rev.push_back(-*it);
      if (!planar::cyclically_equal(img, tc) && !planar::cyclically_equal(img, rev))
        throw std::invalid_argument("face attaching walk does not spell the target face");
    }
  }
}

std::int64_t degenerate_length(const MappedLoop& loop) {
  std::int64_t n = 0;
  for (const auto& it : loop.items)
    if (!it.to_vertex) ++n;
  return n;
}

std::vector<int> collapse_boundary_loop(const MappedLoop& loop) {
  std::vector<int> w;
  for (const auto& it : loop.items)
    if (!it.to_vertex) w.push_back(it.id);
  return w;
}

// ---------------------------------------------------------------------------
// Collapse

namespace {

class Collapser {
 public:
  explicit Collapser(const VanKampenDiagram& d) : d_(d) {
    parent_.resize(static_cast<size_t>(d.domain.vertex_count));
    for (size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
    vertex_alive_.assign(parent_.size(), true);
    edge_alive_.assign(d.domain.edges.size(), true);
    face_alive_.assign(d.domain.faces.size(), true);
    rotation_ = d.domain.rotation;
    faces_ = d.domain.faces;
    outer_ = d.domain.outer;
  }

  CollapseReport run();

 private:
  int find(int v) {
    while (parent_[static_cast<size_t>(v)] != v) {
      parent_[static_cast<size_t>(v)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(v)])];
      v = parent_[static_cast<size_t>(v)];
    }
    return v;
  }
  int tail(int dart) const {
    return dart > 0 ? d_.domain.edges[size_t(dart - 1)].tail : d_.domain.edges[size_t(-dart - 1)].head;
  }
  int head(int dart) const { return tail(-dart); }
  int rtail(int dart) { return find(tail(dart)); }
  int rhead(int dart) { return find(head(dart)); }
  bool edge_degenerate_to(size_t e, int tv) const {
    return d_.edge_image[e].to_vertex && d_.edge_image[e].id == tv;
  }
  int image_dart(int dart) const {
    const auto& im = d_.edge_image[static_cast<size_t>(std::abs(dart) - 1)];
    int t = im.id + 1;
    return (im.reversed != (dart < 0)) ? -t : t;
  }

  bool collapse_one_component(int tv);
  void process_bigons(std::deque<int>& queue);
  void excise_spheres(int vhat);
  void substitute_dart(int from, int to);
  CollapseReport finish();

  const VanKampenDiagram& d_;
  std::vector<int> parent_;
  std::vector<bool> vertex_alive_, edge_alive_, face_alive_;
  std::vector<std::vector<int>> rotation_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> outer_;
  std::int64_t excised_ = 0;
};

void Collapser::substitute_dart(int from, int to) {
  auto subst = [&](std::vector<int>& seq) {
    for (int& d : seq) {
      if (d == from) d = to;
      else if (d == -from) d = -to;
    }
  };
  for (size_t f = 0; f < faces_.size(); ++f)
    if (face_alive_[f]) subst(faces_[f]);
  subst(outer_);
}

void Collapser::process_bigons(std::deque<int>& queue) {
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    if (!face_alive_[static_cast<size_t>(f)]) continue;
    auto& cyc = faces_[static_cast<size_t>(f)];
    if (cyc.size() != 2) continue;
    int d1 = cyc[0], d2 = cyc[1];
    if (d2 == -d1) continue;  // cap over a single edge; the sphere check eats it
    if (image_dart(d1) != image_dart(-d2))
      throw std::invalid_argument("bigon sides map to different target edges");
    size_t e2 = static_cast<size_t>(std::abs(d2) - 1);
    // remove d2's rotation slots, then redirect every reference to d2 onto -d1
    for (int v : {rtail(d2), rhead(d2)}) {
      auto& rot = rotation_[static_cast<size_t>(v)];
      rot.erase(std::remove_if(rot.begin(), rot.end(),
                               [&](int d) { return d == d2 || d == -d2; }),
                rot.end());
    }
    face_alive_[static_cast<size_t>(f)] = false;
    edge_alive_[e2] = false;
    substitute_dart(d2, -d1);
  }
}

void Collapser::excise_spheres(int vhat) {
  // split the complex at vhat; every piece not holding the boundary must be
  // a sphere (Euler count 2 with vhat included)
  std::map<int, int> comp;  // resolved vertex (!= vhat) -> component id
  int ncomp = 0;
  for (size_t v = 0; v < vertex_alive_.size(); ++v) {
    if (!vertex_alive_[v] || static_cast<int>(v) != find(static_cast<int>(v))) continue;
    if (static_cast<int>(v) == vhat) continue;
    if (comp.count(static_cast<int>(v))) continue;
    int id = ncomp++;
    std::vector<int> stack{static_cast<int>(v)};
    comp[static_cast<int>(v)] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int d : rotation_[static_cast<size_t>(x)]) {
        int y = rhead(d);
        if (y == vhat) continue;
        if (!comp.count(y)) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  if (ncomp <= 1) return;

  // main component: the one carrying the outer walk (or the basepoint)
  int main_comp = -1;
  if (!outer_.empty()) {
    for (int d : outer_) {
      int a = rtail(d);
      if (a != vhat) {
        main_comp = comp.at(a);
        break;
      }
      int b = rhead(d);
      if (b != vhat) {
        main_comp = comp.at(b);
        break;
      }
    }
  } else {
    int bp = find(d_.domain.basepoint);
    if (bp != vhat && comp.count(bp)) main_comp = comp.at(bp);
  }

  // per-piece cell counts (vhat contributes one vertex to every piece)
  std::vector<std::int64_t> nv(static_cast<size_t>(ncomp), 1), ne(static_cast<size_t>(ncomp), 0),
      nf(static_cast<size_t>(ncomp), 0);
  for (auto& [v, c] : comp) {
    (void)v;
    ++nv[static_cast<size_t>(c)];
  }
  std::vector<int> edge_comp(edge_alive_.size(), -1);
  for (size_t e = 0; e < edge_alive_.size(); ++e) {
    if (!edge_alive_[e]) continue;
    int a = find(d_.domain.edges[e].tail), b = find(d_.domain.edges[e].head);
    int c = a != vhat ? comp.at(a) : comp.at(b);
    if (a != vhat && b != vhat && comp.at(a) != comp.at(b))
      throw std::invalid_argument("edge spans two pieces after collapse");
    edge_comp[e] = c;
    ++ne[static_cast<size_t>(c)];
  }
  std::vector<int> face_comp(face_alive_.size(), -1);
  for (size_t f = 0; f < face_alive_.size(); ++f) {
    if (!face_alive_[f]) continue;
    int c = edge_comp[static_cast<size_t>(std::abs(faces_[f][0]) - 1)];
    for (int d : faces_[f])
      if (edge_comp[static_cast<size_t>(std::abs(d) - 1)] != c)
        throw std::invalid_argument("face spans two pieces after collapse");
    face_comp[f] = c;
    ++nf[static_cast<size_t>(c)];
  }

  for (int c = 0; c < ncomp; ++c) {
    if (c == main_comp) {
      // with a virtual cell capping the boundary this piece must be a sphere
      if (nv[static_cast<size_t>(c)] - ne[static_cast<size_t>(c)] + nf[static_cast<size_t>(c)] + 1 != 2)
        throw std::invalid_argument("main piece fails the capped sphere count");
      continue;
    }
    if (nv[static_cast<size_t>(c)] - ne[static_cast<size_t>(c)] + nf[static_cast<size_t>(c)] != 2)
      throw std::invalid_argument("pinched-off piece is not a sphere (non-manifold link)");
    // excise
    for (auto& [v, cc] : comp)
      if (cc == c) vertex_alive_[static_cast<size_t>(v)] = false;
    for (size_t e = 0; e < edge_alive_.size(); ++e)
      if (edge_alive_[e] && edge_comp[e] == c) edge_alive_[e] = false;
    for (size_t f = 0; f < face_alive_.size(); ++f)
      if (face_alive_[f] && face_comp[f] == c) face_alive_[f] = false;
    auto& rot = rotation_[static_cast<size_t>(vhat)];
    rot.erase(std::remove_if(rot.begin(), rot.end(),
                             [&](int d) { return !edge_alive_[static_cast<size_t>(std::abs(d) - 1)]; }),
              rot.end());
    ++excised_;
  }
}

bool Collapser::collapse_one_component(int tv) {
  // preimage subcomplex of target vertex tv: find one component with an edge
  std::vector<size_t> pre_edges;
  for (size_t e = 0; e < edge_alive_.size(); ++e)
    if (edge_alive_[e] && edge_degenerate_to(e, tv)) pre_edges.push_back(e);
  if (pre_edges.empty()) return false;

  // discover the component of the lowest-index degenerate edge
  std::set<int> Lv;
  std::set<size_t> Le;
  std::vector<int> stack;
  {
    size_t e0 = pre_edges.front();
    stack.push_back(find(d_.domain.edges[e0].tail));
    Lv.insert(stack.back());
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : rotation_[static_cast<size_t>(v)]) {
      size_t e = static_cast<size_t>(std::abs(d) - 1);
      if (!edge_alive_[e] || !edge_degenerate_to(e, tv)) continue;
      Le.insert(e);
      int w = rhead(d);
      if (Lv.insert(w).second) stack.push_back(w);
    }
  }

  // faces inside L: all their edges are degenerate to tv
  std::set<size_t> Lf;
  for (size_t f = 0; f < face_alive_.size(); ++f) {
    if (!face_alive_[f]) continue;
    if (d_.face_image[f].kind == VanKampenDiagram::FaceImage::Kind::Vertex &&
        d_.face_image[f].id == tv) {
      bool inside = true;
      for (int d : faces_[f])
        if (!Le.count(static_cast<size_t>(std::abs(d) - 1))) inside = false;
      if (inside) Lf.insert(f);
    }
  }

  // trace the neighborhood circuits to get the rotation at the merged vertex
  std::vector<int> leaving;  // non-L darts with origin in L
  for (int v : Lv)
    for (int d : rotation_[static_cast<size_t>(v)])
      if (!Le.count(static_cast<size_t>(std::abs(d) - 1))) leaving.push_back(d);
  std::vector<std::vector<int>> circuits;
  std::set<int> seen;
  auto rot_successor = [&](int at, int d) {
    const auto& rot = rotation_[static_cast<size_t>(at)];
    auto it = std::find(rot.begin(), rot.end(), d);
    if (it == rot.end()) throw std::logic_error("dart missing during circuit trace");
    ++it;
    return it == rot.end() ? rot.front() : *it;
  };
  for (int d0 : leaving) {
    if (seen.count(d0)) continue;
    std::vector<int> circuit;
    int d = d0;
    do {
      circuit.push_back(d);
      seen.insert(d);
      // rotate around the component: skip across degenerate edges
      int x = d;
      int at = rtail(d);
      while (true) {
        int n = rot_successor(at, x);
        if (!Le.count(static_cast<size_t>(std::abs(n) - 1))) {
          d = n;
          break;
        }
        at = rhead(n);
        x = -n;
      }
    } while (d != d0);
    circuits.push_back(std::move(circuit));
  }

  // quotient L to its minimum vertex
  int vhat = *Lv.begin();
  for (int v : Lv) {
    if (v == vhat) continue;
    parent_[static_cast<size_t>(v)] = vhat;
    vertex_alive_[static_cast<size_t>(v)] = false;
    rotation_[static_cast<size_t>(v)].clear();
  }
  vertex_alive_[static_cast<size_t>(vhat)] = true;
  rotation_[static_cast<size_t>(vhat)].clear();
  for (const auto& c : circuits)
    rotation_[static_cast<size_t>(vhat)].insert(rotation_[static_cast<size_t>(vhat)].end(), c.begin(),
                                                c.end());
  for (size_t e : Le) edge_alive_[e] = false;
  for (size_t f : Lf) face_alive_[f] = false;

  // drop the dead darts from the outer walk (degenerate boundary edges)
  outer_.erase(std::remove_if(outer_.begin(), outer_.end(),
                              [&](int d) { return Le.count(static_cast<size_t>(std::abs(d) - 1)) > 0; }),
               outer_.end());

  // squash the triangles that leaned on L
  std::deque<int> bigons;
  for (size_t f = 0; f < face_alive_.size(); ++f) {
    if (!face_alive_[f] || Lf.count(f)) continue;
    auto& cyc = faces_[f];
    size_t before = cyc.size();
    cyc.erase(std::remove_if(cyc.begin(), cyc.end(),
                             [&](int d) { return Le.count(static_cast<size_t>(std::abs(d) - 1)) > 0; }),
              cyc.end());
    if (cyc.size() != before) {
      if (cyc.size() != 2)
        throw std::invalid_argument("face adjacent to a preimage component is not a triangle");
      bigons.push_back(static_cast<int>(f));
    }
  }
  process_bigons(bigons);
  excise_spheres(vhat);
  return true;
}

CollapseReport Collapser::finish() {
  CollapseReport rep;
  rep.excised_sphere_count = excised_;

  VanKampenDiagram out;
  out.target = d_.target;
  out.degenerate = false;

  std::vector<int> vmap(vertex_alive_.size(), -1);
  for (size_t v = 0; v < vertex_alive_.size(); ++v)
    if (vertex_alive_[v] && static_cast<int>(v) == find(static_cast<int>(v)))
      vmap[v] = out.domain.vertex_count++;
  std::vector<int> emap(edge_alive_.size() + 1, 0);
  for (size_t e = 0; e < edge_alive_.size(); ++e) {
    if (!edge_alive_[e]) continue;
    emap[e + 1] = static_cast<int>(out.domain.edges.size()) + 1;
    out.domain.edges.push_back({vmap[static_cast<size_t>(find(d_.domain.edges[e].tail))],
                                vmap[static_cast<size_t>(find(d_.domain.edges[e].head))]});
    out.edge_image.push_back(d_.edge_image[e]);
  }
  auto remap = [&](const std::vector<int>& seq) {
    std::vector<int> r;
    for (int d : seq) r.push_back(d > 0 ? emap[static_cast<size_t>(d)] : -emap[static_cast<size_t>(-d)]);
    return r;
  };
  for (size_t f = 0; f < face_alive_.size(); ++f) {
    if (!face_alive_[f]) continue;
    out.domain.faces.push_back(remap(faces_[f]));
    out.face_image.push_back(d_.face_image[f]);
  }
  out.domain.rotation.resize(static_cast<size_t>(out.domain.vertex_count));
  for (size_t v = 0; v < vertex_alive_.size(); ++v)
    if (vmap[v] >= 0) out.domain.rotation[static_cast<size_t>(vmap[v])] = remap(rotation_[v]);
  out.domain.outer = remap(outer_);
  out.vertex_image.resize(static_cast<size_t>(out.domain.vertex_count));
  for (size_t v = 0; v < vertex_alive_.size(); ++v)
    if (vmap[v] >= 0) out.vertex_image[static_cast<size_t>(vmap[v])] = d_.vertex_image[v];

  int bp = vmap[static_cast<size_t>(find(d_.domain.basepoint))];
  if (bp < 0) bp = 0;
  if (!out.domain.outer.empty()) {
    // rotate the outer walk to start at the basepoint if it passes through,
    // else at its smallest vertex
    int start = -1;
    for (size_t i = 0; i < out.domain.outer.size() && start < 0; ++i)
      if (out.domain.dart_tail(out.domain.outer[i]) == bp) start = static_cast<int>(i);
    if (start < 0) {
      int best = out.domain.vertex_count;
      for (size_t i = 0; i < out.domain.outer.size(); ++i) {
        int v = out.domain.dart_tail(out.domain.outer[i]);
        if (v < best) {
          best = v;
          start = static_cast<int>(i);
        }
      }
    }
    std::rotate(out.domain.outer.begin(), out.domain.outer.begin() + start, out.domain.outer.end());
    out.domain.basepoint = out.domain.dart_tail(out.domain.outer[0]);
  } else {
    out.domain.basepoint = bp;
  }

  out.validate();
  rep.output = std::move(out);
  return rep;
}

CollapseReport Collapser::run() {
  for (int tv = 0; tv < d_.target.vertex_count; ++tv)
    while (collapse_one_component(tv)) {
    }
  // a single pass over target vertices removes every degenerate cell
  for (size_t e = 0; e < edge_alive_.size(); ++e)
    if (edge_alive_[e] && d_.edge_image[e].to_vertex)
      throw std::logic_error("degenerate edge survived collapse");
  return finish();
}

}  // namespace

CollapseReport collapse(const VanKampenDiagram& d) {
  d.validate();
  if (!d.degenerate) {
    CollapseReport rep;
    rep.output = d;
    rep.area_before = d.degenerate_area();
    rep.area_after = rep.area_before;
    return rep;
  }
  Collapser c(d);
  CollapseReport rep = c.run();
  rep.area_before = d.degenerate_area();
  rep.area_after = rep.output.degenerate_area();
  if (rep.area_after > rep.area_before) throw std::logic_error("collapse increased the area");
  std::vector<int> before = d.boundary_word();
  std::vector<int> after = rep.output.boundary_word();
  if (before != after) throw std::logic_error("collapse changed the boundary word");
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

using nlohmann::json;

std::string diagram_to_json(const VanKampenDiagram& d) {
  json j;
  j["vertices"] = d.domain.vertex_count;
  j["basepoint"] = d.domain.basepoint;
  json edges = json::array();
  for (const auto& e : d.domain.edges) edges.push_back({e.tail, e.head});
  j["edges"] = edges;
  j["faces"] = d.domain.faces;
  j["rotation"] = d.domain.rotation;
  j["boundary"] = d.domain.outer;
  j["degenerate"] = d.degenerate;

  json target;
  target["vertices"] = d.target.vertex_count;
  json tedges = json::array();
  for (const auto& e : d.target.edges) tedges.push_back({e.tail, e.head});
  target["edges"] = tedges;
  target["faces"] = d.target.faces;
  j["target"] = target;

  json map;
  map["vertices"] = d.vertex_image;
  json em = json::array();
  for (const auto& e : d.edge_image) {
    if (e.to_vertex)
      em.push_back(json{{"vertex", e.id}});
    else
      em.push_back(json{{"edge", e.id}, {"rev", e.reversed}});
  }
  map["edges"] = em;
  json fm = json::array();
  for (const auto& f : d.face_image) {
    switch (f.kind) {
      case VanKampenDiagram::FaceImage::Kind::Face:
        fm.push_back(json{{"face", f.id}});
        break;
      case VanKampenDiagram::FaceImage::Kind::Edge:
        fm.push_back(json{{"edge", f.id}});
        break;
      case VanKampenDiagram::FaceImage::Kind::Vertex:
        fm.push_back(json{{"vertex", f.id}});
        break;
    }
  }
  map["faces"] = fm;
  j["map"] = map;
  return j.dump(2) + "\n";
}

VanKampenDiagram diagram_from_json(const std::string& text) {
  json j = json::parse(text);
  VanKampenDiagram d;
  d.domain.vertex_count = j.at("vertices").get<int>();
  d.domain.basepoint = j.value("basepoint", 0);
  for (const auto& e : j.at("edges")) d.domain.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  d.domain.faces = j.at("faces").get<std::vector<std::vector<int>>>();
  d.domain.rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
  d.domain.outer = j.at("boundary").get<std::vector<int>>();
  d.degenerate = j.at("degenerate").get<bool>();

  const json& t = j.at("target");
  d.target.vertex_count = t.at("vertices").get<int>();
  for (const auto& e : t.at("edges")) d.target.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  d.target.faces = t.at("faces").get<std::vector<std::vector<int>>>();
  d.target.simplicial = d.target.simplicial_invariants_hold();

  const json& m = j.at("map");
  d.vertex_image = m.at("vertices").get<std::vector<int>>();
  for (const auto& e : m.at("edges")) {
    VanKampenDiagram::EdgeImage im;
    if (e.contains("vertex")) {
      im.to_vertex = true;
      im.id = e.at("vertex").get<int>();
    } else {
      im.id = e.at("edge").get<int>();
      im.reversed = e.value("rev", false);
    }
    d.edge_image.push_back(im);
  }
  for (const auto& f : m.at("faces")) {
    VanKampenDiagram::FaceImage im;
    if (f.contains("face")) {
      im.kind = VanKampenDiagram::FaceImage::Kind::Face;
      im.id = f.at("face").get<int>();
    } else if (f.contains("edge")) {
      im.kind = VanKampenDiagram::FaceImage::Kind::Edge;
      im.id = f.at("edge").get<int>();
    } else {
      im.kind = VanKampenDiagram::FaceImage::Kind::Vertex;
      im.id = f.at("vertex").get<int>();
    }
    d.face_image.push_back(im);
  }
  d.validate();
  return d;
}

}  // namespace dehn::diagram
