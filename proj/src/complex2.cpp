#include "dehn/complex2.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dehn::complex2 {

std::vector<int> Complex2::face_corners(int f) const {
  std::vector<int> corners;
  for (int d : faces[static_cast<size_t>(f)]) corners.push_back(dart_tail(d));
  return corners;
}

std::int64_t Complex2::euler_characteristic() const {
  return static_cast<std::int64_t>(vertex_count) - static_cast<std::int64_t>(edges.size()) +
         static_cast<std::int64_t>(faces.size());
}

void Complex2::validate() const {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges)
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& cyc = faces[f];
    if (cyc.empty()) throw std::invalid_argument("empty face cycle");
    for (size_t i = 0; i < cyc.size(); ++i) {
      int d = cyc[i];
      if (d == 0 || std::abs(d) > static_cast<int>(edges.size()))
        throw std::invalid_argument("face dart out of range");
      int nxt = cyc[(i + 1) % cyc.size()];
      if (dart_head(d) != dart_tail(nxt))
        throw std::invalid_argument("face attaching cycle is not a closed edge path");
    }
  }
  if (simplicial && !simplicial_invariants_hold())
    throw std::invalid_argument("complex flagged simplicial but invariants fail");
}

bool Complex2::simplicial_invariants_hold() const {
  std::set<std::pair<int, int>> edge_pairs;
  for (const Edge& e : edges) {
    if (e.tail == e.head) return false;
    auto key = std::minmax(e.tail, e.head);
    if (!edge_pairs.insert(key).second) return false;
  }
  std::set<std::array<int, 3>> triples;
  for (size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].size() != 3) return false;
    std::vector<int> c = face_corners(static_cast<int>(f));
    std::array<int, 3> key{c[0], c[1], c[2]};
    std::sort(key.begin(), key.end());
    if (key[0] == key[1] || key[1] == key[2]) return false;
    if (!triples.insert(key).second) return false;
  }
  return true;
}

Complex2 presentation_complex(const presentation::Presentation& p) {
  p.validate();
  Complex2 c;
  c.vertex_count = 1;
  for (int g = 0; g < p.generator_count(); ++g) c.edges.push_back({0, 0});
  for (const auto& rel : p.relators) {
    if (rel.empty()) throw std::invalid_argument("empty relator");
    std::vector<int> cyc;
    for (auto l : rel.letters) cyc.push_back(static_cast<int>(l));
    c.faces.push_back(std::move(cyc));
  }
  c.validate();
  return c;
}

namespace {

bool face_is_clean_triangle(const Complex2& c, int f) {
  const auto& cyc = c.faces[static_cast<size_t>(f)];
  if (cyc.size() != 3) return false;
  std::vector<int> corners = c.face_corners(f);
  if (corners[0] == corners[1] || corners[1] == corners[2] || corners[0] == corners[2]) return false;
  std::set<int> es{std::abs(cyc[0]), std::abs(cyc[1]), std::abs(cyc[2])};
  return es.size() == 3;
}

// Cone every face that is not already a clean triangle.
Complex2 cone_pass(const Complex2& in, std::vector<int>* origin) {
  Complex2 out;
  out.vertex_count = in.vertex_count;
  out.edges = in.edges;
  origin->clear();
  for (size_t f = 0; f < in.faces.size(); ++f) {
    if (face_is_clean_triangle(in, static_cast<int>(f))) {
      out.faces.push_back(in.faces[f]);
      origin->push_back(static_cast<int>(f));
      continue;
    }
    const auto& cyc = in.faces[f];
    int center = out.vertex_count++;
    size_t k = cyc.size();
    std::vector<int> spokes(k);  // one per corner instance: corner_j -> center
    for (size_t j = 0; j < k; ++j) {
      spokes[j] = static_cast<int>(out.edges.size()) + 1;
      out.edges.push_back({in.dart_tail(cyc[j]), center});
    }
    for (size_t j = 0; j < k; ++j) {
      out.faces.push_back({cyc[j], spokes[(j + 1) % k], -spokes[j]});
      origin->push_back(static_cast<int>(f));
    }
  }
  return out;
}

// Barycentric subdivision of a complex whose faces are all triangles
// (loop edges and parallel edges allowed).
Complex2 barycentric_pass(const Complex2& in, std::vector<int>* origin) {
  Complex2 out;
  out.vertex_count = in.vertex_count;
  std::vector<int> mid(in.edges.size());
  std::vector<int> half1(in.edges.size()), half2(in.edges.size());  // 1-based edge ids
  for (size_t e = 0; e < in.edges.size(); ++e) {
    mid[e] = out.vertex_count++;
    half1[e] = static_cast<int>(out.edges.size()) + 1;
    out.edges.push_back({in.edges[e].tail, mid[e]});
    half2[e] = static_cast<int>(out.edges.size()) + 1;
    out.edges.push_back({mid[e], in.edges[e].head});
  }
  origin->clear();
  for (size_t f = 0; f < in.faces.size(); ++f) {
    const auto& cyc = in.faces[f];
    if (cyc.size() != 3) throw std::logic_error("barycentric pass expects triangles");
    int center = out.vertex_count++;
    int corner_spoke[3], mid_spoke[3];
    for (int j = 0; j < 3; ++j) {
      corner_spoke[j] = static_cast<int>(out.edges.size()) + 1;
      out.edges.push_back({in.dart_tail(cyc[static_cast<size_t>(j)]), center});
      mid_spoke[j] = static_cast<int>(out.edges.size()) + 1;
      out.edges.push_back({mid[static_cast<size_t>(std::abs(cyc[static_cast<size_t>(j)]) - 1)], center});
    }
    for (int j = 0; j < 3; ++j) {
      int d = cyc[static_cast<size_t>(j)];
      size_t e = static_cast<size_t>(std::abs(d) - 1);
      // halves of side j, oriented along the dart
      int first = d > 0 ? half1[e] : -half2[e];
      int second = d > 0 ? half2[e] : -half1[e];
      out.faces.push_back({first, mid_spoke[j], -corner_spoke[j]});
      origin->push_back(static_cast<int>(f));
      out.faces.push_back({second, corner_spoke[(j + 1) % 3], -mid_spoke[j]});
      origin->push_back(static_cast<int>(f));
    }
  }
  return out;
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> r(outer.size());
  for (size_t i = 0; i < outer.size(); ++i) r[i] = inner[static_cast<size_t>(outer[i])];
  return r;
}

}  // namespace

TriangulateResult triangulate(const Complex2& c) {
  c.validate();
  TriangulateResult res;
  if (c.simplicial_invariants_hold()) {
    res.complex = c;
    res.complex.simplicial = true;
    res.face_origin.resize(c.faces.size());
    for (size_t f = 0; f < c.faces.size(); ++f) res.face_origin[f] = static_cast<int>(f);
    return res;
  }
  std::vector<int> origin;
  Complex2 cur = cone_pass(c, &origin);
  for (int pass = 0; pass < 4; ++pass) {
    if (cur.simplicial_invariants_hold()) {
      cur.simplicial = true;
      cur.validate();
      res.complex = std::move(cur);
      res.face_origin = std::move(origin);
      return res;
    }
    std::vector<int> step;
    cur = barycentric_pass(cur, &step);
    origin = compose(step, origin);
  }
  throw std::logic_error("subdivision did not reach a simplicial complex");
}

Complex2 standard_model(const std::string& name, int size) {
  if (name == "single_triangle") {
    Complex2 c;
    c.vertex_count = 3;
    c.edges = {{0, 1}, {1, 2}, {2, 0}};
    c.faces = {{1, 2, 3}};
    c.simplicial = true;
    c.validate();
    return c;
  }
  if (name == "disc_grid" || name == "annulus") {
    bool ring = name == "annulus";
    int n = ring ? size + 2 : size;
    if (size < 1) throw std::invalid_argument(name + " needs size >= 1");
    auto vid = [n](int i, int j) { return j * (n + 1) + i; };
    Complex2 c;
    c.vertex_count = (n + 1) * (n + 1);
    std::map<std::pair<int, int>, int> eid;  // (vid_a, vid_b) directed -> 1-based id
    auto add_edge = [&](int a, int b) {
      int id = static_cast<int>(c.edges.size()) + 1;
      c.edges.push_back({a, b});
      eid[{a, b}] = id;
      return id;
    };
    auto dart = [&](int a, int b) {
      auto it = eid.find({a, b});
      if (it != eid.end()) return it->second;
      return -eid.at({b, a});
    };
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < n; ++i) add_edge(vid(i, j), vid(i + 1, j));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < n; ++j) add_edge(vid(i, j), vid(i, j + 1));
    auto in_hole = [&](int i, int j) {
      return ring && i >= 1 && i <= n - 2 && j >= 1 && j <= n - 2;
    };
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (!in_hole(i, j)) add_edge(vid(i + 1, j), vid(i, j + 1));  // anti-diagonal
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (in_hole(i, j)) continue;
        // lower: (i,j) -> (i+1,j) -> (i,j+1); upper: (i+1,j) -> (i+1,j+1) -> (i,j+1)
        c.faces.push_back({dart(vid(i, j), vid(i + 1, j)), dart(vid(i + 1, j), vid(i, j + 1)),
                           dart(vid(i, j + 1), vid(i, j))});
        c.faces.push_back({dart(vid(i + 1, j), vid(i + 1, j + 1)),
                           dart(vid(i + 1, j + 1), vid(i, j + 1)),
                           dart(vid(i, j + 1), vid(i + 1, j))});
      }
    if (ring) {
      // drop cells of the hole that ended up unused
      std::vector<bool> edge_used(c.edges.size(), false);
      for (const auto& f : c.faces)
        for (int d : f) edge_used[static_cast<size_t>(std::abs(d) - 1)] = true;
      std::vector<int> emap(c.edges.size() + 1, 0);
      Complex2 out;
      std::vector<bool> vertex_used(static_cast<size_t>(c.vertex_count), false);
      for (size_t e = 0; e < c.edges.size(); ++e)
        if (edge_used[e]) {
          vertex_used[static_cast<size_t>(c.edges[e].tail)] = true;
          vertex_used[static_cast<size_t>(c.edges[e].head)] = true;
        }
      std::vector<int> vmap(static_cast<size_t>(c.vertex_count), -1);
      for (int v = 0; v < c.vertex_count; ++v)
        if (vertex_used[static_cast<size_t>(v)]) vmap[static_cast<size_t>(v)] = out.vertex_count++;
      for (size_t e = 0; e < c.edges.size(); ++e)
        if (edge_used[e]) {
          emap[e + 1] = static_cast<int>(out.edges.size()) + 1;
          out.edges.push_back({vmap[static_cast<size_t>(c.edges[e].tail)],
                               vmap[static_cast<size_t>(c.edges[e].head)]});
        }
      for (const auto& f : c.faces) {
        std::vector<int> cyc;
        for (int d : f) cyc.push_back(d > 0 ? emap[static_cast<size_t>(d)] : -emap[static_cast<size_t>(-d)]);
        out.faces.push_back(std::move(cyc));
      }
      out.simplicial = true;
      out.validate();
      return out;
    }
    c.simplicial = true;
    c.validate();
    return c;
  }
  throw std::invalid_argument("unknown standard model: " + name);
}

std::string serialize_complex(const Complex2& c) {
  std::ostringstream out;
  out << "V " << c.vertex_count << "\n";
  for (const auto& e : c.edges) out << "E " << e.tail << " " << e.head << "\n";
  for (const auto& f : c.faces) {
    out << "F";
    for (int d : f) out << " " << d;
    out << "\n";
  }
  return out.str();
}

Complex2 parse_complex(const std::string& text) {
  Complex2 c;
  std::istringstream in(text);
  std::string line;
  bool have_v = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "V") {
      if (!(ls >> c.vertex_count)) throw std::invalid_argument("bad V line");
      have_v = true;
    } else if (tag == "E") {
      Complex2::Edge e;
      if (!(ls >> e.tail >> e.head)) throw std::invalid_argument("bad E line");
      c.edges.push_back(e);
    } else if (tag == "F") {
      std::vector<int> cyc;
      int d;
      while (ls >> d) cyc.push_back(d);
      if (cyc.empty()) throw std::invalid_argument("empty F line");
      c.faces.push_back(std::move(cyc));
    } else {
      throw std::invalid_argument("unknown line in complex file: " + line);
    }
  }
  if (!have_v) throw std::invalid_argument("complex file missing V line");
  c.simplicial = c.simplicial_invariants_hold();
  c.validate();
  return c;
}

}  // namespace dehn::complex2
