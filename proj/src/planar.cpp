#include "dehn/planar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dehn::planar {

std::int64_t PlanarComplex::euler_characteristic() const {
  return static_cast<std::int64_t>(vertex_count) - static_cast<std::int64_t>(edges.size()) +
         static_cast<std::int64_t>(faces.size());
}

bool PlanarComplex::connected() const {
  if (vertex_count == 0) return true;
  std::vector<char> seen(static_cast<size_t>(vertex_count), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : rotation[static_cast<size_t>(v)]) {
      int w = dart_head(d);
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count;
}

int PlanarComplex::face_successor(int d) const {
  int v = dart_head(d);
  const auto& rot = rotation[static_cast<size_t>(v)];
  auto it = std::find(rot.begin(), rot.end(), -d);
  if (it == rot.end()) throw std::invalid_argument("dart missing from rotation at its head");
  if (it == rot.begin()) it = rot.end();
  --it;
  return *it;
}

std::vector<int> PlanarComplex::face_corners(int f) const {
  std::vector<int> corners;
  for (int d : faces[static_cast<size_t>(f)]) corners.push_back(dart_tail(d));
  return corners;
}

bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t s = 0; s < a.size(); ++s) {
    bool ok = true;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[(i + s) % b.size()]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

void PlanarComplex::validate() const {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (rotation.size() != static_cast<size_t>(vertex_count))
    throw std::invalid_argument("rotation table size mismatch");
  for (const Edge& e : edges)
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");

  // every dart appears exactly once, at its origin
  std::map<int, int> dart_vertex;
  for (int v = 0; v < vertex_count; ++v)
    for (int d : rotation[static_cast<size_t>(v)]) {
      if (d == 0 || std::abs(d) > static_cast<int>(edges.size()))
        throw std::invalid_argument("rotation dart out of range");
      if (dart_tail(d) != v) throw std::invalid_argument("rotation dart not at its origin vertex");
      if (!dart_vertex.emplace(d, v).second)
        throw std::invalid_argument("dart repeated in rotation system");
    }
  if (dart_vertex.size() != 2 * edges.size())
    throw std::invalid_argument("rotation system missing darts");

  for (const auto& cyc : faces) {
    if (cyc.empty()) throw std::invalid_argument("empty face cycle");
    for (size_t i = 0; i < cyc.size(); ++i)
      if (dart_head(cyc[i]) != dart_tail(cyc[(i + 1) % cyc.size()]))
        throw std::invalid_argument("face cycle not a closed edge path");
  }
  for (size_t i = 0; i < outer.size(); ++i)
    if (dart_head(outer[i]) != dart_tail(outer[(i + 1) % outer.size()]))
      throw std::invalid_argument("outer walk not closed");
  if (!outer.empty() && dart_tail(outer[0]) != basepoint)
    throw std::invalid_argument("outer walk does not start at the basepoint");
  if (outer.empty() && vertex_count > 0 && (basepoint < 0 || basepoint >= vertex_count))
    throw std::invalid_argument("basepoint out of range");

  if (!connected()) throw std::invalid_argument("complex not connected");
  if (vertex_count > 0 && euler_characteristic() != 1)
    throw std::invalid_argument("Euler characteristic is not 1");

  // trace orbits of the rotation system and match them to faces + outer
  std::set<int> visited;
  std::vector<std::vector<int>> orbits;
  for (int e = 1; e <= static_cast<int>(edges.size()); ++e)
    for (int d : {e, -e}) {
      if (visited.count(d)) continue;
      std::vector<int> orbit;
      int x = d;
      do {
        orbit.push_back(x);
        visited.insert(x);
        x = face_successor(x);
      } while (x != d);
      orbits.push_back(std::move(orbit));
    }
  if (orbits.size() != faces.size() + (edges.empty() ? 0 : 1))
    throw std::invalid_argument("rotation system orbits do not count faces + outer (genus?)");

  std::vector<bool> used(orbits.size(), false);
  for (const auto& cyc : faces) {
    bool found = false;
    for (size_t i = 0; i < orbits.size(); ++i) {
      if (used[i]) continue;
      if (cyclically_equal(orbits[i], cyc)) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("face cycle is not an orbit of the rotation system");
  }
  if (!edges.empty()) {
    size_t rem = 0;
    for (size_t i = 0; i < orbits.size(); ++i)
      if (!used[i]) rem = i;
    if (!cyclically_equal(orbits[rem], outer))
      throw std::invalid_argument("outer walk is not the remaining orbit");
  } else if (!outer.empty()) {
    throw std::invalid_argument("outer walk nonempty on edgeless complex");
  }
}

}  // namespace dehn::planar
