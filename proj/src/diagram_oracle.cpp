#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dehn/diagram.hpp"

namespace dehn::diagram {

namespace {

// Boundary words are cyclic sequences of signed 1-based target-edge indices.
using Cyclic = std::vector<int>;

std::string key_of(const Cyclic& w) {
  // lexicographically minimal rotation as canonical form
  if (w.empty()) return {};
  std::string best;
  for (size_t s = 0; s < w.size(); ++s) {
    std::string cur;
    cur.reserve(w.size() * 3);
    for (size_t i = 0; i < w.size(); ++i) {
      cur += std::to_string(w[(s + i) % w.size()]);
      cur += ',';
    }
    if (best.empty() || cur < best) best = std::move(cur);
  }
  return best;
}

// A peeling rewrite: an occurrence of `exposed` in the boundary may be
// replaced by `hidden`, undoing the attachment of one cell.
struct Rewrite {
  Cyclic exposed;  // nonempty
  Cyclic hidden;   // may be empty
};

Cyclic invert(const Cyclic& w) {
  Cyclic r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

std::vector<Rewrite> build_rewrites(const complex2::Complex2& target) {
  std::vector<Rewrite> rewrites;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& face : target.faces) {
    for (const Cyclic& base : {face, invert(face)}) {
      for (size_t rot = 0; rot < base.size(); ++rot) {
        Cyclic cyc;
        for (size_t i = 0; i < base.size(); ++i) cyc.push_back(base[(rot + i) % base.size()]);
        // cyc = shared-path-reversed (length m) followed by the exposed part
        for (size_t m = 0; m < cyc.size(); ++m) {
          Rewrite rw;
          rw.exposed.assign(cyc.begin() + static_cast<std::ptrdiff_t>(m), cyc.end());
          Cyclic shared_rev(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(m));
          rw.hidden = invert(shared_rev);
          std::string ek, hk;
          for (int d : rw.exposed) ek += std::to_string(d) + ",";
          for (int d : rw.hidden) hk += std::to_string(d) + ",";
          if (seen.insert({ek, hk}).second) rewrites.push_back(std::move(rw));
        }
      }
    }
  }
  return rewrites;
}

// conservative lower bound on the cells still needed, from edge exponent sums
struct ExponentBound {
  bool feasible = true;
  std::vector<std::vector<std::int64_t>> face_exponents;  // per face, per edge
  size_t edge_count = 0;

  std::int64_t bound(const Cyclic& w) const {
    std::vector<std::int64_t> exp(edge_count, 0);
    for (int d : w) exp[static_cast<size_t>(std::abs(d) - 1)] += d > 0 ? 1 : -1;
    std::int64_t h = 0;
    for (size_t e = 0; e < edge_count; ++e) {
      std::int64_t g = 0;  // gcd of face exponents on edge e
      std::int64_t maxabs = 0;
      for (const auto& fe : face_exponents) {
        g = std::gcd(g, fe[e]);
        maxabs = std::max<std::int64_t>(maxabs, std::llabs(fe[e]));
      }
      if (g == 0) {
        if (exp[e] != 0) return -1;  // unreachable
        continue;
      }
      if (exp[e] % g != 0) return -1;
      h = std::max<std::int64_t>(h, (std::llabs(exp[e]) + maxabs - 1) / maxabs);
    }
    return h;
  }
};

}  // namespace

std::optional<std::int64_t> enumerate_area_oracle(const std::vector<int>& boundary_word,
                                                  const complex2::Complex2& target,
                                                  std::int64_t max_cells) {
  target.validate();
  if (target.faces.empty()) {
    // only spur contractions available
    Cyclic w = boundary_word;
    bool changed = true;
    while (changed && !w.empty()) {
      changed = false;
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == -w[(i + 1) % w.size()]) {
          size_t j = (i + 1) % w.size();
          if (j > i) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          } else {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            w.erase(w.begin());
          }
          changed = true;
          break;
        }
      }
    }
    if (w.empty()) return 0;
    return std::nullopt;
  }

  std::vector<Rewrite> rewrites = build_rewrites(target);
  size_t max_face = 0;
  for (const auto& f : target.faces) max_face = std::max(max_face, f.size());

  ExponentBound eb;
  eb.edge_count = target.edges.size();
  for (const auto& f : target.faces) {
    std::vector<std::int64_t> fe(eb.edge_count, 0);
    for (int d : f) fe[static_cast<size_t>(std::abs(d) - 1)] += d > 0 ? 1 : -1;
    eb.face_exponents.push_back(std::move(fe));
  }

  std::int64_t growth = std::max<std::int64_t>(1, static_cast<std::int64_t>(max_face) - 2);
  std::int64_t max_len = static_cast<std::int64_t>(boundary_word.size()) + max_cells * growth;

  // 0-1 BFS over canonical cyclic words: spur contractions are free, cell
  // peels cost one
  std::unordered_map<std::string, std::int64_t> dist;
  std::deque<std::pair<Cyclic, std::int64_t>> queue;
  auto push_state = [&](Cyclic w, std::int64_t g, bool front) {
    std::int64_t h = eb.bound(w);
    if (h < 0 || g + h > max_cells) return;
    if (static_cast<std::int64_t>(w.size()) > max_len) return;
    std::string k = key_of(w);
    auto it = dist.find(k);
    if (it != dist.end() && it->second <= g) return;
    dist[k] = g;
    if (front)
      queue.emplace_front(std::move(w), g);
    else
      queue.emplace_back(std::move(w), g);
  };

  push_state(boundary_word, 0, true);
  while (!queue.empty()) {
    auto [w, g] = queue.front();
    queue.pop_front();
    auto it = dist.find(key_of(w));
    if (it != dist.end() && it->second < g) continue;
    if (w.empty()) return g;

    size_t n = w.size();
    // free spur contractions
    for (size_t i = 0; i < n; ++i) {
      if (w[i] == -w[(i + 1) % n]) {
        Cyclic next;
        for (size_t j = 0; j < n; ++j)
          if (j != i && j != (i + 1) % n) next.push_back(w[j]);
        push_state(std::move(next), g, true);
      }
    }
    if (g == max_cells) continue;
    // peel one cell
    for (const Rewrite& rw : rewrites) {
      size_t k = rw.exposed.size();
      if (k > n) continue;
      for (size_t pos = 0; pos < n; ++pos) {
        bool match = true;
        for (size_t j = 0; j < k && match; ++j)
          if (w[(pos + j) % n] != rw.exposed[j]) match = false;
        if (!match) continue;
        Cyclic next;
        next.reserve(n - k + rw.hidden.size());
        next.insert(next.end(), rw.hidden.begin(), rw.hidden.end());
        for (size_t j = k; j < n; ++j) next.push_back(w[(pos + j) % n]);
        push_state(std::move(next), g + 1, false);
      }
    }
  }
  return std::nullopt;
}

}  // namespace dehn::diagram
