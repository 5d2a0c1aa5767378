#include "dehn/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dehn::presentation {

Word Word::inverse() const {
  Word r;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

Word Word::cycled(size_t k) const {
  Word r;
  if (letters.empty()) return r;
  k %= letters.size();
  r.letters.insert(r.letters.end(), letters.begin() + k, letters.end());
  r.letters.insert(r.letters.end(), letters.begin(), letters.begin() + k);
  return r;
}

bool Word::reduced() const {
  for (size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == -letters[i + 1]) return false;
  return true;
}

Word free_reduce(const Word& w) {
  Word r;
  for (Letter l : w.letters) {
    if (!r.letters.empty() && r.letters.back() == -l)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

void Presentation::validate() const {
  if (generator_names.empty() || generator_names.size() > 26)
    throw std::invalid_argument("presentation needs 1..26 generators");
  std::set<char> seen;
  for (char c : generator_names) {
    if (c < 'a' || c > 'z') throw std::invalid_argument("generator names must be lowercase letters");
    if (!seen.insert(c).second) throw std::invalid_argument("duplicate generator name");
  }
  for (const Word& r : relators) {
    if (r.empty()) throw std::invalid_argument("empty relator");
    for (Letter l : r.letters) {
      int k = std::abs(l);
      if (k < 1 || k > generator_count()) throw std::invalid_argument("relator letter out of range");
    }
    if (!r.reduced()) throw std::invalid_argument("relator not freely reduced");
    if (r.size() > 1 && r.letters.front() == -r.letters.back())
      throw std::invalid_argument("relator not cyclically reduced");
  }
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "gen") {
      std::string name;
      while (ls >> name) {
        if (name.size() != 1) throw std::invalid_argument("generator names are single letters: " + name);
        p.generator_names.push_back(name[0]);
      }
    } else if (tag == "rel") {
      std::string body;
      ls >> body;
      if (body.empty()) throw std::invalid_argument("empty relator line");
      Word w;
      for (char c : body) {
        char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        auto it = std::find(p.generator_names.begin(), p.generator_names.end(), low);
        if (it == p.generator_names.end())
          throw std::invalid_argument(std::string("unknown generator in relator: ") + c);
        Letter k = static_cast<Letter>(1 + (it - p.generator_names.begin()));
        w.letters.push_back(std::islower(static_cast<unsigned char>(c)) ? k : static_cast<Letter>(-k));
      }
      p.relators.push_back(std::move(w));
    } else {
      throw std::invalid_argument("unknown line in presentation file: " + line);
    }
  }
  p.validate();
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gen";
  for (char c : p.generator_names) out << " " << c;
  out << "\n";
  for (const Word& r : p.relators) out << "rel " << word_to_string(r, p) << "\n";
  return out.str();
}

Word parse_word(const std::string& text, const Presentation& p) {
  Word w;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = std::find(p.generator_names.begin(), p.generator_names.end(), low);
    if (it == p.generator_names.end())
      throw std::invalid_argument(std::string("unknown generator letter: ") + c);
    Letter k = static_cast<Letter>(1 + (it - p.generator_names.begin()));
    w.letters.push_back(std::islower(static_cast<unsigned char>(c)) ? k : static_cast<Letter>(-k));
  }
  return w;
}

std::string word_to_string(const Word& w, const Presentation& p) {
  std::string s;
  for (Letter l : w.letters) {
    char name = p.generator_names.at(static_cast<size_t>(std::abs(l) - 1));
    s.push_back(l > 0 ? name : static_cast<char>(std::toupper(static_cast<unsigned char>(name))));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Family recognition

namespace {

// relator of shape g^m (all letters equal); returns (gen, m) with m >= 1
std::optional<std::pair<int, std::uint64_t>> as_power(const Word& r) {
  if (r.empty()) return std::nullopt;
  Letter l = r.letters.front();
  for (Letter x : r.letters)
    if (x != l) return std::nullopt;
  return std::make_pair(std::abs(l), r.size());
}

// relator is a commutator x y x^-1 y^-1 of two distinct generators, up to
// rotation and inversion; returns the unordered generator pair
std::optional<std::pair<int, int>> as_commutator(const Word& r) {
  if (r.size() != 4) return std::nullopt;
  for (size_t k = 0; k < 4; ++k) {
    Word c = r.cycled(k);
    const auto& L = c.letters;
    if (L[0] == -L[2] && L[1] == -L[3] && std::abs(L[0]) != std::abs(L[1])) {
      int x = std::abs(L[0]), y = std::abs(L[1]);
      return std::make_pair(std::min(x, y), std::max(x, y));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilyOracle> recognize_family(const Presentation& p) {
  int g = p.generator_count();
  if (p.relators.empty()) {
    FamilyOracle o;
    o.kind = FamilyOracle::Kind::Free;
    return o;
  }

  std::map<int, std::uint64_t> powers;
  std::set<std::pair<int, int>> commuting;
  for (const Word& r : p.relators) {
    if (auto pw = as_power(r)) {
      auto [gen, m] = *pw;
      auto [it, inserted] = powers.emplace(gen, m);
      if (!inserted && it->second != m) return std::nullopt;
      continue;
    }
    if (auto cm = as_commutator(r)) {
      commuting.insert(*cm);
      continue;
    }
    return std::nullopt;
  }

  // Factors: connected components of the non-commutation graph.
  std::vector<int> factor(g + 1, -1);
  std::vector<std::vector<int>> members;
  for (int s = 1; s <= g; ++s) {
    if (factor[s] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.push_back({});
    std::vector<int> stack{s};
    factor[s] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members[id].push_back(x);
      for (int y = 1; y <= g; ++y) {
        if (factor[y] >= 0 || y == x) continue;
        auto key = std::make_pair(std::min(x, y), std::max(x, y));
        if (!commuting.count(key)) {
          factor[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(members[id].begin(), members[id].end());
  }

  // Cross-factor pairs all commute, in-factor pairs never do, and power
  // relators sit on singleton factors only.
  for (int x = 1; x <= g; ++x)
    for (int y = x + 1; y <= g; ++y) {
      bool cm = commuting.count({x, y}) > 0;
      if (factor[x] == factor[y] && cm) return std::nullopt;
      if (factor[x] != factor[y] && !cm) return std::nullopt;
    }
  for (auto& [gen, m] : powers)
    if (members[static_cast<size_t>(factor[gen])].size() != 1) return std::nullopt;

  FamilyOracle o;
  o.kind = FamilyOracle::Kind::DirectProduct;
  o.factor_of_generator.assign(factor.begin(), factor.end());
  o.factor_generators = members;
  o.factor_modulus.assign(members.size(), 0);
  for (auto& [gen, m] : powers) o.factor_modulus[static_cast<size_t>(factor[gen])] = m;
  return o;
}

bool FamilyOracle::is_trivial_word(const Word& w, const Presentation&) const {
  if (kind == Kind::Free) return free_reduce(w).empty();
  for (size_t f = 0; f < factor_generators.size(); ++f) {
    Word proj;
    for (Letter l : w.letters)
      if (factor_of_generator[static_cast<size_t>(std::abs(l))] == static_cast<int>(f))
        proj.letters.push_back(l);
    if (factor_generators[f].size() == 1) {
      std::int64_t exp = 0;
      for (Letter l : proj.letters) exp += l > 0 ? 1 : -1;
      std::uint64_t m = factor_modulus[f];
      if (m == 0) {
        if (exp != 0) return false;
      } else if (exp % static_cast<std::int64_t>(m) != 0) {
        return false;
      }
    } else {
      if (!free_reduce(proj).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Area search

namespace {

std::string encode(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w.letters)
    s.push_back(l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1));
  return s;
}

Word decode(const std::string& s) {
  Word w;
  for (char c : s)
    w.letters.push_back(c >= 'a' ? static_cast<Letter>(c - 'a' + 1)
                                 : static_cast<Letter>(-(c - 'A' + 1)));
  return w;
}

// Winding numbers of the lattice loop traced by a word over the standard Z^2
// presentation (generator 1 = +x, generator 2 = +y); the L1 norm over unit
// cells lower-bounds the area, and changes by at most 1 per relator move.
std::int64_t winding_l1(const Word& w) {
  struct VEdge {
    int x, y, dir;
  };
  std::vector<VEdge> vert;
  int x = 0, y = 0;
  int minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (Letter l : w.letters) {
    if (std::abs(l) == 1) {
      x += l > 0 ? 1 : -1;
    } else {
      if (l > 0) {
        vert.push_back({x, y, +1});
        y += 1;
      } else {
        y -= 1;
        vert.push_back({x, y, -1});
      }
    }
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  std::int64_t total = 0;
  for (int cy = miny - 1; cy <= maxy; ++cy) {
    for (int cx = minx - 1; cx <= maxx; ++cx) {
      // winding around (cx+1/2, cy+1/2) via +x ray crossings
      std::int64_t wind = 0;
      for (const VEdge& e : vert)
        if (e.x > cx && e.y == cy) wind += e.dir;
      total += std::llabs(wind);
    }
  }
  return total;
}

struct Heuristic {
  bool z2 = false;
  // per-generator modulus for singleton cyclic factors with a power relator
  std::vector<std::uint64_t> modulus;

  std::int64_t operator()(const Word& w) const {
    std::int64_t h = 0;
    if (z2) h = winding_l1(w);
    if (!modulus.empty()) {
      std::vector<std::int64_t> exp(modulus.size(), 0);
      for (Letter l : w.letters) exp[static_cast<size_t>(std::abs(l))] += l > 0 ? 1 : -1;
      for (size_t g = 1; g < modulus.size(); ++g)
        if (modulus[g] > 0)
          h += (std::llabs(exp[g]) + static_cast<std::int64_t>(modulus[g]) - 1) /
               static_cast<std::int64_t>(modulus[g]);
    }
    return h;
  }
};

Heuristic make_heuristic(const Presentation& p, const std::optional<FamilyOracle>& fam) {
  Heuristic h;
  if (p.generator_count() == 2 && p.relators.size() == 1 && as_commutator(p.relators[0]))
    h.z2 = true;
  if (fam && fam->kind == FamilyOracle::Kind::DirectProduct) {
    h.modulus.assign(static_cast<size_t>(p.generator_count()) + 1, 0);
    for (size_t f = 0; f < fam->factor_generators.size(); ++f)
      if (fam->factor_generators[f].size() == 1 && fam->factor_modulus[f] > 0)
        h.modulus[static_cast<size_t>(fam->factor_generators[f][0])] = fam->factor_modulus[f];
  }
  return h;
}

}  // namespace

std::int64_t area_lower_bound(const Word& w, const Presentation& p) {
  auto fam = recognize_family(p);
  Heuristic h = make_heuristic(p, fam);
  return h(free_reduce(w));
}

AreaResult combinatorial_area(const Word& w0, const Presentation& p, const SearchLimits& limits) {
  p.validate();
  Word w = free_reduce(w0);
  AreaResult res;

  auto fam = recognize_family(p);
  if (fam && !fam->is_trivial_word(w, p)) {
    res.status = AreaResult::Status::NotNullhomotopic;
    return res;
  }
  Heuristic heur = make_heuristic(p, fam);
  res.lower_bound = heur(w);

  if (w.empty()) {
    res.status = AreaResult::Status::Exact;
    res.area = 0;
    res.globally_certified = true;
    return res;
  }
  if (p.relators.empty()) {
    // free group, w nontrivial
    res.status = AreaResult::Status::NotNullhomotopic;
    return res;
  }

  size_t max_rel = 0;
  for (const Word& r : p.relators) max_rel = std::max(max_rel, r.size());
  std::int64_t max_len = limits.max_word_length > 0
                             ? limits.max_word_length
                             : 2 * static_cast<std::int64_t>(w.size()) +
                                   2 * static_cast<std::int64_t>(max_rel);
  max_len = std::max<std::int64_t>(max_len, static_cast<std::int64_t>(w.size()));

  // All distinct cyclic rotations of every relator and its inverse.
  std::vector<Word> moves;
  {
    std::set<std::string> seen;
    for (const Word& r : p.relators)
      for (const Word& base : {r, r.inverse()})
        for (size_t k = 0; k < base.size(); ++k) {
          Word rot = base.cycled(k);
          if (seen.insert(encode(rot)).second) moves.push_back(rot);
        }
  }

  // A* toward the empty word; ties resolved toward the lexicographically
  // smallest word for determinism.
  struct Node {
    std::int64_t f;
    std::string word;
    std::int64_t g;
  };
  auto cmp = [](const Node& a, const Node& b) {
    if (a.f != b.f) return a.f > b.f;
    return a.word > b.word;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);
  std::unordered_map<std::string, std::int64_t> g_of;

  std::string start = encode(w);
  g_of[start] = 0;
  open.push({heur(w), start, 0});

  while (!open.empty()) {
    Node cur = open.top();
    open.pop();
    auto it = g_of.find(cur.word);
    if (it != g_of.end() && it->second < cur.g) continue;
    if (cur.f > limits.max_area) {
      // everything left costs more than the cap
      res.status = AreaResult::Status::LowerBound;
      res.area = limits.max_area + 1;
      return res;
    }
    if (cur.word.empty()) {
      res.status = AreaResult::Status::Exact;
      res.area = cur.g;
      res.globally_certified = (res.lower_bound == cur.g) || !res.stats.length_pruned;
      return res;
    }
    ++res.stats.nodes_expanded;
    Word cw = decode(cur.word);
    std::unordered_set<std::string> local;
    for (const Word& mv : moves) {
      for (size_t pos = 0; pos <= cw.size(); ++pos) {
        Word next;
        next.letters.reserve(cw.size() + mv.size());
        next.letters.insert(next.letters.end(), cw.letters.begin(),
                            cw.letters.begin() + static_cast<std::ptrdiff_t>(pos));
        next.letters.insert(next.letters.end(), mv.letters.begin(), mv.letters.end());
        next.letters.insert(next.letters.end(), cw.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                            cw.letters.end());
        next = free_reduce(next);
        if (static_cast<std::int64_t>(next.size()) > max_len) {
          res.stats.length_pruned = true;
          continue;
        }
        res.stats.max_word_length_reached =
            std::max(res.stats.max_word_length_reached, static_cast<std::int64_t>(next.size()));
        std::string key = encode(next);
        if (!local.insert(key).second) continue;
        std::int64_t ng = cur.g + 1;
        auto git = g_of.find(key);
        if (git != g_of.end() && git->second <= ng) continue;
        g_of[key] = ng;
        open.push({ng + heur(next), std::move(key), ng});
      }
    }
  }

  // Search space within the length bound exhausted without reaching the
  // empty word.
  res.status = AreaResult::Status::Unknown;
  return res;
}

bool DehnTable::all_exact() const {
  return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

DehnTable dehn_function(const Presentation& p, std::int64_t n_max, const SearchLimits& limits,
                        bool allow_search) {
  p.validate();
  auto fam = recognize_family(p);
  if (!fam && !allow_search)
    throw std::invalid_argument(
        "no word-problem oracle for this presentation; pass allow_search to use the bounded "
        "nullhomotopy test");

  DehnTable out;
  out.table.lo = 0;
  out.table.values.assign(static_cast<size_t>(n_max) + 1, Rational(0));
  out.exact.assign(static_cast<size_t>(n_max) + 1, true);

  std::map<std::string, AreaResult> cache;  // canonical cyclic class -> result
  auto canonical_class = [](const Word& w) {
    std::string best;
    bool first = true;
    for (const Word& base : {w, w.inverse()})
      for (size_t k = 0; k < std::max<size_t>(base.size(), 1); ++k) {
        std::string s = encode(base.cycled(k));
        if (first || s < best) {
          best = s;
          first = false;
        }
      }
    return best;
  };

  // DFS over freely reduced words.
  std::vector<Letter> letters;
  for (int g = 1; g <= p.generator_count(); ++g) {
    letters.push_back(static_cast<Letter>(g));
    letters.push_back(static_cast<Letter>(-g));
  }
  Word cur;
  auto consider = [&](const Word& w) {
    std::int64_t len = static_cast<std::int64_t>(w.size());
    bool trivial;
    if (fam) {
      trivial = fam->is_trivial_word(w, p);
    } else {
      AreaResult probe = combinatorial_area(w, p, limits);
      trivial = probe.status == AreaResult::Status::Exact ||
                probe.status == AreaResult::Status::LowerBound;
      if (probe.status == AreaResult::Status::Unknown) {
        for (std::int64_t n = len; n <= n_max; ++n) out.exact[static_cast<size_t>(n)] = false;
        return;
      }
      if (!trivial) return;
    }
    if (!trivial) return;
    std::string cls = canonical_class(w);
    auto it = cache.find(cls);
    if (it == cache.end()) it = cache.emplace(cls, combinatorial_area(w, p, limits)).first;
    const AreaResult& ar = it->second;
    bool exact = ar.status == AreaResult::Status::Exact && ar.globally_certified;
    std::int64_t a = ar.status == AreaResult::Status::Exact ? ar.area
                     : ar.status == AreaResult::Status::LowerBound ? ar.area
                                                                   : ar.lower_bound;
    for (std::int64_t n = len; n <= n_max; ++n) {
      size_t i = static_cast<size_t>(n);
      if (Rational(a) > out.table.values[i]) out.table.values[i] = Rational(a);
      if (!exact) out.exact[i] = false;
    }
  };

  std::function<void(std::int64_t)> dfs = [&](std::int64_t depth) {
    if (depth > 0) consider(cur);
    if (depth == n_max) return;
    for (Letter l : letters) {
      if (!cur.letters.empty() && cur.letters.back() == -l) continue;
      cur.letters.push_back(l);
      dfs(depth + 1);
      cur.letters.pop_back();
    }
  };
  consider(cur);  // empty word
  dfs(0);

  // the maximum over a growing range is monotone by construction
  return out;
}

}  // namespace dehn::presentation
