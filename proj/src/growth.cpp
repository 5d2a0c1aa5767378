#include "dehn/growth.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace dehn::growth {

SymbolicGrowth SymbolicGrowth::polynomial(Rational coeff, std::uint32_t deg) {
  if (coeff <= 0) throw std::invalid_argument("polynomial coefficient must be positive");
  SymbolicGrowth g;
  g.kind = Kind::Polynomial;
  g.coefficient = std::move(coeff);
  g.degree = deg;
  return g;
}

SymbolicGrowth SymbolicGrowth::exponential(Rational base) {
  if (base <= 1) throw std::invalid_argument("exponential base must exceed 1");
  SymbolicGrowth g;
  g.kind = Kind::Exponential;
  g.base = std::move(base);
  return g;
}

Rational SymbolicGrowth::eval(std::uint64_t n) const {
  switch (kind) {
    case Kind::Zero:
      return 0;
    case Kind::Polynomial:
      return coefficient * rat_pow(Rational(n), degree);
    case Kind::Exponential:
      return rat_pow(base, n);
  }
  return 0;
}

std::string SymbolicGrowth::describe() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Polynomial:
      return rational_to_string(coefficient) + "*n^" + std::to_string(degree);
    case Kind::Exponential:
      return rational_to_string(base) + "^n";
  }
  return "?";
}

const Rational& GrowthTable::at(std::int64_t n) const {
  if (n < lo || n > hi()) throw std::out_of_range("growth table index");
  return values[static_cast<size_t>(n - lo)];
}

const Rational& GrowthTable::at_clamped(std::int64_t n, bool* clamped) const {
  if (empty()) throw std::invalid_argument("empty growth table");
  std::int64_t m = n;
  if (m < lo) m = lo;
  if (m > hi()) m = hi();
  if (clamped && m != n) *clamped = true;
  return values[static_cast<size_t>(m - lo)];
}

GrowthTable table_of(const SymbolicGrowth& f, std::int64_t lo, std::int64_t hi) {
  if (lo < 0 || lo > 1 || hi < lo) throw std::invalid_argument("table domain must start at 0 or 1");
  GrowthTable t;
  t.lo = lo;
  for (std::int64_t n = lo; n <= hi; ++n) t.values.push_back(f.eval(static_cast<std::uint64_t>(n)));
  return t;
}

std::string table_to_csv(const GrowthTable& t) {
  std::ostringstream out;
  out << "n,value\n";
  for (size_t i = 0; i < t.values.size(); ++i)
    out << (t.lo + static_cast<std::int64_t>(i)) << "," << rational_to_string(t.values[i]) << "\n";
  return out.str();
}

GrowthTable table_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty csv");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n,value") throw std::invalid_argument("expected header 'n,value'");
  GrowthTable t;
  bool first = true;
  std::int64_t expect = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad csv row: " + line);
    std::int64_t n = std::stoll(line.substr(0, comma));
    Rational v = parse_rational(line.substr(comma + 1));
    if (v < 0) throw std::invalid_argument("negative table value");
    if (first) {
      if (n != 0 && n != 1) throw std::invalid_argument("table domain must start at 0 or 1");
      t.lo = n;
      expect = n;
      first = false;
    }
    if (n != expect) throw std::invalid_argument("table domain must be contiguous");
    ++expect;
    t.values.push_back(std::move(v));
  }
  if (t.values.empty()) throw std::invalid_argument("csv has no rows");
  return t;
}

std::string WitnessConstants::describe() const {
  std::ostringstream out;
  out << "A=" << rational_to_string(A) << " B=" << rational_to_string(B)
      << " C=" << rational_to_string(C) << " D=" << rational_to_string(D)
      << " E=" << rational_to_string(E);
  if (checked_hi > checked_lo)
    out << " (checked n in [" << checked_lo << "," << checked_hi << "]"
        << (clamped ? ", clamped" : "") << ")";
  return out.str();
}

namespace {

WitnessConstants make_witness(Rational A, Rational B, Rational C, Rational D, Rational E) {
  WitnessConstants w;
  w.A = std::move(A);
  w.B = std::move(B);
  w.C = std::move(C);
  w.D = std::move(D);
  w.E = std::move(E);
  return w;
}

// max over integer n >= 0 of c * n^p / b^n, exact.  The ratio of consecutive
// terms ((n+1)/n)^p / b is decreasing in n, so once a term stops growing the
// sequence decreases forever and the running max is final.
Rational poly_over_exp_peak(const Rational& c, std::uint32_t p, const Rational& b) {
  if (p == 0) return c;
  Rational prev = c / b;  // n = 1
  Rational best = prev;
  for (std::uint64_t n = 2;; ++n) {
    Rational term = c * rat_pow(Rational(n), p) / rat_pow(b, n);
    if (term <= prev) break;
    best = term;
    prev = term;
  }
  return best;
}

}  // namespace

DominanceResult dominates_symbolic(const SymbolicGrowth& f, const SymbolicGrowth& g) {
  using K = SymbolicGrowth::Kind;
  DominanceResult res;

  if (f.kind == K::Zero) {
    res.holds = true;
    res.witness = make_witness(0, 1, 0, 0, 0);
    return res;
  }

  if (f.kind == K::Polynomial) {
    const Rational& c = f.coefficient;
    std::uint32_t p = f.degree;
    if (g.kind == K::Polynomial && p <= g.degree) {
      // c*n^p <= (c/c_g) * c_g*n^q for n >= 1; E covers n = 0.
      res.holds = true;
      res.witness = make_witness(c / g.coefficient, 1, 0, 0, c);
      return res;
    }
    if (g.kind == K::Exponential) {
      res.holds = true;
      res.witness = make_witness(poly_over_exp_peak(c, p, g.base), 1, 0, 0, c);
      return res;
    }
    if (p <= 1) {
      // The additive Dn+E term absorbs anything at most linear.
      res.holds = true;
      res.witness = make_witness(0, 1, 0, p == 1 ? c : Rational(0), c);
      return res;
    }
    res.holds = false;
    res.reason = "polynomial of degree " + std::to_string(p) + " is not dominated by " + g.describe();
    return res;
  }

  // f exponential
  if (g.kind == K::Exponential) {
    // smallest integer B with g.base^B >= f.base
    Rational pw = g.base;
    std::uint64_t B = 1;
    while (pw < f.base) {
      pw *= g.base;
      ++B;
    }
    res.holds = true;
    res.witness = make_witness(1, Rational(B), 0, 0, 0);
    return res;
  }
  res.holds = false;
  res.reason = "exponential growth is not dominated by " + g.describe();
  return res;
}

std::vector<Rational> GridSpec::values() const {
  if (max_exp < 0 || max_exp > 62) throw std::invalid_argument("grid max_exp out of range");
  std::vector<Rational> vs;
  vs.emplace_back(0);
  Rational p = 1;
  for (int e = 0; e <= max_exp; ++e) {
    vs.push_back(p);
    p *= 2;
  }
  return vs;
}

bool check_witness(const GrowthTable& f, const GrowthTable& g, WitnessConstants* w) {
  bool clamped = false;
  for (std::int64_t n = f.lo; n <= f.hi(); ++n) {
    Rational arg = w->B * n + w->C;
    // g is only sampled at integers; round the argument down (g need not be
    // monotone, so this is part of the certified statement, not a bound).
    BigInt lowered = numerator(arg) / denominator(arg);
    std::int64_t gi = lowered.convert_to<std::int64_t>();
    const Rational& gv = g.at_clamped(gi, &clamped);
    Rational rhs = w->A * gv + w->D * n + w->E;
    if (f.at(n) > rhs) return false;
  }
  w->checked_lo = f.lo;
  w->checked_hi = f.hi();
  w->clamped = clamped;
  return true;
}

std::optional<WitnessConstants> find_witness(const GrowthTable& f, const GrowthTable& g,
                                             const GridSpec& grid) {
  if (f.empty() || g.empty()) throw std::invalid_argument("empty growth table");
  if (f.lo != g.lo || f.hi() != g.hi()) throw std::invalid_argument("mismatched table domains");
  if (f.values.size() < 2) throw std::invalid_argument("table domain too short");

  std::vector<Rational> vals = grid.values();
  size_t m = vals.size();
  struct Tuple {
    Rational sum;
    std::array<int, 5> idx;
  };
  std::vector<Tuple> tuples;
  tuples.reserve(m * m * m * m * m);
  for (int a = 0; a < (int)m; ++a)
    for (int b = 0; b < (int)m; ++b)
      for (int c = 0; c < (int)m; ++c)
        for (int d = 0; d < (int)m; ++d)
          for (int e = 0; e < (int)m; ++e)
            tuples.push_back({vals[a] + vals[b] + vals[c] + vals[d] + vals[e], {a, b, c, d, e}});
  std::stable_sort(tuples.begin(), tuples.end(), [&](const Tuple& x, const Tuple& y) {
    if (x.sum != y.sum) return x.sum < y.sum;
    return x.idx < y.idx;
  });

  for (const Tuple& t : tuples) {
    WitnessConstants w = make_witness(vals[t.idx[0]], vals[t.idx[1]], vals[t.idx[2]],
                                      vals[t.idx[3]], vals[t.idx[4]]);
    if (check_witness(f, g, &w)) return w;
  }
  return std::nullopt;
}

bool equivalent(const SymbolicGrowth& f, const SymbolicGrowth& g) {
  return dominates_symbolic(f, g).holds && dominates_symbolic(g, f).holds;
}

EquivalenceReport equivalent_tables(const GrowthTable& f, const GrowthTable& g,
                                    const GridSpec& grid) {
  EquivalenceReport rep;
  rep.forward = find_witness(f, g, grid);
  rep.backward = find_witness(g, f, grid);
  rep.equivalent = rep.forward.has_value() && rep.backward.has_value();
  if (!rep.forward) rep.note = "no witness within bounds for f < g";
  if (!rep.backward)
    rep.note += std::string(rep.note.empty() ? "" : "; ") + "no witness within bounds for g < f";
  return rep;
}

}  // namespace dehn::growth
