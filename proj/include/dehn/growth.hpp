#ifndef DEHN_GROWTH_HPP
#define DEHN_GROWTH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehn/rational.hpp"

namespace dehn::growth {

// Growth functions compared under the preorder
//   f < g  iff  f(n) <= A*g(Bn+C) + Dn + E  for non-negative constants.
// The symbolic family is kept small on purpose: everything richer goes
// through sampled tables.

struct SymbolicGrowth {
  enum class Kind { Zero, Polynomial, Exponential };
  Kind kind = Kind::Zero;
  Rational coefficient = 0;  // Polynomial: > 0
  std::uint32_t degree = 0;  // Polynomial
  Rational base = 0;         // Exponential: > 1

  static SymbolicGrowth zero() { return {}; }
  static SymbolicGrowth polynomial(Rational coeff, std::uint32_t deg);
  static SymbolicGrowth exponential(Rational base);

  Rational eval(std::uint64_t n) const;
  std::string describe() const;
};

struct GrowthTable {
  // Contiguous domain [lo, lo+values.size()), lo in {0, 1}.
  std::int64_t lo = 0;
  std::vector<Rational> values;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(values.size()) - 1; }
  bool empty() const { return values.empty(); }
  const Rational& at(std::int64_t n) const;
  // Evaluation with the argument clamped into the domain; sets *clamped when
  // clamping happened.
  const Rational& at_clamped(std::int64_t n, bool* clamped) const;
};

GrowthTable table_of(const SymbolicGrowth& f, std::int64_t lo, std::int64_t hi);

// CSV with header "n,value"; values are integers or "p/q" fractions.
std::string table_to_csv(const GrowthTable& t);
GrowthTable table_from_csv(const std::string& csv);

struct WitnessConstants {
  Rational A = 0, B = 0, C = 0, D = 0, E = 0;
  // The inequality was checked for n in [checked_lo, checked_hi] only (0 for
  // symbolic witnesses, which hold for all n).
  std::int64_t checked_lo = 0;
  std::int64_t checked_hi = 0;
  bool clamped = false;  // g's argument hit the domain boundary somewhere

  std::string describe() const;
};

struct DominanceResult {
  bool holds = false;
  std::optional<WitnessConstants> witness;
  std::string reason;  // set when !holds
};

// Exact decision within the symbolic family.
DominanceResult dominates_symbolic(const SymbolicGrowth& f, const SymbolicGrowth& g);

struct GridSpec {
  // Constants range over {0, 1, 2, 4, ..., 2^max_exp}; candidates are tried
  // in order of increasing A+B+C+D+E, ties lexicographic.
  int max_exp = 10;
  std::vector<Rational> values() const;
};

// Grid search for constants certifying f < g over the shared sampled domain.
// Absence of a witness is not a disproof; it only means "no witness within
// bounds".
std::optional<WitnessConstants> find_witness(const GrowthTable& f, const GrowthTable& g,
                                             const GridSpec& grid = {});

// Direct check that given constants certify f < g over the shared domain.
bool check_witness(const GrowthTable& f, const GrowthTable& g, WitnessConstants* w);

bool equivalent(const SymbolicGrowth& f, const SymbolicGrowth& g);

struct EquivalenceReport {
  bool equivalent = false;
  std::optional<WitnessConstants> forward;   // f < g
  std::optional<WitnessConstants> backward;  // g < f
  std::string note;
};

EquivalenceReport equivalent_tables(const GrowthTable& f, const GrowthTable& g,
                                    const GridSpec& grid = {});

}  // namespace dehn::growth

#endif
