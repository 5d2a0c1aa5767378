#include <vector>

#include "dehn/growth.hpp"
#include "doctest.h"

using namespace dehn;
using namespace dehn::growth;

namespace {

SymbolicGrowth poly(int c, unsigned d) { return SymbolicGrowth::polynomial(c, d); }
SymbolicGrowth expo(int b) { return SymbolicGrowth::exponential(b); }

std::vector<SymbolicGrowth> family() {
  return {SymbolicGrowth::zero(), poly(1, 0), poly(2, 0), poly(1, 1), poly(2, 1),
          poly(1, 2),             poly(3, 2), poly(1, 3), expo(2),    expo(3)};
}

}  // namespace

TEST_CASE("symbolic dominance on the standard examples") {
  auto r = dominates_symbolic(poly(1, 1), poly(1, 2));
  CHECK(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->A == Rational(1));
  CHECK(r.witness->B == Rational(1));
  CHECK(r.witness->C == Rational(0));
  CHECK(r.witness->D == Rational(0));
  CHECK(r.witness->E == Rational(1));

  auto e32 = dominates_symbolic(expo(3), expo(2));
  CHECK(e32.holds);
  REQUIRE(e32.witness.has_value());
  CHECK(e32.witness->B == Rational(2));  // 3^n <= 4^n = 2^(2n)

  for (unsigned d = 1; d <= 6; ++d) CHECK_FALSE(dominates_symbolic(expo(2), poly(1, d)).holds);
  CHECK_FALSE(dominates_symbolic(poly(1, 3), poly(1, 2)).holds);
}

TEST_CASE("symbolic witnesses certify the inequality on sampled tables") {
  auto fam = family();
  for (const auto& f : fam)
    for (const auto& g : fam) {
      auto r = dominates_symbolic(f, g);
      if (!r.holds) continue;
      GrowthTable tf = table_of(f, 0, 25);
      GrowthTable tg = table_of(g, 0, 25);
      WitnessConstants w = *r.witness;
      CHECK_MESSAGE(check_witness(tf, tg, &w),
                    f.describe() << " < " << g.describe() << " witness " << w.describe());
    }
}

TEST_CASE("the preorder is reflexive and transitive, equivalence is an equivalence") {
  auto fam = family();
  for (const auto& f : fam) CHECK(dominates_symbolic(f, f).holds);
  for (const auto& f : fam)
    for (const auto& g : fam)
      for (const auto& h : fam) {
        if (dominates_symbolic(f, g).holds && dominates_symbolic(g, h).holds)
          CHECK(dominates_symbolic(f, h).holds);
      }
  // symmetry and transitivity of the induced equivalence
  for (const auto& f : fam)
    for (const auto& g : fam) CHECK(equivalent(f, g) == equivalent(g, f));
}

TEST_CASE("equivalence collapses constants, bases, and everything at most linear") {
  CHECK(equivalent(poly(7, 2), poly(1, 2)));
  CHECK(equivalent(expo(2), expo(10)));
  CHECK_FALSE(equivalent(poly(1, 1), poly(1, 2)));
  CHECK(equivalent(poly(1, 0), poly(1, 1)));
  CHECK(equivalent(poly(5, 1), poly(1, 1)));
  CHECK(equivalent(SymbolicGrowth::zero(), poly(1, 1)));
}

TEST_CASE("witness search over tables") {
  SUBCASE("n^2 + 5n against n^2 has a small-sum witness") {
    GrowthTable f, g;
    f.lo = g.lo = 1;
    for (int n = 1; n <= 20; ++n) {
      f.values.push_back(Rational(n * n + 5 * n));
      g.values.push_back(Rational(n * n));
    }
    auto w = find_witness(f, g);
    REQUIRE(w.has_value());
    CHECK(check_witness(f, g, &*w));
    // the hand-picked constants are also a valid witness under the checker
    WitnessConstants hand;
    hand.A = 1;
    hand.B = 1;
    hand.C = 0;
    hand.D = 5;
    hand.E = 0;
    CHECK(check_witness(f, g, &hand));
  }
  SUBCASE("identity tables certify with A=1, B=1") {
    GrowthTable f = table_of(poly(1, 2), 1, 20);
    auto w = find_witness(f, f);
    REQUIRE(w.has_value());
    CHECK(w->A == Rational(1));
    CHECK(w->B == Rational(1));
    CHECK(w->C == Rational(0));
    CHECK(w->D == Rational(0));
    CHECK(w->E == Rational(0));
  }
  SUBCASE("2^n against n^2 finds nothing within a grid bounded by 8") {
    GrowthTable f = table_of(expo(2), 1, 12);
    GrowthTable g = table_of(poly(1, 2), 1, 12);
    GridSpec grid;
    grid.max_exp = 3;
    CHECK_FALSE(find_witness(f, g, grid).has_value());
  }
  SUBCASE("errors") {
    GrowthTable f = table_of(poly(1, 1), 1, 10);
    GrowthTable g = table_of(poly(1, 1), 0, 10);
    CHECK_THROWS(find_witness(f, g));
    GrowthTable empty;
    CHECK_THROWS(find_witness(empty, empty));
  }
}

TEST_CASE("whenever the symbolic decision holds, table search finds a witness") {
  auto fam = family();
  for (const auto& f : fam)
    for (const auto& g : fam) {
      auto r = dominates_symbolic(f, g);
      if (!r.holds) continue;
      GrowthTable tf = table_of(f, 1, 30);
      GrowthTable tg = table_of(g, 1, 30);
      // grid covering the symbolic witness
      GridSpec grid;
      grid.max_exp = 10;
      Rational biggest = std::max(
          {r.witness->A, r.witness->B, r.witness->C, r.witness->D, r.witness->E, Rational(1)});
      while (rat_pow(Rational(2), static_cast<unsigned>(grid.max_exp)) < biggest) ++grid.max_exp;
      auto w = find_witness(tf, tg, grid);
      CHECK_MESSAGE(w.has_value(), f.describe() << " < " << g.describe());
    }
}

TEST_CASE("equivalence report on tables") {
  GrowthTable a = table_of(poly(3, 2), 1, 30);
  GrowthTable b = table_of(poly(1, 2), 1, 30);
  auto rep = equivalent_tables(a, b);
  CHECK(rep.equivalent);
  REQUIRE(rep.forward.has_value());
  REQUIRE(rep.backward.has_value());

  GrowthTable c = table_of(expo(2), 1, 30);
  GridSpec small;
  small.max_exp = 2;
  auto rep2 = equivalent_tables(c, b, small);
  CHECK_FALSE(rep2.equivalent);
  CHECK_FALSE(rep2.forward.has_value());  // 2^n has no witness below n^2
  CHECK(!rep2.note.empty());
}

TEST_CASE("growth tables round-trip through CSV") {
  GrowthTable t;
  t.lo = 0;
  t.values = {Rational(0), Rational(1), Rational(1, 3), Rational(7, 2), Rational(1024)};
  std::string csv = table_to_csv(t);
  GrowthTable back = table_from_csv(csv);
  CHECK(back.lo == t.lo);
  REQUIRE(back.values.size() == t.values.size());
  for (size_t i = 0; i < t.values.size(); ++i) CHECK(back.values[i] == t.values[i]);
  CHECK(table_to_csv(back) == csv);
  CHECK_THROWS(table_from_csv("x,y\n1,2\n"));
  CHECK_THROWS(table_from_csv("n,value\n2,5\n"));  // domain must start at 0 or 1
}
