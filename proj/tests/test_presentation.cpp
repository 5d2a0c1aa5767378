#include <string>

#include "dehn/presentation.hpp"
#include "dehn/rng.hpp"
#include "doctest.h"

using namespace dehn;
using namespace dehn::presentation;

namespace {

Presentation z2() { return parse_presentation("gen a b\nrel abAB\n"); }
Presentation c3() { return parse_presentation("gen a\nrel aaa\n"); }
Presentation free2() { return parse_presentation("gen a b\n"); }

Word random_word(const Presentation& p, Rng& rng, int len) {
  Word w;
  for (int i = 0; i < len; ++i) {
    Letter l = static_cast<Letter>(1 + rng.below(static_cast<std::uint64_t>(p.generator_count())));
    if (rng.below(2)) l = static_cast<Letter>(-l);
    w.letters.push_back(l);
  }
  return free_reduce(w);
}

}  // namespace

TEST_CASE("free reduction") {
  Presentation p = free2();
  CHECK(word_to_string(free_reduce(parse_word("aAb", p)), p) == "b");
  CHECK(free_reduce(Word{}).empty());
  CHECK(free_reduce(parse_word("abBA", p)).empty());
  CHECK(word_to_string(free_reduce(parse_word("abAB", p)), p) == "abAB");
}

TEST_CASE("presentation files round-trip bit-exactly") {
  std::string text = "gen a b\nrel abAB\nrel aaa\n";
  Presentation p = parse_presentation(text);
  CHECK(serialize_presentation(p) == text);
  CHECK(serialize_presentation(parse_presentation(serialize_presentation(p))) == text);
  CHECK_THROWS(parse_presentation("gen a\nrel ab\n"));
  CHECK_THROWS(parse_presentation("gen a a\n"));
  CHECK_THROWS(parse_presentation("nonsense\n"));
  CHECK_THROWS(parse_presentation("gen a\nrel aA\n"));  // not reduced
}

TEST_CASE("family recognition") {
  CHECK(recognize_family(free2()).has_value());
  CHECK(recognize_family(c3()).has_value());
  CHECK(recognize_family(z2()).has_value());
  // Z x Z/3
  auto prod = recognize_family(parse_presentation("gen a b\nrel aaa\nrel abAB\n"));
  REQUIRE(prod.has_value());
  CHECK(prod->factor_generators.size() == 2);
  // a surface-like relator is not in the family
  CHECK_FALSE(recognize_family(parse_presentation("gen a b\nrel aabb\n")).has_value());

  Presentation p = z2();
  auto fam = *recognize_family(p);
  CHECK(fam.is_trivial_word(parse_word("abAB", p), p));
  CHECK(fam.is_trivial_word(parse_word("aabbAABB", p), p));
  CHECK_FALSE(fam.is_trivial_word(parse_word("ab", p), p));
}

TEST_CASE("combinatorial area: exact desk-scale values") {
  Presentation zz = z2();
  SUBCASE("the relator itself") {
    auto r = combinatorial_area(parse_word("abAB", zz), zz);
    CHECK(r.status == AreaResult::Status::Exact);
    CHECK(r.area == 1);
    CHECK(r.globally_certified);
  }
  SUBCASE("powers over the cyclic group") {
    Presentation c = c3();
    auto r1 = combinatorial_area(parse_word("aaa", c), c);
    CHECK(r1.status == AreaResult::Status::Exact);
    CHECK(r1.area == 1);
    auto r2 = combinatorial_area(parse_word("aaaaaa", c), c);
    CHECK(r2.status == AreaResult::Status::Exact);
    CHECK(r2.area == 2);
  }
  SUBCASE("the commutator square") {
    auto r = combinatorial_area(parse_word("aabbAABB", zz), zz);
    CHECK(r.status == AreaResult::Status::Exact);
    CHECK(r.area == 4);
    CHECK(r.globally_certified);
  }
  SUBCASE("commutator powers fill quadratically") {
    for (int n = 1; n <= 3; ++n) {
      std::string w(static_cast<size_t>(n), 'a');
      w += std::string(static_cast<size_t>(n), 'b');
      w += std::string(static_cast<size_t>(n), 'A');
      w += std::string(static_cast<size_t>(n), 'B');
      auto r = combinatorial_area(parse_word(w, zz), zz);
      CHECK(r.status == AreaResult::Status::Exact);
      CHECK(r.area == n * n);
      CHECK(r.globally_certified);
    }
  }
}

TEST_CASE("area statuses") {
  Presentation zz = z2();
  auto nn = combinatorial_area(parse_word("ab", zz), zz);
  CHECK(nn.status == AreaResult::Status::NotNullhomotopic);

  Presentation f = free2();
  CHECK(combinatorial_area(parse_word("", f), f).status == AreaResult::Status::Exact);
  CHECK(combinatorial_area(parse_word("ab", f), f).status == AreaResult::Status::NotNullhomotopic);

  SearchLimits tiny;
  tiny.max_area = 2;
  auto lb = combinatorial_area(parse_word("aaabbbAAABBB", zz), zz, tiny);
  CHECK(lb.status == AreaResult::Status::LowerBound);
  CHECK(lb.area == 3);

  // no oracle and no filling within bounds: the search owns up to Unknown
  Presentation hard = parse_presentation("gen a b\nrel aabb\n");
  SearchLimits small;
  small.max_area = 3;
  small.max_word_length = 8;
  auto un = combinatorial_area(parse_word("abab", hard), hard, small);
  CHECK((un.status == AreaResult::Status::Unknown || un.status == AreaResult::Status::LowerBound));
}

TEST_CASE("area is invariant under inversion and cyclic rotation") {
  Presentation zz = z2();
  Rng rng(7);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 8; ++trial) {
    Word w = random_word(zz, rng, 6);
    auto fam = recognize_family(zz);
    if (!fam->is_trivial_word(w, zz)) continue;
    auto base = combinatorial_area(w, zz);
    if (base.status != AreaResult::Status::Exact) continue;
    ++checked;
    auto inv = combinatorial_area(w.inverse(), zz);
    CHECK(inv.status == AreaResult::Status::Exact);
    CHECK(inv.area == base.area);
    for (size_t k = 1; k < w.size(); ++k) {
      Word rot = free_reduce(w.cycled(k));
      auto r = combinatorial_area(rot, zz);
      CHECK(r.status == AreaResult::Status::Exact);
      CHECK(r.area == base.area);
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("area is subadditive and vanishes exactly on freely trivial words") {
  Presentation zz = z2();
  Word u = parse_word("abAB", zz);
  Word v = parse_word("aabbAABB", zz);
  auto ru = combinatorial_area(u, zz);
  auto rv = combinatorial_area(v, zz);
  auto ruv = combinatorial_area(free_reduce(concat(u, v)), zz);
  REQUIRE(ru.status == AreaResult::Status::Exact);
  REQUIRE(rv.status == AreaResult::Status::Exact);
  REQUIRE(ruv.status == AreaResult::Status::Exact);
  CHECK(ruv.area <= ru.area + rv.area);

  CHECK(combinatorial_area(parse_word("abBA", zz), zz).area == 0);
  CHECK(combinatorial_area(parse_word("abAB", zz), zz).area != 0);
}

TEST_CASE("Dehn function tables") {
  SUBCASE("free groups never need any cells") {
    DehnTable t = dehn_function(free2(), 10);
    for (const auto& v : t.table.values) CHECK(v == growth::Rational(0));
    CHECK(t.all_exact());
  }
  SUBCASE("the cyclic group of order three") {
    DehnTable t = dehn_function(c3(), 6);
    CHECK(t.table.at(3) == growth::Rational(1));
    CHECK(t.table.at(6) == growth::Rational(2));
    CHECK(t.table.at(2) == growth::Rational(0));
    CHECK(t.all_exact());
  }
  SUBCASE("the standard Z^2 presentation") {
    DehnTable t = dehn_function(z2(), 8);
    CHECK(t.table.at(4) == growth::Rational(1));
    CHECK(t.table.at(8) == growth::Rational(4));
    CHECK(t.all_exact());
  }
  SUBCASE("monotone in n") {
    DehnTable t = dehn_function(z2(), 8);
    for (std::int64_t n = 1; n <= t.table.hi(); ++n) CHECK(t.table.at(n - 1) <= t.table.at(n));
  }
}

TEST_CASE("the winding lower bound matches the search on commutator powers") {
  Presentation zz = z2();
  for (int n = 1; n <= 3; ++n) {
    std::string s(static_cast<size_t>(n), 'a');
    s += std::string(static_cast<size_t>(n), 'b');
    s += std::string(static_cast<size_t>(n), 'A');
    s += std::string(static_cast<size_t>(n), 'B');
    CHECK(area_lower_bound(parse_word(s, zz), zz) == n * n);
  }
  CHECK(area_lower_bound(parse_word("abAB", zz), zz) == 1);
  CHECK(area_lower_bound(parse_word("abBA", zz), zz) == 0);
}
