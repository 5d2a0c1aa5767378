#ifndef DEHN_PRESENTATION_HPP
#define DEHN_PRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dehn/growth.hpp"

namespace dehn::presentation {

// Letters are signed 1-based generator indices: +k is generator k-1, -k its
// inverse.  In text form generator names are single lowercase letters and an
// uppercase letter is the inverse of the corresponding generator.
using Letter = std::int8_t;

struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  Word inverse() const;
  Word cycled(size_t k) const;  // rotate left by k
  bool reduced() const;
};

Word free_reduce(const Word& w);
Word concat(const Word& u, const Word& v);

struct Presentation {
  std::vector<char> generator_names;  // distinct lowercase letters
  std::vector<Word> relators;         // freely and cyclically reduced, nonempty

  int generator_count() const { return static_cast<int>(generator_names.size()); }
  void validate() const;
};

// Text format, one item per line:
//   gen a b
//   rel abAB
// Serialization is canonical (single gen line, relators in order) and
// round-trips bit-exactly.
Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& p);

Word parse_word(const std::string& text, const Presentation& p);
std::string word_to_string(const Word& w, const Presentation& p);

// ---------------------------------------------------------------------------
// Word problem oracles for the built-in families: free groups, finite cyclic
// groups, and direct products of those (which covers Z^2 = Z x Z).  The word
// problem is undecidable in general, so everything else runs the bounded
// search and owns up to Unknown.

struct FamilyOracle {
  enum class Kind { Free, DirectProduct };
  Kind kind = Kind::Free;
  // For DirectProduct: factor of each generator, and the modulus of each
  // factor (0 = infinite cyclic / free factor).
  std::vector<int> factor_of_generator;
  std::vector<std::vector<int>> factor_generators;
  std::vector<std::uint64_t> factor_modulus;  // only for single-generator factors

  bool is_trivial_word(const Word& w, const Presentation& p) const;
};

std::optional<FamilyOracle> recognize_family(const Presentation& p);

// ---------------------------------------------------------------------------
// Combinatorial area: the minimum number of relator insertions turning w into
// the empty word, each move inserting a cyclic conjugate of a relator or its
// inverse at any position followed by free reduction.  By van Kampen's lemma
// this equals the minimal diagram area.

struct SearchLimits {
  std::int64_t max_area = 64;
  std::int64_t max_word_length = 0;  // 0 = default 2|w| + 2*max relator length
};

struct SearchStats {
  std::int64_t nodes_expanded = 0;
  std::int64_t max_word_length_reached = 0;
  bool length_pruned = false;
};

struct AreaResult {
  enum class Status { Exact, LowerBound, NotNullhomotopic, Unknown };
  Status status = Status::Unknown;
  std::int64_t area = 0;         // Exact: the area; LowerBound: the bound
  std::int64_t lower_bound = 0;  // certified lower bound when a family oracle applies
  bool globally_certified = false;  // lower bound met the found value
  SearchStats stats;
};

AreaResult combinatorial_area(const Word& w, const Presentation& p, const SearchLimits& limits = {});

// Certified area lower bound for the built-in families (|exponent sum|/m for
// cyclic factors, L1 winding norm for the standard Z^2 presentation).
std::int64_t area_lower_bound(const Word& w, const Presentation& p);

struct DehnTable {
  growth::GrowthTable table;
  std::vector<bool> exact;  // per entry: every contributing area was certified exact
  bool all_exact() const;
};

// n -> max area over freely reduced nullhomotopic words of length <= n.
// Requires a recognized family (or accepts bounded-search nullhomotopy via
// allow_search), enumerating all reduced words of length <= n_max.
DehnTable dehn_function(const Presentation& p, std::int64_t n_max, const SearchLimits& limits = {},
                        bool allow_search = false);

}  // namespace dehn::presentation

#endif
