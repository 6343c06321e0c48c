#pragma once

#include <set>
#include <string>
#include <vector>

#include "cactus/groups/word.hpp"
#include "json.hpp"

namespace cactus::groups {

// Finite factor whose letters are multiplied by their group law instead of
// being rewritten: the second copy of S_n in vC_n and vS_n, or Z/n in the
// extended affine groups.
enum class Factor { None, Symmetric, Cyclic };

struct Presentation {
  std::string family;
  int n = 0;
  Factor factor = Factor::None;
  // One entry per generator; inverses are given by Letter::inverse.
  std::vector<Letter> generators;
  std::vector<Word> relators;

  bool declares(const Letter& x) const;
  // Nontrivial relators as canonical cyclic words.
  std::set<Word> relator_classes() const;
};

// family: cactus, affine_cactus, ext_affine_cactus, virtual_cactus,
// virtual_sym, pure_virtual_cactus, pure_virtual_sym, symmetric, affine_sym,
// ext_affine_sym. Short names C, AC, extAC, vC, vS, PvC, PvS, S, AS, extAS
// are accepted too.
Presentation make_presentation(const std::string& family, int n);
std::string canonical_family(const std::string& name);

// Ordered subsets of [n] of size >= min_size, sorted.
std::vector<std::vector<int>> ordered_subsets(int n, int min_size);

struct ComparisonResult {
  bool isomorphic = false;
  std::string witness;
};

// Same generator set and same set of nontrivial relator classes.
ComparisonResult compare_presentations(const Presentation& a, const Presentation& b);

nlohmann::json to_json(const Presentation& p);

}  // namespace cactus::groups
