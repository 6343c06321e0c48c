#pragma once

#include <cstddef>

#include "cactus/groups/presentation.hpp"
#include "cactus/groups/word.hpp"

namespace cactus::groups {

struct RewriteResult {
  bool proven = false;
  int depth = -1;  // number of relator applications on the found chain
  std::size_t states = 0;
  bool truncated = false;  // state cap reached before the depth bound
};

// Bidirectional breadth-first search for a chain of relator applications
// from `lhs` to `rhs` in the group presented by `p`. A move replaces a
// subword u by v whenever u v^{-1} is a cyclic conjugate of a relator or its
// inverse; factor letters are multiplied out, so boundary factor letters of
// u are absorbed. Free reduction is applied after every move.
RewriteResult bounded_rewrite(const Presentation& p, const Word& lhs, const Word& rhs, int max_depth,
                              std::size_t max_states = 2'000'000);

}  // namespace cactus::groups
