#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cactus/combinatorics/affine.hpp"
#include "cactus/combinatorics/permutation.hpp"
#include "cactus/groups/presentation.hpp"
#include "cactus/groups/word.hpp"

namespace cactus::groups {

// Concrete targets with solvable word problem.
enum class Target { Presentation, Symmetric, Affine, ExtAffine };

struct GroupHom {
  std::string name;  // "AC->AS"
  int n = 0;
  Presentation source;
  Target target = Target::Presentation;
  Presentation target_presentation;  // family of the target, also for concrete ones
  std::function<Word(const Letter&)> image_of;

  Word image(const Word& w) const;
};

// Arrows: C->S, C->extAC, AC->AS, AC->extAC, AC->vC, extAC->vC, extAC->extAS,
// extAC->S, S->extAS, AS->vS, extAS->vS, extAS->S, vC->vS, vC->S, vS->S,
// PvC->vC, PvS->vS.
GroupHom hom(const std::string& arrow, int n);
std::vector<std::string> diagram_arrows();

// Evaluation in the concrete groups. Letters: Perm, Rot, Sigma for S_n;
// Sigma for AS_n; Sigma and Rot for the extended group.
comb::Permutation eval_symmetric(const Word& w, int n);
comb::AffinePermutation eval_affine(const Word& w, int n);
comb::ExtAffinePermutation eval_ext_affine(const Word& w, int n);

// Homomorphisms vC_n, vS_n -> S_n x S_n: s_{ij} -> (w_{ij}, 1), sigma_i -> (s_i, 1),
// w -> (w, w). The first factor is the projection to S_n.
std::pair<comb::Permutation, comb::Permutation> virtual_shadow(const Word& w, int n);

// Reduced sigma-words of affine and extended affine permutations.
Word affine_word(const comb::AffinePermutation& f);
Word ext_affine_word(const comb::ExtAffinePermutation& g);

// sigma_{ij} = w sigma_k w_{k,k+1} w^{-1} and s_A = w s_{ij} w_{ij} w^{-1}, with
// witness k = 1 (resp. i = 1) and w increasing off the prescribed positions.
Word pure_generator(const Letter& g, int n);
// Same with an explicit witness (w, k) or (w, i, j); validated.
Word pure_generator_with(const Letter& g, const comb::Permutation& w, int i, int j);
// u s_A u^{-1} = s_{u(A)}, u sigma_{ij} u^{-1} = sigma_{u(i) u(j)}.
Letter semidirect_action(const comb::Permutation& u, const Letter& g);

enum class Status { Proven, Failed, Inconclusive };
std::string to_string(Status s);

struct RelatorCheck {
  Word relator;
  Word image;
  Status status = Status::Inconclusive;
  int depth = -1;
  std::string witness;
};

struct HomReport {
  std::string arrow;
  std::vector<RelatorCheck> checks;
  bool all_proven() const;
  int count(Status s) const;
};

enum class VerifyMode { SolvableTarget, BoundedRewrite };
HomReport verify_hom(const GroupHom& h, VerifyMode mode, int depth = 6, int jobs = 1);

struct DiagramCheck {
  std::string description;
  bool ok = true;
  std::string witness;
};
// Commutativity of the diagram of groups on generators, evaluated in ExtAS_n
// (left square) and through virtual_shadow (right square), plus the
// compatibility of all projections to S_n.
std::vector<DiagramCheck> check_diagram(int n);

}  // namespace cactus::groups
