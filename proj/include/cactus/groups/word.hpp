#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/combinatorics/permutation.hpp"

namespace cactus::groups {

enum class LetterKind {
  S,          // s_{ij}, cactus-family interval reverser (involution)
  Sigma,      // sigma_i, simple transposition (sigma_0 is the affine one)
  Perm,       // element of the second copy of S_n, one-line data
  Rot,        // r^p, power of the rotation
  PureS,      // s_A, A an ordered subset; inverse s_{A^r}
  PureSigma,  // sigma_{ij}; inverse sigma_{ji}
  Edge,       // directed 1-cell of a cell complex: data = {id, +1 or -1}
};

struct Letter {
  LetterKind kind = LetterKind::S;
  std::vector<int> data;

  static Letter s(int i, int j) { return {LetterKind::S, {i, j}}; }
  static Letter sigma(int i) { return {LetterKind::Sigma, {i}}; }
  static Letter perm(const comb::Permutation& w) { return {LetterKind::Perm, w.images()}; }
  static Letter rot(int p) { return {LetterKind::Rot, {p}}; }
  static Letter pure_s(std::vector<int> a) { return {LetterKind::PureS, std::move(a)}; }
  static Letter pure_sigma(int i, int j) { return {LetterKind::PureSigma, {i, j}}; }
  static Letter edge(int id, int dir) { return {LetterKind::Edge, {id, dir}}; }

  // Letters of the finite factor (S_n copy or Z/n) are multiplied, not rewritten.
  bool is_factor() const { return kind == LetterKind::Perm || kind == LetterKind::Rot; }
  bool is_involution() const { return kind == LetterKind::S || kind == LetterKind::Sigma; }
  comb::Permutation permutation() const;
  Letter inverse() const;
  std::string to_string() const;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
std::string to_string(const Word& w);

// Parses "s[1,3] w(2 3 1) r^2 s[A:1,4,2] sigma[2] sigma[1,3] e[4]^-1".
// Any token may carry a trailing "^-1".
Word parse_word(std::string_view text);

// Free reduction: cancels x x^{-1}, multiplies adjacent factor letters of the
// same kind (Rot exponents modulo n) and drops identities.
Word reduce(const Word& w, int n);

// Canonical representative of the cyclic word up to rotation and inversion,
// after cyclic reduction. Empty for relators that reduce to the identity.
Word cyclic_class(const Word& w, int n);

// w = s_{k_1} ... s_{k_m} with m the Coxeter length.
std::vector<int> reduced_word(const comb::Permutation& w);

}  // namespace cactus::groups
