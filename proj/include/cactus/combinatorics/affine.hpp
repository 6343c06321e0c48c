#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cactus/combinatorics/permutation.hpp"
#include "json.hpp"

namespace cactus::comb {

// Bijection f : Z -> Z with f(a+n) = f(a)+n and sum f(1..n) = n(n+1)/2,
// stored by its window (f(1),...,f(n)).
class AffinePermutation {
public:
  AffinePermutation() = default;
  explicit AffinePermutation(std::vector<long long> window);

  static AffinePermutation identity(int n);
  // f_sigma(i + nm) = sigma(i) + nm.
  static AffinePermutation from_permutation(const Permutation& sigma);
  // f_k(i + nm) = i + n k_i + nm, requires sum k = 0.
  static AffinePermutation translation(const std::vector<long long>& k);
  // sigma_k for k = 0..n-1, swapping k and k+1 periodically.
  static AffinePermutation simple_reflection(int n, int k);

  int n() const { return static_cast<int>(win_.size()); }
  const std::vector<long long>& window() const { return win_; }
  long long operator()(long long a) const;

  AffinePermutation operator*(const AffinePermutation& rhs) const;
  AffinePermutation inverse() const;
  bool is_identity() const;
  Permutation reduce() const;

  std::string to_string() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

private:
  std::vector<long long> win_;
};

// Conjugation by the rotation: (r^a . f)(x) = f(x - a) + a.
AffinePermutation rotate(const AffinePermutation& f, long long a);

// hat w_{ij}: reverses every interval [i,j] + nZ (with j replaced by j+n when j < i).
AffinePermutation affine_interval_reversal(int i, int j, int n);

struct AffineDecomposition {
  Permutation sigma;
  std::vector<long long> k;
};

// f = f_sigma o f_k.
AffineDecomposition affine_decompose(const AffinePermutation& f);
AffinePermutation affine_recompose(const AffineDecomposition& d);

// Element (f, r^a) of the extended affine symmetric group AS_n x| Z/n with
// product (f, r^a)(g, r^b) = (f (r^a . g), r^{a+b}).
class ExtAffinePermutation {
public:
  ExtAffinePermutation() = default;
  ExtAffinePermutation(AffinePermutation base, long long shift);

  static ExtAffinePermutation identity(int n);
  static ExtAffinePermutation rotation(int n, long long a);

  int n() const { return base_.n(); }
  const AffinePermutation& base() const { return base_; }
  int shift() const { return shift_; }

  // Realisation as a periodic bijection of Z, defined modulo translation by n:
  // x -> base(x + shift).
  long long operator()(long long x) const { return base_(x + shift_); }

  ExtAffinePermutation operator*(const ExtAffinePermutation& rhs) const;
  ExtAffinePermutation inverse() const;
  bool is_identity() const;
  // Image in S_n: reduce(base) * r^shift.
  Permutation reduce() const;

  std::string to_string() const;

  friend bool operator==(const ExtAffinePermutation&, const ExtAffinePermutation&) = default;
  friend auto operator<=>(const ExtAffinePermutation&, const ExtAffinePermutation&) = default;

private:
  AffinePermutation base_;
  int shift_ = 0;
};

// Element (sigma, [k]) of S_n x| Z^n/Z, with [k] normalised so that k_n = 0.
// Product: (s, k)(t, l) = (s t, k o t + l), where (k o t)_i = k_{t(i)}.
struct SemidirectElement {
  Permutation sigma;
  std::vector<long long> k;

  SemidirectElement operator*(const SemidirectElement& rhs) const;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

std::vector<long long> normalise_mod_diagonal(std::vector<long long> k);

SemidirectElement ext_affine_to_semidirect(const ExtAffinePermutation& g);
ExtAffinePermutation semidirect_to_ext_affine(const SemidirectElement& e);

// All valid windows with entries in [-bound, bound].
std::vector<AffinePermutation> bounded_affine_permutations(int n, long long bound);

void to_json(nlohmann::json& j, const AffinePermutation& f);
void from_json(const nlohmann::json& j, AffinePermutation& f);

}  // namespace cactus::comb
