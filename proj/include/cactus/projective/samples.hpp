#pragma once

#include <random>
#include <string>
#include <vector>

#include "cactus/projective/varieties.hpp"

namespace cactus::proj {

// x(t) = sum_m coeff[m] t^(m + low), a Laurent polynomial in t.
struct Laurent {
  int low = 0;
  std::vector<Scalar> coeff;

  static Laurent constant(const Scalar& c) { return {0, {c}}; }
  bool is_zero() const;
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
};

// Limit as t -> 0 of a(t)/b(t) in the projective line. Throws DomainError if
// both are identically zero.
ProjPoint limit_ratio(const Laurent& a, const Laurent& b);

// Random configuration curves with frequent coincidences at each order, so
// that the limits land on boundary strata; the curves are pairwise distinct.
std::vector<Laurent> random_curves(int n, std::mt19937_64& rng);

// A point of the variety obtained as the limit of the open-locus formulas
// (orbit_map, cross_ratios, mw_point, the characters z_i/z_j) along random
// curves. Epsilon is used by the deformed families only.
Tuple sample_member(Variety v, int n, const Scalar& eps, std::mt19937_64& rng);

struct Perturbation {
  Tuple point;
  std::string coordinate;  // e.g. "nu[1,2]", "alpha[2,3]" or "mu[1,2,3]"
};

// Replaces one coordinate by a different value; the inverse or antisymmetry
// relation through that coordinate then fails.
Perturbation perturb(Variety v, const Tuple& t, std::mt19937_64& rng);

}  // namespace cactus::proj
