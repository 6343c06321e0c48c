#pragma once

#include <map>
#include <vector>

#include "cactus/projective/maps.hpp"
#include "cactus/realgeometry/star.hpp"

namespace cactus::real {

using EdgeValues = std::map<forests::Clade, Rational>;

// The diffeomorphism B on C(tau)°: b_trunk = f(t_trunk) and
// b_e = f(t_e P) / f(P) with P the product of t below e, or t_e when P = 0.
// Applies tree by tree; throws DomainError when a trunk value is 1.
EdgeValues b_map(const CubePoint& p, const RationalDiffeo& f = default_diffeo());

// b-coordinates of a configuration: diff[r] = z_{w(r+1)} - z_{w(r+2)} along the
// planar order of the binary tree tau. Throws DomainError when a ratio has a
// vanishing denominator.
EdgeValues chart_b(const forests::PlanarForest& tau, const std::vector<Rational>& diff);

// Coordinates of H_tau(b) on one tree: delta_ij = z_i - z_j and the mu_ijk
// of the leaves of the tree.
struct ChartPoint {
  std::vector<int> labels;
  std::map<proj::Pair, Rational> delta;
  std::map<proj::Triple, proj::ProjPoint> mu;
};

// Throws DomainError, naming the polynomial, when b leaves the chart domain.
ChartPoint chart_H(const forests::PlanarForest& tau, const EdgeValues& b);

struct ThetaImage {
  // The binary forest whose charts were used: trunks with value 1 are split
  // off and vertices of higher valence are resolved by edges with value 1.
  forests::PlanarForest tau;
  EdgeValues t;
  proj::Tuple flower;  // nu = delta^{-1} over [n]; 0 between trees
  proj::Tuple mu;      // mu on triples inside a tree, labels [n]
  proj::Strata strata;

  // The Deligne-Mumford tuple of one tree (at least three leaves).
  proj::Tuple tree_mu(int tree) const;
};

ThetaImage theta(const CubePoint& p, const RationalDiffeo& f = default_diffeo());

// The recursion grouping neighbours at minimal distance. Leaves are labelled
// by the index of z (1-based) and ordered by increasing z.
forests::PlanarForestWithZeros tree_of_configuration(const std::vector<Rational>& z);
// The same tree with its trunk decorated by 0 (defined up to reversal).
forests::PlanarForestWithZeros tree_of_projective_configuration(const std::vector<Rational>& z);

}  // namespace cactus::real
