#pragma once

#include <map>
#include <vector>

#include "cactus/combinatorics/partitions.hpp"
#include "cactus/forests/forest.hpp"
#include "cactus/projective/varieties.hpp"
#include "cactus/realgeometry/extreal.hpp"
#include "json.hpp"

namespace cactus::real {

// A point of the parallelepiped X_n^w: order[k] = w(k+1) and
// diff[k] = x_{w(k+1)} - x_{w(k+2)} in [0,1].
struct StarPoint {
  std::vector<int> order;
  std::vector<Rational> diff;

  // Validates: order is a permutation of 1..n, diff has n-1 entries in [0,1].
  StarPoint(std::vector<int> order, std::vector<Rational> diff);
  static StarPoint star_point(int n);

  int n() const { return static_cast<int>(order.size()); }
  bool is_interior() const;
  // Positions with x_{w(1)} = 0, indexed by label (entry 0 unused).
  std::vector<Rational> positions() const;
  // Same point of R^n/R (possibly from different parallelepipeds).
  bool same_point(const StarPoint& other) const;
  // The S_n action: labels l -> w(l), with w given in one-line notation.
  StarPoint act(const std::vector<int>& w) const;
};

struct StarClass {
  comb::SetPartition S;
  // Per part: position of each label relative to the minimal label of the part.
  std::map<int, Rational> reduced;
};

StarClass star_equivalence_class(const StarPoint& x);
bool star_related(const StarPoint& a, const StarPoint& b);

// A point of the sub-cube [0,1]^{E(tau)}; edges are keyed by their clade.
struct CubePoint {
  forests::PlanarForest tau;
  std::map<forests::Clade, Rational> t;

  // Validates the edge set and the range of the values.
  CubePoint(forests::PlanarForest tau, std::map<forests::Clade, Rational> t);
  const Rational& at(int vertex) const;
  // Product of t over the edges from the root up to the vertex.
  Rational a(int vertex) const;
};

StarPoint gamma(const CubePoint& p);

// Sign of Theta. Chart: delta_ij = sum of f(x_k - x_{k+1}) over the order, so
// delta is nonnegative on the fundamental parallelepiped and agrees with the
// chart coordinates z_i - z_j. Printed: the sum of f(x_{k+1} - x_k).
enum class ThetaSign { Chart, Printed };

using Delta = std::map<proj::Pair, ExtReal>;

Delta theta_star(const StarPoint& x, const RationalDiffeo& f = default_diffeo(), ThetaSign sign = ThetaSign::Chart);
// nu = delta^{-1} as a point of the flower space (epsilon absent).
proj::Tuple flower_tuple(const std::vector<int>& labels, const Delta& delta);

nlohmann::json star_to_json(const StarPoint& x);
StarPoint star_from_json(const nlohmann::json& j);
nlohmann::json cube_to_json(const CubePoint& p);
// {"forest": "((1,(2,3)),4);", "t": {"1,2,3": "1/2", ...}} with edges named by
// the labels above them.
CubePoint cube_from_json(const nlohmann::json& j);

}  // namespace cactus::real
