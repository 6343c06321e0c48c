#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactus/combinatorics/partitions.hpp"
#include "cactus/forests/forest.hpp"
#include "cactus/projective/varieties.hpp"

namespace cactus::proj {

// ---- strata of the flower space ----

struct Strata {
  comb::SetPartition S;  // i ~ j iff delta_ij is finite
  comb::SetPartition B;  // i ~ j iff delta_ij = 0
  int dim_S = 0;         // n - m
  int dim_B = 0;         // n - 1 - r + p, the stratum of the cactus flower space
  int dim_B_flower = 0;  // r - 1, the stratum of the flower space itself
};

// Throws DomainError for non-members of the flower space (epsilon must be 0
// or absent) and InvariantViolation if a relation is not transitive.
Strata classify_strata(const Tuple& t);

// Dimensions of the strata of the cactus flower space, computed as the rank
// of the Jacobian of a chart parameterisation at a random rational point.
int tangent_dimension_S(const comb::SetPartition& S, std::uint64_t seed = 1);
int tangent_dimension_B(const comb::SetPartition& B, std::uint64_t seed = 1);

// ---- open sets ----

// nu_ij finite when i, j are in different parts; nu_ij not in {0, eps} when
// they share a part.
bool open_cover_membership(const comb::SetPartition& S, const Tuple& t);

struct ChartReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  explicit operator bool() const { return ok; }
};

// Conditions on mu_ijk for i, j, k on one tree of the binary forest tau:
// meet(i,k) above meet(i,j): mu != 1, inf; equal: mu != 0, inf; below: mu != 0, 1.
ChartReport chart_membership(const forests::PlanarForest& tau, const Tuple& t);

// ---- completion from a product chart ----

// blocks[k] carries nu on p(S_k) (labels S_k); core carries nu on the
// minimal elements of the parts. Returns the unique full nu-tuple; epsilon
// absent means the flower space.
Tuple extend_nu(const comb::SetPartition& S, const std::vector<Tuple>& blocks, const Tuple& core,
                const std::optional<Scalar>& eps);

// ---- maps ----

// alpha_ij = 1 - eps delta_ij on a deformed flower tuple, and back.
Tuple losev_manin_iso(const Tuple& flower);
Tuple losev_manin_inverse(const Tuple& alpha, const Scalar& eps);

// The group scheme: x1 * x2 = x1 + x2 - eps x1 x2.
Scalar g_mul(const Scalar& x1, const Scalar& x2, const Scalar& eps);
Scalar g_inv(const Scalar& x, const Scalar& eps);
// nu_ij = (1 - eps x_j) / (x_i - x_j); x_k labelled k.
Tuple orbit_map(const std::vector<Scalar>& x, const Scalar& eps);
// A deformed Mau-Woodward point over the open locus: mu_ijk = (x_i-x_k)/(x_i-x_j)
// and nu_ij = (eps x_i - 1)/(x_i - x_j).
Tuple mw_point(const std::vector<Scalar>& x, const Scalar& eps);

// mu_ijk = (z_i - z_k)/(z_i - z_j) when z_l is infinite, otherwise the cross
// ratio with fourth point z_l. Labels are 1..z.size().
Tuple cross_ratios(const std::vector<Scalar>& z, const std::optional<Scalar>& zl = std::nullopt);
// From mu on t([n+1]): alpha_ij = mu_{n+1,i,j}.
Tuple collapse_to_LM(const Tuple& dm);
// delta_ij = (u_i - u_j)/(y + eps u_i).
Tuple eps_family_delta(const std::vector<Scalar>& u, const Scalar& y, const Scalar& eps);

// ---- involutions ----

std::pair<Scalar, Scalar> sigma_group(const Scalar& x, const Scalar& eps);
// Flower types: nu -> nu - eps, eps -> -eps. Mau-Woodward types additionally
// mu_ijk -> mu_ijk (1 - eps nu_kj^-1). DeligneMumford (labels [n+1]):
// mu_ijk -> mu_ijk mu_{n+1,k,j} and mu_{i,j,n+1} -> mu_{j,i,n+1}.
Tuple involution_sigma(Variety v, const Tuple& t);
// conj(t) == sigma(t).
bool is_twisted_real(Variety v, const Tuple& t);

// mu on t([n+1]) to the deformed Mau-Woodward tuple nu_ij = eps mu_{i,j,n+1}.
Tuple dm_to_q(const Tuple& dm, const Scalar& eps);
Tuple q_to_dm(const Tuple& q);

}  // namespace cactus::proj
