#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cactus/projective/scalar.hpp"
#include "json.hpp"

namespace cactus::proj {

// LosevManin: alpha on pairs. Flower: nu on pairs (delta = nu^-1).
// DeformedFlower: nu and epsilon. DeligneMumford: mu on triples.
// MauWoodward / DeformedMauWoodward: nu and mu (and epsilon).
enum class Variety { LosevManin, Flower, DeformedFlower, DeligneMumford, MauWoodward, DeformedMauWoodward };

// Accepts "T", "f", "Cf", "M", "Q", "CQ" and the enumerator names.
Variety parse_variety(const std::string& name);
std::string variety_name(Variety v);
bool has_pairs(Variety v);
bool has_triples(Variety v);
bool is_deformed(Variety v);

using Pair = std::pair<int, int>;
using Triple = std::array<int, 3>;

// Coordinates on ordered pairs and triples of distinct labels. The pair
// coordinate is alpha for LosevManin and nu otherwise.
struct Tuple {
  std::vector<int> labels;  // sorted
  std::optional<Scalar> eps;
  std::map<Pair, ProjPoint> nu;
  std::map<Triple, ProjPoint> mu;

  int n() const { return static_cast<int>(labels.size()); }
  // Throw DomainError when the coordinate is missing.
  const ProjPoint& pair(int i, int j) const;
  const ProjPoint& triple(int i, int j, int k) const;
  // delta_ij = nu_ij^-1.
  ProjPoint delta(int i, int j) const { return pair(i, j).inverse(); }
  Scalar epsilon() const { return eps.value_or(Scalar(0)); }
  Tuple conj() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;
};

std::vector<int> iota_labels(int n);
std::vector<Pair> ordered_pairs(const std::vector<int>& labels);
std::vector<Triple> ordered_triples(const std::vector<int>& labels);

// Fills nu_ji from nu_ij (i < j) by the antisymmetry relation of the variety:
// alpha_ji = alpha_ij^-1, nu_ji = eps - nu_ij (eps = 0 when absent).
void complete_pairs(Tuple& t, Variety v);
// Fills the six orderings of each triple from mu_ijk with i < j < k through
// mu_ikj = mu_ijk^-1 and mu_jik = 1 - mu_ijk.
void complete_triples(Tuple& t);
// Flower-type tuple from delta_ij on i < j.
Tuple from_delta(const std::vector<int>& labels, const std::map<Pair, ProjPoint>& delta_upper,
                 std::optional<Scalar> eps = std::nullopt);

struct Violation {
  std::string equation;  // e.g. "triangle"
  std::vector<int> indices;
  std::string text;
};

struct MembershipReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<Violation> violations;  // sorted by equation, then indices
  std::string witness() const;
  explicit operator bool() const { return ok; }
};

// Evaluates every multihomogenised defining polynomial. Throws DomainError
// when a coordinate is missing or epsilon presence does not match.
MembershipReport check_membership(Variety v, const Tuple& t);

nlohmann::json to_json(const Tuple& t);
// Pairs are keyed "i,j" with values ["u","v"], a single value, or "inf".
Tuple tuple_from_json(const nlohmann::json& j);

}  // namespace cactus::proj
