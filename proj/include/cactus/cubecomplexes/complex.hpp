#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cactus/combinatorics/partitions.hpp"
#include "cactus/combinatorics/permutation.hpp"
#include "cactus/forests/forest.hpp"
#include "json.hpp"

namespace cactus::cubes {

// D: planar forests; HatD: trees may be permuted; BreveD: trees may be
// rotated cyclically. P, HatP, BreveP: the permutahedron and its quotients,
// indexed by ordered / unordered / cyclic set partitions.
enum class Family { D, HatD, BreveD, P, HatP, BreveP };

Family parse_family(const std::string& name);
std::string family_name(Family f);
bool is_cubical(Family f);

struct DirectedEdge {
  int edge = -1;
  bool forward = true;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

struct Cell {
  int dim = 0;
  std::string key;
  std::vector<int> faces;  // (dim-1)-cells, with multiplicity
  // Representative index: a planar forest (D family) or ordered parts (P family).
  std::optional<forests::PlanarForest> forest;
  std::vector<comb::Block> parts;
  // 1-cells: endpoints, and the order of the moving labels read at the tail.
  int tail = -1;
  int head = -1;
  std::vector<int> forward_order;
  // 2-cells: closed boundary path.
  std::vector<DirectedEdge> boundary;
};

// A sub-cube [0,1]^{E(tau)} of a big cube, D family only. Edge-indexed data
// follows the order of `edges`.
struct SubCube {
  std::string key;
  forests::PlanarForest rep;
  int dim = 0;
  int big = -1;     // cell id in cells[dim]
  int corner = -1;  // vertex id
  bool present = true;
  std::vector<forests::Clade> edges;
  std::vector<int> flip;
  std::vector<int> collapse;
  // For each edge e, the sub-1-cube that keeps only e.
  std::vector<int> link;

  int edge_index(forests::Clade c) const;
};

struct CubeComplex {
  Family family = Family::D;
  int n = 0;
  std::vector<std::vector<Cell>> cells;  // by dimension
  std::vector<SubCube> subcubes;
  std::vector<std::map<std::string, int>> cell_index;
  std::map<std::string, int> subcube_index;

  int dimension() const { return static_cast<int>(cells.size()) - 1; }
  std::vector<std::size_t> f_vector() const;
  int find_cell(int dim, const std::string& key) const;
  int find_subcube(const std::string& key) const;
  // Directed 1-cell crossed when moving along sub-1-cube `sub` away from its corner.
  DirectedEdge directed_edge_of(int sub) const;
};

// Index of a forest in the quotient of the given D-family complex.
std::string quotient_key(const forests::PlanarForest& f, Family fam);
std::string quotient_key(const comb::OrderedSetPartition& p, Family fam);

CubeComplex build_complex(Family fam, int n);
inline CubeComplex build_D(int n) { return build_complex(Family::D, n); }
inline CubeComplex build_hatD(int n) { return build_complex(Family::HatD, n); }
inline CubeComplex build_breveD(int n) { return build_complex(Family::BreveD, n); }
inline CubeComplex build_P(int n) { return build_complex(Family::P, n); }
inline CubeComplex build_hatP(int n) { return build_complex(Family::HatP, n); }
inline CubeComplex build_breveP(int n) { return build_complex(Family::BreveP, n); }

// Closure of one cell, reindexed; sub-cube data is dropped.
CubeComplex cell_closure(const CubeComplex& c, int dim, int id);
// Negative control: marks one sub-cube as absent.
CubeComplex remove_subcube(const CubeComplex& c, int sub);

forests::PlanarForest relabel(const forests::PlanarForest& f, const comb::Permutation& u);

struct Report {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
};

// Face-of-face parity, 1-cell endpoints and closed 2-cell boundaries.
Report check_face_consistency(const CubeComplex& c);
// u acts by relabelling; checks that it permutes cells and commutes with faces.
Report check_relabel_action(const CubeComplex& c, const comb::Permutation& u);

nlohmann::json to_json(const CubeComplex& c);
std::string to_dot(const CubeComplex& c);

}  // namespace cactus::cubes
