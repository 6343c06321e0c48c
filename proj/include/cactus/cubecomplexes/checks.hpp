#pragma once

#include <string>
#include <vector>

#include "cactus/cubecomplexes/complex.hpp"
#include "cactus/groups/presentation.hpp"

namespace cactus::cubes {

// Link of a vertex: vertices are the sub-1-cubes cornered there, simplices
// the link sets of the sub-cubes cornered there.
struct VertexLink {
  int vertex = -1;
  std::vector<int> vertices;
  std::vector<std::vector<int>> simplices;  // sorted, one per sub-cube of dim >= 1
  std::vector<int> simplex_cube;            // sub-cube realising each simplex
};

VertexLink vertex_link(const CubeComplex& c, int vertex);

struct GromovReport {
  bool ok = true;
  bool closure = true;  // flips, collapses and link data all present
  bool bullet1 = true;  // squares have two distinct corners that determine them
  bool bullet2 = true;  // every clique spans exactly one sub-cube
  std::string witness;
  explicit operator bool() const { return ok; }
};

GromovReport check_gromov_flag(const CubeComplex& c, int jobs = 1);

struct CombinatorialMap {
  const CubeComplex* source = nullptr;
  const CubeComplex* target = nullptr;
  std::vector<int> subcube_map;
};

// Maps a D-family complex onto a coarser quotient through the index keys.
CombinatorialMap quotient_map(const CubeComplex& source, const CubeComplex& target);
CombinatorialMap identity_map(const CubeComplex& c);

// Throws DomainError when the map is not combinatorial.
Report check_local_isometry(const CombinatorialMap& phi);

// Little cubes (tau, Z) with Z the edges at t = 0.
struct LittleCube {
  std::string key;  // ZF index in the quotient, ":0" after zero edges
  int dim = 0;
  int subcube = -1;
  std::vector<forests::Clade> zeros;
  std::vector<int> faces;
};

struct Subdivision {
  Family family = Family::D;
  int n = 0;
  std::vector<std::vector<LittleCube>> cells;  // by dimension
  std::vector<std::size_t> f_vector() const;
};

Subdivision cubical_subdivision(const CubeComplex& c);

// Generators are the directed 1-cells off a BFS spanning tree, as edge
// letters e[id] and e[id]^-1; relators are the 2-cell boundaries.
groups::Presentation extract_presentation(const CubeComplex& c, int base = 0);
// Deletes generators that occur as single-letter relators until none remain.
groups::Presentation tietze_reduce(const groups::Presentation& p);
// Number of generators counted up to inverse pairing.
int rank(const groups::Presentation& p);
// Edge letters renamed to s_A (hat D) or sigma_ij (hat P).
groups::Presentation relabel_pure(const groups::Presentation& p, const CubeComplex& c);

}  // namespace cactus::cubes
