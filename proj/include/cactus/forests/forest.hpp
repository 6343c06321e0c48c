#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/combinatorics/permutation.hpp"
#include "json.hpp"

namespace cactus::forests {

// Leaf-label set above an internal edge, as a bitmask (bit l for label l).
// Identifies an edge independently of vertex numbering.
using Clade = std::uint64_t;

struct Vertex {
  int parent = -1;            // -1 for the top vertex of a trunk
  std::vector<int> children;  // ordered ascending edges
  int label = 0;              // > 0 exactly for leaves
};

// Ordered sequence of planar rooted trees. Each tree is stored by the upper
// vertex of its trunk; the root itself is implicit. Internal edges are
// identified with their upper (internal) vertex.
class PlanarForest {
public:
  PlanarForest() = default;

  // Newick-like syntax, one tree per ';'-terminated item: "((1,(2,3)),4);5;".
  static PlanarForest parse(std::string_view text);
  static PlanarForest singletons(const std::vector<int>& order);
  // Builds from explicit arrays; validates the forest invariants.
  static PlanarForest from_arrays(std::vector<Vertex> vertices, std::vector<int> tops);

  int num_vertices() const { return static_cast<int>(v_.size()); }
  int num_leaves() const { return num_leaves_; }
  int num_trees() const { return static_cast<int>(tops_.size()); }
  const std::vector<int>& tops() const { return tops_; }
  const Vertex& vertex(int id) const { return v_[static_cast<std::size_t>(id)]; }
  bool is_leaf(int id) const { return vertex(id).label > 0; }
  bool is_trunk(int id) const { return vertex(id).parent < 0; }

  // Internal vertices (= internal edges) in depth-first preorder.
  std::vector<int> internal_vertices() const;
  int num_internal() const;
  // Leaf labels above a vertex, in planar order.
  std::vector<int> leaves_above(int id) const;
  // w_tau: leaf labels read left to right across all trees.
  std::vector<int> leaf_order() const;
  // w_tau as a permutation, i -> label of the i-th leaf (labels must be [n]).
  comb::Permutation total_order() const;
  std::vector<int> labels() const;

  Clade clade(int id) const;
  int vertex_with_clade(Clade c) const;
  int leaf_vertex(int label) const;
  int tree_of(int id) const;
  int depth(int id) const;

  // r_e: reverse child orders at id and at every vertex above it.
  PlanarForest flip(int id) const;
  // d_e: contract the edge below id. A trunk splits into consecutive trees.
  PlanarForest collapse(int id) const;
  // Meet of two leaves; nullopt when they lie in different trees.
  std::optional<int> meet(int label_a, int label_b) const;

  // Sub-forest consisting of a single tree.
  PlanarForest tree(int index) const;

  const std::string& to_string() const { return key_; }
  // Serialisation with ":0" after each vertex whose edge is in `marked`.
  std::string to_string(const std::set<Clade>& marked, const char* mark = ":0") const;
  std::string tree_string(int top, const std::set<Clade>& marked = {}, const char* mark = ":0") const;

  friend bool operator==(const PlanarForest& a, const PlanarForest& b) { return a.key_ == b.key_; }
  friend bool operator<(const PlanarForest& a, const PlanarForest& b) { return a.key_ < b.key_; }

private:
  void finalize();

  std::vector<Vertex> v_;
  std::vector<int> tops_;
  int num_leaves_ = 0;
  std::string key_;
};

// Labels of the sub-forest must be [n]; PF_n(k) sorted by serialisation.
std::vector<PlanarForest> enumerate_planar_forests(int n, int k);
std::vector<PlanarForest> enumerate_planar_forests(int n);

// The interval [i,j] (1-based positions in w_tau) of labels above id.
std::pair<int, int> label_interval(const PlanarForest& f, int id);

// Applies the canonical orientation at every vertex whose clade is in
// `flippable`, processing ancestors first: flip when the minimal label of the
// first child exceeds the minimal label of the last child.
PlanarForest orient_canonically(const PlanarForest& f, const std::set<Clade>& flippable);

// Unordered planar forest, modulo flips at the declared edges.
class UnorderedPlanarForest {
public:
  UnorderedPlanarForest() = default;
  UnorderedPlanarForest(const PlanarForest& f, std::set<Clade> flippable);

  const PlanarForest& representative() const { return rep_; }
  const std::set<Clade>& flippable() const { return flip_; }
  std::string to_string() const { return rep_.to_string(flip_, ":~"); }

  friend bool operator==(const UnorderedPlanarForest& a, const UnorderedPlanarForest& b) {
    return a.to_string() == b.to_string();
  }
  friend bool operator<(const UnorderedPlanarForest& a, const UnorderedPlanarForest& b) {
    return a.to_string() < b.to_string();
  }

private:
  PlanarForest rep_;
  std::set<Clade> flip_;
};

// Big-cube index of the hat complex: unordered, modulo flips at every edge.
UnorderedPlanarForest flip_class(const PlanarForest& f);

// Unordered planar forest with some internal edges decorated by 0, modulo
// flips at decorated edges.
class PlanarForestWithZeros {
public:
  PlanarForestWithZeros() = default;
  PlanarForestWithZeros(const PlanarForest& f, std::set<Clade> zeros);
  // "((1,(2,3)):0,4);" with ":0" after a decorated subtree.
  static PlanarForestWithZeros parse(std::string_view text);

  const PlanarForest& forest() const { return rep_; }
  const std::set<Clade>& zeros() const { return zeros_; }
  // Internal edges not decorated by 0.
  std::vector<Clade> free_edges() const;
  int dimension() const { return static_cast<int>(free_edges().size()); }
  std::string to_string() const { return rep_.to_string(zeros_); }

  friend bool operator==(const PlanarForestWithZeros& a, const PlanarForestWithZeros& b) {
    return a.to_string() == b.to_string();
  }
  friend bool operator<(const PlanarForestWithZeros& a, const PlanarForestWithZeros& b) {
    return a.to_string() < b.to_string();
  }

private:
  PlanarForest rep_;
  std::set<Clade> zeros_;
};

// ZF_n sorted by serialisation.
std::vector<PlanarForestWithZeros> enumerate_zero_forests(int n);

// Forest whose roots may have several ascending edges; orders at non-root
// vertices are taken up to reversal.
class BushyForest {
public:
  BushyForest() = default;
  // bushy_root[t]: the top vertex of tree t is the root itself.
  BushyForest(const PlanarForest& f, std::vector<bool> bushy_root);

  const PlanarForest& forest() const { return rep_; }
  const std::vector<bool>& bushy_roots() const { return bushy_; }
  // "[(1,2,3),4];" lists the ascending edges of each root in brackets.
  std::string to_string() const { return key_; }

  friend bool operator==(const BushyForest& a, const BushyForest& b) { return a.key_ == b.key_; }
  friend bool operator<(const BushyForest& a, const BushyForest& b) { return a.key_ < b.key_; }

private:
  PlanarForest rep_;
  std::vector<bool> bushy_;
  std::string key_;
};

UnorderedPlanarForest zeros_to_planar(const PlanarForestWithZeros& z);
BushyForest zeros_to_bushy(const PlanarForestWithZeros& z);

std::uint64_t catalan(int m);

nlohmann::json forest_to_json(const PlanarForest& f, const std::set<Clade>& zeros = {});
PlanarForest forest_from_json(const nlohmann::json& j, std::set<Clade>* zeros = nullptr);

}  // namespace cactus::forests
