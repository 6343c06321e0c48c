#include "cactus/realgeometry/charts.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cactus/errors.hpp"

namespace cactus::real {

using forests::Clade;
using forests::PlanarForest;

namespace {

std::string edge_name(const PlanarForest& f, int v) {
  std::string out = "b{";
  auto leaves = f.leaves_above(v);
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t k = 0; k < leaves.size(); ++k) out += (k ? "," : "") + std::to_string(leaves[k]);
  return out + "}";
}

bool is_binary(const PlanarForest& f) {
  for (int id : f.internal_vertices()) {
    if (f.vertex(id).children.size() != 2) return false;
  }
  return true;
}

// The leaves of one tree in planar order and the meets of consecutive leaves.
struct TreeView {
  std::vector<int> leaves;
  std::vector<int> meets;
  std::map<int, std::size_t> pos;
};

TreeView view_of(const PlanarForest& f, int top) {
  TreeView v;
  v.leaves = f.leaves_above(top);
  for (std::size_t k = 0; k < v.leaves.size(); ++k) v.pos[v.leaves[k]] = k;
  for (std::size_t k = 0; k + 1 < v.leaves.size(); ++k) v.meets.push_back(*f.meet(v.leaves[k], v.leaves[k + 1]));
  return v;
}

// Product of b over the edges from `from` down to `stop` (exclusive).
Rational relative(const PlanarForest& f, const EdgeValues& b, int from, int stop) {
  Rational prod = 1;
  for (int u = from; u != stop; u = f.vertex(u).parent) {
    if (u < 0) throw InvariantViolation("relative monomial: vertex is not above the base");
    prod *= b.at(f.clade(u));
  }
  return prod;
}

std::string relative_text(const PlanarForest& f, int from, int stop) {
  std::string out;
  for (int u = from; u != stop; u = f.vertex(u).parent) out += (out.empty() ? "" : "*") + edge_name(f, u);
  return out.empty() ? "1" : out;
}

int lower(const PlanarForest& f, int u, int v) { return f.depth(u) <= f.depth(v) ? u : v; }

// Sum of the consecutive differences between positions p and q, divided by a_base.
Rational span(const PlanarForest& f, const EdgeValues& b, const TreeView& tv, std::size_t p, std::size_t q, int base) {
  Rational s = 0;
  for (std::size_t r = std::min(p, q); r < std::max(p, q); ++r) s += relative(f, b, tv.meets[r], base);
  return p < q ? s : Rational(-s);
}

}  // namespace

EdgeValues b_map(const CubePoint& p, const RationalDiffeo& f) {
  EdgeValues out;
  for (int v : p.tau.internal_vertices()) {
    const Rational& tv = p.at(v);
    if (p.tau.is_trunk(v)) {
      if (tv == 1) throw DomainError("b_map: the trunk value must be below 1");
      out[p.tau.clade(v)] = f(tv).value();
      continue;
    }
    Rational below = 1;
    for (int u = p.tau.vertex(v).parent; u >= 0; u = p.tau.vertex(u).parent) below *= p.at(u);
    if (below == 0) {
      out[p.tau.clade(v)] = tv;
    } else {
      out[p.tau.clade(v)] = Rational(f(Rational(tv * below)).value() / f(below).value());
    }
  }
  return out;
}

EdgeValues chart_b(const PlanarForest& tau, const std::vector<Rational>& diff) {
  if (tau.num_trees() != 1 || !is_binary(tau)) throw DomainError("chart_b needs a binary tree");
  auto tv = view_of(tau, tau.tops()[0]);
  if (diff.size() + 1 != tv.leaves.size()) throw DomainError("chart_b needs n-1 consecutive differences");
  std::map<int, std::size_t> gap_of;
  for (std::size_t r = 0; r < tv.meets.size(); ++r) gap_of[tv.meets[r]] = r;
  EdgeValues out;
  for (int v : tau.internal_vertices()) {
    const Rational& d = diff[gap_of.at(v)];
    if (tau.is_trunk(v)) {
      out[tau.clade(v)] = d;
      continue;
    }
    const Rational& below = diff[gap_of.at(tau.vertex(v).parent)];
    if (below == 0) throw DomainError("chart_b: vanishing difference below " + edge_name(tau, v));
    out[tau.clade(v)] = Rational(d / below);
  }
  return out;
}

ChartPoint chart_H(const PlanarForest& tau, const EdgeValues& b) {
  if (tau.num_trees() != 1 || !is_binary(tau)) throw DomainError("chart_H needs a binary tree");
  for (int v : tau.internal_vertices()) {
    if (!b.count(tau.clade(v))) throw DomainError("chart_H: missing coordinate " + edge_name(tau, v));
  }
  int top = tau.tops()[0];
  auto tv = view_of(tau, top);
  std::size_t n = tv.leaves.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      int base = *tau.meet(tv.leaves[p], tv.leaves[q]);
      if (span(tau, b, tv, p, q, base) == 0) {
        std::string poly;
        for (std::size_t r = p; r < q; ++r) poly += (poly.empty() ? "" : " + ") + relative_text(tau, tv.meets[r], base);
        throw DomainError("chart_H: b leaves the chart domain, " + poly + " vanishes");
      }
    }
  }
  ChartPoint out;
  out.labels = tv.leaves;
  std::sort(out.labels.begin(), out.labels.end());
  int root_parent = tau.vertex(top).parent;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q) out.delta[{tv.leaves[p], tv.leaves[q]}] = span(tau, b, tv, p, q, root_parent);
    }
  }
  for (const auto& [i, j, k] : proj::ordered_triples(out.labels)) {
    std::size_t pi = tv.pos.at(i), pj = tv.pos.at(j), pk = tv.pos.at(k);
    int base = lower(tau, *tau.meet(i, j), *tau.meet(i, k));
    Rational num = span(tau, b, tv, pi, pk, base), den = span(tau, b, tv, pi, pj, base);
    if (num == 0 && den == 0) throw InvariantViolation("chart_H: mu is 0/0 inside the chart domain");
    out.mu[{i, j, k}] = proj::ProjPoint(proj::Scalar(num), proj::Scalar(den));
  }
  return out;
}

namespace {

std::string binary_string(const PlanarForest& f, int v) {
  const auto& vx = f.vertex(v);
  if (vx.label > 0) return std::to_string(vx.label);
  std::string acc = binary_string(f, vx.children[0]);
  for (std::size_t k = 1; k < vx.children.size(); ++k) acc = "(" + acc + "," + binary_string(f, vx.children[k]) + ")";
  return acc;
}

}  // namespace

proj::Tuple ThetaImage::tree_mu(int tree) const {
  auto leaves = tau.leaves_above(tau.tops().at(static_cast<std::size_t>(tree)));
  std::sort(leaves.begin(), leaves.end());
  if (leaves.size() < 3) throw DomainError("tree_mu needs a tree with at least three leaves");
  proj::Tuple out;
  out.labels = leaves;
  for (const auto& tr : proj::ordered_triples(leaves)) out.mu[tr] = mu.mu.at(tr);
  return out;
}

ThetaImage theta(const CubePoint& p, const RationalDiffeo& f) {
  PlanarForest tau = p.tau;
  EdgeValues t = p.t;
  bool split = true;
  while (split) {
    split = false;
    for (int top : tau.tops()) {
      if (!tau.is_leaf(top) && t.at(tau.clade(top)) == 1) {
        t.erase(tau.clade(top));
        tau = tau.collapse(top);
        split = true;
        break;
      }
    }
  }
  if (!is_binary(tau)) {
    std::string text;
    for (int top : tau.tops()) text += binary_string(tau, top) + ";";
    tau = PlanarForest::parse(text);
    for (int v : tau.internal_vertices()) t.emplace(tau.clade(v), Rational(1));
  }

  ThetaImage out;
  out.tau = tau;
  out.t = t;
  std::vector<int> labels = tau.labels();
  std::sort(labels.begin(), labels.end());
  out.flower.labels = labels;
  out.mu.labels = labels;
  for (auto [i, j] : proj::ordered_pairs(labels)) out.flower.nu[{i, j}] = proj::ProjPoint::zero();
  for (int k = 0; k < tau.num_trees(); ++k) {
    PlanarForest tree = tau.tree(k);
    if (tree.num_leaves() < 2) continue;
    CubePoint piece(tree, [&] {
      EdgeValues sub;
      for (int v : tree.internal_vertices()) sub[tree.clade(v)] = t.at(tree.clade(v));
      return sub;
    }());
    auto chart = chart_H(tree, b_map(piece, f));
    for (const auto& [ij, d] : chart.delta) {
      out.flower.nu[ij] = proj::ProjPoint(proj::Scalar(1), proj::Scalar(d));
    }
    for (const auto& [ijk, m] : chart.mu) out.mu.mu[ijk] = m;
  }
  out.strata = proj::classify_strata(out.flower);
  return out;
}

namespace {

std::string group_configuration(std::vector<std::string> items, std::vector<Rational> z) {
  while (items.size() > 1) {
    Rational gap = z[1] - z[0];
    for (std::size_t r = 1; r + 1 < z.size(); ++r) gap = std::min(gap, Rational(z[r + 1] - z[r]));
    std::vector<std::string> next_items;
    std::vector<Rational> next_z;
    std::size_t start = 0;
    for (std::size_t r = 0; r < items.size(); ++r) {
      bool closes = r + 1 == items.size() || z[r + 1] - z[r] != gap;
      if (!closes) continue;
      if (r == start) {
        next_items.push_back(items[start]);
      } else {
        std::string g = "(";
        for (std::size_t q = start; q <= r; ++q) g += (q > start ? "," : "") + items[q];
        next_items.push_back(g + ")");
      }
      next_z.push_back(next_z.empty() ? z[0] : Rational(next_z.back() + (z[start] - z[start - 1])));
      start = r + 1;
    }
    items = std::move(next_items);
    z = std::move(next_z);
  }
  return items.front();
}

}  // namespace

forests::PlanarForestWithZeros tree_of_configuration(const std::vector<Rational>& z) {
  if (z.empty()) throw DomainError("tree_of_configuration needs at least one point");
  std::vector<std::size_t> idx(z.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return z[a] < z[b]; });
  std::vector<std::string> items;
  std::vector<Rational> sorted;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r > 0 && z[idx[r]] == z[idx[r - 1]]) throw DomainError("tree_of_configuration: repeated entries");
    items.push_back(std::to_string(idx[r] + 1));
    sorted.push_back(z[idx[r]]);
  }
  return forests::PlanarForestWithZeros(PlanarForest::parse(group_configuration(items, sorted) + ";"), {});
}

forests::PlanarForestWithZeros tree_of_projective_configuration(const std::vector<Rational>& z) {
  if (z.size() < 2) throw DomainError("tree_of_projective_configuration needs at least two points");
  auto plain = tree_of_configuration(z);
  const auto& f = plain.forest();
  return forests::PlanarForestWithZeros(f, {f.clade(f.tops()[0])});
}

}  // namespace cactus::real
