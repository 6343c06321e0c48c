#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "cactus/cubecomplexes/complex.hpp"
#include "cactus/errors.hpp"

namespace cactus::cubes {

using comb::Block;
using comb::OrderedSetPartition;
using forests::Clade;
using forests::PlanarForest;

Family parse_family(const std::string& name) {
  static const std::map<std::string, Family> names = {
      {"D", Family::D}, {"hatD", Family::HatD}, {"breveD", Family::BreveD},
      {"P", Family::P}, {"hatP", Family::HatP}, {"breveP", Family::BreveP},
  };
  auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown complex '" + name + "' (expected D, hatD, breveD, P, hatP, breveP)");
  return it->second;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::D: return "D";
    case Family::HatD: return "hatD";
    case Family::BreveD: return "breveD";
    case Family::P: return "P";
    case Family::HatP: return "hatP";
    case Family::BreveP: return "breveP";
  }
  return "?";
}

bool is_cubical(Family f) { return f == Family::D || f == Family::HatD || f == Family::BreveD; }

int SubCube::edge_index(Clade c) const {
  auto it = std::find(edges.begin(), edges.end(), c);
  if (it == edges.end()) throw InvariantViolation("sub-cube " + key + " has no such edge");
  return static_cast<int>(it - edges.begin());
}

std::vector<std::size_t> CubeComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& layer : cells) out.push_back(layer.size());
  return out;
}

int CubeComplex::find_cell(int dim, const std::string& key) const {
  if (dim < 0 || dim >= static_cast<int>(cell_index.size())) return -1;
  auto it = cell_index[static_cast<std::size_t>(dim)].find(key);
  return it == cell_index[static_cast<std::size_t>(dim)].end() ? -1 : it->second;
}

int CubeComplex::find_subcube(const std::string& key) const {
  auto it = subcube_index.find(key);
  return it == subcube_index.end() ? -1 : it->second;
}

DirectedEdge CubeComplex::directed_edge_of(int sub) const {
  const auto& s = subcubes.at(static_cast<std::size_t>(sub));
  if (s.dim != 1) throw InvariantViolation("directed edges come from sub-1-cubes");
  return {s.big, cells[1][static_cast<std::size_t>(s.big)].key == s.key};
}

std::string quotient_key(const PlanarForest& f, Family fam) {
  if (fam == Family::D) return f.to_string();
  std::vector<std::string> trees;
  std::size_t first = 0;
  int best = 0;
  for (std::size_t t = 0; t < f.tops().size(); ++t) {
    trees.push_back(f.tree_string(f.tops()[t]));
    auto leaves = f.leaves_above(f.tops()[t]);
    int mn = *std::min_element(leaves.begin(), leaves.end());
    if (t == 0 || mn < best) {
      best = mn;
      first = t;
    }
  }
  if (fam == Family::HatD) {
    std::sort(trees.begin(), trees.end());
  } else if (fam == Family::BreveD) {
    std::rotate(trees.begin(), trees.begin() + static_cast<std::ptrdiff_t>(first), trees.end());
  } else {
    throw DomainError("forest keys exist only for the D family");
  }
  std::string out;
  for (const auto& t : trees) out += t + ";";
  return out;
}

std::string quotient_key(const OrderedSetPartition& p, Family fam) {
  switch (fam) {
    case Family::P: return p.to_string();
    case Family::HatP: return p.unordered().to_string();
    case Family::BreveP: return comb::CyclicSetPartition(p).to_string();
    default: throw DomainError("partition keys exist only for the P family");
  }
}

namespace {

std::set<Clade> all_clades(const PlanarForest& f) {
  std::set<Clade> out;
  for (int v : f.internal_vertices()) out.insert(f.clade(v));
  return out;
}

// Canonically oriented key of the big cube containing f.
std::string big_key(const PlanarForest& f, Family fam) {
  return quotient_key(forests::orient_canonically(f, all_clades(f)), fam);
}

std::vector<Block> representative_parts(const OrderedSetPartition& p, Family fam) {
  if (fam == Family::HatP) return p.unordered().blocks();
  if (fam == Family::BreveP) return comb::CyclicSetPartition(p).representative().parts();
  return p.parts();
}

std::vector<Block> singletons_of(const std::vector<int>& seq) {
  std::vector<Block> out;
  for (int x : seq) out.push_back({x});
  return out;
}

void build_forest_complex(CubeComplex& c) {
  const Family fam = c.family;
  const int n = c.n;
  for (int k = 0; k < n; ++k) {
    for (const auto& f : forests::enumerate_planar_forests(n, k)) {
      std::string key = quotient_key(f, fam);
      if (c.subcube_index.count(key)) continue;
      SubCube s;
      s.rep = PlanarForest::parse(key);
      s.key = s.rep.to_string();
      s.dim = k;
      for (Clade e : all_clades(s.rep)) s.edges.push_back(e);
      c.subcube_index.emplace(s.key, static_cast<int>(c.subcubes.size()));
      c.subcubes.push_back(std::move(s));
    }
  }
  auto lookup = [&](const PlanarForest& f) {
    int id = c.find_subcube(quotient_key(f, fam));
    if (id < 0) throw InvariantViolation("forest " + f.to_string() + " has no sub-cube");
    return id;
  };
  auto collapse_all_but = [](PlanarForest f, const std::vector<Clade>& edges, int keep) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (static_cast<int>(j) != keep) f = f.collapse(f.vertex_with_clade(edges[j]));
    }
    return f;
  };
  for (auto& s : c.subcubes) {
    for (Clade e : s.edges) {
      int v = s.rep.vertex_with_clade(e);
      s.flip.push_back(lookup(s.rep.flip(v)));
      s.collapse.push_back(lookup(s.rep.collapse(v)));
    }
    for (std::size_t j = 0; j < s.edges.size(); ++j) {
      s.link.push_back(lookup(collapse_all_but(s.rep, s.edges, static_cast<int>(j))));
    }
  }
  // Big cubes, keyed by their canonically oriented sub-cube.
  for (auto& s : c.subcubes) {
    std::string key = big_key(s.rep, fam);
    auto& index = c.cell_index[static_cast<std::size_t>(s.dim)];
    auto& layer = c.cells[static_cast<std::size_t>(s.dim)];
    auto it = index.find(key);
    if (it == index.end()) {
      Cell cell;
      cell.dim = s.dim;
      cell.key = key;
      cell.forest = PlanarForest::parse(key);
      it = index.emplace(key, static_cast<int>(layer.size())).first;
      layer.push_back(std::move(cell));
    }
    s.big = it->second;
  }
  for (auto& s : c.subcubes) {
    s.corner = c.subcubes[static_cast<std::size_t>(lookup(collapse_all_but(s.rep, s.edges, -1)))].big;
  }
  auto sub = [&](int id) -> const SubCube& { return c.subcubes[static_cast<std::size_t>(id)]; };
  auto flip = [&](int id, Clade e) { return sub(id).flip[static_cast<std::size_t>(sub(id).edge_index(e))]; };
  auto collapse = [&](int id, Clade e) {
    return sub(id).collapse[static_cast<std::size_t>(sub(id).edge_index(e))];
  };
  for (int k = 1; k < n; ++k) {
    for (auto& cell : c.cells[static_cast<std::size_t>(k)]) {
      const int rho = c.find_subcube(cell.key);
      for (Clade e : sub(rho).edges) {
        cell.faces.push_back(sub(collapse(rho, e)).big);
        cell.faces.push_back(sub(collapse(flip(rho, e), e)).big);
      }
      if (k == 1) {
        cell.tail = sub(rho).corner;
        cell.head = sub(flip(rho, sub(rho).edges[0])).corner;
        const auto& f = *cell.forest;
        cell.forward_order = f.leaves_above(f.vertex_with_clade(sub(rho).edges[0]));
      }
      if (k == 2) {
        Clade e = sub(rho).edges[0], g = sub(rho).edges[1];
        for (int b : {collapse(rho, e), collapse(flip(rho, g), g), collapse(flip(flip(rho, g), e), e),
                      collapse(flip(rho, e), g)}) {
          cell.boundary.push_back(c.directed_edge_of(b));
        }
      }
    }
  }
}

void build_partition_complex(CubeComplex& c) {
  const Family fam = c.family;
  const int n = c.n;
  for (int k = 0; k < n; ++k) {
    auto& layer = c.cells[static_cast<std::size_t>(k)];
    auto& index = c.cell_index[static_cast<std::size_t>(k)];
    for (const auto& p : comb::all_ordered_set_partitions(n, n - k)) {
      std::string key = quotient_key(p, fam);
      if (index.count(key)) continue;
      Cell cell;
      cell.dim = k;
      cell.key = key;
      cell.parts = representative_parts(p, fam);
      index.emplace(key, static_cast<int>(layer.size()));
      layer.push_back(std::move(cell));
    }
  }
  auto cell_of = [&](int dim, const std::vector<Block>& parts) {
    int id = c.find_cell(dim, quotient_key(OrderedSetPartition(parts), fam));
    if (id < 0) throw InvariantViolation("ordered partition has no cell");
    return id;
  };
  for (int k = 1; k < n; ++k) {
    for (auto& cell : c.cells[static_cast<std::size_t>(k)]) {
      const auto& parts = cell.parts;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const Block& b = parts[i];
        if (b.size() < 2) continue;
        const unsigned full = (1u << b.size()) - 1;
        for (unsigned mask = 1; mask < full; ++mask) {
          Block lo, hi;
          for (std::size_t t = 0; t < b.size(); ++t) ((mask >> t) & 1u ? lo : hi).push_back(b[t]);
          std::vector<Block> split(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i));
          split.push_back(lo);
          split.push_back(hi);
          split.insert(split.end(), parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, parts.end());
          cell.faces.push_back(cell_of(k - 1, split));
        }
      }
      std::vector<int> seq;
      std::vector<std::size_t> starts;
      for (const auto& b : parts) {
        if (b.size() >= 2) starts.push_back(seq.size());
        seq.insert(seq.end(), b.begin(), b.end());
      }
      auto edge_at = [&](std::size_t i) {
        std::vector<Block> ps;
        for (std::size_t t = 0; t < seq.size(); ++t) {
          if (t == i) {
            ps.push_back({seq[t], seq[t + 1]});
            ++t;
          } else {
            ps.push_back({seq[t]});
          }
        }
        return ps;
      };
      if (k == 1) {
        const std::size_t i = starts[0];
        cell.forward_order = {seq[i], seq[i + 1]};
        cell.tail = cell_of(0, singletons_of(seq));
        std::swap(seq[i], seq[i + 1]);
        cell.head = cell_of(0, singletons_of(seq));
      }
      if (k == 2) {
        std::vector<std::size_t> swaps;
        if (starts.size() == 1) {
          for (int t = 0; t < 3; ++t) {
            swaps.push_back(starts[0]);
            swaps.push_back(starts[0] + 1);
          }
        } else {
          swaps = {starts[0], starts[1], starts[0], starts[1]};
        }
        for (std::size_t i : swaps) {
          cell.boundary.push_back({cell_of(1, edge_at(i)), seq[i] < seq[i + 1]});
          std::swap(seq[i], seq[i + 1]);
        }
      }
    }
  }
}

}  // namespace

CubeComplex build_complex(Family fam, int n) {
  if (n < 2) throw DomainError("complexes need n >= 2");
  if (is_cubical(fam) && n > 6) throw DomainError("forest complexes are built for n <= 6");
  if (!is_cubical(fam) && n > 8) throw DomainError("permutahedral complexes are built for n <= 8");
  CubeComplex c;
  c.family = fam;
  c.n = n;
  c.cells.resize(static_cast<std::size_t>(n));
  c.cell_index.resize(static_cast<std::size_t>(n));
  if (is_cubical(fam)) {
    build_forest_complex(c);
  } else {
    build_partition_complex(c);
  }
  return c;
}

CubeComplex cell_closure(const CubeComplex& c, int dim, int id) {
  std::vector<std::set<int>> keep(c.cells.size());
  std::deque<std::pair<int, int>> todo{{dim, id}};
  while (!todo.empty()) {
    auto [d, i] = todo.front();
    todo.pop_front();
    if (!keep[static_cast<std::size_t>(d)].insert(i).second) continue;
    for (int f : c.cells[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)].faces) todo.emplace_back(d - 1, f);
  }
  CubeComplex out;
  out.family = c.family;
  out.n = c.n;
  out.cells.resize(static_cast<std::size_t>(dim) + 1);
  out.cell_index.resize(static_cast<std::size_t>(dim) + 1);
  std::vector<std::map<int, int>> renum(c.cells.size());
  for (int d = 0; d <= dim; ++d) {
    for (int i : keep[static_cast<std::size_t>(d)]) {
      renum[static_cast<std::size_t>(d)][i] = static_cast<int>(out.cells[static_cast<std::size_t>(d)].size());
      out.cell_index[static_cast<std::size_t>(d)][c.cells[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)].key] =
          static_cast<int>(out.cells[static_cast<std::size_t>(d)].size());
      out.cells[static_cast<std::size_t>(d)].push_back(c.cells[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]);
    }
  }
  for (int d = 0; d <= dim; ++d) {
    for (auto& cell : out.cells[static_cast<std::size_t>(d)]) {
      for (int& f : cell.faces) f = renum[static_cast<std::size_t>(d) - 1].at(f);
      if (d == 1) {
        cell.tail = renum[0].at(cell.tail);
        cell.head = renum[0].at(cell.head);
      }
      for (auto& b : cell.boundary) b.edge = renum[1].at(b.edge);
    }
  }
  return out;
}

CubeComplex remove_subcube(const CubeComplex& c, int sub) {
  CubeComplex out = c;
  out.subcubes.at(static_cast<std::size_t>(sub)).present = false;
  return out;
}

PlanarForest relabel(const PlanarForest& f, const comb::Permutation& u) {
  std::vector<forests::Vertex> vs;
  for (int id = 0; id < f.num_vertices(); ++id) {
    auto v = f.vertex(id);
    if (v.label > 0) v.label = u(v.label);
    vs.push_back(std::move(v));
  }
  return PlanarForest::from_arrays(std::move(vs), f.tops());
}

Report check_face_consistency(const CubeComplex& c) {
  Report r;
  auto fail = [&](std::string w) {
    r.ok = false;
    r.witness = std::move(w);
    return r;
  };
  for (std::size_t d = 2; d < c.cells.size(); ++d) {
    for (const auto& cell : c.cells[d]) {
      std::map<int, int> count;
      for (int f : cell.faces) {
        for (int g : c.cells[d - 1][static_cast<std::size_t>(f)].faces) ++count[g];
      }
      for (auto [g, m] : count) {
        if (m % 2) return fail("cell " + cell.key + ": codimension-2 face " + c.cells[d - 2][static_cast<std::size_t>(g)].key +
                               " occurs an odd number of times");
      }
    }
  }
  if (c.cells.size() > 1) {
    for (const auto& e : c.cells[1]) {
      std::multiset<int> ends{e.tail, e.head}, faces(e.faces.begin(), e.faces.end());
      if (ends != faces) return fail("1-cell " + e.key + ": endpoints disagree with faces");
    }
  }
  if (c.cells.size() > 2) {
    for (const auto& sq : c.cells[2]) {
      if (sq.boundary.empty()) return fail("2-cell " + sq.key + " has no boundary path");
      std::multiset<int> used, faces(sq.faces.begin(), sq.faces.end());
      for (std::size_t i = 0; i < sq.boundary.size(); ++i) {
        const auto& a = sq.boundary[i];
        const auto& b = sq.boundary[(i + 1) % sq.boundary.size()];
        const auto& ea = c.cells[1][static_cast<std::size_t>(a.edge)];
        const auto& eb = c.cells[1][static_cast<std::size_t>(b.edge)];
        int end = a.forward ? ea.head : ea.tail;
        int start = b.forward ? eb.tail : eb.head;
        if (end != start) return fail("2-cell " + sq.key + ": boundary path breaks after " + ea.key);
        used.insert(a.edge);
      }
      if (used != faces) return fail("2-cell " + sq.key + ": boundary path disagrees with faces");
    }
  }
  return r;
}

namespace {

int relabelled_cell(const CubeComplex& c, const Cell& cell, const comb::Permutation& u) {
  if (cell.forest) return c.find_cell(cell.dim, big_key(relabel(*cell.forest, u), c.family));
  std::vector<Block> parts;
  for (const auto& b : cell.parts) {
    Block nb;
    for (int x : b) nb.push_back(u(x));
    parts.push_back(std::move(nb));
  }
  return c.find_cell(cell.dim, quotient_key(OrderedSetPartition(parts), c.family));
}

}  // namespace

Report check_relabel_action(const CubeComplex& c, const comb::Permutation& u) {
  Report r;
  if (u.size() != c.n) throw DomainError("relabelling permutation has the wrong size");
  std::vector<std::vector<int>> img(c.cells.size());
  for (std::size_t d = 0; d < c.cells.size(); ++d) {
    std::set<int> hit;
    for (const auto& cell : c.cells[d]) {
      int j = relabelled_cell(c, cell, u);
      if (j < 0 || !hit.insert(j).second) {
        r.ok = false;
        r.witness = "relabelling does not permute the " + std::to_string(d) + "-cells at " + cell.key;
        return r;
      }
      img[d].push_back(j);
    }
  }
  for (std::size_t d = 1; d < c.cells.size(); ++d) {
    for (std::size_t i = 0; i < c.cells[d].size(); ++i) {
      std::multiset<int> mapped, direct;
      for (int f : c.cells[d][i].faces) mapped.insert(img[d - 1][static_cast<std::size_t>(f)]);
      for (int f : c.cells[d][static_cast<std::size_t>(img[d][i])].faces) direct.insert(f);
      if (mapped != direct) {
        r.ok = false;
        r.witness = "relabelling does not commute with the faces of " + c.cells[d][i].key;
        return r;
      }
    }
  }
  return r;
}

nlohmann::json to_json(const CubeComplex& c) {
  nlohmann::json j;
  j["complex"] = family_name(c.family);
  j["n"] = c.n;
  j["f_vector"] = c.f_vector();
  j["cells"] = nlohmann::json::array();
  for (const auto& layer : c.cells) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const auto& cell = layer[i];
      nlohmann::json e = {{"id", i}, {"dim", cell.dim}, {"key", cell.key}, {"faces", cell.faces}};
      if (cell.dim == 1) {
        e["tail"] = cell.tail;
        e["head"] = cell.head;
        e["forward_order"] = cell.forward_order;
      }
      if (cell.dim == 2) {
        nlohmann::json path = nlohmann::json::array();
        for (const auto& b : cell.boundary) path.push_back({{"edge", b.edge}, {"forward", b.forward}});
        e["boundary"] = path;
      }
      arr.push_back(std::move(e));
    }
    j["cells"].push_back(std::move(arr));
  }
  return j;
}

std::string to_dot(const CubeComplex& c) {
  std::ostringstream out;
  out << "digraph " << family_name(c.family) << "_" << c.n << " {\n";
  for (std::size_t i = 0; i < c.cells[0].size(); ++i) {
    out << "  v" << i << " [label=\"" << c.cells[0][i].key << "\"];\n";
  }
  if (c.cells.size() > 1) {
    for (const auto& e : c.cells[1]) {
      std::string lab;
      for (std::size_t t = 0; t < e.forward_order.size(); ++t) lab += (t ? "," : "") + std::to_string(e.forward_order[t]);
      out << "  v" << e.tail << " -> v" << e.head << " [label=\"" << lab << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cactus::cubes
