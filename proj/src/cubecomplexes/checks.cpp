#include "cactus/cubecomplexes/checks.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "cactus/errors.hpp"

namespace cactus::cubes {

using forests::Clade;
using forests::PlanarForest;

namespace {

void require_cubical(const CubeComplex& c, const char* what) {
  if (!is_cubical(c.family)) throw DomainError(std::string(what) + " needs a complex of the D family");
}

bool present(const CubeComplex& c, int id) {
  return id >= 0 && c.subcubes[static_cast<std::size_t>(id)].present;
}

std::vector<std::vector<int>> subcubes_by_corner(const CubeComplex& c) {
  std::vector<std::vector<int>> out(c.cells[0].size());
  for (std::size_t i = 0; i < c.subcubes.size(); ++i) {
    const auto& s = c.subcubes[i];
    if (s.present && s.dim >= 1) out[static_cast<std::size_t>(s.corner)].push_back(static_cast<int>(i));
  }
  return out;
}

VertexLink link_from(const CubeComplex& c, int vertex, const std::vector<int>& cornered) {
  VertexLink l;
  l.vertex = vertex;
  for (int id : cornered) {
    const auto& s = c.subcubes[static_cast<std::size_t>(id)];
    if (s.dim == 1) l.vertices.push_back(id);
    std::vector<int> simplex = s.link;
    std::sort(simplex.begin(), simplex.end());
    l.simplices.push_back(std::move(simplex));
    l.simplex_cube.push_back(id);
  }
  std::sort(l.vertices.begin(), l.vertices.end());
  return l;
}

std::string keys(const CubeComplex& c, const std::vector<int>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += " ";
    out += c.subcubes[static_cast<std::size_t>(ids[i])].key;
  }
  return out + "}";
}

// Outcome of the link conditions at one vertex.
struct LinkResult {
  bool bullet1 = true;
  bool bullet2 = true;
  std::string witness;
};

LinkResult check_link(const CubeComplex& c, const VertexLink& l) {
  LinkResult r;
  const std::string at = " at vertex " + c.cells[0][static_cast<std::size_t>(l.vertex)].key;
  std::map<std::vector<int>, int> simplex_of;
  std::map<int, std::set<int>> adj;
  for (std::size_t i = 0; i < l.simplices.size(); ++i) {
    const auto& sx = l.simplices[i];
    const int cube = l.simplex_cube[i];
    const int k = static_cast<int>(sx.size());
    for (int v : sx) {
      if (!std::binary_search(l.vertices.begin(), l.vertices.end(), v)) {
        r.bullet1 = false;
        r.witness = "sub-cube " + c.subcubes[static_cast<std::size_t>(cube)].key + " has a link vertex not cornered" + at;
        return r;
      }
    }
    if (std::adjacent_find(sx.begin(), sx.end()) != sx.end()) {
      (k == 2 ? r.bullet1 : r.bullet2) = false;
      r.witness = "sub-cube " + c.subcubes[static_cast<std::size_t>(cube)].key + " has repeated link vertices" + at;
      return r;
    }
    auto [it, fresh] = simplex_of.emplace(sx, cube);
    if (!fresh) {
      (k == 2 ? r.bullet1 : r.bullet2) = false;
      r.witness = "sub-cubes " + c.subcubes[static_cast<std::size_t>(it->second)].key + " and " +
                  c.subcubes[static_cast<std::size_t>(cube)].key + " span the same link vertices " + keys(c, sx) + at;
      return r;
    }
    if (k == 2) {
      adj[sx[0]].insert(sx[1]);
      adj[sx[1]].insert(sx[0]);
    }
  }
  // Every clique of the 1-skeleton of the link must be a simplex.
  std::vector<int> clique;
  std::function<bool(const std::vector<int>&)> grow = [&](const std::vector<int>& cand) {
    if (clique.size() >= 2 && !simplex_of.count(clique)) {
      r.bullet2 = false;
      r.witness = "link vertices " + keys(c, clique) + " pairwise span squares but no sub-" +
                  std::to_string(clique.size()) + "-cube" + at;
      return false;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      clique.push_back(cand[i]);
      std::vector<int> next;
      const auto& nb = adj[cand[i]];
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (nb.count(cand[j])) next.push_back(cand[j]);
      }
      if (!grow(next)) return false;
      clique.pop_back();
    }
    return true;
  };
  grow(l.vertices);
  return r;
}

}  // namespace

VertexLink vertex_link(const CubeComplex& c, int vertex) {
  require_cubical(c, "vertex_link");
  std::vector<int> cornered;
  for (std::size_t i = 0; i < c.subcubes.size(); ++i) {
    const auto& s = c.subcubes[i];
    if (s.present && s.dim >= 1 && s.corner == vertex) cornered.push_back(static_cast<int>(i));
  }
  return link_from(c, vertex, cornered);
}

GromovReport check_gromov_flag(const CubeComplex& c, int jobs) {
  require_cubical(c, "check_gromov_flag");
  GromovReport rep;
  auto missing = [&](int id, const SubCube& by, const char* role) {
    rep.ok = rep.closure = false;
    if (id < 0) {
      rep.witness = std::string("sub-cube ") + by.key + " has no " + role;
      return;
    }
    const auto& m = c.subcubes[static_cast<std::size_t>(id)];
    rep.witness = (m.dim == 2 ? std::string("missing square ") : "missing sub-" + std::to_string(m.dim) + "-cube ") +
                  m.key + " (" + role + " of " + by.key + ")";
  };
  std::map<std::pair<int, int>, int> per_big;
  for (const auto& s : c.subcubes) {
    if (!s.present) continue;
    ++per_big[{s.dim, s.big}];
    for (std::size_t j = 0; j < s.edges.size(); ++j) {
      if (!present(c, s.flip[j])) return missing(s.flip[j], s, "flip"), rep;
      if (!present(c, s.collapse[j])) return missing(s.collapse[j], s, "collapse"), rep;
      if (!present(c, s.link[j])) return missing(s.link[j], s, "link vertex"), rep;
    }
  }
  for (const auto& [cell, count] : per_big) {
    if (count != (1 << cell.first)) {
      rep.ok = rep.closure = false;
      rep.witness = "big cube " + c.cells[static_cast<std::size_t>(cell.first)][static_cast<std::size_t>(cell.second)].key +
                    " has " + std::to_string(count) + " sub-cubes instead of " + std::to_string(1 << cell.first);
      return rep;
    }
  }
  auto cornered = subcubes_by_corner(c);
  const std::size_t nv = c.cells[0].size();
  std::vector<LinkResult> results(nv);
  const std::size_t nj = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nj; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t v = t; v < nv; v += nj) {
        results[v] = check_link(c, link_from(c, static_cast<int>(v), cornered[v]));
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& r : results) {
    if (r.bullet1 && r.bullet2) continue;
    rep.ok = false;
    rep.bullet1 = r.bullet1;
    rep.bullet2 = r.bullet2;
    rep.witness = r.witness;
    break;
  }
  return rep;
}

CombinatorialMap quotient_map(const CubeComplex& source, const CubeComplex& target) {
  require_cubical(source, "quotient_map");
  require_cubical(target, "quotient_map");
  if (source.n != target.n) throw DomainError("quotient map between complexes of different n");
  CombinatorialMap phi{&source, &target, {}};
  for (const auto& s : source.subcubes) {
    int t = target.find_subcube(quotient_key(s.rep, target.family));
    if (t < 0) throw DomainError("sub-cube " + s.key + " has no image in " + family_name(target.family));
    phi.subcube_map.push_back(t);
  }
  return phi;
}

CombinatorialMap identity_map(const CubeComplex& c) {
  require_cubical(c, "identity_map");
  CombinatorialMap phi{&c, &c, {}};
  for (std::size_t i = 0; i < c.subcubes.size(); ++i) phi.subcube_map.push_back(static_cast<int>(i));
  return phi;
}

Report check_local_isometry(const CombinatorialMap& phi) {
  const CubeComplex& src = *phi.source;
  const CubeComplex& tgt = *phi.target;
  require_cubical(src, "check_local_isometry");
  require_cubical(tgt, "check_local_isometry");
  if (phi.subcube_map.size() != src.subcubes.size()) throw DomainError("map is not defined on every sub-cube");
  auto image = [&](int id) { return phi.subcube_map[static_cast<std::size_t>(id)]; };
  std::vector<int> vmap(src.cells[0].size(), -1);
  for (std::size_t v = 0; v < src.cells[0].size(); ++v) {
    int t = image(src.find_subcube(src.cells[0][v].key));
    if (t < 0) throw DomainError("map is not combinatorial: vertex " + src.cells[0][v].key + " has no image");
    vmap[v] = tgt.subcubes[static_cast<std::size_t>(t)].big;
  }
  auto not_comb = [](const SubCube& s, const char* what) {
    throw DomainError("map is not combinatorial at " + s.key + ": " + what + " not preserved");
  };
  for (std::size_t i = 0; i < src.subcubes.size(); ++i) {
    const auto& s = src.subcubes[i];
    if (!s.present) continue;
    int ti = image(static_cast<int>(i));
    if (ti < 0) not_comb(s, "existence");
    const auto& t = tgt.subcubes[static_cast<std::size_t>(ti)];
    if (t.dim != s.dim) not_comb(s, "dimension");
    if (t.corner != vmap[static_cast<std::size_t>(s.corner)]) not_comb(s, "corner");
    for (std::size_t j = 0; j < s.edges.size(); ++j) {
      auto it = std::find(t.edges.begin(), t.edges.end(), s.edges[j]);
      if (it == t.edges.end()) not_comb(s, "edge set");
      auto tj = static_cast<std::size_t>(it - t.edges.begin());
      if (image(s.flip[j]) != t.flip[tj]) not_comb(s, "flip");
      if (image(s.collapse[j]) != t.collapse[tj]) not_comb(s, "collapse");
      if (image(s.link[j]) != t.link[tj]) not_comb(s, "link");
    }
  }
  Report r;
  auto src_corner = subcubes_by_corner(src);
  auto tgt_corner = subcubes_by_corner(tgt);
  std::map<int, std::set<std::vector<int>>> tgt_simplices;
  for (std::size_t v = 0; v < src.cells[0].size(); ++v) {
    const int w = vmap[v];
    auto ls = link_from(src, static_cast<int>(v), src_corner[v]);
    if (!tgt_simplices.count(w)) {
      auto lt = link_from(tgt, w, tgt_corner[static_cast<std::size_t>(w)]);
      tgt_simplices[w] = std::set<std::vector<int>>(lt.simplices.begin(), lt.simplices.end());
    }
    const auto& ts = tgt_simplices[w];
    std::set<int> seen_v;
    for (int a : ls.vertices) {
      if (!seen_v.insert(image(a)).second) {
        r.ok = false;
        r.witness = "two link vertices at " + src.cells[0][v].key + " map to " +
                    tgt.subcubes[static_cast<std::size_t>(image(a))].key;
        return r;
      }
    }
    std::set<std::vector<int>> src_simplices(ls.simplices.begin(), ls.simplices.end()), seen_s;
    for (const auto& sx : ls.simplices) {
      std::vector<int> im;
      for (int a : sx) im.push_back(image(a));
      std::sort(im.begin(), im.end());
      if (!seen_s.insert(im).second) {
        r.ok = false;
        r.witness = "two link simplices at " + src.cells[0][v].key + " have the same image";
        return r;
      }
    }
    for (std::size_t i = 0; i < ls.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < ls.vertices.size(); ++j) {
        std::vector<int> im{image(ls.vertices[i]), image(ls.vertices[j])};
        std::sort(im.begin(), im.end());
        if (ts.count(im) && !src_simplices.count({ls.vertices[i], ls.vertices[j]})) {
          r.ok = false;
          r.witness = "images of " + keys(src, {ls.vertices[i], ls.vertices[j]}) + " span a square in " +
                      family_name(tgt.family) + " but the link vertices do not at " + src.cells[0][v].key;
          return r;
        }
      }
    }
  }
  return r;
}

std::vector<std::size_t> Subdivision::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& layer : cells) out.push_back(layer.size());
  return out;
}

namespace {

std::string marked_key(const PlanarForest& f, const std::set<Clade>& zeros, Family fam) {
  PlanarForest g = forests::orient_canonically(f, zeros);
  if (fam == Family::D) return g.to_string(zeros);
  std::vector<std::string> trees;
  std::size_t first = 0;
  int best = 0;
  for (std::size_t t = 0; t < g.tops().size(); ++t) {
    trees.push_back(g.tree_string(g.tops()[t], zeros));
    auto leaves = g.leaves_above(g.tops()[t]);
    int mn = *std::min_element(leaves.begin(), leaves.end());
    if (t == 0 || mn < best) {
      best = mn;
      first = t;
    }
  }
  if (fam == Family::HatD) {
    std::sort(trees.begin(), trees.end());
  } else {
    std::rotate(trees.begin(), trees.begin() + static_cast<std::ptrdiff_t>(first), trees.end());
  }
  std::string out;
  for (const auto& t : trees) out += t + ";";
  return out;
}

}  // namespace

Subdivision cubical_subdivision(const CubeComplex& c) {
  require_cubical(c, "cubical_subdivision");
  Subdivision out;
  out.family = c.family;
  out.n = c.n;
  out.cells.resize(c.cells.size());
  std::vector<std::map<std::string, int>> index(c.cells.size());
  struct Pending {
    int dim;
    int pos;
    std::vector<std::pair<int, std::string>> faces;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < c.subcubes.size(); ++i) {
    const auto& s = c.subcubes[i];
    if (!s.present) continue;
    const unsigned k = static_cast<unsigned>(s.edges.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::set<Clade> zeros;
      for (unsigned j = 0; j < k; ++j) {
        if ((mask >> j) & 1u) zeros.insert(s.edges[j]);
      }
      std::string key = marked_key(s.rep, zeros, c.family);
      const int dim = static_cast<int>(k - zeros.size());
      auto& idx = index[static_cast<std::size_t>(dim)];
      if (idx.count(key)) continue;
      LittleCube lc;
      lc.key = key;
      lc.dim = dim;
      lc.subcube = static_cast<int>(i);
      lc.zeros.assign(zeros.begin(), zeros.end());
      Pending p{dim, static_cast<int>(out.cells[static_cast<std::size_t>(dim)].size()), {}};
      for (unsigned j = 0; j < k; ++j) {
        if ((mask >> j) & 1u) continue;
        auto more = zeros;
        more.insert(s.edges[j]);
        p.faces.emplace_back(dim - 1, marked_key(s.rep, more, c.family));
        const auto& d = c.subcubes[static_cast<std::size_t>(s.collapse[j])];
        p.faces.emplace_back(dim - 1, marked_key(d.rep, zeros, c.family));
      }
      idx.emplace(key, p.pos);
      out.cells[static_cast<std::size_t>(dim)].push_back(std::move(lc));
      pending.push_back(std::move(p));
    }
  }
  for (const auto& p : pending) {
    auto& lc = out.cells[static_cast<std::size_t>(p.dim)][static_cast<std::size_t>(p.pos)];
    for (const auto& [d, key] : p.faces) {
      auto it = index[static_cast<std::size_t>(d)].find(key);
      if (it == index[static_cast<std::size_t>(d)].end()) throw InvariantViolation("little cube face " + key + " is missing");
      lc.faces.push_back(it->second);
    }
  }
  return out;
}

groups::Presentation extract_presentation(const CubeComplex& c, int base) {
  using groups::Letter;
  const std::size_t nv = c.cells[0].size();
  if (base < 0 || static_cast<std::size_t>(base) >= nv) throw DomainError("base vertex out of range");
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  const std::size_t ne = c.cells.size() > 1 ? c.cells[1].size() : 0;
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& cell = c.cells[1][e];
    adj[static_cast<std::size_t>(cell.tail)].emplace_back(static_cast<int>(e), cell.head);
    adj[static_cast<std::size_t>(cell.head)].emplace_back(static_cast<int>(e), cell.tail);
  }
  std::vector<char> tree(ne, 0), seen(nv, 0);
  std::deque<int> todo{base};
  seen[static_cast<std::size_t>(base)] = 1;
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    for (auto [e, w] : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      tree[static_cast<std::size_t>(e)] = 1;
      todo.push_back(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw DomainError("extract_presentation needs a connected complex");
  groups::Presentation p;
  p.family = "extracted_" + family_name(c.family);
  p.n = c.n;
  for (std::size_t e = 0; e < ne; ++e) {
    if (tree[e]) continue;
    p.generators.push_back(Letter::edge(static_cast<int>(e), 1));
    p.generators.push_back(Letter::edge(static_cast<int>(e), -1));
  }
  if (c.cells.size() > 2) {
    for (const auto& sq : c.cells[2]) {
      groups::Word w;
      for (const auto& b : sq.boundary) {
        if (!tree[static_cast<std::size_t>(b.edge)]) w.push_back(Letter::edge(b.edge, b.forward ? 1 : -1));
      }
      p.relators.push_back(std::move(w));
    }
  }
  return p;
}

groups::Presentation tietze_reduce(const groups::Presentation& p) {
  groups::Presentation out = p;
  for (auto& r : out.relators) r = groups::reduce(r, p.n);
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<groups::Letter> killed;
    for (const auto& r : out.relators) {
      auto c = groups::cyclic_class(r, p.n);
      if (c.size() == 1 && !c[0].is_factor()) {
        killed.insert(c[0]);
        killed.insert(c[0].inverse());
        break;
      }
    }
    if (killed.empty()) break;
    changed = true;
    std::vector<groups::Word> rels;
    for (const auto& r : out.relators) {
      groups::Word w;
      for (const auto& x : r) {
        if (!killed.count(x)) w.push_back(x);
      }
      w = groups::reduce(w, p.n);
      if (!groups::cyclic_class(w, p.n).empty()) rels.push_back(std::move(w));
    }
    out.relators = std::move(rels);
    std::erase_if(out.generators, [&](const groups::Letter& x) { return killed.count(x) > 0; });
  }
  std::erase_if(out.relators, [&](const groups::Word& w) { return groups::cyclic_class(w, p.n).empty(); });
  return out;
}

int rank(const groups::Presentation& p) {
  std::set<groups::Letter> gens(p.generators.begin(), p.generators.end());
  int r = 0;
  for (const auto& x : gens) {
    auto inv = x.inverse();
    if (inv < x && gens.count(inv)) continue;
    ++r;
  }
  return r;
}

groups::Presentation relabel_pure(const groups::Presentation& p, const CubeComplex& c) {
  using groups::Letter;
  if (c.family != Family::HatD && c.family != Family::HatP) {
    throw DomainError("pure relabelling is defined for hatD and hatP");
  }
  auto letter = [&](const Letter& x) {
    if (x.kind != groups::LetterKind::Edge) return x;
    auto order = c.cells[1].at(static_cast<std::size_t>(x.data[0])).forward_order;
    if (x.data[1] < 0) std::reverse(order.begin(), order.end());
    if (c.family == Family::HatP) return Letter::pure_sigma(order[0], order[1]);
    return Letter::pure_s(order);
  };
  groups::Presentation out;
  out.family = p.family;
  out.n = p.n;
  for (const auto& g : p.generators) out.generators.push_back(letter(g));
  for (const auto& r : p.relators) {
    groups::Word w;
    for (const auto& x : r) w.push_back(letter(x));
    out.relators.push_back(std::move(w));
  }
  return out;
}

}  // namespace cactus::cubes
