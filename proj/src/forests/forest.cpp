#include "cactus/forests/forest.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>

#include "cactus/combinatorics/partitions.hpp"
#include "cactus/errors.hpp"

namespace cactus::forests {

namespace {

class Parser {
public:
  Parser(std::string_view s, std::set<Clade>* zeros) : s_(s), zeros_(zeros) {}

  PlanarForest run() {
    skip();
    while (pos_ < s_.size()) {
      int top = node(-1);
      tops_.push_back(top);
      skip();
      expect(';');
      skip();
    }
    auto f = PlanarForest::from_arrays(std::move(v_), std::move(tops_));
    if (zeros_) {
      for (int id : decorated_) zeros_->insert(f.clade(id));
    }
    return f;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) {
      throw DomainError("forest syntax: expected '" + std::string(1, c) + "' at offset " + std::to_string(pos_));
    }
    ++pos_;
  }
  int node(int parent) {
    skip();
    int id = static_cast<int>(v_.size());
    v_.push_back({});
    v_.back().parent = parent;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      while (true) {
        int c = node(id);
        v_[static_cast<std::size_t>(id)].children.push_back(c);
        skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      skip();
      if (pos_ < s_.size() && s_[pos_] == ':') {
        ++pos_;
        expect('0');
        if (!zeros_) throw DomainError("forest syntax: edge decorations are not allowed here");
        decorated_.push_back(id);
      }
      return id;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw DomainError("forest syntax: expected a leaf label at offset " + std::to_string(start));
    v_[static_cast<std::size_t>(id)].label = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (v_[static_cast<std::size_t>(id)].label <= 0) throw DomainError("forest syntax: leaf labels must be positive");
    skip();
    if (pos_ < s_.size() && s_[pos_] == ':') throw DomainError("forest syntax: leaf edges cannot be decorated");
    return id;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::set<Clade>* zeros_;
  std::vector<Vertex> v_;
  std::vector<int> tops_;
  std::vector<int> decorated_;
};

}  // namespace

PlanarForest PlanarForest::parse(std::string_view text) { return Parser(text, nullptr).run(); }

PlanarForest PlanarForest::singletons(const std::vector<int>& order) {
  std::vector<Vertex> vs;
  std::vector<int> tops;
  for (int l : order) {
    tops.push_back(static_cast<int>(vs.size()));
    vs.push_back({-1, {}, l});
  }
  return from_arrays(std::move(vs), std::move(tops));
}

PlanarForest PlanarForest::from_arrays(std::vector<Vertex> vertices, std::vector<int> tops) {
  PlanarForest f;
  f.v_ = std::move(vertices);
  f.tops_ = std::move(tops);
  f.finalize();
  return f;
}

void PlanarForest::finalize() {
  std::vector<int> seen;
  std::vector<int> reach(v_.size(), 0);
  std::function<void(int, int)> walk = [&](int id, int parent) {
    if (id < 0 || id >= num_vertices() || reach[static_cast<std::size_t>(id)]) {
      throw DomainError("forest arrays are not a disjoint union of trees");
    }
    reach[static_cast<std::size_t>(id)] = 1;
    auto& vx = v_[static_cast<std::size_t>(id)];
    if (vx.parent != parent) throw DomainError("forest arrays: inconsistent parent pointer");
    if (vx.label > 0) {
      if (!vx.children.empty()) throw DomainError("forest arrays: labelled vertex with children");
      seen.push_back(vx.label);
      return;
    }
    if (vx.children.size() < 2) throw DomainError("forest arrays: internal vertex with fewer than two ascending edges");
    for (int c : vx.children) walk(c, id);
  };
  for (int t : tops_) walk(t, -1);
  if (std::find(reach.begin(), reach.end(), 0) != reach.end()) throw DomainError("forest arrays: unreachable vertex");
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw DomainError("forest: repeated leaf label");
  if (!seen.empty() && seen.back() > 63) throw DomainError("forest: labels above 63 are not supported");
  num_leaves_ = static_cast<int>(seen.size());
  key_ = to_string({});
}

std::vector<int> PlanarForest::internal_vertices() const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int id) {
    if (is_leaf(id)) return;
    out.push_back(id);
    for (int c : vertex(id).children) walk(c);
  };
  for (int t : tops_) walk(t);
  return out;
}

int PlanarForest::num_internal() const { return num_vertices() - num_leaves_; }

std::vector<int> PlanarForest::leaves_above(int id) const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int x) {
    if (is_leaf(x)) {
      out.push_back(vertex(x).label);
      return;
    }
    for (int c : vertex(x).children) walk(c);
  };
  walk(id);
  return out;
}

std::vector<int> PlanarForest::leaf_order() const {
  std::vector<int> out;
  for (int t : tops_) {
    auto part = leaves_above(t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

comb::Permutation PlanarForest::total_order() const { return comb::Permutation(leaf_order()); }

std::vector<int> PlanarForest::labels() const {
  auto l = leaf_order();
  std::sort(l.begin(), l.end());
  return l;
}

Clade PlanarForest::clade(int id) const {
  Clade c = 0;
  for (int l : leaves_above(id)) c |= Clade{1} << l;
  return c;
}

int PlanarForest::vertex_with_clade(Clade c) const {
  for (int id : internal_vertices()) {
    if (clade(id) == c) return id;
  }
  return -1;
}

int PlanarForest::leaf_vertex(int label) const {
  for (int id = 0; id < num_vertices(); ++id) {
    if (vertex(id).label == label) return id;
  }
  return -1;
}

int PlanarForest::tree_of(int id) const {
  while (vertex(id).parent >= 0) id = vertex(id).parent;
  auto it = std::find(tops_.begin(), tops_.end(), id);
  return static_cast<int>(it - tops_.begin());
}

int PlanarForest::depth(int id) const {
  int d = 0;
  while (vertex(id).parent >= 0) {
    id = vertex(id).parent;
    ++d;
  }
  return d;
}

PlanarForest PlanarForest::flip(int id) const {
  if (id < 0 || id >= num_vertices() || is_leaf(id)) throw DomainError("flip: edge is not internal");
  PlanarForest out = *this;
  std::function<void(int)> walk = [&](int x) {
    auto& ch = out.v_[static_cast<std::size_t>(x)].children;
    std::reverse(ch.begin(), ch.end());
    for (int c : ch) walk(c);
  };
  walk(id);
  out.key_ = out.to_string({});
  return out;
}

PlanarForest PlanarForest::collapse(int id) const {
  if (id < 0 || id >= num_vertices() || is_leaf(id)) throw DomainError("collapse: edge is not internal");
  std::vector<Vertex> vs;
  std::vector<int> tops;
  // Rebuild with renumbered vertices, splicing id's children into its place.
  std::function<int(int, int)> copy = [&](int x, int parent) -> int {
    int nid = static_cast<int>(vs.size());
    vs.push_back({parent, {}, vertex(x).label});
    for (int c : vertex(x).children) {
      if (c == id) {
        for (int g : vertex(c).children) {
          int gc = copy(g, nid);
          vs[static_cast<std::size_t>(nid)].children.push_back(gc);
        }
      } else {
        int cc = copy(c, nid);
        vs[static_cast<std::size_t>(nid)].children.push_back(cc);
      }
    }
    return nid;
  };
  for (int t : tops_) {
    if (t == id) {
      for (int g : vertex(t).children) tops.push_back(copy(g, -1));
    } else {
      tops.push_back(copy(t, -1));
    }
  }
  return from_arrays(std::move(vs), std::move(tops));
}

std::optional<int> PlanarForest::meet(int label_a, int label_b) const {
  int a = leaf_vertex(label_a), b = leaf_vertex(label_b);
  if (a < 0 || b < 0) throw DomainError("meet: unknown leaf label");
  std::vector<int> pa;
  for (int x = a; x >= 0; x = vertex(x).parent) pa.push_back(x);
  for (int x = b; x >= 0; x = vertex(x).parent) {
    if (std::find(pa.begin(), pa.end(), x) != pa.end()) return x;
  }
  return std::nullopt;
}

PlanarForest PlanarForest::tree(int index) const {
  return parse(tree_string(tops_.at(static_cast<std::size_t>(index))) + ";");
}

std::string PlanarForest::tree_string(int top, const std::set<Clade>& marked, const char* mark) const {
  std::string out;
  std::function<void(int)> walk = [&](int x) {
    const auto& vx = vertex(x);
    if (vx.label > 0) {
      out += std::to_string(vx.label);
      return;
    }
    out += "(";
    for (std::size_t i = 0; i < vx.children.size(); ++i) {
      if (i) out += ",";
      walk(vx.children[i]);
    }
    out += ")";
    if (!marked.empty() && marked.count(clade(x))) out += mark;
  };
  walk(top);
  return out;
}

std::string PlanarForest::to_string(const std::set<Clade>& marked, const char* mark) const {
  std::string out;
  for (int t : tops_) out += tree_string(t, marked, mark) + ";";
  return out;
}

namespace {

// Planar trees on a label set, grouped by number of internal vertices.
using TreeTable = std::map<Clade, std::vector<std::vector<std::string>>>;

const std::vector<std::vector<std::string>>& trees_on(Clade mask, TreeTable& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::vector<int> labels;
  for (int l = 1; l < 64; ++l) {
    if (mask & (Clade{1} << l)) labels.push_back(l);
  }
  std::vector<std::vector<std::string>> by_k(labels.size());
  if (labels.size() == 1) {
    by_k[0].push_back(std::to_string(labels[0]));
    return memo[mask] = by_k;
  }
  // Top vertex with an ordered set partition of the labels into >= 2 parts.
  for (const auto& osp : comb::all_ordered_set_partitions(static_cast<int>(labels.size()))) {
    if (osp.num_parts() < 2) continue;
    std::vector<Clade> parts;
    for (const auto& part : osp.parts()) {
      Clade c = 0;
      for (int idx : part) c |= Clade{1} << labels[static_cast<std::size_t>(idx - 1)];
      parts.push_back(c);
    }
    std::vector<std::pair<std::string, int>> acc{{"", 1}};
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const auto& sub = trees_on(parts[p], memo);
      std::vector<std::pair<std::string, int>> next;
      for (const auto& [prefix, k] : acc) {
        for (std::size_t sk = 0; sk < sub.size(); ++sk) {
          for (const auto& s : sub[sk]) next.emplace_back(prefix + (p ? "," : "") + s, k + static_cast<int>(sk));
        }
      }
      acc = std::move(next);
    }
    for (auto& [body, k] : acc) by_k[static_cast<std::size_t>(k)].push_back("(" + body + ")");
  }
  return memo[mask] = by_k;
}

}  // namespace

std::vector<PlanarForest> enumerate_planar_forests(int n, int k) {
  if (n < 1 || n > 12) throw DomainError("enumerate_planar_forests supports 1 <= n <= 12");
  if (k < 0 || k > n - 1) return {};
  TreeTable memo;
  std::vector<std::string> out;
  for (const auto& osp : comb::all_ordered_set_partitions(n)) {
    std::vector<std::pair<std::string, int>> acc{{"", 0}};
    for (const auto& part : osp.parts()) {
      Clade c = 0;
      for (int l : part) c |= Clade{1} << l;
      const auto& sub = trees_on(c, memo);
      std::vector<std::pair<std::string, int>> next;
      for (const auto& [prefix, kk] : acc) {
        for (std::size_t sk = 0; sk < sub.size(); ++sk) {
          if (kk + static_cast<int>(sk) > k) break;
          for (const auto& s : sub[sk]) next.emplace_back(prefix + s + ";", kk + static_cast<int>(sk));
        }
      }
      acc = std::move(next);
    }
    for (auto& [s, kk] : acc) {
      if (kk == k) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  std::vector<PlanarForest> forests;
  forests.reserve(out.size());
  for (const auto& s : out) forests.push_back(PlanarForest::parse(s));
  return forests;
}

std::vector<PlanarForest> enumerate_planar_forests(int n) {
  std::vector<PlanarForest> all;
  for (int k = 0; k < n; ++k) {
    auto part = enumerate_planar_forests(n, k);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::pair<int, int> label_interval(const PlanarForest& f, int id) {
  auto order = f.leaf_order();
  auto above = f.leaves_above(id);
  auto it = std::find(order.begin(), order.end(), above.front());
  int i = static_cast<int>(it - order.begin()) + 1;
  return {i, i + static_cast<int>(above.size()) - 1};
}

PlanarForest orient_canonically(const PlanarForest& f, const std::set<Clade>& flippable) {
  std::vector<int> todo;
  for (int id : f.internal_vertices()) {
    if (flippable.count(f.clade(id))) todo.push_back(id);
  }
  std::stable_sort(todo.begin(), todo.end(), [&](int a, int b) { return f.depth(a) < f.depth(b); });
  PlanarForest out = f;
  for (int id : todo) {
    const auto& ch = out.vertex(id).children;
    auto first = out.leaves_above(ch.front()), last = out.leaves_above(ch.back());
    if (*std::min_element(first.begin(), first.end()) > *std::min_element(last.begin(), last.end())) {
      out = out.flip(id);
    }
  }
  return out;
}

namespace {

PlanarForest sort_trees(const PlanarForest& f, const std::set<Clade>& marked, std::set<Clade>* zeros) {
  std::vector<std::string> trees;
  for (int t : f.tops()) trees.push_back(f.tree_string(t, marked));
  std::sort(trees.begin(), trees.end());
  std::string s;
  for (const auto& t : trees) s += t + ";";
  std::set<Clade> dummy;
  return Parser(s, zeros ? zeros : &dummy).run();
}

}  // namespace

UnorderedPlanarForest::UnorderedPlanarForest(const PlanarForest& f, std::set<Clade> flippable) : flip_(std::move(flippable)) {
  for (Clade c : flip_) {
    if (f.vertex_with_clade(c) < 0) throw DomainError("flippable edge is not an internal edge of the forest");
  }
  rep_ = sort_trees(orient_canonically(f, flip_), flip_, nullptr);
}

UnorderedPlanarForest flip_class(const PlanarForest& f) {
  std::set<Clade> all;
  for (int id : f.internal_vertices()) all.insert(f.clade(id));
  return UnorderedPlanarForest(f, std::move(all));
}

PlanarForestWithZeros::PlanarForestWithZeros(const PlanarForest& f, std::set<Clade> zeros) : zeros_(std::move(zeros)) {
  for (Clade c : zeros_) {
    if (f.vertex_with_clade(c) < 0) throw DomainError("decorated edge is not an internal edge of the forest");
  }
  rep_ = sort_trees(orient_canonically(f, zeros_), zeros_, nullptr);
}

PlanarForestWithZeros PlanarForestWithZeros::parse(std::string_view text) {
  std::set<Clade> zeros;
  auto f = Parser(text, &zeros).run();
  return PlanarForestWithZeros(f, std::move(zeros));
}

std::vector<Clade> PlanarForestWithZeros::free_edges() const {
  std::vector<Clade> out;
  for (int id : rep_.internal_vertices()) {
    Clade c = rep_.clade(id);
    if (!zeros_.count(c)) out.push_back(c);
  }
  return out;
}

std::vector<PlanarForestWithZeros> enumerate_zero_forests(int n) {
  std::set<PlanarForestWithZeros> out;
  for (const auto& f : enumerate_planar_forests(n)) {
    auto ids = f.internal_vertices();
    const std::size_t k = ids.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::set<Clade> z;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (std::uint64_t{1} << b)) z.insert(f.clade(ids[b]));
      }
      out.emplace(f, std::move(z));
    }
  }
  return {out.begin(), out.end()};
}

BushyForest::BushyForest(const PlanarForest& f, std::vector<bool> bushy_root) {
  if (static_cast<int>(bushy_root.size()) != f.num_trees()) throw DomainError("bushy flags do not match the number of trees");
  // Orient every non-root internal vertex independently.
  std::vector<Vertex> vs;
  for (int id = 0; id < f.num_vertices(); ++id) vs.push_back(f.vertex(id));
  for (int id = 0; id < f.num_vertices(); ++id) {
    if (f.is_leaf(id)) continue;
    if (f.is_trunk(id) && bushy_root[static_cast<std::size_t>(f.tree_of(id))]) continue;
    auto& ch = vs[static_cast<std::size_t>(id)].children;
    auto first = f.leaves_above(ch.front()), last = f.leaves_above(ch.back());
    if (*std::min_element(first.begin(), first.end()) > *std::min_element(last.begin(), last.end())) {
      std::reverse(ch.begin(), ch.end());
    }
  }
  PlanarForest oriented = PlanarForest::from_arrays(std::move(vs), f.tops());
  std::vector<std::pair<std::string, int>> trees;
  for (int t = 0; t < oriented.num_trees(); ++t) {
    int top = oriented.tops()[static_cast<std::size_t>(t)];
    std::string s;
    if (bushy_root[static_cast<std::size_t>(t)] && !oriented.is_leaf(top)) {
      std::string inner = oriented.tree_string(top);
      s = "[" + inner.substr(1, inner.size() - 2) + "]";
    } else {
      s = "[" + oriented.tree_string(top) + "]";
    }
    trees.emplace_back(s, t);
  }
  std::sort(trees.begin(), trees.end());
  std::string forest_text;
  for (const auto& [s, t] : trees) {
    key_ += s + ";";
    forest_text += oriented.tree_string(oriented.tops()[static_cast<std::size_t>(t)]) + ";";
    bushy_.push_back(bushy_root[static_cast<std::size_t>(t)]);
  }
  rep_ = PlanarForest::parse(forest_text);
}

UnorderedPlanarForest zeros_to_planar(const PlanarForestWithZeros& z) { return flip_class(z.forest()); }

BushyForest zeros_to_bushy(const PlanarForestWithZeros& z) {
  PlanarForest f = z.forest();
  // Contract undecorated non-trunk edges; trunks are handled by the root flag.
  while (true) {
    int target = -1;
    for (int id : f.internal_vertices()) {
      if (!f.is_trunk(id) && !z.zeros().count(f.clade(id))) {
        target = id;
        break;
      }
    }
    if (target < 0) break;
    f = f.collapse(target);
  }
  std::vector<bool> bushy;
  for (int top : f.tops()) bushy.push_back(!f.is_leaf(top) && !z.zeros().count(f.clade(top)));
  return BushyForest(f, std::move(bushy));
}

std::uint64_t catalan(int m) {
  std::uint64_t c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return c;
}

nlohmann::json forest_to_json(const PlanarForest& f, const std::set<Clade>& zeros) {
  std::function<nlohmann::json(int)> enc = [&](int x) -> nlohmann::json {
    if (f.is_leaf(x)) return f.vertex(x).label;
    nlohmann::json ch = nlohmann::json::array();
    for (int c : f.vertex(x).children) ch.push_back(enc(c));
    if (zeros.count(f.clade(x))) return {{"children", ch}, {"zero", true}};
    return ch;
  };
  nlohmann::json out = nlohmann::json::array();
  for (int t : f.tops()) out.push_back(enc(t));
  return out;
}

PlanarForest forest_from_json(const nlohmann::json& j, std::set<Clade>* zeros) {
  std::function<std::string(const nlohmann::json&)> dec = [&](const nlohmann::json& x) -> std::string {
    if (x.is_number_integer()) return std::to_string(x.get<int>());
    bool zero = false;
    const nlohmann::json* ch = &x;
    if (x.is_object()) {
      zero = x.value("zero", false);
      ch = &x.at("children");
    }
    if (!ch->is_array()) throw DomainError("forest JSON: expected an array of subtrees");
    std::string s = "(";
    for (std::size_t i = 0; i < ch->size(); ++i) {
      if (i) s += ",";
      s += dec((*ch)[i]);
    }
    s += ")";
    if (zero) {
      if (!zeros) throw DomainError("forest JSON: decorations are not allowed here");
      s += ":0";
    }
    return s;
  };
  if (!j.is_array()) throw DomainError("forest JSON: expected an array of trees");
  std::string text;
  for (const auto& t : j) text += dec(t) + ";";
  if (zeros) return Parser(text, zeros).run();
  return PlanarForest::parse(text);
}

}  // namespace cactus::forests
