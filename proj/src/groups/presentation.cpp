#include "cactus/groups/presentation.hpp"

#include <algorithm>
#include <map>

#include "cactus/errors.hpp"

namespace cactus::groups {

using comb::CyclicInterval;
using comb::Permutation;

bool Presentation::declares(const Letter& x) const {
  if (x.kind == LetterKind::Perm) return factor == Factor::Symmetric && x.permutation().size() == n;
  if (x.kind == LetterKind::Rot) return factor == Factor::Cyclic;
  return std::find(generators.begin(), generators.end(), x) != generators.end();
}

std::set<Word> Presentation::relator_classes() const {
  std::set<Word> out;
  for (const auto& r : relators) {
    auto c = cyclic_class(r, n);
    if (!c.empty()) out.insert(std::move(c));
  }
  return out;
}

std::string canonical_family(const std::string& name) {
  static const std::map<std::string, std::string> alias = {
      {"C", "cactus"},          {"AC", "affine_cactus"},    {"extAC", "ext_affine_cactus"},
      {"vC", "virtual_cactus"}, {"vS", "virtual_sym"},      {"PvC", "pure_virtual_cactus"},
      {"PvS", "pure_virtual_sym"}, {"S", "symmetric"},      {"AS", "affine_sym"},
      {"extAS", "ext_affine_sym"},
  };
  static const std::set<std::string> full = {"cactus",         "affine_cactus",      "ext_affine_cactus",
                                             "virtual_cactus", "virtual_sym",        "pure_virtual_cactus",
                                             "pure_virtual_sym", "symmetric",        "affine_sym",
                                             "ext_affine_sym"};
  if (auto it = alias.find(name); it != alias.end()) return it->second;
  if (full.count(name)) return name;
  throw DomainError("unknown group family '" + name + "'");
}

std::vector<std::vector<int>> ordered_subsets(int n, int min_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) >= min_size) out.push_back(cur);
    for (int a = 1; a <= n; ++a) {
      if (used[static_cast<std::size_t>(a)]) continue;
      used[static_cast<std::size_t>(a)] = 1;
      cur.push_back(a);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(a)] = 0;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Keeps the first relator of each cyclic class; trivial relators are kept
// once per literal word.
class RelatorSet {
public:
  explicit RelatorSet(int n) : n_(n) {}
  void add(Word w) {
    auto c = cyclic_class(w, n_);
    if (c.empty()) {
      if (trivial_.insert(w).second) out_.push_back(std::move(w));
      return;
    }
    if (seen_.insert(c).second) out_.push_back(std::move(w));
  }
  std::vector<Word> take() { return std::move(out_); }

private:
  int n_;
  std::set<Word> seen_, trivial_;
  std::vector<Word> out_;
};

void add_cactus_relators(RelatorSet& rs, const std::vector<CyclicInterval>& ivs) {
  for (const auto& I : ivs) {
    Letter s = Letter::s(I.first(), I.last());
    rs.add({s, s});
  }
  for (std::size_t a = 0; a < ivs.size(); ++a) {
    for (std::size_t b = 0; b < ivs.size(); ++b) {
      if (a == b) continue;
      const auto& I = ivs[a];
      const auto& J = ivs[b];
      Letter si = Letter::s(I.first(), I.last());
      Letter sj = Letter::s(J.first(), J.last());
      if (I.disjoint(J)) {
        if (a < b) rs.add({si, sj, si, sj});
      } else if (I.contains_interval(J)) {
        auto w = comb::interval_reversal(I.first(), I.last(), I.n());
        rs.add({si, sj, si, Letter::s(w(J.last()), w(J.first()))});
      }
    }
  }
}

std::vector<CyclicInterval> intervals(int n, bool standard_only) {
  std::vector<CyclicInterval> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j || (standard_only && i > j)) continue;
      out.emplace_back(i, j, n);
    }
  }
  return out;
}

void add_coxeter(RelatorSet& rs, int n, bool affine) {
  const int lo = affine ? 0 : 1;
  for (int i = lo; i < n; ++i) rs.add({Letter::sigma(i), Letter::sigma(i)});
  for (int i = lo; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int d = j - i;
      bool adjacent = d == 1 || (affine && d == n - 1);
      if (affine && n == 2) continue;
      Word w;
      int m = adjacent ? 3 : 2;
      for (int k = 0; k < m; ++k) {
        w.push_back(Letter::sigma(i));
        w.push_back(Letter::sigma(j));
      }
      rs.add(w);
    }
  }
}

}  // namespace

Presentation make_presentation(const std::string& family_name, int n) {
  const std::string family = canonical_family(family_name);
  if (n < 2) throw DomainError("presentations need n >= 2");
  Presentation p;
  p.family = family;
  p.n = n;
  RelatorSet rs(n);

  if (family == "cactus" || family == "affine_cactus" || family == "ext_affine_cactus" ||
      family == "virtual_cactus") {
    const bool standard = family == "cactus" || family == "virtual_cactus";
    auto ivs = intervals(n, standard);
    for (const auto& I : ivs) p.generators.push_back(Letter::s(I.first(), I.last()));
    add_cactus_relators(rs, ivs);
    if (family == "ext_affine_cactus") {
      p.factor = Factor::Cyclic;
      p.generators.push_back(Letter::rot(1));
      for (const auto& I : ivs) {
        rs.add({Letter::rot(1), Letter::s(I.first(), I.last()), Letter::rot(-1),
                Letter::s(comb::mod1(I.first() + 1, n), comb::mod1(I.last() + 1, n))});
      }
    }
    if (family == "virtual_cactus") {
      p.factor = Factor::Symmetric;
      for (int k = 1; k < n; ++k) p.generators.push_back(Letter::perm(Permutation::adjacent(n, k)));
      for (const auto& w : comb::all_permutations(n)) {
        if (w.is_identity()) continue;
        for (const auto& I : ivs) {
          if (!comb::is_translation(w, I.first(), I.last())) continue;
          rs.add({Letter::perm(w), Letter::s(I.first(), I.last()), Letter::perm(w.inverse()),
                  Letter::s(w(I.first()), w(I.last()))});
        }
      }
    }
  } else if (family == "symmetric" || family == "affine_sym" || family == "ext_affine_sym" ||
             family == "virtual_sym") {
    const bool affine = family == "affine_sym" || family == "ext_affine_sym";
    for (int i = affine ? 0 : 1; i < n; ++i) p.generators.push_back(Letter::sigma(i));
    add_coxeter(rs, n, affine);
    if (family == "ext_affine_sym") {
      p.factor = Factor::Cyclic;
      p.generators.push_back(Letter::rot(1));
      for (int i = 0; i < n; ++i) {
        rs.add({Letter::rot(1), Letter::sigma(i), Letter::rot(-1), Letter::sigma((i + 1) % n)});
      }
    }
    if (family == "virtual_sym") {
      p.factor = Factor::Symmetric;
      for (int k = 1; k < n; ++k) p.generators.push_back(Letter::perm(Permutation::adjacent(n, k)));
      for (const auto& w : comb::all_permutations(n)) {
        if (w.is_identity()) continue;
        for (int i = 1; i < n; ++i) {
          if (w(i + 1) != w(i) + 1) continue;
          rs.add({Letter::perm(w), Letter::sigma(i), Letter::perm(w.inverse()), Letter::sigma(w(i))});
        }
      }
    }
  } else if (family == "pure_virtual_sym") {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) p.generators.push_back(Letter::pure_sigma(i, j));
      }
    }
    auto g = [](int a, int b) { return Letter::pure_sigma(a, b); };
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        if (i < j) rs.add({g(i, j), g(j, i)});
        for (int l = 1; l <= n; ++l) {
          if (l == i || l == j) continue;
          rs.add({g(i, j), g(i, l), g(j, l), g(j, i), g(l, i), g(l, j)});
          for (int m = 1; m <= n; ++m) {
            if (m == i || m == j || m == l) continue;
            rs.add({g(i, j), g(l, m), g(j, i), g(m, l)});
          }
        }
      }
    }
  } else if (family == "pure_virtual_cactus") {
    auto subsets = ordered_subsets(n, 2);
    auto all = ordered_subsets(n, 0);
    for (const auto& a : subsets) p.generators.push_back(Letter::pure_s(a));
    auto disjoint = [](const std::vector<int>& x, const std::vector<int>& y) {
      for (int v : x) {
        if (std::find(y.begin(), y.end(), v) != y.end()) return false;
      }
      return true;
    };
    auto rev = [](std::vector<int> x) {
      std::reverse(x.begin(), x.end());
      return x;
    };
    auto cat3 = [](const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& z) {
      std::vector<int> out = x;
      out.insert(out.end(), y.begin(), y.end());
      out.insert(out.end(), z.begin(), z.end());
      return out;
    };
    for (const auto& a : subsets) {
      if (a < rev(a)) rs.add({Letter::pure_s(a), Letter::pure_s(rev(a))});
    }
    for (const auto& a : subsets) {
      for (const auto& b : subsets) {
        if (a < b && disjoint(a, b)) {
          rs.add({Letter::pure_s(a), Letter::pure_s(b), Letter::pure_s(rev(a)), Letter::pure_s(rev(b))});
        }
      }
    }
    for (const auto& a : subsets) {
      for (const auto& b : all) {
        if (!disjoint(a, b)) continue;
        for (const auto& c : all) {
          if (!disjoint(a, c) || !disjoint(b, c) || (b.empty() && c.empty())) continue;
          // s_{A^r} s_{CAB} = s_{C A^r B} s_A
          rs.add({Letter::pure_s(rev(a)), Letter::pure_s(cat3(c, a, b)), Letter::pure_s(rev(a)),
                  Letter::pure_s(rev(cat3(c, rev(a), b)))});
        }
      }
    }
  }
  p.relators = rs.take();
  return p;
}

ComparisonResult compare_presentations(const Presentation& a, const Presentation& b) {
  ComparisonResult res;
  std::set<Letter> ga(a.generators.begin(), a.generators.end());
  std::set<Letter> gb(b.generators.begin(), b.generators.end());
  for (const auto& x : ga) {
    if (!gb.count(x)) {
      res.witness = "generator " + x.to_string() + " missing from " + b.family;
      return res;
    }
  }
  for (const auto& x : gb) {
    if (!ga.count(x)) {
      res.witness = "generator " + x.to_string() + " missing from " + a.family;
      return res;
    }
  }
  auto ra = a.relator_classes();
  auto rb = b.relator_classes();
  for (const auto& r : ra) {
    if (!rb.count(r)) {
      res.witness = "relator " + to_string(r) + " missing from " + b.family;
      return res;
    }
  }
  for (const auto& r : rb) {
    if (!ra.count(r)) {
      res.witness = "relator " + to_string(r) + " missing from " + a.family;
      return res;
    }
  }
  res.isomorphic = true;
  return res;
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json j;
  j["family"] = p.family;
  j["n"] = p.n;
  j["factor"] = p.factor == Factor::None ? "none" : p.factor == Factor::Symmetric ? "S_n" : "Z/n";
  j["generators"] = nlohmann::json::array();
  for (const auto& g : p.generators) j["generators"].push_back(g.to_string());
  j["relators"] = nlohmann::json::array();
  for (const auto& r : p.relators) j["relators"].push_back(to_string(r));
  return j;
}

}  // namespace cactus::groups
