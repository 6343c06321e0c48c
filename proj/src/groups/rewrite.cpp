#include "cactus/groups/rewrite.hpp"

#include <map>
#include <unordered_map>

#include "cactus/errors.hpp"

namespace cactus::groups {

using comb::Permutation;

namespace {

// Word written as p_0 x_1 p_1 ... x_m p_m with factor elements p_i (stored as
// permutations; Z/n is realised by powers of the long cycle).
struct Normal {
  std::vector<Letter> xs;
  std::vector<Permutation> ps;
};

class Engine {
public:
  explicit Engine(const Presentation& p) : p_(p), n_(p.n), id_(Permutation::identity(p.n)) {
    std::set<std::pair<std::vector<Letter>, std::vector<Permutation>>> seen;
    for (const auto& rel : p.relators) {
      for (const Word& r : {rel, inverse(rel)}) add_relator(r, seen);
    }
  }

  Normal normal(const Word& w) const {
    Normal out;
    out.ps.push_back(id_);
    for (const auto& x : w) {
      if (x.is_factor()) {
        out.ps.back() = out.ps.back() * factor_perm(x);
        continue;
      }
      if (!out.xs.empty() && out.ps.back().is_identity() && out.xs.back() == x.inverse()) {
        out.xs.pop_back();
        out.ps.pop_back();
        continue;
      }
      out.xs.push_back(x);
      out.ps.push_back(id_);
    }
    return out;
  }

  Word to_word(const Normal& nf) const {
    Word w;
    for (std::size_t i = 0; i < nf.ps.size(); ++i) {
      if (!nf.ps[i].is_identity()) w.push_back(factor_letter(nf.ps[i]));
      if (i < nf.xs.size()) w.push_back(nf.xs[i]);
    }
    return w;
  }

  std::string key(const Normal& nf) const { return to_string(to_word(nf)); }

  // All words one relator application away.
  std::vector<Normal> neighbours(const Normal& w) const {
    std::vector<Normal> out;
    const std::size_t m = w.xs.size();
    for (std::size_t a = 0; a < m; ++a) {
      auto it = rules_.find(w.xs[a]);
      if (it == rules_.end()) continue;
      for (const auto& rule : it->second) {
        const std::size_t len = rule.lhs.size();
        if (a + len > m) continue;
        bool ok = true;
        for (std::size_t t = 1; t < len && ok; ++t) {
          ok = w.xs[a + t] == rule.lhs[t] && w.ps[a + t] == rule.inner[t - 1];
        }
        if (!ok) continue;
        Word nw;
        for (std::size_t i = 0; i < a; ++i) {
          push_factor(nw, w.ps[i]);
          nw.push_back(w.xs[i]);
        }
        push_factor(nw, w.ps[a]);
        nw.insert(nw.end(), rule.rhs.begin(), rule.rhs.end());
        for (std::size_t i = a + len; i < m; ++i) {
          push_factor(nw, w.ps[i]);
          nw.push_back(w.xs[i]);
        }
        push_factor(nw, w.ps[m]);
        out.push_back(normal(nw));
      }
    }
    return out;
  }

private:
  struct Rule {
    std::vector<Letter> lhs;          // consecutive non-factor letters
    std::vector<Permutation> inner;   // factor elements between them
    Word rhs;                         // replacement, boundary factors included
  };

  Permutation factor_perm(const Letter& x) const {
    if (x.kind == LetterKind::Perm) return x.permutation();
    return Permutation::long_cycle(n_).pow(x.data[0]);
  }

  Letter factor_letter(const Permutation& q) const {
    if (p_.factor == Factor::Cyclic) {
      auto r = Permutation::long_cycle(n_);
      Permutation acc = id_;
      for (int k = 0; k < n_; ++k) {
        if (acc == q) return Letter::rot(k);
        acc = acc * r;
      }
      throw InvariantViolation("factor element is not a rotation");
    }
    return Letter::perm(q);
  }

  void push_factor(Word& w, const Permutation& q) const {
    if (!q.is_identity()) w.push_back(factor_letter(q));
  }

  void add_relator(const Word& r, std::set<std::pair<std::vector<Letter>, std::vector<Permutation>>>& seen) {
    Normal nf = normal(r);
    if (nf.xs.empty()) return;
    // Cyclic form y_1 q_1 ... y_m q_m with q_m absorbing the leading factor.
    std::vector<Letter> ys = nf.xs;
    std::vector<Permutation> qs(nf.ps.begin() + 1, nf.ps.end());
    qs.back() = qs.back() * nf.ps.front();
    const std::size_t m = ys.size();
    if (!seen.insert({ys, qs}).second) return;
    for (std::size_t t = 0; t < m; ++t) {
      for (std::size_t len = 1; len <= m; ++len) {
        Rule rule;
        for (std::size_t k = 0; k < len; ++k) {
          rule.lhs.push_back(ys[(t + k) % m]);
          if (k + 1 < len) rule.inner.push_back(qs[(t + k) % m]);
        }
        // rest = q_{t+len-1} y_{t+len} ... y_{t-1} q_{t-1}; u = rest^{-1}.
        Word rest;
        rest.push_back(Letter::perm(qs[(t + len - 1) % m]));
        for (std::size_t k = len; k < m; ++k) {
          rest.push_back(ys[(t + k) % m]);
          rest.push_back(Letter::perm(qs[(t + k) % m]));
        }
        Word rhs;
        for (const auto& x : inverse(rest)) {
          if (x.kind == LetterKind::Perm) {
            push_factor(rhs, x.permutation());
          } else {
            rhs.push_back(x);
          }
        }
        rule.rhs = std::move(rhs);
        rules_[rule.lhs.front()].push_back(std::move(rule));
      }
    }
  }

  const Presentation& p_;
  int n_;
  Permutation id_;
  std::map<Letter, std::vector<Rule>> rules_;
};

}  // namespace

RewriteResult bounded_rewrite(const Presentation& p, const Word& lhs, const Word& rhs, int max_depth,
                              std::size_t max_states) {
  Engine eng(p);
  RewriteResult res;
  std::unordered_map<std::string, int> seen[2];
  std::vector<Normal> frontier[2];
  int depth[2] = {0, 0};
  Normal a = eng.normal(lhs), b = eng.normal(rhs);
  std::string ka = eng.key(a), kb = eng.key(b);
  seen[0][ka] = 0;
  seen[1][kb] = 0;
  frontier[0].push_back(a);
  frontier[1].push_back(b);
  res.states = 2;
  if (ka == kb) {
    res.proven = true;
    res.depth = 0;
    return res;
  }
  while (depth[0] + depth[1] < max_depth) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) side = 1 - side;
    if (frontier[side].empty()) break;
    std::vector<Normal> next;
    const int d = depth[side] + 1;
    for (const auto& w : frontier[side]) {
      for (auto& nb : eng.neighbours(w)) {
        std::string k = eng.key(nb);
        if (seen[side].count(k)) continue;
        if (auto it = seen[1 - side].find(k); it != seen[1 - side].end()) {
          res.proven = true;
          res.depth = d + it->second;
          res.states += 1;
          return res;
        }
        seen[side].emplace(std::move(k), d);
        next.push_back(std::move(nb));
        if (++res.states >= max_states) {
          res.truncated = true;
          return res;
        }
      }
    }
    if (!next.empty()) depth[side] = d;
    frontier[side] = std::move(next);
  }
  return res;
}

}  // namespace cactus::groups
