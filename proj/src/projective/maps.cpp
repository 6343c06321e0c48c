#include "cactus/projective/maps.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "cactus/errors.hpp"

namespace cactus::proj {

namespace {

std::string idx(std::initializer_list<int> xs) {
  std::string out = "[";
  bool first = true;
  for (int x : xs) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "]";
}

// Classes of the relation given by `related`, with a transitivity check.
comb::SetPartition classes_of(const std::vector<int>& labels, const std::function<bool(int, int)>& related,
                              const char* what) {
  std::vector<int> cls(labels.size(), -1);
  int next = 0;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = next;
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (cls[b] < 0 && related(labels[a], labels[b])) cls[b] = next;
    }
    ++next;
  }
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = 0; b < labels.size(); ++b) {
      if (a != b && related(labels[a], labels[b]) != (cls[a] == cls[b])) {
        throw InvariantViolation(std::string(what) + " is not an equivalence relation at " +
                                 idx({labels[a], labels[b]}));
      }
    }
  }
  return comb::SetPartition::from_classes(labels, cls);
}

}  // namespace

Strata classify_strata(const Tuple& t) {
  if (t.eps && !t.eps->is_zero()) throw DomainError("classify_strata works on the epsilon = 0 fibre");
  Tuple flat = t;
  flat.eps.reset();
  auto rep = check_membership(Variety::Flower, flat);
  if (!rep.ok) throw DomainError("not a point of the flower space: " + rep.witness());
  Strata s;
  s.S = classes_of(t.labels, [&](int i, int j) { return !t.pair(i, j).is_zero(); }, "finiteness of delta");
  s.B = classes_of(t.labels, [&](int i, int j) { return t.pair(i, j).is_infinite(); }, "vanishing of delta");
  if (!comb::refines(s.B, s.S)) throw InvariantViolation("B does not refine S");
  int n = t.n();
  s.dim_S = n - s.S.num_blocks();
  s.dim_B = n - 1 - s.B.num_blocks() + s.B.num_singletons();
  s.dim_B_flower = s.B.num_blocks() - 1;
  return s;
}

namespace {

// Forward-mode derivative over the rationals.
struct Dual {
  Rational v;
  std::vector<Rational> d;

  Dual(Rational value, std::size_t vars) : v(std::move(value)), d(vars, Rational(0)) {}
  static Dual var(Rational value, std::size_t vars, std::size_t k) {
    Dual x(std::move(value), vars);
    x.d[k] = 1;
    return x;
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    Dual r(a.v - b.v, a.d.size());
    for (std::size_t k = 0; k < a.d.size(); ++k) r.d[k] = a.d[k] - b.d[k];
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    if (b.v == 0) throw InvariantViolation("division by zero at the sample point");
    Dual r(a.v / b.v, a.d.size());
    for (std::size_t k = 0; k < a.d.size(); ++k) r.d[k] = (a.d[k] * b.v - a.v * b.d[k]) / (b.v * b.v);
    return r;
  }
};

int matrix_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < m.size(); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      Rational f = m[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rational> distinct_rationals(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-500, 500), den(1, 37);
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (seen.insert(q).second) out.push_back(q);
  }
  return out;
}

int jacobian_rank(const std::vector<Dual>& outputs) {
  std::vector<std::vector<Rational>> m;
  for (const auto& o : outputs) m.push_back(o.d);
  return matrix_rank(std::move(m));
}

}  // namespace

int tangent_dimension_S(const comb::SetPartition& S, std::uint64_t seed) {
  // Points x_i in each part, mod translation: delta_ij = x_i - x_j inside a part,
  // mu_ijk inside a part.
  const auto& ground = S.ground();
  std::size_t n = ground.size();
  std::mt19937_64 rng(seed);
  auto vals = distinct_rationals(n, rng);
  std::vector<Dual> x;
  for (std::size_t k = 0; k < n; ++k) x.push_back(Dual::var(vals[k], n, k));
  std::vector<Dual> out;
  for (const auto& b : S.blocks()) {
    std::vector<std::size_t> pos;
    for (int l : b) pos.push_back(static_cast<std::size_t>(std::find(ground.begin(), ground.end(), l) - ground.begin()));
    for (std::size_t a : pos) {
      for (std::size_t c : pos) {
        if (a != c) out.push_back(x[a] - x[c]);
        for (std::size_t d : pos) {
          if (a != c && c != d && a != d) out.push_back((x[a] - x[d]) / (x[a] - x[c]));
        }
      }
    }
  }
  return jacobian_rank(out);
}

int tangent_dimension_B(const comb::SetPartition& B, std::uint64_t seed) {
  // Block positions y (mod translation) give delta across blocks; positions w
  // inside a block (mod affine maps) give the mu of the bubble over the block.
  const auto& ground = B.ground();
  std::size_t n = ground.size(), r = B.blocks().size();
  std::mt19937_64 rng(seed);
  auto yv = distinct_rationals(r, rng);
  auto wv = distinct_rationals(n, rng);
  std::vector<Dual> y, w;
  for (std::size_t k = 0; k < r; ++k) y.push_back(Dual::var(yv[k], r + n, k));
  for (std::size_t k = 0; k < n; ++k) w.push_back(Dual::var(wv[k], r + n, r + k));
  auto block_of = [&](std::size_t a) { return static_cast<std::size_t>(B.block_index(ground[a])); };
  std::vector<Dual> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (block_of(a) != block_of(b)) out.push_back(y[block_of(a)] - y[block_of(b)]);
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        std::size_t ba = block_of(a), bb = block_of(b), bc = block_of(c);
        if (ba == bb && bb == bc) {
          out.push_back((w[a] - w[c]) / (w[a] - w[b]));
        } else if (ba != bb && bb != bc && ba != bc) {
          out.push_back((y[ba] - y[bc]) / (y[ba] - y[bb]));
        }
      }
    }
  }
  return jacobian_rank(out);
}

bool open_cover_membership(const comb::SetPartition& S, const Tuple& t) {
  Scalar e = t.epsilon();
  for (auto [i, j] : ordered_pairs(t.labels)) {
    const auto& p = t.pair(i, j);
    if (S.same_block(i, j)) {
      if (p.is_zero() || p.equals(e)) return false;
    } else if (p.is_infinite()) {
      return false;
    }
  }
  return true;
}

ChartReport chart_membership(const forests::PlanarForest& tau, const Tuple& t) {
  ChartReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };
  for (int tr = 0; tr < tau.num_trees(); ++tr) {
    auto labels = tau.leaves_above(tau.tops()[static_cast<std::size_t>(tr)]);
    std::sort(labels.begin(), labels.end());
    for (const auto& [i, j, k] : ordered_triples(labels)) {
      ++rep.checked;
      std::string name = "mu" + idx({i, j, k});
      auto it = t.mu.find({i, j, k});
      if (it == t.mu.end()) {
        fail(name + " missing");
        continue;
      }
      const ProjPoint& m = it->second;
      int dik = tau.depth(*tau.meet(i, k)), dij = tau.depth(*tau.meet(i, j));
      if (dik > dij) {
        if (m.equals(Scalar(1)) || m.is_infinite()) fail(name + " = " + m.to_string() + " but must avoid 1, inf");
      } else if (dik == dij) {
        if (m.is_zero() || m.is_infinite()) fail(name + " = " + m.to_string() + " but must avoid 0, inf");
      } else if (m.is_zero() || m.equals(Scalar(1))) {
        fail(name + " = " + m.to_string() + " but must avoid 0, 1");
      }
    }
  }
  return rep;
}

Tuple extend_nu(const comb::SetPartition& S, const std::vector<Tuple>& blocks, const Tuple& core,
                const std::optional<Scalar>& eps) {
  const auto& parts = S.blocks();
  if (blocks.size() != parts.size()) throw DomainError("extend_nu needs one tuple per part");
  Tuple out;
  out.labels = S.ground();
  std::sort(out.labels.begin(), out.labels.end());
  out.eps = eps;
  Scalar e = eps.value_or(Scalar(0));
  std::vector<int> reps;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    reps.push_back(*std::min_element(parts[k].begin(), parts[k].end()));
    auto lab = parts[k];
    std::sort(lab.begin(), lab.end());
    if (blocks[k].labels != lab) throw DomainError("block tuple " + std::to_string(k) + " has the wrong labels");
    for (auto [i, j] : ordered_pairs(lab)) out.nu[{i, j}] = blocks[k].pair(i, j);
  }
  auto sorted_reps = reps;
  std::sort(sorted_reps.begin(), sorted_reps.end());
  if (core.labels != sorted_reps) throw DomainError("core tuple must be labelled by the minimal elements of the parts");
  for (auto [i, j] : ordered_pairs(sorted_reps)) out.nu[{i, j}] = core.pair(i, j);

  // Solves eps z + x w = z w + x z for z = nu_ik with x = nu_ij, w = nu_jk.
  auto solve = [&](int i, int j, int k) {
    const ProjPoint &x = out.pair(i, j), &w = out.pair(j, k);
    Scalar num = x.u() * w.u();
    Scalar den = x.u() * w.v() + w.u() * x.v() - e * x.v() * w.v();
    if (num.is_zero() && den.is_zero()) {
      throw InvariantViolation("extend_nu: the completion of nu" + idx({i, k}) + " through " + std::to_string(j) +
                               " is undetermined");
    }
    out.nu[{i, k}] = ProjPoint(num, den);
  };
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t l = 0; l < parts.size(); ++l) {
      if (k == l) continue;
      for (int b : parts[l]) {
        if (b != reps[l]) solve(reps[k], reps[l], b);
      }
    }
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t l = 0; l < parts.size(); ++l) {
      if (k == l) continue;
      for (int a : parts[k]) {
        if (a == reps[k]) continue;
        for (int b : parts[l]) solve(a, reps[k], b);
      }
    }
  }
  auto rep = check_membership(eps ? Variety::DeformedFlower : Variety::Flower, out);
  if (!rep.ok) throw InvariantViolation("extend_nu produced a non-member: " + rep.witness());
  return out;
}

Tuple losev_manin_iso(const Tuple& flower) {
  if (!flower.eps || flower.eps->is_zero()) throw DomainError("losev_manin_iso needs epsilon != 0");
  Scalar e = *flower.eps;
  Tuple out;
  out.labels = flower.labels;
  for (const auto& [ij, p] : flower.nu) out.nu[ij] = ProjPoint(p.u() - e * p.v(), p.u());
  return out;
}

Tuple losev_manin_inverse(const Tuple& alpha, const Scalar& eps) {
  if (eps.is_zero()) throw DomainError("losev_manin_inverse needs epsilon != 0");
  Tuple out;
  out.labels = alpha.labels;
  out.eps = eps;
  for (const auto& [ij, a] : alpha.nu) out.nu[ij] = ProjPoint(eps * a.v(), a.v() - a.u());
  return out;
}

namespace {

void require_unit(const Scalar& x, const Scalar& eps) {
  if ((Scalar(1) - eps * x).is_zero()) throw DomainError("1 - eps x vanishes at x = " + x.to_string());
}

void require_distinct(const std::vector<Scalar>& x) {
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      if (x[a] == x[b]) throw DomainError("coincident points " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
    }
  }
}

}  // namespace

Scalar g_mul(const Scalar& x1, const Scalar& x2, const Scalar& eps) {
  require_unit(x1, eps);
  require_unit(x2, eps);
  return x1 + x2 - eps * x1 * x2;
}

Scalar g_inv(const Scalar& x, const Scalar& eps) {
  require_unit(x, eps);
  return -x / (Scalar(1) - eps * x);
}

Tuple orbit_map(const std::vector<Scalar>& x, const Scalar& eps) {
  require_distinct(x);
  for (const auto& xi : x) require_unit(xi, eps);
  Tuple t;
  t.labels = iota_labels(static_cast<int>(x.size()));
  t.eps = eps;
  for (auto [i, j] : ordered_pairs(t.labels)) {
    const Scalar &xi = x[static_cast<std::size_t>(i - 1)], &xj = x[static_cast<std::size_t>(j - 1)];
    t.nu[{i, j}] = fraction(Scalar(1) - eps * xj, xi - xj);
  }
  return t;
}

Tuple mw_point(const std::vector<Scalar>& x, const Scalar& eps) {
  Tuple t = cross_ratios(x);
  t.eps = eps;
  for (auto [i, j] : ordered_pairs(t.labels)) {
    const Scalar &xi = x[static_cast<std::size_t>(i - 1)], &xj = x[static_cast<std::size_t>(j - 1)];
    t.nu[{i, j}] = fraction(eps * xi - Scalar(1), xi - xj);
  }
  return t;
}

Tuple cross_ratios(const std::vector<Scalar>& z, const std::optional<Scalar>& zl) {
  require_distinct(z);
  if (zl && std::find(z.begin(), z.end(), *zl) != z.end()) throw DomainError("the fourth point coincides with a z_i");
  Tuple t;
  t.labels = iota_labels(static_cast<int>(z.size()));
  for (const auto& [i, j, k] : ordered_triples(t.labels)) {
    const Scalar &zi = z[static_cast<std::size_t>(i - 1)], &zj = z[static_cast<std::size_t>(j - 1)],
                 &zk = z[static_cast<std::size_t>(k - 1)];
    if (zl) {
      t.mu[{i, j, k}] = fraction((zi - zk) * (*zl - zj), (zi - zj) * (*zl - zk));
    } else {
      t.mu[{i, j, k}] = fraction(zi - zk, zi - zj);
    }
  }
  return t;
}

Tuple collapse_to_LM(const Tuple& dm) {
  int top = dm.n();
  if (dm.labels != iota_labels(top)) throw DomainError("collapse_to_LM expects labels 1..n+1");
  Tuple out;
  out.labels = iota_labels(top - 1);
  for (auto [i, j] : ordered_pairs(out.labels)) out.nu[{i, j}] = dm.triple(top, i, j);
  return out;
}

Tuple eps_family_delta(const std::vector<Scalar>& u, const Scalar& y, const Scalar& eps) {
  for (const auto& ui : u) {
    if ((y + eps * ui).is_zero()) throw DomainError("y + eps u_i vanishes");
  }
  Tuple t;
  t.labels = iota_labels(static_cast<int>(u.size()));
  t.eps = eps;
  for (auto [i, j] : ordered_pairs(t.labels)) {
    const Scalar &ui = u[static_cast<std::size_t>(i - 1)], &uj = u[static_cast<std::size_t>(j - 1)];
    t.nu[{i, j}] = ProjPoint(y + eps * ui, ui - uj);
  }
  return t;
}

std::pair<Scalar, Scalar> sigma_group(const Scalar& x, const Scalar& eps) {
  Scalar d = Scalar(1) + x * eps;
  if (d.is_zero()) throw DomainError("1 + x eps vanishes");
  return {x / d, -eps};
}

namespace {

using Image = std::map<Triple, std::optional<ProjPoint>>;

// Fills undetermined images from mu_ijk mu_ikj = 1, mu_ijk + mu_jik = 1 and a
// variety-specific rule, until nothing changes.
void resolve(Image& img, const std::function<std::optional<ProjPoint>(const Triple&, const Image&)>& extra) {
  auto known = [&](const Triple& t) -> const std::optional<ProjPoint>& { return img.at(t); };
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& [t, p] : img) {
      if (p) continue;
      auto [i, j, k] = t;
      if (const auto& q = known({i, k, j})) {
        p = q->inverse();
      } else if (const auto& q2 = known({j, i, k})) {
        p = affine(*q2, Scalar(-1), Scalar(1));
      } else {
        p = extra(t, img);
      }
      if (p) progress = true;
    }
  }
  for (const auto& [t, p] : img) {
    if (!p) throw InvariantViolation("involution undetermined at mu" + idx({t[0], t[1], t[2]}));
  }
}

std::optional<ProjPoint> try_point(const std::function<ProjPoint()>& f) {
  try {
    return f();
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

Tuple involution_sigma(Variety v, const Tuple& t) {
  if (v == Variety::LosevManin) throw DomainError("no involution is defined on the Losev-Manin coordinates");
  Tuple out = t;
  if (v == Variety::DeligneMumford) {
    int top = t.n();
    if (t.labels != iota_labels(top) || top < 3) throw DomainError("the involution expects labels 1..n+1");
    Image img;
    for (const auto& tr : ordered_triples(t.labels)) {
      auto [i, j, k] = tr;
      std::optional<ProjPoint> p;
      if (k == top) {
        p = t.triple(j, i, top);
      } else if (i != top && j != top) {
        p = try_point([&] { return mul(t.triple(i, j, k), t.triple(top, k, j)); });
      }
      img[tr] = p;
    }
    resolve(img, [&](const Triple& tr, const Image& cur) -> std::optional<ProjPoint> {
      auto [i, j, k] = tr;
      if (i == top || j == top || k == top) return std::nullopt;
      const auto &a = cur.at({i, top, k}), &b = cur.at({i, top, j});
      if (!a || !b) return std::nullopt;
      return try_point([&] { return mul(*a, b->inverse()); });
    });
    for (auto& [tr, p] : out.mu) p = *img.at(tr);
    return out;
  }
  if (!t.eps || t.eps->is_zero()) return out;
  Scalar e = *t.eps;
  out.eps = -e;
  for (auto& [ij, p] : out.nu) p = affine(p, Scalar(1), -e);
  if (has_triples(v)) {
    Image img;
    for (const auto& tr : ordered_triples(t.labels)) {
      auto [i, j, k] = tr;
      img[tr] = try_point([&] {
        const ProjPoint& nkj = t.pair(k, j);
        return mul(t.triple(i, j, k), ProjPoint(nkj.u() - e * nkj.v(), nkj.u()));
      });
    }
    resolve(img, [&](const Triple& tr, const Image&) {
      auto [i, j, k] = tr;
      return try_point([&] { return mul(out.pair(i, j), out.pair(i, k).inverse()); });
    });
    for (auto& [tr, p] : out.mu) p = *img.at(tr);
  }
  return out;
}

bool is_twisted_real(Variety v, const Tuple& t) { return t.conj() == involution_sigma(v, t); }

Tuple dm_to_q(const Tuple& dm, const Scalar& eps) {
  if (eps.is_zero()) throw DomainError("dm_to_q needs epsilon != 0");
  int top = dm.n();
  if (dm.labels != iota_labels(top)) throw DomainError("dm_to_q expects labels 1..n+1");
  Tuple q;
  q.labels = iota_labels(top - 1);
  q.eps = eps;
  for (auto [i, j] : ordered_pairs(q.labels)) {
    const ProjPoint& m = dm.triple(i, j, top);
    q.nu[{i, j}] = ProjPoint(eps * m.u(), m.v());
  }
  for (const auto& [i, j, k] : ordered_triples(q.labels)) q.mu[{i, j, k}] = dm.triple(i, j, k);
  return q;
}

Tuple q_to_dm(const Tuple& q) {
  if (!q.eps || q.eps->is_zero()) throw DomainError("q_to_dm needs epsilon != 0");
  Scalar e = *q.eps;
  int top = q.n() + 1;
  if (q.labels != iota_labels(top - 1)) throw DomainError("q_to_dm expects labels 1..n");
  Tuple dm;
  dm.labels = iota_labels(top);
  dm.mu = q.mu;
  for (auto [i, j] : ordered_pairs(q.labels)) {
    const ProjPoint& v = q.pair(i, j);
    dm.mu[{i, j, top}] = ProjPoint(v.u(), e * v.v());
    dm.mu[{i, top, j}] = ProjPoint(e * v.v(), v.u());
    dm.mu[{top, i, j}] = ProjPoint(v.u() - e * v.v(), v.u());
  }
  return dm;
}

}  // namespace cactus::proj
