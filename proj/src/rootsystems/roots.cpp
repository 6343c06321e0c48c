#include "cactus/rootsystems/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "cactus/errors.hpp"

namespace cactus::roots {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

constexpr std::size_t kMaxRoots = 4096;

Rational canon(Rational q) {
  q.canonicalize();
  return q;
}

// Inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Matrix> invert(Matrix a) {
  std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational m = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= m * a[col][k];
        inv[r][k] -= m * inv[col][k];
      }
    }
  }
  return inv;
}

Vec apply(const Matrix& m, const Vec& v) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Vec add(Vec a, const Vec& b, const Rational& scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

Vec sub(const Vec& a, const Vec& b) { return add(a, b, -1); }

bool in_unit_interval(const Rational& t) { return t >= 0 && t <= 1; }

// Coefficients of root idx in the simple roots of pi.
std::vector<Rational> coefficients(const RootSystem& rs, const SimpleSystem& pi, int idx) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < pi.roots.size(); ++k) {
    const Vec& b = rs.weight(pi.roots[k]);
    c.push_back(canon(2 * rs.form(rs.weight(idx), pi.fundamental[k]) / rs.form(b, b)));
  }
  return c;
}

bool orthogonal_to_delta(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta, const Vec& v) {
  for (std::size_t k = 0; k < pi.roots.size(); ++k) {
    if ((delta >> k) & 1u) {
      if (rs.form(v, pi.fundamental[k]) != 0) return false;
    }
  }
  return true;
}

void check_delta(const SimpleSystem& pi, std::uint32_t delta) {
  if (pi.roots.size() < 32 && (delta >> pi.roots.size()) != 0) throw DomainError("Delta is not a subset of Pi");
}

void check_t(const SimpleSystem& pi, const std::vector<Rational>& t) {
  if (t.size() != pi.roots.size()) throw DomainError("expected one coordinate per simple root");
  for (const auto& x : t) {
    if (!in_unit_interval(x)) throw DomainError("star coordinates must lie in [0,1]");
  }
}

}  // namespace

RootSystem::RootSystem(std::vector<std::vector<int>> cartan, std::string name)
    : name_(std::move(name)), cartan_(std::move(cartan)) {
  std::size_t r = cartan_.size();
  if (r == 0 || r > 8) throw DomainError("Cartan matrix must have rank between 1 and 8");
  for (const auto& row : cartan_) {
    if (row.size() != r) throw DomainError("Cartan matrix must be square");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      int a = cartan_[i][j];
      if (i == j && a != 2) throw DomainError("Cartan matrix must have 2 on the diagonal");
      if (i != j && a > 0) throw DomainError("Cartan matrix must have nonpositive off-diagonal entries");
      if (i != j && (a == 0) != (cartan_[j][i] == 0)) throw DomainError("Cartan matrix zero pattern is not symmetric");
    }
  }

  d_.assign(r, 0);
  for (std::size_t s = 0; s < r; ++s) {
    if (d_[s] != 0) continue;
    d_[s] = 1;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j || cartan_[i][j] == 0) continue;
        Rational dj = canon(d_[i] * cartan_[i][j] / Rational(cartan_[j][i]));
        if (d_[j] == 0) {
          d_[j] = dj;
          q.push(j);
        } else if (d_[j] != dj) {
          throw DomainError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Matrix sym(r, std::vector<Rational>(r));
  Matrix a(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      sym[i][j] = d_[i] * cartan_[i][j];
      a[i][j] = cartan_[i][j];
    }
  }
  for (std::size_t k = 0; k < r; ++k) {
    if (sym[k][k] <= 0) throw DomainError("Cartan matrix is not of finite type");
    for (std::size_t i = k + 1; i < r; ++i) {
      Rational m = sym[i][k] / sym[k][k];
      for (std::size_t j = k; j < r; ++j) sym[i][j] -= m * sym[k][j];
    }
  }
  inverse_ = *invert(a);

  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> q;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    seen.insert(e);
    q.push(e);
  }
  while (!q.empty()) {
    auto b = q.front();
    q.pop();
    for (std::size_t i = 0; i < r; ++i) {
      int p = 0;
      for (std::size_t j = 0; j < r; ++j) p += cartan_[i][j] * b[j];
      auto c = b;
      c[i] -= p;
      if (seen.insert(c).second) {
        if (seen.size() > kMaxRoots) throw DomainError("Cartan matrix is not of finite type");
        q.push(c);
      }
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& b : seen) {
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) pos.push_back(b);
  }
  auto height = [](const std::vector<int>& b) { return std::accumulate(b.begin(), b.end(), 0); };
  // By height; within a height lexicographically decreasing, so alpha_1 comes first.
  std::sort(pos.begin(), pos.end(), [&](const auto& x, const auto& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return x > y;
  });
  if (pos.size() * 2 != seen.size()) throw InvariantViolation("root closure is not symmetric under negation");
  roots_ = pos;
  for (const auto& b : pos) {
    auto m = b;
    for (auto& x : m) x = -x;
    roots_.push_back(m);
  }
  std::size_t np = pos.size();
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    Vec w(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) w[i] += cartan_[i][j] * roots_[k][j];
    }
    weights_.push_back(w);
    neg_.push_back(static_cast<int>(k < np ? k + np : k - np));
  }
  reflect_.assign(r, std::vector<int>(roots_.size()));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      auto c = roots_[k];
      c[i] -= static_cast<int>(weights_[k][i].get_num().get_si());
      reflect_[i][k] = index_of(c);
    }
  }
}

int RootSystem::index_of(const std::vector<int>& coords) const {
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    if (roots_[k] == coords) return static_cast<int>(k);
  }
  throw DomainError("not a root");
}

int RootSystem::index_of_weight(const Vec& w) const {
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k] == w) return static_cast<int>(k);
  }
  throw DomainError("not a root");
}

Rational RootSystem::form(const Vec& a, const Vec& b) const {
  Vec c = to_root_coords(a);
  Rational s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * d_[j] * b[j];
  return canon(s);
}

Rational RootSystem::pairing(int idx, const Vec& lambda) const {
  const Vec& a = weight(idx);
  return canon(2 * form(a, lambda) / form(a, a));
}

Vec RootSystem::reflect(int idx, const Vec& lambda) const { return add(lambda, weight(idx), -pairing(idx, lambda)); }

Vec RootSystem::to_root_coords(const Vec& lambda) const {
  if (lambda.size() != cartan_.size()) throw DomainError("vector has the wrong dimension");
  return apply(inverse_, lambda);
}

RootSystem build_root_system(const std::vector<std::vector<int>>& cartan, const std::string& name) {
  return RootSystem(cartan, name);
}

std::vector<std::vector<int>> cartan_matrix(const std::string& type) {
  if (type.size() < 2) throw DomainError("unknown root system type '" + type + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(type.substr(1), &used);
    if (used + 1 != type.size()) n = 0;
  } catch (const std::exception&) {
    n = 0;
  }
  if (n < 1) throw DomainError("unknown root system type '" + type + "'");
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) at(i, i + 1) = at(i + 1, i) = -1;
  };
  switch (letter) {
    case 'A':
      chain(n);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw DomainError("type " + type + " needs rank at least 2");
      chain(n);
      at(n - 1, n - 2) = letter == 'B' ? -2 : -1;
      at(n - 2, n - 1) = letter == 'B' ? -1 : -2;
      break;
    case 'D':
      if (n < 4) throw DomainError("type D needs rank at least 4");
      chain(n - 1);
      at(n - 3, n - 1) = at(n - 1, n - 3) = -1;
      break;
    case 'F':
      if (n != 4) throw DomainError("type F exists only in rank 4");
      chain(4);
      at(1, 2) = -1;
      at(2, 1) = -2;
      break;
    case 'G':
      if (n != 2) throw DomainError("type G exists only in rank 2");
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
    default:
      throw DomainError("unknown root system type '" + type + "'");
  }
  return a;
}

RootSystem root_system(const std::string& type) { return RootSystem(cartan_matrix(type), type); }

RootSystem root_system_from_json(const nlohmann::json& j) {
  if (j.is_string()) return root_system(j.get<std::string>());
  if (j.is_object() && j.contains("type")) return root_system(j.at("type").get<std::string>());
  const auto& m = j.is_object() ? j.at("cartan") : j;
  if (!m.is_array()) throw DomainError("expected a Cartan matrix or a type string");
  std::vector<std::vector<int>> cartan;
  for (const auto& row : m) {
    if (!row.is_array()) throw DomainError("Cartan matrix rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw DomainError("Cartan matrix entries must be integers");
      r.push_back(x.get<int>());
    }
    cartan.push_back(r);
  }
  return RootSystem(cartan, "custom");
}

SimpleSystem make_simple_system(const RootSystem& rs, std::vector<int> roots) {
  std::size_t r = static_cast<std::size_t>(rs.rank());
  if (roots.size() != r) throw DomainError("a simple system has one root per rank");
  Matrix m(r, std::vector<Rational>(r));
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < r; ++j) {
      Vec e(r, 0);
      e[j] = 1;
      m[k][j] = rs.pairing(roots[k], e);
    }
  }
  auto inv = invert(m);
  if (!inv) throw DomainError("the roots are linearly dependent");
  SimpleSystem out;
  out.roots = std::move(roots);
  out.rho.assign(r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    Vec w(r);
    for (std::size_t j = 0; j < r; ++j) w[j] = canon((*inv)[j][k]);
    out.fundamental.push_back(w);
    out.rho = add(out.rho, w);
  }
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    auto c = coefficients(rs, out, idx);
    bool nonneg = true, nonpos = true;
    for (const auto& x : c) {
      if (x.get_den() != 1) throw DomainError("not a simple system: non-integral coefficients");
      nonneg = nonneg && x >= 0;
      nonpos = nonpos && x <= 0;
    }
    if (!nonneg && !nonpos) throw DomainError("not a simple system: mixed signs");
    if (nonneg) out.positive.push_back(idx);
  }
  return out;
}

SimpleSystem base_system(const RootSystem& rs) {
  std::vector<int> base;
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> e(static_cast<std::size_t>(rs.rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    base.push_back(rs.index_of(e));
  }
  return make_simple_system(rs, base);
}

std::vector<SimpleSystem> simple_systems(const RootSystem& rs) {
  auto base = base_system(rs).roots;
  std::set<std::vector<int>> seen{base};
  std::queue<std::vector<int>> q;
  q.push(base);
  while (!q.empty()) {
    auto cur = q.front();
    q.pop();
    for (int i = 0; i < rs.rank(); ++i) {
      auto next = cur;
      for (auto& x : next) x = rs.reflect_root(i, x);
      if (seen.insert(next).second) q.push(next);
    }
  }
  std::vector<SimpleSystem> out;
  for (const auto& s : seen) out.push_back(make_simple_system(rs, s));
  return out;
}

std::vector<int> parabolic_positive(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta) {
  check_delta(pi, delta);
  std::vector<int> out;
  for (int idx : pi.positive) {
    if (orthogonal_to_delta(rs, pi, delta, rs.weight(idx))) out.push_back(idx);
  }
  return out;
}

std::vector<int> span_key(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta) {
  check_delta(pi, delta);
  std::vector<int> out;
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    if (orthogonal_to_delta(rs, pi, delta, rs.weight(idx))) out.push_back(idx);
  }
  return out;
}

Vec rho_delta(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta) {
  Vec out(static_cast<std::size_t>(rs.rank()), 0);
  for (int idx : parabolic_positive(rs, pi, delta)) out = add(out, rs.weight(idx), Rational(1, 2));
  for (auto& x : out) x.canonicalize();
  return out;
}

Vec face_center(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta) {
  return sub(pi.rho, rho_delta(rs, pi, delta));
}

std::vector<Vec> face_vertices(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta) {
  check_delta(pi, delta);
  std::set<Vec> seen{pi.rho};
  std::queue<Vec> q;
  q.push(pi.rho);
  while (!q.empty()) {
    Vec v = q.front();
    q.pop();
    for (std::size_t k = 0; k < pi.roots.size(); ++k) {
      if ((delta >> k) & 1u) continue;
      Vec w = rs.reflect(pi.roots[k], v);
      if (seen.insert(w).second) q.push(w);
    }
  }
  return {seen.begin(), seen.end()};
}

FaceCenterReport verify_face_center(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta) {
  FaceCenterReport rep;
  auto verts = face_vertices(rs, pi, delta);
  rep.vertices = verts.size();
  rep.average.assign(static_cast<std::size_t>(rs.rank()), 0);
  for (const auto& v : verts) rep.average = add(rep.average, v);
  for (auto& x : rep.average) x = canon(x / Rational(static_cast<long>(verts.size())));
  rep.expected = face_center(rs, pi, delta);
  bool in_plane = std::all_of(verts.begin(), verts.end(),
                              [&](const Vec& v) { return orthogonal_to_delta(rs, pi, delta, sub(v, pi.rho)); });
  rep.ok = in_plane && rep.average == rep.expected;
  return rep;
}

Vec star_point(const SimpleSystem& pi, const std::vector<Rational>& t) {
  if (t.size() != pi.roots.size()) throw DomainError("expected one coordinate per simple root");
  Vec out(pi.roots.size(), 0);
  for (std::size_t k = 0; k < t.size(); ++k) out = add(out, pi.fundamental[k], t[k]);
  for (auto& x : out) x.canonicalize();
  return out;
}

std::vector<Rational> star_coordinates(const RootSystem& rs, const SimpleSystem& pi, const Vec& x) {
  std::vector<Rational> t;
  for (int idx : pi.roots) t.push_back(rs.pairing(idx, x));
  return t;
}

Vec xi(const RootSystem& rs, const SimpleSystem& pi, const std::vector<Rational>& t) {
  check_t(pi, t);
  std::size_t r = t.size();
  Vec out(r, 0);
  for (std::uint32_t d = 0; d < (1u << r); ++d) {
    Rational coef = 1;
    for (std::size_t k = 0; k < r && coef != 0; ++k) coef *= ((d >> k) & 1u) ? t[k] : Rational(1 - t[k]);
    if (coef != 0) out = add(out, face_center(rs, pi, d), coef);
  }
  for (auto& x : out) x.canonicalize();
  return out;
}

Vec xi_face(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta, const std::vector<Rational>& t_free) {
  check_delta(pi, delta);
  std::vector<Rational> t;
  std::size_t next = 0;
  for (std::size_t k = 0; k < pi.roots.size(); ++k) {
    if ((delta >> k) & 1u) {
      t.push_back(1);
    } else {
      if (next >= t_free.size()) throw DomainError("too few coordinates for the face");
      t.push_back(t_free[next++]);
    }
  }
  if (next != t_free.size()) throw DomainError("too many coordinates for the face");
  return xi(rs, pi, t);
}

std::vector<real::ExtReal> theta_root(const RootSystem& rs, const SimpleSystem& pi, const std::vector<Rational>& t,
                                      const real::RationalDiffeo& f) {
  check_t(pi, t);
  std::vector<real::ExtReal> fv;
  for (const auto& x : t) fv.push_back(f(x));
  std::vector<real::ExtReal> z;
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    auto c = coefficients(rs, pi, idx);
    real::ExtReal s(0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      if (fv[k].is_finite()) {
        s = s + real::ExtReal(Rational(c[k] * fv[k].value()));
      } else {
        s = s + (c[k] > 0 ? fv[k] : -fv[k]);
      }
    }
    z.push_back(s.is_finite() ? s : real::ExtReal::pos_inf());
  }
  return z;
}

StarCoords theta_root_inverse(const RootSystem& rs, const std::vector<SimpleSystem>& systems,
                              const std::vector<real::ExtReal>& z, const real::RationalDiffeo& f) {
  if (static_cast<int>(z.size()) != rs.num_roots()) throw DomainError("expected one coordinate per root");
  bool irrational = false;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    const auto& pi = systems[s];
    std::vector<Rational> t;
    bool admissible = true;
    for (int idx : pi.roots) {
      const auto& v = z[static_cast<std::size_t>(idx)];
      if (v.is_finite() && v.value() < 0) {
        admissible = false;
        break;
      }
      auto pre = f.inverse(v.is_finite() ? v : real::ExtReal::pos_inf());
      if (!pre) {
        irrational = true;
        admissible = false;
        break;
      }
      t.push_back(*pre);
    }
    if (admissible && theta_root(rs, pi, t, f) == z) return {static_cast<int>(s), t};
  }
  if (irrational) throw DomainError("theta_root_inverse: the preimage is not rational");
  throw DomainError("the tuple is not in the image of Theta");
}

Vec dominant(const RootSystem& rs, const Vec& x) {
  if (static_cast<int>(x.size()) != rs.rank()) throw DomainError("vector has the wrong dimension");
  Vec y = x;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (y[static_cast<std::size_t>(i)] < 0) {
        std::vector<int> e(static_cast<std::size_t>(rs.rank()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        y = rs.reflect(rs.index_of(e), y);
        moved = true;
      }
    }
  }
  return y;
}

bool permutahedron_membership(const RootSystem& rs, const Vec& x) {
  Vec rho(static_cast<std::size_t>(rs.rank()), 1);
  Vec c = rs.to_root_coords(sub(rho, dominant(rs, x)));
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q >= 0; });
}

std::optional<StarCoords> star_membership(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& x) {
  for (std::size_t s = 0; s < systems.size(); ++s) {
    auto t = star_coordinates(rs, systems[s], x);
    if (std::all_of(t.begin(), t.end(), in_unit_interval)) return StarCoords{static_cast<int>(s), t};
  }
  return std::nullopt;
}

bool in_chamber(const RootSystem& rs, const SimpleSystem& pi, const Vec& x) {
  auto t = star_coordinates(rs, pi, x);
  return std::all_of(t.begin(), t.end(), [](const Rational& q) { return q >= 0; });
}

bool on_face(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta, const Vec& y) {
  return orthogonal_to_delta(rs, pi, delta, sub(y, pi.rho)) && permutahedron_membership(rs, y);
}

bool parallel_faces(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const FaceDatum& a,
                    const FaceDatum& b) {
  const auto& pa = systems.at(static_cast<std::size_t>(a.system));
  const auto& pb = systems.at(static_cast<std::size_t>(b.system));
  return span_key(rs, pa, a.delta) == span_key(rs, pb, b.delta);
}

bool parallel_face_related(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& v1,
                           const FaceDatum& f1, const Vec& v2, const FaceDatum& f2) {
  const auto& p1 = systems.at(static_cast<std::size_t>(f1.system));
  const auto& p2 = systems.at(static_cast<std::size_t>(f2.system));
  if (!on_face(rs, p1, f1.delta, v1) || !on_face(rs, p2, f2.delta, v2)) {
    throw DomainError("parallel_face_related: a point is not on its face");
  }
  if (!parallel_faces(rs, systems, f1, f2)) return false;
  Vec shift = sub(face_center(rs, p2, f2.delta), face_center(rs, p1, f1.delta));
  return add(v1, shift) == v2;
}

std::set<FaceKey> permutahedron_face_keys(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& y) {
  std::set<FaceKey> out;
  if (!permutahedron_membership(rs, y)) return out;
  std::uint32_t full = 1u << rs.rank();
  for (const auto& pi : systems) {
    for (std::uint32_t d = 0; d < full; ++d) {
      if (orthogonal_to_delta(rs, pi, d, sub(y, pi.rho))) out.emplace(span_key(rs, pi, d), sub(y, face_center(rs, pi, d)));
    }
  }
  return out;
}

std::set<FaceKey> star_face_keys(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& x) {
  std::set<FaceKey> out;
  std::uint32_t full = 1u << rs.rank();
  for (const auto& pi : systems) {
    auto t = star_coordinates(rs, pi, x);
    if (!std::all_of(t.begin(), t.end(), in_unit_interval)) continue;
    for (std::uint32_t d = 0; d < full; ++d) {
      std::vector<std::pair<int, Rational>> rest;
      bool on = true;
      for (std::size_t k = 0; k < t.size(); ++k) {
        if ((d >> k) & 1u) {
          on = on && t[k] == 1;
        } else {
          rest.emplace_back(pi.roots[k], t[k]);
        }
      }
      if (!on) continue;
      std::sort(rest.begin(), rest.end());
      FaceKey key;
      for (const auto& [idx, v] : rest) {
        key.first.push_back(idx);
        key.second.push_back(v);
      }
      out.insert(key);
    }
  }
  return out;
}

bool keys_meet(const std::set<FaceKey>& a, const std::set<FaceKey>& b) {
  return std::any_of(a.begin(), a.end(), [&](const FaceKey& k) { return b.count(k) > 0; });
}

bool permutahedron_related(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& y1,
                           const Vec& y2) {
  return keys_meet(permutahedron_face_keys(rs, systems, y1), permutahedron_face_keys(rs, systems, y2));
}

bool star_related(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& x1, const Vec& x2) {
  return keys_meet(star_face_keys(rs, systems, x1), star_face_keys(rs, systems, x2));
}

std::string vec_to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + to_string(v[k]);
  return out + ")";
}

std::string roots_csv(const RootSystem& rs) {
  std::ostringstream os;
  os << "index,root,weight\n";
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    std::string rc;
    for (std::size_t k = 0; k < rs.root(idx).size(); ++k) rc += (k ? " " : "") + std::to_string(rs.root(idx)[k]);
    std::string wc;
    for (std::size_t k = 0; k < rs.weight(idx).size(); ++k) wc += (k ? " " : "") + to_string(rs.weight(idx)[k]);
    os << idx << "," << rc << "," << wc << "\n";
  }
  return os.str();
}

}  // namespace cactus::roots
