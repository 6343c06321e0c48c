#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "cactus/errors.hpp"
#include "cactus/rootsystems/roots.hpp"
#include "doctest.h"

using namespace cactus;
using namespace cactus::roots;
using real::ExtReal;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(x);
  return v;
}

// All t in {0, 1/den, ..., 1}^r.
std::vector<std::vector<Rational>> grid(int r, int den) {
  std::vector<std::vector<Rational>> out{{}};
  for (int k = 0; k < r; ++k) {
    std::vector<std::vector<Rational>> next;
    for (const auto& p : out) {
      for (int a = 0; a <= den; ++a) {
        auto e = p;
        e.push_back(q(a, den));
        next.push_back(e);
      }
    }
    out = next;
  }
  return out;
}

int system_with_rho(const std::vector<SimpleSystem>& sys, const Vec& rho) {
  for (std::size_t s = 0; s < sys.size(); ++s) {
    if (sys[s].rho == rho) return static_cast<int>(s);
  }
  return -1;
}

std::uint32_t mask_of(const SimpleSystem& pi, int root) {
  for (std::size_t k = 0; k < pi.roots.size(); ++k) {
    if (pi.roots[k] == root) return 1u << k;
  }
  return 0;
}

}  // namespace

TEST_CASE("root counts match the classification") {
  std::vector<std::pair<std::string, int>> expected = {{"A1", 2}, {"A2", 6},  {"A3", 12}, {"A4", 20}, {"B2", 8},
                                                       {"B3", 18}, {"C3", 18}, {"D4", 24}, {"G2", 12}, {"F4", 48}};
  for (const auto& [type, count] : expected) {
    auto rs = root_system(type);
    CHECK_MESSAGE(rs.num_roots() == count, type);
    for (int i = 0; i < rs.rank(); ++i) {
      for (int idx = 0; idx < rs.num_roots(); ++idx) {
        int image = rs.reflect_root(i, idx);
        CHECK(rs.weight(image) == rs.reflect(base_system(rs).roots[static_cast<std::size_t>(i)], rs.weight(idx)));
      }
    }
    for (int idx = 0; idx < rs.num_roots(); ++idx) CHECK(rs.negative(rs.negative(idx)) == idx);
  }
  std::vector<std::pair<std::string, std::size_t>> weyl = {{"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"G2", 12}, {"B3", 48}};
  for (const auto& [type, order] : weyl) CHECK(simple_systems(root_system(type)).size() == order);
}

TEST_CASE("invalid Cartan data") {
  CHECK_THROWS_AS(build_root_system({{2, -1}, {-1, 2, 0}}), DomainError);
  CHECK_THROWS_AS(build_root_system({{2, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(build_root_system({{2, -2}, {-2, 2}}), DomainError);
  CHECK_THROWS_AS(build_root_system({{2, -1}, {0, 2}}), DomainError);
  CHECK_THROWS_AS(build_root_system({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), DomainError);
  CHECK_THROWS_AS(build_root_system({}), DomainError);
  CHECK_THROWS_AS(root_system("E9"), DomainError);
  CHECK_THROWS_AS(root_system("Q2"), DomainError);
  CHECK_THROWS_AS(root_system("G3"), DomainError);
  CHECK(root_system_from_json(nlohmann::json::parse(R"([[2,-1],[-3,2]])")).num_roots() == 12);
  CHECK(root_system_from_json(nlohmann::json("B3")).num_roots() == 18);
}

TEST_CASE("simple systems, Weyl vectors and fundamental weights") {
  for (std::string type : {"A2", "B2", "G2", "A3", "C3"}) {
    auto rs = root_system(type);
    auto base = base_system(rs);
    Vec half(static_cast<std::size_t>(rs.rank()), 0);
    for (int idx : base.positive) {
      for (std::size_t k = 0; k < half.size(); ++k) half[k] += rs.weight(idx)[k] / 2;
    }
    for (auto& x : half) x.canonicalize();
    CHECK(base.rho == Vec(static_cast<std::size_t>(rs.rank()), 1));
    CHECK(base.rho == half);
    for (const auto& pi : simple_systems(rs)) {
      CHECK(static_cast<int>(pi.positive.size()) * 2 == rs.num_roots());
      for (std::size_t j = 0; j < pi.roots.size(); ++j) {
        for (std::size_t k = 0; k < pi.roots.size(); ++k) CHECK(rs.pairing(pi.roots[j], pi.fundamental[k]) == (j == k ? 1 : 0));
      }
      CHECK(face_center(rs, pi, 0) == Vec(static_cast<std::size_t>(rs.rank()), 0));
    }
  }
  auto rs = root_system("A2");
  CHECK_THROWS_AS(make_simple_system(rs, {0, 3}), DomainError);
  CHECK_THROWS_AS(make_simple_system(rs, {0, 2}), DomainError);
}

TEST_CASE("face centres") {
  for (std::string type : {"A1", "A2", "B2", "G2", "A3", "B3"}) {
    auto rs = root_system(type);
    std::uint32_t full = (1u << rs.rank()) - 1;
    for (const auto& pi : simple_systems(rs)) {
      for (std::uint32_t d = 0; d <= full; ++d) {
        auto rep = verify_face_center(rs, pi, d);
        CHECK_MESSAGE(rep.ok, type, " ", vec_to_string(rep.average), " vs ", vec_to_string(rep.expected));
      }
      auto vertex = verify_face_center(rs, pi, full);
      CHECK(vertex.vertices == 1);
      CHECK(vertex.expected == pi.rho);
    }
  }
  auto a2 = root_system("A2");
  auto whole = verify_face_center(a2, base_system(a2), 0);
  CHECK(whole.vertices == 6);
  CHECK(whole.expected == vec({0, 0}));
  // A3, |Delta| = 1: the face is a hexagon or a square depending on Delta.
  auto a3 = root_system("A3");
  auto b = base_system(a3);
  CHECK(verify_face_center(a3, b, 1u).vertices == 6);
  CHECK(verify_face_center(a3, b, 2u).vertices == 4);
  CHECK(face_center(a3, b, 2u) == vec({0, 2, 0}));
}

TEST_CASE("Xi on the parallelepipeds") {
  for (std::string type : {"A2", "B2", "A3"}) {
    auto rs = root_system(type);
    auto sys = simple_systems(rs);
    int r = rs.rank();
    int den = r == 2 ? 4 : 2;
    for (const auto& pi : sys) {
      std::set<Vec> images;
      auto pts = grid(r, den);
      for (const auto& t : pts) {
        Vec y = xi(rs, pi, t);
        CHECK(permutahedron_membership(rs, y));
        CHECK(in_chamber(rs, pi, y));
        images.insert(y);
      }
      CHECK(images.size() == pts.size());
      CHECK(xi(rs, pi, std::vector<Rational>(static_cast<std::size_t>(r), 0)) == Vec(static_cast<std::size_t>(r), 0));
      CHECK(xi(rs, pi, std::vector<Rational>(static_cast<std::size_t>(r), 1)) == pi.rho);
      for (std::uint32_t d = 0; d < (1u << r); ++d) {
        std::vector<Rational> ind;
        for (int k = 0; k < r; ++k) ind.push_back((d >> k) & 1u);
        CHECK(xi(rs, pi, ind) == face_center(rs, pi, d));
        CHECK(xi_face(rs, pi, d, std::vector<Rational>(static_cast<std::size_t>(r - std::popcount(d)), 0)) ==
              face_center(rs, pi, d));
      }
    }
    // Gluing: a point of two parallelepipeds has the same image.
    std::map<Vec, Vec> seen;
    for (const auto& pi : sys) {
      for (const auto& t : grid(r, den)) {
        Vec x = star_point(pi, t);
        Vec y = xi(rs, pi, t);
        auto [it, fresh] = seen.emplace(x, y);
        if (!fresh) CHECK(it->second == y);
      }
    }
  }
  auto rs = root_system("A2");
  CHECK_THROWS_AS(xi(rs, base_system(rs), {q(3, 2), 0}), DomainError);
}

TEST_CASE("related faces translate by the difference of Weyl vectors") {
  std::mt19937_64 rng(51);
  for (std::string type : {"A2", "B2", "A3"}) {
    auto rs = root_system(type);
    auto sys = simple_systems(rs);
    int r = rs.rank();
    int checked = 0;
    for (std::size_t a = 0; a < sys.size(); ++a) {
      for (std::size_t b = 0; b < sys.size(); ++b) {
        for (std::uint32_t da = 1; da < (1u << r); ++da) {
          std::set<int> rest_a;
          for (int k = 0; k < r; ++k) {
            if (!((da >> k) & 1u)) rest_a.insert(sys[a].roots[static_cast<std::size_t>(k)]);
          }
          std::uint32_t db = 0;
          std::set<int> rest_b;
          for (int k = 0; k < r; ++k) {
            int root = sys[b].roots[static_cast<std::size_t>(k)];
            if (rest_a.count(root)) {
              rest_b.insert(root);
            } else {
              db |= 1u << k;
            }
          }
          if (rest_a != rest_b) continue;
          std::map<int, Rational> share;
          for (int root : rest_a) share[root] = q(static_cast<long>(rng() % 5), 4);
          std::vector<Rational> ta, tb;
          for (int k = 0; k < r; ++k) {
            int ra = sys[a].roots[static_cast<std::size_t>(k)], rb = sys[b].roots[static_cast<std::size_t>(k)];
            ta.push_back(share.count(ra) ? share[ra] : Rational(1));
            tb.push_back(share.count(rb) ? share[rb] : Rational(1));
          }
          Vec x = star_point(sys[a], ta), xp = star_point(sys[b], tb);
          Vec y = xi(rs, sys[a], ta), yp = xi(rs, sys[b], tb);
          Vec shifted = yp;
          for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] += sys[a].rho[k] - sys[b].rho[k];
          CHECK(y == shifted);
          CHECK(star_related(rs, sys, x, xp));
          CHECK(permutahedron_related(rs, sys, y, yp));
          CHECK(parallel_face_related(rs, sys, y, {static_cast<int>(a), da}, yp, {static_cast<int>(b), db}));
          ++checked;
        }
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("Xi intertwines the relations on the A2 boundary") {
  auto rs = root_system("A2");
  auto sys = simple_systems(rs);
  std::set<Vec> boundary;
  for (const auto& pi : sys) {
    for (const auto& t : grid(2, 4)) {
      if (t[0] == 1 || t[1] == 1) boundary.insert(star_point(pi, t));
    }
  }
  std::vector<Vec> pts(boundary.begin(), boundary.end());
  std::vector<Vec> img;
  for (const auto& x : pts) {
    auto sc = star_membership(rs, sys, x);
    REQUIRE(sc.has_value());
    img.push_back(xi(rs, sys[static_cast<std::size_t>(sc->system)], sc->t));
  }
  int related = 0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      bool lhs = star_related(rs, sys, pts[a], pts[b]);
      CHECK(lhs == permutahedron_related(rs, sys, img[a], img[b]));
      related += lhs && a != b;
    }
  }
  CHECK(related > 0);
}

TEST_CASE("Theta on the parallelepipeds") {
  std::mt19937_64 rng(52);
  for (std::string type : {"A2", "B2", "G2", "A3"}) {
    auto rs = root_system(type);
    auto sys = simple_systems(rs);
    int r = rs.rank();
    for (const auto& z : theta_root(rs, sys[0], std::vector<Rational>(static_cast<std::size_t>(r), 0))) CHECK(z == ExtReal(0));
    for (int trial = 0; trial < 40; ++trial) {
      const auto& pi = sys[rng() % sys.size()];
      std::vector<Rational> t;
      std::uint32_t delta = 0;
      for (int k = 0; k < r; ++k) {
        long a = static_cast<long>(rng() % 7);
        t.push_back(q(a, 6));
        if (a == 6) delta |= 1u << k;
      }
      auto z = theta_root(rs, pi, t);
      // The finite coordinates form the parabolic subsystem spanned by Pi - Delta.
      std::vector<int> finite;
      for (int idx = 0; idx < rs.num_roots(); ++idx) {
        if (z[static_cast<std::size_t>(idx)].is_finite()) finite.push_back(idx);
      }
      CHECK(finite == span_key(rs, pi, delta));
      for (int a = 0; a < rs.num_roots(); ++a) {
        for (int b = 0; b < rs.num_roots(); ++b) {
          Vec s = rs.weight(a);
          for (std::size_t k = 0; k < s.size(); ++k) s[k] += rs.weight(b)[k];
          int c = -1;
          try {
            c = rs.index_of_weight(s);
          } catch (const DomainError&) {
            continue;
          }
          const auto &za = z[static_cast<std::size_t>(a)], &zb = z[static_cast<std::size_t>(b)], &zc = z[static_cast<std::size_t>(c)];
          if (za.is_finite() && zb.is_finite() && zc.is_finite()) CHECK(za + zb == zc);
        }
      }
      for (int idx = 0; idx < rs.num_roots(); ++idx) {
        const auto& v = z[static_cast<std::size_t>(idx)];
        if (v.is_finite()) CHECK(z[static_cast<std::size_t>(rs.negative(idx))] == -v);
      }
      auto back = theta_root_inverse(rs, sys, z);
      CHECK(theta_root(rs, sys[static_cast<std::size_t>(back.system)], back.t) == z);
    }
  }
  // One coordinate 1: infinite exactly where the coweight pairs nontrivially.
  auto rs = root_system("B2");
  auto pi = base_system(rs);
  auto z = theta_root(rs, pi, {1, q(1, 3)});
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    CHECK(z[static_cast<std::size_t>(idx)].is_finite() == (rs.root(idx)[0] == 0));
  }
}

TEST_CASE("Theta glues along shared faces of A2") {
  auto rs = root_system("A2");
  auto sys = simple_systems(rs);
  std::map<Vec, std::vector<ExtReal>> seen;
  int shared = 0;
  for (const auto& pi : sys) {
    for (const auto& t : grid(2, 6)) {
      auto [it, fresh] = seen.emplace(star_point(pi, t), theta_root(rs, pi, t));
      if (!fresh) {
        CHECK(it->second == theta_root(rs, pi, t));
        ++shared;
      }
    }
  }
  CHECK(shared > 0);
}

TEST_CASE("membership in the permutahedron and the star") {
  for (std::string type : {"A2", "B2", "G2", "A3"}) {
    auto rs = root_system(type);
    auto sys = simple_systems(rs);
    std::size_t r = static_cast<std::size_t>(rs.rank());
    Vec rho(r, 1), zero(r, 0), twice(r, 2);
    CHECK(permutahedron_membership(rs, rho));
    CHECK(permutahedron_membership(rs, zero));
    CHECK_FALSE(permutahedron_membership(rs, twice));
    auto sc = star_membership(rs, sys, rho);
    REQUIRE(sc.has_value());
    CHECK(sc->t == std::vector<Rational>(r, 1));
    CHECK(star_membership(rs, sys, zero).has_value());
    CHECK_FALSE(star_membership(rs, sys, twice).has_value());
    for (const auto& pi : sys) {
      CHECK(permutahedron_membership(rs, pi.rho));
      Vec out = pi.rho;
      for (std::size_t k = 0; k < r; ++k) out[k] += pi.rho[k] / 64;
      CHECK_FALSE(permutahedron_membership(rs, out));
    }
  }
}

TEST_CASE("parallel faces of the A2 hexagon") {
  auto rs = root_system("A2");
  auto sys = simple_systems(rs);
  // Hexagon vertices (1,1), (-1,2), (-2,1), (-1,-1), (1,-2), (2,-1) in weight coordinates.
  int top = system_with_rho(sys, vec({1, 1}));
  int bottom = system_with_rho(sys, vec({-1, -1}));
  REQUIRE(top >= 0);
  REQUIRE(bottom >= 0);
  int a1 = rs.index_of({1, 0}), a2 = rs.index_of({0, 1});
  FaceDatum e1{top, mask_of(sys[static_cast<std::size_t>(top)], a2)};
  FaceDatum e2{bottom, mask_of(sys[static_cast<std::size_t>(bottom)], rs.negative(a2))};
  REQUIRE(e1.delta != 0);
  REQUIRE(e2.delta != 0);
  CHECK(face_vertices(rs, sys[static_cast<std::size_t>(top)], e1.delta) == std::vector<Vec>{vec({-1, 2}), vec({1, 1})});
  CHECK(face_vertices(rs, sys[static_cast<std::size_t>(bottom)], e2.delta) ==
        std::vector<Vec>{vec({-1, -1}), vec({1, -2})});
  CHECK(parallel_faces(rs, sys, e1, e2));
  Vec p{q(1, 2), q(5, 4)}, p_opp{q(1, 2), q(-7, 4)}, p_bad{q(-1, 2), q(-5, 4)};
  CHECK(parallel_face_related(rs, sys, p, e1, p_opp, e2));
  CHECK(parallel_face_related(rs, sys, Vec{0, q(3, 2)}, e1, Vec{0, q(-3, 2)}, e2));
  CHECK_FALSE(parallel_face_related(rs, sys, p, e1, p_bad, e2));
  CHECK(parallel_face_related(rs, sys, p, e1, p, e1));
  // An edge in another direction is not parallel.
  FaceDatum e3{top, mask_of(sys[static_cast<std::size_t>(top)], a1)};
  CHECK_FALSE(parallel_faces(rs, sys, e1, e3));
  CHECK_FALSE(parallel_face_related(rs, sys, vec({1, 1}), e1, vec({1, 1}), e3));
  CHECK_THROWS_AS(parallel_face_related(rs, sys, vec({0, 0}), e1, p_opp, e2), DomainError);
}

TEST_CASE("CSV dump of roots") {
  auto rs = root_system("G2");
  auto csv = roots_csv(rs);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
  CHECK(csv.rfind("index,root,weight\n0,1 0,2 -1\n", 0) == 0);
}
