#include <ostream>
#include <random>

#include "cactus/errors.hpp"
#include "cactus/projective/maps.hpp"
#include "cactus/projective/samples.hpp"
#include "doctest.h"

namespace cactus::proj {
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Tuple& t) { return os << to_json(t).dump(); }
}  // namespace cactus::proj

using namespace cactus;
using namespace cactus::proj;
using comb::SetPartition;

namespace {

ProjPoint fin(long p, long q = 1) { return ProjPoint::finite(Scalar(Rational(p, q))); }
const ProjPoint kInf = ProjPoint::infinity();

Tuple constant_delta(int n, const ProjPoint& d) {
  std::map<Pair, ProjPoint> up;
  for (auto [i, j] : ordered_pairs(iota_labels(n))) {
    if (i < j) up[{i, j}] = d;
  }
  return from_delta(iota_labels(n), up);
}

std::vector<Scalar> rational_points(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
  std::vector<Scalar> out;
  while (static_cast<int>(out.size()) < n) {
    Scalar x(Rational(num(rng), den(rng)));
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

std::vector<Scalar> unit_points(int n, const Scalar& eps, std::mt19937_64& rng) {
  while (true) {
    auto x = rational_points(n, rng);
    if (std::none_of(x.begin(), x.end(), [&](const Scalar& v) { return (Scalar(1) - eps * v).is_zero(); })) return x;
  }
}

const Scalar kEps[] = {Scalar(0), Scalar(1), Scalar::i(), Scalar(2)};

}  // namespace

TEST_CASE("Gaussian rationals") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK(Scalar::parse("1/2+3/4 i") == Scalar(Rational(1, 2), Rational(3, 4)));
  CHECK(Scalar::parse("-i") == -i);
  CHECK(Scalar::parse("2-i") == Scalar(2, -1));
  CHECK(Scalar::parse("3/2i") == Scalar(0, Rational(3, 2)));
  CHECK(Scalar::parse("-5/3") == Scalar(Rational(-5, 3)));
  for (const char* s : {"1/2+3/4 i", "-7/3 i", "4", "-1/2-1 i"}) CHECK(Scalar::parse(Scalar::parse(s).to_string()) == Scalar::parse(s));
  Scalar z(3, 4);
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(z * z.conj() == Scalar(25));
  CHECK_THROWS_AS(Scalar(0).inverse(), DomainError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), DomainError);
}

TEST_CASE("projective points are scaled canonically") {
  CHECK(ProjPoint(Scalar(2), Scalar(4)) == fin(1, 2));
  CHECK(ProjPoint(Scalar(3), Scalar(0)) == kInf);
  CHECK(kInf.inverse() == ProjPoint::zero());
  CHECK_THROWS_AS(ProjPoint(Scalar(0), Scalar(0)), DomainError);
  CHECK_THROWS_AS(add(kInf, kInf), DomainError);
  CHECK_THROWS_AS(mul(ProjPoint::zero(), kInf), DomainError);
  CHECK(add(kInf, fin(5)) == kInf);
  CHECK(mul(fin(2), fin(3)) == fin(6));
  CHECK(affine(kInf, Scalar(-1), Scalar(1)) == kInf);
  CHECK(kInf.to_string() == "inf");
}

TEST_CASE("flower space: the points 0 and infinity, and a mixed point") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(check_membership(Variety::Flower, constant_delta(n, ProjPoint::zero())).ok);
    CHECK(check_membership(Variety::Flower, constant_delta(n, kInf)).ok);
  }
  // delta_12 = 1, delta_23 = delta_13 = inf.
  auto t = from_delta(iota_labels(3), {{{1, 2}, fin(1)}, {{2, 3}, kInf}, {{1, 3}, kInf}});
  CHECK(check_membership(Variety::Flower, t).ok);
  CHECK(t.pair(2, 1) == fin(-1));

  // delta_13 must be delta_12 + delta_23 when both are finite.
  auto bad = from_delta(iota_labels(3), {{{1, 2}, fin(1)}, {{2, 3}, fin(1)}, {{1, 3}, fin(3)}});
  auto rep = check_membership(Variety::Flower, bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations.front().equation == "triangle");
  CHECK(rep.witness().find("nu[1,2]*nu[2,3]") != std::string::npos);
  auto good = from_delta(iota_labels(3), {{{1, 2}, fin(1)}, {{2, 3}, fin(1)}, {{1, 3}, fin(2)}});
  CHECK(check_membership(Variety::Flower, good).ok);
}

TEST_CASE("the Q_3 example") {
  // a = nu_23, b = nu_13, c = nu_12, mu = mu_123 with mu b = c and a (mu - 1) = c.
  Tuple t;
  t.labels = iota_labels(3);
  t.mu[{1, 2, 3}] = fin(3);
  t.nu[{1, 3}] = fin(1);
  t.nu[{1, 2}] = fin(3);
  t.nu[{2, 3}] = fin(3, 2);
  complete_triples(t);
  complete_pairs(t, Variety::MauWoodward);
  CHECK(check_membership(Variety::MauWoodward, t).ok);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto q = sample_member(Variety::MauWoodward, 3, Scalar(0), rng);
    REQUIRE(check_membership(Variety::MauWoodward, q).ok);
    const auto &a = q.pair(2, 3), &b = q.pair(1, 3), &c = q.pair(1, 2), &m = q.triple(1, 2, 3);
    // mu b = c and a (mu - 1) = c, homogenised.
    CHECK(m.u() * b.u() * c.v() == c.u() * m.v() * b.v());
    CHECK(a.u() * (m.u() - m.v()) * c.v() == c.u() * a.v() * m.v());
  }
  t.mu[{1, 2, 3}] = fin(4);
  CHECK_FALSE(check_membership(Variety::MauWoodward, t).ok);
}

TEST_CASE("membership input validation") {
  auto t = constant_delta(3, fin(1));
  t.nu.erase({2, 3});
  CHECK_THROWS_AS(check_membership(Variety::Flower, t), DomainError);
  auto u = constant_delta(3, ProjPoint::zero());
  CHECK_THROWS_AS(check_membership(Variety::DeformedFlower, u), DomainError);
  CHECK_THROWS_AS(check_membership(Variety::DeligneMumford, u), DomainError);
  CHECK_THROWS_AS(parse_variety("X"), DomainError);
  CHECK(parse_variety("CQ") == Variety::DeformedMauWoodward);
}

TEST_CASE("homogenisation agrees with the affine equations on finite points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-2, 2);
  for (const Scalar& e : kEps) {
    for (int trial = 0; trial < 200; ++trial) {
      Tuple t;
      t.labels = iota_labels(3);
      t.eps = e;
      for (auto [i, j] : ordered_pairs(t.labels)) t.nu[{i, j}] = ProjPoint::finite(Scalar(small(rng)));
      auto rep = check_membership(Variety::DeformedFlower, t);
      for (const auto& [i, j, k] : ordered_triples(t.labels)) {
        Scalar a = t.pair(i, j).value(), b = t.pair(j, k).value(), c = t.pair(i, k).value();
        bool holds = e * c + a * b == c * b + a * c;
        bool reported = std::any_of(rep.violations.begin(), rep.violations.end(), [&](const Violation& v) {
          return v.equation == "triangle" && v.indices == std::vector<int>{i, j, k};
        });
        CHECK(holds != reported);
      }
      for (auto [i, j] : ordered_pairs(t.labels)) {
        if (i > j) continue;
        bool holds = t.pair(i, j).value() + t.pair(j, i).value() == e;
        bool reported = std::any_of(rep.violations.begin(), rep.violations.end(), [&](const Violation& v) {
          return v.equation == "antisymmetry" && v.indices == std::vector<int>{i, j};
        });
        CHECK(holds != reported);
      }
    }
  }
}

TEST_CASE("strata of the points infinity and 0") {
  for (int n = 2; n <= 5; ++n) {
    auto s = classify_strata(constant_delta(n, kInf));
    CHECK(s.S == SetPartition::discrete(n));
    CHECK(s.B == SetPartition::discrete(n));
    CHECK(s.dim_S == 0);
    CHECK(s.dim_B == n - 1);
    auto z = classify_strata(constant_delta(n, ProjPoint::zero()));
    CHECK(z.S == SetPartition::single_block(n));
    CHECK(z.B == SetPartition::single_block(n));
    CHECK(z.dim_B_flower == 0);
    CHECK(z.dim_S == n - 1);
  }
  CHECK_THROWS_AS(classify_strata(from_delta(iota_labels(3), {{{1, 2}, fin(1)}, {{2, 3}, fin(1)}, {{1, 3}, fin(3)}})),
                  DomainError);
}

TEST_CASE("the nine-point example") {
  // Positions inside the parts of S; coincident positions inside the parts of B.
  SetPartition S({{1, 4, 7}, {3, 8}, {2, 5, 6, 9}});
  std::map<int, long> x = {{1, 0}, {4, 0}, {7, 0}, {3, 0}, {8, 1}, {2, 0}, {5, 0}, {6, 0}, {9, 2}};
  std::map<Pair, ProjPoint> up;
  for (int i = 1; i <= 9; ++i) {
    for (int j = i + 1; j <= 9; ++j) up[{i, j}] = S.same_block(i, j) ? fin(x[i] - x[j]) : kInf;
  }
  auto s = classify_strata(from_delta(iota_labels(9), up));
  CHECK(s.S == S);
  CHECK(s.B == SetPartition({{1, 4, 7}, {3}, {8}, {2, 5, 6}, {9}}));
  CHECK(s.S.num_blocks() == 3);
  CHECK(s.B.num_blocks() == 5);
  CHECK(s.dim_S == 6);
  CHECK(s.dim_B == 9 - 1 - 5 + 3);
}

TEST_CASE("stratum dimensions agree with tangent counts") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& P : comb::all_set_partitions(n)) {
      INFO(P.to_string());
      CHECK(tangent_dimension_S(P) == n - P.num_blocks());
      CHECK(tangent_dimension_B(P) == n - 1 - P.num_blocks() + P.num_singletons());
    }
  }
}

TEST_CASE("every sampled flower point gets one consistent stratum") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto t = sample_member(Variety::Flower, 4, Scalar(0), rng);
    auto s = classify_strata(t);
    CHECK(comb::refines(s.B, s.S));
  }
}

TEST_CASE("open cover") {
  std::mt19937_64 rng(8);
  auto generic = orbit_map(rational_points(4, rng), Scalar(0));
  CHECK(open_cover_membership(SetPartition::single_block(4), generic));
  auto inf = constant_delta(3, kInf);
  for (const auto& P : comb::all_set_partitions(3)) {
    CHECK(open_cover_membership(P, inf) == (P == SetPartition::discrete(3)));
  }
  for (const Scalar& e : kEps) {
    for (int trial = 0; trial < 100; ++trial) {
      auto t = sample_member(Variety::DeformedFlower, 4, e, rng);
      bool covered = false;
      for (const auto& P : comb::all_set_partitions(4)) covered = covered || open_cover_membership(P, t);
      CHECK(covered);
    }
  }
}

TEST_CASE("chart conditions on mu") {
  auto tau = forests::PlanarForest::parse("((1,2),3);");
  auto other = forests::PlanarForest::parse("(1,(2,3));");
  std::mt19937_64 rng(2);
  auto open = cross_ratios(rational_points(3, rng));
  CHECK(chart_membership(tau, open).ok);
  CHECK(chart_membership(other, open).ok);
  // z_1 and z_2 collide: mu_123 = inf.
  std::vector<Laurent> xs = {Laurent{0, {Scalar(0)}}, Laurent{1, {Scalar(1)}}, Laurent::constant(Scalar(1))};
  Tuple lim;
  lim.labels = iota_labels(3);
  for (const auto& [i, j, k] : ordered_triples(lim.labels)) {
    lim.mu[{i, j, k}] = limit_ratio(xs[static_cast<std::size_t>(i - 1)] - xs[static_cast<std::size_t>(k - 1)],
                                    xs[static_cast<std::size_t>(i - 1)] - xs[static_cast<std::size_t>(j - 1)]);
  }
  CHECK(check_membership(Variety::DeligneMumford, lim).ok);
  CHECK(lim.triple(1, 2, 3) == kInf);
  CHECK(chart_membership(tau, lim).ok);
  auto rep = chart_membership(other, lim);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations.front().find("must avoid") != std::string::npos);
}

TEST_CASE("extend_nu") {
  std::mt19937_64 rng(21);
  // One part: nothing to complete.
  auto whole = orbit_map(unit_points(3, Scalar(1), rng), Scalar(1));
  auto same = extend_nu(SetPartition::single_block(3), {whole}, [&] {
    Tuple c;
    c.labels = {1};
    c.eps = Scalar(1);
    return c;
  }(), Scalar(1));
  CHECK(same == whole);

  // S = {{1,2},{3}} at eps = 0: delta_23 = delta_13 - delta_12.
  for (int trial = 0; trial < 20; ++trial) {
    auto x = rational_points(3, rng);
    Tuple b12;
    b12.labels = {1, 2};
    b12.nu[{1, 2}] = fraction(Scalar(1), x[0] - x[1]);
    b12.nu[{2, 1}] = fraction(Scalar(1), x[1] - x[0]);
    Tuple b3;
    b3.labels = {3};
    Tuple core;
    core.labels = {1, 3};
    core.nu[{1, 3}] = fraction(Scalar(1), x[0] - x[2]);
    core.nu[{3, 1}] = fraction(Scalar(1), x[2] - x[0]);
    auto t = extend_nu(SetPartition({{1, 2}, {3}}), {b12, b3}, core, std::nullopt);
    CHECK(t.delta(2, 3).value() == core.delta(1, 3).value() - b12.delta(1, 2).value());
  }

  // Random instances at n = 4, eps = 1.
  int done = 0;
  for (int trial = 0; trial < 40; ++trial) {
    SetPartition S({{1, 3}, {2, 4}});
    auto b1 = orbit_map(unit_points(2, Scalar(1), rng), Scalar(1));
    auto b2 = orbit_map(unit_points(2, Scalar(1), rng), Scalar(1));
    Tuple t1, t2;
    t1.labels = {1, 3};
    t2.labels = {2, 4};
    t1.nu = {{{1, 3}, b1.pair(1, 2)}, {{3, 1}, b1.pair(2, 1)}};
    t2.nu = {{{2, 4}, b2.pair(1, 2)}, {{4, 2}, b2.pair(2, 1)}};
    auto c = orbit_map(unit_points(2, Scalar(1), rng), Scalar(1));
    Tuple core;
    core.labels = {1, 2};
    core.nu = c.nu;
    try {
      auto full = extend_nu(S, {t1, t2}, core, Scalar(1));
      CHECK(check_membership(Variety::DeformedFlower, full).ok);
      CHECK(open_cover_membership(S, full));
      ++done;
    } catch (const InvariantViolation&) {
    }
  }
  CHECK(done > 0);
  MESSAGE("extend_nu completed " << done << " of 40 random chart inputs");
}

TEST_CASE("Losev-Manin identification") {
  auto zero = constant_delta(3, ProjPoint::zero());
  zero.eps = Scalar(2);
  auto a = losev_manin_iso(zero);
  for (const auto& [ij, p] : a.nu) CHECK(p == ProjPoint::one());
  auto inf = constant_delta(3, kInf);
  inf.eps = Scalar(2);
  for (const auto& [ij, p] : losev_manin_iso(inf).nu) CHECK(p == kInf);

  std::mt19937_64 rng(4);
  for (const Scalar& e : {Scalar(1), Scalar::i(), Scalar(Rational(-3, 2))}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto t = sample_member(Variety::DeformedFlower, 4, e, rng);
      auto alpha = losev_manin_iso(t);
      REQUIRE(check_membership(Variety::LosevManin, alpha).ok);
      CHECK(losev_manin_inverse(alpha, e) == t);
    }
  }
  zero.eps = Scalar(0);
  CHECK_THROWS_AS(losev_manin_iso(zero), DomainError);
}

TEST_CASE("group scheme") {
  std::mt19937_64 rng(9);
  auto xs = rational_points(6, rng);
  CHECK(g_mul(xs[0], xs[1], Scalar(0)) == xs[0] + xs[1]);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    Scalar a = xs[k], b = xs[k + 1];
    if ((Scalar(1) - a).is_zero() || (Scalar(1) - b).is_zero()) continue;
    CHECK((Scalar(1) - a) * (Scalar(1) - b) == Scalar(1) - g_mul(a, b, Scalar(1)));
    CHECK(g_mul(a, g_inv(a, Scalar(1)), Scalar(1)) == Scalar(0));
  }
  CHECK_THROWS_AS(g_inv(Scalar(1), Scalar(1)), DomainError);
  CHECK_THROWS_AS(orbit_map({Scalar(1), Scalar(1)}, Scalar(0)), DomainError);

  for (const Scalar& e : {Scalar(0), Scalar(1), Scalar(2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto x = unit_points(4, e, rng);
      auto base = orbit_map(x, e);
      CHECK(check_membership(Variety::DeformedFlower, base).ok);
      Scalar g = rational_points(1, rng)[0];
      if ((Scalar(1) - e * g).is_zero()) continue;
      std::vector<Scalar> moved;
      for (const auto& v : x) moved.push_back(g_mul(g, v, e));
      CHECK(orbit_map(moved, e) == base);
    }
  }
}

TEST_CASE("cross ratios and the maps built on them") {
  auto m = cross_ratios({Scalar(0), Scalar(1), Scalar(2)});
  CHECK(m.triple(1, 2, 3) == fin(2));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto z = rational_points(5, rng);
    auto dm = cross_ratios(z);
    CHECK(check_membership(Variety::DeligneMumford, dm).ok);
    for (const auto& [i, j, k] : ordered_triples(dm.labels)) {
      CHECK(add(dm.triple(i, j, k), dm.triple(j, i, k)) == ProjPoint::one());
    }
    auto zl = rational_points(6, rng);
    if (std::find(z.begin(), z.end(), zl[5]) == z.end()) {
      CHECK(check_membership(Variety::DeligneMumford, cross_ratios(z, zl[5])).ok);
    }
    // alpha_ij = mu_{5,i,j} = (z_5 - z_j)/(z_5 - z_i).
    auto alpha = collapse_to_LM(dm);
    CHECK(check_membership(Variety::LosevManin, alpha).ok);
    for (auto [i, j] : ordered_pairs(alpha.labels)) {
      CHECK(alpha.pair(i, j) == fraction(z[4] - z[static_cast<std::size_t>(j - 1)], z[4] - z[static_cast<std::size_t>(i - 1)]));
    }
  }
  auto d = eps_family_delta({Scalar(1), Scalar(0), Scalar(3)}, Scalar(1), Scalar(0));
  CHECK(d.delta(1, 2) == fin(1));
  CHECK(d.delta(3, 2) == fin(3));
  CHECK(d.delta(1, 3) == fin(-2));
  for (const Scalar& e : kEps) {
    auto u = rational_points(4, rng);
    Scalar y(7);
    if (std::any_of(u.begin(), u.end(), [&](const Scalar& v) { return (y + e * v).is_zero(); })) continue;
    CHECK(check_membership(Variety::DeformedFlower, eps_family_delta(u, y, e)).ok);
  }
  CHECK_THROWS_AS(eps_family_delta({Scalar(1), Scalar(0)}, Scalar(-1), Scalar(1)), DomainError);
}

TEST_CASE("Mau-Woodward points over the open locus") {
  std::mt19937_64 rng(14);
  for (const Scalar& e : kEps) {
    auto q = mw_point(rational_points(4, rng), e);
    CHECK(check_membership(Variety::DeformedMauWoodward, q).ok);
    // With the orbit formula for nu the ratio relation fails once eps != 0.
    auto x = unit_points(4, e, rng);
    auto o = orbit_map(x, e);
    o.mu = cross_ratios(x).mu;
    CHECK(check_membership(Variety::DeformedMauWoodward, o).ok == e.is_zero());
  }
}

TEST_CASE("involutions") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = sample_member(Variety::Flower, 4, Scalar(0), rng);
    CHECK(involution_sigma(Variety::Flower, f) == f);
  }
  for (const Scalar& e : {Scalar(0), Scalar::i(), Scalar(2)}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto q = sample_member(Variety::DeformedMauWoodward, 4, e, rng);
      auto s = involution_sigma(Variety::DeformedMauWoodward, q);
      CHECK(*s.eps == -e);
      CHECK(check_membership(Variety::DeformedMauWoodward, s).ok);
      CHECK(involution_sigma(Variety::DeformedMauWoodward, s) == q);
      auto c = sample_member(Variety::DeformedFlower, 4, e, rng);
      auto sc = involution_sigma(Variety::DeformedFlower, c);
      CHECK(check_membership(Variety::DeformedFlower, sc).ok);
      CHECK(involution_sigma(Variety::DeformedFlower, sc) == c);
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    auto dm = sample_member(Variety::DeligneMumford, 4, Scalar(0), rng);
    auto s = involution_sigma(Variety::DeligneMumford, dm);
    CHECK(check_membership(Variety::DeligneMumford, s).ok);
    CHECK(involution_sigma(Variety::DeligneMumford, s) == dm);
  }
  CHECK_THROWS_AS(involution_sigma(Variety::LosevManin, constant_delta(3, fin(1))), DomainError);
}

TEST_CASE("the involution on the Deligne-Mumford side matches the deformed one") {
  std::mt19937_64 rng(16);
  for (const Scalar& e : {Scalar(1), Scalar::i(), Scalar(-3)}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto dm = cross_ratios(rational_points(4, rng));
      auto lhs = dm_to_q(involution_sigma(Variety::DeligneMumford, dm), -e);
      auto rhs = involution_sigma(Variety::DeformedMauWoodward, dm_to_q(dm, e));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("twisted real points of the group scheme and the flower family") {
  // eps = 0: x equals its conjugate.
  Scalar x(Rational(2, 3), Rational(1, 5));
  auto [sx, se] = sigma_group(x, Scalar(0));
  CHECK(sx == x);
  CHECK(se == Scalar(0));
  CHECK_FALSE(x.conj() == sx);
  // eps = i/r: conj(x) = x/(1 + eps x) on the circle |x - i r| = r.
  for (int r = 1; r <= 3; ++r) {
    Scalar eps(0, Rational(1, r));
    for (int s = -4; s <= 4; ++s) {
      Rational c(1 - s * s, 1 + s * s), sn(2 * s, 1 + s * s);
      Scalar pt(r * c, r + r * sn);
      if ((Scalar(1) + pt * eps).is_zero()) continue;
      CHECK(sigma_group(pt, eps).first == pt.conj());
    }
  }
  // nu_ij on the real line shifted by eps/2 is fixed by conj composed with sigma.
  Scalar eps = Scalar::i();
  Tuple t;
  t.labels = iota_labels(3);
  t.eps = eps;
  std::mt19937_64 rng(17);
  auto xs = rational_points(3, rng);
  for (auto [i, j] : ordered_pairs(t.labels)) {
    if (i > j) continue;
    t.nu[{i, j}] = ProjPoint::finite(xs[static_cast<std::size_t>(i + j) % 3] + Scalar(0, Rational(1, 2)));
  }
  complete_pairs(t, Variety::DeformedFlower);
  CHECK(is_twisted_real(Variety::DeformedFlower, t));
}

TEST_CASE("Deligne-Mumford to deformed Mau-Woodward") {
  std::mt19937_64 rng(18);
  for (const Scalar& e : {Scalar(1), Scalar::i(), Scalar(Rational(2, 3))}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto dm = sample_member(Variety::DeligneMumford, 4, Scalar(0), rng);
      auto q = dm_to_q(dm, e);
      REQUIRE(check_membership(Variety::DeformedMauWoodward, q).ok);
      CHECK(q_to_dm(q) == dm);
    }
    for (int trial = 0; trial < 20; ++trial) {
      auto z = rational_points(4, rng);
      auto dm = cross_ratios(z);
      // (1 - mu_{j,k,4}^-1)(1 - mu_{k,l,4}^-1) = 1 - mu_{j,l,4}^-1 on the open locus.
      for (const auto& [j, k, l] : ordered_triples(iota_labels(3))) {
        Scalar a = Scalar(1) - dm.triple(j, k, 4).value().inverse();
        Scalar b = Scalar(1) - dm.triple(k, l, 4).value().inverse();
        CHECK(a * b == Scalar(1) - dm.triple(j, l, 4).value().inverse());
      }
      auto q = dm_to_q(dm, Scalar(1));
      for (auto [i, j] : ordered_pairs(q.labels)) CHECK(q.pair(i, j) == dm.triple(i, j, 4));
    }
  }
  CHECK_THROWS_AS(dm_to_q(cross_ratios({Scalar(0), Scalar(1), Scalar(2), Scalar(5)}), Scalar(0)), DomainError);
}

TEST_CASE("sampled members pass and perturbed ones fail with a witness") {
  std::mt19937_64 rng(19);
  const Variety all[] = {Variety::LosevManin,     Variety::Flower,      Variety::DeformedFlower,
                         Variety::DeligneMumford, Variety::MauWoodward, Variety::DeformedMauWoodward};
  for (Variety v : all) {
    for (int n = 3; n <= 4; ++n) {
      for (const Scalar& e : {Scalar(0), Scalar(1), Scalar::i()}) {
        for (int trial = 0; trial < 20; ++trial) {
          auto t = sample_member(v, n, e, rng);
          auto rep = check_membership(v, t);
          INFO(variety_name(v), " ", rep.witness());
          REQUIRE(rep.ok);
          auto bad = perturb(v, t, rng);
          auto r2 = check_membership(v, bad.point);
          CHECK_FALSE(r2.ok);
          CHECK(r2.witness().find(bad.coordinate) != std::string::npos);
        }
      }
    }
  }
}

TEST_CASE("points round-trip through JSON") {
  auto j = nlohmann::json::parse(R"({"n": 3, "epsilon": "1/2+1/3 i",
      "nu": {"1,2": ["1", "2"], "2,1": "inf", "1,3": "0", "3,1": ["3", "1"], "2,3": ["1", "0"], "3,2": "5/7"}})");
  auto t = tuple_from_json(j);
  CHECK(*t.eps == Scalar(Rational(1, 2), Rational(1, 3)));
  CHECK(t.pair(1, 2) == fin(1, 2));
  CHECK(t.pair(2, 1) == kInf);
  CHECK(t.pair(2, 3) == kInf);
  CHECK(tuple_from_json(to_json(t)) == t);
  std::mt19937_64 rng(20);
  auto q = sample_member(Variety::DeformedMauWoodward, 4, Scalar::i(), rng);
  CHECK(tuple_from_json(to_json(q)) == q);
  CHECK_THROWS_AS(tuple_from_json(nlohmann::json::parse(R"({"n":2,"nu":{"1":"0"}})")), DomainError);
}
