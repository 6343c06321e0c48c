#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "cactus/combinatorics/affine.hpp"
#include "cactus/combinatorics/partitions.hpp"
#include "cactus/combinatorics/permutation.hpp"
#include "cactus/errors.hpp"
#include "cactus/rational.hpp"
#include "doctest.h"

using namespace cactus;
using namespace cactus::comb;

namespace {

// Reference model of hat w_{ij}: evaluate the reversal directly on Z.
long long reversal_on_z(int i, int j, int n, long long x) {
  const long long hi = j > i ? j : j + n;
  for (long long shift = -4LL * n; shift <= 4LL * n; shift += n) {
    long long lo = i + shift, top = hi + shift;
    if (x >= lo && x <= top) return lo + top - x;
  }
  return x;
}

AffinePermutation random_window(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<long long> kd(-3, 3);
  std::vector<long long> k(static_cast<std::size_t>(n));
  long long s = 0;
  for (int i = 0; i + 1 < n; ++i) {
    k[static_cast<std::size_t>(i)] = kd(rng);
    s += k[static_cast<std::size_t>(i)];
  }
  k.back() = -s;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return AffinePermutation::from_permutation(Permutation(img)) * AffinePermutation::translation(k);
}

}  // namespace

TEST_CASE("rational parsing round trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
}

TEST_CASE("refines examples") {
  CHECK(refines(SetPartition::discrete(3), SetPartition({{1, 2}, {3}})));
  CHECK(refines(SetPartition::single_block(3), SetPartition::single_block(3)));
  CHECK_FALSE(refines(SetPartition({{1, 2}, {3}}), SetPartition({{1, 3}, {2}})));
  CHECK_THROWS_AS(refines(SetPartition::discrete(3), SetPartition::discrete(4)), DomainError);
}

TEST_CASE("refines is a partial order on partitions of [5]") {
  auto ps = all_set_partitions(5);
  REQUIRE(ps.size() == 52);
  for (const auto& a : ps) {
    CHECK(refines(a, a));
    for (const auto& b : ps) {
      if (refines(a, b) && refines(b, a)) CHECK(a == b);
      if (!refines(a, b)) continue;
      for (const auto& c : ps) {
        if (refines(b, c)) CHECK(refines(a, c));
      }
    }
  }
}

TEST_CASE("set partition invariants are enforced") {
  CHECK_THROWS_AS(SetPartition({{1, 2}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(SetPartition({{1}, {}}), DomainError);
  nlohmann::json j = SetPartition({{3, 1}, {2}});
  CHECK(j.dump() == "[[1,3],[2]]");
  CHECK(j.get<SetPartition>() == SetPartition({{1, 3}, {2}}));
}

TEST_CASE("ordered and cyclic set partitions") {
  CHECK(all_ordered_set_partitions(3, 3).size() == 6);
  CHECK(all_ordered_set_partitions(3, 2).size() == 6);
  CHECK(all_ordered_set_partitions(3, 1).size() == 1);
  std::set<std::vector<Block>> cyc;
  for (const auto& p : all_ordered_set_partitions(3, 3)) cyc.insert(CyclicSetPartition(p).representative().parts());
  CHECK(cyc.size() == 2);
  CyclicSetPartition c(OrderedSetPartition({{3}, {1, 2}, {4}}));
  CHECK(c.representative().parts().front() == Block{1, 2});
}

TEST_CASE("interval reversal examples") {
  CHECK(interval_reversal(4, 1, 4).cycles() == "(1 4)");
  CHECK(interval_reversal(1, 4, 4).cycles() == "(1 4)(2 3)");
  CHECK(interval_reversal(1, 2, 5).cycles() == "(1 2)");
  CHECK_THROWS_AS(interval_reversal(2, 2, 4), DomainError);
}

TEST_CASE("cyclic interval containment and disjointness") {
  CyclicInterval big(4, 2, 5);
  CHECK(big.elements() == std::vector<int>{4, 5, 1, 2});
  CHECK(big.contains_interval(CyclicInterval(5, 1, 5)));
  CHECK_FALSE(big.contains_interval(CyclicInterval(1, 5, 5)));
  CHECK(CyclicInterval(1, 2, 5).disjoint(CyclicInterval(3, 5, 5)));
  CHECK_FALSE(CyclicInterval(5, 1, 5).disjoint(CyclicInterval(1, 3, 5)));
}

TEST_CASE("interval reversals are involutions and lift to affine reversals") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto w = interval_reversal(i, j, n);
        CHECK((w * w).is_identity());
        auto hw = affine_interval_reversal(i, j, n);
        CHECK((hw * hw).is_identity());
        CHECK(hw.reduce() == w);
        for (long long x = -2LL * n; x <= 3LL * n; ++x) CHECK(hw(x) == reversal_on_z(i, j, n, x));
      }
    }
  }
}

TEST_CASE("affine interval reversal examples") {
  CHECK(affine_interval_reversal(1, 3, 3).window() == std::vector<long long>{3, 2, 1});
  CHECK(affine_interval_reversal(2, 1, 2).window() == std::vector<long long>{0, 3});
  auto w = affine_interval_reversal(3, 1, 3);
  CHECK(w.window() == std::vector<long long>{0, 2, 4});
  for (long long x = -6; x <= 9; ++x) CHECK(w(x) == reversal_on_z(3, 1, 3, x));
}

TEST_CASE("affine permutation invariants") {
  CHECK_THROWS_AS(AffinePermutation({1, 1, 4}), DomainError);
  CHECK_THROWS_AS(AffinePermutation({2, 3, 4}), DomainError);
  CHECK_NOTHROW(AffinePermutation({4, 2, 0}));
  auto s0 = AffinePermutation::simple_reflection(3, 0);
  CHECK(s0.window() == std::vector<long long>{0, 2, 4});
  CHECK((s0 * s0).is_identity());
}

TEST_CASE("affine decomposition examples") {
  auto id = affine_decompose(AffinePermutation::identity(4));
  CHECK(id.sigma.is_identity());
  CHECK(id.k == std::vector<long long>{0, 0, 0, 0});
  auto t = affine_decompose(AffinePermutation::from_permutation(Permutation::transposition(3, 1, 2)));
  CHECK(t.sigma == Permutation::transposition(3, 1, 2));
  CHECK(t.k == std::vector<long long>{0, 0, 0});
  AffinePermutation f({4, 2, 0});
  auto d = affine_decompose(f);
  auto g = affine_recompose(d);
  for (long long x = 1; x <= 9; ++x) CHECK(g(x) == f(x));
}

TEST_CASE("affine decompose and recompose on random windows") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto f = random_window(rng, n);
    auto d = affine_decompose(f);
    long long sum = 0;
    for (auto v : d.k) sum += v;
    CHECK(sum == 0);
    CHECK(affine_recompose(d) == f);
  }
}

TEST_CASE("affine composition matches pointwise evaluation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto f = random_window(rng, n), g = random_window(rng, n);
    auto fg = f * g;
    for (long long x = -2LL * n; x <= 2LL * n; ++x) CHECK(fg(x) == f(g(x)));
    CHECK((f * f.inverse()).is_identity());
  }
}

TEST_CASE("is_translation examples") {
  CHECK(is_translation(Permutation::identity(4), 1, 4));
  CHECK(is_translation(Permutation::transposition(4, 1, 2), 3, 4));
  auto r = Permutation::long_cycle(4);
  CHECK(is_translation(r, 1, 2));
  CHECK_FALSE(is_translation(r, 3, 4));
}

TEST_CASE("ext affine to semidirect examples") {
  auto e = ext_affine_to_semidirect(ExtAffinePermutation::identity(3));
  CHECK(e.sigma.is_identity());
  CHECK(e.k == std::vector<long long>{0, 0, 0});
  auto r = ext_affine_to_semidirect(ExtAffinePermutation::rotation(3, 1));
  CHECK(r.sigma == Permutation::long_cycle(3));
  // Class of the standard basis vector e_3, shifted so that the last entry is 0.
  CHECK(r.k == std::vector<long long>{-1, -1, 0});
  for (long long x = 1; x <= 6; ++x) {
    auto back = semidirect_to_ext_affine(r);
    CHECK(back(x) - x - 1 == 0);
  }
}

TEST_CASE("ext affine product agrees with composition of realisations") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    ExtAffinePermutation a(random_window(rng, n), static_cast<long long>(rng() % n));
    ExtAffinePermutation b(random_window(rng, n), static_cast<long long>(rng() % n));
    auto ab = a * b;
    for (long long x = 1; x <= 2LL * n; ++x) {
      long long lhs = ab(x), rhs = a(b(x));
      // Realisations agree modulo translation by n.
      CHECK((lhs - rhs) % n == 0);
    }
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b).reduce() == a.reduce() * b.reduce());
  }
}

TEST_CASE("ext affine to semidirect is an isomorphism on a bounded box") {
  // Exhaustive for n <= 3 over windows bounded by 3n; n = 4 uses every
  // element against a fixed sample of right factors.
  for (int n = 2; n <= 4; ++n) {
    std::vector<ExtAffinePermutation> elems;
    for (const auto& f : bounded_affine_permutations(n, 3LL * n)) {
      for (int a = 0; a < n; ++a) elems.emplace_back(f, a);
    }
    std::set<std::pair<Permutation, std::vector<long long>>> images;
    for (const auto& g : elems) {
      auto e = ext_affine_to_semidirect(g);
      CHECK(semidirect_to_ext_affine(e) == g);
      images.insert({e.sigma, e.k});
    }
    CHECK(images.size() == elems.size());
    std::vector<SemidirectElement> img;
    for (const auto& g : elems) img.push_back(ext_affine_to_semidirect(g));
    std::size_t stride = n <= 3 ? 1 : 37;
    std::size_t bad = 0;
    for (std::size_t p = 0; p < elems.size(); ++p) {
      for (std::size_t q = 0; q < elems.size(); q += stride) {
        if (!(ext_affine_to_semidirect(elems[p] * elems[q]) == img[p] * img[q])) ++bad;
      }
    }
    CHECK(bad == 0);
  }
}
