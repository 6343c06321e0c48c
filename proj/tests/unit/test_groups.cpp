#include <random>
#include <set>

#include "cactus/combinatorics/affine.hpp"
#include "cactus/errors.hpp"
#include "cactus/groups/homs.hpp"
#include "cactus/groups/presentation.hpp"
#include "cactus/groups/rewrite.hpp"
#include "doctest.h"

using namespace cactus;
using namespace cactus::groups;
using comb::Permutation;

TEST_CASE("word syntax round trip") {
  const std::string text = "s[1,3] w(2 3 1) r^2 s[A:1,4,2] sigma[2] sigma[1,3] e[4]^-1";
  auto w = parse_word(text);
  REQUIRE(w.size() == 7);
  CHECK(w[1].kind == LetterKind::Perm);
  CHECK(w[3] == Letter::pure_s({1, 4, 2}));
  CHECK(w[6] == Letter::edge(4, -1));
  CHECK(to_string(w) == text);
  CHECK(parse_word("r^-1")[0] == Letter::rot(-1));
  CHECK(parse_word("s[A:1,2]^-1")[0] == Letter::pure_s({2, 1}));
  CHECK_THROWS_AS(parse_word("q[1]"), DomainError);
  CHECK_THROWS_AS(parse_word("w(1 1)"), DomainError);
}

TEST_CASE("free and cyclic reduction") {
  CHECK(reduce(parse_word("s[1,2] s[1,2]"), 3).empty());
  CHECK(reduce(parse_word("r r r"), 3).empty());
  CHECK(reduce(parse_word("s[A:1,2] w(2 1 3) w(2 1 3) s[A:2,1]"), 3).empty());
  CHECK(to_string(reduce(parse_word("r^2 r^2"), 3)) == "r");
  auto a = cyclic_class(parse_word("s[1,2] s[2,3] s[1,2] s[1,3]"), 3);
  auto b = cyclic_class(parse_word("s[1,3] s[1,2] s[2,3] s[1,2]"), 3);
  CHECK(a == b);
  CHECK(cyclic_class(parse_word("w(2 1 3) s[1,2] w(2 1 3)"), 3) == cyclic_class(parse_word("s[1,2]"), 3));
}

TEST_CASE("presentation examples") {
  auto ac3 = make_presentation("affine_cactus", 3);
  CHECK(ac3.generators.size() == 6);
  auto classes = ac3.relator_classes();
  CHECK(classes.count(cyclic_class(parse_word("s[1,3] s[1,2] s[1,3] s[2,3]"), 3)) == 1);
  CHECK(classes.count(cyclic_class(parse_word("s[2,1] s[2,3] s[2,1] s[3,1]"), 3)) == 1);
  CHECK(classes.count(cyclic_class(parse_word("s[3,2] s[3,1] s[3,2] s[1,2]"), 3)) == 1);
  // s_31 and s_13 satisfy no relation.
  for (const auto& c : classes) {
    std::set<Letter> letters(c.begin(), c.end());
    CHECK_FALSE((letters.count(Letter::s(3, 1)) && letters.count(Letter::s(1, 3)) && letters.size() == 2));
  }
  auto ac2 = make_presentation("AC", 2);
  CHECK(ac2.generators.size() == 2);
  CHECK(ac2.relator_classes().empty());
  for (int n = 2; n <= 6; ++n) CHECK(make_presentation("cactus", n).generators.size() == static_cast<std::size_t>(n * (n - 1) / 2));
  CHECK_THROWS_AS(make_presentation("braid", 3), DomainError);
  CHECK_THROWS_AS(make_presentation("cactus", 1), DomainError);
}

TEST_CASE("Coxeter presentations hold in the concrete groups") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& r : make_presentation("symmetric", n).relators) CHECK(eval_symmetric(r, n).is_identity());
    for (const auto& r : make_presentation("affine_sym", n).relators) CHECK(eval_affine(r, n).is_identity());
    for (const auto& r : make_presentation("ext_affine_sym", n).relators) CHECK(eval_ext_affine(r, n).is_identity());
    for (const auto& r : make_presentation("virtual_sym", n).relators) {
      auto sh = virtual_shadow(r, n);
      CHECK(sh.first.is_identity());
      CHECK(sh.second.is_identity());
    }
  }
}

TEST_CASE("reduced words evaluate back") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Letter> w;
    for (int k = 0; k < 12; ++k) w.push_back(Letter::sigma(static_cast<int>(rng() % n)));
    auto f = eval_affine(w, n);
    auto rw = affine_word(f);
    CHECK(eval_affine(rw, n) == f);
    CHECK(rw.size() <= w.size());
    auto g = comb::ExtAffinePermutation(f, static_cast<long long>(rng() % n));
    CHECK(eval_ext_affine(ext_affine_word(g), n) == g);
    auto p = f.reduce();
    Word sw;
    for (int k : reduced_word(p)) sw.push_back(Letter::sigma(k));
    CHECK(eval_symmetric(sw, n) == p);
  }
}

TEST_CASE("AC_n to AS_n is a homomorphism by window evaluation") {
  for (int n = 2; n <= 6; ++n) {
    auto rep = verify_hom(hom("AC->AS", n), VerifyMode::SolvableTarget);
    CHECK(rep.all_proven());
  }
  auto h = hom("AC->AS", 3);
  CHECK(eval_affine(h.image(parse_word("s[1,3] s[1,2] s[1,3] s[2,3]")), 3).is_identity());
  CHECK(eval_affine(h.image(parse_word("s[3,1]")), 3) == comb::affine_interval_reversal(3, 1, 3));
}

TEST_CASE("homs into solvable targets") {
  for (int n = 2; n <= 5; ++n) {
    for (const char* a : {"C->S", "extAC->S", "extAC->extAS", "vC->S", "vS->S", "extAS->S"}) {
      auto h = hom(a, n);
      CHECK_MESSAGE(verify_hom(h, VerifyMode::SolvableTarget, 0, 1).all_proven(), a);
      for (const auto& g : h.source.generators) {
        if (!g.is_involution()) continue;
        Word sq{g, g};
        auto img = h.image(sq);
        if (h.target == Target::Symmetric) CHECK(eval_symmetric(img, n).is_identity());
        if (h.target == Target::ExtAffine) CHECK(eval_ext_affine(img, n).is_identity());
      }
    }
  }
  CHECK_THROWS_AS(hom("vS->AC", 3), DomainError);
  CHECK_THROWS_AS(verify_hom(hom("vC->vS", 3), VerifyMode::SolvableTarget), DomainError);
}

TEST_CASE("a wrong generator table is caught with a witness") {
  auto h = hom("C->S", 3);
  auto good = h.image_of;
  h.image_of = [good](const Letter& x) -> Word {
    if (x == Letter::s(1, 2)) return {Letter::perm(Permutation::long_cycle(3))};
    return good(x);
  };
  auto rep = verify_hom(h, VerifyMode::SolvableTarget);
  CHECK_FALSE(rep.all_proven());
  CHECK(rep.count(Status::Failed) > 0);
  bool witnessed = false;
  for (const auto& c : rep.checks) witnessed |= c.status == Status::Failed && !c.witness.empty();
  CHECK(witnessed);
}

TEST_CASE("psi breve on generators") {
  for (int n = 3; n <= 6; ++n) {
    auto h = hom("extAC->vC", n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) CHECK(h.image({Letter::s(i, j)}) == Word{Letter::s(i, j)});
    }
    // Conjugation form also holds for i < j after rewriting (S_n-shadow level).
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto img = h.image({Letter::s(i, j)});
        CHECK(virtual_shadow(img, n).first == comb::interval_reversal(i, j, n));
        CHECK(virtual_shadow(img, n).second.is_identity());
      }
    }
  }
  auto h4 = hom("extAC->vC", 4);
  CHECK(to_string(h4.image({Letter::s(3, 1)})) == "w(3 4 1 2) s[1,3] w(3 4 1 2)");
}

TEST_CASE("diagram of groups commutes on generators") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& d : check_diagram(n)) CHECK_MESSAGE(d.ok, d.description << " " << d.witness);
  }
}

TEST_CASE("psi breve relator images are proven trivial in vC_n") {
  for (int n = 3; n <= 4; ++n) {
    auto rep = verify_hom(hom("extAC->vC", n), VerifyMode::BoundedRewrite, 6, 4);
    CHECK(rep.count(Status::Failed) == 0);
    CHECK(rep.count(Status::Inconclusive) == 0);
    int worst = 0;
    for (const auto& c : rep.checks) worst = std::max(worst, c.depth);
    CHECK(worst <= 6);
  }
}

TEST_CASE("bounded rewriting reports failures and inconclusive searches honestly") {
  auto h = hom("extAC->vC", 3);
  h.image_of = [](const Letter& x) -> Word {
    if (x.kind == LetterKind::Rot) return {Letter::perm(Permutation::long_cycle(3).pow(x.data[0]))};
    return {Letter::s(1, 2)};
  };
  auto rep = verify_hom(h, VerifyMode::BoundedRewrite, 4);
  CHECK(rep.count(Status::Failed) > 0);
  auto vc = make_presentation("vC", 3);
  auto r = bounded_rewrite(vc, parse_word("s[1,2] s[2,3]"), {}, 3);
  CHECK_FALSE(r.proven);
}

TEST_CASE("pure generators") {
  // s_{(1,...,k)} = s_{1k} w_{1k}
  for (int k = 2; k <= 4; ++k) {
    std::vector<int> a;
    for (int t = 1; t <= k; ++t) a.push_back(t);
    auto w = pure_generator(Letter::pure_s(a), 4);
    CHECK(w == Word{Letter::s(1, k), Letter::perm(comb::interval_reversal(1, k, 4))});
  }
  CHECK(to_string(pure_generator(Letter::pure_sigma(2, 3), 4)) == "w(2 3 1 4) sigma[1] w(3 2 1 4)");
  auto id_witness = pure_generator_with(Letter::pure_sigma(2, 3), Permutation::identity(4), 2, 3);
  CHECK(id_witness == Word{Letter::sigma(2), Letter::perm(Permutation::adjacent(4, 2))});
  CHECK_THROWS_AS(pure_generator(Letter::pure_s({1, 1}), 3), DomainError);

  // Two witnesses for sigma_13 in vS_4.
  auto w1 = pure_generator(Letter::pure_sigma(1, 3), 4);
  auto w2 = pure_generator_with(Letter::pure_sigma(1, 3), Permutation({2, 4, 1, 3}), 3, 4);
  CHECK(virtual_shadow(w1, 4) == virtual_shadow(w2, 4));
  CHECK(virtual_shadow(w1, 4).first.is_identity());
  auto vs = make_presentation("vS", 4);
  CHECK(bounded_rewrite(vs, w1, w2, 4).proven);

  auto u = Permutation::long_cycle(3);
  CHECK(semidirect_action(Permutation::identity(3), Letter::pure_s({1, 2})) == Letter::pure_s({1, 2}));
  CHECK(semidirect_action(u, Letter::pure_s({1, 2})) == Letter::pure_s({2, 3}));
  CHECK(semidirect_action(u, Letter::pure_sigma(3, 1)) == Letter::pure_sigma(1, 2));
  // u s_A u^{-1} = s_{u(A)} on the S_n-shadow level and by rewriting.
  auto vc = make_presentation("vC", 3);
  Word lhs = concat(concat({Letter::perm(u)}, pure_generator(Letter::pure_s({1, 2}), 3)), {Letter::perm(u.inverse())});
  CHECK(bounded_rewrite(vc, lhs, pure_generator(Letter::pure_s({2, 3}), 3), 4).proven);
}

TEST_CASE("rotation permutes the affine cactus relators") {
  for (int n = 2; n <= 6; ++n) {
    auto p = make_presentation("AC", n);
    auto classes = p.relator_classes();
    std::set<Word> rotated;
    for (const auto& c : classes) {
      Word w;
      for (const auto& x : c) w.push_back(Letter::s(comb::mod1(x.data[0] + 1, n), comb::mod1(x.data[1] + 1, n)));
      rotated.insert(cyclic_class(w, n));
    }
    CHECK(rotated == classes);
  }
}

TEST_CASE("pure virtual presentations") {
  auto pvs = make_presentation("PvS", 3);
  CHECK(pvs.generators.size() == 6);
  // The six triangle relators for n = 3 fall into one cyclic class.
  CHECK(pvs.relator_classes().size() == 1);
  CHECK(make_presentation("PvS", 4).relator_classes().size() == 7);
  auto pvc = make_presentation("PvC", 3);
  CHECK(pvc.generators.size() == 12);
  auto h = hom("PvS->vS", 3);
  auto rep = verify_hom(h, VerifyMode::BoundedRewrite, 6);
  CHECK(rep.count(Status::Failed) == 0);
}
