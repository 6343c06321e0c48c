#include "cactus/groups/homs.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "cactus/errors.hpp"
#include "cactus/groups/rewrite.hpp"

namespace cactus::groups {

using comb::AffinePermutation;
using comb::ExtAffinePermutation;
using comb::Permutation;

Word GroupHom::image(const Word& w) const {
  Word out;
  for (const auto& x : w) {
    auto img = image_of(x);
    out.insert(out.end(), img.begin(), img.end());
  }
  return reduce(out, n);
}

namespace {

Word sigma_word(const Permutation& w) {
  Word out;
  for (int k : reduced_word(w)) out.push_back(Letter::sigma(k));
  return out;
}

Letter rpow(int n, int p) { return Letter::perm(Permutation::long_cycle(n).pow(p)); }

Permutation transposition_k(int n, int k) {
  return k == 0 ? Permutation::transposition(n, n, 1) : Permutation::adjacent(n, k);
}

[[noreturn]] void no_image(const std::string& arrow, const Letter& x) {
  throw DomainError("letter " + x.to_string() + " is not in the source of " + arrow);
}

// psi-breve on the cactus generators.
Word breve_psi(int n, const Letter& x) {
  int i = x.data[0], j = x.data[1];
  if (i < j) return {x};
  return {rpow(n, i - 1), Letter::s(1, comb::mod1(j - (i - 1), n)), rpow(n, 1 - i)};
}

}  // namespace

std::vector<std::string> diagram_arrows() {
  return {"C->S",    "C->extAC",    "AC->AS",  "AC->extAC", "AC->vC",  "extAC->vC",
          "extAC->extAS", "extAC->S", "S->extAS", "AS->vS",   "extAS->vS", "extAS->S",
          "vC->vS",  "vC->S",       "vS->S",   "PvC->vC",   "PvS->vS"};
}

GroupHom hom(const std::string& arrow, int n) {
  auto pos = arrow.find("->");
  if (pos == std::string::npos) throw DomainError("arrow must look like 'AC->AS'");
  auto arrows = diagram_arrows();
  if (std::find(arrows.begin(), arrows.end(), arrow) == arrows.end()) {
    throw DomainError("arrow '" + arrow + "' is not in the diagram of groups");
  }
  const std::string src = arrow.substr(0, pos), dst = arrow.substr(pos + 2);
  GroupHom h;
  h.name = arrow;
  h.n = n;
  h.source = make_presentation(src, n);
  h.target_presentation = make_presentation(dst, n);
  h.target = dst == "S" ? Target::Symmetric : dst == "AS" ? Target::Affine : dst == "extAS" ? Target::ExtAffine
                                                                                       : Target::Presentation;
  auto need = [arrow](bool ok, const Letter& x) {
    if (!ok) no_image(arrow, x);
  };
  using K = LetterKind;
  if (arrow == "C->S" || arrow == "vC->S" || arrow == "extAC->S") {
    h.image_of = [n, need](const Letter& x) -> Word {
      if (x.kind == K::S) return {Letter::perm(comb::interval_reversal(x.data[0], x.data[1], n))};
      if (x.kind == K::Rot) return {rpow(n, x.data[0])};
      need(x.kind == K::Perm, x);
      return {x};
    };
  } else if (arrow == "C->extAC" || arrow == "AC->extAC") {
    h.image_of = [need](const Letter& x) -> Word {
      need(x.kind == K::S, x);
      return {x};
    };
  } else if (arrow == "AC->AS" || arrow == "extAC->extAS") {
    h.image_of = [n, need](const Letter& x) -> Word {
      if (x.kind == K::Rot) return {x};
      need(x.kind == K::S, x);
      return affine_word(comb::affine_interval_reversal(x.data[0], x.data[1], n));
    };
  } else if (arrow == "AC->vC" || arrow == "extAC->vC") {
    h.image_of = [n, need](const Letter& x) -> Word {
      if (x.kind == K::Rot) return {rpow(n, x.data[0])};
      need(x.kind == K::S, x);
      return breve_psi(n, x);
    };
  } else if (arrow == "S->extAS") {
    h.image_of = [need](const Letter& x) -> Word {
      need(x.kind == K::Sigma, x);
      return {x};
    };
  } else if (arrow == "AS->vS" || arrow == "extAS->vS") {
    h.image_of = [n, need](const Letter& x) -> Word {
      if (x.kind == K::Rot) return {rpow(n, x.data[0])};
      need(x.kind == K::Sigma, x);
      if (x.data[0] == 0) return {rpow(n, -1), Letter::sigma(1), rpow(n, 1)};
      return {x};
    };
  } else if (arrow == "extAS->S" || arrow == "vS->S") {
    h.image_of = [n, need](const Letter& x) -> Word {
      if (x.kind == K::Rot) return {rpow(n, x.data[0])};
      if (x.kind == K::Perm) return {x};
      need(x.kind == K::Sigma, x);
      return {Letter::perm(transposition_k(n, x.data[0]))};
    };
  } else if (arrow == "vC->vS") {
    h.image_of = [n, need](const Letter& x) -> Word {
      if (x.kind == K::Perm) return {x};
      need(x.kind == K::S, x);
      return sigma_word(comb::interval_reversal(x.data[0], x.data[1], n));
    };
  } else if (arrow == "PvC->vC" || arrow == "PvS->vS") {
    h.image_of = [n](const Letter& x) -> Word { return pure_generator(x, n); };
  }
  return h;
}

Permutation eval_symmetric(const Word& w, int n) {
  Permutation acc = Permutation::identity(n);
  for (const auto& x : w) {
    switch (x.kind) {
      case LetterKind::Perm:
        acc = acc * x.permutation();
        break;
      case LetterKind::Rot:
        acc = acc * Permutation::long_cycle(n).pow(x.data[0]);
        break;
      case LetterKind::Sigma:
        acc = acc * transposition_k(n, x.data[0]);
        break;
      default:
        throw DomainError("cannot evaluate " + x.to_string() + " in S_n");
    }
  }
  return acc;
}

AffinePermutation eval_affine(const Word& w, int n) {
  AffinePermutation acc = AffinePermutation::identity(n);
  for (const auto& x : w) {
    if (x.kind == LetterKind::Sigma) {
      acc = acc * AffinePermutation::simple_reflection(n, x.data[0]);
    } else if (x.kind == LetterKind::Perm) {
      acc = acc * AffinePermutation::from_permutation(x.permutation());
    } else {
      throw DomainError("cannot evaluate " + x.to_string() + " in AS_n");
    }
  }
  return acc;
}

ExtAffinePermutation eval_ext_affine(const Word& w, int n) {
  ExtAffinePermutation acc = ExtAffinePermutation::identity(n);
  for (const auto& x : w) {
    if (x.kind == LetterKind::Sigma) {
      acc = acc * ExtAffinePermutation(AffinePermutation::simple_reflection(n, x.data[0]), 0);
    } else if (x.kind == LetterKind::Rot) {
      acc = acc * ExtAffinePermutation::rotation(n, x.data[0]);
    } else if (x.kind == LetterKind::Perm) {
      acc = acc * ExtAffinePermutation(AffinePermutation::from_permutation(x.permutation()), 0);
    } else {
      throw DomainError("cannot evaluate " + x.to_string() + " in the extended affine symmetric group");
    }
  }
  return acc;
}

std::pair<Permutation, Permutation> virtual_shadow(const Word& w, int n) {
  Permutation tot = Permutation::identity(n), virt = Permutation::identity(n);
  for (const auto& x : w) {
    switch (x.kind) {
      case LetterKind::Perm:
        tot = tot * x.permutation();
        virt = virt * x.permutation();
        break;
      case LetterKind::Rot: {
        auto r = Permutation::long_cycle(n).pow(x.data[0]);
        tot = tot * r;
        virt = virt * r;
        break;
      }
      case LetterKind::Sigma:
        tot = tot * transposition_k(n, x.data[0]);
        break;
      case LetterKind::S:
        tot = tot * comb::interval_reversal(x.data[0], x.data[1], n);
        break;
      case LetterKind::PureS:
      case LetterKind::PureSigma: {
        auto sh = virtual_shadow(pure_generator(x, n), n);
        tot = tot * sh.first;
        virt = virt * sh.second;
        break;
      }
      case LetterKind::Edge:
        throw DomainError("edge letters have no shadow");
    }
  }
  return {tot, virt};
}

Word affine_word(const AffinePermutation& f0) {
  AffinePermutation f = f0;
  const int n = f.n();
  std::vector<int> rec;
  while (!f.is_identity()) {
    int k = 0;
    for (; k < n; ++k) {
      if (f(k) > f(k + 1)) break;
    }
    if (k == n) throw InvariantViolation("non-identity affine permutation without descent");
    f = f * AffinePermutation::simple_reflection(n, k);
    rec.push_back(k);
  }
  Word out;
  for (auto it = rec.rbegin(); it != rec.rend(); ++it) out.push_back(Letter::sigma(*it));
  return out;
}

Word ext_affine_word(const ExtAffinePermutation& g) {
  Word out = affine_word(g.base());
  if (g.shift() % g.n() != 0) out.push_back(Letter::rot(g.shift()));
  return out;
}

namespace {

// w with w(start + t) = seq[t] and increasing on the other positions.
Permutation placing(const std::vector<int>& seq, int start, int n) {
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t t = 0; t < seq.size(); ++t) {
    img[static_cast<std::size_t>(start - 1) + t] = seq[t];
    used[static_cast<std::size_t>(seq[t])] = 1;
  }
  int next = 1;
  for (auto& v : img) {
    if (v) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    v = next++;
  }
  return Permutation(img);
}

void check_subset(const std::vector<int>& a, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : a) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("ordered subset must have distinct entries in [n]");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

}  // namespace

Word pure_generator(const Letter& g, int n) {
  if (g.kind == LetterKind::PureSigma) {
    check_subset(g.data, n);
    if (g.data.size() != 2) throw DomainError("sigma_{ij} needs two indices");
    return pure_generator_with(g, placing(g.data, 1, n), 1, 2);
  }
  if (g.kind == LetterKind::PureS) {
    check_subset(g.data, n);
    if (g.data.size() < 2) throw DomainError("s_A needs |A| >= 2");
    return pure_generator_with(g, placing(g.data, 1, n), 1, static_cast<int>(g.data.size()));
  }
  throw DomainError(g.to_string() + " is not a pure generator");
}

Word pure_generator_with(const Letter& g, const Permutation& w, int i, int j) {
  const int n = w.size();
  const auto& a = g.data;
  check_subset(a, n);
  if (i < 1 || j > n || j - i + 1 != static_cast<int>(a.size())) throw DomainError("witness interval has wrong size");
  for (int t = 0; t <= j - i; ++t) {
    if (w(i + t) != a[static_cast<std::size_t>(t)]) throw DomainError("witness does not place the ordered subset");
  }
  Letter mid = g.kind == LetterKind::PureSigma ? Letter::sigma(i) : Letter::s(i, j);
  if (g.kind != LetterKind::PureSigma && g.kind != LetterKind::PureS) throw DomainError("not a pure generator");
  return reduce({Letter::perm(w), mid, Letter::perm(comb::interval_reversal(i, j, n)), Letter::perm(w.inverse())}, n);
}

Letter semidirect_action(const Permutation& u, const Letter& g) {
  if (g.kind != LetterKind::PureS && g.kind != LetterKind::PureSigma) {
    throw DomainError(g.to_string() + " is not a pure generator");
  }
  Letter out = g;
  for (auto& v : out.data) v = u(v);
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Proven:
      return "proven";
    case Status::Failed:
      return "failed";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool HomReport::all_proven() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelatorCheck& c) { return c.status == Status::Proven; });
}

int HomReport::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const RelatorCheck& c) { return c.status == s; }));
}

namespace {

Permutation projection_to_s(const Word& w, int n) {
  Permutation acc = Permutation::identity(n);
  for (const auto& x : w) {
    if (x.kind == LetterKind::PureS || x.kind == LetterKind::PureSigma) continue;
    if (x.kind == LetterKind::S) {
      acc = acc * comb::interval_reversal(x.data[0], x.data[1], n);
    } else {
      acc = acc * eval_symmetric({x}, n);
    }
  }
  return acc;
}

RelatorCheck check_one(const GroupHom& h, const Word& rel, VerifyMode mode, int depth) {
  RelatorCheck c;
  c.relator = rel;
  c.image = h.image(rel);
  const int n = h.n;
  if (mode == VerifyMode::SolvableTarget) {
    bool id = false;
    std::string elem;
    switch (h.target) {
      case Target::Symmetric: {
        auto e = eval_symmetric(c.image, n);
        id = e.is_identity();
        elem = e.cycles();
        break;
      }
      case Target::Affine: {
        auto e = eval_affine(c.image, n);
        id = e.is_identity();
        elem = e.to_string();
        break;
      }
      case Target::ExtAffine: {
        auto e = eval_ext_affine(c.image, n);
        id = e.is_identity();
        elem = e.to_string();
        break;
      }
      case Target::Presentation:
        throw DomainError("solvable_target mode needs S_n, AS_n or the extended affine target");
    }
    c.status = id ? Status::Proven : Status::Failed;
    c.depth = 0;
    if (!id) c.witness = "image evaluates to " + elem;
    return c;
  }
  if (h.target != Target::Presentation) throw DomainError("bounded_rewrite needs a presented target");
  auto shadow = projection_to_s(c.image, n);
  if (!shadow.is_identity()) {
    c.status = Status::Failed;
    c.witness = "S_n shadow " + shadow.cycles();
    return c;
  }
  auto r = bounded_rewrite(h.target_presentation, c.image, {}, depth);
  c.status = r.proven ? Status::Proven : Status::Inconclusive;
  c.depth = r.depth;
  if (!r.proven) c.witness = r.truncated ? "state cap reached" : "no chain within depth bound";
  return c;
}

}  // namespace

HomReport verify_hom(const GroupHom& h, VerifyMode mode, int depth, int jobs) {
  HomReport rep;
  rep.arrow = h.name;
  if (mode == VerifyMode::SolvableTarget && h.target == Target::Presentation) {
    throw DomainError("solvable_target mode needs S_n, AS_n or the extended affine target");
  }
  if (mode == VerifyMode::BoundedRewrite && h.target != Target::Presentation) {
    throw DomainError("bounded_rewrite needs a presented target");
  }
  const auto& rels = h.source.relators;
  rep.checks.resize(rels.size());
  const std::size_t nj = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::exception_ptr> errors(nj);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nj; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < rels.size(); i += nj) rep.checks[i] = check_one(h, rels[i], mode, depth);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rep;
}

std::vector<DiagramCheck> check_diagram(int n) {
  std::vector<DiagramCheck> out;
  auto C_S = hom("C->S", n), C_extAC = hom("C->extAC", n), extAC_extAS = hom("extAC->extAS", n);
  auto extAC_vC = hom("extAC->vC", n), vC_vS = hom("vC->vS", n), extAS_vS = hom("extAS->vS", n);
  auto vC_S = hom("vC->S", n), vS_S = hom("vS->S", n), extAC_S = hom("extAC->S", n), extAS_S = hom("extAS->S", n);
  auto S_extAS = hom("S->extAS", n);

  auto record = [&](std::string what, bool ok, std::string witness) {
    DiagramCheck d{std::move(what), ok, ok ? std::string() : std::move(witness)};
    out.push_back(std::move(d));
  };

  // Left square, evaluated in the extended affine symmetric group.
  for (const auto& g : C_S.source.generators) {
    Word w{g};
    auto via_s = eval_ext_affine(S_extAS.image(sigma_word(eval_symmetric(C_S.image(w), n))), n);
    auto via_ac = eval_ext_affine(extAC_extAS.image(C_extAC.image(w)), n);
    record("left square on " + g.to_string(), via_s == via_ac, via_s.to_string() + " vs " + via_ac.to_string());
  }
  // Right square, through the S_n x S_n shadow of vS_n.
  for (const auto& g : extAC_vC.source.generators) {
    Word w{g};
    auto a = virtual_shadow(vC_vS.image(extAC_vC.image(w)), n);
    auto b = virtual_shadow(extAS_vS.image(extAC_extAS.image(w)), n);
    record("right square on " + g.to_string(), a == b,
           a.first.cycles() + "," + a.second.cycles() + " vs " + b.first.cycles() + "," + b.second.cycles());
  }
  // Compatibility with the projections to S_n.
  for (const auto& g : C_S.source.generators) {
    Word w{g};
    auto base = eval_symmetric(C_S.image(w), n);
    auto via_vc = eval_symmetric(vC_S.image(extAC_vC.image(C_extAC.image(w))), n);
    record("projection of C_n through vC_n on " + g.to_string(), base == via_vc, base.cycles() + " vs " + via_vc.cycles());
  }
  for (const auto& g : extAC_vC.source.generators) {
    Word w{g};
    auto base = eval_symmetric(extAC_S.image(w), n);
    auto p1 = eval_symmetric(vC_S.image(extAC_vC.image(w)), n);
    auto p2 = eval_symmetric(extAS_S.image(extAC_extAS.image(w)), n);
    auto p3 = eval_symmetric(vS_S.image(extAS_vS.image(extAC_extAS.image(w))), n);
    auto p4 = eval_ext_affine(extAC_extAS.image(w), n).reduce();
    bool ok = base == p1 && base == p2 && base == p3 && base == p4;
    record("projection of extAC_n on " + g.to_string(), ok,
           base.cycles() + " " + p1.cycles() + " " + p2.cycles() + " " + p3.cycles() + " " + p4.cycles());
  }
  for (const auto& g : vC_S.source.generators) {
    Word w{g};
    auto base = eval_symmetric(vC_S.image(w), n);
    auto alt = eval_symmetric(vS_S.image(vC_vS.image(w)), n);
    record("projection of vC_n on " + g.to_string(), base == alt, base.cycles() + " vs " + alt.cycles());
  }
  return out;
}

}  // namespace cactus::groups
