#include "cactus/cubecomplexes/complex.hpp"
#include "cactus/errors.hpp"
#include "cactus/projective/maps.hpp"
#include "cli.hpp"

namespace cactus::cli {

namespace {

struct VerifyArgs {
  std::string complex = "hatD";
  int n = 3;
  bool mutate = false;
  std::string map = "phi";
  std::string arrow;
  std::string from, to;
  std::string mode = "auto";
  int depth = 6;
  std::string variety = "f";
  std::string in;
  std::size_t samples = 100;
  std::size_t perturbed = 0;
  std::size_t per_edge = 20;
  std::vector<std::string> eps{"0"};
  std::string expect_S, expect_B;
  int max_n = 4;
  int tree_max_n = 7;
  std::string type = "A2";
  int den = 4;
  std::size_t boundary = 20;
};

comb::SetPartition partition_from_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return comb::SetPartition(j.get<std::vector<std::vector<int>>>());
}

void run_strata(Context& ctx, const VerifyArgs& a) {
  std::vector<BatchResult> out;
  if (!a.in.empty()) {
    BatchResult r;
    r.name = "strata " + a.in;
    auto s = proj::classify_strata(proj::tuple_from_json(read_json(a.in)));
    r.checked = 1;
    r.detail["S"] = s.S;
    r.detail["B"] = s.B;
    if (!a.expect_S.empty() && !(s.S == partition_from_text(a.expect_S))) {
      r.fail("S = " + s.S.to_string() + ", expected " + partition_from_text(a.expect_S).to_string());
    }
    if (!a.expect_B.empty() && !(s.B == partition_from_text(a.expect_B))) {
      r.fail("B = " + s.B.to_string() + ", expected " + partition_from_text(a.expect_B).to_string());
    }
    out.push_back(r);
  }
  if (a.max_n > 0) out.push_back(strata_dimension_check(a.max_n));
  emit_results(ctx, out);
}

void run_hom(Context& ctx, const VerifyArgs& a) {
  std::string arrow = a.arrow;
  if (arrow.empty()) {
    if (a.from.empty() || a.to.empty()) throw UsageError("give --arrow or both --from and --to");
    arrow = a.from + "->" + a.to;
  }
  auto h = groups::hom(arrow, a.n);
  groups::VerifyMode mode;
  if (a.mode == "solvable") {
    mode = groups::VerifyMode::SolvableTarget;
  } else if (a.mode == "rewrite") {
    mode = groups::VerifyMode::BoundedRewrite;
  } else {
    mode = h.target == groups::Target::Presentation ? groups::VerifyMode::BoundedRewrite
                                                    : groups::VerifyMode::SolvableTarget;
  }
  emit_results(ctx, {hom_check(arrow, a.n, mode, a.depth, ctx.jobs)});
}

void run_membership(Context& ctx, const VerifyArgs& a) {
  auto v = proj::parse_variety(a.variety);
  if (!a.in.empty()) {
    auto t = proj::tuple_from_json(read_json(a.in));
    if (t.n() != a.n && a.n != 0) {
      throw UsageError("point has n = " + std::to_string(t.n()) + " but --n is " + std::to_string(a.n));
    }
    emit_results(ctx, {membership_point(v, t)});
    return;
  }
  emit_results(ctx, {membership_batch(v, {a.n}, a.eps, a.samples, a.perturbed, ctx.seed, ctx.jobs)});
}

}  // namespace

void add_verify(CLI::App& app, Context& ctx) {
  auto a = std::make_shared<VerifyArgs>();
  auto* verify = app.add_subcommand("verify", "Run a verification batch; exit 1 when a check fails");
  verify->require_subcommand(1);
  auto n_opt = [&](CLI::App* s, int lo, int hi) {
    s->add_option("--n", a->n, "Number of labels")->check(CLI::Range(lo, hi))->capture_default_str();
  };

  auto* npc = verify->add_subcommand("npc", "Gromov link condition on a cube complex");
  npc->add_option("--complex", a->complex, "D, hatD or breveD")->capture_default_str();
  n_opt(npc, 1, 6);
  npc->add_flag("--mutate", a->mutate, "Remove one square first (negative control)");
  npc->callback([&ctx, a] {
    emit_results(ctx, {npc_check(cubes::parse_family(a->complex), a->n, ctx.jobs, a->mutate)});
  });

  auto* iso = verify->add_subcommand("isometry", "Local isometry of a quotient map");
  iso->add_option("--map", a->map, "phi (D to breve D) or breve-phi (breve D to hat D)")
      ->check(CLI::IsMember({"phi", "breve-phi"}))
      ->capture_default_str();
  n_opt(iso, 1, 6);
  iso->callback([&ctx, a] { emit_results(ctx, {isometry_check(a->map, a->n)}); });

  auto* pres = verify->add_subcommand("presentation", "Presentation read off the 2-skeleton against the pure group");
  pres->add_option("--complex", a->complex, "hatD or hatP")->capture_default_str();
  n_opt(pres, 2, 5);
  pres->callback([&ctx, a] { emit_results(ctx, {presentation_check(cubes::parse_family(a->complex), a->n)}); });

  auto* diag = verify->add_subcommand("diagram", "Diagram of groups on generators and AC_n -> AS_n");
  n_opt(diag, 2, 8);
  diag->callback([&ctx, a] { emit_results(ctx, {diagram_check(a->n)}); });

  auto* hom = verify->add_subcommand("hom", "Relator images of a homomorphism");
  hom->add_option("--arrow", a->arrow, "e.g. extAC->vC");
  hom->add_option("--from", a->from, "Source family");
  hom->add_option("--to", a->to, "Target family");
  n_opt(hom, 2, 8);
  hom->add_option("--mode", a->mode, "auto, solvable or rewrite")
      ->check(CLI::IsMember({"auto", "solvable", "rewrite"}))
      ->capture_default_str();
  hom->add_option("--depth", a->depth, "Rewrite depth bound")->check(CLI::Range(0, 12))->capture_default_str();
  hom->callback([&ctx, a] { run_hom(ctx, *a); });

  auto* mem = verify->add_subcommand("membership", "Defining equations on a point or on sampled points");
  mem->add_option("--variety", a->variety, "T, f, Cf, M, Q or CQ")->capture_default_str();
  n_opt(mem, 0, 16);
  mem->add_option("--in", a->in, "Point JSON");
  mem->add_option("--samples", a->samples, "Sampled members")->capture_default_str();
  mem->add_option("--perturbed", a->perturbed, "How many samples are also perturbed and must fail")
      ->capture_default_str();
  mem->add_option("--eps", a->eps, "Epsilon values for deformed families, e.g. 0 1 i");
  mem->callback([&ctx, a] { run_membership(ctx, *a); });

  auto* strata = verify->add_subcommand("strata", "Strata of a point and the dimension formulas");
  strata->add_option("--in", a->in, "Point JSON");
  strata->add_option("--S", a->expect_S, "Expected S as a JSON list of blocks");
  strata->add_option("--B", a->expect_B, "Expected B as a JSON list of blocks");
  strata->add_option("--max-n", a->max_n, "Tangent counts for n up to this (0 skips)")
      ->check(CLI::Range(0, 5))
      ->capture_default_str();
  strata->callback([&ctx, a] { run_strata(ctx, *a); });

  auto* square = verify->add_subcommand("square", "Theta o Gamma against theta on random cube points");
  n_opt(square, 2, 7);
  square->add_option("--samples", a->samples, "Random points")->capture_default_str();
  square->callback([&ctx, a] { emit_results(ctx, {square_batch(a->n, a->samples, ctx.seed, ctx.jobs)}); });

  auto* glue = verify->add_subcommand("gluing", "theta along t_e = 0 and t_e = 1, and strata of little cubes");
  n_opt(glue, 2, 6);
  glue->add_option("--samples", a->per_edge, "Samples per (tau, e)")->capture_default_str();
  glue->callback([&ctx, a] { emit_results(ctx, {gluing_batch(a->n, a->per_edge, ctx.seed, ctx.jobs)}); });

  auto* inv = verify->add_subcommand("inverse", "tree_of_configuration after theta on random binary trees");
  inv->add_option("--max-n", a->tree_max_n, "Largest n")->check(CLI::Range(2, 10))->capture_default_str();
  inv->add_option("--samples", a->samples, "Random trees")->capture_default_str();
  inv->callback([&ctx, a] { emit_results(ctx, {inverse_batch(a->tree_max_n, a->samples, ctx.seed, ctx.jobs)}); });

  auto* fc = verify->add_subcommand("face-centers", "Averages of face vertices against rho - rho^Delta");
  fc->add_option("--type", a->type, "Root system type")->capture_default_str();
  fc->callback([&ctx, a] { emit_results(ctx, {face_center_check(a->type)}); });

  auto* xi = verify->add_subcommand("xi", "Xi gluing and Xi intertwining the relations on rational grids");
  xi->add_option("--type", a->type, "Root system type")->capture_default_str();
  xi->add_option("--den", a->den, "Grid denominator")->check(CLI::Range(1, 12))->capture_default_str();
  xi->add_option("--samples", a->samples, "Random grid points per system (0 for the full grid)")
      ->capture_default_str();
  xi->add_option("--boundary", a->boundary, "Random boundary points per system for the relation check (0 for all)")
      ->capture_default_str();
  xi->callback([&ctx, a] {
    emit_results(ctx, {xi_gluing_check(a->type, a->den, a->samples, ctx.seed),
                       xi_intertwine_check(a->type, a->den, a->boundary, ctx.seed)});
  });

  auto* path = verify->add_subcommand("path", "Twisted real condition and mu = 2 along the affine cactus path");
  n_opt(path, 3, 8);
  path->add_option("--samples", a->samples, "Random (k, t, s)")->capture_default_str();
  path->callback([&ctx, a] { emit_results(ctx, {path_batch(a->n, a->samples, ctx.seed)}); });
}

}  // namespace cactus::cli
