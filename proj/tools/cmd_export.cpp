#include "cactus/cubecomplexes/checks.hpp"
#include "cactus/groups/presentation.hpp"
#include "cli.hpp"

namespace cactus::cli {

namespace {

struct ExportArgs {
  std::string complex = "hatD";
  std::string group;
  int n = 3;
  bool pure = false;
};

void export_presentation(Context& ctx, const groups::Presentation& p) {
  if (ctx.format_or("json", {"json", "csv"}) == "csv") {
    std::string text = "kind,word\n";
    for (const auto& g : p.generators) text += "generator," + g.to_string() + "\n";
    for (const auto& r : p.relators) text += "relator," + groups::to_string(r) + "\n";
    ctx.emit(text);
    return;
  }
  ctx.emit(groups::to_json(p));
}

}  // namespace

void add_export(CLI::App& app, Context& ctx) {
  auto a = std::make_shared<ExportArgs>();
  auto* ex = app.add_subcommand("export", "Export complexes and presentations");
  ex->require_subcommand(1);

  auto* cx = ex->add_subcommand("complex", "Graded cell poset (JSON) or 1-skeleton (DOT)");
  cx->add_option("--complex", a->complex, "D, hatD, breveD, P, hatP or breveP")->capture_default_str();
  cx->add_option("--n", a->n, "Number of labels")->check(CLI::Range(1, 7))->capture_default_str();
  cx->callback([&ctx, a] {
    auto c = cubes::build_complex(cubes::parse_family(a->complex), a->n);
    if (ctx.format_or("json", {"json", "dot"}) == "dot") {
      ctx.emit(cubes::to_dot(c));
    } else {
      ctx.emit(cubes::to_json(c));
    }
  });

  auto* pr = ex->add_subcommand("presentation", "A named presentation, or the one read off a complex");
  pr->add_option("--group", a->group, "C, AC, extAC, vC, vS, PvC, PvS, S, AS or extAS");
  pr->add_option("--complex", a->complex, "Complex whose 2-skeleton is read when --group is absent")
      ->capture_default_str();
  pr->add_option("--n", a->n, "Number of labels")->check(CLI::Range(2, 7))->capture_default_str();
  pr->add_flag("--pure", a->pure, "Rename edge letters to pure generators (hatD, hatP)");
  pr->callback([&ctx, a] {
    if (!a->group.empty()) {
      export_presentation(ctx, groups::make_presentation(a->group, a->n));
      return;
    }
    auto c = cubes::build_complex(cubes::parse_family(a->complex), a->n);
    auto p = cubes::extract_presentation(c);
    export_presentation(ctx, a->pure ? cubes::relabel_pure(p, c) : p);
  });
}

}  // namespace cactus::cli
