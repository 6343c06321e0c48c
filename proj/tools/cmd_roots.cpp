#include "cactus/rootsystems/roots.hpp"
#include "cli.hpp"

namespace cactus::cli {

namespace {

struct RootsArgs {
  std::string type;
  std::string cartan;
  std::string verify;
};

roots::RootSystem load(const RootsArgs& a) {
  if (!a.type.empty() && !a.cartan.empty()) throw UsageError("give either --type or --cartan");
  if (!a.type.empty()) return roots::root_system(a.type);
  if (a.cartan.empty()) throw UsageError("give --type or --cartan");
  if (a.cartan.front() == '[' || a.cartan.front() == '{') return roots::root_system_from_json(nlohmann::json::parse(a.cartan));
  return roots::root_system_from_json(read_json(a.cartan));
}

void run(Context& ctx, const RootsArgs& a) {
  auto rs = load(a);
  if (a.verify == "face-centers") {
    emit_results(ctx, {face_center_check(rs)});
    return;
  }
  if (!a.verify.empty()) {
    if (rs.name().empty()) throw UsageError("--verify xi needs a named type");
    emit_results(ctx, {xi_gluing_check(rs.name(), 4, rs.rank() <= 2 ? 0 : 50, ctx.seed),
                       xi_intertwine_check(rs.name(), 4, rs.rank() <= 2 ? 0 : 20, ctx.seed)});
    return;
  }
  if (ctx.format_or("json", {"json", "csv"}) == "csv") {
    ctx.emit(roots::roots_csv(rs));
    return;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < rs.num_roots(); ++i) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : rs.weight(i)) w.push_back(to_string(x));
    rows.push_back({{"index", i}, {"root", rs.root(i)}, {"weight", w}});
  }
  auto base = roots::base_system(rs);
  nlohmann::json rho = nlohmann::json::array();
  for (const auto& x : base.rho) rho.push_back(to_string(x));
  ctx.emit(nlohmann::json{{"type", rs.name()},
                          {"rank", rs.rank()},
                          {"cartan", rs.cartan()},
                          {"num_roots", rs.num_roots()},
                          {"rho", rho},
                          {"simple_systems", roots::simple_systems(rs).size()},
                          {"roots", rows}});
}

}  // namespace

void add_roots(CLI::App& app, Context& ctx) {
  auto a = std::make_shared<RootsArgs>();
  auto* sub = app.add_subcommand("roots", "Root system data and the permutahedron checks");
  sub->add_option("--type", a->type, "Named type, e.g. A3, B2, G2");
  sub->add_option("--cartan", a->cartan, "Cartan matrix as inline JSON or a JSON file");
  sub->add_option("--verify", a->verify, "face-centers or xi")->check(CLI::IsMember({"face-centers", "xi"}));
  sub->callback([&ctx, a] { run(ctx, *a); });
}

}  // namespace cactus::cli
