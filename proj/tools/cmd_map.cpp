#include "cactus/realgeometry/charts.hpp"
#include "cli.hpp"

namespace cactus::cli {

namespace {

struct MapArgs {
  std::string which = "theta";
  std::string in;
  std::string f = "default";
  std::string sign = "chart";
};

nlohmann::json strata_json(const proj::Strata& s) {
  return {{"S", s.S}, {"B", s.B}, {"dim_S", s.dim_S}, {"dim_B", s.dim_B}, {"dim_B_flower", s.dim_B_flower}};
}

void run(Context& ctx, const MapArgs& a) {
  if (a.f != "default") throw UsageError("unknown diffeomorphism '" + a.f + "' (only default is built in)");
  const auto& f = real::default_diffeo();
  auto j = read_json(a.in);
  if (a.which == "gamma") {
    ctx.format_or("json", {"json"});
    ctx.emit(real::star_to_json(real::gamma(real::cube_from_json(j))));
    return;
  }
  if (a.which == "theta") {
    ctx.format_or("json", {"json"});
    auto img = real::theta(real::cube_from_json(j), f);
    ctx.emit(nlohmann::json{{"forest", img.tau.to_string()},
                            {"flower", proj::to_json(img.flower)},
                            {"mu", proj::to_json(img.mu)},
                            {"strata", strata_json(img.strata)}});
    return;
  }
  auto x = j.contains("order") ? real::star_from_json(j) : real::gamma(real::cube_from_json(j));
  auto sign = a.sign == "printed" ? real::ThetaSign::Printed : real::ThetaSign::Chart;
  auto delta = real::theta_star(x, f, sign);
  if (ctx.format_or("json", {"json", "csv"}) == "csv") {
    std::string text = "i,j,delta\n";
    for (const auto& [ij, d] : delta) text += std::to_string(ij.first) + "," + std::to_string(ij.second) + "," + d.to_string() + "\n";
    ctx.emit(text);
    return;
  }
  nlohmann::json dj = nlohmann::json::object();
  for (const auto& [ij, d] : delta) dj[std::to_string(ij.first) + "," + std::to_string(ij.second)] = d.to_string();
  ctx.emit(nlohmann::json{{"star", real::star_to_json(x)},
                          {"delta", dj},
                          {"flower", proj::to_json(real::flower_tuple(proj::iota_labels(x.n()), delta))}});
}

}  // namespace

void add_map(CLI::App& app, Context& ctx) {
  auto a = std::make_shared<MapArgs>();
  auto* sub = app.add_subcommand("map", "Apply Gamma, theta or Theta to a point");
  sub->add_option("--which", a->which, "gamma, theta or theta-star")
      ->check(CLI::IsMember({"gamma", "theta", "theta-star"}))
      ->capture_default_str();
  sub->add_option("--in", a->in, "Cube point JSON (theta-star also takes a star point)")->required();
  sub->add_option("--f", a->f, "Diffeomorphism [-1,1] -> [-inf,inf]")->capture_default_str();
  sub->add_option("--sign", a->sign, "Sign convention of Theta: chart or printed")
      ->check(CLI::IsMember({"chart", "printed"}))
      ->capture_default_str();
  sub->callback([&ctx, a] { run(ctx, *a); });
}

}  // namespace cactus::cli
