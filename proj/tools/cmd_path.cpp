#include <iomanip>
#include <sstream>

#include "cactus/realgeometry/path.hpp"
#include "cli.hpp"

namespace cactus::cli {

namespace {

struct PathArgs {
  int n = 5;
  int k = 3;
  std::size_t samples = 100;
  double s = 0.5;
  bool check = false;
};

void run(Context& ctx, const PathArgs& a) {
  if (a.k < 2 || a.k > a.n) throw UsageError("--k must lie in [2, n]");
  if (a.check) {
    emit_results(ctx, {path_batch(a.n, a.samples, ctx.seed)});
    return;
  }
  std::size_t steps = std::max<std::size_t>(a.samples, 2);
  std::vector<real::PathPoint> pts;
  std::vector<double> ts;
  for (std::size_t i = 0; i < steps; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    ts.push_back(t);
    pts.push_back(real::affine_cactus_path(a.n, a.k, t, a.s));
  }
  auto cell = [](const real::CPoint& p) {
    std::ostringstream os;
    os << std::setprecision(12);
    if (p.infinite) {
      os << "inf,inf";
    } else {
      os << p.value.real() << "," << p.value.imag();
    }
    return os.str();
  };
  if (ctx.format_or("csv", {"csv", "json"}) == "csv") {
    std::string text = "t,s";
    for (const auto& [ij, v] : pts[0].nu) {
      std::string name = "nu_" + std::to_string(ij.first) + "_" + std::to_string(ij.second);
      text += "," + name + "_re," + name + "_im";
    }
    text += "\n";
    for (std::size_t i = 0; i < steps; ++i) {
      std::ostringstream os;
      os << std::setprecision(12) << ts[i] << "," << a.s;
      text += os.str();
      for (const auto& [ij, v] : pts[i].nu) text += "," + cell(v);
      text += "\n";
    }
    ctx.emit(text);
    return;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < steps; ++i) {
    nlohmann::json nu = nlohmann::json::object();
    for (const auto& [ij, v] : pts[i].nu) {
      std::string key = std::to_string(ij.first) + "," + std::to_string(ij.second);
      nu[key] = v.infinite ? nlohmann::json("inf") : nlohmann::json::array({v.value.real(), v.value.imag()});
    }
    rows.push_back({{"t", ts[i]}, {"nu", nu}});
  }
  ctx.emit(nlohmann::json{{"n", a.n}, {"k", a.k}, {"s", a.s}, {"points", rows}});
}

}  // namespace

void add_path(CLI::App& app, Context& ctx) {
  auto a = std::make_shared<PathArgs>();
  auto* sub = app.add_subcommand("path", "Sample the affine cactus path H(t, s) (CSV by default)");
  sub->add_option("--n", a->n, "Number of labels")->check(CLI::Range(3, 10))->capture_default_str();
  sub->add_option("--k", a->k, "Block {1..k} reversed by the path")->capture_default_str();
  sub->add_option("--samples", a->samples, "Number of t values (or random samples with --check)")
      ->capture_default_str();
  sub->add_option("--s", a->s, "Deformation parameter, epsilon = i s")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sub->add_flag("--check", a->check, "Verify the twisted real condition and mu = 2 at random samples instead");
  sub->callback([&ctx, a] { run(ctx, *a); });
}

}  // namespace cactus::cli
