#include <sstream>

#include "cactus/cubecomplexes/checks.hpp"
#include "cactus/cubecomplexes/complex.hpp"
#include "cactus/forests/forest.hpp"
#include "cli.hpp"

namespace cactus::cli {

namespace {

struct EnumerateArgs {
  std::string complex = "D";
  int n = 3;
  bool counts = false;
  bool subdivision = false;
  bool forests = false;
  bool zero_forests = false;
  int k = -1;
};

nlohmann::json counts_json(const std::vector<std::size_t>& f) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t d = 0; d < f.size(); ++d) j[std::to_string(d)] = f[d];
  return j;
}

std::string counts_csv(const std::vector<std::size_t>& f) {
  std::ostringstream os;
  os << "dim,count\n";
  for (std::size_t d = 0; d < f.size(); ++d) os << d << "," << f[d] << "\n";
  return os.str();
}

void emit_list(Context& ctx, const std::vector<std::string>& items) {
  if (ctx.format_or("json", {"json", "csv"}) == "csv") {
    std::string text;
    for (const auto& s : items) text += s + "\n";
    ctx.emit(text);
  } else {
    ctx.emit(nlohmann::json(items));
  }
}

void run(Context& ctx, const EnumerateArgs& a) {
  if (a.forests) {
    auto fs = a.k >= 0 ? forests::enumerate_planar_forests(a.n, a.k) : forests::enumerate_planar_forests(a.n);
    std::vector<std::string> items;
    for (const auto& f : fs) items.push_back(f.to_string());
    emit_list(ctx, items);
    return;
  }
  if (a.zero_forests) {
    std::vector<std::string> items;
    for (const auto& z : forests::enumerate_zero_forests(a.n)) items.push_back(z.to_string());
    emit_list(ctx, items);
    return;
  }
  auto c = cubes::build_complex(cubes::parse_family(a.complex), a.n);
  if (a.counts || a.subdivision) {
    auto f = a.subdivision ? cubes::cubical_subdivision(c).f_vector() : c.f_vector();
    if (ctx.format_or("json", {"json", "csv"}) == "csv") {
      ctx.emit(counts_csv(f));
    } else {
      ctx.emit(counts_json(f));
    }
    return;
  }
  auto fmt = ctx.format_or("json", {"json", "csv", "dot"});
  if (fmt == "dot") {
    ctx.emit(cubes::to_dot(c));
  } else if (fmt == "csv") {
    std::ostringstream os;
    os << "dim,id,key\n";
    for (std::size_t d = 0; d < c.cells.size(); ++d) {
      for (std::size_t i = 0; i < c.cells[d].size(); ++i) os << d << "," << i << ",\"" << c.cells[d][i].key << "\"\n";
    }
    ctx.emit(os.str());
  } else {
    ctx.emit(cubes::to_json(c));
  }
}

}  // namespace

void add_enumerate(CLI::App& app, Context& ctx) {
  auto args = std::make_shared<EnumerateArgs>();
  auto* sub = app.add_subcommand("enumerate", "Enumerate cells of a complex, planar forests or forests with zeros");
  sub->add_option("--complex", args->complex, "D, hatD, breveD, P, hatP or breveP")->capture_default_str();
  sub->add_option("--n", args->n, "Number of labels")->check(CLI::Range(1, 7))->capture_default_str();
  sub->add_flag("--counts", args->counts, "Only the number of cells in each dimension");
  sub->add_flag("--subdivide", args->subdivision, "Counts of the cubical subdivision");
  sub->add_flag("--forests", args->forests, "List the planar forests PF_n");
  sub->add_option("--k", args->k, "With --forests: number of internal edges");
  sub->add_flag("--zero-forests", args->zero_forests, "List the forests with zeros ZF_n");
  sub->callback([&ctx, args] { run(ctx, *args); });
}

}  // namespace cactus::cli
