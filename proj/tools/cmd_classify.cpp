#include "cactus/projective/maps.hpp"
#include "cli.hpp"

namespace cactus::cli {

void add_classify(CLI::App& app, Context& ctx) {
  auto in = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("classify", "Strata S and B of a point of the flower space");
  sub->add_option("--in", *in, "Point JSON")->required();
  sub->callback([&ctx, in] {
    auto s = proj::classify_strata(proj::tuple_from_json(read_json(*in)));
    if (ctx.format_or("json", {"json", "csv"}) == "csv") {
      ctx.emit("S,B,dim_S,dim_B,dim_B_flower\n\"" + s.S.to_string() + "\",\"" + s.B.to_string() + "\"," +
               std::to_string(s.dim_S) + "," + std::to_string(s.dim_B) + "," + std::to_string(s.dim_B_flower) + "\n");
      return;
    }
    ctx.emit(nlohmann::json{{"S", s.S},
                            {"B", s.B},
                            {"m", s.S.num_blocks()},
                            {"r", s.B.num_blocks()},
                            {"p", s.B.num_singletons()},
                            {"dim_S", s.dim_S},
                            {"dim_B", s.dim_B},
                            {"dim_B_flower", s.dim_B_flower}});
  });
}

}  // namespace cactus::cli
