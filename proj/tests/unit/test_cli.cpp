#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cactus(const std::string& args) {
  std::string cmd = std::string(CACTUS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(CACTUS_SOURCE_DIR) + "/data/" + name; }

}  // namespace

TEST_CASE("cli: hat D_3 cell counts") {
  auto r = cactus("enumerate --complex hatD --n 3 --counts");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"0\":1,\"1\":6,\"2\":3}\n");
  auto csv = cactus("--format csv enumerate --complex D --n 3 --counts");
  CHECK(csv.code == 0);
  CHECK(csv.out == "dim,count\n0,6\n1,9\n2,3\n");
}

TEST_CASE("cli: output is identical across runs") {
  auto a = cactus("--seed 7 verify square --n 4 --samples 20");
  auto b = cactus("--seed 7 verify square --n 4 --samples 20 --jobs 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(cactus("enumerate --complex breveD --n 4").out == cactus("enumerate --complex breveD --n 4").out);
}

TEST_CASE("cli: npc passes and the mutated complex fails") {
  auto r = cactus("verify npc --complex hatD --n 4");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
  auto m = cactus("verify npc --complex hatD --n 3 --mutate");
  CHECK(m.code == 1);
  auto j = nlohmann::json::parse(m.out);
  CHECK(j["ok"] == false);
  CHECK(j["witness"].get<std::string>().find("missing square") != std::string::npos);
}

TEST_CASE("cli: classify the nine-point example") {
  auto r = cactus("classify --in " + data("nine_point.json"));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["m"] == 3);
  CHECK(j["r"] == 5);
  auto strata = cactus("verify strata --max-n 0 --in " + data("nine_point.json") +
                       " --S '[[1,4,7],[3,8],[2,5,6,9]]' --B '[[1,4,7],[3],[8],[2,5,6],[9]]'");
  CHECK(strata.code == 0);
  auto wrong = cactus("verify strata --max-n 0 --in " + data("nine_point.json") + " --S '[[1,4,7,3,8],[2,5,6,9]]'");
  CHECK(wrong.code == 1);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(cactus("enumerate --complex hatD --n 3 --no-such-flag").code == 2);
  CHECK(cactus("frobnicate").code == 2);
  CHECK(cactus("").code == 2);
  CHECK(cactus("enumerate --complex Z --n 3").code == 2);
  CHECK(cactus("classify --in /nonexistent.json").code == 2);
  CHECK(cactus("--format dot classify --in " + data("nine_point.json")).code == 2);
  CHECK(cactus("path --n 4 --k 7").code == 2);
  CHECK(cactus("--help").code == 0);
}

TEST_CASE("cli: membership on a file and on samples") {
  auto ok = cactus("verify membership --variety f --n 9 --in " + data("nine_point.json"));
  CHECK(ok.code == 0);
  auto batch = cactus("verify membership --variety CQ --n 3 --samples 30 --perturbed 10 --eps 0 1 i");
  CHECK(batch.code == 0);
  CHECK(nlohmann::json::parse(batch.out)["checked"] == 40);
}

TEST_CASE("cli: maps, paths, roots and exports") {
  std::string cube = data("cube_point.json");
  auto g = cactus("map --which gamma --in " + cube);
  REQUIRE(g.code == 0);
  CHECK(nlohmann::json::parse(g.out).contains("order"));
  auto th = cactus("map --which theta --in " + cube);
  REQUIRE(th.code == 0);
  CHECK(nlohmann::json::parse(th.out).contains("strata"));
  auto ts = cactus("map --which theta-star --in " + cube);
  REQUIRE(ts.code == 0);
  CHECK(nlohmann::json::parse(ts.out)["flower"] == nlohmann::json::parse(th.out)["flower"]);

  auto p = cactus("path --n 5 --k 3 --samples 11");
  CHECK(p.code == 0);
  CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 12);
  CHECK(cactus("path --n 5 --k 3 --samples 50 --check").code == 0);

  auto roots = cactus("roots --type G2 --verify face-centers");
  CHECK(roots.code == 0);
  CHECK(nlohmann::json::parse(roots.out)["ok"] == true);
  auto csv = cactus("--format csv roots --type A2");
  CHECK(csv.out.rfind("index,root,weight\n", 0) == 0);
  CHECK(cactus("roots --cartan '[[2,-1],[-1,2]]'").code == 0);
  CHECK(cactus("roots --cartan '[[2,1],[-1,2]]'").code == 2);

  auto dot = cactus("--format dot export complex --complex hatD --n 3");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph") != std::string::npos);
  auto pres = cactus("export presentation --group PvC --n 3");
  CHECK(pres.code == 0);
  CHECK(nlohmann::json::parse(pres.out).contains("relators"));
}

TEST_CASE("cli: group checks") {
  CHECK(cactus("verify diagram --n 4").code == 0);
  auto h = cactus("verify hom --from AC --to AS --n 4");
  CHECK(h.code == 0);
  auto r = cactus("--jobs 2 verify hom --arrow 'extAC->vC' --n 3 --depth 6");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["detail"]["inconclusive"] == 0);
  CHECK(cactus("verify presentation --complex hatP --n 3").code == 0);
  CHECK(cactus("verify isometry --map breve-phi --n 3").code == 0);
}
