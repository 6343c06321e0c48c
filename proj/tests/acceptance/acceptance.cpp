#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "cactus/cli/batches.hpp"
#include "cactus/forests/forest.hpp"
#include "cactus/projective/maps.hpp"
#include "json.hpp"

using namespace cactus;
using namespace cactus::cli;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<BatchResult>()> run;
};

std::uint64_t g_seed = 1;
int g_jobs = 0;

BatchResult expect_failure(BatchResult r) {
  BatchResult out;
  out.name = r.name + " (negative control)";
  out.checked = r.checked;
  if (r.ok) {
    out.fail("the mutated complex passed");
  } else if (r.witness.empty()) {
    out.fail("the mutated complex failed without a witness");
  }
  return out;
}

std::vector<BatchResult> cell_counts() {
  // Oracle for D_3: big cubes are flip orbits of planar forests, and the
  // flips at k internal edges act freely.
  std::vector<std::size_t> oracle;
  for (int k = 0; k < 3; ++k) oracle.push_back(forests::enumerate_planar_forests(3, k).size() >> k);
  std::vector<BatchResult> out{counts_check(cubes::Family::HatD, 3, {1, 6, 3}),
                               counts_check(cubes::Family::D, 3, {6, 9, 3}),
                               counts_check(cubes::Family::D, 3, oracle)};
  auto breve = cubes::build_complex(cubes::Family::BreveD, 3).f_vector();
  BatchResult b;
  b.name = "counts breveD n=3 vertices";
  b.checked = 1;
  if (breve[0] != 2) b.fail("breve D_3 has " + std::to_string(breve[0]) + " vertices");
  out.push_back(b);
  return out;
}

std::vector<BatchResult> curvature() {
  std::vector<BatchResult> out;
  for (auto f : {cubes::Family::D, cubes::Family::HatD, cubes::Family::BreveD}) {
    for (int n = 3; n <= 4; ++n) out.push_back(npc_check(f, n, g_jobs));
  }
  out.push_back(expect_failure(npc_check(cubes::Family::HatD, 3, g_jobs, true)));
  out.push_back(expect_failure(npc_check(cubes::Family::D, 4, g_jobs, true)));
  return out;
}

std::vector<BatchResult> isometries() {
  std::vector<BatchResult> out;
  for (int n = 3; n <= 4; ++n) {
    out.push_back(isometry_check("phi", n));
    out.push_back(isometry_check("breve-phi", n));
  }
  return out;
}

std::vector<BatchResult> presentations() {
  std::vector<BatchResult> out;
  for (int n = 3; n <= 4; ++n) {
    out.push_back(presentation_check(cubes::Family::HatD, n));
    out.push_back(presentation_check(cubes::Family::HatP, n));
  }
  return out;
}

std::vector<BatchResult> diagram() {
  std::vector<BatchResult> out;
  for (int n = 2; n <= 6; ++n) out.push_back(diagram_check(n));
  return out;
}

std::vector<BatchResult> certificates() {
  std::vector<BatchResult> out;
  for (int n = 3; n <= 4; ++n) {
    out.push_back(hom_check("extAC->vC", n, groups::VerifyMode::BoundedRewrite, 6, g_jobs));
  }
  return out;
}

std::vector<BatchResult> membership() {
  std::vector<BatchResult> out;
  const proj::Variety all[] = {proj::Variety::LosevManin,     proj::Variety::Flower,
                               proj::Variety::DeformedFlower, proj::Variety::DeligneMumford,
                               proj::Variety::MauWoodward,    proj::Variety::DeformedMauWoodward};
  for (auto v : all) {
    std::vector<int> ns = proj::has_triples(v) ? std::vector<int>{3, 4} : std::vector<int>{2, 3, 4};
    out.push_back(membership_batch(v, ns, {"0", "1", "i"}, 1000, 100, g_seed, g_jobs));
  }
  return out;
}

std::vector<BatchResult> strata() {
  BatchResult r;
  r.name = "nine-point strata";
  std::ifstream f(std::string(CACTUS_SOURCE_DIR) + "/data/nine_point.json");
  auto s = proj::classify_strata(proj::tuple_from_json(nlohmann::json::parse(f)));
  comb::SetPartition S({{1, 4, 7}, {3, 8}, {2, 5, 6, 9}});
  comb::SetPartition B({{1, 4, 7}, {3}, {8}, {2, 5, 6}, {9}});
  r.checked = 2;
  if (!(s.S == S)) r.fail("S = " + s.S.to_string() + ", expected " + S.to_string());
  if (!(s.B == B)) r.fail("B = " + s.B.to_string() + ", expected " + B.to_string());
  if (s.S.num_blocks() != 3 || s.B.num_blocks() != 5) r.fail("m or r differ from 3 and 5");
  return {r, strata_dimension_check(4)};
}

std::vector<BatchResult> square() {
  std::vector<BatchResult> out;
  for (int n = 3; n <= 5; ++n) out.push_back(square_batch(n, 100, g_seed, g_jobs));
  return out;
}

std::vector<BatchResult> gluing() { return {gluing_batch(4, 20, g_seed, g_jobs)}; }

std::vector<BatchResult> inverse() { return {inverse_batch(7, 200, g_seed, g_jobs)}; }

std::vector<BatchResult> appendix() {
  std::vector<BatchResult> out;
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) out.push_back(face_center_check(t));
  out.push_back(xi_gluing_check("A2", 4, 0, g_seed));
  out.push_back(xi_intertwine_check("A2", 4, 0, g_seed));
  out.push_back(xi_gluing_check("A3", 4, 40, g_seed));
  out.push_back(xi_intertwine_check("A3", 4, 20, g_seed));
  return out;
}

std::vector<BatchResult> path() {
  std::vector<BatchResult> out;
  for (int n = 3; n <= 5; ++n) out.push_back(path_batch(n, 100, g_seed));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed") g_seed = std::stoull(argv[i + 1]);
    if (a == "--jobs") g_jobs = std::stoi(argv[i + 1]);
  }
  if (g_jobs < 1) g_jobs = static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));

  const std::vector<Criterion> criteria = {
      {1, "cell counts", cell_counts},
      {2, "non-positive curvature", curvature},
      {3, "local isometries", isometries},
      {4, "presentation extraction", presentations},
      {5, "group diagram", diagram},
      {6, "psi breve certificates", certificates},
      {7, "variety membership", membership},
      {8, "strata", strata},
      {9, "commuting square", square},
      {10, "theta gluing and strata", gluing},
      {11, "inverse algorithm", inverse},
      {12, "root system appendix", appendix},
      {13, "twisted path", path},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::vector<BatchResult> results;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      BatchResult r;
      r.name = c.title;
      r.fail(std::string("exception: ") + e.what());
      results.push_back(r);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    BatchResult total;
    for (const auto& r : results) total.merge(r);
    if (!total.ok) ++failed;
    char line[256];
    std::snprintf(line, sizeof line, "criterion %2d %-28s %s  (%zu checks, %.1f s)", c.id, c.title.c_str(),
                  total.ok ? "PASS" : "FAIL", total.checked, secs);
    std::cout << line << "\n";
    for (const auto& r : results) {
      if (!r.ok) std::cout << "    " << r.name << ": " << r.witness << "\n";
    }
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
