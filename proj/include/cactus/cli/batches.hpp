#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cactus/cubecomplexes/complex.hpp"
#include "cactus/groups/homs.hpp"
#include "cactus/projective/varieties.hpp"
#include "cactus/rootsystems/roots.hpp"
#include "json.hpp"

namespace cactus::cli {

// Outcome of a batch of checks. `witness` names the first failing sample in
// canonical order; `detail` carries counts and per-case data for JSON output.
struct BatchResult {
  std::string name;
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;
  nlohmann::json detail = nlohmann::json::object();

  void fail(const std::string& w);
  void merge(const BatchResult& other);
  nlohmann::json to_json() const;
};

// Runs body(i) for i in [0, count) on `jobs` threads and returns the results
// in index order.
std::vector<BatchResult> parallel_batches(std::size_t count, int jobs,
                                          const std::function<BatchResult(std::size_t)>& body);

// Independent random stream for sample `index` of a batch.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

BatchResult counts_check(cubes::Family fam, int n, const std::vector<std::size_t>& expected);
// With mutate, one sub-cube is removed first and the result records whether
// the check fails with a witness.
BatchResult npc_check(cubes::Family fam, int n, int jobs, bool mutate = false);
// "phi": D_n -> breve D_n; "breve-phi": breve D_n -> hat D_n.
BatchResult isometry_check(const std::string& which, int n);
// hatD against PvC_n, hatP against PvS_n.
BatchResult presentation_check(cubes::Family fam, int n);
// Diagram of groups on generators, plus the window evaluation of AC_n -> AS_n.
BatchResult diagram_check(int n);
BatchResult hom_check(const std::string& arrow, int n, groups::VerifyMode mode, int depth, int jobs);
// Sampled members pass; with `perturbed` > 0 that many perturbed points must
// fail with a witness naming the changed coordinate.
// Sample i uses ns[i % |ns|] and eps[(i / |ns|) % |eps|].
BatchResult membership_batch(proj::Variety v, const std::vector<int>& ns, const std::vector<std::string>& eps,
                             std::size_t samples, std::size_t perturbed, std::uint64_t seed, int jobs);
BatchResult membership_point(proj::Variety v, const proj::Tuple& t);
// Dimension formulas against tangent counts for every partition of [n], n <= max_n.
BatchResult strata_dimension_check(int max_n);
BatchResult square_batch(int n, std::size_t samples, std::uint64_t seed, int jobs);
BatchResult gluing_batch(int n, std::size_t samples, std::uint64_t seed, int jobs);
BatchResult inverse_batch(int max_n, std::size_t samples, std::uint64_t seed, int jobs);
BatchResult face_center_check(const std::string& type);
BatchResult face_center_check(const roots::RootSystem& rs);
// Exhaustive grid with the given denominator, or `samples` random grid
// points when samples > 0.
BatchResult xi_gluing_check(const std::string& type, int den, std::size_t samples, std::uint64_t seed);
BatchResult xi_intertwine_check(const std::string& type, int den, std::size_t samples, std::uint64_t seed);
BatchResult path_batch(int n, std::size_t samples, std::uint64_t seed);

}  // namespace cactus::cli
