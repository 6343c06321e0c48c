#include "cactus/cli/batches.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cactus/cubecomplexes/checks.hpp"
#include "cactus/errors.hpp"
#include "cactus/projective/maps.hpp"
#include "cactus/projective/samples.hpp"
#include "cactus/realgeometry/charts.hpp"
#include "cactus/realgeometry/path.hpp"
#include "cactus/rootsystems/roots.hpp"

namespace cactus::cli {

using forests::Clade;
using forests::PlanarForest;

void BatchResult::fail(const std::string& w) {
  if (ok) witness = w;
  ok = false;
}

void BatchResult::merge(const BatchResult& other) {
  checked += other.checked;
  if (!other.ok) fail(other.witness);
}

nlohmann::json BatchResult::to_json() const {
  nlohmann::json j = {{"check", name}, {"ok", ok}, {"checked", checked}};
  if (!witness.empty()) j["witness"] = witness;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

std::vector<BatchResult> parallel_batches(std::size_t count, int jobs,
                                          const std::function<BatchResult(std::size_t)>& body) {
  std::vector<BatchResult> out(count);
  auto run = [&](std::size_t start) {
    for (std::size_t i = start; i < count; i += static_cast<std::size_t>(jobs)) {
      try {
        out[i] = body(i);
      } catch (const std::exception& e) {
        out[i].checked = 1;
        out[i].fail("sample " + std::to_string(i) + ": " + e.what());
      }
    }
  };
  if (jobs <= 1 || count <= 1) {
    jobs = 1;
    run(0);
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(run, static_cast<std::size_t>(t));
  for (auto& th : pool) th.join();
  return out;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t parts[2];
  seq.generate(parts, parts + 2);
  return (static_cast<std::uint64_t>(parts[0]) << 32) | parts[1];
}

namespace {

BatchResult collect(const std::string& name, const std::vector<BatchResult>& parts) {
  BatchResult r;
  r.name = name;
  for (const auto& p : parts) r.merge(p);
  return r;
}

std::string fv_string(const std::vector<std::size_t>& f) {
  std::string s = "(";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? ", " : "") + std::to_string(f[k]);
  return s + ")";
}

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Rational random_unit(std::mt19937_64& rng, int den, bool closed) {
  std::uniform_int_distribution<int> num(closed ? 0 : 1, closed ? den : den - 1);
  return q(num(rng), den);
}

real::CubePoint random_cube_point(const PlanarForest& f, std::mt19937_64& rng, int den, bool closed) {
  std::map<Clade, Rational> t;
  for (int v : f.internal_vertices()) t[f.clade(v)] = random_unit(rng, den, closed);
  return real::CubePoint(f, t);
}

std::string random_binary(std::vector<int> labels, std::mt19937_64& rng) {
  if (labels.size() == 1) return std::to_string(labels[0]);
  std::uniform_int_distribution<std::size_t> cut(1, labels.size() - 1);
  std::size_t c = cut(rng);
  std::vector<int> left(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(c));
  std::vector<int> right(labels.begin() + static_cast<std::ptrdiff_t>(c), labels.end());
  return "(" + random_binary(left, rng) + "," + random_binary(right, rng) + ")";
}

PlanarForest random_binary_tree(int n, std::mt19937_64& rng) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(k)] = k + 1;
  std::shuffle(labels.begin(), labels.end(), rng);
  return PlanarForest::parse(random_binary(labels, rng) + ";");
}

std::string point_string(const real::CubePoint& p) { return real::cube_to_json(p).dump(); }

bool same_theta(const real::ThetaImage& a, const real::ThetaImage& b) {
  return a.flower == b.flower && a.mu.mu == b.mu.mu;
}

}  // namespace

BatchResult counts_check(cubes::Family fam, int n, const std::vector<std::size_t>& expected) {
  BatchResult r;
  r.name = "counts " + cubes::family_name(fam) + " n=" + std::to_string(n);
  auto f = cubes::build_complex(fam, n).f_vector();
  r.checked = 1;
  r.detail["f_vector"] = f;
  if (f != expected) r.fail("got " + fv_string(f) + ", expected " + fv_string(expected));
  return r;
}

BatchResult npc_check(cubes::Family fam, int n, int jobs, bool mutate) {
  BatchResult r;
  r.name = "npc " + cubes::family_name(fam) + " n=" + std::to_string(n) + (mutate ? " mutated" : "");
  auto c = cubes::build_complex(fam, n);
  if (mutate) {
    int sq = -1;
    for (std::size_t i = 0; i < c.subcubes.size(); ++i) {
      if (c.subcubes[i].dim == 2) {
        sq = static_cast<int>(i);
        break;
      }
    }
    if (sq < 0) throw DomainError("the complex has no square to remove");
    r.detail["removed"] = c.subcubes[static_cast<std::size_t>(sq)].key;
    c = cubes::remove_subcube(c, sq);
  }
  auto rep = cubes::check_gromov_flag(c, jobs);
  r.checked = c.subcubes.size();
  r.detail["closure"] = rep.closure;
  r.detail["bullet1"] = rep.bullet1;
  r.detail["bullet2"] = rep.bullet2;
  if (!rep.ok) r.fail(rep.witness.empty() ? "link condition fails" : rep.witness);
  return r;
}

BatchResult isometry_check(const std::string& which, int n) {
  BatchResult r;
  r.name = "isometry " + which + " n=" + std::to_string(n);
  cubes::Family from, to;
  if (which == "phi") {
    from = cubes::Family::D;
    to = cubes::Family::BreveD;
  } else if (which == "breve-phi") {
    from = cubes::Family::BreveD;
    to = cubes::Family::HatD;
  } else {
    throw DomainError("unknown map '" + which + "' (phi or breve-phi)");
  }
  auto src = cubes::build_complex(from, n), dst = cubes::build_complex(to, n);
  auto rep = cubes::check_local_isometry(cubes::quotient_map(src, dst));
  r.checked = src.subcubes.size();
  if (!rep.ok) r.fail(rep.witness);
  return r;
}

BatchResult presentation_check(cubes::Family fam, int n) {
  BatchResult r;
  std::string target;
  if (fam == cubes::Family::HatD) {
    target = "PvC";
  } else if (fam == cubes::Family::HatP) {
    target = "PvS";
  } else {
    throw DomainError("presentation check is defined for hatD and hatP");
  }
  r.name = "presentation " + cubes::family_name(fam) + " vs " + target + " n=" + std::to_string(n);
  auto c = cubes::build_complex(fam, n);
  auto p = cubes::relabel_pure(cubes::extract_presentation(c), c);
  auto want = groups::make_presentation(target, n);
  auto cmp = groups::compare_presentations(p, want);
  r.checked = p.relator_classes().size();
  r.detail["generators"] = p.generators.size();
  r.detail["relator_classes"] = r.checked;
  if (!cmp.isomorphic) r.fail(cmp.witness);
  return r;
}

BatchResult diagram_check(int n) {
  BatchResult r;
  r.name = "diagram n=" + std::to_string(n);
  for (const auto& d : groups::check_diagram(n)) {
    ++r.checked;
    if (!d.ok) r.fail(d.description + ": " + d.witness);
  }
  auto rep = groups::verify_hom(groups::hom("AC->AS", n), groups::VerifyMode::SolvableTarget);
  r.checked += rep.checks.size();
  r.detail["AC->AS relators"] = rep.checks.size();
  for (const auto& c : rep.checks) {
    if (c.status != groups::Status::Proven) {
      r.fail("AC->AS relator " + groups::to_string(c.relator) + ": " + c.witness);
      break;
    }
  }
  return r;
}

BatchResult hom_check(const std::string& arrow, int n, groups::VerifyMode mode, int depth, int jobs) {
  BatchResult r;
  r.name = "hom " + arrow + " n=" + std::to_string(n);
  auto rep = groups::verify_hom(groups::hom(arrow, n), mode, depth, jobs);
  r.checked = rep.checks.size();
  int worst = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    worst = std::max(worst, c.depth);
    rows.push_back({{"relator", groups::to_string(c.relator)},
                    {"status", groups::to_string(c.status)},
                    {"depth", c.depth}});
    if (c.status != groups::Status::Proven) {
      r.fail(groups::to_string(c.status) + ": " + groups::to_string(c.relator) +
             (c.witness.empty() ? "" : " (" + c.witness + ")"));
    }
  }
  r.detail["proven"] = rep.count(groups::Status::Proven);
  r.detail["failed"] = rep.count(groups::Status::Failed);
  r.detail["inconclusive"] = rep.count(groups::Status::Inconclusive);
  r.detail["max_depth"] = worst;
  r.detail["relators"] = rows;
  return r;
}

BatchResult membership_batch(proj::Variety v, const std::vector<int>& ns, const std::vector<std::string>& eps,
                             std::size_t samples, std::size_t perturbed, std::uint64_t seed, int jobs) {
  if (ns.empty() || eps.empty()) throw DomainError("membership batch needs at least one n and one epsilon");
  std::vector<proj::Scalar> es;
  for (const auto& e : eps) es.push_back(proj::Scalar::parse(e));
  auto parts = parallel_batches(samples, jobs, [&](std::size_t i) {
    BatchResult b;
    int n = ns[i % ns.size()];
    const auto& e = es[(i / ns.size()) % es.size()];
    std::mt19937_64 rng(sample_seed(seed, i));
    auto t = proj::sample_member(v, n, e, rng);
    auto rep = proj::check_membership(v, t);
    b.checked = 1;
    if (!rep.ok) b.fail("sample " + std::to_string(i) + " rejected: " + rep.witness() + " at " + proj::to_json(t).dump());
    if (i < perturbed) {
      auto bad = proj::perturb(v, t, rng);
      auto r2 = proj::check_membership(v, bad.point);
      ++b.checked;
      if (r2.ok) {
        b.fail("perturbed sample " + std::to_string(i) + " (" + bad.coordinate + ") accepted");
      } else if (r2.witness().find(bad.coordinate) == std::string::npos) {
        b.fail("perturbed sample " + std::to_string(i) + ": witness '" + r2.witness() + "' does not name " +
               bad.coordinate);
      }
    }
    return b;
  });
  auto r = collect("membership " + proj::variety_name(v), parts);
  r.detail["members"] = samples;
  r.detail["perturbed"] = std::min(samples, perturbed);
  return r;
}

BatchResult membership_point(proj::Variety v, const proj::Tuple& t) {
  BatchResult r;
  r.name = "membership " + proj::variety_name(v);
  auto rep = proj::check_membership(v, t);
  r.checked = rep.checked;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& x : rep.violations) rows.push_back({{"equation", x.equation}, {"indices", x.indices}, {"text", x.text}});
  r.detail["violations"] = rows;
  if (!rep.ok) r.fail(rep.witness());
  return r;
}

BatchResult strata_dimension_check(int max_n) {
  BatchResult r;
  r.name = "stratum dimensions n<=" + std::to_string(max_n);
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& P : comb::all_set_partitions(n)) {
      r.checked += 2;
      int s = proj::tangent_dimension_S(P), b = proj::tangent_dimension_B(P);
      int want_s = n - P.num_blocks(), want_b = n - 1 - P.num_blocks() + P.num_singletons();
      if (s != want_s) r.fail("dim V_S at " + P.to_string() + ": tangent " + std::to_string(s) + ", formula " + std::to_string(want_s));
      if (b != want_b) r.fail("dim V^B at " + P.to_string() + ": tangent " + std::to_string(b) + ", formula " + std::to_string(want_b));
    }
  }
  return r;
}

BatchResult square_batch(int n, std::size_t samples, std::uint64_t seed, int jobs) {
  auto all = forests::enumerate_planar_forests(n);
  auto labels = proj::iota_labels(n);
  auto parts = parallel_batches(samples, jobs, [&](std::size_t i) {
    BatchResult b;
    std::mt19937_64 rng(sample_seed(seed, i));
    const auto& tau = all[rng() % all.size()];
    auto p = random_cube_point(tau, rng, 12, true);
    auto lhs = real::theta(p).flower;
    auto rhs = real::flower_tuple(labels, real::theta_star(real::gamma(p)));
    b.checked = 1;
    if (!(lhs == rhs)) b.fail("gamma o theta != Theta o Gamma at " + point_string(p));
    return b;
  });
  auto r = collect("square n=" + std::to_string(n), parts);
  return r;
}

BatchResult gluing_batch(int n, std::size_t samples, std::uint64_t seed, int jobs) {
  struct Case {
    PlanarForest tau;
    int v;
  };
  std::vector<Case> cases;
  for (const auto& tau : forests::enumerate_planar_forests(n)) {
    for (int v : tau.internal_vertices()) cases.push_back({tau, v});
  }
  auto parts = parallel_batches(cases.size(), jobs, [&](std::size_t i) {
    BatchResult b;
    const auto& [tau, v] = cases[i];
    Clade e = tau.clade(v);
    std::mt19937_64 rng(sample_seed(seed, i));
    auto collapsed = tau.collapse(v);
    for (std::size_t s = 0; s < samples; ++s) {
      auto p = random_cube_point(tau, rng, 9, true);
      auto t0 = p.t, t1 = p.t;
      t0[e] = 0;
      t1.erase(e);
      auto at0 = real::theta(real::CubePoint(tau, t0));
      auto flipped = real::theta(real::CubePoint(tau.flip(v), t0));
      b.checked += 2;
      if (!same_theta(at0, flipped)) b.fail("theta(tau,(t,0)) != theta(r_e tau,(t,0)) at " + point_string(real::CubePoint(tau, t0)));
      auto t_one = p.t;
      t_one[e] = 1;
      auto at1 = real::theta(real::CubePoint(tau, t_one));
      auto down = real::theta(real::CubePoint(collapsed, t1));
      if (!same_theta(at1, down)) b.fail("theta(tau,(t,1)) != theta(d_e tau,t) at " + point_string(real::CubePoint(tau, t_one)));
    }
    return b;
  });
  auto r = collect("gluing n=" + std::to_string(n), parts);

  // Strata are constant on the open little cubes and depend only on the
  // little-cube index (tau, Z) up to flips at zero edges.
  std::map<std::string, std::pair<std::string, std::string>> by_index;
  std::mt19937_64 rng(sample_seed(seed, cases.size()));
  for (const auto& tau : forests::enumerate_planar_forests(n)) {
    auto verts = tau.internal_vertices();
    for (std::uint32_t zmask = 0; zmask < (1u << verts.size()); ++zmask) {
      std::set<Clade> zeros;
      for (std::size_t k = 0; k < verts.size(); ++k) {
        if ((zmask >> k) & 1u) zeros.insert(tau.clade(verts[k]));
      }
      std::string key = forests::PlanarForestWithZeros(tau, zeros).to_string();
      for (int s = 0; s < 3; ++s) {
        std::map<Clade, Rational> t;
        for (int v : verts) t[tau.clade(v)] = zeros.count(tau.clade(v)) ? Rational(0) : random_unit(rng, 9, false);
        auto img = real::theta(real::CubePoint(tau, t));
        std::pair<std::string, std::string> strata{img.strata.S.to_string(), img.strata.B.to_string()};
        ++r.checked;
        auto [it, fresh] = by_index.emplace(key, strata);
        if (!fresh && it->second != strata) {
          r.fail("little cube " + key + " meets strata " + it->second.first + "/" + it->second.second + " and " +
                 strata.first + "/" + strata.second);
        }
      }
    }
  }
  r.detail["little_cube_indices"] = by_index.size();
  r.detail["cases"] = cases.size();
  return r;
}

BatchResult inverse_batch(int max_n, std::size_t samples, std::uint64_t seed, int jobs) {
  if (max_n < 2) throw DomainError("inverse check needs n >= 2");
  auto parts = parallel_batches(samples, jobs, [&](std::size_t i) {
    BatchResult b;
    std::mt19937_64 rng(sample_seed(seed, i));
    int n = 2 + static_cast<int>(i % static_cast<std::size_t>(max_n - 1));
    auto tau = random_binary_tree(n, rng);
    auto p = random_cube_point(tau, rng, 11, false);
    auto img = real::theta(p);
    auto order = tau.leaf_order();
    std::vector<Rational> y(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) {
      y[static_cast<std::size_t>(l - 1)] = l == order[0] ? Rational(0) : img.flower.delta(order[0], l).value().re();
    }
    auto back = real::tree_of_configuration(y).forest();
    b.checked = 1;
    if (!(back == tau)) b.fail("tree " + tau.to_string() + " came back as " + back.to_string() + " from " + point_string(p));
    return b;
  });
  auto r = collect("inverse n<=" + std::to_string(max_n), parts);
  return r;
}

BatchResult face_center_check(const std::string& type) { return face_center_check(roots::root_system(type)); }

BatchResult face_center_check(const roots::RootSystem& rs) {
  BatchResult r;
  r.name = "face centers " + (rs.name().empty() ? "rank " + std::to_string(rs.rank()) : rs.name());
  std::uint32_t full = (1u << rs.rank()) - 1;
  auto sys = roots::simple_systems(rs);
  for (const auto& pi : sys) {
    for (std::uint32_t d = 0; d <= full; ++d) {
      auto rep = roots::verify_face_center(rs, pi, d);
      ++r.checked;
      if (!rep.ok) {
        r.fail("Pi rho=" + roots::vec_to_string(pi.rho) + " Delta=" + std::to_string(d) + ": average " +
               roots::vec_to_string(rep.average) + ", expected " + roots::vec_to_string(rep.expected));
      }
    }
  }
  r.detail["roots"] = rs.num_roots();
  r.detail["simple_systems"] = sys.size();
  return r;
}

namespace {

std::vector<std::vector<Rational>> grid(int r, int den) {
  std::vector<std::vector<Rational>> out{{}};
  for (int k = 0; k < r; ++k) {
    std::vector<std::vector<Rational>> next;
    for (const auto& p : out) {
      for (int a = 0; a <= den; ++a) {
        auto e = p;
        e.push_back(q(a, den));
        next.push_back(e);
      }
    }
    out = next;
  }
  return out;
}

std::vector<Rational> random_grid_point(int r, int den, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> a(0, den);
  std::vector<Rational> t;
  for (int k = 0; k < r; ++k) t.push_back(q(a(rng), den));
  return t;
}

}  // namespace

BatchResult xi_gluing_check(const std::string& type, int den, std::size_t samples, std::uint64_t seed) {
  BatchResult r;
  r.name = "xi gluing " + type;
  auto rs = roots::root_system(type);
  auto sys = roots::simple_systems(rs);
  int rank = rs.rank();
  std::map<roots::Vec, roots::Vec> seen;
  std::mt19937_64 rng(seed);
  for (const auto& pi : sys) {
    std::vector<std::vector<Rational>> pts;
    if (samples == 0) {
      pts = grid(rank, den);
    } else {
      for (std::size_t s = 0; s < samples; ++s) pts.push_back(random_grid_point(rank, den, rng));
      // Boundary points are the ones shared with other parallelepipeds.
      for (std::size_t s = 0; s < samples; ++s) {
        auto t = random_grid_point(rank, den, rng);
        t[rng() % t.size()] = 1;
        pts.push_back(t);
      }
    }
    for (const auto& t : pts) {
      roots::Vec x = roots::star_point(pi, t);
      roots::Vec y = roots::xi(rs, pi, t);
      ++r.checked;
      if (!roots::permutahedron_membership(rs, y) || !roots::in_chamber(rs, pi, y)) {
        r.fail("Xi(" + roots::vec_to_string(x) + ") = " + roots::vec_to_string(y) + " is not in the chamber part of P");
      }
      auto [it, fresh] = seen.emplace(x, y);
      if (!fresh && it->second != y) {
        r.fail("star point " + roots::vec_to_string(x) + " has images " + roots::vec_to_string(it->second) + " and " +
               roots::vec_to_string(y));
      }
    }
  }
  r.detail["star_points"] = seen.size();
  return r;
}

BatchResult xi_intertwine_check(const std::string& type, int den, std::size_t samples, std::uint64_t seed) {
  BatchResult r;
  r.name = "xi intertwines " + type;
  auto rs = roots::root_system(type);
  auto sys = roots::simple_systems(rs);
  int rank = rs.rank();
  std::mt19937_64 rng(seed);
  std::set<roots::Vec> boundary;
  for (const auto& pi : sys) {
    if (samples == 0) {
      for (const auto& t : grid(rank, den)) {
        if (std::find(t.begin(), t.end(), Rational(1)) != t.end()) boundary.insert(roots::star_point(pi, t));
      }
    } else {
      for (std::size_t s = 0; s < samples; ++s) {
        auto t = random_grid_point(rank, den, rng);
        t[rng() % t.size()] = 1;
        boundary.insert(roots::star_point(pi, t));
      }
    }
  }
  std::vector<roots::Vec> pts(boundary.begin(), boundary.end());
  std::vector<roots::Vec> img;
  std::vector<std::set<roots::FaceKey>> xk, yk;
  for (const auto& x : pts) {
    auto sc = roots::star_membership(rs, sys, x);
    if (!sc) throw InvariantViolation("boundary point " + roots::vec_to_string(x) + " is not in the star");
    img.push_back(roots::xi(rs, sys[static_cast<std::size_t>(sc->system)], sc->t));
    xk.push_back(roots::star_face_keys(rs, sys, x));
    yk.push_back(roots::permutahedron_face_keys(rs, sys, img.back()));
  }
  std::size_t related = 0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      bool lhs = roots::keys_meet(xk[a], xk[b]);
      bool rhs = roots::keys_meet(yk[a], yk[b]);
      ++r.checked;
      related += lhs;
      if (lhs != rhs) {
        r.fail(roots::vec_to_string(pts[a]) + (lhs ? " ~ " : " !~ ") + roots::vec_to_string(pts[b]) + " but images " +
               roots::vec_to_string(img[a]) + (rhs ? " ~ " : " !~ ") + roots::vec_to_string(img[b]));
      }
    }
  }
  r.detail["boundary_points"] = pts.size();
  r.detail["related_pairs"] = related;
  if (related == 0) r.fail("no related pairs among the boundary points");
  return r;
}

BatchResult path_batch(int n, std::size_t samples, std::uint64_t seed) {
  BatchResult r;
  r.name = "path n=" + std::to_string(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> kdist(2, n);
  double worst = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    int k = kdist(rng);
    double t = unit(rng), s = unit(rng);
    auto h = real::affine_cactus_path(n, k, t, s);
    for (const auto& [ij, v] : h.nu) {
      if (v.infinite) continue;
      double err = std::abs(std::conj(v.value) - (v.value - h.eps));
      worst = std::max(worst, err);
      ++r.checked;
      if (err > real::kPathTolerance) {
        std::ostringstream os;
        os << "conj(nu) != nu - eps at k=" << k << " t=" << t << " s=" << s << " pair " << ij.first << "," << ij.second
           << " error " << err;
        r.fail(os.str());
      }
    }
    auto mid = real::affine_cactus_path(n, k, 0.5, s);
    for (int j = 1; j + 2 <= k; ++j) {
      double err = std::abs(mid.mu.at({j, j + 1, j + 2}).value - 2.0);
      worst = std::max(worst, err);
      ++r.checked;
      if (err > real::kPathTolerance) {
        std::ostringstream os;
        os << "mu_" << j << "," << j + 1 << "," << j + 2 << "(H(1/2," << s << ")) off 2 by " << err << " (k=" << k << ")";
        r.fail(os.str());
      }
    }
  }
  r.detail["max_error"] = worst;
  r.detail["samples"] = samples;
  return r;
}

}  // namespace cactus::cli
