#include "cactus/projective/samples.hpp"

#include <algorithm>

#include "cactus/combinatorics/partitions.hpp"
#include "cactus/errors.hpp"
#include "cactus/projective/maps.hpp"

namespace cactus::proj {

namespace {

Laurent normalized(Laurent a) {
  std::size_t lead = 0;
  while (lead < a.coeff.size() && a.coeff[lead].is_zero()) ++lead;
  a.coeff.erase(a.coeff.begin(), a.coeff.begin() + static_cast<std::ptrdiff_t>(lead));
  a.low += static_cast<int>(lead);
  while (!a.coeff.empty() && a.coeff.back().is_zero()) a.coeff.pop_back();
  if (a.coeff.empty()) a.low = 0;
  return a;
}

Laurent combine(const Laurent& a, const Laurent& b, int sign) {
  if (b.coeff.empty()) return a;
  if (a.coeff.empty() && sign > 0) return b;
  int low = std::min(a.low, b.low);
  int high = std::max(a.low + static_cast<int>(a.coeff.size()), b.low + static_cast<int>(b.coeff.size()));
  Laurent r{low, std::vector<Scalar>(static_cast<std::size_t>(high - low), Scalar(0))};
  for (std::size_t k = 0; k < a.coeff.size(); ++k) r.coeff[static_cast<std::size_t>(a.low - low) + k] += a.coeff[k];
  for (std::size_t k = 0; k < b.coeff.size(); ++k) {
    auto& c = r.coeff[static_cast<std::size_t>(b.low - low) + k];
    if (sign > 0) {
      c += b.coeff[k];
    } else {
      c -= b.coeff[k];
    }
  }
  return normalized(r);
}

}  // namespace

bool Laurent::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](const Scalar& c) { return c.is_zero(); });
}

Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, 1); }

Laurent operator-(const Laurent& a, const Laurent& b) {
  if (a.coeff.empty()) {
    Laurent r = b;
    for (auto& c : r.coeff) c = -c;
    return normalized(r);
  }
  return combine(a, b, -1);
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.coeff.empty() || b.coeff.empty()) return {};
  Laurent r{a.low + b.low, std::vector<Scalar>(a.coeff.size() + b.coeff.size() - 1, Scalar(0))};
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    for (std::size_t j = 0; j < b.coeff.size(); ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
  }
  return normalized(r);
}

ProjPoint limit_ratio(const Laurent& a0, const Laurent& b0) {
  Laurent a = normalized(a0), b = normalized(b0);
  if (a.coeff.empty() && b.coeff.empty()) throw DomainError("limit of 0/0");
  if (a.coeff.empty()) return ProjPoint::zero();
  if (b.coeff.empty()) return ProjPoint::infinity();
  if (a.low > b.low) return ProjPoint::zero();
  if (a.low < b.low) return ProjPoint::infinity();
  return ProjPoint(a.coeff.front(), b.coeff.front());
}

std::vector<Laurent> random_curves(int n, std::mt19937_64& rng) {
  static const Scalar pool[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(Rational(1, 2)), Scalar(3), Scalar(-2),
                                Scalar(Rational(-5, 3))};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(std::size(pool)) - 1);
  std::uniform_int_distribution<int> coin(0, 2);
  const int orders = 4;  // t^-1 .. t^2
  while (true) {
    std::vector<Laurent> xs(static_cast<std::size_t>(n), Laurent{-1, std::vector<Scalar>(orders, Scalar(0))});
    for (int m = 0; m < orders; ++m) {
      if (m == 0 && coin(rng) != 0) continue;  // usually no divergent term
      std::uniform_int_distribution<int> classes(1, n);
      int k = classes(rng);
      std::vector<Scalar> value(static_cast<std::size_t>(k));
      for (auto& v : value) v = coin(rng) == 0 ? Scalar(0) : pool[pick(rng)];
      std::uniform_int_distribution<int> which(0, k - 1);
      for (auto& x : xs) x.coeff[static_cast<std::size_t>(m)] = value[static_cast<std::size_t>(which(rng))];
    }
    for (auto& x : xs) x = normalized(x);
    bool distinct = true;
    for (int a = 0; a < n && distinct; ++a) {
      for (int b = a + 1; b < n && distinct; ++b) {
        if ((xs[static_cast<std::size_t>(a)] - xs[static_cast<std::size_t>(b)]).coeff.empty()) distinct = false;
      }
    }
    if (distinct) return xs;
  }
}

namespace {

Tuple relabel(const Tuple& t, const std::vector<int>& labels) {
  auto map = [&](int x) { return labels[static_cast<std::size_t>(x - 1)]; };
  Tuple out;
  out.labels = labels;
  std::sort(out.labels.begin(), out.labels.end());
  out.eps = t.eps;
  for (const auto& [ij, p] : t.nu) out.nu[{map(ij.first), map(ij.second)}] = p;
  for (const auto& [ijk, p] : t.mu) out.mu[{map(ijk[0]), map(ijk[1]), map(ijk[2])}] = p;
  return out;
}

std::vector<Scalar> random_points(std::size_t count, const Scalar& eps, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  std::vector<Scalar> out;
  while (out.size() < count) {
    Scalar x(Rational(num(rng), den(rng)));
    if ((Scalar(1) - eps * x).is_zero() || std::find(out.begin(), out.end(), x) != out.end()) continue;
    out.push_back(x);
  }
  return out;
}

// Flower-type point through the chart of a random set partition.
Tuple sample_by_extension(int n, const std::optional<Scalar>& eps, std::mt19937_64& rng) {
  auto parts = comb::all_set_partitions(n);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  Scalar e = eps.value_or(Scalar(0));
  while (true) {
    const auto& S = parts[pick(rng)];
    std::vector<Tuple> blocks;
    std::vector<int> reps;
    for (const auto& b : S.blocks()) {
      auto lab = b;
      std::sort(lab.begin(), lab.end());
      Tuple bt = orbit_map(random_points(lab.size(), e, rng), e);
      if (!eps) bt.eps.reset();
      blocks.push_back(relabel(bt, lab));
      reps.push_back(lab.front());
    }
    std::sort(reps.begin(), reps.end());
    Tuple core = relabel(orbit_map(random_points(reps.size(), e, rng), e), reps);
    if (!eps) core.eps.reset();
    try {
      return extend_nu(S, blocks, core, eps);
    } catch (const InvariantViolation&) {
    }
  }
}

}  // namespace

Tuple sample_member(Variety v, int n, const Scalar& eps, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  if ((v == Variety::Flower || v == Variety::DeformedFlower) && coin(rng) == 0) {
    return sample_by_extension(n, v == Variety::DeformedFlower ? std::optional<Scalar>(eps) : std::nullopt, rng);
  }
  auto xs = random_curves(n, rng);
  Tuple t;
  t.labels = iota_labels(n);
  if (is_deformed(v)) t.eps = eps;
  Laurent e = Laurent::constant(is_deformed(v) ? eps : Scalar(0));
  Laurent one = Laurent::constant(Scalar(1));
  auto x = [&](int i) -> const Laurent& { return xs[static_cast<std::size_t>(i - 1)]; };
  if (v == Variety::LosevManin) {
    for (auto& c : xs) {
      if (c.coeff.empty()) c = one;
    }
  }
  for (auto [i, j] : ordered_pairs(t.labels)) {
    switch (v) {
      case Variety::LosevManin: t.nu[{i, j}] = limit_ratio(x(i), x(j)); break;
      case Variety::Flower: t.nu[{i, j}] = limit_ratio(one, x(i) - x(j)); break;
      case Variety::DeformedFlower: t.nu[{i, j}] = limit_ratio(one - e * x(j), x(i) - x(j)); break;
      case Variety::MauWoodward:
      case Variety::DeformedMauWoodward: t.nu[{i, j}] = limit_ratio(e * x(i) - one, x(i) - x(j)); break;
      case Variety::DeligneMumford: break;
    }
  }
  if (has_triples(v)) {
    for (const auto& [i, j, k] : ordered_triples(t.labels)) t.mu[{i, j, k}] = limit_ratio(x(i) - x(k), x(i) - x(j));
  }
  return t;
}

Perturbation perturb(Variety v, const Tuple& t, std::mt19937_64& rng) {
  static const ProjPoint pool[] = {ProjPoint::zero(), ProjPoint::infinity(), ProjPoint::one(),
                                   ProjPoint::finite(Scalar(2)), ProjPoint::finite(Scalar(-1)),
                                   ProjPoint::finite(Scalar(Rational(1, 3)))};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(std::size(pool)));
  Perturbation out{t, ""};
  bool use_mu = !has_pairs(v) || (has_triples(v) && std::uniform_int_distribution<int>(0, 1)(rng) == 1);
  ProjPoint* slot = nullptr;
  if (use_mu) {
    auto keys = ordered_triples(t.labels);
    auto key = keys[std::uniform_int_distribution<std::size_t>(0, keys.size() - 1)(rng)];
    slot = &out.point.mu.at(key);
    out.coordinate = "mu[" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," + std::to_string(key[2]) + "]";
  } else {
    auto keys = ordered_pairs(t.labels);
    auto key = keys[std::uniform_int_distribution<std::size_t>(0, keys.size() - 1)(rng)];
    slot = &out.point.nu.at(key);
    out.coordinate = std::string(v == Variety::LosevManin ? "alpha" : "nu") + "[" + std::to_string(key.first) + "," +
                     std::to_string(key.second) + "]";
  }
  ProjPoint old = *slot;
  while (*slot == old) {
    int k = pick(rng);
    *slot = k == static_cast<int>(std::size(pool)) ? add(old, ProjPoint::one()) : pool[k];
    if (old.is_infinite() && k == static_cast<int>(std::size(pool))) *slot = ProjPoint::zero();
  }
  return out;
}

}  // namespace cactus::proj
