#include "cactus/realgeometry/path.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "cactus/errors.hpp"

namespace cactus::real {

namespace {

using cd = std::complex<double>;

PathPoint first_half(int n, int k, double t, double s, const RationalDiffeo& f) {
  PathPoint out;
  out.n = n;
  out.k = k;
  out.eps = cd(0, s);
  double cot_n = 1 / std::tan(std::numbers::pi / n);
  double cot_m = k < n ? 1 / std::tan(std::numbers::pi / (n - k + 1)) : 0;
  double fa = f.eval(2 * t);
  bool a_inf = std::isinf(fa);
  cd a = a_inf ? cd(0) : cd(s / 2 * cot_n - fa, s / 2);
  cd b(s / 2 * ((1 - 2 * t) * cot_n + 2 * t * cot_m), s / 2);

  // Consecutive coordinates nu_{j,j+1}, j = 1..n-1.
  std::vector<CPoint> c(static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j) c[static_cast<std::size_t>(j)] = j < k ? CPoint{a, a_inf} : CPoint{b, false};

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      CPoint nu;
      if (s > 0) {
        // alpha = 1 - eps / nu is multiplicative along the order.
        cd prod = 1;
        bool all_inf = true;
        for (int m = i; m < j; ++m) {
          const auto& cm = c[static_cast<std::size_t>(m)];
          if (!cm.infinite) {
            prod *= cd(1) - out.eps / cm.value;
            all_inf = false;
          }
        }
        nu = all_inf ? CPoint{cd(0), true} : CPoint{out.eps / (cd(1) - prod), false};
      } else {
        // delta = 1 / nu is additive along the order.
        cd sum = 0;
        bool some_inf = false;
        for (int m = i; m < j; ++m) {
          const auto& cm = c[static_cast<std::size_t>(m)];
          if (cm.infinite) continue;
          if (std::abs(cm.value) == 0) {
            some_inf = true;
          } else {
            sum += cd(1) / cm.value;
          }
        }
        if (some_inf) {
          nu = CPoint{cd(0), false};
        } else if (std::abs(sum) == 0) {
          nu = CPoint{cd(0), true};
        } else {
          nu = CPoint{cd(1) / sum, false};
        }
      }
      out.nu[{i, j}] = nu;
      out.nu[{j, i}] = nu.infinite ? nu : CPoint{out.eps - nu.value, false};
    }
  }

  bool degenerate = a_inf || std::abs(a) == 0;
  for (int x = 1; x <= k; ++x) {
    for (int y = 1; y <= k; ++y) {
      for (int z = 1; z <= k; ++z) {
        if (x == y || y == z || x == z) continue;
        if (degenerate) {
          out.mu[{x, y, z}] = CPoint{cd(static_cast<double>(z - x) / (y - x)), false};
        } else {
          out.mu[{x, y, z}] = CPoint{out.nu.at({x, y}).value / out.nu.at({x, z}).value, false};
        }
      }
    }
  }
  return out;
}

}  // namespace

PathPoint affine_cactus_path(int n, int k, double t, double s, const RationalDiffeo& f) {
  if (n < 3 || k < 2 || k > n) throw DomainError("affine_cactus_path needs n >= 3 and 1 < k <= n");
  if (!(t >= 0 && t <= 1) || !(s >= 0 && s <= 1)) throw DomainError("affine_cactus_path needs t, s in [0,1]");
  if (t <= 0.5) return first_half(n, k, t, s, f);
  PathPoint base = first_half(n, k, 1 - t, s, f);
  auto w = [k](int i) { return i <= k ? k + 1 - i : i; };
  PathPoint out = base;
  for (auto& [ij, p] : out.nu) p = base.nu.at({w(ij.first), w(ij.second)});
  for (auto& [ijk, p] : out.mu) p = base.mu.at({w(ijk[0]), w(ijk[1]), w(ijk[2])});
  return out;
}

}  // namespace cactus::real
