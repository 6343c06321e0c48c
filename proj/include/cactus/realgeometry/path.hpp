#pragma once

#include <complex>
#include <map>

#include "cactus/projective/varieties.hpp"
#include "cactus/realgeometry/extreal.hpp"

namespace cactus::real {

// A complex number or the point at infinity, in floating point.
struct CPoint {
  std::complex<double> value;
  bool infinite = false;
};

struct PathPoint {
  int n = 0;
  int k = 0;
  std::complex<double> eps;
  std::map<proj::Pair, CPoint> nu;
  // mu_abc for a, b, c in {1..k}, the extra coordinates of the chart through
  // which the path crosses t = 1/2.
  std::map<proj::Triple, CPoint> mu;
};

// H(t,s): nu_{j,j+1} = a(t,s) for j < k and b(t,s) for j >= k, eps = i s, with
// the remaining nu from the deformed flower relations; for t > 1/2 the
// reflection w_{1k} of H(1-t, s). The only floating-point map.
PathPoint affine_cactus_path(int n, int k, double t, double s, const RationalDiffeo& f = default_diffeo());

inline constexpr double kPathTolerance = 1e-9;

}  // namespace cactus::real
