#pragma once

#include <functional>

#include "brs/common.hpp"

namespace brs {

struct LimitResult {
  cplx value;
  /// Smallest difference between successive diagonal extrapolants.
  double change;
  bool converged;
};

/// lim_{t -> 1-} g(t) from samples at t = 1 - 2^-s, s = s_min..s_max, by
/// Richardson extrapolation (Neville tableau, ratio 2). Converged when two
/// successive diagonal entries differ by less than tol * max(1, |value|).
/// Throws LimitUnstable when the best change exceeds fail_tol.
LimitResult radial_limit(const std::function<cplx(double)>& g, double tol = 1e-8, double fail_tol = 1e-6,
                         int s_min = 4, int s_max = 12);

}  // namespace brs
