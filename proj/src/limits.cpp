#include "brs/limits.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace brs {

LimitResult radial_limit(const std::function<cplx(double)>& g, double tol, double fail_tol, int s_min, int s_max) {
  const int n = s_max - s_min + 1;
  if (n < 2) throw Error(ErrorKind::InvalidInput, "radial limit needs at least two samples");
  std::vector<std::vector<cplx>> R(n);
  LimitResult best{cplx{}, std::numeric_limits<double>::infinity(), false};
  for (int i = 0; i < n; ++i) {
    const double h = std::ldexp(1.0, -(s_min + i));
    R[i].resize(i + 1);
    R[i][0] = g(1.0 - h);
    for (int k = 1; k <= i; ++k) {
      const double f = std::ldexp(1.0, k) - 1.0;
      R[i][k] = R[i][k - 1] + (R[i][k - 1] - R[i - 1][k - 1]) / f;
    }
    if (i == 0) continue;
    const double change = std::abs(R[i][i] - R[i - 1][i - 1]) / std::max(1.0, std::abs(R[i][i]));
    if (change < best.change) best = {R[i][i], change, change < tol};
  }
  if (!std::isfinite(best.change) || best.change > fail_tol) {
    std::ostringstream msg;
    msg << "limit does not stabilize (best successive change " << best.change << ")";
    throw Error(ErrorKind::LimitUnstable, msg.str());
  }
  return best;
}

}  // namespace brs
