#pragma once

#include <vector>

#include "brs/poly.hpp"

namespace brs {

/// (a, q) with |a|^2 + |q|^2 = 1 on the circle, a outer and a(0) > 0.
struct PythagoreanPair {
  RationalFunction q;
  RationalFunction a;
};

struct BoundaryZero {
  cplx zeta;
  int m = 1;
};

/// Zeros of the mate on the unit circle. `s` is the cofactor in
/// a = s * prod (z - zeta_j)^{m_j}; it has no zeros or poles on the closed disk.
struct BoundaryZeroSet {
  std::vector<BoundaryZero> zeros;
  RationalFunction s;

  int N() const;
  /// prod_j (z - zeta_j)^{m_j}
  Polynomial monic_product() const;
  /// Flattened (j, ell) index with ell < m_j, in the order used by Gram matrices.
  std::vector<std::pair<int, int>> index() const;
};

PythagoreanPair pythagorean_mate(const RationalFunction& q);

BoundaryZeroSet boundary_zeros(const RationalFunction& a);

struct CoronaEstimate {
  double infimum;
  /// Lipschitz bound times the half-diameter of the finest cell examined.
  double slack;
};

/// inf over the closed disk of |a| + |q| by adaptive refinement of a polar grid.
CoronaEstimate corona_infimum(const RationalFunction& a, const RationalFunction& q, int depth = 8);

enum class Extremality { NonExtreme, ExtremeInvertible, ExtremeNonInvertible };

const char* to_string(Extremality e);

Extremality classify(const RationalFunction& b);

struct RatioBounds {
  double lo;
  double hi;
};

/// min/max over the circle of sqrt((1 - |q|^{2r}) / (1 - |q|^2)), which is
/// |a_r| / |a| for the mate a_r of q^r.
RatioBounds mate_modulus_ratio_bounds(const RationalFunction& q, double r, int grid = 4096);

}  // namespace brs
