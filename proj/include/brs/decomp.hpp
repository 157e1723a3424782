#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brs/hardy.hpp"
#include "brs/kernel.hpp"

namespace brs {

/// f = prod (z - zeta_j)^{m_j} h + sum c_{j,ell} v^ell_{r,zeta_j}.
struct Decomposition {
  std::vector<std::pair<int, int>> index;
  Eigen::VectorXcd c;
  HardyVector h;
  /// Set when h came from exact polynomial division (integer r, rational f).
  std::optional<RationalFunction> h_exact;
  /// Boundary derivative data f^(ell)(zeta_j).
  Eigen::VectorXcd d;
  double gram_condition = 1.0;
  /// ||G c - d|| / ||d||
  double backward_error = 0.0;
  /// ||h(M/2..M)|| / ||h||
  double tail_norm = 0.0;
  bool h_certified = true;
  Verdict verdict = Verdict::Member;
  std::optional<MembershipLadder> membership;
};

/// Rational f is a member whenever it is analytic on the closed disk, which
/// its construction already guarantees.
Decomposition decompose(const PowerSpace& space, const RationalFunction& f, int M);
/// Numeric f is gated by membership_ladder on rungs f.M()/4, f.M()/2, f.M();
/// throws NotMember or Inconclusive otherwise.
Decomposition decompose(const PowerSpace& space, const HardyVector& f);

/// prod (z - zeta_j)^{m_j} h(z) + sum c v(z).
cplx reconstruct(const PowerSpace& space, const Decomposition& dec, cplx z);

/// Taylor coefficients of a kernel to degree M: exact for integer r, FFT otherwise.
HardyVector kernel_coeffs(const PowerSpace& space, int j, int ell, int M);

struct OrthogonalityReport {
  cplx limit;
  double change;
  bool pass;
};

/// Radial limit of (a g)^(ell)(t zeta) with a the mate; pass iff |limit| < tol.
OrthogonalityReport verify_orthogonality(const PowerSpace& space, const Polynomial& g, cplx zeta, int ell,
                                         double tol = 1e-6);

/// f = prod (z - zeta_j)^{m_j} h + p with deg p < N (Hermite interpolation at the zeros).
struct AlgebraicSplit {
  Polynomial p;
  RationalFunction h;
};
AlgebraicSplit algebraic_decompose(const BoundaryZeroSet& zeros, const RationalFunction& f);

struct CheckItem {
  std::string name;
  bool pass;
  std::string detail;
};

struct SetsEqualReport {
  std::vector<CheckItem> items;
  bool pass;
};

/// Checks that the space for q^r and the space for q agree at truncation M:
/// kernels for q^r lie in the range of T_{conj a}, kernels for q decompose
/// under q^r, and |a_r| / |a| is bounded above and below on the circle.
SetsEqualReport sets_equal_check(const RationalFunction& q, double r, int M);

}  // namespace brs
