#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "brs/mate.hpp"

namespace brs {

/// Taylor coefficients f(0..M) of an H^2 function.
struct HardyVector {
  std::vector<cplx> coeffs;

  HardyVector() = default;
  explicit HardyVector(std::vector<cplx> c) : coeffs(std::move(c)) {}

  int M() const { return static_cast<int>(coeffs.size()) - 1; }
  cplx operator[](int k) const { return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[k] : cplx{}; }
  double norm() const;
  /// l2 norm of the coefficients with index in [from, to].
  double norm(int from, int to) const;
  /// Copy truncated or zero-padded to degree M.
  HardyVector resized(int M) const;
  /// Taylor coefficients of the truncated series around z0, orders 0..K.
  std::vector<cplx> jet(cplx z0, int K) const;
  cplx operator()(cplx z) const { return jet(z, 0)[0]; }
};

/// Exact Taylor coefficients through the recurrence induced by the denominator.
HardyVector analytic_coeffs(const RationalFunction& h, int M);
/// Taylor coefficients of an analytic closure from FFT samples on a circle of
/// radius rho with rho^N = 1e-8, N >= 64 (M + 1). Throws NotAnalytic when the
/// coefficients do not decay.
HardyVector analytic_coeffs(const std::function<cplx(cplx)>& h, int M);

/// Fourier coefficients of a symbol on -M..M.
class ToeplitzSymbol {
 public:
  ToeplitzSymbol(int M, std::vector<cplx> c);
  /// Symbol conj(a) on the circle for analytic a.
  static ToeplitzSymbol conj_analytic(const HardyVector& a);
  static ToeplitzSymbol analytic(const HardyVector& a);
  static ToeplitzSymbol trig(const TrigPolynomial& w);

  int M() const { return M_; }
  cplx operator[](int k) const { return k >= -M_ && k <= M_ ? c_[k + M_] : cplx{}; }

 private:
  int M_;
  std::vector<cplx> c_;
};

/// P+(phi f), truncated to the degree of f.
HardyVector toeplitz_apply(const ToeplitzSymbol& phi, const HardyVector& f);
/// (M+1) x (M+1) matrix with entry (i, k) = phi(i - k).
Eigen::MatrixXcd toeplitz_matrix(const ToeplitzSymbol& phi, int M);

struct MembershipSolution {
  HardyVector g;
  double residual;
  /// 1-norm condition estimate of the truncated operator.
  double condition;
};

/// Solves the truncated system T_{conj a} g = f at degree M. The truncation is
/// upper triangular with diagonal conj(a(0)), so this is back substitution.
MembershipSolution membership_solve(const RationalFunction& a, const HardyVector& f, int M);

enum class Verdict { Member, NonMember, Inconclusive };
const char* to_string(Verdict v);

struct MembershipLadder {
  std::vector<int> M;
  std::vector<double> residual;
  std::vector<double> solution_norm;
  std::vector<double> condition;
  Verdict verdict;
  HardyVector g;  // solution at the top rung
};

/// membership_solve at M0, 2 M0, 4 M0 (clipped to f.M()). Member when the top
/// residual is below 1e-6 and the solution norm has settled (growth <= 1.05 on the
/// last doubling); non-member when the norm keeps growing (>= 1.2 on both
/// doublings) or the residual stays above 1e-2.
MembershipLadder membership_ladder(const RationalFunction& a, const HardyVector& f, int M0);

struct VanishingReport {
  /// Extrapolated (T_{conj a} g)^(ell)(t zeta_j) as t -> 1, in index() order.
  std::vector<cplx> limits;
  /// |g(0)|, ..., |g(N-1)|.
  std::vector<double> low_coeffs;
  bool limits_vanish;
  bool coeffs_vanish;
  /// max deviation between T_{conj a} g and kappa P+(a conj(z)^N g), when the low coefficients vanish.
  std::optional<double> identity_error;
};

/// a = prod (z - zeta_j)^{m_j}; g is used to truncation M.
VanishingReport fourier_vanishing_check(const BoundaryZeroSet& zeros, const HardyVector& g, int M,
                                        double tol = 1e-6);

/// prod_j (-conj(zeta_j))^{m_j}
cplx conj_identity_constant(const BoundaryZeroSet& zeros);
/// max over `samples` circle points of |conj(a) - conj(zeta)^N a kappa| for the monic product a.
double conj_identity_error(const BoundaryZeroSet& zeros, int samples = 512);

/// phi_{j,ell}(z) = z^ell (z - zeta_j)^{m_j - ell - 1} prod_{k != j} (z - zeta_k)^{m_k}, in index() order.
std::vector<Polynomial> phi_basis(const BoundaryZeroSet& zeros);
/// E(i, k) = phi_k^(ell_i)(zeta_{j_i}).
Eigen::MatrixXcd phi_evaluation_matrix(const BoundaryZeroSet& zeros);

}  // namespace brs
