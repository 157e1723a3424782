#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "brs/mate.hpp"
#include "brs/power.hpp"

namespace brs {

struct KernelSpec {
  double r = 1.0;
  cplx lambda;
  int ell = 0;
};

/// v(z) = d^ell/d(conj lambda)^ell of the kernel (1 - conj(F(lambda)) F(z)) / (1 - conj(lambda) z),
/// F = q^r, expanded by the Leibniz rule.
class DerivativeKernel {
 public:
  DerivativeKernel(PowerFunction F, cplx lambda, int ell);

  cplx lambda() const { return lambda_; }
  int ell() const { return ell_; }

  cplx operator()(cplx z) const;
  /// Taylor coefficients of v around z0 up to order K.
  std::vector<cplx> jet(cplx z0, int K) const;
  /// v^(k)(z) for k = 0..K.
  std::vector<cplx> derivatives(cplx z, int K) const;

 private:
  std::vector<cplx> leibniz_jet(cplx z0, int K) const;

  PowerFunction F_;
  cplx lambda_;
  int ell_;
  std::vector<cplx> cF_;  // conj(F^(k)(lambda)), k = 0..ell
  // For unimodular lambda the Leibniz terms cancel like |1 - conj(lambda) z|^-(ell+1)
  // as z -> lambda. Inside the disk |z - center| <= radius the kernel is instead
  // evaluated from its Taylor polynomial at the interior point center.
  std::optional<Polynomial> near_;
  cplx center_;
  double radius_ = 0.0;
};

/// q, the power r, the mate of q and its boundary zeros: everything the
/// boundary kernels of the space with symbol q^r depend on.
class PowerSpace {
 public:
  PowerSpace(const RationalFunction& q, double r);

  const RationalFunction& q() const { return q_; }
  double r() const { return F_.r(); }
  const PowerFunction& F() const { return F_; }
  /// Empty when q is inner.
  const std::optional<PythagoreanPair>& pair() const { return pair_; }
  const BoundaryZeroSet& zeros() const { return zeros_; }
  int N() const { return zeros_.N(); }

  /// Throws KernelUndefined unless lambda is interior, or a boundary zero
  /// zeta_j of the mate with ell <= m_j - 1.
  void validate(cplx lambda, int ell) const;
  /// Index of the boundary zero at zeta (within 1e-8), if any.
  std::optional<int> zero_index(cplx zeta) const;

  DerivativeKernel kernel(cplx lambda, int ell) const;
  DerivativeKernel boundary_kernel(int j, int ell) const { return kernel(zeros_.zeros.at(j).zeta, ell); }

 private:
  RationalFunction q_;
  PowerFunction F_;
  std::optional<PythagoreanPair> pair_;
  BoundaryZeroSet zeros_;
};

cplx kernel_eval(const PowerSpace& space, cplx lambda, int ell, cplx z);
cplx kernel_eval(const RationalFunction& q, const KernelSpec& spec, cplx z);

/// Closed form for integer r, with the boundary factor (1 - conj(lambda) z)^(ell+1) divided out.
RationalFunction kernel_rational_form(const PowerSpace& space, cplx lambda, int ell);
RationalFunction kernel_rational_form(const RationalFunction& q, const KernelSpec& spec);

enum class LimitMethod { Rational, RadialExtrapolation };

/// ell_prime-th z-derivative of v^ell_lambda at the boundary zero zeta_prime.
cplx kernel_z_derivative_at_boundary(const PowerSpace& space, cplx lambda, int ell, cplx zeta_prime, int ell_prime,
                                     LimitMethod method);

struct Gram {
  std::vector<std::pair<int, int>> index;
  Eigen::MatrixXcd entries;
};

/// G(i, k) = <v_k, v_i> = v_k^(ell_i)(zeta_{j_i}), rows and columns in zeros().index() order.
/// Rational limits when r is an integer unless a method is forced.
Gram gram_matrix(const PowerSpace& space, std::optional<LimitMethod> method = std::nullopt);

}  // namespace brs
