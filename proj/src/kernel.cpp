#include "brs/kernel.hpp"

#include <cmath>

#include "brs/limits.hpp"

namespace brs {

namespace {

cplx ipow(cplx z, int p) {
  cplx out = 1.0;
  for (int i = 0; i < p; ++i) out *= z;
  return out;
}

/// Taylor coefficients of z^p around z0.
std::vector<cplx> monomial_series(cplx z0, int p, int K) {
  std::vector<cplx> s(static_cast<std::size_t>(K) + 1, cplx{});
  for (int n = 0; n <= std::min(p, K); ++n) s[n] = binomial(p, n) * ipow(z0, p - n);
  return s;
}

/// Taylor coefficients of (1 - conj(lambda) z)^-e around z0, where d = 1 - conj(lambda) z0.
std::vector<cplx> inverse_power_series(cplx lambda, cplx d, int e, int K) {
  std::vector<cplx> s(static_cast<std::size_t>(K) + 1);
  const cplx ratio = std::conj(lambda) / d;
  const cplx base = 1.0 / ipow(d, e);
  cplx rn = 1.0;
  for (int n = 0; n <= K; ++n) {
    s[n] = base * binomial(e + n - 1, n) * rn;
    rn *= ratio;
  }
  return s;
}

}  // namespace

DerivativeKernel::DerivativeKernel(PowerFunction F, cplx lambda, int ell)
    : F_(std::move(F)), lambda_(lambda), ell_(ell) {
  if (ell < 0) throw Error(ErrorKind::InvalidInput, "derivative order must be nonnegative");
  cF_ = F_.derivatives(lambda, ell);
  for (auto& c : cF_) c = std::conj(c);
  if (std::abs(lambda) < 1.0 - 1e-12) return;

  // Keep the expansion disk a third of the way to the nearest singularity of F,
  // so its Taylor coefficients there decay at least like 2^-n.
  double reach = INFINITY;
  for (const auto& b : F_.poles()) reach = std::min(reach, std::abs(b.value - lambda));
  if (!F_.integer_power())
    for (const auto& a : F_.zeros()) reach = std::min(reach, std::abs(a.value - lambda));
  radius_ = std::min(0.25, reach / 3.0);
  center_ = lambda * (1.0 - radius_);
  constexpr int kOrder = 56;
  near_ = Polynomial(leibniz_jet(center_, kOrder));
}

std::vector<cplx> DerivativeKernel::jet(cplx z0, int K) const {
  if (near_ && std::abs(1.0 - std::conj(lambda_) * z0) < radius_ && std::abs(z0 - center_) <= radius_ &&
      std::abs(z0) < 1.0)
    return near_->taylor_at(z0 - center_, K);
  return leibniz_jet(z0, K);
}

std::vector<cplx> DerivativeKernel::leibniz_jet(cplx z0, int K) const {
  const cplx d = 1.0 - std::conj(lambda_) * z0;
  if (std::abs(d) < 1e-15) throw Error(ErrorKind::InvalidInput, "kernel evaluated at its singular point");
  const auto Fs = F_.taylor_at(z0, K);

  std::vector<cplx> head(Fs.size());
  for (std::size_t n = 0; n < Fs.size(); ++n) head[n] = -cF_[0] * Fs[n];
  head[0] += 1.0;
  auto out = series_multiply(series_multiply(head, monomial_series(z0, ell_, K), K),
                             inverse_power_series(lambda_, d, ell_ + 1, K), K);
  for (auto& c : out) c *= factorial(ell_);

  for (int k = 1; k <= ell_; ++k) {
    const auto t = series_multiply(series_multiply(Fs, monomial_series(z0, ell_ - k, K), K),
                                   inverse_power_series(lambda_, d, ell_ - k + 1, K), K);
    const cplx w = binomial(ell_, k) * cF_[k] * factorial(ell_ - k);
    for (int n = 0; n <= K; ++n) out[n] -= w * t[n];
  }
  return out;
}

cplx DerivativeKernel::operator()(cplx z) const { return jet(z, 0)[0]; }

std::vector<cplx> DerivativeKernel::derivatives(cplx z, int K) const {
  auto t = jet(z, K);
  for (int k = 0; k <= K; ++k) t[k] *= factorial(k);
  return t;
}

PowerSpace::PowerSpace(const RationalFunction& q, double r) : q_(q.normalized()), F_(q_, r) {
  try {
    pair_ = pythagorean_mate(q_);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inner) throw;
  }
  if (pair_) zeros_ = boundary_zeros(pair_->a);
}

std::optional<int> PowerSpace::zero_index(cplx zeta) const {
  for (int j = 0; j < static_cast<int>(zeros_.zeros.size()); ++j)
    if (std::abs(zeros_.zeros[j].zeta - zeta) <= 1e-8) return j;
  return std::nullopt;
}

void PowerSpace::validate(cplx lambda, int ell) const {
  if (ell < 0) throw Error(ErrorKind::InvalidInput, "derivative order must be nonnegative");
  const double mod = std::abs(lambda);
  if (mod > 1.0 + 1e-12) throw Error(ErrorKind::InvalidInput, "kernel point outside the closed disk");
  if (mod < 1.0 - 1e-8) return;
  if (auto j = zero_index(lambda)) {
    if (ell <= zeros_.zeros[*j].m - 1) return;
  } else if (mod < 1.0) {
    return;
  }
  throw Error(ErrorKind::KernelUndefined, "kernel undefined: ell exceeds m_j - 1");
}

DerivativeKernel PowerSpace::kernel(cplx lambda, int ell) const {
  validate(lambda, ell);
  if (auto j = zero_index(lambda)) lambda = zeros_.zeros[*j].zeta;
  return DerivativeKernel(F_, lambda, ell);
}

cplx kernel_eval(const PowerSpace& space, cplx lambda, int ell, cplx z) {
  if (std::abs(z) >= 1.0) throw Error(ErrorKind::InvalidInput, "kernel evaluation point must lie in the open disk");
  return space.kernel(lambda, ell)(z);
}

cplx kernel_eval(const RationalFunction& q, const KernelSpec& spec, cplx z) {
  return kernel_eval(PowerSpace(q, spec.r), spec.lambda, spec.ell, z);
}

RationalFunction kernel_rational_form(const PowerSpace& space, cplx lambda, int ell) {
  const auto n = space.F().integer_power();
  if (!n) throw Error(ErrorKind::InvalidInput, "closed-form kernels need an integer power");
  space.validate(lambda, ell);
  const auto j = space.zero_index(lambda);
  if (j) lambda = space.zeros().zeros[*j].zeta;

  const Polynomial P = space.q().num().pow(*n);
  const Polynomial Q = space.q().den().pow(*n);
  auto cF = space.F().derivatives(lambda, ell);
  for (auto& c : cF) c = std::conj(c);
  const Polynomial lin{1.0, -std::conj(lambda)};

  Polynomial num = factorial(ell) * ((Q - cF[0] * P) * Polynomial::monomial(1.0, ell));
  for (int k = 1; k <= ell; ++k)
    num = num - (binomial(ell, k) * factorial(ell - k) * cF[k]) * (P * Polynomial::monomial(1.0, ell - k) * lin.pow(k));

  if (!j) return RationalFunction(num, Q * lin.pow(ell + 1));
  try {
    return RationalFunction(poly_divide_exact(num, lin.pow(ell + 1), 1e-8), Q);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDivisible) throw;
    throw Error(ErrorKind::KernelNotAnalytic, "kernel not analytic: spec inconsistent with mate zeros");
  }
}

RationalFunction kernel_rational_form(const RationalFunction& q, const KernelSpec& spec) {
  return kernel_rational_form(PowerSpace(q, spec.r), spec.lambda, spec.ell);
}

cplx kernel_z_derivative_at_boundary(const PowerSpace& space, cplx lambda, int ell, cplx zeta_prime, int ell_prime,
                                     LimitMethod method) {
  space.validate(zeta_prime, ell_prime);
  if (!space.zero_index(zeta_prime))
    throw Error(ErrorKind::InvalidInput, "boundary derivative requested away from the mate's zeros");
  if (method == LimitMethod::Rational)
    return kernel_rational_form(space, lambda, ell).derivatives(zeta_prime, ell_prime)[ell_prime];
  const auto v = space.kernel(lambda, ell);
  return radial_limit([&](double t) { return v.derivatives(t * zeta_prime, ell_prime)[ell_prime]; }).value;
}

Gram gram_matrix(const PowerSpace& space, std::optional<LimitMethod> method) {
  const LimitMethod m =
      method.value_or(space.F().integer_power() ? LimitMethod::Rational : LimitMethod::RadialExtrapolation);
  Gram g{space.zeros().index(), {}};
  const int N = static_cast<int>(g.index.size());
  g.entries.resize(N, N);
  for (int k = 0; k < N; ++k) {
    const auto [jk, lk] = g.index[k];
    const cplx lam = space.zeros().zeros[jk].zeta;
    if (m == LimitMethod::Rational) {
      const auto form = kernel_rational_form(space, lam, lk);
      for (int i = 0; i < N; ++i) {
        const auto [ji, li] = g.index[i];
        g.entries(i, k) = form.derivatives(space.zeros().zeros[ji].zeta, li)[li];
      }
    } else {
      const auto v = space.kernel(lam, lk);
      for (int i = 0; i < N; ++i) {
        const auto [ji, li] = g.index[i];
        const cplx zeta = space.zeros().zeros[ji].zeta;
        g.entries(i, k) = radial_limit([&](double t) { return v.derivatives(t * zeta, li)[li]; }).value;
      }
    }
  }
  return g;
}

}  // namespace brs
