#include "brs/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "brs/limits.hpp"

namespace brs {

double HardyVector::norm() const { return norm(0, M()); }

double HardyVector::norm(int from, int to) const {
  double s = 0.0;
  for (int k = std::max(from, 0); k <= std::min(to, M()); ++k) s += std::norm(coeffs[k]);
  return std::sqrt(s);
}

HardyVector HardyVector::resized(int M) const {
  std::vector<cplx> c(static_cast<std::size_t>(M) + 1, cplx{});
  std::copy_n(coeffs.begin(), std::min(coeffs.size(), c.size()), c.begin());
  return HardyVector(std::move(c));
}

std::vector<cplx> HardyVector::jet(cplx z0, int K) const {
  std::vector<cplx> b = coeffs;
  std::vector<cplx> t(static_cast<std::size_t>(K) + 1, cplx{});
  // Repeated synthetic division by (z - z0).
  for (int n = 0; n <= K && !b.empty(); ++n) {
    cplx acc{};
    for (int k = static_cast<int>(b.size()) - 1; k >= 0; --k) {
      const cplx next = acc * z0 + b[k];
      b[k] = acc;
      acc = next;
    }
    t[n] = acc;
    b.pop_back();
  }
  return t;
}

HardyVector analytic_coeffs(const RationalFunction& h, int M) {
  return HardyVector(series_divide(h.num().coeffs(), h.den().coeffs(), M));
}

HardyVector analytic_coeffs(const std::function<cplx(cplx)>& h, int M) {
  int N = 4096;
  while (N < 64 * (M + 1)) N *= 2;
  const double rho = std::pow(1e-8, 1.0 / N);
  std::vector<cplx> samples(N), spectrum;
  for (int j = 0; j < N; ++j) samples[j] = h(std::polar(rho, 2.0 * std::numbers::pi * j / N));
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, samples);

  std::vector<cplx> c(static_cast<std::size_t>(M) + 1);
  double scale = 1.0;
  for (int k = 0; k <= M; ++k) {
    c[k] = spectrum[k] / (double(N) * scale);
    scale *= rho;
  }
  HardyVector out(std::move(c));
  const int q = std::max(1, (M + 1) / 4);
  double head = 0.0, tail = 0.0;
  for (int k = 0; k < q; ++k) head = std::max(head, std::abs(out.coeffs[k]));
  for (int k = M + 1 - q; k <= M; ++k) tail = std::max(tail, std::abs(out.coeffs[k]));
  if (!std::isfinite(head) || !std::isfinite(tail) || (tail > head && tail > 1e-14))
    throw Error(ErrorKind::NotAnalytic, "not analytic to truncation accuracy");
  return out;
}

ToeplitzSymbol::ToeplitzSymbol(int M, std::vector<cplx> c) : M_(M), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != 2 * M + 1)
    throw Error(ErrorKind::InvalidInput, "symbol needs coefficients on -M..M");
}

ToeplitzSymbol ToeplitzSymbol::conj_analytic(const HardyVector& a) {
  const int M = a.M();
  std::vector<cplx> c(2 * M + 1, cplx{});
  for (int k = 0; k <= M; ++k) c[M - k] = std::conj(a[k]);
  return {M, std::move(c)};
}

ToeplitzSymbol ToeplitzSymbol::analytic(const HardyVector& a) {
  const int M = a.M();
  std::vector<cplx> c(2 * M + 1, cplx{});
  for (int k = 0; k <= M; ++k) c[M + k] = a[k];
  return {M, std::move(c)};
}

ToeplitzSymbol ToeplitzSymbol::trig(const TrigPolynomial& w) {
  const auto c = w.coeffs();
  return {w.n(), std::vector<cplx>(c.begin(), c.end())};
}

HardyVector toeplitz_apply(const ToeplitzSymbol& phi, const HardyVector& f) {
  const int M = f.M();
  std::vector<cplx> out(static_cast<std::size_t>(M) + 1, cplx{});
  for (int i = 0; i <= M; ++i) {
    const int lo = std::max(0, i - phi.M()), hi = std::min(M, i + phi.M());
    for (int k = lo; k <= hi; ++k) out[i] += phi[i - k] * f.coeffs[k];
  }
  return HardyVector(std::move(out));
}

Eigen::MatrixXcd toeplitz_matrix(const ToeplitzSymbol& phi, int M) {
  Eigen::MatrixXcd T(M + 1, M + 1);
  for (int i = 0; i <= M; ++i)
    for (int k = 0; k <= M; ++k) T(i, k) = phi[i - k];
  return T;
}

namespace {

/// Hager's estimate of the 1-norm of T^{-1} for upper triangular T.
double inverse_norm1_estimate(const Eigen::MatrixXcd& T) {
  const auto U = T.triangularView<Eigen::Upper>();
  const Eigen::Index n = T.rows();
  Eigen::VectorXcd x = Eigen::VectorXcd::Constant(n, 1.0 / double(n));
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    const Eigen::VectorXcd y = U.solve(x);
    est = y.lpNorm<1>();
    Eigen::VectorXcd xi(n);
    for (Eigen::Index i = 0; i < n; ++i) xi(i) = std::abs(y(i)) > 0 ? y(i) / std::abs(y(i)) : cplx(1.0);
    const Eigen::VectorXcd z = U.adjoint().solve(xi);
    Eigen::Index j;
    const double zmax = z.cwiseAbs().maxCoeff(&j);
    if (zmax <= std::real(z.dot(x))) break;
    x.setZero();
    x(j) = 1.0;
  }
  return est;
}

}  // namespace

MembershipSolution membership_solve(const RationalFunction& a, const HardyVector& f, int M) {
  const HardyVector ahat = analytic_coeffs(a, M);
  const Eigen::MatrixXcd T = toeplitz_matrix(ToeplitzSymbol::conj_analytic(ahat), M);
  const HardyVector fM = f.resized(M);
  const Eigen::Map<const Eigen::VectorXcd> rhs(fM.coeffs.data(), M + 1);
  const Eigen::VectorXcd g = T.triangularView<Eigen::Upper>().solve(rhs);
  const double residual = (T * g - rhs).norm();
  const double condition = T.cwiseAbs().colwise().sum().maxCoeff() * inverse_norm1_estimate(T);
  return {HardyVector(std::vector<cplx>(g.data(), g.data() + g.size())), residual, condition};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

MembershipLadder membership_ladder(const RationalFunction& a, const HardyVector& f, int M0) {
  if (M0 < 4) throw Error(ErrorKind::InvalidInput, "truncation too small for a membership ladder");
  std::vector<int> rungs{M0, 2 * M0, 4 * M0};
  if (f.M() < 4 * M0) rungs = {f.M() / 4, f.M() / 2, f.M()};
  if (rungs[0] < 1) throw Error(ErrorKind::InvalidInput, "input too short for a membership ladder");

  MembershipLadder out;
  for (int M : rungs) {
    auto sol = membership_solve(a, f, M);
    out.M.push_back(M);
    out.residual.push_back(sol.residual);
    out.solution_norm.push_back(sol.g.norm());
    out.condition.push_back(sol.condition);
    out.g = std::move(sol.g);
  }
  auto growth = [&](int i) {
    const double prev = out.solution_norm[i - 1];
    return prev > 0 ? out.solution_norm[i] / prev : (out.solution_norm[i] > 0 ? INFINITY : 1.0);
  };
  const double top_residual = out.residual.back();
  if (top_residual < 1e-6 && growth(2) <= 1.05)
    out.verdict = Verdict::Member;
  else if ((growth(1) >= 1.2 && growth(2) >= 1.2) || top_residual > 1e-2)
    out.verdict = Verdict::NonMember;
  else
    out.verdict = Verdict::Inconclusive;
  return out;
}

cplx conj_identity_constant(const BoundaryZeroSet& zeros) {
  cplx kappa = 1.0;
  for (const auto& z : zeros.zeros) kappa *= std::pow(-std::conj(z.zeta), z.m);
  return kappa;
}

double conj_identity_error(const BoundaryZeroSet& zeros, int samples) {
  const Polynomial a = zeros.monic_product();
  const cplx kappa = conj_identity_constant(zeros);
  const int N = zeros.N();
  double err = 0.0;
  for (int i = 0; i < samples; ++i) {
    const cplx zeta = std::polar(1.0, 2.0 * std::numbers::pi * (i + 0.5) / samples);
    const cplx az = a(zeta);
    err = std::max(err, std::abs(std::conj(az) - std::pow(std::conj(zeta), N) * az * kappa));
  }
  return err;
}

VanishingReport fourier_vanishing_check(const BoundaryZeroSet& zeros, const HardyVector& g, int M, double tol) {
  const Polynomial a = zeros.monic_product();
  const int N = zeros.N();
  if (M < N) throw Error(ErrorKind::InvalidInput, "truncation below the number of boundary conditions");
  const HardyVector gM = g.resized(M);
  const HardyVector Tg = toeplitz_apply(ToeplitzSymbol::conj_analytic(analytic_coeffs(RationalFunction(a), M)), gM);

  VanishingReport rep;
  double lim_max = 0.0, low_max = 0.0;
  for (const auto& [j, ell] : zeros.index()) {
    const cplx zeta = zeros.zeros[j].zeta;
    const int l = ell;
    const cplx v = radial_limit([&](double t) { return Tg.jet(t * zeta, l)[l] * factorial(l); }).value;
    rep.limits.push_back(v);
    lim_max = std::max(lim_max, std::abs(v));
  }
  for (int k = 0; k < N; ++k) {
    rep.low_coeffs.push_back(std::abs(gM[k]));
    low_max = std::max(low_max, std::abs(gM[k]));
  }
  rep.limits_vanish = lim_max < tol;
  rep.coeffs_vanish = low_max < tol;
  if (rep.coeffs_vanish) {
    std::vector<cplx> shifted(gM.coeffs.begin() + N, gM.coeffs.end());
    const auto prod = series_multiply(a.coeffs(), shifted, M);
    const cplx kappa = conj_identity_constant(zeros);
    double err = 0.0;
    for (int k = 0; k <= M; ++k) err = std::max(err, std::abs(Tg[k] - kappa * prod[k]));
    rep.identity_error = err;
  }
  return rep;
}

std::vector<Polynomial> phi_basis(const BoundaryZeroSet& zeros) {
  std::vector<Polynomial> out;
  const auto& zs = zeros.zeros;
  for (const auto& [j, ell] : zeros.index()) {
    Polynomial p = Polynomial::monomial(1.0, ell) * Polynomial{-zs[j].zeta, 1.0}.pow(zs[j].m - ell - 1);
    for (int k = 0; k < static_cast<int>(zs.size()); ++k)
      if (k != j) p = p * Polynomial{-zs[k].zeta, 1.0}.pow(zs[k].m);
    out.push_back(p);
  }
  return out;
}

Eigen::MatrixXcd phi_evaluation_matrix(const BoundaryZeroSet& zeros) {
  const auto basis = phi_basis(zeros);
  const auto idx = zeros.index();
  const int N = static_cast<int>(idx.size());
  Eigen::MatrixXcd E(N, N);
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i) {
      const auto [j, ell] = idx[i];
      E(i, k) = basis[k].taylor_at(zeros.zeros[j].zeta, ell)[ell] * factorial(ell);
    }
  return E;
}

}  // namespace brs
