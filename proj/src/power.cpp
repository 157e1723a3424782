#include "brs/power.hpp"

#include <cmath>
#include <numbers>

namespace brs {

namespace {

std::vector<cplx> power_series(std::vector<cplx> s, int n, int K) {
  std::vector<cplx> out(static_cast<std::size_t>(K) + 1, cplx{});
  out[0] = 1.0;
  for (int i = 0; i < n; ++i) out = series_multiply(out, s, K);
  return out;
}

}  // namespace

PowerFunction::PowerFunction(RationalFunction base, double r) : base_(std::move(base)), r_(r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidInput, "power must be a positive real");
  if (base_.num().is_zero()) throw Error(ErrorKind::InvalidInput, "power of the zero function");
  if (std::abs(r - std::round(r)) < 1e-12) n_ = static_cast<int>(std::lround(r));

  if (*base_.num().degree() > 0) {
    for (auto root : poly_roots(base_.num())) {
      const double mod = std::abs(root.value);
      if (mod < 1.0 - kDiskTol && std::abs(mod - 1.0) > kUnimodularTol)
        throw Error(ErrorKind::NotOuter, "base has zeros in the open disk");
      if (std::abs(mod - 1.0) <= kUnimodularTol) root.value /= mod;
      zeros_.push_back(root);
    }
  }
  if (*base_.den().degree() > 0) poles_ = poly_roots(base_.den());
  log0_ = std::log(base_(0.0));
}

void PowerFunction::check_point(cplx z) const {
  if (std::abs(z) > 1.0 + 1e-12) throw Error(ErrorKind::InvalidInput, "power evaluated outside the closed disk");
  for (const auto& a : zeros_)
    if (std::abs(z - a.value) <= 1e-12) throw Error(ErrorKind::SingularLogarithm, "logarithm singular at boundary zero");
}

cplx PowerFunction::log_base(cplx z) const {
  check_point(z);
  cplx L = log0_;
  for (const auto& a : zeros_) L += double(a.multiplicity) * std::log(1.0 - z / a.value);
  for (const auto& b : poles_) L -= double(b.multiplicity) * std::log(1.0 - z / b.value);
  // The factored sum fixes the sheet; the value itself comes from direct evaluation.
  const cplx qz = base_(z);
  if (qz == cplx{}) throw Error(ErrorKind::SingularLogarithm, "logarithm singular at boundary zero");
  const cplx direct = std::log(qz);
  const double k = std::round((L.imag() - direct.imag()) / (2.0 * std::numbers::pi));
  return direct + cplx(0.0, 2.0 * std::numbers::pi * k);
}

cplx PowerFunction::operator()(cplx z) const {
  if (n_) {
    check_point(z);
    return std::pow(base_(z), *n_);
  }
  return std::exp(r_ * log_base(z));
}

std::vector<cplx> PowerFunction::taylor_at(cplx z0, int K) const {
  if (n_) {
    check_point(z0);
    return power_series(base_.taylor_at(z0, K), *n_, K);
  }
  // F' = r (q'/q) F, solved coefficient by coefficient.
  const auto qs = base_.taylor_at(z0, K + 1);
  std::vector<cplx> dq(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) dq[k] = double(k + 1) * qs[k + 1];
  const auto u = series_divide(dq, qs, K);
  std::vector<cplx> F(static_cast<std::size_t>(K) + 1, cplx{});
  F[0] = (*this)(z0);
  for (int k = 0; k < K; ++k) {
    cplx acc{};
    for (int j = 0; j <= k; ++j) acc += u[j] * F[k - j];
    F[k + 1] = r_ * acc / double(k + 1);
  }
  return F;
}

std::vector<cplx> PowerFunction::derivatives(cplx z, int K) const {
  auto t = taylor_at(z, K);
  for (int k = 0; k <= K; ++k) t[k] *= factorial(k);
  return t;
}

}  // namespace brs
