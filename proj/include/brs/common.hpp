#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace brs {

using cplx = std::complex<double>;

/// Failure categories. The CLI maps several of these onto exit codes.
enum class ErrorKind {
  InvalidInput,
  ZeroPolynomial,
  NoConvergence,
  NotDivisible,
  DenominatorVanishes,
  NotInBall,
  Inner,
  InvalidTrigPolynomial,
  NotOuter,
  SingularLogarithm,
  KernelUndefined,
  KernelNotAnalytic,
  LimitUnstable,
  NotAnalytic,
  NotMember,
  Inconclusive,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Radius slack for "zero-free on the closed disk": |root| <= 1 + kDiskTol rejects.
inline constexpr double kDiskTol = 1e-9;
/// Slack for nonnegativity of 1 - |q|^2 on the circle.
inline constexpr double kNegTol = 1e-9;
/// Roots within this distance of the circle are treated as unimodular.
inline constexpr double kUnimodularTol = 1e-6;

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace brs
