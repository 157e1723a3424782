#pragma once

#include <optional>
#include <vector>

#include "brs/poly.hpp"

namespace brs {

/// q^r for a rational outer q and real r > 0, on a branch fixed by the factored form
///   L(z) = Log q(0) + sum m Log(1 - z/alpha) - sum m Log(1 - z/beta),
/// which is analytic on the open disk and continuous up to the circle away from zeros.
class PowerFunction {
 public:
  PowerFunction(RationalFunction base, double r);

  const RationalFunction& base() const { return base_; }
  double r() const { return r_; }
  /// Set when r is a positive integer (within 1e-12).
  std::optional<int> integer_power() const { return n_; }

  const std::vector<Root>& zeros() const { return zeros_; }
  const std::vector<Root>& poles() const { return poles_; }

  /// The branch L(z) of log q.
  cplx log_base(cplx z) const;
  cplx operator()(cplx z) const;
  /// Taylor coefficients of q^r around z0 up to order K.
  std::vector<cplx> taylor_at(cplx z0, int K) const;
  /// (q^r)^(k)(z) for k = 0..K.
  std::vector<cplx> derivatives(cplx z, int K) const;

 private:
  void check_point(cplx z) const;

  RationalFunction base_;
  double r_;
  std::optional<int> n_;
  std::vector<Root> zeros_;
  std::vector<Root> poles_;
  cplx log0_;
};

}  // namespace brs
