#include "brs/factor.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace brs {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorKind::InvalidTrigPolynomial, "not a valid nonnegative trig polynomial: " + why);
}

}  // namespace

Polynomial fejer_riesz(const TrigPolynomial& w_in, double tol) {
  if (w_in.max_norm() == 0.0) throw Error(ErrorKind::Inner, "inner symbol: defect identically zero");
  const TrigPolynomial w = w_in.reduced(1e-12);
  const int n = w.n();
  for (int i = 0; i < 4096; ++i)
    if (w(2.0 * std::numbers::pi * i / 4096) < -kNegTol * w.max_norm()) invalid("negative on the circle");

  Polynomial p;
  if (n == 0) {
    const double c0 = w[0].real();
    if (c0 <= 0.0) invalid("negative constant");
    p = Polynomial::constant(std::sqrt(c0));
  } else {
    const Polynomial s(std::vector<cplx>(w.coeffs().begin(), w.coeffs().end()));
    const auto roots = poly_roots(s);

    std::vector<Root> outer, inner, kept;
    for (const auto& r : roots) {
      const double mod = std::abs(r.value);
      if (std::abs(mod - 1.0) <= kUnimodularTol) {
        if (r.multiplicity % 2 != 0) invalid("odd multiplicity at a unimodular root");
        kept.push_back({r.value / mod, r.multiplicity / 2});
      } else if (mod > 1.0) {
        outer.push_back(r);
      } else {
        inner.push_back(r);
      }
    }

    // Every root outside the circle needs its reflection inside, with the same multiplicity.
    std::vector<bool> used(inner.size(), false);
    for (const auto& r : outer) {
      const cplx mirror = 1.0 / std::conj(r.value);
      bool found = false;
      for (std::size_t i = 0; i < inner.size(); ++i) {
        if (used[i] || inner[i].multiplicity != r.multiplicity) continue;
        if (std::abs(inner[i].value - mirror) <= 1e-6 * std::max(1.0, std::abs(mirror))) {
          used[i] = found = true;
          break;
        }
      }
      if (!found) invalid("unpaired root");
      kept.push_back(r);
    }
    for (bool u : used)
      if (!u) invalid("unpaired root");

    const Polynomial monic = Polynomial::from_roots(kept);
    cplx prod = 1.0;
    for (const auto& r : kept)
      for (int m = 0; m < r.multiplicity; ++m) prod *= -std::conj(r.value);
    const double c = std::abs(w[n]) / std::abs(prod);
    p = std::sqrt(c) * monic;
  }

  const cplx p0 = p(0.0);
  p = (std::conj(p0) / std::abs(p0)) * p;
  std::vector<cplx> pc(p.coeffs().begin(), p.coeffs().end());
  pc[0] = std::abs(p0);
  p = Polynomial(std::move(pc));

  constexpr int kGrid = 4096;
  const double scale = std::max(w.max_norm(), 1e-300);
  double worst = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / kGrid;
    worst = std::max(worst, std::abs(std::norm(p(std::polar(1.0, theta))) - w(theta)));
  }
  if (worst > tol * scale) {
    std::ostringstream msg;
    msg << "factorization residual " << worst / scale << " exceeds tolerance " << tol;
    throw Error(ErrorKind::NoConvergence, msg.str());
  }
  return p;
}

}  // namespace brs
