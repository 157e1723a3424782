#include "brs/mate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "brs/factor.hpp"

namespace brs {

namespace {

double den_scale(const RationalFunction& q) {
  double s = 0.0;
  for (const auto& d : q.den().coeffs()) s += std::norm(d);
  return s;
}

bool defect_vanishes(const TrigPolynomial& w, const RationalFunction& q) {
  return w.max_norm() <= 1e-12 * den_scale(q);
}

double angle_0_2pi(cplx z) {
  const double t = std::arg(z);
  return t < 0 ? t + 2.0 * std::numbers::pi : t;
}

}  // namespace

int BoundaryZeroSet::N() const {
  int n = 0;
  for (const auto& z : zeros) n += z.m;
  return n;
}

Polynomial BoundaryZeroSet::monic_product() const {
  std::vector<Root> roots;
  for (const auto& z : zeros) roots.push_back({z.zeta, z.m});
  return Polynomial::from_roots(roots);
}

std::vector<std::pair<int, int>> BoundaryZeroSet::index() const {
  std::vector<std::pair<int, int>> idx;
  for (int j = 0; j < static_cast<int>(zeros.size()); ++j)
    for (int l = 0; l < zeros[j].m; ++l) idx.emplace_back(j, l);
  return idx;
}

PythagoreanPair pythagorean_mate(const RationalFunction& q_in) {
  const RationalFunction q = q_in.normalized();
  const TrigPolynomial w = boundary_defect(q);
  if (defect_vanishes(w, q)) throw Error(ErrorKind::Inner, "q is inner: extreme point, no mate");

  const Polynomial p = fejer_riesz(w);
  RationalFunction a(p, q.den());

  constexpr int kGrid = 1024;
  for (int i = 0; i < kGrid; ++i) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * i / kGrid);
    const double defect = std::norm(a(z)) + std::norm(q(z)) - 1.0;
    if (std::abs(defect) > 1e-9) {
      std::ostringstream msg;
      msg << "mate identity |a|^2 + |q|^2 = 1 violated by " << defect;
      throw Error(ErrorKind::NoConvergence, msg.str());
    }
  }
  return {q, a};
}

BoundaryZeroSet boundary_zeros(const RationalFunction& a) {
  BoundaryZeroSet out;
  const auto& num = a.num();
  if (num.is_zero()) throw Error(ErrorKind::InvalidInput, "mate is identically zero");
  if (*num.degree() > 0) {
    for (const auto& r : poly_roots(num)) {
      const double mod = std::abs(r.value);
      if (std::abs(mod - 1.0) <= kUnimodularTol) {
        out.zeros.push_back({r.value / mod, r.multiplicity});
      } else if (mod < 1.0) {
        throw Error(ErrorKind::NotOuter, "function has zeros in the open disk");
      }
    }
  }
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](const BoundaryZero& x, const BoundaryZero& y) { return angle_0_2pi(x.zeta) < angle_0_2pi(y.zeta); });
  out.s = RationalFunction(poly_divide_exact(num, out.monic_product(), 1e-6), a.den());
  return out;
}

CoronaEstimate corona_infimum(const RationalFunction& a, const RationalFunction& q, int depth) {
  struct Cell {
    double r0, r1, t0, t1;
    double value;
  };
  auto f = [&](double r, double t) {
    const cplx z = std::polar(r, t);
    return std::abs(a(z)) + std::abs(q(z));
  };
  double best = std::numeric_limits<double>::infinity();
  auto evaluate = [&](Cell& c) {
    const double rm = 0.5 * (c.r0 + c.r1), tm = 0.5 * (c.t0 + c.t1);
    c.value = std::min({f(c.r0, c.t0), f(c.r0, c.t1), f(c.r1, c.t0), f(c.r1, c.t1), f(rm, tm)});
    best = std::min(best, c.value);
  };

  constexpr int kRadial = 16, kAngular = 64;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<Cell> cells;
  for (int i = 0; i < kRadial; ++i)
    for (int j = 0; j < kAngular; ++j) {
      Cell c{double(i) / kRadial, double(i + 1) / kRadial, kTwoPi * j / kAngular, kTwoPi * (j + 1) / kAngular, 0.0};
      evaluate(c);
      cells.push_back(c);
    }

  constexpr std::size_t kMaxActive = 4096;
  for (int round = 0; round < depth; ++round) {
    std::vector<Cell> next;
    for (const auto& c : cells) {
      if (c.value > 2.0 * best) continue;
      const double rm = 0.5 * (c.r0 + c.r1), tm = 0.5 * (c.t0 + c.t1);
      for (auto sub : {Cell{c.r0, rm, c.t0, tm, 0}, Cell{c.r0, rm, tm, c.t1, 0}, Cell{rm, c.r1, c.t0, tm, 0},
                       Cell{rm, c.r1, tm, c.t1, 0}}) {
        evaluate(sub);
        next.push_back(sub);
      }
    }
    if (next.size() > kMaxActive) {
      std::nth_element(next.begin(), next.begin() + kMaxActive, next.end(),
                       [](const Cell& x, const Cell& y) { return x.value < y.value; });
      next.resize(kMaxActive);
    }
    if (next.empty()) break;
    cells = std::move(next);
  }

  // |a'| + |q'| peaks on the circle (maximum modulus), so a boundary scan bounds the gradient.
  double lipschitz = 0.0;
  for (int i = 0; i < 4096; ++i) {
    const cplx z = std::polar(1.0, kTwoPi * i / 4096);
    lipschitz = std::max(lipschitz, std::abs(a.derivatives(z, 1)[1]) + std::abs(q.derivatives(z, 1)[1]));
  }
  double half_diam = 0.0;
  for (const auto& c : cells)
    if (c.value <= 2.0 * best) half_diam = std::max(half_diam, 0.5 * ((c.r1 - c.r0) + c.r1 * (c.t1 - c.t0)));
  return {best, lipschitz * half_diam};
}

const char* to_string(Extremality e) {
  switch (e) {
    case Extremality::NonExtreme: return "NonExtreme";
    case Extremality::ExtremeInvertible: return "ExtremeInvertible";
    case Extremality::ExtremeNonInvertible: return "ExtremeNonInvertible";
  }
  return "?";
}

Extremality classify(const RationalFunction& b) {
  const TrigPolynomial w = boundary_defect(b);
  if (!defect_vanishes(w, b)) return Extremality::NonExtreme;
  const auto& num = b.num();
  if (*num.degree() == 0) return Extremality::ExtremeInvertible;
  for (const auto& r : poly_roots(num))
    if (std::abs(r.value) <= 1.0 + kDiskTol) return Extremality::ExtremeNonInvertible;
  return Extremality::ExtremeInvertible;
}

RatioBounds mate_modulus_ratio_bounds(const RationalFunction& q, double r, int grid) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidInput, "power must be positive");
  const TrigPolynomial w = boundary_defect(q);
  if (defect_vanishes(w, q)) throw Error(ErrorKind::Inner, "q is inner: extreme point, no mate");
  RatioBounds out{std::numeric_limits<double>::infinity(), 0.0};
  for (int i = 0; i < grid; ++i) {
    const double x = std::norm(q(std::polar(1.0, 2.0 * std::numbers::pi * i / grid)));
    const double gap = 1.0 - x;
    const double rho = gap < 1e-12 ? std::sqrt(r) : std::sqrt((1.0 - std::pow(x, r)) / gap);
    out.lo = std::min(out.lo, rho);
    out.hi = std::max(out.hi, rho);
  }
  return out;
}

}  // namespace brs
