#include "brs/example_suite.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "brs/decomp.hpp"
#include "brs/factor.hpp"

namespace brs {

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome within(double err, double tol, const std::string& note = "") {
  std::ostringstream s;
  s << "err=" << err << " tol=" << tol;
  if (!note.empty()) s << " (" << note << ")";
  return {err < tol, s.str()};
}

double coeff_err(std::span<const cplx> got, const std::vector<cplx>& want) {
  double e = 0.0;
  for (std::size_t k = 0; k < std::max(got.size(), want.size()); ++k) {
    const cplx g = k < got.size() ? got[k] : cplx{};
    const cplx w = k < want.size() ? want[k] : cplx{};
    e = std::max(e, std::abs(g - w));
  }
  return e;
}

/// Numerator over a constant denominator, as plain coefficients.
std::vector<cplx> polynomial_part(const RationalFunction& f) {
  if (*f.den().degree() != 0) throw Error(ErrorKind::InvalidInput, "expected a polynomial");
  std::vector<cplx> c(f.num().coeffs().begin(), f.num().coeffs().end());
  for (auto& x : c) x /= f.den()[0];
  return c;
}

/// 100 deterministic points on a golden-angle spiral inside |z| < 0.95.
std::vector<cplx> interior_points() {
  std::vector<cplx> pts;
  for (int k = 0; k < 100; ++k) pts.push_back(std::polar(0.95 * std::sqrt((k + 0.5) / 100.0), 2.399963229728653 * k));
  return pts;
}

double max_deviation(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& g) {
  double e = 0.0;
  for (cplx z : interior_points()) e = std::max(e, std::abs(f(z) - g(z)));
  return e;
}

class Suite {
 public:
  Suite(const SuiteTolerances& tol, std::string filter) : tol_(tol), filter_(std::move(filter)) {}

  bool enabled(const std::string& group) const { return filter_.empty() || group.find(filter_) != std::string::npos; }

  void check(const std::string& group, const std::string& name, const std::function<Outcome()>& body) {
    try {
      auto o = body();
      items_.push_back({group, name, o.pass, o.detail});
    } catch (const std::exception& e) {
      items_.push_back({group, name, false, std::string("error: ") + e.what()});
    }
  }

  std::vector<SuiteItem> take() { return std::move(items_); }

 private:
  SuiteTolerances tol_;
  std::string filter_;
  std::vector<SuiteItem> items_;
};

const cplx I{0.0, 1.0};
const double kSqrt2 = std::numbers::sqrt2;

void example1(Suite& S, const SuiteTolerances& tol) {
  const std::string g = "example1";
  const RationalFunction q(Polynomial{0.5, 0.5});
  S.check(g, "factor-defect", [&] {
    return within(coeff_err(fejer_riesz(boundary_defect(q)).coeffs(), {0.5, -0.5}), tol.exact);
  });
  S.check(g, "mate", [&] { return within(coeff_err(polynomial_part(pythagorean_mate(q).a), {0.5, -0.5}), tol.exact); });
  S.check(g, "boundary-zeros", [&] {
    const auto Z = boundary_zeros(pythagorean_mate(q).a);
    if (Z.zeros.size() != 1 || Z.zeros[0].m != 1 || Z.N() != 1) return Outcome{false, "expected one simple zero"};
    return within(std::abs(Z.zeros[0].zeta - 1.0), 100 * tol.exact);
  });
  S.check(g, "exact-division", [&] {
    return within(coeff_err(poly_divide_exact(Polynomial{0.5, -0.5}, Polynomial{1.0, -1.0}).coeffs(), {0.5}),
                  tol.exact);
  });
  const PowerSpace space(q, 1.0);
  S.check(g, "kernel", [&] {
    const auto v = space.kernel(1.0, 0);
    return within(max_deviation(v, [](cplx) { return cplx(0.5); }), tol.exact);
  });
  S.check(g, "kernel-closed-form", [&] {
    return within(coeff_err(polynomial_part(kernel_rational_form(space, 1.0, 0)), {0.5}), tol.exact);
  });
  S.check(g, "classify", [&] {
    const auto c = classify(q);
    return Outcome{c == Extremality::NonExtreme, to_string(c)};
  });
  S.check(g, "decompose-constant", [&] {
    const auto d = decompose(space, RationalFunction(Polynomial{1.0}), 256);
    return within(std::max(std::abs(d.c(0) - 2.0), d.h.norm()), 100 * tol.exact, "c = [2], h = 0");
  });
  S.check(g, "decompose-z", [&] {
    const auto d = decompose(space, RationalFunction(Polynomial{0.0, 1.0}), 256);
    return within(std::max(std::abs(d.c(0) - 2.0), coeff_err(d.h.coeffs, {1.0})), 100 * tol.exact, "c = [2], h = 1");
  });
  S.check(g, "orthogonality", [&] {
    const auto o = verify_orthogonality(space, Polynomial{1.0}, 1.0, 0, tol.limit);
    return within(std::abs(o.limit), tol.limit);
  });
}

void example2(Suite& S, const SuiteTolerances& tol) {
  const std::string g = "example2";
  const RationalFunction q(Polynomial{0.5, 0.0, -0.5});
  S.check(g, "defect", [&] {
    return within(coeff_err(boundary_defect(q).coeffs(), {0.25, 0.0, 0.5, 0.0, 0.25}), tol.exact);
  });
  S.check(g, "symmetric-polynomial-roots", [&] {
    const auto w = boundary_defect(q);
    const Polynomial s(std::vector<cplx>(w.coeffs().begin(), w.coeffs().end()));
    const auto roots = poly_roots(s);
    if (roots.size() != 2 || roots[0].multiplicity != 2 || roots[1].multiplicity != 2)
      return Outcome{false, "expected two double roots"};
    const double e = std::max(std::min(std::abs(roots[0].value - I), std::abs(roots[0].value + I)),
                              std::abs(roots[0].value + roots[1].value));
    return within(std::max(e, std::abs(s.leading() - 0.25)), 100 * tol.exact, "(z - i)^2 (z + i)^2 / 4");
  });
  S.check(g, "factor", [&] {
    return within(coeff_err(fejer_riesz(boundary_defect(q)).coeffs(), {0.5, 0.0, 0.5}), tol.exact);
  });
  S.check(g, "mate", [&] {
    return within(coeff_err(polynomial_part(pythagorean_mate(q).a), {0.5, 0.0, 0.5}), tol.exact);
  });
  S.check(g, "mate-identity", [&] {
    const auto a = pythagorean_mate(q).a;
    double e = 0.0;
    for (int i = 0; i < 4096; ++i) {
      const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * i / 4096);
      e = std::max(e, std::abs(std::norm(a(z)) + std::norm(q(z)) - 1.0));
    }
    return within(e, tol.grid);
  });
  const PowerSpace space(q, 1.0);
  S.check(g, "boundary-zeros", [&] {
    const auto& Z = space.zeros();
    if (Z.zeros.size() != 2 || Z.zeros[0].m != 1 || Z.zeros[1].m != 1) return Outcome{false, "expected i and -i"};
    return within(std::max(std::abs(Z.zeros[0].zeta - I), std::abs(Z.zeros[1].zeta + I)), 100 * tol.exact);
  });
  S.check(g, "kernel-at-i", [&] {
    return within(max_deviation(space.kernel(I, 0), [](cplx z) { return (z + I) / (2.0 * I); }), tol.grid);
  });
  S.check(g, "kernel-at-minus-i", [&] {
    return within(max_deviation(space.kernel(-I, 0), [](cplx z) { return (I - z) / (2.0 * I); }), tol.grid,
                  "corrected sign: (i - z)/(2i); (z - i)/(2i) would give v(0) = -1/2 < 0");
  });
  S.check(g, "gram-identity", [&] {
    const auto G = gram_matrix(space);
    return within((G.entries - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), tol.limit);
  });
}

void example3(Suite& S, const SuiteTolerances& tol) {
  const std::string g = "example3";
  const RationalFunction q(Polynomial{0.25, 0.5, 0.25});
  S.check(g, "defect", [&] {
    return within(coeff_err(boundary_defect(q).coeffs(), {-1.0 / 16, -0.25, 5.0 / 8, -0.25, -1.0 / 16}), tol.exact);
  });
  S.check(g, "symmetric-polynomial-roots", [&] {
    const auto w = boundary_defect(q);
    const auto roots = poly_roots(Polynomial(std::vector<cplx>(w.coeffs().begin(), w.coeffs().end())));
    double e = 0.0;
    int found = 0;
    for (const auto& r : roots) {
      if (r.multiplicity == 2) {
        e = std::max(e, std::abs(r.value - 1.0));
        ++found;
      } else if (r.multiplicity == 1) {
        e = std::max(e, std::min(std::abs(r.value - (-3.0 - 2 * kSqrt2)), std::abs(r.value - (-3.0 + 2 * kSqrt2))));
        ++found;
      }
    }
    if (found != 3) return Outcome{false, "expected one double and two simple roots"};
    return within(e, 100 * tol.exact, "s = -(z - 1)^2 (z^2 + 6z + 1)/16: the double root is +1");
  });
  const double c = 1.0 / (4.0 * (1.0 + kSqrt2));
  S.check(g, "factor", [&] {
    // c (1 - z)(z + 3 + 2 sqrt 2)
    const cplx k = 3.0 + 2.0 * kSqrt2;
    return within(coeff_err(fejer_riesz(boundary_defect(q)).coeffs(), {c * k, c * (1.0 - k), -c}), tol.exact);
  });
  const PowerSpace space(q, 1.0);
  S.check(g, "boundary-zeros", [&] {
    const auto& Z = space.zeros();
    if (Z.zeros.size() != 1 || Z.zeros[0].m != 1) return Outcome{false, "expected one simple zero"};
    return within(std::abs(Z.zeros[0].zeta - 1.0), 100 * tol.exact);
  });
  S.check(g, "kernel-closed-form", [&] {
    return within(coeff_err(polynomial_part(kernel_rational_form(space, 1.0, 0)), {0.75, 0.25}), tol.grid);
  });
  S.check(g, "kernel-taylor-coefficients", [&] {
    const auto h = analytic_coeffs(kernel_rational_form(space, 1.0, 0), 8);
    return within(coeff_err(h.coeffs, {0.75, 0.25}), tol.exact);
  });
  S.check(g, "set-identity", [&] {
    // 1 against the kernel (z + 3)/4, and z + 3 against the constants.
    const auto d = decompose(space, RationalFunction(Polynomial{1.0}), 256);
    const auto split = algebraic_decompose(space.zeros(), RationalFunction(Polynomial{3.0, 1.0}));
    double e = std::max(std::abs(d.c(0) - 1.0), coeff_err(d.h.coeffs, {-0.25}));
    e = std::max(e, max_deviation([&](cplx z) { return reconstruct(space, d, z); }, [](cplx) { return cplx(1.0); }));
    e = std::max(e, coeff_err(split.p.coeffs(), {4.0}));
    e = std::max(e, coeff_err(polynomial_part(split.h), {1.0}));
    return within(e, tol.limit, "1 = (z - 1)(-1/4) + (z + 3)/4 and z + 3 = (z - 1) + 4");
  });
}

void example4(Suite& S, const SuiteTolerances& tol) {
  const std::string g = "example4";
  const double c = 1.0 / (4.0 * (1.0 + kSqrt2));
  const double k = 3.0 + 2.0 * kSqrt2;
  const RationalFunction q(Polynomial{-c * k, c * (k - 1.0), c});
  const RationalFunction a(Polynomial{0.25, 0.5, 0.25});
  S.check(g, "boundary-zeros", [&] {
    const auto Z = boundary_zeros(a);
    if (Z.zeros.size() != 1 || Z.zeros[0].m != 2) return Outcome{false, "expected one double zero"};
    return within(std::abs(Z.zeros[0].zeta + 1.0), 100 * tol.exact);
  });
  S.check(g, "mate", [&] { return within(coeff_err(polynomial_part(pythagorean_mate(q).a), {0.25, 0.5, 0.25}), tol.exact); });
  S.check(g, "factor-constant", [&] {
    return within(coeff_err(fejer_riesz(boundary_defect(a)).coeffs(), {c * k, c * (1.0 - k), -c}), tol.exact,
                  "c = 1/(4(1 + sqrt 2))");
  });
  const PowerSpace space(q, 1.0);
  S.check(g, "q-at-minus-one", [&] { return within(std::abs(space.F()(-1.0) + 1.0), tol.exact); });
  const double slope = (2.0 - kSqrt2) / 2.0;
  S.check(g, "q-derivative-at-minus-one", [&] {
    return within(std::abs(space.F().derivatives(-1.0, 1)[1] - slope), tol.exact,
                  "corrected: q'(-1) = c(2 sqrt 2) = (2 - sqrt 2)/2; a value of -1/2 is impossible since q maps "
                  "the disk into itself with q(-1) = -1");
  });
  S.check(g, "kernel-order-0", [&] {
    return within(max_deviation(space.kernel(-1.0, 0), [&](cplx z) { return (1.0 + q(z)) / (1.0 + z); }), tol.grid);
  });
  S.check(g, "kernel-order-1", [&] {
    const auto form = [&](cplx z) {
      const cplx qz = q(z);
      return (z * (1.0 + qz) - slope * qz * (1.0 + z)) / ((1.0 + z) * (1.0 + z));
    };
    return within(max_deviation(space.kernel(-1.0, 1), form), 100 * tol.exact,
                  "corrected form (z(1 + q) - q'(-1) q (1 + z))/(1 + z)^2 with q'(-1) = (2 - sqrt 2)/2");
  });
  S.check(g, "orthogonality", [&] {
    double e = 0.0;
    for (int ell : {0, 1}) e = std::max(e, std::abs(verify_orthogonality(space, Polynomial{0.0, 1.0}, -1.0, ell).limit));
    return within(e, tol.limit, "g = z, orders 0 and 1");
  });
}

}  // namespace

std::vector<SuiteItem> run_example_suite(const SuiteTolerances& tol, const std::string& filter) {
  Suite S(tol, filter);
  if (S.enabled("example1")) example1(S, tol);
  if (S.enabled("example2")) example2(S, tol);
  if (S.enabled("example3")) example3(S, tol);
  if (S.enabled("example4")) example4(S, tol);
  return S.take();
}

}  // namespace brs
