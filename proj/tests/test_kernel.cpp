#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "brs/decomp.hpp"
#include "brs/kernel.hpp"
#include "oracles.hpp"

using namespace brs;
using oracle::I;

namespace {

const RationalFunction q1(Polynomial{0.5, 0.5});
const RationalFunction q2(Polynomial{0.5, 0.0, -0.5});
const RationalFunction q3(Polynomial{0.25, 0.5, 0.25});

RationalFunction reversed_double_zero() {
  const double c = 1.0 / (4.0 * (1.0 + oracle::kSqrt2));
  const double k = 3.0 + 2.0 * oracle::kSqrt2;
  return RationalFunction(Polynomial{-c * k, c * (k - 1.0), c});
}

/// d^ell/d mu^ell of (1 - G(mu) F(z)) / (1 - mu z) at mu = conj(lambda), with
/// G(mu) = conj(F(conj mu)) analytic in mu; computed by a Cauchy integral.
cplx kernel_oracle(const PowerFunction& F, cplx lambda, int ell, cplx z) {
  const cplx Fz = F(z);
  auto k = [&](cplx mu) { return (1.0 - std::conj(F(std::conj(mu))) * Fz) / (1.0 - mu * z); };
  const double rho = std::min(0.05, 0.5 * (1.0 - std::abs(lambda)));
  return oracle::cauchy_derivative(k, std::conj(lambda), ell, rho, 96);
}

double max_dev(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& g) {
  double e = 0.0;
  for (cplx z : oracle::interior_points()) e = std::max(e, std::abs(f(z) - g(z)));
  return e;
}

}  // namespace

TEST_CASE("kernel of (1+z)/2 at its boundary zero is constant 1/2") {
  const PowerSpace S(q1, 1.0);
  CHECK(max_dev(S.kernel(1.0, 0), [](cplx) { return cplx(0.5); }) < 1e-12);
  KernelSpec spec{1.0, 1.0, 0};
  CHECK(std::abs(kernel_eval(q1, spec, cplx(0.3, 0.4)) - 0.5) < 1e-12);
}

TEST_CASE("kernels at i and -i for (1-z)(1+z)/2") {
  const PowerSpace S(q2, 1.0);
  CHECK(max_dev(S.kernel(I, 0), [](cplx z) { return (z + I) / (2.0 * I); }) < 1e-12);
  // The kernel at -i is (i - z)/(2i): its value at 0 is 1/2, as it must be since
  // v(0) = 1 - conj(q(-i)) q(0) = 1/2 for the un-differentiated kernel.
  const auto vm = S.kernel(-I, 0);
  CHECK(max_dev(vm, [](cplx z) { return (I - z) / (2.0 * I); }) < 1e-12);
  CHECK(std::abs(vm(0.0) - 0.5) < 1e-14);
}

TEST_CASE("first-order kernel at the double boundary zero") {
  const auto q = reversed_double_zero();
  const PowerSpace S(q, 1.0);
  const double s = (2.0 - oracle::kSqrt2) / 2.0;  // q'(-1)
  CHECK(max_dev(S.kernel(-1.0, 0), [&](cplx z) { return (1.0 + q(z)) / (1.0 + z); }) < 1e-12);
  CHECK(max_dev(S.kernel(-1.0, 1),
                [&](cplx z) { return (z * (1.0 + q(z)) - s * q(z) * (1.0 + z)) / ((1.0 + z) * (1.0 + z)); }) < 1e-10);
}

TEST_CASE("kernel at the origin") {
  const PowerSpace S(q1, 0.5);
  const cplx F0 = S.F()(0.0);
  CHECK(max_dev(S.kernel(0.0, 0), [&](cplx z) { return 1.0 - std::conj(F0) * S.F()(z); }) < 1e-14);
}

TEST_CASE("Leibniz expansion against differentiation in conj(lambda)") {
  std::mt19937 rng(17);
  for (const auto& [name, q] : oracle::corpus())
    for (double r : {0.5, 1.0, 2.5}) {
      CAPTURE(name);
      CAPTURE(r);
      const PowerSpace S(q, r);
      for (int trial = 0; trial < 4; ++trial) {
        const cplx lambda = oracle::random_disk_point(rng, 0.8);
        for (int ell = 0; ell <= 2; ++ell) {
          const auto v = S.kernel(lambda, ell);
          for (int i = 0; i < 5; ++i) {
            const cplx z = oracle::random_disk_point(rng, 0.9);
            const cplx ref = kernel_oracle(S.F(), lambda, ell, z);
            CHECK(std::abs(v(z) - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
          }
        }
      }
    }
}

TEST_CASE("boundary kernels are limits of interior kernels") {
  for (const auto& [name, q] : oracle::corpus()) {
    const PowerSpace S(q, 0.5);
    for (const auto& [j, ell] : S.zeros().index()) {
      CAPTURE(name);
      const cplx zeta = S.zeros().zeros[j].zeta;
      const auto v = S.boundary_kernel(j, ell);
      for (cplx z : oracle::interior_points(10, 0.8)) {
        // Linear extrapolation in delta of the interior oracle at (1 - delta) zeta.
        const cplx a = kernel_oracle(S.F(), (1.0 - 2e-3) * zeta, ell, z);
        const cplx b = kernel_oracle(S.F(), (1.0 - 1e-3) * zeta, ell, z);
        CHECK(std::abs(v(z) - (2.0 * b - a)) < 1e-5);
      }
    }
  }
}

TEST_CASE("closed forms") {
  const auto f1 = kernel_rational_form(PowerSpace(q1, 1.0), 1.0, 0);
  CHECK(*f1.num().degree() == 0);
  CHECK(std::abs(f1(0.0) - 0.5) < 1e-14);

  const auto f3 = kernel_rational_form(PowerSpace(q3, 1.0), 1.0, 0);
  REQUIRE(*f3.num().degree() == 1);
  CHECK(std::abs(f3.num()[0] / f3.den()[0] - 0.75) < 1e-14);
  CHECK(std::abs(f3.num()[1] / f3.den()[0] - 0.25) < 1e-14);

  const auto f2 = kernel_rational_form(PowerSpace(q2, 1.0), -I, 0);
  CHECK(max_dev([&](cplx z) { return f2(z); }, [](cplx z) { return (I - z) / (2.0 * I); }) < 1e-14);

  KernelSpec spec{2.5, 1.0, 0};
  CHECK_THROWS_AS(kernel_rational_form(q1, spec), Error);
}

TEST_CASE("closed forms agree with the Leibniz expansion for integer powers") {
  for (const auto& [name, q] : oracle::corpus())
    for (double r : {1.0, 2.0, 3.0}) {
      const PowerSpace S(q, r);
      for (const auto& [j, ell] : S.zeros().index()) {
        CAPTURE(name);
        CAPTURE(r);
        const auto form = kernel_rational_form(S, S.zeros().zeros[j].zeta, ell);
        for (cplx z : oracle::interior_points())
          CHECK(std::abs(form(z) - S.boundary_kernel(j, ell)(z)) < 1e-9);
        // No factor vanishing on the closed disk survives in the denominator.
        if (*form.den().degree() > 0)
          for (const auto& root : poly_roots(form.den())) CHECK(std::abs(root.value) > 1.0);
      }
    }
}

TEST_CASE("boundary derivatives of kernels") {
  const PowerSpace S1(q1, 1.0);
  for (auto m : {LimitMethod::Rational, LimitMethod::RadialExtrapolation})
    CHECK(std::abs(kernel_z_derivative_at_boundary(S1, 1.0, 0, 1.0, 0, m) - 0.5) < 1e-8);
  // Order 1 at zeta' = 1 needs multiplicity 2 there.
  CHECK_THROWS_AS(kernel_z_derivative_at_boundary(S1, 1.0, 0, 1.0, 1, LimitMethod::Rational), Error);
  // The constant kernel has zero derivative anywhere.
  CHECK(std::abs(S1.kernel(1.0, 0).derivatives(0.99, 1)[1]) < 1e-14);

  const PowerSpace S2(q2, 1.0);
  for (auto m : {LimitMethod::Rational, LimitMethod::RadialExtrapolation}) {
    CHECK(std::abs(kernel_z_derivative_at_boundary(S2, I, 0, -I, 0, m)) < 1e-8);
    CHECK(std::abs(kernel_z_derivative_at_boundary(S2, I, 0, I, 0, m) - 1.0) < 1e-8);
  }
}

TEST_CASE("radial extrapolation agrees with closed forms") {
  for (const auto& [name, q] : oracle::corpus())
    for (double r : {1.0, 2.0}) {
      const PowerSpace S(q, r);
      if (S.N() == 0) continue;
      CAPTURE(name);
      CAPTURE(r);
      const auto Gr = gram_matrix(S, LimitMethod::Rational);
      const auto Ge = gram_matrix(S, LimitMethod::RadialExtrapolation);
      CHECK((Gr.entries - Ge.entries).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("Gram matrices") {
  CHECK(std::abs(gram_matrix(PowerSpace(q1, 1.0)).entries(0, 0) - 0.5) < 1e-14);
  CHECK((gram_matrix(PowerSpace(q2, 1.0)).entries - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  for (const auto& [name, q] : oracle::corpus())
    for (double r : {0.5, 1.0, 2.0, 3.7}) {
      const PowerSpace S(q, r);
      if (S.N() == 0) continue;
      CAPTURE(name);
      CAPTURE(r);
      const auto G = gram_matrix(S);
      CHECK((G.entries - G.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-6);
      const Eigen::MatrixXcd H = 0.5 * (G.entries + G.entries.adjoint());
      CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(H).eigenvalues().minCoeff() > 0.0);
    }
}

TEST_CASE("radial kernels stay bounded at a fixed interior point") {
  for (const auto& [name, q] : oracle::corpus()) {
    const PowerSpace S(q, 0.5);
    for (const auto& [j, ell] : S.zeros().index()) {
      CAPTURE(name);
      const cplx zeta = S.zeros().zeros[j].zeta;
      const cplx z0(0.1, -0.2);
      const cplx limit = S.boundary_kernel(j, ell)(z0);
      double prev = INFINITY;
      for (int s = 4; s <= 12; ++s) {
        const cplx v = S.kernel((1.0 - std::ldexp(1.0, -s)) * zeta, ell)(z0);
        CHECK(std::abs(v) < 10.0 * (1.0 + std::abs(limit)));
        const double gap = std::abs(v - limit);
        CHECK(gap <= prev + 1e-12);
        prev = gap;
      }
    }
  }
}

TEST_CASE("kernel specs must respect boundary multiplicities") {
  const PowerSpace S(q1, 1.0);
  try {
    S.kernel(1.0, 1);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KernelUndefined);
    CHECK(std::string(e.what()) == "kernel undefined: ell exceeds m_j - 1");
  }
  // -1 is on the circle but the mate does not vanish there.
  CHECK_THROWS_AS(S.kernel(-1.0, 0), Error);
  CHECK_THROWS_AS(S.kernel(1.5, 0), Error);
  const PowerSpace S4(reversed_double_zero(), 1.0);
  CHECK_NOTHROW(S4.kernel(-1.0, 1));
  CHECK_THROWS_AS(S4.kernel(-1.0, 2), Error);
}

TEST_CASE("reproducing identity for boundary derivatives") {
  std::mt19937 rng(5);
  for (const auto& [name, q] : oracle::corpus())
    for (double r : {0.5, 1.0, 2.0}) {
      const PowerSpace S(q, r);
      if (S.N() == 0) continue;
      CAPTURE(name);
      CAPTURE(r);
      const Polynomial f = oracle::random_polynomial(rng, 6);
      const auto dec = decompose(S, RationalFunction(f), 128);
      // <f, v_i> = <a h, v_i> + sum_k c_k <v_k, v_i> and a h is orthogonal to every v_i.
      const Eigen::VectorXcd pairing = gram_matrix(S).entries * dec.c;
      for (std::size_t i = 0; i < dec.index.size(); ++i) {
        const auto [j, ell] = dec.index[i];
        const cplx zeta = S.zeros().zeros[j].zeta;
        const int l = ell;
        const cplx ref = oracle::cauchy_derivative([&](cplx z) { return f(z); }, zeta, l, 0.3);
        CHECK(std::abs(pairing(static_cast<Eigen::Index>(i)) - ref) < 1e-6 * std::max(1.0, std::abs(ref)));
      }
    }
}
