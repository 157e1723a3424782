#include <doctest.h>

#include "brs/power.hpp"
#include "oracles.hpp"

using namespace brs;

namespace {

const RationalFunction q1(Polynomial{0.5, 0.5});

RationalFunction reversed_double_zero() {
  const double c = 1.0 / (4.0 * (1.0 + oracle::kSqrt2));
  const double k = 3.0 + 2.0 * oracle::kSqrt2;
  return RationalFunction(Polynomial{-c * k, c * (k - 1.0), c});
}

}  // namespace

TEST_CASE("values at the origin") {
  CHECK(std::abs(PowerFunction(q1, 2.0)(0.0) - 0.25) < 1e-15);
  CHECK(std::abs(PowerFunction(q1, 0.5)(0.0) - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("boundary value of the reversed example") {
  const PowerFunction F(reversed_double_zero(), 1.0);
  CHECK(std::abs(F(-1.0) + 1.0) < 1e-12);
  // q'(-1) = c (2 sqrt 2) = (2 - sqrt 2)/2; it must be positive because q maps the
  // disk into itself and attains -1 at -1.
  const auto d = F.derivatives(-1.0, 1);
  CHECK(std::abs(d[1] - (2.0 - oracle::kSqrt2) / 2.0) < 1e-12);
  CHECK(d[1].real() > 0.0);
}

TEST_CASE("derivatives for r = 1 and r = 2") {
  const auto d = PowerFunction(q1, 1.0).derivatives(cplx(0.2, 0.1), 3);
  CHECK(std::abs(d[0] - cplx(0.6, 0.05)) < 1e-15);
  CHECK(std::abs(d[1] - 0.5) < 1e-15);
  CHECK(std::abs(d[2]) < 1e-15);
  CHECK(std::abs(d[3]) < 1e-15);
  const auto d2 = PowerFunction(q1, 2.0).derivatives(0.0, 1);
  CHECK(std::abs(d2[1] - 0.5) < 1e-15);
}

TEST_CASE("non-integer powers: modulus matches |q|^r") {
  std::mt19937 rng(21);
  for (const auto& [name, q] : oracle::corpus())
    for (double r : {0.5, 1.0, 2.0, 3.3}) {
      CAPTURE(name);
      CAPTURE(r);
      const PowerFunction F(q, r);
      for (int i = 0; i < 200; ++i) {
        const cplx z = oracle::random_disk_point(rng, 0.999);
        CHECK(std::abs(std::abs(F(z)) - std::pow(std::abs(q(z)), r)) <= 1e-10 * std::max(1.0, std::abs(F(z))));
      }
    }
}

TEST_CASE("integer powers agree with repeated multiplication") {
  std::mt19937 rng(4);
  for (const auto& [name, q] : oracle::corpus()) {
    const PowerFunction F(q, 3.0);
    REQUIRE(F.integer_power() == 3);
    for (int i = 0; i < 50; ++i) {
      const cplx z = oracle::random_disk_point(rng, 1.0);
      CHECK(std::abs(F(z) - q(z) * q(z) * q(z)) < 1e-10);
    }
  }
}

TEST_CASE("derivatives against finite differences and Cauchy integrals") {
  std::mt19937 rng(9);
  for (const auto& [name, q] : oracle::corpus())
    for (double r : {0.5, 1.0, 2.0, 3.3}) {
      CAPTURE(name);
      CAPTURE(r);
      const PowerFunction F(q, r);
      for (int i = 0; i < 10; ++i) {
        const cplx z = oracle::random_disk_point(rng, 0.8);
        const auto d = F.derivatives(z, 3);
        for (int k = 1; k <= 3; ++k) {
          const cplx fd = oracle::central_difference([&](cplx w) { return F.derivatives(w, k - 1)[k - 1]; }, z);
          CHECK(std::abs(d[k] - fd) <= 1e-6 * std::max(1.0, std::abs(d[k])));
          const cplx ci = oracle::cauchy_derivative([&](cplx w) { return F(w); }, z, k, 0.1);
          CHECK(std::abs(d[k] - ci) <= 1e-8 * std::max(1.0, std::abs(d[k])));
        }
      }
    }
}

TEST_CASE("powers compose") {
  // The branch is continuous from q(0), so (q^r)^n = q^{rn} for integer n, and
  // (q^2)^{1/2} = q where Re q > 0 on the disk.
  std::mt19937 rng(2);
  for (double r : {0.5, 1.3})
    for (int n : {2, 3}) {
      const PowerFunction Fr(q1, r), Frn(q1, r * n);
      for (int i = 0; i < 100; ++i) {
        const cplx z = oracle::random_disk_point(rng, 0.99);
        CHECK(std::abs(std::pow(Fr(z), n) - Frn(z)) < 1e-9);
      }
    }
  const PowerFunction F2(q1, 2.0);
  for (int i = 0; i < 100; ++i) {
    const cplx z = oracle::random_disk_point(rng, 0.99);
    CHECK(std::abs(std::sqrt(F2(z)) - q1(z)) < 1e-9);
  }
}

TEST_CASE("branch is continuous where q winds") {
  // q(-1) = -1 for the reversed example: the branch must not jump across the negative axis.
  const PowerFunction F(reversed_double_zero(), 0.5);
  cplx prev = F(std::polar(0.999, 3.0));
  for (int i = 1; i <= 400; ++i) {
    const cplx cur = F(std::polar(0.999, 3.0 + 0.28 * i / 400.0));
    CHECK(std::abs(cur - prev) < 0.05);
    prev = cur;
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(PowerFunction(q1, 0.0), Error);
  CHECK_THROWS_AS(PowerFunction(q1, -1.0), Error);
  try {
    PowerFunction(RationalFunction(Polynomial{-0.5, 1.0}), 0.5);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOuter);
  }
  try {
    PowerFunction(q1, 0.5)(-1.0);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularLogarithm);
    CHECK(std::string(e.what()) == "logarithm singular at boundary zero");
  }
}
