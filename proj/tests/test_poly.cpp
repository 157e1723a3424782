#include <doctest.h>

#include <algorithm>

#include "brs/poly.hpp"
#include "oracles.hpp"

using namespace brs;
using oracle::I;

namespace {

double max_diff(std::span<const cplx> a, const std::vector<cplx>& b) {
  double e = 0.0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k)
    e = std::max(e, std::abs((k < a.size() ? a[k] : cplx{}) - (k < b.size() ? b[k] : cplx{})));
  return e;
}

}  // namespace

TEST_CASE("zero polynomial has no degree and strips trailing zeros") {
  Polynomial z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  Polynomial p{1.0, 2.0, 0.0, 0.0};
  CHECK(*p.degree() == 1);
  CHECK_THROWS_AS(z.leading(), Error);
}

TEST_CASE("perfect square has one double root") {
  const auto r = poly_roots(Polynomial{1.0, -2.0, 1.0});
  REQUIRE(r.size() == 1);
  CHECK(r[0].multiplicity == 2);
  CHECK(std::abs(r[0].value - 1.0) < 1e-12);
}

TEST_CASE("z^3 has a triple root at the origin") {
  const auto r = poly_roots(Polynomial{0.0, 0.0, 0.0, 1.0});
  REQUIRE(r.size() == 1);
  CHECK(r[0].multiplicity == 3);
  CHECK(std::abs(r[0].value) < 1e-12);
}

TEST_CASE("quartic from the squared half-plus-half-z defect: double root at +1") {
  // -(1/16)(z^4 + 4z^3 - 10z^2 + 4z + 1) = -(1/16)(z - 1)^2 (z^2 + 6z + 1)
  const Polynomial s{-1.0 / 16, -0.25, 10.0 / 16, -0.25, -1.0 / 16};
  const auto r = poly_roots(s);
  REQUIRE(r.size() == 3);
  int doubles = 0;
  for (const auto& root : r) {
    if (root.multiplicity == 2) {
      ++doubles;
      CHECK(std::abs(root.value - 1.0) < 1e-8);
    } else {
      const double e = std::min(std::abs(root.value - (-3.0 - 2 * oracle::kSqrt2)),
                                std::abs(root.value - (-3.0 + 2 * oracle::kSqrt2)));
      CHECK(e < 1e-8);
    }
  }
  CHECK(doubles == 1);
  // -1 is not a root at all.
  CHECK(std::abs(s(-1.0)) > 0.5);
}

TEST_CASE("roots of the zero polynomial are an error") {
  CHECK_THROWS_WITH_AS(poly_roots(Polynomial{}), "no roots of zero polynomial", Error);
}

TEST_CASE("random polynomials are reproduced from their roots") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 1 + trial % 10;
    std::vector<cplx> roots;
    for (int k = 0; k < deg; ++k) roots.push_back(oracle::random_disk_point(rng, 2.0));
    const auto coeffs = oracle::expand_roots(roots, cplx(0.7, -0.2));
    const Polynomial p(coeffs);
    const auto found = poly_roots(p);
    int total = 0;
    std::vector<cplx> flat;
    for (const auto& r : found) {
      total += r.multiplicity;
      for (int m = 0; m < r.multiplicity; ++m) flat.push_back(r.value);
    }
    CHECK(total == deg);
    const auto rebuilt = oracle::expand_roots(flat, p.leading());
    double scale = 0.0;
    for (auto c : coeffs) scale = std::max(scale, std::abs(c));
    CHECK(max_diff(rebuilt, coeffs) / scale < 1e-8);
  }
}

TEST_CASE("clustered multiple roots keep their multiplicity") {
  for (int m = 2; m <= 4; ++m) {
    std::vector<cplx> roots(m, std::polar(1.0, 0.7));
    roots.push_back(3.0);
    roots.push_back(-0.4 * I);
    const auto r = poly_roots(Polynomial(oracle::expand_roots(roots)));
    REQUIRE(r.size() == 3);
    const auto it = std::find_if(r.begin(), r.end(), [](const Root& x) { return x.multiplicity > 1; });
    REQUIRE(it != r.end());
    CHECK(it->multiplicity == m);
    CHECK(std::abs(it->value - std::polar(1.0, 0.7)) < 1e-8);
  }
}

TEST_CASE("exact division") {
  CHECK(max_diff(poly_divide_exact(Polynomial{-1.0, 0.0, 1.0}, Polynomial{-1.0, 1.0}).coeffs(), {1.0, 1.0}) < 1e-14);
  CHECK(max_diff(poly_divide_exact(Polynomial{0.5, -0.5}, Polynomial{1.0, -1.0}).coeffs(), {0.5}) < 1e-14);
  CHECK_THROWS_AS(poly_divide_exact(Polynomial{0.0, 0.0, 0.0, 1.0}, Polynomial{-1.0, 1.0}), Error);
  try {
    poly_divide_exact(Polynomial{0.0, 0.0, 0.0, 1.0}, Polynomial{-1.0, 1.0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
    CHECK(std::string(e.what()).find("not divisible") != std::string::npos);
  }
}

TEST_CASE("exact division round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    // Monic divisors with roots of moderate size, as produced by boundary zero sets.
    std::vector<cplx> roots;
    for (int k = 0; k <= trial % 8; ++k) roots.push_back(oracle::random_disk_point(rng, 1.5));
    const Polynomial d(oracle::expand_roots(roots));
    const auto h = oracle::random_polynomial(rng, trial % 9);
    const auto got = poly_divide_exact(d * h, d);
    CHECK(max_diff(got.coeffs(), std::vector<cplx>(h.coeffs().begin(), h.coeffs().end())) / h.max_norm() < 1e-10);
  }
}

TEST_CASE("rational functions reject denominators vanishing on the closed disk") {
  CHECK_THROWS_AS(RationalFunction(Polynomial{1.0}, Polynomial{1.0, -1.0}), Error);
  CHECK_THROWS_AS(RationalFunction(Polynomial{1.0}, Polynomial{0.5, 1.0}), Error);
  CHECK_THROWS_AS(RationalFunction(Polynomial{1.0}, Polynomial{}), Error);
  CHECK_NOTHROW(RationalFunction(Polynomial{1.0}, Polynomial{2.0, 1.0}));
}

TEST_CASE("rational functions cancel common factors") {
  const RationalFunction f(Polynomial{-2.0, 1.0} * Polynomial{1.0, 1.0}, Polynomial{-2.0, 1.0} * Polynomial{3.0});
  CHECK(*f.den().degree() == 0);
  CHECK(std::abs(f(0.3) - (1.3 / 3.0)) < 1e-13);
}

TEST_CASE("rational Taylor coefficients and derivatives against finite differences") {
  const RationalFunction f(Polynomial{1.0, 2.0, -0.5}, Polynomial{3.0, -1.0, 0.2 * I});
  const cplx z0(0.2, -0.3);
  const auto d = f.derivatives(z0, 3);
  CHECK(std::abs(d[0] - f(z0)) < 1e-14);
  for (int k = 1; k <= 3; ++k) {
    const cplx ref = oracle::cauchy_derivative([&](cplx z) { return f(z); }, z0, k, 0.1);
    CHECK(std::abs(d[k] - ref) < 1e-9 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("trig polynomials enforce Hermitian symmetry") {
  CHECK_THROWS_AS(TrigPolynomial(1, {1.0, 2.0, 3.0}), Error);
  TrigPolynomial w(1, {cplx(0.25, 0.1), 1.0, cplx(0.25, -0.1)});
  CHECK(std::abs(w(0.4) - (1.0 + 2.0 * std::real(cplx(0.25, -0.1) * std::polar(1.0, 0.4)))) < 1e-14);
}

TEST_CASE("boundary defect worked examples") {
  const auto w2 = boundary_defect(RationalFunction(Polynomial{0.5, 0.0, -0.5}));
  CHECK(w2.n() == 2);
  CHECK(max_diff(w2.coeffs(), {0.25, 0.0, 0.5, 0.0, 0.25}) < 1e-15);

  const auto w3 = boundary_defect(RationalFunction(Polynomial{0.25, 0.5, 0.25}));
  CHECK(max_diff(w3.coeffs(), {-1.0 / 16, -0.25, 5.0 / 8, -0.25, -1.0 / 16}) < 1e-15);

  const auto w0 = boundary_defect(RationalFunction(Polynomial{0.5}));
  CHECK(w0.n() == 0);
  CHECK(std::abs(w0[0] - 0.75) < 1e-15);
}

TEST_CASE("boundary defect matches pointwise evaluation over the corpus") {
  for (const auto& [name, q] : oracle::corpus()) {
    CAPTURE(name);
    const auto w = boundary_defect(q);
    double err = 0.0;
    for (cplx z : oracle::circle_points(1024)) {
      const double ref = (1.0 - std::norm(q(z))) * std::norm(q.den()(z));
      err = std::max(err, std::abs(w(std::arg(z)) - ref));
    }
    CHECK(err < 1e-10);
  }
}

TEST_CASE("functions leaving the ball are rejected") {
  try {
    boundary_defect(RationalFunction(Polynomial{0.0, 1.01}));
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInBall);
    CHECK(std::string(e.what()).find("q not in the closed unit ball") != std::string::npos);
  }
}
