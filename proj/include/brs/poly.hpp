#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "brs/common.hpp"

namespace brs {

struct Root {
  cplx value;
  int multiplicity = 1;
};

/// Complex polynomial in ascending coefficient order. The zero polynomial is
/// the empty coefficient sequence; exact trailing zeros are always stripped.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coeffs);
  Polynomial(std::initializer_list<cplx> coeffs);

  static Polynomial constant(cplx c);
  static Polynomial monomial(cplx c, int k);
  /// lead * prod (z - root)^multiplicity
  static Polynomial from_roots(std::span<const Root> roots, cplx lead = 1.0);

  bool is_zero() const { return c_.empty(); }
  /// Undefined (nullopt) for the zero polynomial.
  std::optional<int> degree() const;

  std::span<const cplx> coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  /// Coefficient of z^k, zero past the degree.
  cplx operator[](std::size_t k) const { return k < c_.size() ? c_[k] : cplx{}; }
  cplx leading() const;

  cplx operator()(cplx z) const;
  Polynomial derivative() const;
  /// Coefficients t_k with p(z0 + w) = sum t_k w^k, k = 0..K.
  std::vector<cplx> taylor_at(cplx z0, int K) const;

  double max_norm() const;
  /// Drops trailing coefficients below rel_tol * max_norm().
  Polynomial trimmed(double rel_tol) const;
  Polynomial pow(int n) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(cplx s, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p) { return cplx{-1.0} * p; }

 private:
  void strip();
  std::vector<cplx> c_;
};

/// Roots with multiplicities. Companion-matrix eigenvalues are clustered
/// (nearest-pair merging, validated by the Taylor coefficients of p at the
/// cluster centroid) and then polished by Newton's method on p^(m-1).
std::vector<Root> poly_roots(const Polynomial& p, double cluster_tol = 1e-6);

/// Long division; remainder is returned second.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& p, const Polynomial& d);

/// Quotient of p by d when the remainder is below rem_tol * max_norm(p).
Polynomial poly_divide_exact(const Polynomial& p, const Polynomial& d, double rem_tol = 1e-9);

/// p / d with den zero-free on the closed unit disk. Common factors are
/// cancelled at construction.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1.0)) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial::constant(1.0)) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  cplx operator()(cplx z) const { return num_(z) / den_(z); }
  /// Taylor coefficients of the function around z0 up to order K.
  std::vector<cplx> taylor_at(cplx z0, int K) const;
  /// k-th derivative at z for k = 0..K.
  std::vector<cplx> derivatives(cplx z, int K) const;

  /// Same function with the denominator rotated so that den(0) > 0.
  RationalFunction normalized() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Power-series quotient: Taylor coefficients of P/Q given those of P and Q
/// (Q[0] != 0), truncated to K + 1 terms.
std::vector<cplx> series_divide(std::span<const cplx> P, std::span<const cplx> Q, int K);
/// Truncated Cauchy product.
std::vector<cplx> series_multiply(std::span<const cplx> A, std::span<const cplx> B, int K);

/// Laurent polynomial sum_{k=-n..n} c_k e^{ik theta}, real on the circle.
class TrigPolynomial {
 public:
  TrigPolynomial() : n_(0), c_(1, cplx{}) {}
  /// c holds c_{-n}, ..., c_n. Hermitian symmetry is checked against
  /// herm_tol * max|c| and then imposed exactly.
  TrigPolynomial(int n, std::vector<cplx> c, double herm_tol = 1e-10);

  int n() const { return n_; }
  cplx operator[](int k) const;
  std::span<const cplx> coeffs() const { return c_; }
  double operator()(double theta) const;
  double max_norm() const;
  /// Removes outer coefficient pairs below rel_tol * max_norm().
  TrigPolynomial reduced(double rel_tol) const;

 private:
  int n_;
  std::vector<cplx> c_;
};

/// |den|^2 - |num|^2 on the circle as a trig polynomial, rejecting q outside
/// the closed unit ball.
TrigPolynomial boundary_defect(const RationalFunction& q);

}  // namespace brs
