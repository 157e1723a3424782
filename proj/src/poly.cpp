#include "brs/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

namespace brs {

Polynomial::Polynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { strip(); }

Polynomial::Polynomial(std::initializer_list<cplx> coeffs) : c_(coeffs) { strip(); }

void Polynomial::strip() {
  while (!c_.empty() && c_.back() == cplx{}) c_.pop_back();
}

Polynomial Polynomial::constant(cplx c) { return Polynomial(std::vector<cplx>{c}); }

Polynomial Polynomial::monomial(cplx c, int k) {
  std::vector<cplx> v(static_cast<std::size_t>(k) + 1, cplx{});
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Root> roots, cplx lead) {
  std::vector<cplx> v{lead};
  for (const auto& r : roots) {
    for (int m = 0; m < r.multiplicity; ++m) {
      v.push_back(cplx{});
      for (std::size_t k = v.size() - 1; k > 0; --k) v[k] = v[k - 1] - r.value * v[k];
      v[0] = -r.value * v[0];
    }
  }
  return Polynomial(std::move(v));
}

std::optional<int> Polynomial::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

cplx Polynomial::leading() const {
  if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

cplx Polynomial::operator()(cplx z) const {
  cplx acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Polynomial(std::move(d));
}

std::vector<cplx> Polynomial::taylor_at(cplx z0, int K) const {
  // Repeated synthetic division by (z - z0) yields the shifted coefficients.
  std::vector<cplx> work(c_);
  std::vector<cplx> out(static_cast<std::size_t>(K) + 1, cplx{});
  const int n = static_cast<int>(work.size());
  for (int k = 0; k <= K && k < n; ++k) {
    for (int i = n - 2; i >= k; --i) work[i] += z0 * work[i + 1];
    out[k] = work[k];
  }
  return out;
}

double Polynomial::max_norm() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::trimmed(double rel_tol) const {
  const double cut = rel_tol * max_norm();
  std::vector<cplx> v(c_);
  while (!v.empty() && std::abs(v.back()) <= cut) v.pop_back();
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(int n) const {
  Polynomial out = constant(1.0);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<cplx> v(std::max(a.size(), b.size()), cplx{});
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] + b[k];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<cplx> v(std::max(a.size(), b.size()), cplx{});
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] - b[k];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> v(a.size() + b.size() - 1, cplx{});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(cplx s, const Polynomial& p) {
  std::vector<cplx> v(p.c_);
  for (auto& c : v) c *= s;
  return Polynomial(std::move(v));
}

namespace {

// An m-fold root at c makes the first m Taylor coefficients of p at c vanish
// to rounding level.
bool is_multiple_root(const Polynomial& p, cplx c, int m) {
  const int n = *p.degree();
  const auto t = p.taylor_at(c, n);
  const double s = std::max(1.0, std::abs(c));
  double top = 0.0;
  std::vector<double> w(t.size());
  double sk = 1.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    w[k] = std::abs(t[k]) * sk;
    top = std::max(top, w[k]);
    sk *= s;
  }
  constexpr double kEta = 1e-9;
  for (int k = 0; k < m; ++k)
    if (w[k] > kEta * top) return false;
  return true;
}

// Guarded Newton iteration on f: only steps that reduce |f| are taken.
cplx polish(const Polynomial& f, cplx z, double max_step) {
  const Polynomial df = f.derivative();
  cplx fz = f(z);
  for (int it = 0; it < 30; ++it) {
    const cplx d = df(z);
    if (d == cplx{}) break;
    const cplx step = fz / d;
    if (std::abs(step) > max_step) break;
    const cplx zn = z - step;
    const cplx fn = f(zn);
    if (!(std::abs(fn) < std::abs(fz))) break;
    z = zn;
    fz = fn;
    if (fz == cplx{}) break;
  }
  return z;
}

struct Cluster {
  cplx sum;
  int count;
  int id;
  cplx centroid() const { return sum / static_cast<double>(count); }
};

}  // namespace

std::vector<Root> poly_roots(const Polynomial& p, double cluster_tol) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "no roots of zero polynomial");
  std::vector<Root> out;

  std::size_t lowest = 0;
  while (p[lowest] == cplx{}) ++lowest;
  if (lowest > 0) out.push_back({cplx{}, static_cast<int>(lowest)});
  const Polynomial core(std::vector<cplx>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(lowest), p.coeffs().end()));
  const int n = *core.degree();

  if (n == 1) {
    out.push_back({-core[0] / core[1], 1});
  } else if (n > 1) {
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    const cplx lead = core.leading();
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -core[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(C, false);
    if (solver.info() != Eigen::Success) {
      std::ostringstream msg;
      msg << "root finder did not converge (degree " << n << ")";
      throw Error(ErrorKind::NoConvergence, msg.str());
    }

    std::vector<Cluster> clusters;
    for (int i = 0; i < n; ++i) clusters.push_back({solver.eigenvalues()(i), 1, i});
    int next_id = n;
    std::set<std::pair<int, int>> rejected;
    constexpr double kLooseRadius = 0.05;

    for (;;) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = 0; i < clusters.size(); ++i) {
        for (std::size_t j = i + 1; j < clusters.size(); ++j) {
          if (rejected.count(std::minmax(clusters[i].id, clusters[j].id))) continue;
          const double d = std::abs(clusters[i].centroid() - clusters[j].centroid());
          if (d < best) {
            best = d;
            bi = i;
            bj = j;
          }
        }
      }
      if (!std::isfinite(best)) break;
      const cplx ci = clusters[bi].centroid();
      const cplx cj = clusters[bj].centroid();
      const double scale = std::max({1.0, std::abs(ci), std::abs(cj)});
      if (best > kLooseRadius * scale) break;
      Cluster merged{clusters[bi].sum + clusters[bj].sum, clusters[bi].count + clusters[bj].count, next_id};
      if (best > cluster_tol * scale && !is_multiple_root(core, merged.centroid(), merged.count)) {
        rejected.insert(std::minmax(clusters[bi].id, clusters[bj].id));
        continue;
      }
      ++next_id;
      clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
      clusters[bi] = merged;
    }

    // Polishing steps may not leave the neighbourhood of the cluster.
    for (const auto& cl : clusters) {
      const cplx c = cl.centroid();
      double sep = std::numeric_limits<double>::infinity();
      for (const auto& other : clusters)
        if (other.id != cl.id) sep = std::min(sep, std::abs(other.centroid() - c));
      const double max_step = std::min(1e-3 * std::max(1.0, std::abs(c)), 0.25 * sep);
      Polynomial target = core;
      for (int k = 1; k < cl.count; ++k) target = target.derivative();
      out.push_back({polish(target, c, max_step), cl.count});
    }
  }

  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (std::abs(ma - mb) > 1e-9 * std::max(1.0, std::max(ma, mb))) return ma < mb;
    auto ang = [](cplx z) {
      double t = std::arg(z);
      return t < 0 ? t + 2 * std::numbers::pi : t;
    };
    return ang(a.value) < ang(b.value);
  });
  return out;
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  if (p.size() < d.size()) return {Polynomial{}, p};
  std::vector<cplx> rem(p.coeffs().begin(), p.coeffs().end());
  const std::size_t nd = d.size();
  std::vector<cplx> quot(p.size() - nd + 1, cplx{});
  const cplx lead = d.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const cplx f = rem[k + nd - 1] / lead;
    quot[k] = f;
    for (std::size_t j = 0; j < nd; ++j) rem[k + j] -= f * d[j];
  }
  rem.resize(nd - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_divide_exact(const Polynomial& p, const Polynomial& d, double rem_tol) {
  auto [q, r] = poly_divmod(p, d);
  const double rn = r.max_norm();
  if (rn > rem_tol * p.max_norm()) {
    std::ostringstream msg;
    msg << "not divisible: remainder max-norm " << rn << " vs dividend " << p.max_norm();
    throw Error(ErrorKind::NotDivisible, msg.str());
  }
  return q;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidInput, "rational function with zero denominator");
  if (*den_.degree() == 0) return;
  const auto roots = poly_roots(den_);
  for (const auto& r : roots) {
    if (std::abs(r.value) <= 1.0 + kDiskTol) {
      std::ostringstream msg;
      msg << "denominator vanishes in the closed unit disk at (" << r.value.real() << ", "
          << r.value.imag() << ")";
      throw Error(ErrorKind::DenominatorVanishes, msg.str());
    }
  }
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1.0);
    return;
  }
  for (const auto& r : roots) {
    for (int m = 0; m < r.multiplicity; ++m) {
      if (!num_.degree() || *num_.degree() == 0) return;
      const Polynomial lin{-r.value, 1.0};
      auto [qn, rn] = poly_divmod(num_, lin);
      if (rn.max_norm() > 1e-9 * num_.max_norm()) break;
      num_ = qn;
      den_ = poly_divmod(den_, lin).first;
    }
  }
}

std::vector<cplx> series_divide(std::span<const cplx> P, std::span<const cplx> Q, int K) {
  auto at = [](std::span<const cplx> s, int k) { return k < static_cast<int>(s.size()) ? s[k] : cplx{}; };
  const cplx q0 = at(Q, 0);
  if (q0 == cplx{}) throw Error(ErrorKind::InvalidInput, "series division by a series vanishing at the centre");
  std::vector<cplx> R(static_cast<std::size_t>(K) + 1, cplx{});
  const int nq = static_cast<int>(Q.size());
  for (int k = 0; k <= K; ++k) {
    cplx acc = at(P, k);
    for (int j = 1; j <= std::min(k, nq - 1); ++j) acc -= Q[j] * R[k - j];
    R[k] = acc / q0;
  }
  return R;
}

std::vector<cplx> series_multiply(std::span<const cplx> A, std::span<const cplx> B, int K) {
  std::vector<cplx> out(static_cast<std::size_t>(K) + 1, cplx{});
  for (int i = 0; i <= K && i < static_cast<int>(A.size()); ++i)
    for (int j = 0; i + j <= K && j < static_cast<int>(B.size()); ++j) out[i + j] += A[i] * B[j];
  return out;
}

std::vector<cplx> RationalFunction::taylor_at(cplx z0, int K) const {
  return series_divide(num_.taylor_at(z0, K), den_.taylor_at(z0, K), K);
}

std::vector<cplx> RationalFunction::derivatives(cplx z, int K) const {
  auto t = taylor_at(z, K);
  for (int k = 2; k <= K; ++k) t[k] *= factorial(k);
  return t;
}

RationalFunction RationalFunction::normalized() const {
  const cplx d0 = den_(0.0);
  const cplx u = std::conj(d0) / std::abs(d0);
  RationalFunction out = *this;
  out.num_ = u * num_;
  out.den_ = u * den_;
  std::vector<cplx> dc(out.den_.coeffs().begin(), out.den_.coeffs().end());
  dc[0] = std::abs(d0);
  out.den_ = Polynomial(std::move(dc));
  return out;
}

TrigPolynomial::TrigPolynomial(int n, std::vector<cplx> c, double herm_tol) : n_(n), c_(std::move(c)) {
  if (n < 0 || c_.size() != static_cast<std::size_t>(2 * n + 1))
    throw Error(ErrorKind::InvalidTrigPolynomial, "trig polynomial needs 2n+1 coefficients");
  const double scale = max_norm();
  for (int k = 0; k <= n; ++k) {
    const cplx pos = c_[n + k], neg = c_[n - k];
    if (std::abs(neg - std::conj(pos)) > herm_tol * scale)
      throw Error(ErrorKind::InvalidTrigPolynomial, "trig polynomial is not Hermitian symmetric");
    const cplx avg = 0.5 * (pos + std::conj(neg));
    c_[n + k] = avg;
    c_[n - k] = std::conj(avg);
  }
  c_[n] = c_[n].real();
}

cplx TrigPolynomial::operator[](int k) const {
  if (k < -n_ || k > n_) return {};
  return c_[static_cast<std::size_t>(k + n_)];
}

double TrigPolynomial::operator()(double theta) const {
  double v = c_[n_].real();
  for (int k = 1; k <= n_; ++k) v += 2.0 * (c_[n_ + k] * std::polar(1.0, k * theta)).real();
  return v;
}

double TrigPolynomial::max_norm() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

TrigPolynomial TrigPolynomial::reduced(double rel_tol) const {
  const double cut = rel_tol * max_norm();
  int n = n_;
  while (n > 0 && std::abs((*this)[n]) <= cut) --n;
  std::vector<cplx> c(c_.begin() + (n_ - n), c_.begin() + (n_ + n + 1));
  return TrigPolynomial(n, std::move(c));
}

TrigPolynomial boundary_defect(const RationalFunction& q) {
  const auto& num = q.num();
  const auto& den = q.den();
  const int n = static_cast<int>(std::max(num.size(), den.size())) - 1;
  std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1), cplx{});
  for (int k = 0; k <= n; ++k) {
    cplx acc{};
    for (int j = 0; j + k <= n; ++j) {
      acc += den[j + k] * std::conj(den[j]);
      acc -= num[j + k] * std::conj(num[j]);
    }
    c[n + k] = acc;
    c[n - k] = std::conj(acc);
  }
  TrigPolynomial w(n, std::move(c));

  double scale = 0.0;
  for (const auto& d : den.coeffs()) scale += std::norm(d);
  constexpr int kGrid = 4096;
  for (int i = 0; i < kGrid; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / kGrid;
    const double v = w(theta);
    if (v < -kNegTol * scale) {
      std::ostringstream msg;
      msg << "q not in the closed unit ball: 1 - |q|^2 = " << v / scale << " at theta = " << theta;
      throw Error(ErrorKind::NotInBall, msg.str());
    }
  }
  return w;
}

}  // namespace brs
