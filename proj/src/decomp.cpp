#include "brs/decomp.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "brs/limits.hpp"

namespace brs {

namespace {

struct GramSolve {
  Eigen::VectorXcd c;
  double condition;
  double backward_error;
};

GramSolve solve_gram(const Eigen::MatrixXcd& G, const Eigen::VectorXcd& d) {
  GramSolve out;
  Eigen::LLT<Eigen::MatrixXcd> llt(G);
  out.c = llt.info() == Eigen::Success ? Eigen::VectorXcd(llt.solve(d)) : Eigen::VectorXcd(G.partialPivLu().solve(d));
  const Eigen::MatrixXcd H = 0.5 * (G + G.adjoint());
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(H, Eigen::EigenvaluesOnly).eigenvalues();
  out.condition = ev.minCoeff() > 0 ? ev.maxCoeff() / ev.minCoeff() : std::numeric_limits<double>::infinity();
  const double dn = d.norm();
  out.backward_error = (G * out.c - d).norm() / (dn > 0 ? dn : 1.0);
  return out;
}

/// h with prod (z - zeta_j)^{m_j} h = F, coefficient by coefficient.
HardyVector deconvolve(HardyVector F, const BoundaryZeroSet& zeros) {
  for (const auto& z : zeros.zeros)
    for (int rep = 0; rep < z.m; ++rep) {
      cplx prev{};
      for (auto& c : F.coeffs) {
        const cplx hk = (prev - c) / z.zeta;
        c = hk;
        prev = hk;
      }
    }
  return F;
}

void finish_tail(Decomposition& dec) {
  const int M = dec.h.M();
  const double total = dec.h.norm();
  dec.tail_norm = total > 1e-14 ? dec.h.norm(M / 2, M) / total : 0.0;
  dec.h_certified = dec.tail_norm < 1e-2;
}

void solve_coefficients(const PowerSpace& space, Decomposition& dec) {
  const Gram G = gram_matrix(space);
  const auto sol = solve_gram(G.entries, dec.d);
  dec.c = sol.c;
  dec.gram_condition = sol.condition;
  dec.backward_error = sol.backward_error;
}

Polynomial drop_small_tail(const Polynomial& p, double cut) {
  std::vector<cplx> v(p.coeffs().begin(), p.coeffs().end());
  while (!v.empty() && std::abs(v.back()) <= cut) v.pop_back();
  return Polynomial(std::move(v));
}

}  // namespace

HardyVector kernel_coeffs(const PowerSpace& space, int j, int ell, int M) {
  const cplx zeta = space.zeros().zeros.at(j).zeta;
  if (space.F().integer_power()) return analytic_coeffs(kernel_rational_form(space, zeta, ell), M);
  const auto v = space.kernel(zeta, ell);
  return analytic_coeffs([&](cplx z) { return v(z); }, M);
}

Decomposition decompose(const PowerSpace& space, const RationalFunction& f, int M) {
  const auto& Z = space.zeros();
  Decomposition dec;
  dec.index = Z.index();
  const int N = static_cast<int>(dec.index.size());
  dec.d.resize(N);
  dec.c.resize(N);
  if (N == 0) {
    dec.h_exact = f;
    dec.h = analytic_coeffs(f, M);
    finish_tail(dec);
    return dec;
  }
  for (int i = 0; i < N; ++i) {
    const auto [j, ell] = dec.index[i];
    dec.d(i) = f.derivatives(Z.zeros[j].zeta, ell)[ell];
  }
  solve_coefficients(space, dec);

  if (const auto n = space.F().integer_power()) {
    // Residual over the common denominator f.den * den(q)^n, then exact division.
    const Polynomial Q = space.q().den().pow(*n);
    Polynomial R = f.num() * Q;
    double scale = R.max_norm();
    for (int k = 0; k < N; ++k) {
      const auto [j, ell] = dec.index[k];
      const auto form = kernel_rational_form(space, Z.zeros[j].zeta, ell);
      const Polynomial term = dec.c(k) * (f.den() * form.num() * poly_divide_exact(Q, form.den()));
      scale = std::max(scale, term.max_norm());
      R = R - term;
    }
    auto [quo, rem] = poly_divmod(R, Z.monic_product());
    if (rem.max_norm() > 1e-8 * scale) {
      std::ostringstream msg;
      msg << "not divisible: residual does not vanish at the boundary zeros (remainder " << rem.max_norm() << ")";
      throw Error(ErrorKind::NotDivisible, msg.str());
    }
    dec.h_exact = RationalFunction(drop_small_tail(quo, 1e-14 * scale), f.den() * Q);
    dec.h = analytic_coeffs(*dec.h_exact, M);
  } else {
    HardyVector F = analytic_coeffs(f, M);
    for (int k = 0; k < N; ++k) {
      const auto vk = kernel_coeffs(space, dec.index[k].first, dec.index[k].second, M);
      for (int i = 0; i <= M; ++i) F.coeffs[i] -= dec.c(k) * vk.coeffs[i];
    }
    dec.h = deconvolve(std::move(F), Z);
  }
  finish_tail(dec);
  return dec;
}

Decomposition decompose(const PowerSpace& space, const HardyVector& f) {
  if (!space.pair()) throw Error(ErrorKind::Inner, "q is inner: extreme point, no mate");
  const auto& Z = space.zeros();
  const int L = f.M();
  auto ladder = membership_ladder(space.pair()->a, f, L / 4);
  if (ladder.verdict != Verdict::Member) {
    const bool non = ladder.verdict == Verdict::NonMember;
    throw Error(non ? ErrorKind::NotMember : ErrorKind::Inconclusive,
                std::string("input rejected by membership test: ") + to_string(ladder.verdict));
  }
  Decomposition dec;
  dec.membership = std::move(ladder);
  dec.index = Z.index();
  const int N = static_cast<int>(dec.index.size());
  dec.d.resize(N);
  dec.c.resize(N);
  if (N > 0) {
    for (int i = 0; i < N; ++i) {
      const auto [j, ell] = dec.index[i];
      const cplx zeta = Z.zeros[j].zeta;
      const int l = ell;
      dec.d(i) = radial_limit([&](double t) { return f.jet(t * zeta, l)[l] * factorial(l); }).value;
    }
    solve_coefficients(space, dec);
  }
  HardyVector F = f;
  for (int k = 0; k < N; ++k) {
    const auto vk = kernel_coeffs(space, dec.index[k].first, dec.index[k].second, L);
    for (int i = 0; i <= L; ++i) F.coeffs[i] -= dec.c(k) * vk.coeffs[i];
  }
  dec.h = deconvolve(std::move(F), Z);
  finish_tail(dec);
  return dec;
}

cplx reconstruct(const PowerSpace& space, const Decomposition& dec, cplx z) {
  const auto& Z = space.zeros();
  cplx out = Z.monic_product()(z) * (dec.h_exact ? (*dec.h_exact)(z) : dec.h(z));
  for (int k = 0; k < static_cast<int>(dec.index.size()); ++k) {
    const auto [j, ell] = dec.index[k];
    out += dec.c(k) * space.kernel(Z.zeros[j].zeta, ell)(z);
  }
  return out;
}

OrthogonalityReport verify_orthogonality(const PowerSpace& space, const Polynomial& g, cplx zeta, int ell,
                                         double tol) {
  if (!space.pair()) throw Error(ErrorKind::Inner, "q is inner: extreme point, no mate");
  space.validate(zeta, ell);
  const auto& a = space.pair()->a;
  const RationalFunction ag(a.num() * g, a.den());
  const auto lim = radial_limit([&](double t) { return ag.derivatives(t * zeta, ell)[ell]; });
  return {lim.value, lim.change, std::abs(lim.value) < tol};
}

AlgebraicSplit algebraic_decompose(const BoundaryZeroSet& zeros, const RationalFunction& f) {
  const auto idx = zeros.index();
  const int N = static_cast<int>(idx.size());
  if (N == 0) return {Polynomial{}, f};
  Eigen::VectorXcd d(N);
  for (int i = 0; i < N; ++i) d(i) = f.derivatives(zeros.zeros[idx[i].first].zeta, idx[i].second)[idx[i].second];
  const Eigen::VectorXcd b = phi_evaluation_matrix(zeros).partialPivLu().solve(d);
  const auto basis = phi_basis(zeros);
  Polynomial p;
  for (int k = 0; k < N; ++k) p = p + b(k) * basis[k];
  const Polynomial pd = p * f.den();
  const Polynomial R = f.num() - pd;
  auto [quo, rem] = poly_divmod(R, zeros.monic_product());
  const double scale = std::max(f.num().max_norm(), pd.max_norm());
  if (rem.max_norm() > 1e-8 * scale) throw Error(ErrorKind::NotDivisible, "not divisible: interpolation residual");
  return {p, RationalFunction(drop_small_tail(quo, 1e-14 * scale), f.den())};
}

SetsEqualReport sets_equal_check(const RationalFunction& q, double r, int M) {
  SetsEqualReport rep{{}, true};
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.items.push_back({std::move(name), pass, std::move(detail)});
    rep.pass = rep.pass && pass;
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  };

  const PowerSpace Sr(q, r), S1(q, 1.0);
  if (!Sr.pair()) throw Error(ErrorKind::Inner, "q is inner: extreme point, no mate");
  const auto& a = Sr.pair()->a;
  const auto idx = Sr.zeros().index();
  auto label = [](const char* what, int j, int ell) {
    std::ostringstream s;
    s << what << "[" << j << "," << ell << "]";
    return s.str();
  };

  for (const auto& [j, ell] : idx) {
    const std::string name = label("kernel-in-range", j, ell);
    guarded(name, [&] {
      const auto ladder = membership_ladder(a, kernel_coeffs(Sr, j, ell, 4 * M), M);
      std::ostringstream s;
      s << "verdict=" << to_string(ladder.verdict) << " residual=" << ladder.residual.back()
        << " norm growth=" << ladder.solution_norm[2] / ladder.solution_norm[1];
      add(name, ladder.verdict == Verdict::Member, s.str());
    });
  }

  for (const auto& [j, ell] : idx) {
    const std::string name = label("unit-power-kernel-decomposes", j, ell);
    guarded(name, [&] {
      const auto v1 = kernel_rational_form(S1, S1.zeros().zeros[j].zeta, ell);
      const auto dec = decompose(Sr, v1, M);
      double recon = 0.0;
      for (int i = 0; i < 16; ++i) {
        const cplx z = std::polar(0.5 + 0.025 * i, 0.7 + 0.39 * i);
        recon = std::max(recon, std::abs(reconstruct(Sr, dec, z) - v1(z)));
      }
      std::ostringstream s;
      s << "backward=" << dec.backward_error << " reconstruction=" << recon << " tail=" << dec.tail_norm;
      add(name, dec.backward_error <= 1e-8 && recon < 1e-6 && dec.h_certified, s.str());
    });
  }

  guarded("mate-ratio-bounds", [&] {
    const auto rb = mate_modulus_ratio_bounds(Sr.q(), r);
    std::ostringstream s;
    s << "lo=" << rb.lo << " hi=" << rb.hi;
    add("mate-ratio-bounds", rb.lo > 0 && std::isfinite(rb.hi), s.str());
  });
  return rep;
}

}  // namespace brs
