#pragma once

#include "brs/poly.hpp"

namespace brs {

/// Fejer-Riesz factorization: returns p with |p(e^{it})|^2 = w(e^{it}),
/// no zeros in the open unit disk, and p(0) > 0.
///
/// The roots of s(z) = z^n w(z) are paired as (alpha, 1/conj(alpha)); the
/// representatives with |alpha| >= 1 form p. Roots on the circle must have
/// even multiplicity 2k and enter p with multiplicity k. The positive scale is
/// matched against the top Laurent coefficient of w, then p is rotated so that
/// p(0) > 0. `tol` bounds |p|^2 - w on a 4096-point grid relative to max|w|.
Polynomial fejer_riesz(const TrigPolynomial& w, double tol = 1e-9);

}  // namespace brs
