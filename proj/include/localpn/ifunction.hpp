#pragma once

#include "localpn/model.hpp"
#include "localpn/zlaurent.hpp"

namespace localpn {

/*
 * Restriction of the local P^n I-function to the fixed point H = lambda_i:
 *
 *   I|_{H=lambda_i} = sum_d q^d C_d(z),
 *   C_d(z) = prod_{k=0}^{(n+1)d-1} (-(n+1) lambda_i - k z)
 *          / prod_{j=0}^{n} prod_{k=1}^{d} (lambda_i - lambda_j + k z).
 *
 * The numerator product starts at k = 0; only that convention is annihilated
 * by the Picard-Fuchs operator below, which is checked by the test suite.
 */

// q^d coefficient as a reduced ratio of z-polynomials
RationalFunction ifun_coeff(const LambdaConfig& cfg, int i, int d);

// rows d = 0..trunc expanded on the window [-d, z_max]
QZSeries ifun_series(const LambdaConfig& cfg, int i, int trunc, int z_max);

/*
 * Apply the Picard-Fuchs operator
 *   prod_j (M - lambda_j) - q prod_{k=0}^{n} (-(n+1) M - k z),   M = lambda_i + z D,
 * row-wise: M acts on row d as multiplication by (lambda_i + d z) and the
 * final q multiplication shifts rows. ifun_series is annihilated exactly.
 */
QZSeries pf_apply(const LambdaConfig& cfg, int i, const QZSeries& target);

} // namespace localpn
