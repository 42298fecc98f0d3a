#pragma once

#include <map>

#include "localpn/model.hpp"
#include "localpn/polynomial.hpp"
#include "localpn/qseries.hpp"

namespace localpn {

/*
 * The normalized ODE system in the L-coordinate: with D_i = (D L_i)^{-1} D
 * (ordinary d/dL on rational functions of L_i) and Phi_k = f_n(L_i)^{1/2} R_k,
 *
 *   D_i Phi_p = sum_{l=0}^{n-1} sum_{p'=0}^{l+2} A[{l,p'}] D_i^{p'} Phi_{p-1-l}.
 *
 * The table is obtained fully symbolically: the conjugated Picard-Fuchs
 * operator is rebuilt over rational functions of L (using q = p(L)/((-1)^{n+1} L^{n+1})
 * and D = (L p(L)/f_n(L)) d/dL), expanded in z-layers, and conjugated by
 * f^{1/2} through the shift D_i -> D_i - f'/(2f). The same table serves
 * every fixed point i.
 */
struct LOdeSystem {
    int level = 0; // n
    Poly f;        // localizer whose powers carry all poles: f_1, or s_1 L - s_2 on spl2
    std::map<std::pair<int, int>, RationalFunction> A; // (l, p) -> coefficient
    RationalFunction normalizer; // N(L) with T_1 = N * D_i; diagnostic

    const RationalFunction& coeff(int l, int p) const { return A.at({l, p}); }
};

// n = 1 works for any admissible weights; n = 2 requires the spl2
// specialization (and s_1 != 0). Other levels are not supported.
LOdeSystem derive_L_ode(const LambdaConfig& cfg);

// evaluate a rational function of L on the series L_i(q)
QSeries eval_ratfunc_at_series(const RationalFunction& rf, const QSeries& L);

/*
 * Residual of the system applied to the q-space solution: feeds the
 * Phi-series (normalized as Phi_k / Phi_0 = R_k / R_0) through the table and
 * returns the max |...| == 0 check as a boolean along with the residual of
 * the first failing layer. Exact; used as the cross-module consistency
 * oracle.
 */
bool lode_annihilates(const LOdeSystem& sys, const LambdaConfig& cfg, int i,
                      const std::vector<QSeries>& R, int trunc);

} // namespace localpn
