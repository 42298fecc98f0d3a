#pragma once

#include <optional>
#include <vector>

#include "localpn/ifunction.hpp"
#include "localpn/model.hpp"
#include "localpn/zlaurent.hpp"

namespace localpn {

/*
 * Asymptotic data of the restricted I-function at the fixed point i:
 *
 *   I|_{H=lambda_i} = e^{mu/z} (R_0 + R_1 z + R_2 z^2 + ...)
 *
 * solved layer by layer in z from the Picard-Fuchs operator conjugated by
 * e^{mu/z} (which substitutes M -> L_i + z D). The data is produced in the
 * variable normalized so that L_i is the root of the defining polynomial
 * p(L) - (-1)^{n+1} q L^{n+1}; the I-function's own q differs from this one
 * by q -> (n+1)^{n+1} q, and verify_asymptotic bridges the two by scaling
 * row d with (n+1)^{(n+1)d}.
 */
struct AsymptoticData {
    int i = 0;
    int trunc = 0;
    int depth = 0;       // K: R_0..R_K are present
    QSeries L;           // root series, L(0) = lambda_i
    QSeries mu;          // mu(0) = 0, lambda_i + D mu = L
    std::vector<QSeries> R; // R_0(0) = 1, R_k(0) = 0 for k >= 1
};

AsymptoticData solve_asymptotics(const LambdaConfig& cfg, int i, int depth, int trunc);

struct VerifyReport {
    std::string check;
    bool pass = false;
    std::optional<QZSeries::Mismatch> mismatch;
    std::string window; // human-readable description of the compared window
};

/*
 * Expand e^{mu/z} (sum_k R_k z^k) as a QZSeries and compare with ifun_series
 * row by row. Rows 0..trunc are compared on z-exponents [-d, depth - trunc]
 * (the part of the window the available R's determine completely); the
 * caller should solve with depth >= trunc.
 */
VerifyReport verify_asymptotic(const LambdaConfig& cfg, int i, const AsymptoticData& data,
                               int trunc);

// convenience: mu_i alone, the antiderivative of L_i - lambda_i
QSeries mu_series(const LambdaConfig& cfg, int i, int trunc);

// mirror map of local P^1: Q(q) = q exp(2 sum_{d>=1} (2d-1)!/(d!)^2 q^d),
// returned to truncation order trunc (coefficient of q^0 is 0)
QSeries mirror_map_p1(int trunc);

} // namespace localpn
