#pragma once

#include <optional>
#include <vector>

#include "localpn/model.hpp"
#include "localpn/qseries.hpp"

namespace localpn {

/*
 * Closed-form recovery of q-series inside the ring generated by L^{+-1},
 * f_n(L)^{+-1} and the normalized half power sigma: set up the exact linear
 * system sum_t c_t * series(basis_t) = target on an independent canonical
 * basis and solve by Gaussian elimination over the field. A fit consumes all
 * but `surplus` coefficients for the solve and re-verifies the recovered
 * element on every coefficient, surplus included.
 */

struct FitWindows {
    int j_hi = 0; // L-powers 0..j_hi
    int e_lo = 0; // f-powers e_lo..e_hi
    int e_hi = 0;

    static FitWindows default_for_depth(int k) { return {3 * k + 3, -(3 * k + 3), 0}; }
    FitWindows doubled() const { return {2 * j_hi, 2 * e_lo, e_hi}; }
};

enum class FitStatus { Pass, Infeasible, Underdetermined };

std::string to_string(FitStatus s);

struct FitResult {
    FitStatus status = FitStatus::Infeasible;
    std::optional<GnElement> element;
    int unknowns = 0;
    int rows_used = 0;
    int surplus_checked = 0;
    std::string detail;
};

// target is recovered as body * sigma^half_power; windows are translated to
// the canonical basis for the configuration (pure powers of f_1 for n = 1,
// of the linear factor on the spl2 locus, and {L^j} + {(c0+c1 L) f^-e} for a
// squarefree quadratic f_2)
FitResult fit_gn(const LambdaConfig& cfg, int i, const QSeries& target, int half_power,
                 const FitWindows& win, int surplus = 10);

struct FitVerification {
    bool pass = false;
    int first_bad = -1; // q-power of the first mismatching coefficient
};

// exact agreement of gn_eval(element) with target on all coefficients;
// requires target truncation to exceed the fit-consumed rows by >= extra
FitVerification verify_fit(const GnElement& element, const LambdaConfig& cfg, int i,
                           const QSeries& target, int consumed_rows, int extra);

struct ConjectureCase {
    int i = 0;
    int k = 0;
    FitStatus status = FitStatus::Infeasible;
    bool windows_doubled = false;
    std::optional<GnElement> element;
};

struct ConjectureReport {
    int n = 0;
    std::string lambda;
    int depth = 0;
    bool all_pass = false;
    std::vector<ConjectureCase> cases;
};

// fit + verify every R_{k,i} for k <= depth, all fixed points; windows are
// the defaults for each k, doubled once if a fit comes back infeasible.
// jobs > 1 fans the (pure) per-fixed-point work out over threads; the
// report order is independent of the scheduling
ConjectureReport conjecture_report(const LambdaConfig& cfg, int depth, int surplus = 10,
                                   int jobs = 1);

} // namespace localpn
