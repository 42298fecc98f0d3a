#include "localpn/fitting.hpp"

#include <future>
#include <sstream>

#include "localpn/asymptotics.hpp"
#include "localpn/errors.hpp"

namespace localpn {

std::string to_string(FitStatus s) {
    switch (s) {
        case FitStatus::Pass: return "pass";
        case FitStatus::Infeasible: return "infeasible";
        case FitStatus::Underdetermined: return "underdetermined";
    }
    return "?";
}

namespace {

struct BasisElement {
    GnElement::Term shape; // coefficient slot c is ignored
    QSeries series;
};

// canonical independent basis for the configuration, windows translated
std::vector<BasisElement> canonical_basis(const LambdaConfig& cfg, int i, int half_power,
                                          const FitWindows& win, int trunc, GnBase& base_out) {
    const QSeries L = L_series(cfg, i, trunc);
    const QSeries sigma = half_power ? half_power_series(cfg, i, trunc) : QSeries::one(trunc);
    std::vector<BasisElement> basis;

    const Poly f = f_poly(cfg);
    const bool linear_f = f.degree() == 1;
    const bool spl2_square = cfg.n() == 2 && cfg.specialization_spl2() && !cfg.sym(1).is_zero();

    if (linear_f || spl2_square) {
        // powers of the linear polynomial u: span{L^j f^e} = span{u^t}
        base_out = linear_f ? GnBase::FPoly : GnBase::LinearFactor;
        const Poly u = gn_base_poly(base_out, cfg);
        const int scale = linear_f ? 1 : 2; // f = u^2/s_1 on spl2
        const int t_lo = scale * win.e_lo;
        const int t_hi = scale * win.e_hi + win.j_hi;
        const QSeries uL = eval_poly_at_series(u, L);
        const QSeries uL_inv = ps_invert(uL);
        for (int t = t_lo; t <= t_hi; ++t) {
            QSeries s = (t >= 0 ? ps_pow(uL, t) : ps_pow(uL_inv, -t)) * sigma;
            basis.push_back({GnElement::Term{0, t, Scalar(1)}, std::move(s)});
        }
        return basis;
    }

    // squarefree quadratic (or higher) f: {L^j} plus {L^r f^e, r < deg f, e < 0}
    base_out = GnBase::FPoly;
    if (win.e_hi > 0)
        throw std::domain_error("positive f-powers fold into the polynomial window for quadratic f");
    const QSeries fL = eval_poly_at_series(f, L);
    const QSeries fL_inv = ps_invert(fL);
    for (int j = 0; j <= win.j_hi; ++j)
        basis.push_back({GnElement::Term{j, 0, Scalar(1)}, ps_pow(L, j) * sigma});
    for (int e = -1; e >= win.e_lo; --e)
        for (int r = 0; r < f.degree(); ++r)
            basis.push_back(
                {GnElement::Term{r, e, Scalar(1)}, ps_pow(L, r) * ps_pow(fL_inv, -e) * sigma});
    return basis;
}

} // namespace

FitResult fit_gn(const LambdaConfig& cfg, int i, const QSeries& target, int half_power,
                 const FitWindows& win, int surplus) {
    FitResult res;
    if (win.e_lo > win.e_hi || win.j_hi < 0)
        throw std::domain_error("empty fit windows");

    GnBase base = GnBase::FPoly;
    std::vector<BasisElement> basis = canonical_basis(cfg, i, half_power, win, target.trunc(), base);
    const int unknowns = static_cast<int>(basis.size());
    const int rows_total = target.trunc() + 1;
    const int rows_used = rows_total - surplus;
    res.unknowns = unknowns;
    res.rows_used = rows_used;
    res.surplus_checked = surplus;
    if (rows_used < unknowns) {
        std::ostringstream os;
        os << "need at least " << unknowns + surplus << " coefficients, have " << rows_total;
        throw std::domain_error(os.str());
    }

    // exact Gaussian elimination on the rows_used x (unknowns+1) system
    std::vector<std::vector<Scalar>> m(static_cast<size_t>(rows_used));
    for (int r = 0; r < rows_used; ++r) {
        auto& row = m[static_cast<size_t>(r)];
        row.reserve(static_cast<size_t>(unknowns) + 1);
        for (const auto& b : basis) row.push_back(b.series.at(r));
        row.push_back(target.at(r));
    }

    std::vector<int> pivot_row_of_col(static_cast<size_t>(unknowns), -1);
    int next_row = 0;
    for (int col = 0; col < unknowns && next_row < rows_used; ++col) {
        int pr = -1;
        for (int r = next_row; r < rows_used; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue; // free column
        std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(next_row)]);
        pr = next_row++;
        pivot_row_of_col[static_cast<size_t>(col)] = pr;
        auto& prow = m[static_cast<size_t>(pr)];
        const Scalar inv = prow[static_cast<size_t>(col)].inverse();
        for (auto& x : prow) x *= inv;
        for (int r = 0; r < rows_used; ++r) {
            if (r == pr) continue;
            auto& row = m[static_cast<size_t>(r)];
            const Scalar factor = row[static_cast<size_t>(col)];
            if (factor.is_zero()) continue;
            for (size_t cIdx = 0; cIdx < row.size(); ++cIdx)
                row[cIdx] -= factor * prow[cIdx];
        }
    }

    // rows beyond the pivots must have vanished entirely
    for (int r = next_row; r < rows_used; ++r)
        if (!m[static_cast<size_t>(r)].back().is_zero()) {
            res.status = FitStatus::Infeasible;
            res.detail = "inconsistent row " + std::to_string(r);
            return res;
        }
    for (int col = 0; col < unknowns; ++col)
        if (pivot_row_of_col[static_cast<size_t>(col)] < 0) {
            res.status = FitStatus::Underdetermined;
            res.detail = "free column " + std::to_string(col) + "; widen windows or raise truncation";
            return res;
        }

    std::vector<GnElement::Term> terms;
    for (int col = 0; col < unknowns; ++col) {
        Scalar c = m[static_cast<size_t>(pivot_row_of_col[static_cast<size_t>(col)])].back();
        if (c.is_zero()) continue;
        GnElement::Term t = basis[static_cast<size_t>(col)].shape;
        t.c = std::move(c);
        terms.push_back(std::move(t));
    }
    GnElement element(half_power, std::move(terms), base);

    FitVerification v = verify_fit(element, cfg, i, target, rows_used, surplus);
    if (!v.pass) {
        res.status = FitStatus::Infeasible;
        res.detail = "surplus verification failed at q^" + std::to_string(v.first_bad);
        return res;
    }
    res.status = FitStatus::Pass;
    res.element = std::move(element);
    return res;
}

FitVerification verify_fit(const GnElement& element, const LambdaConfig& cfg, int i,
                           const QSeries& target, int consumed_rows, int extra) {
    if (target.trunc() + 1 < consumed_rows + extra)
        throw std::domain_error("not enough surplus coefficients reserved for verification");
    FitVerification v;
    const QSeries recon = gn_eval(element, cfg, i, target.trunc());
    for (int d = 0; d <= target.trunc(); ++d)
        if (recon.at(d) != target.at(d)) {
            v.first_bad = d;
            return v;
        }
    v.pass = true;
    return v;
}

ConjectureReport conjecture_report(const LambdaConfig& cfg, int depth, int surplus, int jobs) {
    ConjectureReport rep;
    rep.n = cfg.n();
    rep.lambda = cfg.str();
    rep.depth = depth;
    rep.all_pass = true;

    auto unknowns_for = [&](const FitWindows& w) {
        const Poly f = f_poly(cfg);
        const bool spl2_square = cfg.n() == 2 && cfg.specialization_spl2() && !cfg.sym(1).is_zero();
        if (f.degree() == 1) return (w.e_hi + w.j_hi) - w.e_lo + 1;
        if (spl2_square) return (2 * w.e_hi + w.j_hi) - 2 * w.e_lo + 1;
        return (w.j_hi + 1) + f.degree() * (-w.e_lo);
    };
    // truncation for the default windows of the deepest fit; the doubled
    // retry re-solves at its own (larger) truncation only when needed
    const int trunc = unknowns_for(FitWindows::default_for_depth(depth)) + surplus;

    auto run_fixed_point = [&](int i) {
        std::vector<ConjectureCase> cases;
        AsymptoticData data = solve_asymptotics(cfg, i, depth, trunc);
        for (int k = 0; k <= depth; ++k) {
            ConjectureCase c;
            c.i = i;
            c.k = k;
            const FitWindows win = FitWindows::default_for_depth(k);
            FitResult fr = fit_gn(cfg, i, data.R[static_cast<size_t>(k)], 1, win, surplus);
            if (fr.status == FitStatus::Infeasible || fr.status == FitStatus::Underdetermined) {
                c.windows_doubled = true;
                const FitWindows wide = win.doubled();
                const int trunc2 = unknowns_for(wide) + surplus;
                const AsymptoticData data2 = solve_asymptotics(cfg, i, k, trunc2);
                fr = fit_gn(cfg, i, data2.R[static_cast<size_t>(k)], 1, wide, surplus);
            }
            c.status = fr.status;
            c.element = fr.element;
            cases.push_back(std::move(c));
        }
        return cases;
    };

    std::vector<std::vector<ConjectureCase>> per_i(static_cast<size_t>(cfg.n()) + 1);
    if (jobs <= 1) {
        for (int i = 0; i <= cfg.n(); ++i) per_i[static_cast<size_t>(i)] = run_fixed_point(i);
    } else {
        std::vector<std::future<std::vector<ConjectureCase>>> futs;
        for (int i = 0; i <= cfg.n(); ++i)
            futs.push_back(std::async(std::launch::async, run_fixed_point, i));
        for (int i = 0; i <= cfg.n(); ++i) per_i[static_cast<size_t>(i)] = futs[static_cast<size_t>(i)].get();
    }
    for (auto& cases : per_i)
        for (auto& c : cases) {
            rep.all_pass = rep.all_pass && (c.status == FitStatus::Pass);
            rep.cases.push_back(std::move(c));
        }
    return rep;
}

} // namespace localpn
