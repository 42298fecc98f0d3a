#include "localpn/lode.hpp"

#include "localpn/diffop.hpp"
#include "localpn/errors.hpp"

namespace localpn {

LOdeSystem derive_L_ode(const LambdaConfig& cfg) {
    const int n = cfg.n();
    if (n == 2 && !cfg.specialization_spl2())
        throw DegeneracyError("n = 2 table needs the specialization s_2^2 = 3 s_1 s_3");
    if (n == 2 && cfg.sym(1).is_zero())
        throw DegeneracyError("n = 2 table is singular at s_1 = 0 (root-of-unity point)");
    if (n > 2)
        throw DegeneracyError("L-coordinate tables are derived for n = 1, 2 only");

    const Poly p = char_poly(cfg);
    const Poly f = f_poly(cfg);
    const RationalFunction rf_p{p}, rf_f{f};
    const RationalFunction L{Poly::variable()};
    const RationalFunction g = L * rf_p / rf_f; // D L_i as a function of L

    // conjugated Picard-Fuchs operator over rational functions of L,
    // with D = g D_i and (-1)^{n+1} q = p(L) / L^{n+1}
    LOperator lhs = LOperator::term(RationalFunction(Scalar(1)), 0, 0);
    for (int j = 0; j <= n; ++j) {
        LOperator factor = LOperator::term(L - RationalFunction(cfg.lambda(j)), 0, 0);
        factor += LOperator::term(g, 1, 1);
        lhs = op_compose(lhs, factor);
    }
    LOperator rhs = LOperator::term(RationalFunction(Scalar(1)), 0, 0);
    const Scalar np1_inv = Scalar(n + 1).inverse();
    for (int k = 0; k <= n; ++k) {
        LOperator factor = LOperator::term(L, 0, 0);
        factor += LOperator::term(RationalFunction(Scalar(k) * np1_inv), 1, 0);
        factor += LOperator::term(g, 1, 1);
        rhs = op_compose(rhs, factor);
    }
    const RationalFunction q_of_L = rf_p / RationalFunction(Poly::monomial(Scalar(1), n + 1));
    LOperator pf = lhs - rhs.left_mul(q_of_L);

    for (const auto& [pw, c] : pf.layer(0))
        if (!c.is_zero())
            throw NonIntegrableError("z^0 symbol of the L-coordinate operator does not vanish");

    // conjugation by f^{1/2}: D_i -> D_i - f'/(2f)
    const RationalFunction w = RationalFunction(f.derivative()) / (Scalar(2) * rf_f);
    LOperator shift = LOperator::term(RationalFunction(Scalar(1)), 0, 1);
    shift += LOperator::term(-w, 0, 0);
    std::vector<LOperator> shift_pow{LOperator::term(RationalFunction(Scalar(1)), 0, 0)};
    for (int k = 1; k <= n + 1; ++k) shift_pow.push_back(op_compose(shift_pow.back(), shift));

    auto conjugate_layer = [&](int m) {
        LOperator t;
        for (const auto& [pw, c] : pf.layer(m))
            t += shift_pow[static_cast<size_t>(pw)].left_mul(c);
        t.prune();
        return t;
    };

    LOdeSystem sys;
    sys.level = n;
    sys.f = (n == 2) ? Poly({-cfg.sym(2), cfg.sym(1)}) : f; // s_1 L - s_2 on spl2

    const LOperator t1 = conjugate_layer(1);
    for (const auto& [pw, c] : t1.terms)
        for (size_t a = 0; a < c.size(); ++a)
            if (pw != 1 && !c[a].is_zero())
                throw NonIntegrableError("conjugated z^1 layer is not a pure first-order term");
    sys.normalizer = t1.terms.at(1).at(0);
    const RationalFunction n_inv = sys.normalizer.inverse();

    for (int l = 0; l <= n - 1; ++l) {
        const LOperator t = conjugate_layer(l + 2);
        for (int pw = 0; pw <= l + 2; ++pw) {
            RationalFunction c; // zero
            if (auto it = t.terms.find(pw); it != t.terms.end() && !it->second.empty())
                c = it->second.front();
            sys.A[{l, pw}] = -(c * n_inv);
        }
    }
    return sys;
}

QSeries eval_ratfunc_at_series(const RationalFunction& rf, const QSeries& L) {
    return eval_poly_at_series(rf.num(), L) * ps_invert(eval_poly_at_series(rf.den(), L));
}

bool lode_annihilates(const LOdeSystem& sys, const LambdaConfig& cfg, int i,
                      const std::vector<QSeries>& R, int trunc) {
    if (R.empty()) return true;
    const QSeries L = L_series(cfg, i, trunc);
    // D L has no constant term, so D_i = (D L)^{-1} D strips one factor of q
    // from each side; every application costs one order of truncation
    const QSeries dL_over_q_inv = ps_invert(q_divide(euler_D(L)));
    const QSeries r0_inv = ps_invert(R[0]);

    // Phi_p / Phi_0 = R_p / R_0
    std::vector<QSeries> phi;
    for (const QSeries& r : R) phi.push_back(r * r0_inv);
    auto Di = [&](const QSeries& x) { return q_divide(euler_D(x)) * dL_over_q_inv; };

    for (size_t p = 1; p < phi.size(); ++p) {
        QSeries residual = Di(phi[p]);
        for (const auto& [lp, a] : sys.A) {
            const auto [l, pw] = lp;
            const int src = static_cast<int>(p) - 1 - l;
            if (src < 0) continue;
            QSeries dphi = phi[static_cast<size_t>(src)];
            for (int k = 0; k < pw; ++k) dphi = Di(dphi);
            residual -= eval_ratfunc_at_series(a, L) * dphi;
        }
        if (!residual.is_zero()) return false;
    }
    return true;
}

} // namespace localpn
