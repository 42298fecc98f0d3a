#include "localpn/asymptotics.hpp"

#include <sstream>

#include "localpn/diffop.hpp"

namespace localpn {

namespace {

// apply one z-layer, a map p -> coefficient, to a series
QSeries apply_layer(const std::map<int, QSeries>& layer, const QSeries& x, int trunc) {
    QSeries acc = QSeries::zero(trunc);
    for (const auto& [p, c] : layer) {
        QSeries dx = x;
        for (int k = 0; k < p; ++k) dx = euler_D(dx);
        acc += c * dx;
    }
    return acc;
}

} // namespace

AsymptoticData solve_asymptotics(const LambdaConfig& cfg, int i, int depth, int trunc) {
    const int n = cfg.n();
    const QSeries L = L_series(cfg, i, trunc);
    const QSeries one = QSeries::one(trunc);

    // conjugated Picard-Fuchs operator: every M becomes L + zD, and the
    // q-side product is rescaled so that the z^0 symbol is the defining
    // polynomial p(L) - (-1)^{n+1} q L^{n+1} itself
    SeriesOperator lhs = SeriesOperator::term(one, 0, 0);
    for (int j = 0; j <= n; ++j) {
        SeriesOperator factor = SeriesOperator::term(L - QSeries(cfg.lambda(j), trunc), 0, 0);
        factor += SeriesOperator::term(one, 1, 1); // z D
        lhs = op_compose(lhs, factor);
    }
    SeriesOperator rhs = SeriesOperator::term(one, 0, 0);
    const Scalar np1_inv = Scalar(n + 1).inverse();
    for (int k = 0; k <= n; ++k) {
        SeriesOperator factor = SeriesOperator::term(L, 0, 0);
        factor += SeriesOperator::term(QSeries(Scalar(k) * np1_inv, trunc), 1, 0); // (k/(n+1)) z
        factor += SeriesOperator::term(one, 1, 1);                                 // z D
        rhs = op_compose(rhs, factor);
    }
    QSeries sign_q = QSeries::q(trunc);
    if ((n + 1) % 2 == 1) sign_q = -sign_q;
    SeriesOperator pf = lhs - rhs.left_mul(sign_q);

    // the z^0 layer is multiplication by the defining polynomial evaluated
    // on the root series; it must vanish identically
    for (const auto& [p, c] : pf.layer(0)) {
        if (p != 0 || !c.is_zero())
            throw NonIntegrableError("conjugated operator has nonvanishing z^0 layer");
    }

    const int max_layer = pf.max_z_degree(); // = n + 1
    std::vector<std::map<int, QSeries>> layers;
    for (int m = 0; m <= max_layer; ++m) layers.push_back(pf.layer(m));

    // layer 1 is u D + v with u(0) = p'(lambda_i) != 0
    QSeries u = QSeries::zero(trunc), v = QSeries::zero(trunc);
    if (auto it = layers[1].find(1); it != layers[1].end()) u = it->second;
    if (auto it = layers[1].find(0); it != layers[1].end()) v = it->second;
    for (const auto& [p, c] : layers[1])
        if (p > 1 && !c.is_zero())
            throw NonIntegrableError("z^1 layer has differential order > 1");
    if (u.at(0).is_zero())
        throw DegeneracyError("leading symbol vanishes at q = 0 (repeated root?)");

    AsymptoticData data;
    data.i = i;
    data.trunc = trunc;
    data.depth = depth;
    data.L = L;
    data.mu = euler_antiD(L - QSeries(cfg.lambda(i), trunc), Scalar(0));

    // R_0 from the homogeneous layer-1 equation u D R_0 + v R_0 = 0
    const QSeries u_inv = ps_invert(u);
    data.R.push_back(ps_exp(euler_antiD(-(v * u_inv), Scalar(0))));

    // R_k via R_k = R_0 S_k, u R_0 D S_k = rhs
    const QSeries r0_inv = ps_invert(data.R[0]);
    for (int k = 1; k <= depth; ++k) {
        QSeries rhs_k = QSeries::zero(trunc);
        for (int m = 2; m <= std::min(max_layer, k + 1); ++m)
            rhs_k -= apply_layer(layers[static_cast<size_t>(m)], data.R[static_cast<size_t>(k + 1 - m)], trunc);
        QSeries ds = rhs_k * u_inv * r0_inv;
        if (!ds.at(0).is_zero())
            throw NonIntegrableError("layer " + std::to_string(k) + " is not integrable");
        data.R.push_back(data.R[0] * euler_antiD(ds, Scalar(0)));
    }
    return data;
}

QSeries mu_series(const LambdaConfig& cfg, int i, int trunc) {
    return euler_antiD(L_series(cfg, i, trunc) - QSeries(cfg.lambda(i), trunc), Scalar(0));
}

VerifyReport verify_asymptotic(const LambdaConfig& cfg, int i, const AsymptoticData& data,
                               int trunc) {
    const int n = cfg.n();
    const int K = data.depth;
    const int z_top = K - trunc; // complete z-window across all rows
    VerifyReport rep;
    {
        std::ostringstream os;
        os << "rows 0.." << trunc << ", z-window [-d, " << z_top << "]";
        rep.window = os.str();
        rep.check = "asymptotic-form";
    }

    // exponential slices E_j = mu^j / j!
    std::vector<QSeries> E{QSeries::one(data.mu.trunc())};
    for (int j = 1; j <= trunc; ++j)
        E.push_back(Scalar(1, j) * (E.back() * data.mu));

    QZSeries expansion(trunc, z_top);
    // scale row d by ((n+1)^{n+1})^d: the I-function variable is
    // (n+1)^{n+1} times the asymptotic-side variable
    Scalar scale(1);
    const Scalar step = [&] {
        Scalar s(1);
        for (int t = 0; t <= n; ++t) s *= Scalar(n + 1);
        return s;
    }();
    for (int d = 0; d <= trunc; ++d) {
        ZLaurent row = ZLaurent::zero_window(-d, z_top);
        for (int t = -d; t <= z_top; ++t) {
            Scalar acc(0);
            for (int j = 0; j <= d; ++j) {
                const int k = t + j;
                if (k < 0 || k > K) continue;
                acc += (E[static_cast<size_t>(j)] * data.R[static_cast<size_t>(k)]).at(d);
            }
            row += ZLaurent(t, {scale * acc});
        }
        expansion.set_row(d, row);
        scale *= step;
    }

    const QZSeries lhs = ifun_series(cfg, i, trunc, z_top);
    rep.mismatch = QZSeries::first_mismatch(lhs, expansion);
    rep.pass = !rep.mismatch.has_value();
    return rep;
}

QSeries mirror_map_p1(int trunc) {
    // 2 sum_{d>=1} (2d-1)!/(d!)^2 q^d
    std::vector<Scalar> c(static_cast<size_t>(trunc) + 1, Scalar(0));
    mpz_class num = 1, den = 1; // (2d-1)! and d!, updated incrementally
    for (int d = 1; d <= trunc; ++d) {
        if (d > 1) num *= (2 * d - 2) * (2 * d - 1);
        den *= d;
        Rat r(2 * num, den * den);
        r.canonicalize();
        c[static_cast<size_t>(d)] = Scalar(r);
    }
    QSeries arg{std::vector<Scalar>(c)};
    return QSeries::q(trunc) * ps_exp(arg);
}

} // namespace localpn
