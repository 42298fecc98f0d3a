#include "localpn/ifunction.hpp"

namespace localpn {

namespace {

// numerator / denominator as raw factor products, no gcd reduction
std::pair<Poly, Poly> ifun_raw(const LambdaConfig& cfg, int i, int d) {
    if (d < 0) throw std::domain_error("negative degree");
    const int n = cfg.n();
    const Scalar li = cfg.lambda(i);

    Poly num(Scalar(1));
    const Scalar top = Scalar(-(n + 1)) * li;
    for (int k = 0; k <= (n + 1) * d - 1; ++k)
        num *= Poly({top, Scalar(-k)}); // -(n+1)lambda_i - k z

    Poly den(Scalar(1));
    for (int j = 0; j <= n; ++j) {
        const Scalar base = li - cfg.lambda(j);
        for (int k = 1; k <= d; ++k)
            den *= Poly({base, Scalar(k)}); // lambda_i - lambda_j + k z
    }
    return {std::move(num), std::move(den)};
}

} // namespace

RationalFunction ifun_coeff(const LambdaConfig& cfg, int i, int d) {
    auto [num, den] = ifun_raw(cfg, i, d);
    return RationalFunction(std::move(num), std::move(den));
}

QZSeries ifun_series(const LambdaConfig& cfg, int i, int trunc, int z_max) {
    QZSeries out(trunc, z_max);
    for (int d = 0; d <= trunc; ++d) {
        // the Laurent expansion does not care about common factors, and gcd
        // reduction of these high-degree products is the expensive part
        auto [num, den] = ifun_raw(cfg, i, d);
        out.set_row(d, zq_laurent_expand(num, den, d, z_max));
    }
    return out;
}

namespace {

// multiply rows by a linear-in-M factor: row d picks up (a + b*(lambda_i + d z) + c z)
QZSeries rows_times_affine_in_M(const LambdaConfig& cfg, int i, const QZSeries& t,
                                const Scalar& add_const, const Scalar& m_coeff,
                                const Scalar& z_coeff) {
    std::vector<ZLaurent> factors;
    for (int d = 0; d <= t.trunc(); ++d) {
        const Scalar c0 = add_const + m_coeff * cfg.lambda(i);
        const Scalar c1 = m_coeff * Scalar(d) + z_coeff;
        factors.push_back(zpoly({c0, c1}));
    }
    return t.rows_scaled(factors);
}

} // namespace

QZSeries pf_apply(const LambdaConfig& cfg, int i, const QZSeries& target) {
    const int n = cfg.n();

    // prod_j (M - lambda_j)
    QZSeries t1 = target;
    for (int j = 0; j <= n; ++j)
        t1 = rows_times_affine_in_M(cfg, i, t1, -cfg.lambda(j), Scalar(1), Scalar(0));

    // q . prod_k (-(n+1) M - k z)
    QZSeries t2 = target;
    for (int k = 0; k <= n; ++k)
        t2 = rows_times_affine_in_M(cfg, i, t2, Scalar(0), Scalar(-(n + 1)), Scalar(-k));
    t2 = t2.q_shifted();

    return t1 - t2;
}

} // namespace localpn
