#include "localpn/model.hpp"

#include <sstream>

#include "localpn/errors.hpp"

namespace localpn {

LambdaConfig::LambdaConfig(int n, std::vector<Scalar> lambdas) : n_(n), lambda_(std::move(lambdas)) {
    if (n_ < 1) throw DegeneracyError("need n >= 1");
    if (lambda_.size() != static_cast<size_t>(n_) + 1)
        throw DegeneracyError("expected " + std::to_string(n_ + 1) + " weights, got " +
                              std::to_string(lambda_.size()));
    for (size_t i = 0; i < lambda_.size(); ++i) {
        if (lambda_[i].is_zero()) throw DegeneracyError("weight lambda_" + std::to_string(i) + " is zero");
        for (size_t j = i + 1; j < lambda_.size(); ++j)
            if (lambda_[i] == lambda_[j])
                throw DegeneracyError("weights lambda_" + std::to_string(i) + " and lambda_" +
                                      std::to_string(j) + " coincide");
    }
    // elementary symmetric functions
    s_.assign(static_cast<size_t>(n_) + 1, Scalar(0));
    std::vector<Scalar> e(static_cast<size_t>(n_) + 2, Scalar(0));
    e[0] = Scalar(1);
    for (const Scalar& l : lambda_)
        for (size_t k = e.size() - 1; k >= 1; --k)
            e[k] += l * e[k - 1];
    for (int k = 1; k <= n_ + 1; ++k) s_[static_cast<size_t>(k) - 1] = e[static_cast<size_t>(k)];

    // specialization flags
    {
        bool sp = true;
        for (int i = 0; i <= n_ && sp; ++i)
            if (lambda_[static_cast<size_t>(i)] !=
                Scalar::root_of_unity(static_cast<unsigned>(n_) + 1, static_cast<unsigned>(i)))
                sp = false;
        sp_ = sp;
    }
    if (n_ == 2) spl2_ = (sym(2) * sym(2) == Scalar(3) * sym(1) * sym(3));
}

LambdaConfig LambdaConfig::roots_of_unity(int n) {
    std::vector<Scalar> l;
    for (int i = 0; i <= n; ++i)
        l.push_back(Scalar::root_of_unity(static_cast<unsigned>(n) + 1, static_cast<unsigned>(i)));
    return LambdaConfig(n, std::move(l));
}

LambdaConfig LambdaConfig::spl2_canonical() {
    Scalar zeta = Scalar::root_of_unity(3);
    Scalar c = (Scalar(2) * zeta + Scalar(1)) / Scalar(3);
    return LambdaConfig(2, {Scalar(1), Scalar(-1), c});
}

unsigned LambdaConfig::conductor() const {
    unsigned m = 1;
    for (const Scalar& l : lambda_) m = std::max(m, l.conductor());
    return m;
}

std::string LambdaConfig::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < lambda_.size(); ++i) {
        if (i) os << ",";
        os << lambda_[i].str();
    }
    os << ")";
    return os.str();
}

Poly char_poly(const LambdaConfig& cfg) { return Poly::from_roots(cfg.lambdas()); }

Poly f_poly(const LambdaConfig& cfg) {
    const int n = cfg.n();
    std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0));
    for (int k = 0; k <= n; ++k) {
        Scalar coeff = Scalar(k + 1) * cfg.sym(k + 1);
        if (k % 2 == 1) coeff = -coeff;
        c[static_cast<size_t>(n - k)] = coeff;
    }
    return Poly(std::move(c));
}

std::vector<QSeries> defining_poly_series(const LambdaConfig& cfg, int trunc) {
    const Poly p = char_poly(cfg);
    const int n = cfg.n();
    std::vector<QSeries> coeffs;
    for (int j = 0; j <= n + 1; ++j)
        coeffs.push_back(QSeries(p.coeff(j), trunc));
    // subtract (-1)^{n+1} q L^{n+1}
    QSeries qterm = QSeries::q(trunc);
    if ((n + 1) % 2 == 1) qterm = -qterm;
    coeffs[static_cast<size_t>(n) + 1] -= qterm;
    return coeffs;
}

QSeries L_series(const LambdaConfig& cfg, int i, int trunc) {
    return newton_root(defining_poly_series(cfg, trunc), cfg.lambda(i), trunc);
}

QSeries dL_series(const LambdaConfig& cfg, int i, int trunc) {
    const QSeries L = L_series(cfg, i, trunc);
    const QSeries pL = eval_poly_at_series(char_poly(cfg), L);
    const QSeries fL = eval_poly_at_series(f_poly(cfg), L);
    return L * pL * ps_invert(fL);
}

QSeries half_power_series(const LambdaConfig& cfg, int i, int trunc) {
    const Poly f = f_poly(cfg);
    const Scalar f_at_lambda = f.eval(cfg.lambda(i));
    if (f_at_lambda.is_zero())
        throw DegeneracyError("f_n(lambda_" + std::to_string(i) + ") = 0");
    const QSeries fL = eval_poly_at_series(f, L_series(cfg, i, trunc));
    // (f(lambda_i)/f(L_i)) has constant term 1
    return ps_sqrt(f_at_lambda * ps_invert(fL));
}

bool GnElement::is_zero() const {
    for (const Term& t : terms_)
        if (!t.c.is_zero()) return false;
    return true;
}

GnElement operator+(const GnElement& a, const GnElement& b) {
    if (a.m_ != b.m_ && !a.is_zero() && !b.is_zero())
        throw std::domain_error("GnElement sum with mixed half powers");
    if (a.base_ != b.base_ && !a.is_zero() && !b.is_zero())
        throw std::domain_error("GnElement sum with mixed bases");
    GnElement r = a;
    if (a.is_zero()) {
        r.m_ = b.m_;
        r.base_ = b.base_;
    }
    for (const auto& t : b.terms_) r.terms_.push_back(t);
    return r;
}

GnElement operator*(const GnElement& a, const GnElement& b) {
    if (a.base_ != b.base_ && !a.is_zero() && !b.is_zero())
        throw std::domain_error("GnElement product with mixed bases");
    GnElement r;
    r.base_ = a.is_zero() ? b.base_ : a.base_;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            r.terms_.push_back({ta.j + tb.j, ta.e + tb.e, ta.c * tb.c});
    // sigma powers accumulate; evaluation resolves sigma^m directly, and
    // reduction back to m in {0,1} needs the configuration (sigma^2 is the
    // constant f(lambda_i) times f(L)^{-1}), so it is not done here
    r.m_ = a.m_ + b.m_;
    return r;
}

Poly gn_base_poly(GnBase base, const LambdaConfig& cfg) {
    if (base == GnBase::FPoly) return f_poly(cfg);
    return Poly({-cfg.sym(2), cfg.sym(1)}); // s_1 L - s_2
}

std::string GnElement::str(const LambdaConfig& cfg) const {
    const std::string base_name =
        base_ == GnBase::FPoly ? "f" : "(" + gn_base_poly(base_, cfg).str() + ")";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (t.c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << t.c.str() << ")";
        if (t.j != 0) os << "*L^" << t.j;
        if (t.e != 0) os << "*" << base_name << "^" << t.e;
    }
    if (first) os << "0";
    if (m_ == 1) os << " * (f(lambda)/f(L))^(1/2)";
    return os.str();
}

QSeries gn_eval(const GnElement& elem, const LambdaConfig& cfg, int i, int trunc) {
    const QSeries L = L_series(cfg, i, trunc);
    const Poly f = gn_base_poly(elem.base(), cfg);
    const QSeries fL = eval_poly_at_series(f, L);
    const QSeries Linv = ps_invert(L);
    const QSeries fLinv = ps_invert(fL);

    QSeries acc = QSeries::zero(trunc);
    for (const auto& t : elem.terms()) {
        if (t.c.is_zero()) continue;
        QSeries v(t.c, trunc);
        v = v * (t.j >= 0 ? ps_pow(L, t.j) : ps_pow(Linv, -t.j));
        v = v * (t.e >= 0 ? ps_pow(fL, t.e) : ps_pow(fLinv, -t.e));
        acc += v;
    }
    if (elem.half() != 0) acc *= ps_pow(half_power_series(cfg, i, trunc), elem.half());
    return acc;
}

} // namespace localpn
