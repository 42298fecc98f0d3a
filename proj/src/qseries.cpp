#include "localpn/qseries.hpp"

#include <sstream>

namespace localpn {

QSeries::QSeries(Scalar c, int trunc) {
    if (trunc < 0) throw std::domain_error("negative truncation order");
    c_.assign(static_cast<size_t>(trunc) + 1, Scalar(0));
    c_[0] = std::move(c);
}

QSeries QSeries::q(int trunc) {
    QSeries s = zero(trunc);
    if (trunc >= 1) s.at(1) = Scalar(1);
    return s;
}

bool QSeries::is_zero() const {
    for (const Scalar& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

QSeries QSeries::truncated(int n) const {
    if (n >= trunc()) return *this;
    if (n < 0) throw std::domain_error("negative truncation order");
    return QSeries(std::vector<Scalar>(c_.begin(), c_.begin() + n + 1));
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (Scalar& c : r.c_) c = -c;
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    const size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Scalar> c(n);
    for (size_t i = 0; i < n; ++i) c[i] = a.c_[i] + b.c_[i];
    return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    const size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Scalar> c(n, Scalar(0));
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return QSeries(std::move(c));
}

QSeries operator*(const Scalar& s, const QSeries& a) {
    QSeries r = a;
    for (Scalar& c : r.c_) c *= s;
    return r;
}

bool QSeries::operator==(const QSeries& o) const {
    const size_t n = std::min(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string QSeries::str(int max_terms) const {
    std::ostringstream os;
    int printed = 0;
    bool any = false;
    for (int d = 0; d <= trunc() && printed < max_terms; ++d) {
        if (at(d).is_zero()) continue;
        if (any) os << " + ";
        os << "(" << at(d).str() << ")";
        if (d >= 1) os << "*q";
        if (d >= 2) os << "^" << d;
        any = true;
        ++printed;
    }
    if (!any) os << "0";
    if (printed == max_terms) os << " + ...";
    os << " [O(q^" << trunc() + 1 << ")]";
    return os.str();
}

QSeries ps_invert(const QSeries& a) {
    if (a.trunc() < 0 || a.at(0).is_zero())
        throw std::domain_error("series inverse requires nonzero constant term");
    const int n = a.trunc();
    std::vector<Scalar> r(static_cast<size_t>(n) + 1, Scalar(0));
    const Scalar c0inv = a.at(0).inverse();
    r[0] = c0inv;
    for (int d = 1; d <= n; ++d) {
        Scalar acc(0);
        for (int j = 1; j <= d; ++j)
            acc += a.at(j) * r[static_cast<size_t>(d - j)];
        r[static_cast<size_t>(d)] = -(acc * c0inv);
    }
    return QSeries(std::move(r));
}

QSeries ps_sqrt(const QSeries& a, std::optional<Scalar> c0_root) {
    if (a.trunc() < 0) throw std::domain_error("empty series");
    Scalar r0(0);
    if (c0_root) {
        r0 = *c0_root;
        if (r0 * r0 != a.at(0))
            throw std::domain_error("supplied constant is not a square root of c_0");
    } else {
        auto s = a.at(0).sqrt();
        if (!s) throw std::domain_error("series sqrt: constant term is not an exact square");
        r0 = *s;
    }
    if (r0.is_zero()) throw std::domain_error("series sqrt requires nonzero constant term");
    const int n = a.trunc();
    std::vector<Scalar> r(static_cast<size_t>(n) + 1, Scalar(0));
    r[0] = r0;
    const Scalar half_inv = (Scalar(2) * r0).inverse();
    for (int d = 1; d <= n; ++d) {
        // from (sum r_j q^j)^2 = a: 2 r_0 r_d = a_d - sum_{j=1..d-1} r_j r_{d-j}
        Scalar acc = a.at(d);
        for (int j = 1; j < d; ++j)
            acc -= r[static_cast<size_t>(j)] * r[static_cast<size_t>(d - j)];
        r[static_cast<size_t>(d)] = acc * half_inv;
    }
    return QSeries(std::move(r));
}

QSeries euler_D(const QSeries& a) {
    std::vector<Scalar> c(a.coeffs());
    for (int d = 0; d <= a.trunc(); ++d)
        c[static_cast<size_t>(d)] *= Scalar(d);
    return QSeries(std::move(c));
}

QSeries euler_antiD(const QSeries& a, const Scalar& c0) {
    if (a.trunc() >= 0 && !a.at(0).is_zero())
        throw NonIntegrableError("euler_antiD: nonzero constant term " + a.at(0).str());
    std::vector<Scalar> c(a.coeffs());
    if (!c.empty()) c[0] = c0;
    for (int d = 1; d <= a.trunc(); ++d)
        c[static_cast<size_t>(d)] /= Scalar(d);
    return QSeries(std::move(c));
}

QSeries ps_exp(const QSeries& a) {
    if (a.trunc() < 0 || !a.at(0).is_zero())
        throw std::domain_error("series exp requires zero constant term");
    const int n = a.trunc();
    // e_d * d = sum_{j=1..d} j a_j e_{d-j}
    std::vector<Scalar> e(static_cast<size_t>(n) + 1, Scalar(0));
    e[0] = Scalar(1);
    for (int d = 1; d <= n; ++d) {
        Scalar acc(0);
        for (int j = 1; j <= d; ++j)
            acc += Scalar(j) * a.at(j) * e[static_cast<size_t>(d - j)];
        e[static_cast<size_t>(d)] = acc / Scalar(d);
    }
    return QSeries(std::move(e));
}

QSeries ps_log(const QSeries& a) {
    if (a.trunc() < 0 || !a.at(0).is_one())
        throw std::domain_error("series log requires constant term 1");
    // D(log a) = D(a)/a
    QSeries da_over_a = euler_D(a) * ps_invert(a);
    return euler_antiD(da_over_a, Scalar(0));
}

QSeries ps_pow(const QSeries& a, int e) {
    if (e < 0) return ps_pow(ps_invert(a), -e);
    QSeries r = QSeries::one(a.trunc());
    QSeries base = a;
    unsigned k = static_cast<unsigned>(e);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

QSeries q_divide(const QSeries& a) {
    if (a.trunc() < 1) throw std::domain_error("q_divide needs truncation >= 1");
    if (!a.at(0).is_zero()) throw std::domain_error("q_divide of a unit series");
    std::vector<Scalar> c(a.coeffs().begin() + 1, a.coeffs().end());
    return QSeries(std::move(c));
}

QSeries eval_poly_at_series(const Poly& p, const QSeries& x) {
    QSeries v = QSeries::zero(x.trunc());
    for (int i = p.degree(); i >= 0; --i)
        v = v * x + QSeries(p.coeff(i), x.trunc());
    return v;
}

namespace {

QSeries eval_series_poly(const std::vector<QSeries>& coeffs, const QSeries& x, int t) {
    QSeries v = QSeries::zero(t);
    for (size_t i = coeffs.size(); i-- > 0;)
        v = v * x + coeffs[i].truncated(t);
    return v;
}

} // namespace

QSeries newton_root(const std::vector<QSeries>& poly_coeffs, const Scalar& x0, int trunc) {
    if (poly_coeffs.size() < 2) throw std::domain_error("newton_root: polynomial of degree < 1");
    std::vector<QSeries> dcoeffs;
    for (size_t j = 1; j < poly_coeffs.size(); ++j)
        dcoeffs.push_back(Scalar(static_cast<long>(j)) * poly_coeffs[j]);

    // simple-root check at q = 0
    {
        Scalar p0(0), dp0(0), xp(1);
        for (size_t j = 0; j < poly_coeffs.size(); ++j) {
            p0 += poly_coeffs[j].at(0) * xp;
            if (j + 1 < poly_coeffs.size()) dp0 += dcoeffs[j].at(0) * xp;
            xp *= x0;
        }
        if (!p0.is_zero())
            throw DegeneracyError("newton_root: x0 is not a root at q = 0");
        if (dp0.is_zero())
            throw DegeneracyError("newton_root: x0 is not a simple root at q = 0 (Newton step degenerate)");
    }

    QSeries x(x0, 0);
    int t = 0;
    while (t < trunc) {
        t = std::min(2 * t + 1, trunc);
        // pad current approximation up to order t
        std::vector<Scalar> padded = x.coeffs();
        padded.resize(static_cast<size_t>(t) + 1, Scalar(0));
        x = QSeries(std::move(padded));
        QSeries fx = eval_series_poly(poly_coeffs, x, t);
        QSeries dfx = eval_series_poly(dcoeffs, x, t);
        x = x - fx * ps_invert(dfx);
    }
    return x;
}

} // namespace localpn
