#include "localpn/zlaurent.hpp"

#include <sstream>

namespace localpn {

ZLaurent ZLaurent::zero_window(int zmin, int zmax) {
    if (zmax < zmin) return ZLaurent(zmin, {});
    return ZLaurent(zmin, std::vector<Scalar>(static_cast<size_t>(zmax - zmin) + 1, Scalar(0)));
}

Scalar ZLaurent::coeff(int e) const {
    if (e < zmin_ || e > zmax()) return Scalar(0);
    return c_[static_cast<size_t>(e - zmin_)];
}

bool ZLaurent::is_zero() const {
    for (const Scalar& s : c_)
        if (!s.is_zero()) return false;
    return true;
}

ZLaurent ZLaurent::operator-() const {
    ZLaurent r = *this;
    for (Scalar& s : r.c_) s = -s;
    return r;
}

ZLaurent operator+(const ZLaurent& a, const ZLaurent& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const int lo = std::min(a.zmin(), b.zmin());
    const int hi = std::max(a.zmax(), b.zmax());
    ZLaurent r = ZLaurent::zero_window(lo, hi);
    for (int e = lo; e <= hi; ++e)
        r.c_[static_cast<size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    return r;
}

ZLaurent operator-(const ZLaurent& a, const ZLaurent& b) { return a + (-b); }

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    if (a.empty() || b.empty()) return ZLaurent();
    ZLaurent r = ZLaurent::zero_window(a.zmin() + b.zmin(), a.zmax() + b.zmax());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

ZLaurent operator*(const Scalar& s, const ZLaurent& a) {
    ZLaurent r = a;
    for (Scalar& c : r.c_) c *= s;
    return r;
}

ZLaurent ZLaurent::window(int lo, int hi) const {
    ZLaurent r = zero_window(lo, hi);
    for (int e = lo; e <= hi; ++e)
        r.c_[static_cast<size_t>(e - lo)] = coeff(e);
    return r;
}

std::string ZLaurent::str() const {
    std::ostringstream os;
    bool any = false;
    for (int e = zmin_; e <= zmax(); ++e) {
        if (coeff(e).is_zero()) continue;
        if (any) os << " + ";
        os << "(" << coeff(e).str() << ")";
        if (e != 0) os << "*z^" << e;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

ZLaurent zpoly(std::vector<Scalar> coeffs) { return ZLaurent(0, std::move(coeffs)); }

ZLaurent zq_laurent_expand(const Poly& r_num, const Poly& r_den, int pole_bound, int z_max) {
    if (r_den.is_zero()) throw std::domain_error("Laurent expansion of r/0");
    // split r_den = z^e * u(z), u(0) != 0
    int e = 0;
    while (e <= r_den.degree() && r_den.coeff(e).is_zero()) ++e;
    if (e > pole_bound)
        throw std::domain_error("pole order " + std::to_string(e) + " exceeds bound " +
                                std::to_string(pole_bound));
    std::vector<Scalar> u;
    for (int k = e; k <= r_den.degree(); ++k) u.push_back(r_den.coeff(k));

    // expand 1/u as a power series in z up to degree z_max + pole_bound
    const int order = z_max + pole_bound;
    std::vector<Scalar> uinv(static_cast<size_t>(order) + 1, Scalar(0));
    const Scalar u0inv = u[0].inverse();
    uinv[0] = u0inv;
    for (int d = 1; d <= order; ++d) {
        Scalar acc(0);
        for (int j = 1; j <= d && j < static_cast<int>(u.size()); ++j)
            acc += u[static_cast<size_t>(j)] * uinv[static_cast<size_t>(d - j)];
        uinv[static_cast<size_t>(d)] = -(acc * u0inv);
    }

    // (num * uinv) shifted by z^{-e}, then windowed to [-pole_bound, z_max]
    if (r_num.is_zero()) return ZLaurent::zero_window(-pole_bound, z_max);
    std::vector<Scalar> nc;
    for (int k = 0; k <= r_num.degree(); ++k) nc.push_back(r_num.coeff(k));
    ZLaurent prod = zpoly(std::move(nc)) * zpoly(std::move(uinv));
    std::vector<Scalar> pc;
    for (int t = prod.zmin(); t <= prod.zmax(); ++t) pc.push_back(prod.coeff(t));
    ZLaurent shifted(prod.zmin() - e, std::move(pc));
    return shifted.window(-pole_bound, z_max);
}

QZSeries::QZSeries(int trunc, int zmax) : zmax_(zmax) {
    if (trunc < 0) throw std::domain_error("negative truncation");
    rows_.reserve(static_cast<size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d)
        rows_.push_back(ZLaurent::zero_window(-d, zmax));
}

void QZSeries::set_row(int d, ZLaurent l) {
    // pole order at most d: anything below -d must vanish
    for (int e = l.zmin(); e < -d; ++e)
        if (!l.coeff(e).is_zero())
            throw std::domain_error("row " + std::to_string(d) + " has pole order " +
                                    std::to_string(-e) + " > " + std::to_string(d));
    rows_[static_cast<size_t>(d)] = l.window(-d, zmax_);
}

bool QZSeries::is_zero() const {
    for (const ZLaurent& r : rows_)
        if (!r.is_zero()) return false;
    return true;
}

QZSeries operator+(const QZSeries& a, const QZSeries& b) {
    const int t = std::min(a.trunc(), b.trunc());
    QZSeries r(t, std::min(a.zmax(), b.zmax()));
    for (int d = 0; d <= t; ++d)
        r.set_row(d, a.row(d) + b.row(d));
    return r;
}

QZSeries operator-(const QZSeries& a, const QZSeries& b) {
    const int t = std::min(a.trunc(), b.trunc());
    QZSeries r(t, std::min(a.zmax(), b.zmax()));
    for (int d = 0; d <= t; ++d)
        r.set_row(d, a.row(d) - b.row(d));
    return r;
}

QZSeries QZSeries::rows_scaled(const std::vector<ZLaurent>& per_row_factor) const {
    QZSeries r(trunc(), zmax_);
    for (int d = 0; d <= trunc(); ++d)
        r.set_row(d, (row(d) * per_row_factor[static_cast<size_t>(d)]).window(-d, zmax_));
    return r;
}

QZSeries QZSeries::q_shifted() const {
    QZSeries r(trunc(), zmax_);
    for (int d = 1; d <= trunc(); ++d)
        r.set_row(d, row(d - 1));
    return r;
}

std::optional<QZSeries::Mismatch> QZSeries::first_mismatch(const QZSeries& a, const QZSeries& b) {
    const int t = std::min(a.trunc(), b.trunc());
    const int zm = std::min(a.zmax(), b.zmax());
    for (int d = 0; d <= t; ++d) {
        for (int e = -d; e <= zm; ++e) {
            Scalar la = a.row(d).coeff(e), rb = b.row(d).coeff(e);
            if (la != rb) return Mismatch{d, e, la, rb};
        }
    }
    return std::nullopt;
}

} // namespace localpn
