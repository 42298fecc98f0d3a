#include "localpn/polynomial.hpp"

#include <sstream>

namespace localpn {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(Scalar c, int deg) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, Scalar(0));
    p.c_.back() = std::move(c);
    return p;
}

Poly Poly::from_roots(const std::vector<Scalar>& roots) {
    Poly p(Scalar(1));
    for (const Scalar& r : roots)
        p *= Poly({-r, Scalar(1)});
    return p;
}

Scalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[static_cast<size_t>(k)];
}

const Scalar& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (Scalar& c : p.c_) c = -c;
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly operator*(const Scalar& s, const Poly& p) {
    Poly r = p;
    for (Scalar& c : r.c_) c *= s;
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q, r = a;
    if (r.degree() >= b.degree())
        q.c_.assign(static_cast<size_t>(r.degree() - b.degree()) + 1, Scalar(0));
    const Scalar lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Scalar c = r.leading() * lead_inv;
        size_t shift = static_cast<size_t>(r.degree() - b.degree());
        q.c_[shift] = c;
        for (size_t i = 0; i < b.c_.size(); ++i)
            r.c_[shift + i] -= c * b.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division not exact");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar v(0);
    for (size_t i = c_.size(); i-- > 0;)
        v = v * x + c_[i];
    return v;
}

Poly Poly::pow(unsigned e) const {
    Poly r(Scalar(1)), base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << "-";
                cs = cs.substr(1);
            } else {
                os << "+";
            }
        }
        first = false;
        if (i == 0) {
            os << cs;
        } else {
            if (cs == "1") {
            } else if (cs == "-1") {
                os << "-";
            } else {
                os << cs << "*";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Scalar(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divexact(num_, g);
        den_ = Poly::divexact(den_, g);
    }
    const Scalar inv = den_.leading().inverse();
    num_ = inv * num_;
    den_ = inv * den_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

RationalFunction operator*(const Scalar& s, const RationalFunction& f) {
    return RationalFunction(s * f.num_, f.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace localpn
