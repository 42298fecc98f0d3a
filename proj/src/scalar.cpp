#include "localpn/scalar.hpp"

#include <map>
#include <sstream>

namespace localpn {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw UsageError("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// ascending-coefficient dense polynomials over Q, just enough for Phi_m
using QPoly = std::vector<Rat>;

void qp_trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// exact division, remainder must vanish
QPoly qp_divexact(const QPoly& a, const QPoly& b) {
    QPoly r = a, q;
    qp_trim(r);
    if (b.empty()) throw std::domain_error("cyclotomic: division by zero polynomial");
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
    while (r.size() >= b.size()) {
        Rat c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        qp_trim(r);
    }
    if (!r.empty()) throw std::domain_error("cyclotomic: non-exact division");
    return q;
}

QPoly phi_m_compute(unsigned m, std::map<unsigned, QPoly>& cache);

const QPoly& phi_m_cached(unsigned m, std::map<unsigned, QPoly>& cache) {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, phi_m_compute(m, cache)).first;
    return it->second;
}

QPoly phi_m_compute(unsigned m, std::map<unsigned, QPoly>& cache) {
    // x^m - 1 divided by all Phi_d for proper divisors d | m
    QPoly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) num = qp_divexact(num, phi_m_cached(d, cache));
    return num;
}

} // namespace

const std::vector<Rat>& cyclotomic_poly(unsigned m) {
    if (m == 0) throw std::domain_error("cyclotomic conductor must be >= 1");
    // per-thread cache: this sits on the hot path of every cyclotomic
    // multiplication, and a shared cache behind a mutex would serialize
    // parallel runs; the polynomials are tiny, duplication is free
    thread_local std::map<unsigned, QPoly> cache;
    return phi_m_cached(m, cache);
}

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    v_ = std::move(r);
}

Scalar Scalar::cyclotomic(unsigned m, std::vector<Rat> coeffs) {
    if (m == 0) throw std::domain_error("cyclotomic conductor must be >= 1");
    for (Rat& c : coeffs) {
        if (c.get_den() == 0) throw std::domain_error("cyclotomic coefficient with zero denominator");
        c.canonicalize(); // GMP arithmetic and comparison assume canonical form
    }
    if (m == 1) {
        Rat r = coeffs.empty() ? Rat(0) : coeffs[0];
        for (size_t i = 1; i < coeffs.size(); ++i) r += coeffs[i]; // zeta_1 = 1
        return Scalar(std::move(r));
    }
    const QPoly& phi = cyclotomic_poly(m);
    const size_t deg = phi.size() - 1; // phi(m)
    // reduce mod Phi_m (monic)
    while (coeffs.size() > deg) {
        Rat c = coeffs.back();
        size_t shift = coeffs.size() - phi.size();
        for (size_t i = 0; i < phi.size(); ++i) coeffs[shift + i] -= c * phi[i];
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
        if (coeffs.size() > deg && coeffs.back() == 0) coeffs.pop_back();
    }
    coeffs.resize(deg, Rat(0));
    Scalar s;
    s.v_ = Cyc{m, std::move(coeffs)};
    s.collapse_if_rational();
    return s;
}

Scalar Scalar::root_of_unity(unsigned m, unsigned k) {
    std::vector<Rat> c(k % m + 1, Rat(0));
    c.back() = 1;
    return cyclotomic(m, std::move(c));
}

void Scalar::collapse_if_rational() {
    if (is_rational()) return;
    const Cyc& cc = cyc();
    for (size_t i = 1; i < cc.c.size(); ++i)
        if (cc.c[i] != 0) return;
    Rat r = cc.c.empty() ? Rat(0) : cc.c[0];
    v_ = std::move(r);
}

Scalar Scalar::promoted(unsigned m) const {
    std::vector<Rat> c(euler_phi(m), Rat(0));
    c[0] = rat();
    Scalar s;
    s.v_ = Cyc{m, std::move(c)};
    return s; // no collapse: caller wants the residue form
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
    if (!a.is_rational() && !b.is_rational() && a.cyc().m != b.cyc().m)
        throw std::domain_error("mixed cyclotomic conductors " + std::to_string(a.cyc().m) +
                                " and " + std::to_string(b.cyc().m));
}

bool Scalar::is_zero() const {
    if (is_rational()) return rat() == 0;
    for (const Rat& c : cyc().c)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (is_rational()) return rat() == 1;
    const auto& c = cyc().c;
    if (c.empty() || c[0] != 1) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (s.is_rational()) {
        s.rat() = -s.rat();
    } else {
        for (Rat& c : s.cyc().c) c = -c;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(*this, o);
    if (is_rational() && o.is_rational()) {
        rat() += o.rat();
        return *this;
    }
    if (is_rational()) *this = promoted(o.cyc().m);
    if (o.is_rational()) {
        cyc().c[0] += o.rat();
    } else {
        auto& a = cyc().c;
        const auto& b = o.cyc().c;
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    }
    collapse_if_rational();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(*this, o);
    if (is_rational() && o.is_rational()) {
        rat() *= o.rat();
        return *this;
    }
    if (is_rational() || o.is_rational()) {
        const Rat& r = is_rational() ? rat() : o.rat();
        Scalar res = is_rational() ? o : *this;
        for (Rat& c : res.cyc().c) c *= r;
        res.collapse_if_rational();
        *this = std::move(res);
        return *this;
    }
    const unsigned m = cyc().m;
    const auto& a = cyc().c;
    const auto& b = o.cyc().c;
    std::vector<Rat> prod(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    *this = cyclotomic(m, std::move(prod));
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (is_rational()) return Scalar(Rat(1) / rat());
    // extended Euclid in Q[x]: u * this + v * Phi_m = 1
    const unsigned m = cyc().m;
    QPoly r0 = cyclotomic_poly(m);
    QPoly r1 = cyc().c;
    qp_trim(r1);
    QPoly s0 = {}, s1 = {Rat(1)}; // coefficients of `this`
    while (!r1.empty()) {
        // r0 = q * r1 + r
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        QPoly r = r0;
        while (r.size() >= r1.size() && !r.empty()) {
            Rat c = r.back() / r1.back();
            size_t shift = r.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) r[shift + i] -= c * r1[i];
            qp_trim(r);
        }
        // s_next = s0 - q * s1
        QPoly qs(q.size() + (s1.empty() ? 0 : s1.size() - 1) + 1, Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        qp_trim(qs);
        QPoly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since Phi_m is irreducible)
    if (r0.size() != 1) throw std::domain_error("cyclotomic inverse: residue not invertible");
    for (Rat& c : s0) c /= r0[0];
    return cyclotomic(m, std::move(s0));
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() && o.is_rational()) return rat() == o.rat();
    if (is_rational()) return promoted(o.cyc().m).cyc() == o.cyc();
    if (o.is_rational()) return cyc() == o.promoted(cyc().m).cyc();
    check_same_field(*this, o);
    return cyc() == o.cyc();
}

std::optional<Scalar> Scalar::sqrt() const {
    if (is_one()) return Scalar(1);
    if (!is_rational()) return std::nullopt;
    const Rat& r = rat();
    if (r < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        return Scalar(Rat(sn, sd));
    }
    return std::nullopt;
}

std::string Scalar::str() const {
    if (is_rational()) return rat_to_string(rat());
    std::ostringstream os;
    os << "zeta" << cyc().m << "{";
    for (size_t i = 0; i < cyc().c.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(cyc().c[i]);
    }
    os << "}";
    return os.str();
}

} // namespace localpn
