#pragma once

#include <string>
#include <vector>

#include "localpn/scalar.hpp"

namespace localpn {

/*
 * Dense univariate polynomial over the working field. Degrees stay small
 * here (tables go up to ~30), so no sparse machinery. Coefficients ascend;
 * the zero polynomial has an empty coefficient vector and degree -1.
 */
class Poly {
public:
    Poly() = default;
    explicit Poly(Scalar c) { c_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(Scalar c, int deg);
    static Poly variable() { return monomial(Scalar(1), 1); }
    // prod (x - roots[i])
    static Poly from_roots(const std::vector<Scalar>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int k) const; // 0 outside range
    const Scalar& leading() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Scalar& s, const Poly& p);

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // quotient/remainder; divisor must be nonzero
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // division with remainder required to vanish
    static Poly divexact(const Poly& a, const Poly& b);
    // monic gcd; gcd(0,0) = 0
    static Poly gcd(Poly a, Poly b);

    Poly derivative() const;
    Poly monic() const; // divide by leading coefficient
    Scalar eval(const Scalar& x) const;
    Poly pow(unsigned e) const;

    std::string str(const std::string& var = "L") const;

private:
    std::vector<Scalar> c_;
    void trim();
};

/*
 * Quotient of two Poly, kept gcd-reduced with monic denominator after every
 * operation. Zero is 0/1.
 */
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Scalar(1)) {}
    RationalFunction(Poly num, Poly den);
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Scalar(1)) {}
    explicit RationalFunction(Scalar c) : num_(Poly(std::move(c))), den_(Scalar(1)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    friend RationalFunction operator*(const Scalar& s, const RationalFunction& f);

    RationalFunction inverse() const;
    // formal d/dL via the quotient rule
    RationalFunction derivative() const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str(const std::string& var = "L") const;

private:
    Poly num_, den_;
    void reduce();
};

} // namespace localpn
