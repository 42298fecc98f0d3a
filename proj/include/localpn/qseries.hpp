#pragma once

#include <optional>
#include <string>
#include <vector>

#include "localpn/polynomial.hpp"
#include "localpn/scalar.hpp"

namespace localpn {

/*
 * Truncated formal power series in q with exact coefficients c_0..c_N.
 * Binary operations align to the smaller truncation order of the operands;
 * equality compares all coefficients up to the common truncation. All
 * results are exact to truncation; there is no floating point anywhere.
 */
class QSeries {
public:
    QSeries() = default;
    // constant series c + 0*q + ... + 0*q^N
    QSeries(Scalar c, int trunc);
    explicit QSeries(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}

    static QSeries zero(int trunc) { return QSeries(Scalar(0), trunc); }
    static QSeries one(int trunc) { return QSeries(Scalar(1), trunc); }
    // the series q itself
    static QSeries q(int trunc);

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& at(int d) const { return c_[static_cast<size_t>(d)]; }
    Scalar& at(int d) { return c_[static_cast<size_t>(d)]; }
    bool is_zero() const;

    QSeries truncated(int n) const; // keep c_0..c_n (n <= trunc)

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b); // Cauchy product
    friend QSeries operator*(const Scalar& s, const QSeries& a);
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    // equality up to the common truncation
    bool operator==(const QSeries& o) const;

    std::string str(int max_terms = 8) const;

private:
    std::vector<Scalar> c_; // size trunc+1
};

// 1/a; requires a(0) != 0
QSeries ps_invert(const QSeries& a);

// square root with result(0)^2 = a(0); the constant term must be an exact
// square in the field, or an explicit root supplied by the caller
QSeries ps_sqrt(const QSeries& a, std::optional<Scalar> c0_root = std::nullopt);

// D = q d/dq
QSeries euler_D(const QSeries& a);

// inverse of euler_D with prescribed constant term; a must have c_0 = 0
QSeries euler_antiD(const QSeries& a, const Scalar& c0);

// exp(a) for a with zero constant term, via D(exp a) = exp(a) * D(a)
QSeries ps_exp(const QSeries& a);

// log(a) for a with constant term 1
QSeries ps_log(const QSeries& a);

// a^e for integer e (negative uses ps_invert)
QSeries ps_pow(const QSeries& a, int e);

// a / q for a with zero constant term; the truncation drops by one
QSeries q_divide(const QSeries& a);

// evaluate a polynomial at a series argument (Horner)
QSeries eval_poly_at_series(const Poly& p, const QSeries& x);

/*
 * Power-series root of sum_j poly_coeffs[j] * X^j = 0 with X(0) = x0, by
 * Newton iteration doubling the truncation each step. x0 must be a simple
 * root of the polynomial at q = 0, else a DegeneracyError is thrown.
 */
QSeries newton_root(const std::vector<QSeries>& poly_coeffs, const Scalar& x0, int trunc);

} // namespace localpn
