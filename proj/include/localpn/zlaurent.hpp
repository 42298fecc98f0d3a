#pragma once

#include <string>
#include <vector>

#include "localpn/polynomial.hpp"
#include "localpn/scalar.hpp"

namespace localpn {

/*
 * Finite Laurent slice in z: coefficients for exponents zmin..zmax, stored
 * densely. Used both for genuine Laurent expansions (poles at z = 0) and
 * for plain z-polynomials (zmin >= 0).
 */
class ZLaurent {
public:
    ZLaurent() : zmin_(0) {}
    ZLaurent(int zmin, std::vector<Scalar> coeffs) : zmin_(zmin), c_(std::move(coeffs)) {}

    static ZLaurent zero_window(int zmin, int zmax);
    static ZLaurent constant(const Scalar& s) { return ZLaurent(0, {s}); }

    int zmin() const { return zmin_; }
    int zmax() const { return zmin_ + static_cast<int>(c_.size()) - 1; }
    bool empty() const { return c_.empty(); }
    Scalar coeff(int e) const; // 0 outside the stored window
    bool is_zero() const;

    ZLaurent operator-() const;
    friend ZLaurent operator+(const ZLaurent& a, const ZLaurent& b); // window = union
    friend ZLaurent operator-(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent operator*(const Scalar& s, const ZLaurent& a);
    ZLaurent& operator+=(const ZLaurent& o) { return *this = *this + o; }
    ZLaurent& operator-=(const ZLaurent& o) { return *this = *this - o; }

    // restrict to [lo, hi], padding with zeros
    ZLaurent window(int lo, int hi) const;

    std::string str() const;

private:
    int zmin_;
    std::vector<Scalar> c_;
};

// z-polynomial from ascending coefficients c0 + c1 z + ...
ZLaurent zpoly(std::vector<Scalar> coeffs);

/*
 * Laurent expansion of r_num/r_den around z = 0 on the window
 * [-pole_bound, z_max]. The denominator must factor as z^e * u(z) with
 * u(0) != 0 and e <= pole_bound; otherwise throws.
 */
ZLaurent zq_laurent_expand(const Poly& r_num, const Poly& r_den, int pole_bound, int z_max);

/*
 * Truncated series in q whose q^d coefficient is a z-Laurent slice with
 * exponents in [-d, zmax]: the natural home of restricted I-functions and
 * of both sides of their asymptotic expansions. Pole order at most d per
 * row is enforced on construction.
 */
class QZSeries {
public:
    QZSeries(int trunc, int zmax);

    int trunc() const { return static_cast<int>(rows_.size()) - 1; }
    int zmax() const { return zmax_; }
    const ZLaurent& row(int d) const { return rows_[static_cast<size_t>(d)]; }
    void set_row(int d, ZLaurent l); // enforces zmin >= -d after windowing
    bool is_zero() const;

    friend QZSeries operator+(const QZSeries& a, const QZSeries& b);
    friend QZSeries operator-(const QZSeries& a, const QZSeries& b);

    // multiply every row d by the z-polynomial evaluated with that row's
    // weight: row_d *= poly(z; d) where the caller supplies per-row factors
    QZSeries rows_scaled(const std::vector<ZLaurent>& per_row_factor) const;
    // shift in q: row d of the result is row d-1 of the input (q-multiplication)
    QZSeries q_shifted() const;

    // first (d, z) with differing coefficients, if any, scanning d ascending
    // then z ascending over the common window
    struct Mismatch {
        int d;
        int z;
        Scalar lhs;
        Scalar rhs;
    };
    static std::optional<Mismatch> first_mismatch(const QZSeries& a, const QZSeries& b);

private:
    int zmax_;
    std::vector<ZLaurent> rows_;
};

} // namespace localpn
