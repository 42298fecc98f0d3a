#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "localpn/errors.hpp"

namespace localpn {

using Rat = mpq_class;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s); // "num", "num/den"

unsigned euler_phi(unsigned m);

// Coefficients of the m-th cyclotomic polynomial (monic, degree phi(m)),
// ascending, exact. Cached internally.
const std::vector<Rat>& cyclotomic_poly(unsigned m);

/*
 * Exact field element: either an arbitrary-precision rational or a residue
 * in Q(zeta_m) = Q[x]/Phi_m(x), stored as the reduced coefficient vector of
 * length phi(m). Rationals embed into any Q(zeta_m) on demand; arithmetic
 * between two distinct conductors > 1 is rejected.
 */
class Scalar {
public:
    Scalar() : v_(Rat(0)) {}
    Scalar(long n) : v_(Rat(n)) {}
    Scalar(long num, long den);
    explicit Scalar(Rat r) : v_(std::move(r)) { rat().canonicalize(); }

    // Residue sum coeffs[k] * zeta_m^k, reduced mod Phi_m. m == 1 collapses
    // to a plain rational; so does any residue whose tail vanishes.
    static Scalar cyclotomic(unsigned m, std::vector<Rat> coeffs);
    // zeta_m^k
    static Scalar root_of_unity(unsigned m, unsigned k = 1);

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    unsigned conductor() const { return is_rational() ? 1 : cyc().m; }
    const Rat& rat() const { return std::get<Rat>(v_); }
    Rat& rat() { return std::get<Rat>(v_); }
    // Residue coefficients, length phi(m). Only for cyclotomic values.
    const std::vector<Rat>& coeffs() const { return cyc().c; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const; // throws std::domain_error on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Exact square root when one exists in the same field: rational perfect
    // squares, and the constant 1 in any field. nullopt otherwise.
    std::optional<Scalar> sqrt() const;

    // "3/2", "-5", or "zeta3{1/2,-1}" for cyclotomic residues.
    std::string str() const;

private:
    struct Cyc {
        unsigned m;
        std::vector<Rat> c; // length phi(m)
        bool operator==(const Cyc& o) const = default;
    };
    std::variant<Rat, Cyc> v_;

    const Cyc& cyc() const { return std::get<Cyc>(v_); }
    Cyc& cyc() { return std::get<Cyc>(v_); }
    Scalar promoted(unsigned m) const; // rational -> residue in Q(zeta_m)
    void collapse_if_rational();
    static void check_same_field(const Scalar& a, const Scalar& b);
};

} // namespace localpn
