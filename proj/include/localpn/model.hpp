#pragma once

#include <string>
#include <vector>

#include "localpn/polynomial.hpp"
#include "localpn/qseries.hpp"

namespace localpn {

/*
 * Weight configuration for local P^n: pairwise distinct nonzero lambda_0..
 * lambda_n together with their elementary symmetric functions s_1..s_{n+1}.
 * Degenerate configurations are rejected at construction (repeated or zero
 * weights make the root initial data collapse and divide the R_0 closed
 * form by zero).
 */
class LambdaConfig {
public:
    LambdaConfig(int n, std::vector<Scalar> lambdas);

    // lambda_i = zeta_{n+1}^i, the root-of-unity specialization
    static LambdaConfig roots_of_unity(int n);
    // the canonical n=2 point (1, -1, (2 zeta_3 + 1)/3) on the locus
    // s_2^2 - 3 s_1 s_3 = 0 over Q(zeta_3)
    static LambdaConfig spl2_canonical();

    int n() const { return n_; }
    const std::vector<Scalar>& lambdas() const { return lambda_; }
    const Scalar& lambda(int i) const { return lambda_.at(static_cast<size_t>(i)); }
    // s_k for k = 1..n+1
    const Scalar& sym(int k) const { return s_.at(static_cast<size_t>(k) - 1); }

    bool specialization_sp() const { return sp_; }     // lambda_i = zeta_{n+1}^i
    bool specialization_spl2() const { return spl2_; } // n=2: s_2^2 = 3 s_1 s_3

    // largest cyclotomic conductor appearing (1 when purely rational)
    unsigned conductor() const;
    std::string str() const;

private:
    int n_;
    std::vector<Scalar> lambda_;
    std::vector<Scalar> s_;
    bool sp_ = false, spl2_ = false;
};

// p(L) = prod_i (L - lambda_i)
Poly char_poly(const LambdaConfig& cfg);

// f_n(x) = sum_{k=0..n} (-1)^k (k+1) s_{k+1} x^{n-k} = L p'(L) - (n+1) p(L)
Poly f_poly(const LambdaConfig& cfg);

// coefficients (as q-series) of the defining polynomial
// p(L) - (-1)^{n+1} q L^{n+1}, ascending in L
std::vector<QSeries> defining_poly_series(const LambdaConfig& cfg, int trunc);

// the series root L_i(q) of the defining polynomial with L_i(0) = lambda_i
QSeries L_series(const LambdaConfig& cfg, int i, int trunc);

// D L_i = L_i p(L_i) / f_n(L_i), equal to euler_D(L_series) identically
QSeries dL_series(const LambdaConfig& cfg, int i, int trunc);

// the unit square root sigma_i = (f_n(lambda_i) / f_n(L_i))^{1/2}, constant
// term 1; this is the half-power generator used by GnElement evaluation
QSeries half_power_series(const LambdaConfig& cfg, int i, int trunc);

/*
 * Normal form for elements of the ring generated by L^{+-1}, f_n(L)^{+-1}
 * and the normalized inverse square root sigma = (f_n(lambda_i)/f_n(L))^{1/2}:
 * value = sum_t c_t L^{j_t} f_n(L)^{e_t} * sigma^m. Normal forms use
 * m in {0, 1}; products accumulate m and are reduced at evaluation
 * (sigma^2 = f_n(lambda_i) f_n(L)^{-1} needs the configuration).
 *
 * canonicalize() rewrites the body on the canonical module basis: pure
 * powers of f for degree-one f (or of the linear factor ell with f = ell^2/s_1
 * on the spl2 locus), and {L^j} + {(c0 + c1 L) f^-e} for squarefree
 * quadratic f.
 */
// which polynomial's powers the body terms carry
enum class GnBase {
    FPoly,        // f_n(L) itself
    LinearFactor, // ell = s_1 L - s_2 (f_2 = ell^2 / s_1 on the spl2 locus)
};

class GnElement {
public:
    struct Term {
        int j; // power of L
        int e; // power of the base polynomial
        Scalar c;
    };

    GnElement() = default;
    GnElement(int half_power, std::vector<Term> terms, GnBase base = GnBase::FPoly)
        : m_(half_power), base_(base), terms_(std::move(terms)) {}

    static GnElement constant(Scalar c) { return GnElement(0, {Term{0, 0, std::move(c)}}); }
    static GnElement half_power() { return GnElement(1, {Term{0, 0, Scalar(1)}}); }

    int half() const { return m_; }
    GnBase base() const { return base_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const;

    friend GnElement operator+(const GnElement& a, const GnElement& b); // same half power/base
    friend GnElement operator*(const GnElement& a, const GnElement& b);

    std::string str(const LambdaConfig& cfg) const;

private:
    int m_ = 0;
    GnBase base_ = GnBase::FPoly;
    std::vector<Term> terms_;
};

// the base polynomial of a GnElement for a given configuration
Poly gn_base_poly(GnBase base, const LambdaConfig& cfg);

// substitute L -> L_series(cfg, i); ring homomorphism onto QSeries
QSeries gn_eval(const GnElement& elem, const LambdaConfig& cfg, int i, int trunc);

} // namespace localpn
