#pragma once

// Known closed forms for the normalized L-coordinate ODE tables and the first
// subleading asymptotic coefficient, kept independent of the derivation code
// and used as oracles by the unit and acceptance suites. Everything is a
// rational function of L with coefficients in the elementary symmetric
// functions.

#include "localpn/model.hpp"
#include "localpn/polynomial.hpp"

namespace localpn::reference {

inline Poly linpow(const Scalar& s1, const Scalar& s2, const Scalar& shift, unsigned e) {
    // (s1 L - shift*s2)^e
    return Poly({-(shift * s2), s1}).pow(e);
}

// level-one table: denominators are powers of s1 L - 2 s2
inline RationalFunction level1_A(const LambdaConfig& cfg, int p) {
    const Scalar s1 = cfg.sym(1), s2 = cfg.sym(2);
    switch (p) {
        case 0: {
            Poly num({-(s1 * s1 * s2 * s2), -(s1 * s1 * s1 * s2) + Scalar(8) * s1 * s2 * s2,
                      Scalar(2) * s1 * s1 * s1 * s1 - Scalar(9) * s1 * s1 * s2});
            return RationalFunction(num, Scalar(4) * linpow(s1, s2, Scalar(2), 4));
        }
        case 1: {
            Poly num({Scalar(2) * s1 * s2 * s2, -(s1 * s1 * s2) - Scalar(8) * s2 * s2,
                      -(s1 * s1 * s1) + Scalar(10) * s1 * s2, -(s1 * s1)});
            return RationalFunction(num, Scalar(2) * linpow(s1, s2, Scalar(2), 3));
        }
        case 2: {
            Poly num({s2 * s2, Scalar(-2) * s1 * s2, s1 * s1 + s2, -s1});
            return RationalFunction(num, linpow(s1, s2, Scalar(2), 2));
        }
        default: throw std::domain_error("level-one table has p = 0, 1, 2");
    }
}

// R_1 = sigma_i * [ N(L) / (24 s1 (s1 L - 2 s2)^3) + c_i ] with the cyclic
// convention lambda_{i+1} (indices mod n+1)
inline RationalFunction level1_R1_bracket(const LambdaConfig& cfg, int i) {
    const Scalar s1 = cfg.sym(1), s2 = cfg.sym(2);
    const Scalar li = cfg.lambda(i), lj = cfg.lambda((i + 1) % 2);
    Poly num({Scalar(-16) * s1 * s1 * s2 * s2 + Scalar(88) * s2 * s2 * s2,
              Scalar(27) * s1 * s1 * s1 * s2 - Scalar(132) * s1 * s2 * s2,
              Scalar(-12) * s1 * s1 * s1 * s1 + Scalar(54) * s1 * s1 * s2});
    RationalFunction main(num, Scalar(24) * s1 * linpow(s1, s2, Scalar(2), 3));
    const Scalar cnum = Scalar(12) * li * li - Scalar(9) * li * lj + lj * lj;
    const Scalar cden = Scalar(24) * (li * li * li - li * lj * lj);
    return main + RationalFunction(Scalar(cnum / cden));
}

// level-two table on the spl2 locus: denominators are powers of s1 L - s2
inline RationalFunction level2_A(const LambdaConfig& cfg, int l, int p) {
    const Scalar s1 = cfg.sym(1), s2 = cfg.sym(2);
    auto S = [](long k) { return Scalar(k); };
    auto pw = [&](const Scalar& base, int e) {
        Scalar r(1);
        for (int t = 0; t < e; ++t) r *= base;
        return r;
    };
    const Scalar s1_2 = pw(s1, 2), s1_3 = pw(s1, 3), s1_4 = pw(s1, 4), s1_5 = pw(s1, 5),
                 s1_6 = pw(s1, 6), s1_7 = pw(s1, 7);
    const Scalar s2_2 = pw(s2, 2), s2_3 = pw(s2, 3), s2_4 = pw(s2, 4), s2_5 = pw(s2, 5),
                 s2_6 = pw(s2, 6);

    if (l == 0 && p == 0) {
        Poly num({s1 * s2_3, S(-4) * s1_2 * s2_2 + S(3) * s2_3, -(s1_3 * s2) + S(12) * s1 * s2_2,
                  S(11) * s1_4 - S(36) * s1_2 * s2});
        return RationalFunction(s1 * num, S(9) * linpow(s1, s2, S(1), 5));
    }
    if (l == 0 && p == 1) {
        Poly num({s2_3, S(-4) * s1 * s2_2, S(3) * s1_2 * s2 + S(9) * s2_2,
                  S(3) * s1_3 - S(21) * s1 * s2, S(3) * s1_2});
        return RationalFunction(-s1 * num, S(3) * linpow(s1, s2, S(1), 4));
    }
    if (l == 0 && p == 2) {
        Poly num({s2_3, S(-5) * s1 * s2_2, S(9) * s1_2 * s2, S(-6) * s1_3 - S(3) * s1 * s2,
                  S(6) * s1_2});
        return RationalFunction(-num, S(3) * linpow(s1, s2, S(1), 3));
    }
    // the shared degree-six polynomial of the l = 1, p = 0, 1 entries
    const Poly big({S(8) * s1_2 * s2_5 - S(21) * s2_6, S(-48) * s1_3 * s2_4 + S(126) * s1 * s2_5,
                    S(120) * s1_4 * s2_3 - S(315) * s1_2 * s2_4,
                    S(-124) * s1_5 * s2_2 + S(264) * s1_3 * s2_3 + S(144) * s1 * s2_4,
                    S(12) * s1_6 * s2 + S(153) * s1_4 * s2_2 - S(432) * s1_2 * s2_3,
                    S(60) * s1_7 - S(342) * s1_5 * s2 + S(432) * s1_3 * s2_2,
                    S(-33) * s1_6 + S(108) * s1_4 * s2});
    const Poly L = Poly::variable();
    if (l == 1 && p == 0)
        return RationalFunction(s1_2 * (L * big), S(27) * linpow(s1, s2, S(1), 9));
    if (l == 1 && p == 1)
        return RationalFunction(-(s1 * (L * big)), S(27) * linpow(s1, s2, S(1), 8));
    if (l == 1 && p == 2) {
        Poly num({-s2_6, S(9) * s1 * s2_5, S(-32) * s1_2 * s2_4 - S(9) * s2_5,
                  S(57) * s1_3 * s2_3 + S(60) * s1 * s2_4, S(-48) * s1_4 * s2_2 - S(171) * s1_2 * s2_3,
                  S(9) * s1_5 * s2 + S(237) * s1_3 * s2_2 + S(27) * s1 * s2_3,
                  S(9) * s1_6 - S(144) * s1_4 * s2 - S(90) * s1_2 * s2_2,
                  S(9) * s1_5 + S(108) * s1_3 * s2, S(-18) * s1_4});
        return RationalFunction(s1 * num, S(9) * linpow(s1, s2, S(1), 7));
    }
    if (l == 1 && p == 3) {
        const Poly quad({s2_2, S(-3) * s1 * s2, S(3) * s1_2});
        const Poly cubic({s2_2, S(-3) * s1 * s2, S(3) * s1_2, S(-3) * s1});
        return RationalFunction(-(quad * cubic * cubic), S(27) * linpow(s1, s2, S(1), 6));
    }
    throw std::domain_error("level-two table has (l,p) in {0}x{0..2} union {1}x{0..3}");
}

} // namespace localpn::reference
