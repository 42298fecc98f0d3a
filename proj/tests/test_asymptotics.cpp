#include <doctest.h>

#include "localpn/asymptotics.hpp"
#include "localpn/errors.hpp"
#include "localpn/ifunction.hpp"
#include "localpn/lode.hpp"
#include "reference_tables.hpp"

using namespace localpn;

namespace {

const LambdaConfig cfg12(1, {Scalar(1), Scalar(2)});

} // namespace

TEST_CASE("restricted I-function coefficients") {
    CHECK(ifun_coeff(cfg12, 0, 0) == RationalFunction(Scalar(1)));

    // d = 1, i = 0: (-2)(-2-z) / (z (z-1)) = (4+2z)/(z^2-z)
    const RationalFunction c1 = ifun_coeff(cfg12, 0, 1);
    CHECK(c1 == RationalFunction(Poly({Scalar(4), Scalar(2)}),
                                 Poly({Scalar(0), Scalar(-1), Scalar(1)})));

    // d = 1, i = 1: (-4)(-4-z) / ((1+z) z)
    const RationalFunction c1b = ifun_coeff(cfg12, 1, 1);
    CHECK(c1b == RationalFunction(Poly({Scalar(16), Scalar(4)}),
                                  Poly({Scalar(0), Scalar(1), Scalar(1)})));
}

TEST_CASE("restricted I-function rows") {
    const QZSeries I = ifun_series(cfg12, 0, 6, 3);
    CHECK(I.row(0).coeff(0) == Scalar(1));
    CHECK(I.row(0).coeff(1) == Scalar(0));
    // row 1 = -4/z - 6 - 6z - ...
    CHECK(I.row(1).coeff(-1) == Scalar(-4));
    CHECK(I.row(1).coeff(0) == Scalar(-6));
    CHECK(I.row(1).coeff(1) == Scalar(-6));
    // pole order at most d is enforced on construction; spot-check row 3
    CHECK(I.row(3).zmin() == -3);
}

TEST_CASE("Picard-Fuchs annihilation") {
    struct Case {
        int n;
        std::vector<Scalar> l;
    };
    const std::vector<Case> cases = {
        {1, {Scalar(1), Scalar(2)}},
        {1, {Scalar(-3, 2), Scalar(5, 7)}},
        {2, {Scalar(1), Scalar(2), Scalar(4)}},
        {2, {Scalar(2, 3), Scalar(-1), Scalar(7)}},
        {3, {Scalar(1), Scalar(2), Scalar(4), Scalar(5)}},
        {3, {Scalar(5, 3), Scalar(-2), Scalar(1, 4), Scalar(7)}},
    };
    for (const auto& c : cases) {
        const LambdaConfig cfg(c.n, c.l);
        // one deep run per level, the rest shallow
        const int N = (&c == &cases[1] || &c == &cases[3] || &c == &cases[5]) ? 30 : 10;
        for (int i = 0; i <= c.n; ++i) {
            const QZSeries residual = pf_apply(cfg, i, ifun_series(cfg, i, N, 3));
            CHECK(residual.is_zero());
        }
    }
    // and over Q(zeta_3)
    const LambdaConfig spl2 = LambdaConfig::spl2_canonical();
    for (int i = 0; i <= 2; ++i)
        CHECK(pf_apply(spl2, i, ifun_series(spl2, i, 8, 2)).is_zero());
}

TEST_CASE("operator probe on the constant series") {
    // applying the operator to 1: row 0 is prod_j (lambda_i - lambda_j) = 0,
    // row 1 picks up the shifted q-term and is nonzero
    QZSeries one(4, 3);
    one.set_row(0, ZLaurent::constant(Scalar(1)));
    const QZSeries probe = pf_apply(cfg12, 0, one);
    CHECK(probe.row(0).is_zero());
    CHECK(!probe.row(1).is_zero());
    // linearity
    QZSeries two(4, 3);
    two.set_row(0, ZLaurent::constant(Scalar(2)));
    const QZSeries p2 = pf_apply(cfg12, 0, two);
    CHECK((p2 - probe - probe).is_zero());
}

TEST_CASE("asymptotic data for local P^1 at (1,2)") {
    const int N = 12;
    const AsymptoticData d0 = solve_asymptotics(cfg12, 0, 4, N);

    CHECK(d0.mu.at(0) == Scalar(0));
    CHECK(d0.mu.at(1) == Scalar(-1));
    CHECK(d0.mu.at(2) == Scalar(3, 2));
    CHECK(d0.mu.at(3) == Scalar(-13, 3));

    CHECK(d0.R[0].at(0) == Scalar(1));
    CHECK(d0.R[0].at(1) == Scalar(-3, 2));
    CHECK(d0.R[0].at(2) == Scalar(63, 8));
    for (size_t k = 1; k < d0.R.size(); ++k) CHECK(d0.R[k].at(0) == Scalar(0));

    // lambda_i + D mu = L
    CHECK(QSeries(Scalar(1), N) + euler_D(d0.mu) == d0.L);
    CHECK(d0.L == L_series(cfg12, 0, N));

    // R_0 equals the closed form sigma = (f(lambda)/f(L))^{1/2}
    CHECK(d0.R[0] == gn_eval(GnElement::half_power(), cfg12, 0, N));
}

TEST_CASE("closed form of R_0 across configurations") {
    const std::vector<LambdaConfig> cfgs = {
        cfg12,
        LambdaConfig(2, {Scalar(1), Scalar(2), Scalar(4)}),
        LambdaConfig(3, {Scalar(1), Scalar(2), Scalar(4), Scalar(5)}),
        LambdaConfig::spl2_canonical(),
    };
    for (const auto& cfg : cfgs) {
        for (int i = 0; i <= cfg.n(); ++i) {
            const AsymptoticData d = solve_asymptotics(cfg, i, 0, 10);
            CHECK(d.R[0] == half_power_series(cfg, i, 10));
            CHECK(QSeries(cfg.lambda(i), 10) + euler_D(d.mu) == d.L);
        }
    }
}

TEST_CASE("closed form of R_1 for local P^1") {
    const std::vector<LambdaConfig> cfgs = {
        cfg12,
        LambdaConfig(1, {Scalar(3), Scalar(5)}),
        LambdaConfig(1, {Scalar(2), Scalar(7)}),
    };
    for (const auto& cfg : cfgs) {
        for (int i = 0; i <= 1; ++i) {
            const int N = 12;
            const AsymptoticData d = solve_asymptotics(cfg, i, 1, N);
            const QSeries bracket =
                eval_ratfunc_at_series(reference::level1_R1_bracket(cfg, i), d.L);
            CHECK(d.R[1] == d.R[0] * bracket);
        }
    }
}

TEST_CASE("asymptotic form equals the I-function") {
    {
        const AsymptoticData d = solve_asymptotics(cfg12, 0, 10, 10);
        const VerifyReport rep = verify_asymptotic(cfg12, 0, d, 10);
        CHECK(rep.pass);

        // perturbing R_1 by +q must fail at row 1 (the z^1 slot there, so the
        // window needs depth = trunc + 1 to see it)
        AsymptoticData bad = solve_asymptotics(cfg12, 0, 11, 10);
        bad.R[1] += QSeries::q(10);
        const VerifyReport rep2 = verify_asymptotic(cfg12, 0, bad, 10);
        CHECK(!rep2.pass);
        REQUIRE(rep2.mismatch.has_value());
        CHECK(rep2.mismatch->d == 1);
    }
    {
        const LambdaConfig spl2 = LambdaConfig::spl2_canonical();
        const AsymptoticData d = solve_asymptotics(spl2, 1, 8, 8);
        CHECK(verify_asymptotic(spl2, 1, d, 8).pass);
    }
    // n = 3 exercises the row scaling (n+1)^{(n+1)d} = 256^d at even n+1
    {
        const LambdaConfig cfg(3, {Scalar(1), Scalar(2), Scalar(4), Scalar(5)});
        const AsymptoticData d = solve_asymptotics(cfg, 2, 7, 7);
        CHECK(verify_asymptotic(cfg, 2, d, 7).pass);
    }
}

TEST_CASE("level-one table matches the reference closed forms") {
    const std::vector<LambdaConfig> cfgs = {
        cfg12,
        LambdaConfig(1, {Scalar(3), Scalar(5)}),
        LambdaConfig(1, {Scalar(-2, 3), Scalar(7, 2)}),
    };
    for (const auto& cfg : cfgs) {
        const LOdeSystem sys = derive_L_ode(cfg);
        CHECK(sys.level == 1);
        CHECK(sys.f == f_poly(cfg));
        for (int p = 0; p <= 2; ++p) CHECK(sys.coeff(0, p) == reference::level1_A(cfg, p));
        // normalizer comes out as the characteristic polynomial
        CHECK(sys.normalizer == RationalFunction(char_poly(cfg)));
    }
}

TEST_CASE("level-two table needs the specialization") {
    CHECK_THROWS_AS(derive_L_ode(LambdaConfig(2, {Scalar(1), Scalar(2), Scalar(4)})),
                    DegeneracyError);
    CHECK_THROWS_AS(derive_L_ode(LambdaConfig::roots_of_unity(2)), DegeneracyError);
    CHECK_THROWS_AS(derive_L_ode(LambdaConfig(3, {Scalar(1), Scalar(2), Scalar(4), Scalar(5)})),
                    DegeneracyError);
}

TEST_CASE("level-two table on the spl2 locus") {
    const LambdaConfig cfg = LambdaConfig::spl2_canonical();
    const LOdeSystem sys = derive_L_ode(cfg);
    CHECK(sys.level == 2);
    for (int p = 0; p <= 2; ++p) CHECK(sys.coeff(0, p) == reference::level2_A(cfg, 0, p));
    for (int p = 0; p <= 3; ++p) CHECK(sys.coeff(1, p) == reference::level2_A(cfg, 1, p));
}

TEST_CASE("table annihilates the solved series") {
    {
        const AsymptoticData d = solve_asymptotics(cfg12, 0, 5, 14);
        CHECK(lode_annihilates(derive_L_ode(cfg12), cfg12, 0, d.R, 14));
        // a perturbed solution is caught
        auto bad = d.R;
        bad[2] += QSeries::q(14);
        CHECK(!lode_annihilates(derive_L_ode(cfg12), cfg12, 0, bad, 14));
    }
    {
        const LambdaConfig spl2 = LambdaConfig::spl2_canonical();
        const AsymptoticData d = solve_asymptotics(spl2, 0, 5, 12);
        CHECK(lode_annihilates(derive_L_ode(spl2), spl2, 0, d.R, 12));
    }
}

TEST_CASE("mirror map of local P^1") {
    const QSeries Q = mirror_map_p1(10);
    CHECK(Q.at(0) == Scalar(0));
    CHECK(Q.at(1) == Scalar(1));
    CHECK(Q.at(2) == Scalar(2));
    CHECK(Q.at(3) == Scalar(5));
    CHECK(Q.at(4) == Scalar(14));
}
