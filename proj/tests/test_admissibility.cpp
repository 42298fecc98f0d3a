#include <doctest.h>

#include <random>

#include "localpn/admissibility.hpp"
#include "localpn/asymptotics.hpp"
#include "localpn/lode.hpp"

using namespace localpn;

namespace {

std::mt19937 rng(0x10ca112e);

const LambdaConfig cfg12(1, {Scalar(1), Scalar(2)});

FContextPtr f12() { return make_localizer(Poly({Scalar(-4), Scalar(3)})); } // 3x - 4
FContextPtr fquad() { return make_localizer(Poly({Scalar(1), Scalar(0), Scalar(1)})); } // x^2 + 1

LocalizedElement random_element(const FContextPtr& ctx) {
    std::uniform_int_distribution<int> e(-3, 3);
    std::uniform_int_distribution<long> c(-8, 8);
    LocalizedElement el(ctx);
    for (int t = 0; t < 3; ++t) {
        el += Scalar(c(rng)) * LocalizedElement::f_power(ctx, e(rng));
        if (ctx->deg == 2) el += LocalizedElement::fprime_times(ctx, Scalar(c(rng)), e(rng));
    }
    return el;
}

// the derived level-one operator at lambda = (1,2) as a LevelOperator
LevelOperator derived_op(const LambdaConfig& cfg) {
    const LOdeSystem sys = derive_L_ode(cfg);
    LevelOperator op;
    op.level = cfg.n() - 1;
    op.f = make_localizer(sys.f);
    for (const auto& [lp, a] : sys.A) op.entries.emplace(lp, to_localized(op.f, a));
    return op;
}

} // namespace

TEST_CASE("order with respect to a linear localizer") {
    const auto ctx = f12();
    LocalizedElement a = LocalizedElement::f_power(ctx, -3) + LocalizedElement::f_power(ctx, -1);
    CHECK(a.order() == -3);

    // x = (f + 4)/3 has order 0 for f = 3x - 4
    const LocalizedElement x = LocalizedElement::from_poly(ctx, Poly::variable(), 0);
    CHECK(x.order() == 0);
    CHECK(x.digits().at(0).gamma == Scalar(4, 3));
    CHECK(x.digits().at(1).gamma == Scalar(1, 3));

    CHECK_THROWS_AS(LocalizedElement(ctx).order(), std::domain_error);
}

TEST_CASE("the A02 entry of the derived system has order -2") {
    const LevelOperator op = derived_op(cfg12);
    const LocalizedElement& a02 = op.entries.at({0, 2});
    CHECK(a02.order() == -2);
    CHECK(a02.digits().at(-2).gamma == Scalar(4, 9)); // numerator value at the root L = 4/3
}

TEST_CASE("f-adic expansion round trip") {
    for (int trial = 0; trial < 40; ++trial) {
        const auto ctx = trial % 2 ? fquad() : f12();
        const LocalizedElement el = random_element(ctx);
        const RationalFunction v = el.value();
        const LocalizedElement back = to_localized(ctx, v);
        CHECK(back.digits().size() == el.digits().size());
        CHECK((back - el).is_zero());
    }
}

TEST_CASE("membership trichotomy for quadratic localizers") {
    const auto ctx = fquad(); // x^2 + 1, f' = 2x
    CHECK(rf_membership(LocalizedElement::f_power(ctx, 3)).cls == RfClass::InRf);
    CHECK(*rf_membership(LocalizedElement::f_power(ctx, 3)).b_order == 3);

    const LocalizedElement fp = LocalizedElement::fprime_times(ctx, Scalar(1), -2);
    CHECK(rf_membership(fp).cls == RfClass::InFprimeRf);
    CHECK(*rf_membership(fp).b_order == -2);

    // x itself is f'/2
    const LocalizedElement x = LocalizedElement::from_poly(ctx, Poly::variable(), 0);
    const RfMembership mx = rf_membership(x);
    CHECK(mx.cls == RfClass::InFprimeRf);
    CHECK(mx.b_digits.at(0) == Scalar(1, 2));

    // mixed digits are neither
    CHECK(rf_membership(x + LocalizedElement::constant(ctx, Scalar(1))).cls == RfClass::Neither);
}

TEST_CASE("degree-one conditions") {
    // the derived system passes with orders -4, -3, -2
    const LevelOperator op = derived_op(cfg12);
    const ConditionReport rep = check_deg1_conditions(op);
    CHECK(rep.pass);
    REQUIRE(rep.entries.size() == 3);
    CHECK(rep.entries[0].ord == -4);
    CHECK(rep.entries[1].ord == -3);
    CHECK(rep.entries[2].ord == -2);
    CHECK(rep.entries[2].threshold == 3);

    // further weight pairs and the level-two system on the spl2 locus
    for (const LambdaConfig& cfg :
         {LambdaConfig(1, {Scalar(3), Scalar(5)}), LambdaConfig(1, {Scalar(-2, 3), Scalar(7, 2)}),
          LambdaConfig::spl2_canonical()})
        CHECK(check_deg1_conditions(derived_op(cfg)).pass);

    // empty operator passes vacuously
    LevelOperator empty;
    empty.level = 0;
    empty.f = f12();
    CHECK(check_deg1_conditions(empty).pass);

    // a single f^{-1} entry at p = 0 fails the -2 threshold
    LevelOperator bad = empty;
    bad.entries.emplace(std::make_pair(0, 0), LocalizedElement::f_power(f12(), -1));
    CHECK(!check_deg1_conditions(bad).pass);
}

TEST_CASE("degree-two conditions") {
    const auto ctx = fquad();
    LevelOperator op;
    op.level = 0;
    op.f = ctx;

    // odd p: plain f-powers pass with the [(p-1)/2] threshold
    op.entries.emplace(std::make_pair(0, 1), LocalizedElement::f_power(ctx, -2));
    CHECK(check_deg2_conditions(op).pass);

    // even p: f'-multiples with order <= -2
    op.entries.emplace(std::make_pair(0, 0), LocalizedElement::fprime_times(ctx, Scalar(1), -2));
    CHECK(check_deg2_conditions(op).pass);

    // f' f^{-1} at p = 0 violates the order bound
    LevelOperator bad;
    bad.level = 0;
    bad.f = ctx;
    bad.entries.emplace(std::make_pair(0, 0), LocalizedElement::fprime_times(ctx, Scalar(1), -1));
    CHECK(!check_deg2_conditions(bad).pass);

    // wrong parity: a plain f-power at even p
    LevelOperator parity;
    parity.level = 0;
    parity.f = ctx;
    parity.entries.emplace(std::make_pair(0, 0), LocalizedElement::f_power(ctx, -2));
    CHECK(!check_deg2_conditions(parity).pass);
}

TEST_CASE("recursion on the zero operator") {
    LevelOperator op;
    op.level = 0;
    op.f = f12();
    const RecursionResult res = run_recursion(op, 5);
    CHECK(!res.obstruction);
    REQUIRE(res.X.size() == 6);
    for (size_t k = 1; k < res.X.size(); ++k) CHECK(res.X[k].is_zero());
}

TEST_CASE("recursion matches the q-space solution") {
    const int N = 14, K = 8;
    for (const LambdaConfig& cfg :
         {cfg12, LambdaConfig(1, {Scalar(3), Scalar(5)}), LambdaConfig::spl2_canonical()}) {
        for (int i = 0; i <= cfg.n(); ++i) {
            const LevelOperator op = derived_op(cfg);
            const RecursionResult res = run_recursion(op, K, cfg.lambda(i));
            REQUIRE(!res.obstruction);

            const AsymptoticData d = solve_asymptotics(cfg, i, K, N);
            const QSeries L = d.L;
            for (int k = 0; k <= K; ++k) {
                // X_k(L(q)) * R_0 = R_k
                const QSeries lhs = res.X[static_cast<size_t>(k)].eval_at_series(L) * d.R[0];
                CHECK(lhs == d.R[static_cast<size_t>(k)]);
            }
        }
    }
}

TEST_CASE("recursion results differentiate back to their defining equations") {
    const LevelOperator op = derived_op(cfg12);
    const int K = 6;
    const RecursionResult res = run_recursion(op, K);
    REQUIRE(!res.obstruction);
    for (int k1 = 1; k1 <= K; ++k1) {
        LocalizedElement rhs(op.f);
        for (const auto& [lp, a] : op.entries) {
            const auto [l, p] = lp;
            const int src = k1 - 1 - l;
            if (src < 0) continue;
            LocalizedElement d = res.X[static_cast<size_t>(src)];
            for (int t = 0; t < p; ++t) d = d.derivative();
            rhs += a * d;
        }
        CHECK((res.X[static_cast<size_t>(k1)].derivative() - rhs).is_zero());
    }
}

TEST_CASE("forced logarithm obstructs at the first step") {
    LevelOperator op;
    op.level = 0;
    op.f = f12();
    op.entries.emplace(std::make_pair(0, 0), LocalizedElement::f_power(f12(), -1));
    const RecursionResult res = run_recursion(op, 4);
    REQUIRE(res.obstruction.has_value());
    CHECK(res.obstruction->k == 1);
    CHECK(res.obstruction->exponent == -1);
}

TEST_CASE("quadratic integration closes and detects residues") {
    const auto ctx = fquad();

    // d/dx integrate = identity for integrable elements
    for (int trial = 0; trial < 30; ++trial) {
        LocalizedElement el = random_element(ctx);
        // make it integrable: use f' f^e and polynomial digits only
        LocalizedElement h(ctx);
        for (const auto& [e, d] : el.digits()) {
            if (e >= 0) h += Scalar(1) * LocalizedElement::f_power(ctx, e);
            if (e != -1) h += LocalizedElement::fprime_times(ctx, d.beta, e);
        }
        LevelOperator op;
        op.level = 0;
        op.f = ctx;
        op.entries.emplace(std::make_pair(0, 0), h);
        const RecursionResult res = run_recursion(op, 1);
        REQUIRE(!res.obstruction);
        CHECK((res.X[1].derivative() - h).is_zero());
    }

    // an exact pure-gamma combination: d/dx (f' f^{-2}) = -6a f^{-2} - 2 disc0 f^{-3}
    {
        LevelOperator op;
        op.level = 0;
        op.f = ctx;
        const LocalizedElement h =
            (Scalar(-6) * ctx->lead) * LocalizedElement::f_power(ctx, -2) +
            (Scalar(-2) * ctx->disc0) * LocalizedElement::f_power(ctx, -3);
        op.entries.emplace(std::make_pair(0, 0), h);
        const RecursionResult res = run_recursion(op, 1);
        REQUIRE(!res.obstruction);
        CHECK((res.X[1] - LocalizedElement::fprime_times(ctx, Scalar(1), -2)).is_zero());
    }

    // f^{-1} (logarithm) and bare f^{-2} (inverse-tangent residue after the
    // reduction) both leave the ring
    for (int e : {-1, -2}) {
        LevelOperator op;
        op.level = 0;
        op.f = ctx;
        op.entries.emplace(std::make_pair(0, 0), LocalizedElement::f_power(ctx, e));
        CHECK(run_recursion(op, 1).obstruction.has_value());
    }

    // perfect-square quadratic localizers are rejected with a hint
    {
        const auto sq = make_localizer(Poly({Scalar(1), Scalar(2), Scalar(1)})); // (x+1)^2
        LevelOperator op;
        op.level = 0;
        op.f = sq;
        op.entries.emplace(std::make_pair(0, 0), LocalizedElement::f_power(sq, -2));
        CHECK_THROWS_AS(run_recursion(op, 1), std::domain_error);
    }
}

TEST_CASE("derivative of localized elements agrees with rational calculus") {
    for (int trial = 0; trial < 30; ++trial) {
        const auto ctx = trial % 2 ? fquad() : f12();
        const LocalizedElement el = random_element(ctx);
        CHECK(el.derivative().value() == el.value().derivative());
    }
}
