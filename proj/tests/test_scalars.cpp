#include <doctest.h>

#include <random>

#include "localpn/polynomial.hpp"
#include "localpn/scalar.hpp"

using namespace localpn;

namespace {

std::mt19937 rng(0x5ca1a55);

Scalar random_rational() {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 10);
    return Scalar(num(rng), den(rng));
}

Scalar random_cyclotomic3() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return Scalar::cyclotomic(3, {Rat(num(rng), den(rng)), Rat(num(rng), den(rng))});
}

Poly random_poly(int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Scalar> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(random_rational());
    return Poly(std::move(c));
}

RationalFunction random_ratfunc() {
    Poly num = random_poly(3);
    Poly den = random_poly(2);
    while (den.is_zero()) den = random_poly(2);
    return RationalFunction(num, den);
}

} // namespace

TEST_CASE("rational normalization") {
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(0, 7) == Scalar(0));
    CHECK(Scalar(0, 7).rat().get_den() == 1);
    CHECK(Scalar(-3, -6) == Scalar(1, 2));
    CHECK(Scalar(-3, 6).rat().get_den() == 2); // positive denominator
    CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
}

TEST_CASE("cyclotomic construction and reduction") {
    const Scalar z3 = Scalar::cyclotomic(3, {Rat(0), Rat(1)});
    CHECK(z3.conductor() == 3);
    CHECK(z3.coeffs().size() == euler_phi(3));

    // zeta_3^2 reduces to -1 - zeta_3 modulo x^2 + x + 1
    const Scalar z3sq = z3 * z3;
    CHECK(z3sq == Scalar::cyclotomic(3, {Rat(-1), Rat(-1)}));
    CHECK(Scalar::cyclotomic(3, {Rat(0), Rat(0), Rat(1)}) == z3sq);

    // conductor-1 collapse
    const Scalar five = Scalar::cyclotomic(1, {Rat(5)});
    CHECK(five.is_rational());
    CHECK(five == Scalar(5));

    // a residue that happens to be rational collapses too
    CHECK((z3 + z3sq).is_rational());
    CHECK(z3 + z3sq == Scalar(-1));
}

TEST_CASE("cyclotomic inverse") {
    const Scalar z3 = Scalar::root_of_unity(3);
    const Scalar inv = z3.inverse();
    CHECK(inv * z3 == Scalar(1));
    CHECK(inv == Scalar::cyclotomic(3, {Rat(-1), Rat(-1)})); // zeta^2 = -1 - zeta

    CHECK(Scalar(1).inverse() == Scalar(1));

    // (2 zeta + 1)^2 = -3, so its inverse is itself over -3
    const Scalar a = Scalar(2) * z3 + Scalar(1);
    CHECK(a * a == Scalar(-3));
    CHECK(a.inverse() == a / Scalar(-3));
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("mixed conductors reject, rationals embed") {
    const Scalar z3 = Scalar::root_of_unity(3);
    const Scalar z4 = Scalar::root_of_unity(4);
    CHECK_THROWS_AS((void)(z3 + z4), std::domain_error);
    CHECK(z3 * Scalar(2) == Scalar::cyclotomic(3, {Rat(0), Rat(2)}));
    CHECK(Scalar(1, 2) + z3 == Scalar::cyclotomic(3, {Rat(1, 2), Rat(1)}));
}

TEST_CASE("field axioms on random triples") {
    for (int trial = 0; trial < 200; ++trial) {
        const bool cyc = trial % 2;
        const Scalar a = cyc ? random_cyclotomic3() : random_rational();
        const Scalar b = cyc ? random_cyclotomic3() : random_rational();
        const Scalar c = cyc ? random_cyclotomic3() : random_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("scalar square roots") {
    CHECK(*Scalar(9, 4).sqrt() == Scalar(3, 2));
    CHECK(*Scalar(1).sqrt() == Scalar(1));
    CHECK(!Scalar(2).sqrt().has_value());
    CHECK(!Scalar(-4).sqrt().has_value());
    CHECK(*Scalar::cyclotomic(3, {Rat(1), Rat(0)}).sqrt() == Scalar(1));
    CHECK(!Scalar::root_of_unity(3).sqrt().has_value());
}

TEST_CASE("rational function arithmetic") {
    const RationalFunction a(Poly({Scalar(-1), Scalar(1)}), Poly({Scalar(-2), Scalar(1)}));
    const RationalFunction b(Poly({Scalar(-2), Scalar(1)}));
    CHECK(a * b == RationalFunction(Poly({Scalar(-1), Scalar(1)}))); // cancellation

    // 1/(L-1) + 1/(L+1) = 2L/(L^2-1), checked against the common-denominator route
    const RationalFunction f1(Poly(Scalar(1)), Poly({Scalar(-1), Scalar(1)}));
    const RationalFunction f2(Poly(Scalar(1)), Poly({Scalar(1), Scalar(1)}));
    const RationalFunction expect(Poly({Scalar(0), Scalar(2)}),
                                  Poly({Scalar(-1), Scalar(0), Scalar(1)}));
    CHECK(f1 + f2 == expect);

    for (int trial = 0; trial < 50; ++trial) {
        RationalFunction f = random_ratfunc();
        if (f.is_zero()) continue;
        CHECK(f / f == RationalFunction(Scalar(1)));
    }
    CHECK_THROWS_AS((void)(a / RationalFunction()), std::domain_error);
}

TEST_CASE("rational function round trip and reduction invariants") {
    for (int trial = 0; trial < 80; ++trial) {
        RationalFunction a = random_ratfunc();
        RationalFunction b = random_ratfunc();
        if (b.is_zero()) continue;
        CHECK((a * b) / b == a);
        if (!a.is_zero()) {
            CHECK(Poly::gcd(a.num(), a.den()).degree() <= 0);
            CHECK(a.den().leading() == Scalar(1));
        }
    }
}

TEST_CASE("derivative is a derivation") {
    const RationalFunction cube(Poly::monomial(Scalar(1), 3));
    CHECK(cube.derivative() == RationalFunction(Poly::monomial(Scalar(3), 2)));

    const RationalFunction inv_l(Poly(Scalar(1)), Poly::variable());
    CHECK(inv_l.derivative() == RationalFunction(Poly(Scalar(-1)), Poly::monomial(Scalar(1), 2)));

    // f_1 = 3L - 4 at lambda = (1,2) differentiates to the constant 3
    const RationalFunction f1(Poly({Scalar(-4), Scalar(3)}));
    CHECK(f1.derivative() == RationalFunction(Scalar(3)));

    for (int trial = 0; trial < 60; ++trial) {
        RationalFunction a = random_ratfunc();
        RationalFunction b = random_ratfunc();
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("polynomial division and gcd") {
    const Poly a = Poly::from_roots({Scalar(1), Scalar(2), Scalar(3)});
    const Poly b = Poly::from_roots({Scalar(2), Scalar(5)});
    CHECK(Poly::gcd(a, b) == Poly::from_roots({Scalar(2)}));
    auto [q, r] = Poly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(Poly::divexact(a, Poly::from_roots({Scalar(1)})) ==
          Poly::from_roots({Scalar(2), Scalar(3)}));
    CHECK_THROWS_AS(Poly::divexact(a, b), std::domain_error);
}

TEST_CASE("scalar serialization strings") {
    CHECK(Scalar(3, 2).str() == "3/2");
    CHECK(Scalar(-5).str() == "-5");
    CHECK(rat_from_string("7/3") == Rat(7, 3));
    CHECK(rat_from_string("-4") == Rat(-4));
    CHECK_THROWS(rat_from_string("x"));
}
