#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "localpn/model.hpp"
#include "localpn/polynomial.hpp"
#include "localpn/qseries.hpp"

namespace localpn {

/*
 * Localized polynomial ring R[x]_f = R[x][f^{-1}] for a fixed localizer f of
 * degree one or two. Every element is stored through its f-adic digits:
 *
 *   deg f = 1:  A = sum_i gamma_i f^i                (gamma_i scalars)
 *   deg f = 2:  A = sum_i (gamma_i + beta_i f') f^i  (f' = df/dx)
 *
 * both expansions are unique ({1, f'} is a basis of the degree-<2 remainders
 * when deg f = 2). The digit form is closed under +, *, d/dx and is exactly
 * what the order function, the parity conditions and the closed-form
 * integration steps consume.
 */
struct FContext {
    Poly f;
    int deg = 1;
    Scalar lead;  // coefficient of x^deg
    Scalar mid;   // x^1 coefficient when deg = 2, else the constant term
    Scalar cst;   // constant term when deg = 2
    Scalar disc0; // mid^2 - 4 lead cst (deg 2); squarefree iff nonzero
};
using FContextPtr = std::shared_ptr<const FContext>;

FContextPtr make_localizer(Poly f); // deg must be 1 or 2

class LocalizedElement {
public:
    struct Digit {
        Scalar gamma, beta;
        bool is_zero() const { return gamma.is_zero() && beta.is_zero(); }
    };

    explicit LocalizedElement(FContextPtr ctx) : ctx_(std::move(ctx)) {}
    // num / f^fexp
    static LocalizedElement from_poly(const FContextPtr& ctx, const Poly& num, int fexp);
    static LocalizedElement constant(const FContextPtr& ctx, Scalar c);
    static LocalizedElement f_power(const FContextPtr& ctx, int e);
    // c * f' * f^e (deg-2 building block)
    static LocalizedElement fprime_times(const FContextPtr& ctx, Scalar c, int e);

    const FContextPtr& ctx() const { return ctx_; }
    const std::map<int, Digit>& digits() const { return digits_; }
    bool is_zero() const;

    LocalizedElement operator-() const;
    friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const Scalar& s, const LocalizedElement& a);
    LocalizedElement& operator+=(const LocalizedElement& o) { return *this = *this + o; }
    LocalizedElement& operator-=(const LocalizedElement& o) { return *this = *this - o; }

    LocalizedElement derivative() const; // d/dx

    // smallest exponent with a nonzero digit; throws std::domain_error on 0
    int order() const;

    // reassemble as num / f^e
    RationalFunction value() const;
    Scalar eval(const Scalar& x) const;          // f(x) != 0 required
    QSeries eval_at_series(const QSeries& x) const; // f(x(0)) != 0 required

    std::string str() const;

private:
    FContextPtr ctx_;
    std::map<int, Digit> digits_;
    void put(int e, Digit d);
    void prune();
};

// Trichotomy of the degree-two lemma: pure span of f-powers, f' times such a
// span, or neither (mixed digits).
enum class RfClass { InRf, InFprimeRf, Neither };

struct RfMembership {
    RfClass cls = RfClass::InRf;
    // B-expansion: for InRf the element itself, for InFprimeRf the cofactor
    // with A = f' B; exponent -> scalar
    std::map<int, Scalar> b_digits;
    std::optional<int> b_order; // nullopt for zero
};

RfMembership rf_membership(const LocalizedElement& a);

/*
 * Level-n operator data: D X_{k+1} = sum_{0<=l<=n, p>=0} A_{lp} D^p X_{k-l},
 * finitely many nonzero A_{lp} in R[x]_f.
 */
struct LevelOperator {
    int level = 0;
    FContextPtr f;
    std::map<std::pair<int, int>, LocalizedElement> entries; // (l, p)
};

struct ConditionReport {
    struct Entry {
        int l, p;
        bool zero;           // vacuous
        std::optional<int> ord;
        int threshold;
        bool pass;
        std::string note;
    };
    bool pass = true;
    std::vector<Entry> entries;
};

// degree-one conditions: Ord(A_{l0}) <= -2, Ord(A_{l1}) <= 0,
// Ord(A_{lp}) <= p+1 for p >= 2
ConditionReport check_deg1_conditions(const LevelOperator& op);

// degree-two conditions: parity split A_{lp} = B (p odd) / f' B (p even)
// with Ord(B_{l0}) <= -2 and Ord(B_{lp}) <= floor((p-1)/2) for p >= 1
ConditionReport check_deg2_conditions(const LevelOperator& op);

struct Obstruction {
    int k = 0;        // the step that failed: integrating the rhs for X_k
    int exponent = 0; // f-exponent of the offending residue term
    std::string term; // description of the non-integrable part
};

struct RecursionResult {
    std::vector<LocalizedElement> X; // X_0 = 1 .. X_K (shorter on obstruction)
    std::optional<Obstruction> obstruction;
};

/*
 * Direct inductive executor: computes X_1..X_K in closed form inside R[x]_f,
 * integrating each step exactly. A residual f^{-1}-type term (deg 1) or a
 * non-exact residue (deg 2) aborts with an obstruction report. Integration
 * constants default to zero; when vanish_at is given, each X_k (k >= 1) is
 * shifted so X_k(vanish_at) = 0.
 */
RecursionResult run_recursion(const LevelOperator& op, int depth,
                              std::optional<Scalar> vanish_at = std::nullopt);

// convert a rational function whose denominator is (a constant times) a
// power of ctx->f into a LocalizedElement; throws if it is not
LocalizedElement to_localized(const FContextPtr& ctx, const RationalFunction& rf);

} // namespace localpn
