#pragma once

#include <map>
#include <vector>

#include "localpn/polynomial.hpp"
#include "localpn/qseries.hpp"

namespace localpn {

// Coefficient rings for DiffOperator: a commutative ring with a derivation
// compatible with the operator's D, i.e. D(a * x) = derive(a) * x + a * D(x).

struct QSeriesRing {
    using Elem = QSeries;
    static Elem derive(const Elem& a) { return euler_D(a); }
    static bool is_zero(const Elem& a) { return a.is_zero(); }
};

struct LRationalRing {
    using Elem = RationalFunction;
    static Elem derive(const Elem& a) { return a.derivative(); }
    static bool is_zero(const Elem& a) { return a.is_zero(); }
};

/*
 * Operator sum_p C_p(z) D^p where C_p is a z-polynomial with coefficients in
 * the ring R::Elem and z is central. Composition applies the commutation
 * rule D o (a .) = (Da) . + a . D via the Leibniz expansion
 *   D^p o (a .) = sum_m binom(p, m) (D^{p-m} a) . D^m.
 */
template <class R>
class DiffOperator {
public:
    using Elem = typename R::Elem;
    // term map: D-power -> ascending z-degree coefficients
    using ZPolyElem = std::vector<Elem>;
    std::map<int, ZPolyElem> terms;

    DiffOperator() = default;

    // c * z^zdeg * D^p
    static DiffOperator term(Elem c, int zdeg, int p) {
        DiffOperator op;
        if (R::is_zero(c)) return op;
        ZPolyElem zp(static_cast<size_t>(zdeg) + 1, c - c); // zero of the right shape
        zp.back() = std::move(c);
        op.terms.emplace(p, std::move(zp));
        return op;
    }

    bool is_zero() const {
        for (const auto& [p, zp] : terms)
            for (const Elem& e : zp)
                if (!R::is_zero(e)) return false;
        return true;
    }

    int max_z_degree() const {
        int m = -1;
        for (const auto& [p, zp] : terms)
            for (size_t a = 0; a < zp.size(); ++a)
                if (!R::is_zero(zp[a])) m = std::max(m, static_cast<int>(a));
        return m;
    }

    DiffOperator& operator+=(const DiffOperator& o) {
        for (const auto& [p, zp] : o.terms) {
            ZPolyElem& mine = fetch(p, zp);
            if (mine.size() < zp.size()) mine.resize(zp.size(), zero_like(zp));
            for (size_t a = 0; a < zp.size(); ++a) mine[a] += zp[a];
        }
        return *this;
    }

    DiffOperator operator-() const {
        DiffOperator r = *this;
        for (auto& [p, zp] : r.terms)
            for (Elem& e : zp) e = -e;
        return r;
    }

    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a += -b; }

    // left multiplication by a ring element: (c .) o this
    DiffOperator left_mul(const Elem& c) const {
        DiffOperator r = *this;
        for (auto& [p, zp] : r.terms)
            for (Elem& e : zp) e = c * e;
        return r;
    }

    friend DiffOperator op_compose(const DiffOperator& A, const DiffOperator& B) {
        DiffOperator out;
        for (const auto& [pA, ZA] : A.terms) {
            for (const auto& [pB, ZB] : B.terms) {
                // precompute iterated derivatives of ZB's coefficients
                std::vector<ZPolyElem> dZB(static_cast<size_t>(pA) + 1, ZB);
                for (int k = 1; k <= pA; ++k)
                    for (size_t a = 0; a < ZB.size(); ++a)
                        dZB[static_cast<size_t>(k)][a] = R::derive(dZB[static_cast<size_t>(k - 1)][a]);
                unsigned long binom = 1; // binom(pA, m)
                for (int m = pA; m >= 0; --m) {
                    // coefficient picks up D^{pA-m} of ZB
                    const ZPolyElem& zb = dZB[static_cast<size_t>(pA - m)];
                    ZPolyElem conv(ZA.size() + zb.size() - 1, zero_like(ZA));
                    for (size_t a = 0; a < ZA.size(); ++a)
                        for (size_t b = 0; b < zb.size(); ++b)
                            conv[a + b] += ZA[a] * zb[b];
                    if (binom != 1) {
                        const Scalar s(static_cast<long>(binom));
                        for (Elem& e : conv) e = s * e;
                    }
                    DiffOperator piece;
                    piece.terms.emplace(m + pB, std::move(conv));
                    out += piece;
                    // next binomial: C(pA, m-1) = C(pA, m) * m / (pA - m + 1)
                    if (m > 0) binom = binom * static_cast<unsigned long>(m) /
                                       static_cast<unsigned long>(pA - m + 1);
                }
            }
        }
        out.prune();
        return out;
    }

    // apply to a ring element; result is z-graded: out[a] = coeff of z^a
    std::vector<Elem> apply(const Elem& x) const {
        std::vector<Elem> out;
        for (const auto& [p, zp] : terms) {
            Elem dx = x;
            for (int k = 0; k < p; ++k) dx = R::derive(dx);
            for (size_t a = 0; a < zp.size(); ++a) {
                Elem v = zp[a] * dx;
                if (out.size() <= a) out.resize(a + 1, v - v);
                out[a] += v;
            }
        }
        return out;
    }

    // coefficient of z^m as a map p -> Elem
    std::map<int, Elem> layer(int m) const {
        std::map<int, Elem> l;
        for (const auto& [p, zp] : terms)
            if (m >= 0 && m < static_cast<int>(zp.size()) && !R::is_zero(zp[static_cast<size_t>(m)]))
                l.emplace(p, zp[static_cast<size_t>(m)]);
        return l;
    }

    void prune() {
        for (auto it = terms.begin(); it != terms.end();) {
            bool all_zero = true;
            for (const Elem& e : it->second)
                if (!R::is_zero(e)) { all_zero = false; break; }
            it = all_zero ? terms.erase(it) : std::next(it);
        }
    }

private:
    static Elem zero_like(const ZPolyElem& zp) { return zp.front() - zp.front(); }

    ZPolyElem& fetch(int p, const ZPolyElem& shape) {
        auto it = terms.find(p);
        if (it == terms.end())
            it = terms.emplace(p, ZPolyElem(shape.size(), zero_like(shape))).first;
        return it->second;
    }
};

using SeriesOperator = DiffOperator<QSeriesRing>;
using LOperator = DiffOperator<LRationalRing>;

} // namespace localpn
