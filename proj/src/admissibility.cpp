#include "localpn/admissibility.hpp"

#include <sstream>

#include "localpn/errors.hpp"

namespace localpn {

FContextPtr make_localizer(Poly f) {
    const int d = f.degree();
    if (d != 1 && d != 2)
        throw std::domain_error("localizer must have degree 1 or 2, got " + std::to_string(d));
    FContext ctx;
    ctx.deg = d;
    ctx.lead = f.coeff(d);
    if (d == 2) {
        ctx.mid = f.coeff(1);
        ctx.cst = f.coeff(0);
        ctx.disc0 = ctx.mid * ctx.mid - Scalar(4) * ctx.lead * ctx.cst;
    } else {
        ctx.mid = f.coeff(0);
        ctx.cst = Scalar(0);
        ctx.disc0 = Scalar(0);
    }
    ctx.f = std::move(f);
    return std::make_shared<const FContext>(std::move(ctx));
}

void LocalizedElement::put(int e, Digit d) {
    if (d.is_zero()) return;
    auto [it, inserted] = digits_.emplace(e, d);
    if (!inserted) {
        it->second.gamma += d.gamma;
        it->second.beta += d.beta;
        if (it->second.is_zero()) digits_.erase(it);
    }
}

void LocalizedElement::prune() {
    for (auto it = digits_.begin(); it != digits_.end();)
        it = it->second.is_zero() ? digits_.erase(it) : std::next(it);
}

LocalizedElement LocalizedElement::from_poly(const FContextPtr& ctx, const Poly& num, int fexp) {
    LocalizedElement el(ctx);
    Poly rest = num;
    int level = -fexp;
    while (!rest.is_zero()) {
        auto [q, r] = Poly::divmod(rest, ctx->f);
        Digit d;
        if (ctx->deg == 1) {
            d.gamma = r.coeff(0);
            d.beta = Scalar(0);
        } else {
            // remainder r0 + r1 x rewritten on the {1, f'} basis
            d.beta = r.coeff(1) / (Scalar(2) * ctx->lead);
            d.gamma = r.coeff(0) - d.beta * ctx->mid;
        }
        el.put(level, d);
        rest = std::move(q);
        ++level;
    }
    return el;
}

LocalizedElement LocalizedElement::constant(const FContextPtr& ctx, Scalar c) {
    LocalizedElement el(ctx);
    el.put(0, Digit{std::move(c), Scalar(0)});
    return el;
}

LocalizedElement LocalizedElement::f_power(const FContextPtr& ctx, int e) {
    LocalizedElement el(ctx);
    el.put(e, Digit{Scalar(1), Scalar(0)});
    return el;
}

LocalizedElement LocalizedElement::fprime_times(const FContextPtr& ctx, Scalar c, int e) {
    if (ctx->deg != 2) throw std::domain_error("f'-digit only meaningful for quadratic localizer");
    LocalizedElement el(ctx);
    el.put(e, Digit{Scalar(0), std::move(c)});
    return el;
}

bool LocalizedElement::is_zero() const { return digits_.empty(); }

LocalizedElement LocalizedElement::operator-() const {
    LocalizedElement r = *this;
    for (auto& [e, d] : r.digits_) {
        d.gamma = -d.gamma;
        d.beta = -d.beta;
    }
    return r;
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    LocalizedElement r = a;
    for (const auto& [e, d] : b.digits_) r.put(e, d);
    return r;
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) { return a + (-b); }

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    LocalizedElement r(a.ctx_);
    const auto& ctx = *a.ctx_;
    for (const auto& [ea, da] : a.digits_) {
        for (const auto& [eb, db] : b.digits_) {
            const int e = ea + eb;
            // (g1 + b1 f')(g2 + b2 f') with f'^2 = 4 lead f + disc0 (deg 2)
            Scalar gg = da.gamma * db.gamma;
            Scalar bb = da.beta * db.beta;
            Scalar cross = da.gamma * db.beta + da.beta * db.gamma;
            if (ctx.deg == 1) {
                r.put(e, LocalizedElement::Digit{gg, Scalar(0)});
            } else {
                r.put(e, LocalizedElement::Digit{gg + bb * ctx.disc0, cross});
                if (!bb.is_zero())
                    r.put(e + 1, LocalizedElement::Digit{Scalar(4) * ctx.lead * bb, Scalar(0)});
            }
        }
    }
    return r;
}

LocalizedElement operator*(const Scalar& s, const LocalizedElement& a) {
    LocalizedElement r = a;
    for (auto& [e, d] : r.digits_) {
        d.gamma *= s;
        d.beta *= s;
    }
    r.prune();
    return r;
}

LocalizedElement LocalizedElement::derivative() const {
    LocalizedElement r(ctx_);
    const auto& ctx = *ctx_;
    for (const auto& [e, d] : digits_) {
        const Scalar ee(static_cast<long>(e));
        if (ctx.deg == 1) {
            // d/dx gamma f^e = gamma e lead f^{e-1}
            if (e != 0) r.put(e - 1, Digit{d.gamma * ee * ctx.lead, Scalar(0)});
        } else {
            // d/dx (gamma + beta f') f^e
            //   = (2 lead beta (1 + 2e)) f^e + (e beta disc0) f^{e-1} + (e gamma) f' f^{e-1}
            r.put(e, Digit{Scalar(2) * ctx.lead * d.beta * Scalar(1 + 2 * e), Scalar(0)});
            if (e != 0) {
                r.put(e - 1, Digit{ee * d.beta * ctx.disc0, ee * d.gamma});
            }
        }
    }
    return r;
}

int LocalizedElement::order() const {
    if (digits_.empty()) throw std::domain_error("order of the zero element is undefined");
    return digits_.begin()->first;
}

RationalFunction LocalizedElement::value() const {
    const auto& ctx = *ctx_;
    const Poly fprime = ctx.f.derivative();
    RationalFunction acc;
    for (const auto& [e, d] : digits_) {
        Poly numer = Poly(d.gamma);
        if (ctx.deg == 2) numer += d.beta * fprime;
        RationalFunction term{numer};
        if (e >= 0)
            term *= RationalFunction(ctx.f.pow(static_cast<unsigned>(e)));
        else
            term *= RationalFunction(Poly(Scalar(1)), ctx.f.pow(static_cast<unsigned>(-e)));
        acc += term;
    }
    return acc;
}

Scalar LocalizedElement::eval(const Scalar& x) const {
    const auto& ctx = *ctx_;
    const Scalar fx = ctx.f.eval(x);
    if (fx.is_zero()) throw std::domain_error("evaluation at a root of the localizer");
    const Scalar fpx = ctx.f.derivative().eval(x);
    const Scalar fx_inv = fx.inverse();
    Scalar acc(0);
    for (const auto& [e, d] : digits_) {
        Scalar p(1);
        for (int k = 0; k < std::abs(e); ++k) p *= (e > 0 ? fx : fx_inv);
        acc += (d.gamma + d.beta * fpx) * p;
    }
    return acc;
}

QSeries LocalizedElement::eval_at_series(const QSeries& x) const {
    const auto& ctx = *ctx_;
    const QSeries fx = eval_poly_at_series(ctx.f, x);
    if (fx.at(0).is_zero())
        throw std::domain_error("series evaluation at a root of the localizer");
    const QSeries fpx = eval_poly_at_series(ctx.f.derivative(), x);
    const QSeries fx_inv = ps_invert(fx);
    QSeries acc = QSeries::zero(x.trunc());
    for (const auto& [e, d] : digits_) {
        QSeries p = e >= 0 ? ps_pow(fx, e) : ps_pow(fx_inv, -e);
        acc += (QSeries(d.gamma, x.trunc()) + d.beta * fpx) * p;
    }
    return acc;
}

std::string LocalizedElement::str() const {
    if (digits_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, d] : digits_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << d.gamma.str();
        if (!d.beta.is_zero()) os << " + (" << d.beta.str() << ")*f'";
        os << ")";
        if (e != 0) os << "*f^" << e;
    }
    return os.str();
}

RfMembership rf_membership(const LocalizedElement& a) {
    RfMembership m;
    bool any_gamma = false, any_beta = false;
    for (const auto& [e, d] : a.digits()) {
        if (!d.gamma.is_zero()) any_gamma = true;
        if (!d.beta.is_zero()) any_beta = true;
    }
    if (any_gamma && any_beta) {
        m.cls = RfClass::Neither;
        return m;
    }
    m.cls = any_beta ? RfClass::InFprimeRf : RfClass::InRf;
    for (const auto& [e, d] : a.digits()) {
        const Scalar& c = any_beta ? d.beta : d.gamma;
        if (!c.is_zero()) m.b_digits.emplace(e, c);
    }
    if (!m.b_digits.empty()) m.b_order = m.b_digits.begin()->first;
    return m;
}

namespace {

ConditionReport check_conditions(const LevelOperator& op, bool deg2) {
    ConditionReport rep;
    for (const auto& [lp, a] : op.entries) {
        const auto [l, p] = lp;
        ConditionReport::Entry ent;
        ent.l = l;
        ent.p = p;
        ent.zero = a.is_zero();
        ent.threshold = deg2 ? (p == 0 ? -2 : (p - 1) / 2)
                             : (p == 0 ? -2 : (p == 1 ? 0 : p + 1));
        if (ent.zero) {
            ent.pass = true;
            ent.note = "zero entry (vacuous)";
            rep.entries.push_back(std::move(ent));
            continue;
        }
        if (!deg2) {
            ent.ord = a.order();
            ent.pass = *ent.ord <= ent.threshold;
        } else {
            RfMembership m = rf_membership(a);
            const bool parity_ok =
                (p % 2 == 1 && m.cls == RfClass::InRf) || (p % 2 == 0 && m.cls == RfClass::InFprimeRf);
            if (m.cls == RfClass::Neither) {
                ent.pass = false;
                ent.note = "not in R_f nor f' R_f";
            } else if (!parity_ok) {
                ent.pass = false;
                ent.note = p % 2 ? "odd p needs A in R_f" : "even p needs A in f' R_f";
            } else {
                ent.ord = m.b_order;
                ent.pass = *ent.ord <= ent.threshold;
            }
        }
        rep.pass = rep.pass && ent.pass;
        rep.entries.push_back(std::move(ent));
    }
    return rep;
}

} // namespace

ConditionReport check_deg1_conditions(const LevelOperator& op) {
    if (op.f->deg != 1) throw std::domain_error("degree-one conditions need a linear localizer");
    return check_conditions(op, false);
}

ConditionReport check_deg2_conditions(const LevelOperator& op) {
    if (op.f->deg != 2) throw std::domain_error("degree-two conditions need a quadratic localizer");
    return check_conditions(op, true);
}

namespace {

// exact antiderivative in R[x]_f, or the obstruction exponent
struct IntegrationOutcome {
    LocalizedElement result;
    std::optional<std::pair<int, std::string>> obstruction;
};

IntegrationOutcome integrate_deg1(const LocalizedElement& h) {
    const auto& ctx = *h.ctx();
    IntegrationOutcome out{LocalizedElement(h.ctx()), std::nullopt};
    for (const auto& [e, d] : h.digits()) {
        if (e == -1) {
            out.obstruction = {{-1, "residue (" + d.gamma.str() + ")*f^-1 integrates to a logarithm"}};
            return out;
        }
        // int gamma f^e dx = gamma/(lead (e+1)) f^{e+1}
        out.result += (d.gamma / (ctx.lead * Scalar(e + 1))) *
                      LocalizedElement::f_power(h.ctx(), e + 1);
    }
    return out;
}

IntegrationOutcome integrate_deg2(const LocalizedElement& h) {
    const auto& ctx = *h.ctx();
    IntegrationOutcome out{LocalizedElement(h.ctx()), std::nullopt};
    if (ctx.disc0.is_zero())
        throw std::domain_error("quadratic localizer is a perfect square; integrate over its linear factor instead");

    // polynomial part (digits at e >= 0), integrated termwise in x
    Poly poly_part;
    std::map<int, Scalar> pending_gamma; // proper gamma digits, e < 0
    const Poly fprime = ctx.f.derivative();
    for (const auto& [e, d] : h.digits()) {
        // beta part: beta f' f^e -> beta/(e+1) f^{e+1}, pole e = -1 obstructs
        if (!d.beta.is_zero()) {
            if (e == -1) {
                out.obstruction = {{-1, "residue (" + d.beta.str() + ")*f'*f^-1 integrates to a logarithm"}};
                return out;
            }
            out.result += (d.beta / Scalar(e + 1)) * LocalizedElement::f_power(h.ctx(), e + 1);
        }
        if (d.gamma.is_zero()) continue;
        if (e >= 0)
            poly_part += d.gamma * ctx.f.pow(static_cast<unsigned>(e));
        else
            pending_gamma[e] += d.gamma;
    }

    // proper gamma digits, most negative first:
    //   f^e = [d/dx(f' f^{e+1}) - (2 lead)(1 + 2(e+1)) f^{e+1}] / ((e+1) disc0)
    for (int e = pending_gamma.empty() ? 0 : pending_gamma.begin()->first; e <= -2; ++e) {
        auto it = pending_gamma.find(e);
        if (it == pending_gamma.end() || it->second.is_zero()) continue;
        const Scalar g = it->second;
        const Scalar denom = Scalar(e + 1) * ctx.disc0;
        out.result += (g / denom) * LocalizedElement::fprime_times(h.ctx(), Scalar(1), e + 1);
        pending_gamma[e + 1] += -(Scalar(2) * ctx.lead * Scalar(1 + 2 * (e + 1)) * g) / denom;
    }
    if (auto it = pending_gamma.find(-1); it != pending_gamma.end() && !it->second.is_zero()) {
        out.obstruction = {{-1, "residue (" + it->second.str() + ")*f^-1 has no elementary antiderivative in R[x]_f"}};
        return out;
    }

    // whatever spilled to exponent >= 0 joins the polynomial part
    for (const auto& [e, g] : pending_gamma) {
        if (e < 0 || g.is_zero()) continue;
        poly_part += g * ctx.f.pow(static_cast<unsigned>(e));
    }
    if (!poly_part.is_zero()) {
        std::vector<Scalar> ic(static_cast<size_t>(poly_part.degree()) + 2, Scalar(0));
        for (int k = 0; k <= poly_part.degree(); ++k)
            ic[static_cast<size_t>(k) + 1] = poly_part.coeff(k) / Scalar(k + 1);
        out.result += LocalizedElement::from_poly(h.ctx(), Poly(std::move(ic)), 0);
    }
    return out;
}

IntegrationOutcome integrate(const LocalizedElement& h) {
    return h.ctx()->deg == 1 ? integrate_deg1(h) : integrate_deg2(h);
}

} // namespace

RecursionResult run_recursion(const LevelOperator& op, int depth, std::optional<Scalar> vanish_at) {
    RecursionResult res;
    res.X.push_back(LocalizedElement::constant(op.f, Scalar(1)));

    // cache of iterated derivatives: dX[k][p] = D^p X_k
    std::vector<std::vector<LocalizedElement>> dX{{res.X[0]}};
    int max_p = 0;
    for (const auto& [lp, a] : op.entries) max_p = std::max(max_p, lp.second);

    for (int k1 = 1; k1 <= depth; ++k1) {
        const int k = k1 - 1;
        LocalizedElement rhs(op.f);
        for (const auto& [lp, a] : op.entries) {
            const auto [l, p] = lp;
            const int src = k - l;
            if (src < 0 || a.is_zero()) continue;
            auto& chain = dX[static_cast<size_t>(src)];
            while (static_cast<int>(chain.size()) <= p)
                chain.push_back(chain.back().derivative());
            rhs += a * chain[static_cast<size_t>(p)];
        }
        IntegrationOutcome io = integrate(rhs);
        if (io.obstruction) {
            res.obstruction = Obstruction{k1, io.obstruction->first, io.obstruction->second};
            return res;
        }
        LocalizedElement xk = std::move(io.result);
        if (vanish_at)
            xk -= LocalizedElement::constant(op.f, xk.eval(*vanish_at));
        res.X.push_back(xk);
        dX.push_back({std::move(xk)});
    }
    return res;
}

LocalizedElement to_localized(const FContextPtr& ctx, const RationalFunction& rf) {
    if (rf.is_zero()) return LocalizedElement(ctx);
    Poly den = rf.den();
    int e = 0;
    while (den.degree() > 0) {
        auto [q, r] = Poly::divmod(den, ctx->f);
        if (!r.is_zero())
            throw std::domain_error("denominator is not a power of the localizer: " + rf.den().str());
        den = std::move(q);
        ++e;
    }
    // den is now a nonzero constant
    const Scalar c_inv = den.coeff(0).inverse();
    return LocalizedElement::from_poly(ctx, c_inv * rf.num(), e);
}

} // namespace localpn
