#include "localpn/report.hpp"

namespace localpn {

Json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return rat_to_string(s.rat());
    Json j;
    j["m"] = s.conductor();
    Json coeffs = Json::array();
    for (const Rat& c : s.coeffs()) coeffs.push_back(rat_to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar(rat_from_string(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
        throw UsageError("bad scalar JSON: " + j.dump());
    std::vector<Rat> coeffs;
    for (const Json& c : j.at("coeffs")) coeffs.push_back(rat_from_string(c.get<std::string>()));
    return Scalar::cyclotomic(j.at("m").get<unsigned>(), std::move(coeffs));
}

Json qseries_to_json(const QSeries& s) {
    Json j;
    j["var"] = "q";
    j["trunc"] = s.trunc();
    Json coeffs = Json::array();
    for (const Scalar& c : s.coeffs()) coeffs.push_back(scalar_to_json(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

QSeries qseries_from_json(const Json& j) {
    std::vector<Scalar> coeffs;
    for (const Json& c : j.at("coeffs")) coeffs.push_back(scalar_from_json(c));
    QSeries s{std::move(coeffs)};
    if (j.contains("trunc") && j.at("trunc").get<int>() != s.trunc())
        throw UsageError("QSeries JSON: trunc does not match coefficient count");
    return s;
}

Json qzseries_to_json(const QZSeries& s) {
    Json j;
    j["trunc"] = s.trunc();
    j["zmax"] = s.zmax();
    Json rows = Json::array();
    for (int d = 0; d <= s.trunc(); ++d) {
        Json row;
        row["d"] = d;
        row["zmin"] = -d;
        Json coeffs = Json::array();
        for (int e = -d; e <= s.zmax(); ++e) coeffs.push_back(scalar_to_json(s.row(d).coeff(e)));
        row["coeffs"] = std::move(coeffs);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json verify_report_to_json(const VerifyReport& r) {
    Json j;
    j["check"] = r.check;
    j["status"] = r.pass ? "pass" : "fail";
    if (r.mismatch) {
        Json m;
        m["d"] = r.mismatch->d;
        m["z"] = r.mismatch->z;
        m["lhs"] = scalar_to_json(r.mismatch->lhs);
        m["rhs"] = scalar_to_json(r.mismatch->rhs);
        j["first_mismatch"] = std::move(m);
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["window"] = r.window;
    return j;
}

Json gn_element_to_json(const GnElement& e) {
    Json j;
    j["m"] = e.half();
    j["base"] = e.base() == GnBase::FPoly ? "f" : "linear-factor";
    Json terms = Json::array();
    for (const auto& t : e.terms()) {
        if (t.c.is_zero()) continue;
        Json tj;
        tj["j"] = t.j;
        tj["e"] = t.e;
        tj["c"] = scalar_to_json(t.c);
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json conjecture_report_to_json(const ConjectureReport& r) {
    Json j;
    j["n"] = r.n;
    j["lambda"] = r.lambda;
    j["depth"] = r.depth;
    j["status"] = r.all_pass ? "pass" : "fail";
    Json results = Json::array();
    for (const auto& c : r.cases) {
        Json cj;
        cj["i"] = c.i;
        cj["k"] = c.k;
        cj["status"] = to_string(c.status);
        cj["windows_doubled"] = c.windows_doubled;
        cj["element"] = c.element ? gn_element_to_json(*c.element) : Json(nullptr);
        results.push_back(std::move(cj));
    }
    j["results"] = std::move(results);
    return j;
}

Json condition_report_to_json(const ConditionReport& r) {
    Json j;
    j["status"] = r.pass ? "pass" : "fail";
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json ej;
        ej["l"] = e.l;
        ej["p"] = e.p;
        ej["zero"] = e.zero;
        ej["ord"] = e.ord ? Json(*e.ord) : Json(nullptr);
        ej["threshold"] = e.threshold;
        ej["status"] = e.pass ? "pass" : "fail";
        if (!e.note.empty()) ej["note"] = e.note;
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string ratfunc_factored_str(const RationalFunction& rf, const Poly& f) {
    if (rf.is_polynomial()) return rf.num().str();
    Poly den = rf.den();
    int k = 0;
    while (den.degree() > 0) {
        auto [q, r] = Poly::divmod(den, f);
        if (!r.is_zero()) break;
        den = std::move(q);
        ++k;
    }
    if (den.degree() == 0 && k > 0) {
        // rf = num / (c f^k) = (num/c) * f^-k
        const Scalar c_inv = den.coeff(0).inverse();
        return "(" + (c_inv * rf.num()).str() + ")*(" + f.str() + ")^-" + std::to_string(k);
    }
    return "(" + rf.num().str() + ")/(" + rf.den().str() + ")";
}

Json lode_to_json(const LOdeSystem& sys) {
    Json j;
    j["level"] = sys.level;
    j["f"] = sys.f.str();
    j["normalizer"] = sys.normalizer.str();
    Json entries;
    for (const auto& [lp, a] : sys.A) {
        const std::string key = "A" + std::to_string(lp.first) + std::to_string(lp.second);
        entries[key] = ratfunc_factored_str(a, sys.f);
    }
    j["entries"] = std::move(entries);
    return j;
}

namespace {

Json poly_to_json(const Poly& p) {
    Json a = Json::array();
    for (int k = 0; k <= p.degree(); ++k) a.push_back(scalar_to_json(p.coeff(k)));
    return a;
}

Poly poly_from_json(const Json& j) {
    std::vector<Scalar> c;
    for (const Json& x : j) c.push_back(scalar_from_json(x));
    return Poly(std::move(c));
}

} // namespace

Json level_operator_to_json(const LevelOperator& op) {
    Json j;
    j["level"] = op.level;
    j["f"] = poly_to_json(op.f->f);
    Json entries = Json::array();
    for (const auto& [lp, a] : op.entries) {
        RationalFunction v = a.value();
        // present as num / f^fexp with fexp chosen from the element's order
        int fexp = a.is_zero() ? 0 : std::max(0, -a.order());
        Poly num = v.num();
        if (fexp > 0) {
            // num = v * f^fexp must be polynomial
            RationalFunction scaled = v * RationalFunction(op.f->f.pow(static_cast<unsigned>(fexp)));
            if (!scaled.is_polynomial())
                throw std::domain_error("operator entry is not supported on f-powers");
            num = scaled.num();
        }
        Json ej;
        ej["l"] = lp.first;
        ej["p"] = lp.second;
        ej["num"] = poly_to_json(num);
        ej["fexp"] = fexp;
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    return j;
}

LevelOperator level_operator_from_json(const Json& j) {
    LevelOperator op;
    op.level = j.at("level").get<int>();
    op.f = make_localizer(poly_from_json(j.at("f")));
    for (const Json& ej : j.at("entries")) {
        const int l = ej.at("l").get<int>();
        const int p = ej.at("p").get<int>();
        if (l < 0 || l > op.level || p < 0) throw UsageError("operator entry indices out of range");
        op.entries.emplace(std::make_pair(l, p),
                           LocalizedElement::from_poly(op.f, poly_from_json(ej.at("num")),
                                                       ej.at("fexp").get<int>()));
    }
    return op;
}

} // namespace localpn
