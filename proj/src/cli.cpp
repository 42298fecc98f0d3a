#include "localpn/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "localpn/asymptotics.hpp"
#include "localpn/ifunction.hpp"
#include "localpn/lode.hpp"

namespace localpn {

void RunConfig::validate() const {
    if (n < 1) throw UsageError("--n must be >= 1");
    if (order < 1) throw UsageError("--order must be >= 1");
    if (depth < 0) throw UsageError("--k must be >= 0");
    if (zmax < 0) throw UsageError("--zmax must be >= 0");
    if (jobs < 1) throw UsageError("--jobs must be >= 1");
    if (format != "json" && format != "text") throw UsageError("--format must be json or text");
}

LambdaConfig parse_lambda(int n, const std::string& spec) {
    if (spec == "spl2-canonical") {
        if (n != 2) throw UsageError("spl2-canonical is an n = 2 configuration");
        return LambdaConfig::spl2_canonical();
    }
    if (spec.rfind("zeta:", 0) == 0) {
        const int m = std::stoi(spec.substr(5));
        if (m != n + 1)
            throw UsageError("zeta:" + std::to_string(m) + " needs n = " + std::to_string(m - 1));
        return LambdaConfig::roots_of_unity(n);
    }
    std::vector<Scalar> weights;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        weights.push_back(Scalar(rat_from_string(tok)));
    if (static_cast<int>(weights.size()) != n + 1)
        throw UsageError("expected " + std::to_string(n + 1) + " weights, got " +
                         std::to_string(weights.size()));
    return LambdaConfig(n, std::move(weights));
}

namespace {

std::vector<int> indices(const LambdaConfig& cfg, int index) {
    std::vector<int> is;
    if (index >= 0) {
        if (index > cfg.n()) throw UsageError("--i out of range");
        is.push_back(index);
    } else {
        for (int i = 0; i <= cfg.n(); ++i) is.push_back(i);
    }
    return is;
}

// fan a pure per-i computation out over the configured width
template <class F>
auto fan_out(const std::vector<int>& is, int jobs, F&& f) {
    using R = decltype(f(0));
    std::vector<R> results(is.size());
    if (jobs <= 1 || is.size() <= 1) {
        for (size_t t = 0; t < is.size(); ++t) results[t] = f(is[t]);
        return results;
    }
    std::vector<std::future<R>> futs;
    for (size_t t = 0; t < is.size(); ++t)
        futs.push_back(std::async(std::launch::async, f, is[t]));
    for (size_t t = 0; t < is.size(); ++t) results[t] = futs[t].get();
    return results;
}

std::string cache_key(const RunConfig& rc, const LambdaConfig& cfg, const std::string& what) {
    std::ostringstream os;
    os << kConventionTag << "|" << what << "|n=" << cfg.n() << "|lambda=" << cfg.str()
       << "|N=" << rc.order << "|K=" << rc.depth << "|zmax=" << rc.zmax;
    return os.str();
}

CacheStore open_cache(const RunConfig& rc) {
    std::string dir = rc.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("LOCALPN_CACHE_DIR")) dir = env;
    }
    return dir.empty() ? CacheStore() : CacheStore(dir);
}

Json asymp_to_json(const AsymptoticData& d) {
    Json j;
    j["i"] = d.i;
    j["L"] = qseries_to_json(d.L);
    j["mu"] = qseries_to_json(d.mu);
    Json rs = Json::array();
    for (const QSeries& r : d.R) rs.push_back(qseries_to_json(r));
    j["R"] = std::move(rs);
    return j;
}

AsymptoticData asymp_from_json(const Json& j, int trunc, int depth) {
    AsymptoticData d;
    d.i = j.at("i").get<int>();
    d.trunc = trunc;
    d.depth = depth;
    d.L = qseries_from_json(j.at("L"));
    d.mu = qseries_from_json(j.at("mu"));
    for (const Json& r : j.at("R")) d.R.push_back(qseries_from_json(r));
    return d;
}

// solve, consulting the cache when one is configured
AsymptoticData cached_asymptotics(const RunConfig& rc, const CacheStore& cache,
                                  const LambdaConfig& cfg, int i) {
    const std::string key = cache_key(rc, cfg, "asymp|i=" + std::to_string(i));
    if (auto hit = cache.load(key)) {
        try {
            return asymp_from_json(*hit, rc.order, rc.depth);
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring malformed cache value (" << e.what() << ")\n";
        }
    }
    AsymptoticData d = solve_asymptotics(cfg, i, rc.depth, rc.order);
    cache.store(key, asymp_to_json(d));
    return d;
}

Json run_ifun(const RunConfig& rc, const LambdaConfig& cfg) {
    Json j;
    j["check"] = "ifun";
    j["n"] = cfg.n();
    j["lambda"] = cfg.str();
    j["order"] = rc.order;
    j["zmax"] = rc.zmax;
    Json items = Json::array();
    const auto is = indices(cfg, rc.index);
    auto rows = fan_out(is, rc.jobs, [&](int i) {
        return qzseries_to_json(ifun_series(cfg, i, rc.order, rc.zmax));
    });
    for (size_t t = 0; t < is.size(); ++t) {
        Json item;
        item["i"] = is[t];
        item["series"] = std::move(rows[t]);
        items.push_back(std::move(item));
    }
    j["restrictions"] = std::move(items);
    j["status"] = "pass";
    return j;
}

Json run_verify_pf(const RunConfig& rc, const LambdaConfig& cfg, bool& ok) {
    Json j;
    j["check"] = "pf-annihilation";
    j["n"] = cfg.n();
    j["lambda"] = cfg.str();
    j["order"] = rc.order;
    j["zmax"] = rc.zmax;
    const auto is = indices(cfg, rc.index);
    auto reports = fan_out(is, rc.jobs, [&](int i) {
        const QZSeries residual = pf_apply(cfg, i, ifun_series(cfg, i, rc.order, rc.zmax));
        VerifyReport r;
        r.check = "pf-annihilation";
        r.mismatch = QZSeries::first_mismatch(residual, QZSeries(rc.order, rc.zmax));
        r.pass = !r.mismatch.has_value();
        std::ostringstream os;
        os << "rows 0.." << rc.order << ", z-window [-d, " << rc.zmax << "]";
        r.window = os.str();
        return r;
    });
    Json cases = Json::array();
    bool all = true;
    for (size_t t = 0; t < is.size(); ++t) {
        Json c = verify_report_to_json(reports[t]);
        c["i"] = is[t];
        all = all && reports[t].pass;
        cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    j["status"] = all ? "pass" : "fail";
    ok = all;
    return j;
}

Json run_asymp(const RunConfig& rc, const LambdaConfig& cfg, const CacheStore& cache, bool& ok) {
    Json j;
    j["check"] = "asymp";
    j["n"] = cfg.n();
    j["lambda"] = cfg.str();
    j["order"] = rc.order;
    j["depth"] = rc.depth;
    const auto is = indices(cfg, rc.index);
    auto datas = fan_out(is, rc.jobs,
                         [&](int i) { return cached_asymptotics(rc, cache, cfg, i); });

    // cross-check against the L-coordinate table where one is defined
    std::string table_note;
    std::optional<LOdeSystem> sys;
    if (cfg.n() <= 2) {
        try {
            sys = derive_L_ode(cfg);
        } catch (const DegeneracyError& e) {
            table_note = std::string("skipped (singular: ") + e.what() + ")";
        }
    } else {
        table_note = "not derived for n >= 3";
    }

    bool all = true;
    Json items = Json::array();
    for (size_t t = 0; t < is.size(); ++t) {
        Json item = asymp_to_json(datas[t]);
        if (sys) {
            const bool good = lode_annihilates(*sys, cfg, is[t], datas[t].R, rc.order);
            item["ode_cross_check"] = good ? "pass" : "fail";
            all = all && good;
        } else {
            item["ode_cross_check"] = table_note;
        }
        items.push_back(std::move(item));
    }
    j["data"] = std::move(items);
    j["status"] = all ? "pass" : "fail";
    ok = all;
    return j;
}

Json run_verify_asymp(const RunConfig& rc, const LambdaConfig& cfg, const CacheStore& cache,
                      bool& ok) {
    Json j;
    j["check"] = "asymptotic-form";
    j["n"] = cfg.n();
    j["lambda"] = cfg.str();
    j["order"] = rc.order;
    j["depth"] = rc.depth;
    if (rc.depth < rc.order)
        throw UsageError("verify-asymp needs --k >= --order so every row is fully determined");
    const auto is = indices(cfg, rc.index);
    auto reports = fan_out(is, rc.jobs, [&](int i) {
        AsymptoticData d = cached_asymptotics(rc, cache, cfg, i);
        return verify_asymptotic(cfg, i, d, rc.order);
    });
    Json cases = Json::array();
    bool all = true;
    for (size_t t = 0; t < is.size(); ++t) {
        Json c = verify_report_to_json(reports[t]);
        c["i"] = is[t];
        all = all && reports[t].pass;
        cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    j["status"] = all ? "pass" : "fail";
    ok = all;
    return j;
}

Json run_derive_ode(const LambdaConfig& cfg) {
    Json j = lode_to_json(derive_L_ode(cfg));
    j["check"] = "derive-ode";
    j["lambda"] = cfg.str();
    j["status"] = "pass";
    return j;
}

Json run_fit(const RunConfig& rc, const LambdaConfig& cfg, bool& ok) {
    ConjectureReport rep = conjecture_report(cfg, rc.depth, 10, rc.jobs);
    ok = rep.all_pass;
    Json j = conjecture_report_to_json(rep);
    j["check"] = "conjecture-fit";
    return j;
}

Json run_admissible(const RunConfig& rc, const LambdaConfig& cfg, bool& ok) {
    Json j;
    j["check"] = "admissibility";
    LevelOperator op;
    if (!rc.operator_json.empty()) {
        std::ifstream in(rc.operator_json);
        if (!in) throw UsageError("cannot open " + rc.operator_json);
        op = level_operator_from_json(Json::parse(in));
        j["source"] = rc.operator_json;
    } else {
        const LOdeSystem sys = derive_L_ode(cfg);
        op.level = cfg.n() - 1; // one fewer back-steps than factors
        op.f = make_localizer(sys.f);
        for (const auto& [lp, a] : sys.A)
            op.entries.emplace(lp, to_localized(op.f, a));
        j["lambda"] = cfg.str();
        j["f"] = sys.f.str();
    }
    const ConditionReport cond =
        op.f->deg == 1 ? check_deg1_conditions(op) : check_deg2_conditions(op);
    j["conditions"] = condition_report_to_json(cond);

    const RecursionResult rec = run_recursion(op, rc.depth);
    Json rj;
    rj["depth"] = rc.depth;
    if (rec.obstruction) {
        Json oj;
        oj["k"] = rec.obstruction->k;
        oj["exponent"] = rec.obstruction->exponent;
        oj["term"] = rec.obstruction->term;
        rj["obstruction"] = std::move(oj);
    } else {
        rj["obstruction"] = nullptr;
        Json xs = Json::array();
        for (const auto& x : rec.X) xs.push_back(x.str());
        rj["solutions"] = std::move(xs);
    }
    j["recursion"] = std::move(rj);

    ok = cond.pass && !rec.obstruction;
    j["status"] = ok ? "pass" : "fail";
    return j;
}

Json run_mirror_map(const RunConfig& rc) {
    const QSeries Q = mirror_map_p1(rc.order);
    Json j;
    j["check"] = "mirror-map";
    j["order"] = rc.order;
    j["Q"] = qseries_to_json(Q);
    Json coeffs = Json::array();
    for (int d = 1; d <= Q.trunc(); ++d) coeffs.push_back(scalar_to_json(Q.at(d)));
    j["coefficients_q1_on"] = std::move(coeffs);
    j["status"] = "pass";
    return j;
}

} // namespace

RunOutcome dispatch(const RunConfig& rc) {
    rc.validate();
    RunOutcome out;
    const CacheStore cache = open_cache(rc);

    bool ok = true;
    if (rc.subcommand == "mirror-map") {
        out.report = run_mirror_map(rc);
    } else {
        const LambdaConfig cfg = parse_lambda(rc.n, rc.lambda_spec);
        if (rc.subcommand == "ifun")
            out.report = run_ifun(rc, cfg);
        else if (rc.subcommand == "verify-pf")
            out.report = run_verify_pf(rc, cfg, ok);
        else if (rc.subcommand == "asymp")
            out.report = run_asymp(rc, cfg, cache, ok);
        else if (rc.subcommand == "verify-asymp")
            out.report = run_verify_asymp(rc, cfg, cache, ok);
        else if (rc.subcommand == "derive-ode")
            out.report = run_derive_ode(cfg);
        else if (rc.subcommand == "fit")
            out.report = run_fit(rc, cfg, ok);
        else if (rc.subcommand == "admissible")
            out.report = run_admissible(rc, cfg, ok);
        else
            throw UsageError("unknown subcommand: " + rc.subcommand);
    }
    out.exit_code = ok ? kExitPass : kExitCheckFailed;
    return out;
}

namespace {

void render_text(const Json& j, std::ostream& os, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_text(v, os, depth + 1);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_text(v, os, depth + 1);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace

std::string render_report(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(1) + "\n";
    std::ostringstream os;
    const std::string status = report.value("status", "");
    if (status == "pass")
        os << "PASS\n";
    else if (status == "fail")
        os << "FAIL\n";
    render_text(report, os, 0);
    return os.str();
}

} // namespace localpn
