#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "localpn/admissibility.hpp"
#include "localpn/asymptotics.hpp"
#include "localpn/cli.hpp"
#include "localpn/fitting.hpp"
#include "localpn/ifunction.hpp"
#include "localpn/lode.hpp"
#include "localpn/report.hpp"

namespace py = pybind11;
using namespace localpn;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list l;
            for (const auto& x : j) l.append(json_to_py(x));
            return l;
        }
        case Json::value_t::object: {
            py::dict d;
            for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
            return d;
        }
        default: return py::none();
    }
}

std::vector<std::string> series_strings(const QSeries& s) {
    std::vector<std::string> out;
    for (const Scalar& c : s.coeffs()) out.push_back(c.str());
    return out;
}

// weight configuration handle carrying the operations the CLI exposes
struct WeightConfig {
    LambdaConfig cfg;

    explicit WeightConfig(int n, const std::string& spec) : cfg(parse_lambda(n, spec)) {}

    std::vector<std::string> l_series_py(int i, int order) const {
        return series_strings(L_series(cfg, i, order));
    }
    std::vector<std::string> mu_series_py(int i, int order) const {
        return series_strings(mu_series(cfg, i, order));
    }
    py::dict asymptotics(int i, int depth, int order) const {
        const AsymptoticData d = solve_asymptotics(cfg, i, depth, order);
        py::dict out;
        out["i"] = d.i;
        out["L"] = series_strings(d.L);
        out["mu"] = series_strings(d.mu);
        py::list rs;
        for (const QSeries& r : d.R) rs.append(series_strings(r));
        out["R"] = rs;
        return out;
    }
    bool verify_pf(int order, int zmax) const {
        for (int i = 0; i <= cfg.n(); ++i)
            if (!pf_apply(cfg, i, ifun_series(cfg, i, order, zmax)).is_zero()) return false;
        return true;
    }
    py::dict verify_asymptotic_py(int i, int order, int depth) const {
        const AsymptoticData d = solve_asymptotics(cfg, i, depth, order);
        return py::dict(json_to_py(verify_report_to_json(verify_asymptotic(cfg, i, d, order))));
    }
    py::dict derive_ode() const { return py::dict(json_to_py(lode_to_json(derive_L_ode(cfg)))); }
    py::dict conjecture(int depth) const {
        return py::dict(json_to_py(conjecture_report_to_json(conjecture_report(cfg, depth))));
    }
    py::dict admissible(int depth) const {
        const LOdeSystem sys = derive_L_ode(cfg);
        LevelOperator op;
        op.level = cfg.n() - 1;
        op.f = make_localizer(sys.f);
        for (const auto& [lp, a] : sys.A) op.entries.emplace(lp, to_localized(op.f, a));
        const ConditionReport cond =
            op.f->deg == 1 ? check_deg1_conditions(op) : check_deg2_conditions(op);
        const RecursionResult rec = run_recursion(op, depth);
        py::dict out;
        out["conditions"] = json_to_py(condition_report_to_json(cond));
        out["obstructed"] = rec.obstruction.has_value();
        out["ok"] = cond.pass && !rec.obstruction;
        return out;
    }
    std::string str() const { return cfg.str(); }
};

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact asymptotics of equivariant I-functions of local P^n";

    py::register_exception<DegeneracyError>(m, "DegeneracyError");
    py::register_exception<UsageError>(m, "UsageError");

    py::class_<WeightConfig>(m, "Config")
        .def(py::init<int, const std::string&>(), py::arg("n"), py::arg("weights"),
             "weights: 'a0,a1,...' (rationals), 'zeta:m', or 'spl2-canonical'")
        .def_property_readonly("n", [](const WeightConfig& c) { return c.cfg.n(); })
        .def_property_readonly("spl2",
                               [](const WeightConfig& c) { return c.cfg.specialization_spl2(); })
        .def("l_series", &WeightConfig::l_series_py, py::arg("i"), py::arg("order"),
             "coefficients of the root series L_i(q) as exact strings")
        .def("mu_series", &WeightConfig::mu_series_py, py::arg("i"), py::arg("order"))
        .def("asymptotics", &WeightConfig::asymptotics, py::arg("i"), py::arg("depth"),
             py::arg("order"), "mu, L and R_0..R_depth as coefficient strings")
        .def("verify_pf", &WeightConfig::verify_pf, py::arg("order") = 20, py::arg("zmax") = 3,
             "Picard-Fuchs annihilation of the restricted I-function, all fixed points")
        .def("verify_asymptotic", &WeightConfig::verify_asymptotic_py, py::arg("i"), py::arg("order"),
             py::arg("depth"))
        .def("derive_ode", &WeightConfig::derive_ode,
             "the normalized L-coordinate table as factored rational-function strings")
        .def("conjecture_report", &WeightConfig::conjecture, py::arg("depth"))
        .def("admissible", &WeightConfig::admissible, py::arg("depth") = 8)
        .def("__repr__", [](const WeightConfig& c) { return "Config" + c.str(); });

    m.def(
        "mirror_map", [](int order) { return series_strings(mirror_map_p1(order)); },
        py::arg("order") = 10,
        "coefficients of the local P^1 mirror map Q(q), starting at q^0");

    m.def(
        "run",
        [](const std::string& subcommand, const py::kwargs& kw) {
            RunConfig rc;
            rc.subcommand = subcommand;
            if (kw.contains("n")) rc.n = py::cast<int>(kw["n"]);
            if (kw.contains("weights")) rc.lambda_spec = py::cast<std::string>(kw["weights"]);
            if (kw.contains("order")) rc.order = py::cast<int>(kw["order"]);
            if (kw.contains("depth")) rc.depth = py::cast<int>(kw["depth"]);
            if (kw.contains("zmax")) rc.zmax = py::cast<int>(kw["zmax"]);
            if (kw.contains("i")) rc.index = py::cast<int>(kw["i"]);
            if (kw.contains("jobs")) rc.jobs = py::cast<int>(kw["jobs"]);
            if (kw.contains("cache_dir")) rc.cache_dir = py::cast<std::string>(kw["cache_dir"]);
            const RunOutcome out = dispatch(rc);
            py::dict d;
            d["exit_code"] = out.exit_code;
            d["report"] = json_to_py(out.report);
            return d;
        },
        py::arg("subcommand"), "run a CLI subcommand in-process; returns {'exit_code', 'report'}");
}
