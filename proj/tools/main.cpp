#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "localpn/cli.hpp"

using namespace localpn;

int main(int argc, char** argv) {
    CLI::App app{"localpn: exact asymptotics of equivariant I-functions of local P^n"};
    app.require_subcommand(1);

    RunConfig rc;
    auto add_common = [&](CLI::App* sub, bool lambda_opts = true) {
        sub->add_option("--order", rc.order, "series truncation order N")->capture_default_str();
        sub->add_option("--out", rc.out, "write the report to a file instead of stdout");
        sub->add_option("--format", rc.format, "json or text")->capture_default_str();
        sub->add_option("--cache-dir", rc.cache_dir,
                        "series cache directory (default: $LOCALPN_CACHE_DIR)");
        sub->add_option("--jobs", rc.jobs, "parallel width over fixed points")->capture_default_str();
        if (lambda_opts) {
            sub->add_option("--n", rc.n, "projective dimension n")->capture_default_str();
            sub->add_option("--lambda", rc.lambda_spec,
                            "weights: 'a0,a1,...', 'zeta:m', or 'spl2-canonical'")
                ->capture_default_str();
            sub->add_option("--i", rc.index, "fixed point index (default: all)");
        }
    };

    auto* ifun = app.add_subcommand("ifun", "restricted I-function rows as z-Laurent data");
    add_common(ifun);
    ifun->add_option("--zmax", rc.zmax, "top z-exponent kept per row")->capture_default_str();

    auto* vpf = app.add_subcommand("verify-pf", "check Picard-Fuchs annihilation of the I-function");
    add_common(vpf);
    vpf->add_option("--zmax", rc.zmax, "top z-exponent kept per row")->capture_default_str();

    auto* asym = app.add_subcommand("asymp", "solve for mu, L and R_0..R_K");
    add_common(asym);
    asym->add_option("--k", rc.depth, "depth K")->capture_default_str();

    auto* vas = app.add_subcommand("verify-asymp",
                                   "compare e^{mu/z} (sum R_k z^k) with the I-function rows");
    add_common(vas);
    vas->add_option("--k", rc.depth, "depth K (>= order)")->capture_default_str();

    auto* ode = app.add_subcommand("derive-ode", "emit the normalized L-coordinate ODE table");
    add_common(ode);

    auto* fit = app.add_subcommand("fit", "recover closed forms of R_k by exact fitting");
    add_common(fit);
    fit->add_option("--k", rc.depth, "largest k to fit")->capture_default_str();

    auto* adm = app.add_subcommand("admissible",
                                   "condition checks and the inductive executor for the derived "
                                   "(or a user-supplied) operator");
    add_common(adm);
    adm->add_option("--k", rc.depth, "recursion depth")->capture_default_str();
    adm->add_option("--operator-json", rc.operator_json, "operator table JSON file");

    auto* mm = app.add_subcommand("mirror-map", "mirror map Q(q) of local P^1");
    add_common(mm, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    rc.subcommand = app.get_subcommands().front()->get_name();
    try {
        const RunOutcome outcome = dispatch(rc);
        const std::string rendered = render_report(outcome.report, rc.format);
        if (rc.out.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream f(rc.out);
            if (!f) throw UsageError("cannot write " + rc.out);
            f << rendered;
        }
        return outcome.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegeneracyError& e) {
        std::cerr << "degenerate configuration: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
