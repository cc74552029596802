#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "liftlocal/problem_io.hpp"

namespace {

using namespace liftlocal;

struct CommonArgs {
    std::string input;
    std::string mode_override;
};

Mode effective_mode(const LiftProblem& problem, const std::string& override_name) {
    if (override_name.empty()) return problem.mode;
    if (override_name == "local") return Mode::Local;
    if (override_name == "graded") return Mode::Graded;
    throw ValidationError("mode override must be 'local' or 'graded'");
}

SelfMapOnA require_map(const LiftProblem& problem, Mode mode, BasisCache* cache) {
    if (!problem.map) {
        throw ValidationError("this subcommand needs a 'map:' declaration in the problem file");
    }
    Presentation pres = Presentation::make(problem.context, problem.ideal, mode, cache);
    return SelfMapOnA(std::move(pres), *problem.map, cache);
}

int run_gb(const CommonArgs& args) {
    const LiftProblem problem = load_problem(args.input);
    const Mode mode = effective_mode(problem, args.mode_override);
    const ComputedBasis basis = compute_basis(problem.ideal, mode);
    std::cout << "basis (" << mode_name(mode) << ", " << basis.elements.size()
              << " elements):\n";
    for (const Polynomial& p : basis.elements) {
        std::cout << "  " << p.to_string() << "\n";
    }
    return 0;
}

int run_dim(const CommonArgs& args) {
    const LiftProblem problem = load_problem(args.input);
    const Mode mode = effective_mode(problem, args.mode_override);
    BasisCache cache;
    // Validates the presentation invariants before reporting.
    Presentation pres = Presentation::make(problem.context, problem.ideal, mode, &cache);
    const DimensionReport report = krull_dimension(problem.ideal, mode, &cache);
    std::string vars;
    for (const int v : report.witness) {
        if (!vars.empty()) vars += ", ";
        vars += problem.context->name(static_cast<std::size_t>(v));
    }
    (void)pres;
    std::cout << "dimension: " << report.dimension << ", witness: {" << vars << "}\n";
    return 0;
}

int run_lift(const CommonArgs& args, const SearchOptions& opts, const std::string& out_path) {
    const LiftProblem problem = load_problem(args.input);
    const Mode mode = effective_mode(problem, args.mode_override);
    BasisCache cache;
    const SelfMapOnA map = require_map(problem, mode, &cache);
    const LiftCertificate cert = lift_map(map, opts, &cache);
    const VerificationReport report = verify_lift(map, cert.lift, &cache);
    const std::string text = render_certificate(cert, report, mode);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ValidationError("cannot write certificate to '" + out_path + "'");
        out << text;
    }
    return 0;
}

int run_verify(const CommonArgs& args, const std::string& lift_path) {
    const LiftProblem problem = load_problem(args.input);
    const Mode mode = effective_mode(problem, args.mode_override);
    BasisCache cache;
    const SelfMapOnA map = require_map(problem, mode, &cache);
    std::ifstream in(lift_path);
    if (!in) throw ParseError("cannot open certificate file '" + lift_path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const VariableMap psi = parse_certificate_lift(text, problem.context);
    const VerificationReport report = verify_lift(map, psi, &cache);
    std::cout << render_checks(report);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lifts finite self maps of complete local rings to the ambient "
                 "power-series ring"};
    app.require_subcommand(1);

    CommonArgs common;
    SearchOptions opts;
    std::string out_path;
    std::string lift_path;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", common.input, "problem file")->required();
        cmd->add_option("--mode", common.mode_override, "override the file's mode");
    };

    CLI::App* gb = app.add_subcommand("gb", "print the ideal's basis for the mode");
    add_common(gb);
    CLI::App* dim = app.add_subcommand("dim", "print the quotient's dimension and witness");
    add_common(dim);
    CLI::App* lift = app.add_subcommand("lift", "lift the map and emit a certificate");
    add_common(lift);
    lift->add_option("--seed", opts.seed, "search seed");
    lift->add_option("--max-attempts", opts.max_attempts, "per-step candidate budget");
    lift->add_option("--coeff-bound", opts.coeff_bound, "coefficient sweep bound over Q");
    lift->add_option("--adjuster-degree-cap", opts.adjuster_degree_cap,
                     "monomial multiplier degree cap");
    lift->add_option("--out", out_path, "certificate output path");
    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate against a problem");
    add_common(verify);
    verify->add_option("--lift", lift_path, "certificate file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gb->parsed()) return run_gb(common);
        if (dim->parsed()) return run_dim(common);
        if (lift->parsed()) return run_lift(common, opts, out_path);
        if (verify->parsed()) return run_verify(common, lift_path);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const SearchExhaustedError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const IllDefinedMapError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 4;
    } catch (const NotFiniteError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 4;
    } catch (const LiftError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 70;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 70;
    }
}
