#include "jsr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "jsr/io.hpp"
#include "jsr/oracle.hpp"
#include "jsr/relax.hpp"

namespace jsr {

namespace {

std::string fixed(double v, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(parse_entry(item));
        } catch (const ParseError& e) {
            throw std::invalid_argument(std::string(what) + ": " + e.what());
        }
    }
    return values;
}

struct RunOptions {
    std::string problem;
    std::string algorithm = "lr";
    double lambda = 0.3;
    std::string lambda_seq;
    double lambda_lo = 0.05;
    double lambda_hi = 0.95;
    std::string averaging = "arith";
    std::size_t nodes = 3000;
    double tol = 1e-3;
    std::size_t max_iters = 10000;
    std::string e = "1,0";
    bool force = false;
    bool unsafe_direct = false;
    std::string svg;
    int svg_size = 512;
    std::string trace;
    std::string norm_out;
    std::string initial_norm;
};

struct OracleOptions {
    std::string problem;
    std::size_t min_depth = 1;
    std::size_t max_depth = 8;
    std::size_t nodes = 3000;
    std::uint64_t budget = kDefaultProductBudget;
};

RelaxConfig make_config(const RunOptions& opt) {
    RelaxConfig cfg;
    cfg.algorithm = opt.algorithm == "mr" ? Algorithm::mr : Algorithm::lr;
    cfg.lambda = opt.lambda;
    if (!opt.lambda_seq.empty()) cfg.lambda_sequence = parse_list(opt.lambda_seq, "--lambda-seq");
    cfg.lambda_lo = opt.lambda_lo;
    cfg.lambda_hi = opt.lambda_hi;
    cfg.averaging = opt.averaging == "geom"   ? Averaging::geometric
                    : opt.averaging == "harm" ? Averaging::harmonic
                                              : Averaging::arithmetic;
    cfg.node_count = opt.nodes;
    cfg.tol = opt.tol;
    cfg.max_iters = opt.max_iters;
    const auto e = parse_list(opt.e, "--e");
    if (e.size() != 2) throw std::invalid_argument("--e expects two comma-separated numbers");
    cfg.e = {e[0], e[1]};
    cfg.force = opt.force;
    cfg.unsafe_direct = opt.unsafe_direct;
    if (!opt.initial_norm.empty()) cfg.initial_norm = parse_norm(read_file(opt.initial_norm));
    cfg.validate();
    return cfg;
}

void print_label(const ProblemFile& problem, std::ostream& out) {
    if (problem.label) out << "label: " << *problem.label << "\n";
    out << "family: " << problem.matrices.size() << " matrices of size " << problem.matrices.front().dim() << "x"
        << problem.matrices.front().dim() << "\n";
}

int do_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    const ProblemFile problem = read_problem(opt.problem);
    const MatrixSet family = problem.family();
    const RelaxConfig cfg = make_config(opt);
    if (cfg.unsafe_direct) err << "warning: --unsafe-direct (lambda = 0) carries no convergence guarantee\n";

    const RelaxResult result = run(family, cfg);
    print_label(problem, out);
    out << "algorithm: " << to_string(cfg.algorithm) << "\n";
    out << "status: " << to_string(result.status) << "\n";

    if (!opt.trace.empty()) {
        std::ostringstream buf;
        write_trace(result, buf);
        write_file(opt.trace, buf.str());
    }
    if (result.status == Status::not_irreducible_rejected) {
        err << "error: the family has a common invariant line (reducible); pass --force to iterate anyway\n";
        return kExitRejected;
    }
    out << "steps: " << result.steps() << "\n";
    out << "bracket: [" << fixed(result.rho_lo) << ", " << fixed(result.rho_hi) << "]\n";
    out << "rho: " << fixed(result.rho_mid) << " +- " << fixed(0.5 * (result.rho_hi - result.rho_lo), 3) << "\n";

    if (!opt.norm_out.empty()) {
        std::ostringstream buf;
        write_norm(result.norm, buf);
        write_file(opt.norm_out, buf.str());
    }
    if (!opt.svg.empty()) write_file(opt.svg, render_unit_sphere(result.norm, opt.svg_size));

    if (result.status == Status::max_iters_reached) {
        err << "warning: bracket half-width " << fixed(0.5 * (result.rho_hi - result.rho_lo), 3)
            << " still above tolerance after " << result.steps() << " steps\n";
        return kExitNotConverged;
    }
    return kExitOk;
}

int do_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.min_depth == 0 || opt.min_depth > opt.max_depth) {
        err << "error: need 1 <= --min-depth <= --max-depth\n";
        return kExitUsage;
    }
    const ProblemFile problem = read_problem(opt.problem);
    const MatrixSet family = problem.family();
    // fail before spending time on the shallower depths
    if (const auto count = product_count(family.size(), opt.max_depth); count > opt.budget)
        throw EnumerationBudgetError(count, opt.budget);
    const AngularNorm nm = euclidean(opt.nodes);
    print_label(problem, out);
    out << "n,lower,upper,trace\n";
    double best_lower = 0.0;
    double best_upper = std::numeric_limits<double>::infinity();
    for (std::size_t n = opt.min_depth; n <= opt.max_depth; ++n) {
        const ProductBounds b = product_bounds(family, n, nm, opt.budget);
        const double tr = trace_estimate(family, n, opt.budget);
        out << n << "," << fixed(b.lower) << "," << fixed(b.upper) << "," << fixed(tr) << "\n";
        best_lower = std::max(best_lower, b.lower);
        best_upper = std::min(best_upper, b.upper);
    }
    const bool sandwich = best_lower <= best_upper + 1e-9;
    out << "bracket: [" << fixed(best_lower) << ", " << fixed(best_upper) << "]\n";
    out << "sandwich: " << (sandwich ? "ok" : "VIOLATED") << "\n";
    if (!sandwich) err << "warning: a lower bound exceeds an upper bound; check the grid resolution\n";
    return kExitOk;
}

int do_check(const std::string& path, std::ostream& out) {
    const ProblemFile problem = read_problem(path);
    const MatrixSet family = problem.family();
    print_label(problem, out);
    for (std::size_t i = 0; i < family.size(); ++i) {
        out << "A" << i + 1 << ": spectral radius " << fixed(spectral_radius(family[i]));
        if (is_scalar(family[i])) {
            out << ", scalar (every line invariant)\n";
            continue;
        }
        const auto dirs = eigen_directions(family[i]);
        if (dirs.empty()) {
            out << ", no real eigendirection\n";
            continue;
        }
        out << ", eigendirections (deg):";
        for (double d : dirs) out << " " << fixed(d * 180.0 / std::acos(-1.0), 8);
        out << "\n";
    }
    const bool irreducible = is_irreducible(family);
    out << "irreducible: " << (irreducible ? "yes" : "no") << "\n";
    return irreducible ? kExitOk : kExitRejected;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Joint spectral radius and Barabanov norms of 2x2 matrix families", "jsr-relax"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run_cmd = app.add_subcommand("run", "Iterate the LR or MR relaxation scheme on a problem file");
    run_cmd->add_option("problem", run_opt.problem, "Problem file (JSON)")->required();
    run_cmd->add_option("--algorithm", run_opt.algorithm, "Relaxation scheme")
        ->check(CLI::IsMember({"lr", "mr"}))
        ->capture_default_str();
    run_cmd->add_option("--lambda", run_opt.lambda, "Constant LR weight lambda_n")->capture_default_str();
    run_cmd->add_option("--lambda-seq", run_opt.lambda_seq, "Comma-separated LR weights, cycled");
    run_cmd->add_option("--lambda-lo", run_opt.lambda_lo, "Lower bound for lambda_n")->capture_default_str();
    run_cmd->add_option("--lambda-hi", run_opt.lambda_hi, "Upper bound for lambda_n")->capture_default_str();
    run_cmd->add_option("--averaging", run_opt.averaging, "MR averaging function")
        ->check(CLI::IsMember({"arith", "geom", "harm"}))
        ->capture_default_str();
    run_cmd->add_option("--nodes", run_opt.nodes, "Angular grid size N (even, >= 8)")->capture_default_str();
    run_cmd->add_option("--tol", run_opt.tol, "Target half-width of the bracket")->capture_default_str();
    run_cmd->add_option("--max-iters", run_opt.max_iters, "Iteration cap")->capture_default_str();
    run_cmd->add_option("--e", run_opt.e, "Normalization vector x,y (along a grid node)")->capture_default_str();
    run_cmd->add_flag("--force", run_opt.force, "Iterate even if the family is reducible");
    run_cmd->add_flag("--unsafe-direct", run_opt.unsafe_direct, "LR with lambda = 0 (may not converge)");
    run_cmd->add_option("--svg", run_opt.svg, "Write the unit sphere of the final norm as SVG");
    run_cmd->add_option("--svg-size", run_opt.svg_size, "SVG width and height in pixels")->capture_default_str();
    run_cmd->add_option("--trace", run_opt.trace, "Write the iteration trace CSV");
    run_cmd->add_option("--norm-out", run_opt.norm_out, "Write the final norm profile CSV");
    run_cmd->add_option("--initial-norm", run_opt.initial_norm, "Start from a norm profile CSV instead of Euclidean");

    OracleOptions oracle_opt;
    auto* oracle_cmd = app.add_subcommand("oracle", "Product-enumeration bounds and trace estimates");
    oracle_cmd->add_option("problem", oracle_opt.problem, "Problem file (JSON)")->required();
    oracle_cmd->add_option("--min-depth", oracle_opt.min_depth, "Smallest product length")->capture_default_str();
    oracle_cmd->add_option("--max-depth", oracle_opt.max_depth, "Largest product length")->capture_default_str();
    oracle_cmd->add_option("--nodes", oracle_opt.nodes, "Grid size for operator norms")->capture_default_str();
    oracle_cmd->add_option("--budget", oracle_opt.budget, "Maximum number of products per depth")
        ->capture_default_str();

    std::string check_problem;
    auto* check_cmd = app.add_subcommand("check", "Report spectral radii and irreducibility");
    check_cmd->add_option("problem", check_problem, "Problem file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run_cmd->parsed()) return do_run(run_opt, out, err);
        if (oracle_cmd->parsed()) return do_oracle(oracle_opt, out, err);
        if (check_cmd->parsed()) return do_check(check_problem, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace jsr
