#include "archcop/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "archcop/copula.hpp"
#include "archcop/diagnostics.hpp"
#include "archcop/io.hpp"
#include "archcop/kernels.hpp"
#include "archcop/numeric.hpp"
#include "archcop/sampling.hpp"

namespace archcop::cli {

namespace {

struct FamilyArgs {
    std::string family;
    std::optional<double> alpha;
    std::optional<double> theta;

    void attach(CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--family", family, "f1|f2|f3|gumbel|independence");
        if (required) opt->required();
        cmd->add_option("--alpha", alpha, "dependence parameter of f1, f2, f3");
        cmd->add_option("--theta", theta, "parameter of the gumbel reference family");
    }

    Generator make() const {
        const FamilyId id = parse_family(family);
        double value = 1.0;
        if (id == FamilyId::GumbelRef) {
            if (!theta) throw DomainError("--theta is required for family gumbel");
            value = *theta;
        } else if (id != FamilyId::Independence) {
            if (!alpha) throw DomainError("--alpha is required for family " + family);
            value = *alpha;
        }
        return Generator(id, DependenceParam{value});
    }
};

// Buffers the artifact and writes it to --out, or to `out` when no path is given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    file << text;
    if (!file.flush()) throw std::ios_base::failure("failed writing '" + path + "'");
}

std::vector<double> axis_points(int n, bool boundary) {
    std::vector<double> axis;
    if (boundary) {
        for (int i = 0; i <= n; ++i) axis.push_back(static_cast<double>(i) / n);
        axis.back() = 1.0;
    } else {
        for (int i = 0; i < n; ++i) axis.push_back((i + 0.5) / n);
    }
    return axis;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Archimedean copula toolkit: evaluate, audit, estimate Kendall tau, sample"};
    app.require_subcommand(1);

    // eval
    FamilyArgs eval_family;
    double eval_u = 0.0, eval_v = 0.0;
    auto* eval = app.add_subcommand("eval", "C(u,v) and, at interior points, c(u,v)");
    eval_family.attach(eval);
    eval->add_option("--u", eval_u)->required();
    eval->add_option("--v", eval_v)->required();

    // grid
    FamilyArgs grid_family;
    std::string grid_what;
    int grid_n = 50;
    bool grid_boundary = false;
    std::string grid_out;
    auto* grid = app.add_subcommand("grid", "CSV lattice of the generator, CDF or density");
    grid_family.attach(grid);
    grid->add_option("--what", grid_what, "cdf|pdf|generator")
        ->required()
        ->check(CLI::IsMember({"cdf", "pdf", "generator"}));
    grid->add_option("--grid-n", grid_n, "cells per axis (>= 2)")->check(CLI::Range(2, 100000));
    grid->add_flag("--boundary", grid_boundary, "lattice i/n including the edges");
    grid->add_option("--out", grid_out, "output path (default: stdout)");

    // check
    FamilyArgs check_family;
    int check_n = 100;
    auto* check = app.add_subcommand("check", "validity audit as one JSON line");
    check_family.attach(check);
    check->add_option("--grid-n", check_n, "cells per axis (>= 3)")->check(CLI::Range(3, 100000));

    // tau
    FamilyArgs tau_family;
    std::string tau_method;
    double tau_tol = 1e-9;
    std::optional<std::size_t> tau_n;
    std::optional<std::uint64_t> tau_seed;
    std::string tau_sampler = "conditional";
    int tau_blocks = 20;
    std::string tau_in;
    auto* tau = app.add_subcommand("tau", "Kendall tau as one JSON line");
    tau_family.attach(tau, false);
    tau->add_option("--method", tau_method, "closed|quadrature|mc")
        ->required()
        ->check(CLI::IsMember({"closed", "quadrature", "mc"}));
    tau->add_option("--tol", tau_tol, "absolute tolerance on tau (quadrature)");
    tau->add_option("--n", tau_n, "sample size (mc)");
    tau->add_option("--seed", tau_seed, "sample seed (mc)");
    tau->add_option("--sampler", tau_sampler, "conditional|frailty (mc)")
        ->check(CLI::IsMember({"conditional", "frailty"}));
    tau->add_option("--blocks", tau_blocks, "blocks for the standard error (mc)");
    tau->add_option("--in", tau_in, "read u,v pairs from a CSV file, '-' for stdin (mc)");

    // sample
    FamilyArgs sample_family;
    std::size_t sample_n = 0;
    std::uint64_t sample_seed = 0;
    std::string sample_method = "conditional";
    std::string sample_out;
    auto* smp = app.add_subcommand("sample", "CSV batch of copula draws");
    sample_family.attach(smp);
    smp->add_option("--n", sample_n)->required()->check(CLI::PositiveNumber);
    smp->add_option("--seed", sample_seed)->required();
    smp->add_option("--method", sample_method, "conditional|frailty")
        ->check(CLI::IsMember({"conditional", "frailty"}));
    smp->add_option("--out", sample_out, "output path (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (eval->parsed()) {
            const Generator gen = eval_family.make();
            const UnitPoint pt(eval_u, eval_v);
            out << "C=" << format_double(cdf(gen, pt)) << '\n';
            if (pt.interior()) out << "c=" << format_double(density(gen, pt)) << '\n';
            return kOk;
        }

        if (grid->parsed()) {
            const Generator gen = grid_family.make();
            std::ostringstream text;
            if (grid_what == "generator") {
                std::vector<double> z;
                if (grid_boundary) {
                    for (int i = 1; i < grid_n; ++i) z.push_back(static_cast<double>(i) / grid_n);
                } else {
                    z = axis_points(grid_n, false);
                }
                std::vector<double> phi;
                phi.reserve(z.size());
                for (double x : z) phi.push_back(gen.phi(x));
                write_curve_csv(text, z, phi);
            } else if (grid_what == "cdf") {
                const auto axis = axis_points(grid_n, grid_boundary);
                write_lattice_csv(text, axis, kernels::cdf_lattice(gen, axis));
            } else {
                if (grid_boundary) throw DomainError("the density grid must be interior");
                const auto axis = axis_points(grid_n, false);
                write_lattice_csv(text, axis, kernels::density_lattice(gen, axis));
            }
            emit(grid_out, text.str(), out);
            return kOk;
        }

        if (check->parsed()) {
            const auto report = grid_validity_report(check_family.make(), check_n);
            out << dump_line(to_json(report)) << '\n';
            return report.all_passed() ? kOk : kCheckFailed;
        }

        if (tau->parsed()) {
            TauEstimate est;
            if (tau_method == "mc") {
                std::vector<UnitPair> pairs;
                if (!tau_in.empty()) {
                    if (tau_in == "-") {
                        pairs = read_pairs_csv(in);
                    } else {
                        std::ifstream file(tau_in, std::ios::binary);
                        if (!file) throw std::ios_base::failure("cannot open '" + tau_in + "'");
                        pairs = read_pairs_csv(file);
                    }
                } else {
                    if (tau_family.family.empty()) {
                        throw DomainError("--family is required unless --in is given");
                    }
                    if (!tau_n || !tau_seed) throw DomainError("--method mc requires --n and --seed");
                    if (*tau_n > kMaxConcordancePairs) {
                        throw DomainError("--n exceeds the Monte Carlo cap of 50000");
                    }
                    pairs = sample(tau_family.make(), parse_sample_method(tau_sampler), *tau_n,
                                   *tau_seed)
                                .pairs;
                }
                est = kendall_tau_mc(pairs, tau_blocks);
            } else {
                if (tau_family.family.empty()) throw DomainError("--family is required");
                const Generator gen = tau_family.make();
                est = tau_method == "closed" ? kendall_tau_closed(gen)
                                             : kendall_tau_quadrature(gen, tau_tol);
            }
            out << dump_line(to_json(est)) << '\n';
            return kOk;
        }

        if (smp->parsed()) {
            const auto batch = sample(sample_family.make(), parse_sample_method(sample_method),
                                      sample_n, sample_seed);
            std::ostringstream text;
            write_pairs_csv(text, batch.pairs);
            emit(sample_out, text.str(), out);
            return kOk;
        }
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kConvergenceFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace archcop::cli
