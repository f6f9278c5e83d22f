// ctrace: rational homotopy and K-theory profiles of unitary groups of
// unital continuous trace C*-algebras, with exact rational arithmetic.

#include "ctrace/errors.hpp"
#include "ctrace/report.hpp"
#include "ctrace/spacefile.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <unistd.h>

namespace {

using namespace ctrace;

struct CommonOpts {
    std::vector<std::string> builtin_tokens;
    std::string file;
    int n = 1;
    std::string dd = "trivial";
    bool json_mode = false;
    std::string output;
};

void add_space_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--builtin", opts.builtin_tokens,
                    "builtin space: point | sphere K | cp M | product(a,b)")
        ->expected(-1);
    cmd->add_option("--file", opts.file, "space description JSON file");
    cmd->add_flag("--json", opts.json_mode, "emit canonical JSON instead of tables");
    cmd->add_option("--output", opts.output, "write the report to a file");
}

void add_algebra_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("-n,--n", opts.n, "matrix size of the bundle fibers (default 1)");
    cmd->add_option("--dd", opts.dd, "Dixmier-Douady class: trivial | nonzero")
        ->check(CLI::IsMember({"trivial", "nonzero"}));
}

spaces::CohomologyProfile resolve_space(const CommonOpts& opts) {
    const bool have_builtin = !opts.builtin_tokens.empty();
    const bool have_file = !opts.file.empty();
    if (have_builtin == have_file)
        throw ParseError("exactly one of --builtin or --file is required");
    if (have_file)
        return spaces::load_space_file(opts.file);
    std::string expr;
    for (const auto& tok : opts.builtin_tokens) {
        if (!expr.empty())
            expr += " ";
        expr += tok;
    }
    return spaces::builtin_space(expr);
}

unitary::AlgebraSpec resolve_spec(const CommonOpts& opts) {
    return unitary::AlgebraSpec(resolve_space(opts), opts.n, opts.dd == "trivial");
}

void emit(const cli::Report& report, const CommonOpts& opts) {
    if (!opts.output.empty()) {
        std::ofstream out(opts.output);
        if (!out)
            throw InputError("cannot write to \"" + opts.output + "\"");
        out << (opts.json_mode ? cli::render_json(report.to_json()) : report.to_text(false));
        return;
    }
    const char* color_env = std::getenv("CTRACE_COLOR");
    const bool color = isatty(fileno(stdout)) && !(color_env && std::string(color_env) == "0");
    std::cout << (opts.json_mode ? cli::render_json(report.to_json()) : report.to_text(color));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational homotopy and K-theory of unitary groups of continuous trace algebras"};
    app.require_subcommand(1);

    CommonOpts cohomology_opts, pi_opts, split_opts, ktheory_opts, sigma_opts, endo_opts;
    std::string endo_file;

    auto* cmd_cohomology =
        app.add_subcommand("cohomology", "Betti numbers and basis labels of the space");
    add_space_options(cmd_cohomology, cohomology_opts);
    cmd_cohomology->callback([&] {
        cli::Report report(resolve_space(cohomology_opts));
        emit(report, cohomology_opts);
    });

    auto* cmd_pi = app.add_subcommand("pi", "bigraded rational homotopy of the unitary group");
    add_space_options(cmd_pi, pi_opts);
    add_algebra_options(cmd_pi, pi_opts);
    cmd_pi->callback([&] {
        const auto spec = resolve_spec(pi_opts);
        cli::Report report(spec.space);
        report.n = spec.n;
        report.pi = unitary::rational_homotopy(spec);
        report.notes = {cli::kNoteDegreeZero};
        emit(report, pi_opts);
    });

    auto* cmd_split =
        app.add_subcommand("split", "based/free split along the evaluation fibration");
    add_space_options(cmd_split, split_opts);
    add_algebra_options(cmd_split, split_opts);
    cmd_split->callback([&] {
        const auto spec = resolve_spec(split_opts);
        cli::Report report(spec.space);
        report.n = spec.n;
        report.pi = unitary::rational_homotopy(spec);
        report.split = unitary::based_free_split(spec);
        report.notes = {cli::kNoteDegreeZero};
        emit(report, split_opts);
    });

    auto* cmd_ktheory = app.add_subcommand("ktheory", "Z+-graded rational K-theory profile");
    add_space_options(cmd_ktheory, ktheory_opts);
    add_algebra_options(cmd_ktheory, ktheory_opts);
    cmd_ktheory->callback([&] {
        const auto spec = resolve_spec(ktheory_opts);
        cli::Report report(spec.space);
        report.n = spec.n;
        report.k = ktheory::rational_k_theory(spec);
        report.notes = {cli::kNoteDdBranches};
        emit(report, ktheory_opts);
    });

    auto* cmd_sigma =
        app.add_subcommand("sigma", "stabilization map image in Z+-graded K-theory");
    add_space_options(cmd_sigma, sigma_opts);
    add_algebra_options(cmd_sigma, sigma_opts);
    cmd_sigma->callback([&] {
        const auto spec = resolve_spec(sigma_opts);
        cli::Report report(spec.space);
        report.n = spec.n;
        report.pi = unitary::rational_homotopy(spec);
        report.k = ktheory::rational_k_theory(spec);
        report.sigma = ktheory::sigma_image(*report.pi, *report.k);
        report.notes = {cli::kNoteDegreeZero, cli::kNoteSigmaCandidates, cli::kNoteDdBranches};
        emit(report, sigma_opts);
    });

    auto* cmd_endo =
        app.add_subcommand("endo", "action induced on the homotopy basis by a cohomology map");
    add_space_options(cmd_endo, endo_opts);
    add_algebra_options(cmd_endo, endo_opts);
    cmd_endo->add_option("endo_file", endo_file, "endomorphism JSON file")->required();
    cmd_endo->callback([&] {
        const auto spec = resolve_spec(endo_opts);
        const auto f = spaces::load_endomorphism_file(endo_file, spec.space);
        cli::Report report(spec.space);
        report.n = spec.n;
        report.pi = unitary::rational_homotopy(spec);
        report.endo = ktheory::induced_endomorphism(f, spec);
        emit(report, endo_opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedCaseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
