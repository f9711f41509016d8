// oraclelab command line: run the verification catalog, simulate the search
// algorithm, print operator spectra and diagram data.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "oraclelab/checks.hpp"
#include "oraclelab/function_case.hpp"

using namespace oraclelab;

namespace {

int cmd_verify(const std::string& suite, int n_cap, int k_max, double tol_eq, double tol_ineq,
               std::uint64_t seed, double mem_gib, const std::string& out_path,
               const std::string& csv_path) {
    VerifyOptions options;
    options.suite = suite;
    options.n_cap = n_cap;
    options.k_max = k_max;
    options.tol.eq = tol_eq;
    options.tol.ineq = tol_ineq;
    options.seed = seed;
    MemoryBudget::set_cap(static_cast<std::size_t>(mem_gib * (1ull << 30)));

    CheckContext ctx(options);
    const Report report = run_suite(ctx);

    for (const auto& c : report.checks) {
        std::cout << (c.status == CheckStatus::Pass          ? "PASS "
                      : c.status == CheckStatus::Fail        ? "FAIL "
                                                             : "N/A  ")
                  << c.id << " " << c.params.dump() << "  (" << c.runtime_ms << " ms)\n";
    }
    std::cout << "summary: " << report.passed() << " pass, " << report.failed() << " fail, "
              << report.not_applicable() << " not-applicable\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << report.to_json().dump(2) << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        out << report.to_csv();
    }
    return report.exit_code();
}

int cmd_grover(int n, int queries) {
    const double formula = grover_success_formula(n, queries);
    std::cout << "closed form: sin^2((1+" << queries << ") asin(1/sqrt(" << n
              << "))) = " << formula << "\n";
    if (!is_power_of_two(n)) {
        std::cout << "simulation: skipped (the uncompute step needs a power-of-two N)\n";
        return 0;
    }
    const auto spec = grover_spec(n, queries);
    FunctionSpace space(OracleMode::Permutation, n, n);
    const auto trace = simulate(space, spec);
    const double success = success_probability(space, spec, trace.psi.back());
    std::cout << "simulated success on the uniform permutation oracle: " << success << "\n";
    return 0;
}

int cmd_spectrum(int n, int k) {
    PermSpaceRep rep(n);
    std::cout << "Phi_" << k << " spectrum at N=" << n << " (eigenvalue per lambda):\n";
    for (const auto& e : phi_spectrum(rep, k)) {
        std::cout << "  (" << e.lambda.to_string() << "): " << e.computed;
        if (e.formula_applies)
            std::cout << "   closed form " << e.formula;
        else
            std::cout << "   (closed form needs k < N/2)";
        std::cout << "\n";
    }
    return 0;
}

int cmd_dims(const std::string& partition) {
    const YoungDiagram rho = YoungDiagram::parse(partition);
    std::cout << "partition: (" << rho.to_string() << "), boxes: " << rho.box_count() << "\n";
    std::cout << "transpose: (" << transpose(rho).to_string() << ")\n";
    if (!rho.empty()) {
        std::cout << "hook lengths:\n";
        for (int i = 1; i <= rho.row_count(); ++i) {
            std::cout << "  ";
            for (int j = 1; j <= rho.row(i); ++j) std::cout << hook_length(rho, i, j) << " ";
            std::cout << "\n";
        }
    }
    std::cout << "dim: " << dim_specht(rho) << "\n";
    std::cout << "h1:  " << h1(rho) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for oracle-subspace decompositions"};
    app.require_subcommand(1);

    std::string suite = "all", out_path, csv_path;
    int n_cap = 6, k_max = 2;
    double tol_eq = 1e-8, tol_ineq = 1e-9, mem_gib = 2.0;
    std::uint64_t seed = 20240811;
    auto* verify = app.add_subcommand("verify", "run the check catalog");
    verify->add_option("--suite", suite, "all|perm|func|rep")->default_val("all");
    verify->add_option("--n", n_cap, "cap on oracle-space sizes")->default_val(6);
    verify->add_option("--kmax", k_max, "cap on the subspace level k")->default_val(2);
    verify->add_option("--tol", tol_eq, "relative tolerance for equalities");
    verify->add_option("--tol-ineq", tol_ineq, "absolute slack for inequalities");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--mem-gib", mem_gib, "memory cap in GiB")->default_val(2.0);
    verify->add_option("--out", out_path, "write the JSON report here");
    verify->add_option("--csv", csv_path, "write an (id,value,bound) CSV here");

    int grover_n = 4, grover_queries = 2;
    auto* grover = app.add_subcommand("grover", "search simulation and closed form");
    grover->add_option("--n", grover_n, "permutation size")->default_val(4);
    grover->add_option("--queries", grover_queries, "oracle calls (even)")->default_val(2);

    int spec_n = 4, spec_k = 1;
    auto* spectrum = app.add_subcommand("spectrum", "spectrum of the assignment Gram operator");
    spectrum->add_option("--n", spec_n, "permutation size")->default_val(4);
    spectrum->add_option("--k", spec_k, "assignment weight")->default_val(1);

    std::string partition = "6,3,2";
    auto* dims = app.add_subcommand("dims", "diagram combinatorics");
    dims->add_option("--partition", partition, "comma-separated rows, e.g. \"6,3,2\"");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(suite, n_cap, k_max, tol_eq, tol_ineq, seed, mem_gib, out_path,
                              csv_path);
        if (grover->parsed()) return cmd_grover(grover_n, grover_queries);
        if (spectrum->parsed()) return cmd_spectrum(spec_n, spec_k);
        if (dims->parsed()) return cmd_dims(partition);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
