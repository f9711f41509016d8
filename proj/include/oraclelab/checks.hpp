#pragma once

// The verification catalog: one entry per claim, each producing CheckResult
// records with the computed values, the bound, and a pass/fail/not-applicable
// status decided only from those values and the stated tolerances.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oraclelab/isotypic.hpp"
#include "oraclelab/simulate.hpp"
#include "oraclelab/subspaces.hpp"

namespace oraclelab {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, NotApplicable };
std::string to_string(CheckStatus status);

struct CheckResult {
    std::string id;
    Json params = Json::object();
    Json computed = Json::object();  // named reals (or small arrays)
    Json bound;                      // number, {"lo","hi"}, or null
    CheckStatus status = CheckStatus::Pass;
    double tolerance = 0.0;
    std::int64_t runtime_ms = 0;

    Json to_json(bool with_runtime = true) const;
};

struct VerifyOptions {
    std::string suite = "all";  // all | perm | func | rep
    int n_cap = 6;              // cap on oracle-space sizes (dense work)
    int k_max = 2;
    Tolerances tol;
    std::uint64_t seed = 20240811;
};

/// Shared projector/basis caches for one verification run.
class CheckContext {
public:
    explicit CheckContext(const VerifyOptions& options);

    const VerifyOptions& options() const { return options_; }
    PermSpaceRep& rep(int n);
    SubspaceBuilder& perm_spans(int n);
    SubspaceBuilder& func_spans(int n, int m);

    /// Permutation-case accumulated projectors by the irrep route.
    const Matrix& perm_projector(int n, SubspaceLabel label, int k);
    /// Function-case accumulated projectors by the explicit tensor route.
    const Matrix& func_projector(int n, int m, SubspaceLabel label, int k);

    /// Expensive scalar results shared between checks in one run.
    bool scalar(const std::string& key, double& out) const;
    void set_scalar(const std::string& key, double value);

private:
    VerifyOptions options_;
    std::map<int, std::unique_ptr<PermSpaceRep>> reps_;
    std::map<int, std::unique_ptr<SubspaceBuilder>> perm_spans_;
    std::map<std::pair<int, int>, std::unique_ptr<SubspaceBuilder>> func_spans_;
    std::map<std::string, Matrix> projectors_;
    std::map<std::string, double> scalars_;
};

/// All catalog ids, optionally restricted to one suite.
std::vector<std::string> catalog_ids(const std::string& suite = "all");

/// Run one catalog entry (all its parameter instances).
std::vector<CheckResult> run_check(const std::string& id, CheckContext& ctx);

struct Report {
    std::vector<CheckResult> checks;
    VerifyOptions options;

    int passed() const;
    int failed() const;
    int not_applicable() const;
    /// Exit code 0 iff nothing failed.
    int exit_code() const { return failed() == 0 ? 0 : 1; }
    Json to_json(bool with_runtime = true) const;
    std::string to_csv() const;  // id,value,bound per line
};

Report run_suite(CheckContext& ctx);

/// Theorem-level analysis of one simulated run.
struct TrajectoryReport {
    std::vector<double> alpha;     // amplitude on the high subspace after k calls
    double alpha_consistency = 0;  // max_k |alpha(phi_k) - alpha(psi_k)|
    double point1_residual = 0;    // max weight outside the reachable space
    double point2_violation = 0;   // max_k (value - bound); <= tol passes
    double point3_violation = 0;
    bool point2_applicable = false;
    bool point3_applicable = false;
    double success = 0;            // ||P psi_kappa||^2
};
TrajectoryReport analyze_trace(CheckContext& ctx, const FunctionSpace& space,
                               const AlgorithmSpec& spec, const SimulationTrace& trace);

}  // namespace oraclelab
