#include "oraclelab/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "oraclelab/function_case.hpp"

namespace oraclelab {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
};

double dbl(const BigInt& x) { return static_cast<double>(x); }

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

CheckStatus all_pass(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

Json interval(double lo, double hi) { return Json{{"lo", lo}, {"hi", hi}}; }

}  // namespace

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

Json CheckResult::to_json(bool with_runtime) const {
    Json j;
    j["id"] = id;
    j["params"] = params;
    j["computed"] = computed;
    j["bound"] = bound;
    j["status"] = oraclelab::to_string(status);
    j["tolerance"] = tolerance;
    if (with_runtime) j["runtimeMs"] = runtime_ms;
    return j;
}

CheckContext::CheckContext(const VerifyOptions& options) : options_(options) {}

PermSpaceRep& CheckContext::rep(int n) {
    auto it = reps_.find(n);
    if (it == reps_.end()) it = reps_.emplace(n, std::make_unique<PermSpaceRep>(n)).first;
    return *it->second;
}

SubspaceBuilder& CheckContext::perm_spans(int n) {
    auto it = perm_spans_.find(n);
    if (it == perm_spans_.end())
        it = perm_spans_.emplace(n, std::make_unique<SubspaceBuilder>(FunctionSpace::permutations(n)))
                 .first;
    return *it->second;
}

SubspaceBuilder& CheckContext::func_spans(int n, int m) {
    const auto key = std::make_pair(n, m);
    auto it = func_spans_.find(key);
    if (it == func_spans_.end())
        it = func_spans_
                 .emplace(key, std::make_unique<SubspaceBuilder>(FunctionSpace::functions(n, m)))
                 .first;
    return *it->second;
}

const Matrix& CheckContext::perm_projector(int n, SubspaceLabel label, int k) {
    const std::string key =
        "perm:" + std::to_string(n) + ":" + oraclelab::to_string(label) + ":" + std::to_string(k);
    auto it = projectors_.find(key);
    if (it == projectors_.end())
        it = projectors_.emplace(key, irrep_projector(rep(n), label, k)).first;
    return it->second;
}

const Matrix& CheckContext::func_projector(int n, int m, SubspaceLabel label, int k) {
    const std::string key = "func:" + std::to_string(n) + ":" + std::to_string(m) + ":" +
                            oraclelab::to_string(label) + ":" + std::to_string(k);
    auto it = projectors_.find(key);
    if (it != projectors_.end()) return it->second;

    const RegisterGeometry g = RegisterGeometry::make(n);
    Matrix p;
    switch (label) {
        case SubspaceLabel::A: {
            const Index dim = static_cast<Index>(std::pow(n, m));
            p = Matrix::Zero(dim, dim);
            for (int kk = 0; kk <= k; ++kk) p += level_projector(g, m, kk);
            break;
        }
        case SubspaceLabel::HbarLow: p = lemma52_projectors(g, m, k).low; break;
        case SubspaceLabel::HbarHigh: p = lemma52_projectors(g, m, k).high; break;
        case SubspaceLabel::HLow: p = pi_low_accumulated(g, m, k); break;
        case SubspaceLabel::HHigh: p = pi_high_accumulated(g, m, k); break;
        default: throw InvalidArgument("func_projector: unsupported label");
    }
    return projectors_.emplace(key, std::move(p)).first->second;
}

bool CheckContext::scalar(const std::string& key, double& out) const {
    auto it = scalars_.find(key);
    if (it == scalars_.end()) return false;
    out = it->second;
    return true;
}

void CheckContext::set_scalar(const std::string& key, double value) { scalars_[key] = value; }

// ---------------------------------------------------------------------------
// Trajectory analysis (Theorem-level inequalities for one simulated run)
// ---------------------------------------------------------------------------

TrajectoryReport analyze_trace(CheckContext& ctx, const FunctionSpace& space,
                               const AlgorithmSpec& spec, const SimulationTrace& trace) {
    const int kappa = spec.queries();
    const int n = spec.n;
    const Index dim_a = spec.dim_a();
    const bool perm = spec.mode == OracleMode::Permutation;

    TrajectoryReport rep;
    const Matrix id = Matrix::Identity(space.dim(), space.dim());

    for (int k = 0; k <= kappa; ++k) {
        const Matrix& high = perm ? ctx.perm_projector(n, SubspaceLabel::HHigh, k)
                                  : ctx.func_projector(n, spec.m, SubspaceLabel::HHigh, k);
        const Matrix& reach = perm ? ctx.perm_projector(n, SubspaceLabel::A, k)
                                   : ctx.func_projector(n, spec.m, SubspaceLabel::A, k);
        const double a_phi = amplitude_on(high, dim_a, trace.phi[k]);
        const double a_psi = amplitude_on(high, dim_a, trace.psi[k]);
        rep.alpha.push_back(a_phi);
        rep.alpha_consistency = std::max(rep.alpha_consistency, std::abs(a_phi - a_psi));

        const Matrix outside = id - reach;
        rep.point1_residual = std::max({rep.point1_residual,
                                        amplitude_on(outside, dim_a, trace.phi[k]),
                                        amplitude_on(outside, dim_a, trace.psi[k])});

        // Point 2: ||P psi_k|| <= alpha_k + 1/sqrt(N - 2k)   (1/sqrt(N) for functions)
        const bool p2_ok = perm ? n - 2 * k > 0 : true;
        if (p2_ok) {
            const double term = perm ? 1.0 / std::sqrt(static_cast<double>(n - 2 * k))
                                     : 1.0 / std::sqrt(static_cast<double>(n));
            const double value = std::sqrt(success_probability(space, spec, trace.psi[k]));
            rep.point2_applicable = true;
            rep.point2_violation = std::max(rep.point2_violation, value - (a_phi + term));
        }
        // Point 3: alpha_k - alpha_{k-1} <= 2 sqrt2/sqrt(N-4k)  (sqrt2/sqrt(N-1) for functions)
        if (k >= 1) {
            const bool p3_ok = perm ? n - 4 * k > 0 : true;
            if (p3_ok) {
                const double term = perm ? 2.0 * std::sqrt(2.0) / std::sqrt(static_cast<double>(n - 4 * k))
                                         : std::sqrt(2.0) / std::sqrt(static_cast<double>(n - 1));
                rep.point3_applicable = true;
                rep.point3_violation =
                    std::max(rep.point3_violation, rep.alpha[k] - rep.alpha[k - 1] - term);
            }
        }
    }
    rep.success = success_probability(space, spec, trace.psi[kappa]);
    return rep;
}

// ---------------------------------------------------------------------------
// Representation-theory checks (exact integers)
// ---------------------------------------------------------------------------

namespace {

std::vector<CheckResult> check_rep_dims(CheckContext& ctx) {
    Timer t;
    CheckResult r;
    r.id = "REP-dims";
    r.tolerance = 0;
    bool ok = true;

    const YoungDiagram fig = YoungDiagram::parse("6,3,2");
    ok = ok && dim_specht(fig) == 990;
    const std::vector<int> expected_hooks = {8, 7, 5, 3, 2, 1, 4, 3, 1, 2, 1};
    std::vector<int> hooks;
    for (int i = 1; i <= fig.row_count(); ++i)
        for (int j = 1; j <= fig.row(i); ++j) hooks.push_back(hook_length(fig, i, j));
    ok = ok && hooks == expected_hooks;

    int sumsq_failures = 0;
    for (int n = 0; n <= 12; ++n) {
        BigInt sum = 0;
        for (const auto& lam : enumerate_partitions(n)) {
            const BigInt d = dim_specht(lam);
            sum += d * d;
        }
        if (sum != factorial(n)) ++sumsq_failures;
        if (n >= 1 && dim_specht(YoungDiagram({n})) != 1) ++sumsq_failures;
    }
    ok = ok && sumsq_failures == 0;

    r.params = Json{{"nMax", 12}};
    r.computed = Json{{"dim632", 990},
                      {"hookMultisetMatches", hooks == expected_hooks},
                      {"sumOfSquaresFailures", sumsq_failures}};
    r.bound = nullptr;
    r.status = all_pass(ok);
    r.runtime_ms = t.ms();
    (void)ctx;
    return {r};
}

std::vector<CheckResult> check_rep_claim71(CheckContext& ctx) {
    Timer t;
    CheckResult r;
    r.id = "REP-claim71";
    int instances = 0, violations = 0;
    double worst_margin = 1e300;
    for (int n = 2; n <= 12; ++n)
        for (int k = 0; k <= 4; ++k) {
            if (n - 2 * k <= 0) continue;
            for (const auto& theta : enumerate_partitions(k)) {
                const auto tb = bar(theta, n, 0);
                const auto tbs = bar(theta, n, 1);
                if (!tb || !tbs) continue;
                ++instances;
                // d_thetabar / d_thetabar* <= N / (N - 2k), cross-multiplied exactly
                const BigInt lhs = dim_specht(*tb) * (n - 2 * k);
                const BigInt rhs = BigInt(n) * dim_specht(*tbs);
                if (lhs > rhs) ++violations;
                worst_margin = std::min(worst_margin, dbl(rhs - lhs));
            }
        }
    r.params = Json{{"nMax", 12}, {"kMax", 4}};
    r.computed = Json{{"instances", instances}, {"violations", violations}};
    r.bound = nullptr;
    r.tolerance = 0;
    r.status = all_pass(violations == 0 && instances > 0);
    r.runtime_ms = t.ms();
    (void)ctx;
    return {r};
}

std::vector<CheckResult> check_rep_claimA2(CheckContext& ctx) {
    Timer t;
    CheckResult r;
    r.id = "REP-claimA2";
    int instances = 0, violations = 0, equality_failures = 0;
    for (int n = 2; n <= 12; ++n)
        for (int k = 0; k <= 5; ++k) {
            if (n - 2 * k + 1 <= 0) continue;
            std::vector<int> hook_rows(k, 1);  // (1^k)
            const YoungDiagram column = k ? YoungDiagram(hook_rows) : YoungDiagram{};
            const YoungDiagram row = k ? YoungDiagram({k}) : YoungDiagram{};
            const auto cb = bar(column, n, 0);
            const auto rb = bar(row, n, 0);
            if (!cb || !rb) continue;
            const BigInt lower = h1(*cb);
            const BigInt upper = h1(*rb);
            if (lower != BigInt(n) * factorial(n - k - 1)) ++equality_failures;
            if (upper * (n - 2 * k + 1) != factorial(n - k + 1)) ++equality_failures;
            for (const auto& theta : enumerate_partitions(k)) {
                const auto tb = bar(theta, n, 0);
                if (!tb) continue;
                ++instances;
                const BigInt h = h1(*tb);
                if (h < lower || h > upper) ++violations;
            }
        }
    r.params = Json{{"nMax", 12}, {"kMax", 5}};
    r.computed = Json{{"instances", instances},
                      {"violations", violations},
                      {"equalityFailures", equality_failures}};
    r.bound = nullptr;
    r.tolerance = 0;
    r.status = all_pass(violations == 0 && equality_failures == 0 && instances > 0);
    r.runtime_ms = t.ms();
    (void)ctx;
    return {r};
}

std::vector<CheckResult> check_rep_claimA3(CheckContext& ctx) {
    Timer t;
    CheckResult r;
    r.id = "REP-claimA3";
    int instances = 0, violations = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto classes = conjugacy_classes(n);
        for (const auto& lam : enumerate_partitions(n)) {
            std::vector<BigInt> chi_lam;
            for (const auto& c : classes) chi_lam.push_back(character(lam, c));
            const YoungDiagram tail = lam.below_first_row();
            for (int k = 0; k <= n; ++k) {
                std::vector<BigInt> xk;
                for (const auto& c : classes) xk.push_back(perm_action_character(k, c));
                const BigInt lhs = class_inner_product(n, xk, chi_lam);
                const BigInt rhs =
                    binomial(k, tail.box_count()) *
                    (tail.box_count() ? dim_specht(tail) : BigInt(1));
                ++instances;
                if (lhs != rhs) ++violations;
            }
        }
    }
    r.params = Json{{"nMax", 6}};
    r.computed = Json{{"instances", instances}, {"violations", violations}};
    r.bound = nullptr;
    r.tolerance = 0;
    r.status = all_pass(violations == 0 && instances > 0);
    r.runtime_ms = t.ms();
    (void)ctx;
    return {r};
}

std::vector<CheckResult> check_rep_charorth(CheckContext& ctx) {
    Timer t;
    CheckResult r;
    r.id = "REP-charorth";
    int violations = 0, instances = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto classes = conjugacy_classes(n);
        const auto parts = enumerate_partitions(n);
        std::vector<std::vector<BigInt>> table;
        for (const auto& rho : parts) {
            std::vector<BigInt> row;
            for (const auto& c : classes) row.push_back(character(rho, c));
            table.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j) {
                ++instances;
                const BigInt ip = class_inner_product(n, table[i], table[j]);
                if (ip != (i == j ? 1 : 0)) ++violations;
            }
    }
    r.params = Json{{"nMax", 6}};
    r.computed = Json{{"instances", instances}, {"violations", violations}};
    r.bound = nullptr;
    r.tolerance = 0;
    r.status = all_pass(violations == 0);
    r.runtime_ms = t.ms();
    (void)ctx;
    return {r};
}

std::vector<CheckResult> check_schur(CheckContext& ctx) {
    Timer t;
    CheckResult r;
    r.id = "SCHUR-L41";
    r.tolerance = ctx.options().tol.eq;
    const int n = 4;
    const YoungDiagram lam = YoungDiagram::parse("2,1,1");
    const auto report = verify_schur_overlap(ctx.rep(n), lam, 20, r.tolerance,
                                             static_cast<unsigned>(ctx.options().seed));
    r.params = Json{{"N", n}, {"lambda", lam.to_string()}, {"trials", report.trials}};
    r.computed = Json{{"maxDeviation", report.max_deviation},
                      {"orthogonalCase", report.orthogonal_case},
                      {"selfCaseDeviation", report.self_case_deviation}};
    r.bound = r.tolerance;
    r.status = all_pass(report.pass);
    r.runtime_ms = t.ms();
    return {r};
}

// ---------------------------------------------------------------------------
// Subspace structure checks (permutation case)
// ---------------------------------------------------------------------------

std::vector<CheckResult> span_irrep_family(CheckContext& ctx, const std::string& id,
                                           const std::vector<SubspaceLabel>& labels) {
    std::vector<CheckResult> out;
    for (int n : {4, 5}) {
        if (n > ctx.options().n_cap) continue;
        for (SubspaceLabel label : labels)
            for (int k = 0; k <= ctx.options().k_max; ++k) {
                Timer t;
                CheckResult r;
                r.id = id;
                r.tolerance = ctx.options().tol.eq;
                const double gap = span_vs_irrep_gap(ctx.perm_spans(n), ctx.rep(n), label, k);
                const Index dim = ctx.perm_spans(n).span(label, k).dim();

                // dimension cross-checks from the bar-diagram decomposition
                BigInt expected = -1;
                if (label == SubspaceLabel::A) {
                    expected = 0;
                    for (int kk = 0; kk <= k; ++kk)
                        for (const auto& theta : enumerate_partitions(kk))
                            if (auto tb = bar(theta, n, 0))
                                expected += dim_specht(*tb) * dim_specht(*tb);
                } else if (label == SubspaceLabel::B) {
                    expected = 0;
                    for (int kk = 0; kk <= k - 1; ++kk)
                        for (const auto& theta : enumerate_partitions(kk))
                            if (auto tbs = bar(theta, n, 1))
                                expected += BigInt(n) * dim_specht(*tbs) * dim_specht(*tbs);
                }

                r.params = Json{{"N", n}, {"space", oraclelab::to_string(label)}, {"k", k}};
                r.computed = Json{{"gap", gap}, {"dim", dim}};
                if (expected >= 0) r.computed["dimExpected"] = dbl(expected);
                r.bound = r.tolerance;
                bool ok = gap <= r.tolerance;
                if (expected >= 0) ok = ok && BigInt(dim) == expected;
                r.status = all_pass(ok);
                r.runtime_ms = t.ms();
                out.push_back(std::move(r));
            }
    }
    return out;
}

std::vector<CheckResult> check_c61(CheckContext& ctx) {
    return span_irrep_family(ctx, "C61", {SubspaceLabel::A, SubspaceLabel::B});
}

std::vector<CheckResult> check_c62(CheckContext& ctx) {
    return span_irrep_family(ctx, "C62", {SubspaceLabel::HbarLow, SubspaceLabel::HbarHigh});
}

std::vector<CheckResult> check_alt(CheckContext& ctx) {
    std::vector<CheckResult> out;
    for (int n : {4, 5}) {
        if (n > ctx.options().n_cap) continue;
        for (int k = 0; k <= ctx.options().k_max; ++k) {
            Timer t;
            CheckResult r;
            r.id = "ALT";
            r.tolerance = ctx.options().tol.eq;
            const double gap = alt_space_gap(ctx.perm_spans(n), k);
            r.params = Json{{"N", n}, {"k", k}};
            r.computed = Json{{"gap", gap},
                              {"dim", ctx.perm_spans(n).span(SubspaceLabel::AAlt, k).dim()}};
            r.bound = r.tolerance;
            r.status = all_pass(gap <= r.tolerance);
            r.runtime_ms = t.ms();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckResult> check_phi(CheckContext& ctx) {
    std::vector<CheckResult> out;
    const double tol = ctx.options().tol.eq;

    // N=4, k=1: spectrum pinned exactly, plus the trace cross-check
    if (ctx.options().n_cap >= 4) {
        Timer t;
        CheckResult r;
        r.id = "PHI";
        r.tolerance = tol;
        auto spec = phi_spectrum(ctx.rep(4), 1);
        bool ok = true;
        double trace_sum = 0;
        Json evals = Json::object();
        for (const auto& e : spec) {
            const double expected = e.lambda == YoungDiagram({4})      ? 24.0
                                    : e.lambda == YoungDiagram({3, 1}) ? 8.0
                                                                       : 0.0;
            ok = ok && std::abs(e.computed - expected) <= tol;
            const double d = dbl(dim_specht(e.lambda));
            trace_sum += e.computed * d * d;
            evals[e.lambda.to_string()] = e.computed;
        }
        ok = ok && std::abs(trace_sum - 96.0) <= tol;
        r.params = Json{{"N", 4}, {"k", 1}};
        r.computed = Json{{"eigenvalues", evals}, {"trace", trace_sum}};
        r.bound = nullptr;
        r.status = all_pass(ok);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }

    // formula match across lambda for N in {4,5}, k <= 2 (and the k=0 case)
    for (int n : {4, 5}) {
        if (n > ctx.options().n_cap) continue;
        for (int k = 0; k <= std::min(2, ctx.options().k_max); ++k) {
            Timer t;
            CheckResult r;
            r.id = "PHI";
            r.tolerance = tol;
            auto spec = phi_spectrum(ctx.rep(n), k);
            double worst = 0;
            bool applies = true;
            for (const auto& e : spec) {
                applies = applies && e.formula_applies;
                worst = std::max(worst, std::abs(e.computed - e.formula) /
                                            std::max(1.0, std::abs(e.formula)));
            }
            // support containment: Phi_k lives inside A_k
            const Matrix phi = phi_operator(ctx.rep(n).space(), k);
            const Matrix& pa = ctx.perm_projector(n, SubspaceLabel::A, k);
            const double support_residual = spectral_norm_dense(Matrix(phi - pa * phi * pa));

            r.params = Json{{"N", n}, {"k", k}};
            r.computed = Json{{"maxFormulaError", worst}, {"supportResidual", support_residual}};
            r.bound = tol;
            r.status = applies ? all_pass(worst <= tol && support_residual <= 1e-6 * phi.norm())
                               : CheckStatus::NotApplicable;
            r.runtime_ms = t.ms();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckResult> check_ovl32(CheckContext& ctx) {
    std::vector<CheckResult> out;

    // function case: overlap is exactly sqrt((1-1/N)^k)
    {
        const int n = 4, m = 3;
        auto& spans = ctx.func_spans(n, m);
        for (int k = 0; k <= std::min(3, m); ++k) {
            Timer t;
            CheckResult r;
            r.id = "OVL32";
            r.tolerance = ctx.options().tol.ineq;
            Assignment alpha;
            alpha.mode = OracleMode::Function;
            for (int i = 0; i < k; ++i) alpha.pairs.push_back({i, i % n});
            const double value = overlap_on_fresh_slice(spans, k, alpha);
            const double expected = std::pow(1.0 - 1.0 / n, k / 2.0);
            r.params = Json{{"mode", "function"}, {"N", n}, {"M", m}, {"k", k}};
            r.computed = Json{{"overlap", value}, {"expected", expected}};
            r.bound = expected;
            r.status = all_pass(std::abs(value - expected) <= r.tolerance);
            r.runtime_ms = t.ms();
            out.push_back(std::move(r));
        }
    }

    // permutation case: overlap within the closed interval
    for (int n : {5, 6}) {
        if (n > ctx.options().n_cap) continue;
        for (int k = 1; k <= std::min(2, ctx.options().k_max); ++k) {
            Timer t;
            CheckResult r;
            r.id = "OVL32";
            r.tolerance = ctx.options().tol.ineq;
            Assignment alpha;
            alpha.mode = OracleMode::Permutation;
            for (int i = 0; i < k; ++i) alpha.pairs.push_back({i, i});  // includes y = 0
            const double value = overlap_on_fresh_slice(ctx.perm_spans(n), k, alpha);
            const double lo = std::sqrt(1.0 - static_cast<double>(k) / (n - k + 1));
            const double hi = std::sqrt(1.0 - static_cast<double>(k) / n);
            r.params = Json{{"mode", "permutation"}, {"N", n}, {"k", k}};
            r.computed = Json{{"overlap", value}};
            r.bound = interval(lo, hi);
            r.status = all_pass(value >= lo - r.tolerance && value <= hi + r.tolerance);
            r.runtime_ms = t.ms();
            out.push_back(std::move(r));
        }
    }

    // the exact per-component overlap at N=5
    if (ctx.options().n_cap >= 5) {
        for (int k = 1; k <= std::min(2, ctx.options().k_max); ++k) {
            for (const auto& theta : enumerate_partitions(k)) {
                if (!bar(theta, 5, 0)) continue;
                Timer t;
                CheckResult r;
                r.id = "OVL32";
                r.tolerance = ctx.options().tol.eq;
                Assignment alpha;
                alpha.mode = OracleMode::Permutation;
                for (int i = 0; i < k; ++i) alpha.pairs.push_back({i, i + 1});
                const BarOverlap o = overlap_on_bar_component(ctx.rep(5), theta, alpha);
                r.params = Json{{"mode", "permutation-component"},
                                {"N", 5},
                                {"theta", theta.to_string()},
                                {"k", k}};
                r.computed = Json{{"overlapSq", o.computed_sq}, {"formulaSq", o.formula_sq}};
                r.bound = o.formula_sq;
                r.status = all_pass(close(o.computed_sq, o.formula_sq, r.tolerance));
                r.runtime_ms = t.ms();
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::vector<CheckResult> check_ovl33(CheckContext& ctx) {
    std::vector<CheckResult> out;
    for (int n : {5, 6}) {
        if (n > ctx.options().n_cap) continue;
        for (int k = 1; k <= std::min(2, ctx.options().k_max); ++k) {
            Timer t;
            CheckResult r;
            r.id = "OVL33";
            r.tolerance = ctx.options().tol.ineq;
            Assignment alpha;
            alpha.mode = OracleMode::Permutation;
            for (int i = 0; i < k; ++i) alpha.pairs.push_back({i, i + 1});  // avoids y = 0
            const double value =
                overlap_on_span(ctx.perm_spans(n), SubspaceLabel::HbarLow, k, alpha);
            const double lo = std::sqrt(1.0 - static_cast<double>(k) / (n - k));
            const double hi = std::sqrt(1.0 - static_cast<double>(k) / (n - 1));
            r.params = Json{{"N", n}, {"k", k}};
            r.computed = Json{{"overlap", value}};
            r.bound = interval(lo, hi);
            r.status = all_pass(value >= lo - r.tolerance && value <= hi + r.tolerance);
            r.runtime_ms = t.ms();
            out.push_back(std::move(r));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Theorem 3.1 operator-level checks
// ---------------------------------------------------------------------------

std::vector<CheckResult> check_t1_operator(CheckContext& ctx) {
    std::vector<CheckResult> out;
    const int n = 4;
    if (ctx.options().n_cap < n) return out;
    Timer t;
    CheckResult r;
    r.id = "T1-operator";
    r.tolerance = ctx.options().tol.ineq;
    auto& rep = ctx.rep(n);
    const auto& space = rep.space();

    std::vector<YoungDiagram> thetas;
    for (int w = 0; w <= n; ++w)
        for (const auto& th : enumerate_partitions(w))
            if (bar(th, n, 0)) thetas.push_back(th);

    double worst = 0;
    int pairs = 0;
    for (const auto& theta : thetas)
        for (const auto& eta : thetas) {
            if (std::abs(theta.box_count() - eta.box_count()) <= 1) continue;
            const Matrix& p1 = rep.projector({*bar(theta, n, 0), GroupSide::Both, {}});
            const Matrix& p2 = rep.projector({*bar(eta, n, 0), GroupSide::Both, {}});
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    const Matrix prod =
                        p1 * Matrix(xi_diagonal(space, x, y).asDiagonal()) * p2;
                    worst = std::max(worst, spectral_norm_dense(prod));
                    ++pairs;
                }
        }
    r.params = Json{{"N", n}};
    r.computed = Json{{"instances", pairs}, {"maxNorm", worst}};
    r.bound = r.tolerance;
    r.status = all_pass(worst <= r.tolerance && pairs > 0);
    r.runtime_ms = t.ms();
    out.push_back(std::move(r));
    return out;
}

std::vector<CheckResult> check_t2_perm(CheckContext& ctx) {
    std::vector<CheckResult> out;
    for (int n : {5, 6}) {
        if (n > ctx.options().n_cap) continue;
        for (int k = 1; k <= std::min(2, ctx.options().k_max); ++k) {
            Timer t;
            CheckResult r;
            r.id = "T2-perm-exact";
            r.tolerance = ctx.options().tol.eq;
            const Matrix& low = ctx.perm_projector(n, SubspaceLabel::HLow, k);
            const Matrix xi = xi_diagonal(ctx.rep(n).space(), 0, 0).asDiagonal();
            const double norm = spectral_norm_dense(Matrix(xi * low));

            double formula = 0;
            for (int kk = 0; kk <= k; ++kk)
                for (const auto& theta : enumerate_partitions(kk)) {
                    const auto tb = bar(theta, n, 0);
                    const auto tbs = bar(theta, n, 1);
                    if (tb && tbs)
                        formula = std::max(formula, dbl(dim_specht(*tb)) / (n * dbl(dim_specht(*tbs))));
                }
            const double cap = 1.0 / (n - 2 * k);
            r.params = Json{{"N", n}, {"k", k}};
            r.computed = Json{{"normSq", norm * norm}, {"formula", formula}};
            r.bound = cap;
            r.status = all_pass(close(norm * norm, formula, r.tolerance) &&
                                norm * norm <= cap + ctx.options().tol.ineq);
            r.runtime_ms = t.ms();
            out.push_back(std::move(r));
        }
    }
    return out;
}

// the (eq:NormSimpl) operator on F ⊗ I ⊗ O with the mod-N oracle
double normsimpl_norm(CheckContext& ctx, int n, int k) {
    const std::string key = "normsimpl:" + std::to_string(n) + ":" + std::to_string(k);
    double cached;
    if (ctx.scalar(key, cached)) return cached;

    const Matrix& high = ctx.perm_projector(n, SubspaceLabel::HHigh, k);
    const Matrix& low = ctx.perm_projector(n, SubspaceLabel::HLow, k - 1);
    const auto& space = ctx.rep(n).space();
    const Index dim_f = space.dim();
    const Index dim_io = static_cast<Index>(n) * n;
    const Index dim = dim_f * dim_io;

    double value;
    if (dim <= kDenseNormLimit) {
        MemoryBudget::require(static_cast<std::size_t>(dim) * dim * sizeof(double) * 2,
                              "NormSimpl dense operator");
        Matrix b = Matrix::Zero(dim, dim);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const Matrix block =
                    high * Matrix(xi_diagonal(space, x, y).asDiagonal()) * low;
                for (int o = 0; o < n; ++o) {
                    const int o2 = (o + y) % n;
                    for (Index fc = 0; fc < dim_f; ++fc)
                        for (Index fr = 0; fr < dim_f; ++fr)
                            b(fr * dim_io + x * n + o2, fc * dim_io + x * n + o) += block(fr, fc);
                }
            }
        value = spectral_norm_dense(b);
    } else {
        // matrix-free: v -> (high ⊗ I) O (low ⊗ I) v, with F the slow index
        auto project = [&](const Matrix& p, Vector& v) {
            Eigen::Map<Matrix> mat(v.data(), dim_io, dim_f);
            mat = mat * p;  // projectors are symmetric
        };
        auto oracle = [&](Vector& v, bool inverse) {
            Vector tmp(static_cast<Index>(n));
            for (Index f = 0; f < dim_f; ++f)
                for (int x = 0; x < n; ++x) {
                    const int y = space.value_at(f, x);
                    double* base = v.data() + f * dim_io + x * n;
                    for (int o = 0; o < n; ++o) {
                        const int o2 = inverse ? (o - y % n + n) % n : (o + y) % n;
                        tmp[o2] = base[o];
                    }
                    std::copy(tmp.data(), tmp.data() + n, base);
                }
        };
        auto apply_b = [&](const Vector& in, Vector& outv) {
            outv = in;
            project(low, outv);
            oracle(outv, false);
            project(high, outv);
        };
        auto apply_bt = [&](const Vector& in, Vector& outv) {
            outv = in;
            project(high, outv);
            oracle(outv, true);
            project(low, outv);
        };
        value = spectral_norm_apply(dim, dim, apply_b, apply_bt, 1e-10);
    }
    ctx.set_scalar(key, value);
    return value;
}

double gb_rhs(CheckContext& ctx, int n, int k) {
    const std::string key = "gbrhs:" + std::to_string(n) + ":" + std::to_string(k);
    double cached;
    if (ctx.scalar(key, cached)) return cached;
    const Matrix& high = ctx.perm_projector(n, SubspaceLabel::HHigh, k);
    const Matrix& low = ctx.perm_projector(n, SubspaceLabel::HLow, k);
    const auto& space = ctx.rep(n).space();
    double sum_sq = 0;
    for (int y = 0; y < n; ++y) {
        const double nrm = spectral_norm_dense(
            Matrix(low * Matrix(xi_diagonal(space, 0, y).asDiagonal()) * high));
        sum_sq += nrm * nrm;
    }
    const double value = 2.0 * std::sqrt(sum_sq);
    ctx.set_scalar(key, value);
    return value;
}

std::vector<CheckResult> check_t3_operator(CheckContext& ctx) {
    std::vector<CheckResult> out;
    for (int n : {5, 6}) {
        if (n > ctx.options().n_cap) continue;
        for (int k = 1; k <= ctx.options().k_max; ++k) {
            Timer t;
            CheckResult r;
            r.id = "T3-perm-operator";
            r.tolerance = ctx.options().tol.ineq;
            const double value = normsimpl_norm(ctx, n, k);
            const Index dim = ctx.rep(n).space().dim() * n * n;
            r.params = Json{{"N", n}, {"k", k}, {"dim", dim}, {"arith", "mod_add"}};
            r.computed = Json{{"norm", value}};
            if (n - 4 * k > 0) {
                const double bound = 2.0 * std::sqrt(2.0) / std::sqrt(static_cast<double>(n - 4 * k));
                r.computed["boundRatio"] = value / bound;
                r.bound = bound;
                r.status = all_pass(value <= bound + r.tolerance);
            } else {
                r.bound = nullptr;
                r.status = CheckStatus::NotApplicable;  // the bound is vacuous here
            }
            r.runtime_ms = t.ms();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckResult> check_t3_sandwich(CheckContext& ctx) {
    std::vector<CheckResult> out;
    for (int n : {5, 6}) {
        if (n > ctx.options().n_cap) continue;
        for (int k = 1; k <= ctx.options().k_max; ++k) {
            Timer t;
            CheckResult r;
            r.id = "T3-sandwich";
            r.tolerance = ctx.options().tol.ineq;
            const double lhs = normsimpl_norm(ctx, n, k);
            const double rhs = gb_rhs(ctx, n, k);
            r.params = Json{{"N", n}, {"k", k}};
            r.computed = Json{{"lhs", lhs}, {"rhs", rhs}, {"ratio", lhs / rhs}};
            r.bound = rhs;
            r.status = all_pass(lhs <= rhs + r.tolerance);
            r.runtime_ms = t.ms();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckResult> check_t3_ingredient(CheckContext& ctx, const std::string& id, int y) {
    std::vector<CheckResult> out;
    const int n = 6;
    if (ctx.options().n_cap < n) return out;
    for (int k = 1; k <= std::min(2, ctx.options().k_max); ++k) {
        Timer t;
        CheckResult r;
        r.id = id;
        r.tolerance = ctx.options().tol.ineq;
        const Matrix& low = ctx.perm_projector(n, SubspaceLabel::HLow, k);
        const Matrix& high = ctx.perm_projector(n, SubspaceLabel::HHigh, k);
        const double value = spectral_norm_dense(
            Matrix(low * Matrix(xi_diagonal(ctx.rep(n).space(), 0, y).asDiagonal()) * high));
        const double bound = y == 0 ? 1.0 / std::sqrt(static_cast<double>(n - 2 * k))
                                    : 1.0 / (n - 2 * k);
        r.params = Json{{"N", n}, {"k", k}, {"y", y}};
        r.computed = Json{{"norm", value}, {"boundRatio", value / bound}};
        r.bound = bound;
        r.status = all_pass(value <= bound + r.tolerance);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_t3_boxdist(CheckContext& ctx) {
    std::vector<CheckResult> out;
    for (int n : {5, 6}) {
        if (n > ctx.options().n_cap) continue;
        for (int k = 1; k <= ctx.options().k_max; ++k) {
            if (n - 2 * k + 1 <= 0) continue;
            for (const auto& theta : enumerate_partitions(k)) {
                const auto tb = bar(theta, n, 0);
                if (!tb) continue;
                for (const auto& rho : branch_down(theta)) {
                    const auto rbss = bar(rho, n, 2);
                    const auto rbs = bar(rho, n, 1);
                    const auto tbs = bar(theta, n, 1);
                    if (!rbss || !rbs || !tbs) continue;
                    const int y = 1;
                    for (const auto& [mu_name, mu] :
                         {std::make_pair(std::string("theta_bar_*"), *tbs),
                          std::make_pair(std::string("rho_bar_*"), *rbs)}) {
                        Timer t;
                        CheckResult r;
                        r.id = "T3-boxdist";
                        r.tolerance = ctx.options().tol.ineq;
                        auto& rep = ctx.rep(n);
                        const Matrix& pa = rep.combined(
                            {{*tb, GroupSide::Both, {}},
                             {mu, GroupSide::Range, {0}},
                             {*rbss, GroupSide::Range, {0, y}}});
                        const Matrix& pb = rep.combined(
                            {{*tb, GroupSide::Both, {}},
                             {mu, GroupSide::Range, {y}},
                             {*rbss, GroupSide::Range, {0, y}}});
                        const double trace = (pa * pb).trace();
                        const double dims = dbl(dim_specht(*tb)) * dbl(dim_specht(*rbss));
                        const double bound = dims / std::pow(n - 2 * k + 1, 2);
                        const int dist = diagram_pair_distance(
                            BarDiagram(theta, n, 0), BarDiagram(rho, n - 2, 2));
                        const double exact = dims / (static_cast<double>(dist) * dist);
                        r.params = Json{{"N", n},
                                        {"k", k},
                                        {"theta", theta.to_string()},
                                        {"rho", rho.to_string()},
                                        {"mu", mu_name},
                                        {"y", y}};
                        r.computed = Json{{"trace", trace},
                                          {"exact", exact},
                                          {"boxDistance", dist},
                                          {"exactAgreement", std::abs(trace - exact)}};
                        r.bound = bound;
                        r.status = all_pass(trace <= bound + r.tolerance &&
                                            close(trace, exact, ctx.options().tol.eq));
                        r.runtime_ms = t.ms();
                        out.push_back(std::move(r));
                    }
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Simulation checks
// ---------------------------------------------------------------------------

std::vector<CheckResult> check_t1_support(CheckContext& ctx) {
    std::vector<CheckResult> out;
    std::vector<AlgorithmSpec> specs;
    if (ctx.options().n_cap >= 4) {
        specs.push_back(grover_spec(4, 2));
        specs.push_back(classify_then_query_spec(4));
        specs.push_back(random_spec(OracleMode::Permutation, 4, 4, 2, 2, ctx.options().seed + 1));
    }
    if (ctx.options().n_cap >= 5) {
        specs.push_back(classify_then_query_spec(5));
        specs.push_back(random_spec(OracleMode::Permutation, 5, 5, 2, 2, ctx.options().seed + 2));
    }
    for (const auto& spec : specs) {
        Timer t;
        CheckResult r;
        r.id = "T1-support";
        r.tolerance = ctx.options().tol.ineq;
        FunctionSpace space(spec.mode, spec.n, spec.m);
        const auto trace = simulate(space, spec);
        const auto report = analyze_trace(ctx, space, spec, trace);
        r.params = Json{{"N", spec.n}, {"algorithm", spec.name}, {"queries", spec.queries()}};
        r.computed = Json{{"maxWeightOutside", report.point1_residual},
                          {"alphaConsistency", report.alpha_consistency}};
        r.bound = r.tolerance;
        r.status = all_pass(report.point1_residual <= r.tolerance &&
                            report.alpha_consistency <= r.tolerance);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_sim_grover(CheckContext& ctx) {
    std::vector<CheckResult> out;
    if (ctx.options().n_cap < 4) return out;
    for (int kappa : {0, 2}) {
        Timer t;
        CheckResult r;
        r.id = "SIM-grover";
        r.tolerance = ctx.options().tol.ineq;
        const auto spec = grover_spec(4, kappa);
        FunctionSpace space(OracleMode::Permutation, 4, 4);
        const auto trace = simulate(space, spec);
        const auto report = analyze_trace(ctx, space, spec, trace);
        const double expected = grover_success_formula(4, kappa);
        r.params = Json{{"N", 4}, {"queries", kappa}};
        r.computed = Json{{"success", report.success},
                          {"formula", expected},
                          {"point1Residual", report.point1_residual},
                          {"point2Violation", report.point2_violation},
                          {"alpha", report.alpha}};
        r.bound = expected;
        bool ok = std::abs(report.success - expected) <= r.tolerance;
        ok = ok && report.point1_residual <= r.tolerance;
        if (report.point2_applicable) ok = ok && report.point2_violation <= r.tolerance;
        r.status = all_pass(ok);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_sim_random(CheckContext& ctx) {
    std::vector<CheckResult> out;
    int seed_offset = 100;
    for (int n : {4, 5}) {
        if (n > ctx.options().n_cap) continue;
        Timer t;
        CheckResult r;
        r.id = "SIM-random";
        r.tolerance = ctx.options().tol.ineq;
        double worst_p1 = 0, worst_p2 = -1e300, worst_p3 = -1e300, worst_alpha = 0;
        bool p2_any = false, p3_any = false;
        const int runs = 10;
        for (int i = 0; i < runs; ++i) {
            const auto spec = random_spec(OracleMode::Permutation, n, n, 2, 2,
                                          ctx.options().seed + seed_offset + i);
            FunctionSpace space(OracleMode::Permutation, n, n);
            const auto trace = simulate(space, spec);
            const auto report = analyze_trace(ctx, space, spec, trace);
            worst_p1 = std::max(worst_p1, report.point1_residual);
            worst_alpha = std::max(worst_alpha, report.alpha_consistency);
            if (report.point2_applicable) {
                p2_any = true;
                worst_p2 = std::max(worst_p2, report.point2_violation);
            }
            if (report.point3_applicable) {
                p3_any = true;
                worst_p3 = std::max(worst_p3, report.point3_violation);
            }
        }
        seed_offset += runs;
        r.params = Json{{"N", n}, {"runs", runs}, {"queries", 2}};
        r.computed = Json{{"maxPoint1Residual", worst_p1},
                          {"maxPoint2Violation", p2_any ? worst_p2 : 0.0},
                          {"maxPoint3Violation", p3_any ? worst_p3 : 0.0},
                          {"alphaConsistency", worst_alpha}};
        r.bound = r.tolerance;
        bool ok = worst_p1 <= r.tolerance && worst_alpha <= r.tolerance;
        if (p2_any) ok = ok && worst_p2 <= r.tolerance;
        if (p3_any) ok = ok && worst_p3 <= r.tolerance;
        r.status = all_pass(ok);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_sim_classify(CheckContext& ctx) {
    std::vector<CheckResult> out;
    for (int n : {4, 5}) {
        if (n > ctx.options().n_cap) continue;
        Timer t;
        CheckResult r;
        r.id = "SIM-classify";
        r.tolerance = ctx.options().tol.ineq;
        const auto spec = classify_then_query_spec(n);
        FunctionSpace space(OracleMode::Permutation, n, n);
        const auto trace = simulate(space, spec);
        // one query: the reduced oracle state must live inside A_1
        const Matrix outside = Matrix::Identity(space.dim(), space.dim()) -
                               ctx.perm_projector(n, SubspaceLabel::A, 1);
        const double residual = amplitude_on(outside, spec.dim_a(), trace.psi[1]);
        r.params = Json{{"N", n}};
        r.computed = Json{{"weightOutsideA1", residual}};
        r.bound = r.tolerance;
        r.status = all_pass(residual <= r.tolerance);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_cor(CheckContext& ctx) {
    std::vector<CheckResult> out;
    struct Run {
        std::string name;
        OracleMode mode;
        int n;
        int kappa;
        double success;
    };
    std::vector<Run> runs;
    if (ctx.options().n_cap >= 4) {
        for (int kappa : {0, 2}) {
            const auto spec = grover_spec(4, kappa);
            FunctionSpace space(OracleMode::Permutation, 4, 4);
            const auto trace = simulate(space, spec);
            runs.push_back({"grover", OracleMode::Permutation, 4, kappa,
                            success_probability(space, spec, trace.psi.back())});
        }
    }
    for (int n : {4, 5}) {
        if (n > ctx.options().n_cap) continue;
        for (int kappa : {0, 1}) {
            const auto spec = random_spec(OracleMode::Permutation, n, n, kappa, 2,
                                          ctx.options().seed + 500 + n + kappa);
            FunctionSpace space(OracleMode::Permutation, n, n);
            const auto trace = simulate(space, spec);
            runs.push_back({"random", OracleMode::Permutation, n, kappa,
                            success_probability(space, spec, trace.psi.back())});
        }
    }
    {
        const int n = 4, m = 2;
        const auto spec = random_spec(OracleMode::Function, n, m, 0, 2, ctx.options().seed + 900);
        FunctionSpace space(OracleMode::Function, n, m);
        const auto trace = simulate(space, spec);
        runs.push_back({"random", OracleMode::Function, n, 0,
                        success_probability(space, spec, trace.psi.back())});
    }

    for (const auto& run : runs) {
        Timer t;
        CheckResult r;
        r.id = "COR";
        r.tolerance = ctx.options().tol.ineq;
        double bound;
        bool defined;
        if (run.mode == OracleMode::Permutation) {
            defined = run.n - 4 * run.kappa > 0;
            bound = defined
                        ? std::pow(1.0 + 2.0 * std::sqrt(2.0) * run.kappa, 2) / (run.n - 4 * run.kappa)
                        : 0.0;
        } else {
            defined = run.n > 1;
            bound = defined ? std::pow(1.0 + std::sqrt(2.0) * run.kappa, 2) / (run.n - 1) : 0.0;
        }
        const bool applicable = defined && bound <= 1.0;
        r.params = Json{{"mode", run.mode == OracleMode::Permutation ? "permutation" : "function"},
                        {"algorithm", run.name},
                        {"N", run.n},
                        {"queries", run.kappa}};
        r.computed = Json{{"success", run.success}};
        r.bound = applicable ? Json(bound) : Json(nullptr);
        r.status = applicable ? all_pass(run.success <= bound + r.tolerance)
                              : CheckStatus::NotApplicable;
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Function-case checks
// ---------------------------------------------------------------------------

std::vector<CheckResult> check_fc_claim51(CheckContext& ctx) {
    std::vector<CheckResult> out;
    const std::vector<std::pair<int, int>> cases = {{1, 4}, {2, 4}, {3, 2}};
    for (auto [m, n] : cases) {
        Timer t;
        CheckResult r;
        r.id = "FC-claim51";
        r.tolerance = ctx.options().tol.eq;
        const RegisterGeometry g = RegisterGeometry::make(n);
        const Matrix low_prod = pi_low_product(g, m);
        const Matrix low_acc = pi_low_accumulated(g, m, m);
        const Matrix high_sum = pi_high_direct_sum(g, m);
        const Matrix id = Matrix::Identity(low_prod.rows(), low_prod.cols());
        const double low_gap = spectral_norm_dense(Matrix(low_prod - low_acc));
        const double high_gap = spectral_norm_dense(Matrix(high_sum - (id - low_prod)));
        const double rank = low_prod.trace();
        double span_gap = 0;
        if (m >= 1 && std::pow(n, m) <= 256) {
            span_gap = spectral_norm_dense(
                Matrix(ctx.func_spans(n, m).span_projector(SubspaceLabel::HLow, m) - low_prod));
        }
        r.params = Json{{"M", m}, {"N", n}};
        r.computed = Json{{"lowGap", low_gap},
                          {"highGap", high_gap},
                          {"spanGap", span_gap},
                          {"lowRank", rank},
                          {"lowRankExpected", std::pow(n - 1.0, m)}};
        r.bound = r.tolerance;
        r.status = all_pass(low_gap <= r.tolerance && high_gap <= r.tolerance &&
                            span_gap <= r.tolerance &&
                            std::abs(rank - std::pow(n - 1.0, m)) <= 1e-6);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_fc_lemma52(CheckContext& ctx) {
    std::vector<CheckResult> out;
    const std::vector<std::pair<int, int>> cases = {{2, 4}, {3, 4}, {3, 2}};
    for (auto [m, n] : cases) {
        Timer t;
        CheckResult r;
        r.id = "FC-lemma52";
        r.tolerance = ctx.options().tol.eq;
        const RegisterGeometry g = RegisterGeometry::make(n);
        const Index dim = static_cast<Index>(std::pow(n, m));

        double split_gap = 0, completeness = 0, orthogonality = 0;
        Matrix level_sum = Matrix::Zero(dim, dim);
        std::vector<Matrix> levels;
        for (int k = 0; k <= m; ++k) {
            const auto split = lemma52_projectors(g, m, k);
            const Matrix ehat = level_projector(g, m, k);
            split_gap = std::max(split_gap,
                                 spectral_norm_dense(Matrix(split.low + split.high - ehat)));
            levels.push_back(ehat);
            level_sum += ehat;
        }
        completeness =
            spectral_norm_dense(Matrix(level_sum - Matrix::Identity(dim, dim)));
        for (std::size_t a = 0; a < levels.size(); ++a)
            for (std::size_t b = a + 1; b < levels.size(); ++b)
                orthogonality =
                    std::max(orthogonality, spectral_norm_dense(Matrix(levels[a] * levels[b])));

        // single-register identity: Ehat1 E1 Ehat1 = Erest + R0 / N
        const double register_identity = spectral_norm_dense(
            Matrix(g.Ehat1 * g.E1 * g.Ehat1 - (g.Erest + g.R0 / n)));

        // cross-module: span-route Hbar projectors match the explicit sums
        double span_gap = 0;
        if (m == 2 && n == 4) {
            auto& spans = ctx.func_spans(n, m);
            for (int k = 0; k <= m; ++k) {
                const auto split = lemma52_projectors(g, m, k);
                span_gap = std::max(
                    span_gap, spectral_norm_dense(Matrix(
                                  spans.span_projector(SubspaceLabel::HbarLow, k) - split.low)));
                span_gap = std::max(
                    span_gap, spectral_norm_dense(Matrix(
                                  spans.span_projector(SubspaceLabel::HbarHigh, k) - split.high)));
            }
        }

        r.params = Json{{"M", m}, {"N", n}};
        r.computed = Json{{"splitGap", split_gap},
                          {"completeness", completeness},
                          {"levelOrthogonality", orthogonality},
                          {"registerIdentity", register_identity},
                          {"spanGap", span_gap}};
        r.bound = r.tolerance;
        r.status = all_pass(split_gap <= r.tolerance && completeness <= r.tolerance &&
                            orthogonality <= r.tolerance && register_identity <= 1e-12 &&
                            span_gap <= r.tolerance);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_fc_claim53(CheckContext& ctx, const std::string& id) {
    std::vector<CheckResult> out;
    const std::vector<std::pair<int, int>> cases = {{4, 2}, {2, 2}};
    for (auto [n, m] : cases) {
        Timer t;
        CheckResult r;
        r.id = id;
        r.tolerance = ctx.options().tol.ineq;
        const double expected = 1.0 / std::sqrt(static_cast<double>(n));
        double worst = 0;
        std::vector<double> values;
        for (int k = 0; k <= m; ++k) {
            const double v = claim53_norm(n, m, k);
            values.push_back(v);
            worst = std::max(worst, std::abs(v - expected));
        }
        const double full = claim53_norm(n, m, -1);
        worst = std::max(worst, std::abs(full - expected));
        bool monotone = true;
        for (std::size_t i = 1; i < values.size(); ++i)
            monotone = monotone && values[i] >= values[i - 1] - r.tolerance;
        monotone = monotone && full >= values.back() - r.tolerance;

        r.params = Json{{"N", n}, {"M", m}};
        r.computed = Json{{"values", values}, {"full", full}, {"maxError", worst}};
        r.bound = expected;
        r.status = all_pass(worst <= r.tolerance && monotone);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_fc_claim54(CheckContext& ctx) {
    std::vector<CheckResult> out;
    for (int n : {4, 2}) {
        Timer t;
        CheckResult r;
        r.id = "FC-claim54";
        r.tolerance = ctx.options().tol.eq;
        const int m = 2;
        const double value = claim54_norm(n, m);
        const double expected = std::sqrt(2.0 * n - 3.0) / (n - 1);
        const double cap = std::sqrt(2.0 / (n - 1));
        r.params = Json{{"N", n}, {"M", m}};
        r.computed = Json{{"norm", value}, {"closedForm", expected}, {"cap", cap}};
        r.bound = cap;
        r.status = all_pass(close(value, expected, r.tolerance) && value < cap + 1e-12);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_fc_weaker(CheckContext& ctx) {
    Timer t;
    CheckResult r;
    r.id = "FC-weaker";
    r.tolerance = ctx.options().tol.eq;
    const int n = 4, m = 2;
    const auto norms = weaker_bound_norms(n, m);
    const double y0 = std::sqrt(n - 1.0) / n;
    const double ynz = std::sqrt(static_cast<double>(n) * n - n - 1.0) / (n * (n - 1.0));
    const double agg = 2.0 * std::sqrt((2.0 * n - 3.0) / (n * (n - 1.0)));
    r.params = Json{{"N", n}, {"M", m}};
    r.computed = Json{{"yZero", norms.y_zero},
                      {"yNonzero", norms.y_nonzero},
                      {"aggregate", norms.aggregate},
                      {"yZeroExpected", y0},
                      {"yNonzeroExpected", ynz},
                      {"aggregateExpected", agg}};
    r.bound = nullptr;
    r.status = all_pass(close(norms.y_zero, y0, r.tolerance) &&
                        close(norms.y_nonzero, ynz, r.tolerance) &&
                        close(norms.aggregate, agg, r.tolerance));
    r.runtime_ms = t.ms();
    return {r};
}

std::vector<CheckResult> check_fc_zhandry(CheckContext& ctx) {
    std::vector<CheckResult> out;
    const int n = 4, m = 2;
    const RegisterGeometry g = RegisterGeometry::make(n);
    const Matrix low = pi_low_product(g, m);
    const Matrix high = Matrix::Identity(low.rows(), low.cols()) - low;
    FunctionSpace space(OracleMode::Function, n, m);

    for (int i = 0; i < 3; ++i) {
        Timer t;
        CheckResult r;
        r.id = "FC-zhandry";
        r.tolerance = ctx.options().tol.ineq;
        const auto spec =
            random_spec(OracleMode::Function, n, m, 3, 2, ctx.options().seed + 700 + i);
        const auto trace = simulate(space, spec);

        double alpha_prev = 0, worst_step = -1e300, worst_p2 = -1e300, alpha0 = 0;
        const double step_bound = std::sqrt(2.0 / (n - 1.0));
        const double tail = 1.0 / std::sqrt(static_cast<double>(n));
        for (int k = 0; k <= spec.queries(); ++k) {
            const double alpha = amplitude_on(high, spec.dim_a(), trace.phi[k]);
            if (k == 0) alpha0 = alpha;
            if (k > 0) worst_step = std::max(worst_step, alpha - alpha_prev - step_bound);
            const double p = std::sqrt(success_probability(space, spec, trace.psi[k]));
            worst_p2 = std::max(worst_p2, p - (alpha + tail));
            alpha_prev = alpha;
        }
        r.params = Json{{"N", n}, {"M", m}, {"seed", i}, {"queries", spec.queries()}};
        r.computed = Json{{"alpha0", alpha0},
                          {"maxStepViolation", worst_step},
                          {"maxSuccessViolation", worst_p2}};
        r.bound = r.tolerance;
        r.status = all_pass(alpha0 <= r.tolerance && worst_step <= r.tolerance &&
                            worst_p2 <= r.tolerance);
        r.runtime_ms = t.ms();
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

using CheckFn = std::vector<CheckResult> (*)(CheckContext&);

struct Entry {
    const char* id;
    const char* suite;
    CheckFn fn;
};

std::vector<CheckResult> check_t2_func(CheckContext& ctx) { return check_fc_claim53(ctx, "T2-func"); }
std::vector<CheckResult> check_fc53(CheckContext& ctx) { return check_fc_claim53(ctx, "FC-claim53"); }
std::vector<CheckResult> check_t3_y0(CheckContext& ctx) {
    return check_t3_ingredient(ctx, "T3-ingredient-y0", 0);
}
std::vector<CheckResult> check_t3_ynz(CheckContext& ctx) {
    return check_t3_ingredient(ctx, "T3-ingredient-ynz", 1);
}

const Entry kCatalog[] = {
    {"REP-dims", "rep", check_rep_dims},
    {"REP-claim71", "rep", check_rep_claim71},
    {"REP-claimA2", "rep", check_rep_claimA2},
    {"REP-claimA3", "rep", check_rep_claimA3},
    {"REP-charorth", "rep", check_rep_charorth},
    {"SCHUR-L41", "rep", check_schur},
    {"C61", "perm", check_c61},
    {"C62", "perm", check_c62},
    {"ALT", "perm", check_alt},
    {"PHI", "perm", check_phi},
    {"OVL32", "perm", check_ovl32},
    {"OVL33", "perm", check_ovl33},
    {"T1-operator", "perm", check_t1_operator},
    {"T1-support", "perm", check_t1_support},
    {"T2-perm-exact", "perm", check_t2_perm},
    {"T3-perm-operator", "perm", check_t3_operator},
    {"T3-sandwich", "perm", check_t3_sandwich},
    {"T3-ingredient-y0", "perm", check_t3_y0},
    {"T3-ingredient-ynz", "perm", check_t3_ynz},
    {"T3-boxdist", "perm", check_t3_boxdist},
    {"SIM-grover", "perm", check_sim_grover},
    {"SIM-random", "perm", check_sim_random},
    {"SIM-classify", "perm", check_sim_classify},
    {"COR", "perm", check_cor},
    {"T2-func", "func", check_t2_func},
    {"FC-claim51", "func", check_fc_claim51},
    {"FC-lemma52", "func", check_fc_lemma52},
    {"FC-claim53", "func", check_fc53},
    {"FC-claim54", "func", check_fc_claim54},
    {"FC-weaker", "func", check_fc_weaker},
    {"FC-zhandry", "func", check_fc_zhandry},
};

}  // namespace

std::vector<std::string> catalog_ids(const std::string& suite) {
    std::vector<std::string> ids;
    for (const auto& e : kCatalog)
        if (suite == "all" || suite == e.suite) ids.push_back(e.id);
    return ids;
}

std::vector<CheckResult> run_check(const std::string& id, CheckContext& ctx) {
    for (const auto& e : kCatalog)
        if (id == e.id) return e.fn(ctx);
    throw InvalidArgument("unknown check id: " + id);
}

int Report::passed() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Pass; }));
}

int Report::failed() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; }));
}

int Report::not_applicable() const {
    return static_cast<int>(std::count_if(
        checks.begin(), checks.end(),
        [](const CheckResult& c) { return c.status == CheckStatus::NotApplicable; }));
}

Json Report::to_json(bool with_runtime) const {
    Json checks_json = Json::array();
    for (const auto& c : checks) checks_json.push_back(c.to_json(with_runtime));
    Json summary{{"total", checks.size()},
                 {"pass", passed()},
                 {"fail", failed()},
                 {"notApplicable", not_applicable()},
                 {"suite", options.suite},
                 {"nCap", options.n_cap},
                 {"kMax", options.k_max},
                 {"seed", options.seed},
                 {"tolEq", options.tol.eq},
                 {"tolIneq", options.tol.ineq}};
    return Json{{"summary", summary}, {"checks", checks_json}};
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "id,value,bound\n";
    for (const auto& c : checks) {
        double value = 0;
        if (!c.computed.empty()) {
            const auto& first = c.computed.begin().value();
            if (first.is_number()) value = first.get<double>();
        }
        os << c.id << "," << value << ",";
        if (c.bound.is_number()) os << c.bound.get<double>();
        os << "\n";
    }
    return os.str();
}

Report run_suite(CheckContext& ctx) {
    Report report;
    report.options = ctx.options();
    for (const auto& id : catalog_ids(ctx.options().suite)) {
        auto results = run_check(id, ctx);
        for (auto& r : results) report.checks.push_back(std::move(r));
    }
    return report;
}

}  // namespace oraclelab
