#pragma once

// Orthogonal projectors onto isotypic subspaces of the permutation-case F,
// for the symmetric groups of the domain, the range, and their one- and
// two-point stabilizers, built two independent ways: character sums over the
// subgroup, and sums over Young tableaux of column/row (anti)symmetrizers.

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oraclelab/linear_operator.hpp"
#include "oraclelab/perm_space.hpp"
#include "oraclelab/young.hpp"

namespace oraclelab {

enum class GroupSide { Domain, Range, Both };
std::string to_string(GroupSide side);

/// Names one isotypic component: a diagram of N - |removed| boxes for the
/// symmetric group of the chosen side with the `removed` points fixed.
/// Side Both is the full-size case where the domain and range projectors
/// coincide; it requires an N-box diagram and no removed points.
struct IrrepLabel {
    YoungDiagram diagram;
    GroupSide side = GroupSide::Range;
    std::vector<int> removed;

    std::string key() const;
    void validate(int n) const;
};

/// Per-N context: holds the oracle space and a cache of constructed
/// projectors (keyed by label; combined products cached by joined key).
/// Construction is pure; the cache tolerates concurrent idempotent inserts.
class PermSpaceRep {
public:
    explicit PermSpaceRep(int n);

    int n() const { return space_.n(); }
    const FunctionSpace& space() const { return space_; }

    /// Character-sum construction: (dim rho / |H|) sum_h chi(h) V_h over the
    /// stabilizer subgroup H fixing `removed` on the label's side.
    const Matrix& projector(const IrrepLabel& label);

    /// Tableaux construction (cross-check oracle; cost grows as |A|! times
    /// subgroup sums, so callers keep N small).
    Matrix projector_tableaux(const IrrepLabel& label) const;

    /// Product of pairwise-commuting projectors, e.g. Pi_lambda^{mu_0}.
    /// Rejects non-commuting pairs (commutator spectral norm > tol).
    const Matrix& combined(const std::vector<IrrepLabel>& labels, double commute_tol = 1e-9);

    /// Row index map of V_pi^tau (column j goes to row map[j]).
    std::vector<Index> action_rows(const Perm& pi, const Perm& tau) const;

private:
    Matrix build_char_projector(const IrrepLabel& label) const;

    FunctionSpace space_;
    std::unordered_map<std::string, Matrix> cache_;
    std::mutex mutex_;
};

/// Schur-overlap identity tr[P P' P P''] = tr[P P'] tr[P P''] / d for
/// projectors onto isomorphic irrep instances inside one isotypic component.
/// Instances are random commutant rotations of a canonical instance obtained
/// by group-averaging a random matrix. Requires multiplicity >= 3.
struct SchurOverlapReport {
    int trials = 0;
    double max_deviation = 0.0;       // identity residual over random triples
    double orthogonal_case = 0.0;     // tr[P P' P P''] when tr[P P'] = 0
    double self_case_deviation = 0.0; // P' = P'' = P reduces to d = d
    bool pass = false;
};
SchurOverlapReport verify_schur_overlap(PermSpaceRep& rep, const YoungDiagram& lambda,
                                        int trials, double tol = 1e-8, unsigned seed = 11);

}  // namespace oraclelab
