#pragma once

// The oracle register F and the operators living on it: the group action
// V_pi^tau, the coordinate projectors Xi_x^y, the spanning vectors |v_alpha>,
// the extended oracle O and the success projector P.
//
// Basis conventions (used by every tensor operator and by JSON exports):
//   - permutation case: |f> at index rank(f), the Lehmer-code rank of the
//     bijection f: D -> R over {0..N-1};
//   - function case:    |f> at index sum_x f(x) * N^x (base-N digits, x = 0
//     the least significant);
//   - joint spaces put F slowest: index = f * dim(rest) + rest, with the rest
//     laid out row-major in register order (I, O, W, R).

#include <vector>

#include "oraclelab/linear_operator.hpp"
#include "oraclelab/young.hpp"

namespace oraclelab {

using Perm = std::vector<int>;  // images: p[x] is where x goes

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a ∘ b)(x) = a[b[x]]
Perm perm_inverse(const Perm& a);
Perm perm_transposition(int n, int a, int b);
YoungDiagram cycle_type(const Perm& p);
/// Permutations of [n] that fix every point outside `support`.
std::vector<Perm> perms_of_subset(int n, const std::vector<int>& support);

enum class OracleMode { Permutation, Function };
enum class OracleArithmetic { Xor, ModAdd };

/// A partial map x_i -> y_i. All x distinct; in permutation mode all y
/// distinct too. The empty assignment has weight 0.
struct Assignment {
    std::vector<std::pair<int, int>> pairs;
    OracleMode mode = OracleMode::Permutation;

    int weight() const { return static_cast<int>(pairs.size()); }
    void validate(int domain_size, int range_size) const;
    bool maps_to(int y) const;  // y in the image
};

/// f_pi^tau = tau ∘ f ∘ pi^{-1}; the two actions commute.
Perm act(const Perm& pi, const Perm& tau, const Perm& f);

/// The oracle register: dim N! (permutation) or N^M (function). Caches the
/// index <-> function table in permutation mode.
class FunctionSpace {
public:
    FunctionSpace(OracleMode mode, int n, int m);
    static FunctionSpace permutations(int n) { return {OracleMode::Permutation, n, n}; }
    static FunctionSpace functions(int n, int m) { return {OracleMode::Function, n, m}; }

    OracleMode mode() const { return mode_; }
    int n() const { return n_; }  // range size
    int m() const { return m_; }  // domain size
    Index dim() const { return dim_; }

    int value_at(Index f_idx, int x) const;  // f(x)
    Index index_of(const std::vector<int>& table) const;
    std::vector<int> table_of(Index f_idx) const;
    bool agrees(Index f_idx, const Assignment& alpha) const;

private:
    OracleMode mode_;
    int n_, m_;
    Index dim_;
    std::vector<std::vector<int>> tables_;  // permutation mode cache
};

/// V_pi^tau as a permutation operator on F: |f> -> |f_pi^tau>.
LinearOperator rep_operator(const FunctionSpace& space, const Perm& pi, const Perm& tau);

/// Diagonal projector onto {f : f(x) = y}.
LinearOperator xi_projector(const FunctionSpace& space, int x, int y);
Vector xi_diagonal(const FunctionSpace& space, int x, int y);

/// Unit vector: uniform superposition over all f agreeing with alpha.
Vector v_state(const FunctionSpace& space, const Assignment& alpha);

/// Extended oracle on F (x) I (x) O with index (f * dimI + i) * dimO + o;
/// dimI = M, dimO = N. Xor arithmetic needs N a power of two.
LinearOperator extended_oracle(const FunctionSpace& space, OracleArithmetic arith);

/// Success projector on F (x) W'' (x) R with index (f * wdim + w) * dimR + r;
/// selects the pairs with f(r) = 0.
LinearOperator success_projector(const FunctionSpace& space, Index wdim);

/// All assignments of the given weight (sets of pairs, enumerated once each).
std::vector<Assignment> all_assignments(const FunctionSpace& space, int weight,
                                        bool require_zero_in_image = false,
                                        bool forbid_zero_in_image = false);

bool is_power_of_two(int n);

}  // namespace oraclelab
