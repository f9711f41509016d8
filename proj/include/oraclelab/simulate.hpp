#pragma once

// Purified-oracle simulation of query algorithms: the joint state lives on
// F ⊗ I ⊗ O ⊗ W ⊗ R (F slowest, then row-major over I, O, W, R), the run
// alternates (I_F ⊗ U_k) with (O ⊗ I_{W'}), and progress is tracked as the
// amplitude on the high subspaces after each call.

#include <cstdint>

#include "oraclelab/linear_operator.hpp"
#include "oraclelab/perm_space.hpp"

namespace oraclelab {

struct AlgorithmSpec {
    OracleMode mode = OracleMode::Permutation;
    int n = 0;                 // range size
    int m = 0;                 // domain size (= n in permutation mode)
    Index wdim = 1;            // workspace register size
    OracleArithmetic arith = OracleArithmetic::ModAdd;
    std::vector<MatrixC> unitaries;  // U_0..U_kappa on I ⊗ O ⊗ W ⊗ R
    std::string name;

    Index dim_i() const { return m; }
    Index dim_o() const { return n; }
    Index dim_r() const { return m; }
    Index dim_a() const { return dim_i() * dim_o() * wdim * dim_r(); }
    int queries() const { return static_cast<int>(unitaries.size()) - 1; }

    void validate() const;  // unitarity within 1e-10, register consistency
};

struct SimulationTrace {
    std::vector<VectorC> phi;  // phi[k]: state right after the k-th call (phi[0] initial)
    std::vector<VectorC> psi;  // psi[k]: state right after U_k
};

SimulationTrace simulate(const FunctionSpace& space, const AlgorithmSpec& spec);

/// ||(P_F ⊗ I_A) state|| for a projector on the oracle factor.
double amplitude_on(const Matrix& proj_f, Index dim_a, const VectorC& state);

/// <psi| P |psi> for the success projector (f(r) = 0 pairs).
double success_probability(const FunctionSpace& space, const AlgorithmSpec& spec,
                           const VectorC& psi_final);

/// Grover search for f^{-1}(0) with kappa oracle calls (kappa even): two calls
/// per iteration via compute / phase flip / uncompute. Simulable for
/// power-of-two N (the uncompute step needs the involutive xor oracle).
AlgorithmSpec grover_spec(int n, int kappa);
double grover_success_formula(int n, int kappa);

/// Haar-seeded random algorithm: U_k from QR of seeded complex Gaussians.
AlgorithmSpec random_spec(OracleMode mode, int n, int m, int kappa, Index wdim,
                          std::uint64_t seed);

/// Uniform superposition over inputs, one query, stop.
AlgorithmSpec classify_then_query_spec(int n);

}  // namespace oraclelab
