#pragma once

// Random-function case: the oracle space factors as M copies of an N-level
// register. Per-register geometry around |0>, the uniform state |0hat>, and
// the residual vector |r> (closest state to |0> orthogonal to |0hat>), the
// subset projectors E_S, the explicit low/high projectors per level k, and
// the closed-form transfer norms.

#include "oraclelab/linear_operator.hpp"

namespace oraclelab {

/// Projectors on one N-dimensional function-value register.
struct RegisterGeometry {
    int n = 0;
    Vector r;       // sqrt(1-1/N)|0> - 1/sqrt(N(N-1)) sum_{y!=0} |y>
    Matrix E0, E1;  // |0><0| and its complement
    Matrix Ehat0, Ehat1;  // |0hat><0hat| and its complement
    Matrix Erest;   // orthogonal to both |0> and |0hat>
    Matrix R0, R1;  // |r><r| and its complement

    static RegisterGeometry make(int n);
};

/// E_S = ⊗_{x in S} Ehat1 ⊗ ⊗_{x not in S} Ehat0 on M registers
/// (bit x of `mask` set means x in S). The function-space basis index is
/// sum_x f(x) N^x, so register x = 0 is the fastest tensor factor.
Matrix subset_projector(const RegisterGeometry& g, int m, unsigned mask);

/// Ehat_k^(D) = sum over |S| = k of E_S.
Matrix level_projector(const RegisterGeometry& g, int m, int k);

struct LevelSplit {
    Matrix low;   // sum_S  ⊗_{S} Erest   ⊗ ⊗_{~S} Ehat0
    Matrix high;  // sum_S (⊗_S Ehat1 - ⊗_S Erest) ⊗ ⊗_{~S} Ehat0
};
LevelSplit lemma52_projectors(const RegisterGeometry& g, int m, int k);

/// Accumulated low/high projectors up to level k (k = m gives the full split).
Matrix pi_low_accumulated(const RegisterGeometry& g, int m, int k);
Matrix pi_high_accumulated(const RegisterGeometry& g, int m, int k);

/// ⊗_x R1 — the full low space in its product form.
Matrix pi_low_product(const RegisterGeometry& g, int m);
/// Direct sum over b != all-ones of ⊗_x R_{b(x)} — the full high space.
Matrix pi_high_direct_sum(const RegisterGeometry& g, int m);

/// ||Xi_x^0 Pi_low_k||; pass k = -1 for the full Pi_low. The value 1/sqrt(N)
/// is independent of k and x.
double claim53_norm(int n, int m, int k = -1);

/// ||sum_{y,y'} Pi_high Xi_x^y Pi_low ⊗ |y'^y><y'| || on F ⊗ O, xor oracle.
/// Closed form sqrt(2N-3)/(N-1); needs a power-of-two N.
double claim54_norm(int n, int m);

struct TransferNorms {
    double y_zero = 0.0;      // ||Pi_low Xi_x^0 Pi_high||     = sqrt(N-1)/N
    double y_nonzero = 0.0;   // ||Pi_low Xi_x^y Pi_high||, y!=0
    double aggregate = 0.0;   // 2 (sum_y ||...||^2)^{1/2}
};
TransferNorms weaker_bound_norms(int n, int m);

/// op on register x, identity elsewhere.
Matrix one_register_operator(const RegisterGeometry& g, int m, int x, const Matrix& op);

}  // namespace oraclelab
