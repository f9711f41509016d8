#include "oraclelab/function_case.hpp"

#include <cmath>

#include "oraclelab/perm_space.hpp"

namespace oraclelab {

RegisterGeometry RegisterGeometry::make(int n) {
    if (n < 2) throw InvalidArgument("register geometry needs N >= 2");
    RegisterGeometry g;
    g.n = n;
    const Matrix id = Matrix::Identity(n, n);
    Vector zero_state = Vector::Zero(n);
    zero_state[0] = 1.0;
    Vector uniform = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));

    g.E0 = zero_state * zero_state.transpose();
    g.E1 = id - g.E0;
    g.Ehat0 = uniform * uniform.transpose();
    g.Ehat1 = id - g.Ehat0;

    Vector r = g.Ehat1 * zero_state;
    g.r = r / r.norm();  // sqrt(1 - 1/N) normalization
    g.R0 = g.r * g.r.transpose();
    g.R1 = id - g.R0;
    g.Erest = g.Ehat1 - g.R0;  // orthogonal to both |0> and |0hat>
    return g;
}

namespace {

// ⊗_x ops[x], with register x = 0 the fastest tensor factor.
Matrix tensor_registers(int m, const std::vector<const Matrix*>& ops) {
    Matrix acc = *ops[m - 1];
    for (int x = m - 2; x >= 0; --x) acc = kron(acc, *ops[x]);
    return acc;
}

}  // namespace

Matrix one_register_operator(const RegisterGeometry& g, int m, int x, const Matrix& op) {
    const Matrix id = Matrix::Identity(g.n, g.n);
    std::vector<const Matrix*> ops(m, &id);
    ops[x] = &op;
    return tensor_registers(m, ops);
}

Matrix subset_projector(const RegisterGeometry& g, int m, unsigned mask) {
    std::vector<const Matrix*> ops(m);
    for (int x = 0; x < m; ++x) ops[x] = (mask >> x) & 1u ? &g.Ehat1 : &g.Ehat0;
    return tensor_registers(m, ops);
}

Matrix level_projector(const RegisterGeometry& g, int m, int k) {
    const Index dim = static_cast<Index>(std::pow(g.n, m));
    Matrix sum = Matrix::Zero(dim, dim);
    for (unsigned mask = 0; mask < (1u << m); ++mask)
        if (__builtin_popcount(mask) == k) sum += subset_projector(g, m, mask);
    return sum;
}

LevelSplit lemma52_projectors(const RegisterGeometry& g, int m, int k) {
    const Index dim = static_cast<Index>(std::pow(g.n, m));
    LevelSplit split{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<const Matrix*> low_ops(m), hat_ops(m);
        for (int x = 0; x < m; ++x) {
            const bool in_s = (mask >> x) & 1u;
            low_ops[x] = in_s ? &g.Erest : &g.Ehat0;
            hat_ops[x] = in_s ? &g.Ehat1 : &g.Ehat0;
        }
        const Matrix low_term = tensor_registers(m, low_ops);
        split.low += low_term;
        split.high += tensor_registers(m, hat_ops) - low_term;
    }
    return split;
}

Matrix pi_low_accumulated(const RegisterGeometry& g, int m, int k) {
    const Index dim = static_cast<Index>(std::pow(g.n, m));
    Matrix sum = Matrix::Zero(dim, dim);
    for (int kk = 0; kk <= k; ++kk) sum += lemma52_projectors(g, m, kk).low;
    return sum;
}

Matrix pi_high_accumulated(const RegisterGeometry& g, int m, int k) {
    const Index dim = static_cast<Index>(std::pow(g.n, m));
    Matrix sum = Matrix::Zero(dim, dim);
    for (int kk = 1; kk <= k; ++kk) sum += lemma52_projectors(g, m, kk).high;
    return sum;
}

Matrix pi_low_product(const RegisterGeometry& g, int m) {
    std::vector<const Matrix*> ops(m, &g.R1);
    return tensor_registers(m, ops);
}

Matrix pi_high_direct_sum(const RegisterGeometry& g, int m) {
    const Index dim = static_cast<Index>(std::pow(g.n, m));
    Matrix sum = Matrix::Zero(dim, dim);
    for (unsigned mask = 0; mask + 1 < (1u << m); ++mask) {  // skip all-ones
        std::vector<const Matrix*> ops(m);
        for (int x = 0; x < m; ++x) ops[x] = (mask >> x) & 1u ? &g.R1 : &g.R0;
        sum += tensor_registers(m, ops);
    }
    return sum;
}

double claim53_norm(int n, int m, int k) {
    const RegisterGeometry g = RegisterGeometry::make(n);
    const FunctionSpace space = FunctionSpace::functions(n, m);
    const Matrix low = k < 0 ? pi_low_product(g, m) : pi_low_accumulated(g, m, k);
    const Matrix xi = xi_diagonal(space, 0, 0).asDiagonal();
    return spectral_norm_dense(Matrix(xi * low));
}

double claim54_norm(int n, int m) {
    if (!is_power_of_two(n)) throw InvalidArgument("claim54_norm: needs a power-of-two N");
    const RegisterGeometry g = RegisterGeometry::make(n);
    const FunctionSpace space = FunctionSpace::functions(n, m);
    const Matrix low = pi_low_product(g, m);
    const Matrix high = Matrix::Identity(low.rows(), low.cols()) - low;

    // sum_{y,y'} Pi_high Xi_x^y Pi_low ⊗ |y' xor y><y'| on F ⊗ O (F slowest)
    Matrix op = Matrix::Zero(space.dim() * n, space.dim() * n);
    for (int y = 0; y < n; ++y) {
        const Matrix block = high * Matrix(xi_diagonal(space, 0, y).asDiagonal()) * low;
        Matrix shift = Matrix::Zero(n, n);
        for (int o = 0; o < n; ++o) shift(o ^ y, o) = 1.0;
        op += kron(block, shift);
    }
    return spectral_norm_dense(op);
}

TransferNorms weaker_bound_norms(int n, int m) {
    const RegisterGeometry g = RegisterGeometry::make(n);
    const FunctionSpace space = FunctionSpace::functions(n, m);
    const Matrix low = pi_low_product(g, m);
    const Matrix high = Matrix::Identity(low.rows(), low.cols()) - low;

    TransferNorms t;
    double sum_sq = 0.0;
    for (int y = 0; y < n; ++y) {
        const double nrm =
            spectral_norm_dense(Matrix(low * Matrix(xi_diagonal(space, 0, y).asDiagonal()) * high));
        if (y == 0)
            t.y_zero = nrm;
        else
            t.y_nonzero = nrm;
        sum_sq += nrm * nrm;
    }
    t.aggregate = 2.0 * std::sqrt(sum_sq);
    return t;
}

}  // namespace oraclelab
