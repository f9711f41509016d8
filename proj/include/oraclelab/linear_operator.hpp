#pragma once

// Operators on the oracle space and its tensor extensions. Small operators are
// dense (real or complex); group actions, oracles and coordinate projectors
// keep sparse forms: a scaled permutation (one nonzero per column) or a
// diagonal. Spectral norms go through an exact dense solver up to a size
// threshold and a Lanczos iteration above it.

#include <complex>
#include <functional>
#include <variant>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "oraclelab/common.hpp"

namespace oraclelab {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;
using Complex = std::complex<double>;

class LinearOperator {
public:
    /// Scaled permutation: column j has its only nonzero at row_of_col[j],
    /// with value scale[j] (never zero).
    struct ScaledPermutation {
        std::vector<Index> row_of_col;
        Vector scale;
    };

    static LinearOperator dense(Matrix m);
    static LinearOperator dense_complex(MatrixC m);
    static LinearOperator permutation(std::vector<Index> row_of_col, Vector scale);
    static LinearOperator permutation(std::vector<Index> row_of_col);  // all scales 1
    static LinearOperator diagonal(Vector d);
    static LinearOperator identity(Index n);

    Index rows() const;
    Index cols() const;
    bool is_complex() const { return std::holds_alternative<MatrixC>(rep_); }
    bool is_sparse() const {
        return std::holds_alternative<ScaledPermutation>(rep_) ||
               std::holds_alternative<Vector>(rep_);
    }

    Vector apply(const Vector& v) const;
    VectorC apply(const VectorC& v) const;

    /// Dense materialization; checks the memory budget first.
    Matrix to_dense() const;          // throws for complex reps
    MatrixC to_dense_complex() const;

    LinearOperator multiply(const LinearOperator& rhs) const;
    LinearOperator transpose() const;
    Complex trace() const;
    double spectral_norm() const;

    /// Binary-free JSON: dims plus nonzero triplets [row, col, value] (value is
    /// [re, im] in the complex case). Basis conventions are documented where
    /// the operators are built.
    nlohmann::json to_json(double drop_below = 0.0) const;

private:
    LinearOperator() = default;
    std::variant<Matrix, MatrixC, ScaledPermutation, Vector> rep_;  // Vector = diagonal
};

/// Largest singular value of a dense matrix (exact dense path).
double spectral_norm_dense(const Matrix& a);
double spectral_norm_dense(const MatrixC& a);

/// Largest eigenvalue of a symmetric PSD operator given by its action,
/// via Lanczos with full reorthogonalization.
double largest_eigenvalue_sym(Index dim, const std::function<void(const Vector&, Vector&)>& apply_a,
                              double rel_tol = 1e-10, int max_iter = 600, unsigned seed = 7);

/// Spectral norm of an operator given by its action and the action of its
/// transpose: sqrt of the largest eigenvalue of A^T A.
double spectral_norm_apply(Index rows, Index cols,
                           const std::function<void(const Vector&, Vector&)>& apply_a,
                           const std::function<void(const Vector&, Vector&)>& apply_at,
                           double rel_tol = 1e-10);

/// Dense-or-iterative dispatch at the documented 4000-dim threshold.
inline constexpr Index kDenseNormLimit = 4000;

/// Orthonormal column basis of the range of `generators` (columns = spanning
/// vectors); singular values below cutoff * sigma_max are treated as zero.
Matrix orthonormal_range(const Matrix& generators, double cutoff = 1e-10);

/// Orthonormal basis of the eigenvalue-1 eigenspace of a symmetric operator
/// whose spectrum is (numerically) contained in [0, 1].
Matrix eigenspace_at_one(const Matrix& sym, double tol = 1e-9);

Matrix kron(const Matrix& a, const Matrix& b);

nlohmann::json vector_to_json(const Vector& v, double drop_below = 0.0);

}  // namespace oraclelab
