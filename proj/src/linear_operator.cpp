#include "oraclelab/linear_operator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

namespace oraclelab {

LinearOperator LinearOperator::dense(Matrix m) {
    LinearOperator op;
    op.rep_ = std::move(m);
    return op;
}

LinearOperator LinearOperator::dense_complex(MatrixC m) {
    LinearOperator op;
    op.rep_ = std::move(m);
    return op;
}

LinearOperator LinearOperator::permutation(std::vector<Index> row_of_col, Vector scale) {
    if (static_cast<Index>(row_of_col.size()) != scale.size())
        throw InvalidArgument("scaled permutation: size mismatch");
    for (Index j = 0; j < scale.size(); ++j)
        if (scale[j] == 0.0) throw InvalidArgument("scaled permutation: zero column scale");
    LinearOperator op;
    op.rep_ = ScaledPermutation{std::move(row_of_col), std::move(scale)};
    return op;
}

LinearOperator LinearOperator::permutation(std::vector<Index> row_of_col) {
    Vector s = Vector::Ones(static_cast<Index>(row_of_col.size()));
    return permutation(std::move(row_of_col), std::move(s));
}

LinearOperator LinearOperator::diagonal(Vector d) {
    LinearOperator op;
    op.rep_ = std::move(d);
    return op;
}

LinearOperator LinearOperator::identity(Index n) { return diagonal(Vector::Ones(n)); }

Index LinearOperator::rows() const {
    if (auto* m = std::get_if<Matrix>(&rep_)) return m->rows();
    if (auto* m = std::get_if<MatrixC>(&rep_)) return m->rows();
    if (auto* p = std::get_if<ScaledPermutation>(&rep_))
        return static_cast<Index>(p->row_of_col.size());  // square by construction
    return std::get<Vector>(rep_).size();
}

Index LinearOperator::cols() const {
    if (auto* m = std::get_if<Matrix>(&rep_)) return m->cols();
    if (auto* m = std::get_if<MatrixC>(&rep_)) return m->cols();
    if (auto* p = std::get_if<ScaledPermutation>(&rep_))
        return static_cast<Index>(p->row_of_col.size());
    return std::get<Vector>(rep_).size();
}

Vector LinearOperator::apply(const Vector& v) const {
    if (v.size() != cols()) throw InvalidArgument("apply: dimension mismatch");
    if (auto* m = std::get_if<Matrix>(&rep_)) return *m * v;
    if (std::holds_alternative<MatrixC>(rep_))
        throw InvalidArgument("apply: complex operator on a real vector");
    if (auto* p = std::get_if<ScaledPermutation>(&rep_)) {
        Vector out = Vector::Zero(rows());
        for (Index j = 0; j < v.size(); ++j) out[p->row_of_col[j]] += p->scale[j] * v[j];
        return out;
    }
    return std::get<Vector>(rep_).cwiseProduct(v);
}

VectorC LinearOperator::apply(const VectorC& v) const {
    if (v.size() != cols()) throw InvalidArgument("apply: dimension mismatch");
    if (auto* m = std::get_if<Matrix>(&rep_)) return *m * v;
    if (auto* m = std::get_if<MatrixC>(&rep_)) return *m * v;
    if (auto* p = std::get_if<ScaledPermutation>(&rep_)) {
        VectorC out = VectorC::Zero(rows());
        for (Index j = 0; j < v.size(); ++j) out[p->row_of_col[j]] += p->scale[j] * v[j];
        return out;
    }
    return std::get<Vector>(rep_).cast<Complex>().cwiseProduct(v);
}

Matrix LinearOperator::to_dense() const {
    MemoryBudget::require(static_cast<std::size_t>(rows()) * cols() * sizeof(double),
                          "dense materialization");
    if (auto* m = std::get_if<Matrix>(&rep_)) return *m;
    if (std::holds_alternative<MatrixC>(rep_))
        throw InvalidArgument("to_dense: operator is complex");
    Matrix out = Matrix::Zero(rows(), cols());
    if (auto* p = std::get_if<ScaledPermutation>(&rep_)) {
        for (Index j = 0; j < cols(); ++j) out(p->row_of_col[j], j) = p->scale[j];
    } else {
        out.diagonal() = std::get<Vector>(rep_);
    }
    return out;
}

MatrixC LinearOperator::to_dense_complex() const {
    if (auto* m = std::get_if<MatrixC>(&rep_)) {
        MemoryBudget::require(static_cast<std::size_t>(rows()) * cols() * sizeof(Complex),
                              "dense materialization");
        return *m;
    }
    return to_dense().cast<Complex>();
}

LinearOperator LinearOperator::multiply(const LinearOperator& rhs) const {
    if (cols() != rhs.rows()) throw InvalidArgument("multiply: dimension mismatch");
    // sparse-with-sparse products stay sparse
    if (auto* p = std::get_if<ScaledPermutation>(&rep_)) {
        if (auto* q = std::get_if<ScaledPermutation>(&rhs.rep_)) {
            std::vector<Index> row(q->row_of_col.size());
            Vector s(rhs.cols());
            for (Index j = 0; j < rhs.cols(); ++j) {
                row[j] = p->row_of_col[q->row_of_col[j]];
                s[j] = p->scale[q->row_of_col[j]] * q->scale[j];
            }
            return permutation(std::move(row), std::move(s));
        }
        if (auto* d = std::get_if<Vector>(&rhs.rep_)) {
            std::vector<Index> row = p->row_of_col;
            Vector s = p->scale.cwiseProduct(*d);
            // diagonal zeros would break the one-nonzero invariant; fall back
            if ((s.array() != 0.0).all()) return permutation(std::move(row), std::move(s));
        }
    }
    if (auto* d = std::get_if<Vector>(&rep_)) {
        if (auto* q = std::get_if<ScaledPermutation>(&rhs.rep_)) {
            std::vector<Index> row = q->row_of_col;
            Vector s(rhs.cols());
            for (Index j = 0; j < rhs.cols(); ++j) s[j] = (*d)[q->row_of_col[j]] * q->scale[j];
            if ((s.array() != 0.0).all()) return permutation(std::move(row), std::move(s));
        }
        if (auto* e = std::get_if<Vector>(&rhs.rep_)) return diagonal(d->cwiseProduct(*e));
    }
    if (is_complex() || rhs.is_complex())
        return dense_complex(to_dense_complex() * rhs.to_dense_complex());
    return dense(to_dense() * rhs.to_dense());
}

LinearOperator LinearOperator::transpose() const {
    if (auto* m = std::get_if<Matrix>(&rep_)) return dense(m->transpose());
    if (auto* m = std::get_if<MatrixC>(&rep_)) return dense_complex(m->transpose());
    if (auto* p = std::get_if<ScaledPermutation>(&rep_)) {
        std::vector<Index> row(p->row_of_col.size());
        Vector s(p->scale.size());
        for (Index j = 0; j < s.size(); ++j) {
            row[p->row_of_col[j]] = j;
            s[p->row_of_col[j]] = p->scale[j];
        }
        return permutation(std::move(row), std::move(s));
    }
    return *this;  // diagonal
}

Complex LinearOperator::trace() const {
    if (rows() != cols()) throw InvalidArgument("trace of a non-square operator");
    if (auto* m = std::get_if<Matrix>(&rep_)) return Complex(m->trace(), 0.0);
    if (auto* m = std::get_if<MatrixC>(&rep_)) return m->trace();
    if (auto* p = std::get_if<ScaledPermutation>(&rep_)) {
        double t = 0;
        for (Index j = 0; j < cols(); ++j)
            if (p->row_of_col[j] == j) t += p->scale[j];
        return Complex(t, 0.0);
    }
    return Complex(std::get<Vector>(rep_).sum(), 0.0);
}

double LinearOperator::spectral_norm() const {
    if (auto* p = std::get_if<ScaledPermutation>(&rep_)) return p->scale.cwiseAbs().maxCoeff();
    if (auto* d = std::get_if<Vector>(&rep_))
        return d->size() == 0 ? 0.0 : d->cwiseAbs().maxCoeff();
    if (auto* m = std::get_if<MatrixC>(&rep_)) return spectral_norm_dense(*m);
    return spectral_norm_dense(std::get<Matrix>(rep_));
}

nlohmann::json LinearOperator::to_json(double drop_below) const {
    nlohmann::json entries = nlohmann::json::array();
    auto emit = [&](Index r, Index c, Complex v) {
        if (std::abs(v) <= drop_below) return;
        if (v.imag() == 0.0)
            entries.push_back({r, c, v.real()});
        else
            entries.push_back({r, c, nlohmann::json{v.real(), v.imag()}});
    };
    if (auto* p = std::get_if<ScaledPermutation>(&rep_)) {
        for (Index j = 0; j < cols(); ++j) emit(p->row_of_col[j], j, p->scale[j]);
    } else if (auto* d = std::get_if<Vector>(&rep_)) {
        for (Index j = 0; j < cols(); ++j) emit(j, j, (*d)[j]);
    } else if (auto* m = std::get_if<Matrix>(&rep_)) {
        for (Index c = 0; c < cols(); ++c)
            for (Index r = 0; r < rows(); ++r) emit(r, c, (*m)(r, c));
    } else {
        const MatrixC& mc = std::get<MatrixC>(rep_);
        for (Index c = 0; c < cols(); ++c)
            for (Index r = 0; r < rows(); ++r) emit(r, c, mc(r, c));
    }
    return nlohmann::json{{"rows", rows()}, {"cols", cols()}, {"entries", entries}};
}

double spectral_norm_dense(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    // sqrt of the top eigenvalue of the smaller Gram matrix; exact dense path
    if (std::min(a.rows(), a.cols()) <= kDenseNormLimit) {
        Matrix gram = a.rows() <= a.cols() ? Matrix(a * a.transpose()) : Matrix(a.transpose() * a);
        Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
        return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    }
    return spectral_norm_apply(
        a.rows(), a.cols(), [&](const Vector& v, Vector& out) { out.noalias() = a * v; },
        [&](const Vector& v, Vector& out) { out.noalias() = a.transpose() * v; });
}

double spectral_norm_dense(const MatrixC& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    MatrixC gram =
        a.rows() <= a.cols() ? MatrixC(a * a.adjoint()) : MatrixC(a.adjoint() * a);
    Eigen::SelfAdjointEigenSolver<MatrixC> es(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double largest_eigenvalue_sym(Index dim, const std::function<void(const Vector&, Vector&)>& apply_a,
                              double rel_tol, int max_iter, unsigned seed) {
    if (dim == 0) return 0.0;
    MemoryBudget::require(static_cast<std::size_t>(dim) * (max_iter + 2) * sizeof(double),
                          "Lanczos basis");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (Index i = 0; i < dim; ++i) v[i] = gauss(rng);
    v.normalize();

    std::vector<Vector> basis;
    std::vector<double> alpha, beta;
    Vector w(dim);
    double prev = 0.0;

    for (int it = 0; it < max_iter; ++it) {
        basis.push_back(v);
        apply_a(v, w);
        double a = v.dot(w);
        alpha.push_back(a);
        w -= a * v;
        if (!beta.empty()) w -= beta.back() * basis[basis.size() - 2];
        // full reorthogonalization keeps the small tridiagonal problem honest
        for (const Vector& b : basis) w -= b.dot(w) * b;
        const double nb = w.norm();

        // Rayleigh-Ritz on the tridiagonal matrix accumulated so far
        const int m = static_cast<int>(alpha.size());
        Matrix tri = Matrix::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            tri(i, i) = alpha[i];
            if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(tri, Eigen::EigenvaluesOnly);
        const double cur = es.eigenvalues().maxCoeff();

        if (nb < 1e-13 || static_cast<Index>(m) >= dim) return std::max(cur, 0.0);
        if (it > 4 && std::abs(cur - prev) <= rel_tol * std::max(1.0, std::abs(cur)))
            return std::max(cur, 0.0);
        prev = cur;
        beta.push_back(nb);
        v = w / nb;
    }
    return std::max(prev, 0.0);
}

double spectral_norm_apply(Index rows, Index cols,
                           const std::function<void(const Vector&, Vector&)>& apply_a,
                           const std::function<void(const Vector&, Vector&)>& apply_at,
                           double rel_tol) {
    Vector mid(rows);
    auto gram = [&](const Vector& v, Vector& out) {
        apply_a(v, mid);
        apply_at(mid, out);
    };
    return std::sqrt(std::max(0.0, largest_eigenvalue_sym(cols, gram, rel_tol)));
}

Matrix orthonormal_range(const Matrix& generators, double cutoff) {
    if (generators.cols() == 0 || generators.rows() == 0)
        return Matrix::Zero(generators.rows(), 0);
    Eigen::BDCSVD<Matrix> svd(generators, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0) return Matrix::Zero(generators.rows(), 0);
    Index rank = 0;
    while (rank < sv.size() && sv[rank] > cutoff * sv[0]) ++rank;
    return svd.matrixU().leftCols(rank);
}

Matrix eigenspace_at_one(const Matrix& sym, double tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    const auto& ev = es.eigenvalues();
    Index count = 0;
    for (Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev[i] - 1.0) <= tol) ++count;
    Matrix out(sym.rows(), count);
    Index k = 0;
    for (Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev[i] - 1.0) <= tol) out.col(k++) = es.eigenvectors().col(i);
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

nlohmann::json vector_to_json(const Vector& v, double drop_below) {
    nlohmann::json entries = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) > drop_below) entries.push_back({i, v[i]});
    return nlohmann::json{{"dim", v.size()}, {"entries", entries}};
}

}  // namespace oraclelab
