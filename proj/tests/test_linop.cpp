#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/SVD>
#include <random>

#include "oraclelab/linear_operator.hpp"

using namespace oraclelab;

namespace {

std::mt19937_64 rng(42);

Matrix random_matrix(Index r, Index c) {
    std::normal_distribution<double> g;
    Matrix m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = g(rng);
    return m;
}

MatrixC random_cmatrix(Index r, Index c) {
    std::normal_distribution<double> g;
    MatrixC m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

LinearOperator random_permutation_op(Index n, bool signed_scales) {
    std::vector<Index> row(n);
    for (Index i = 0; i < n; ++i) row[i] = i;
    std::shuffle(row.begin(), row.end(), rng);
    Vector s = Vector::Ones(n);
    if (signed_scales)
        for (Index i = 0; i < n; ++i) s[i] = rng() % 2 ? 1.0 : -1.0;
    return LinearOperator::permutation(row, s);
}

}  // namespace

TEST_CASE("sparse forms agree with dense") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_permutation_op(8, true);
        const auto q = random_permutation_op(8, false);
        Vector d = random_matrix(8, 1).col(0);
        const auto diag = LinearOperator::diagonal(d);

        const Matrix pd = p.to_dense(), qd = q.to_dense(), dd = diag.to_dense();
        CHECK((p.multiply(q).to_dense() - pd * qd).cwiseAbs().maxCoeff() == 0.0);
        CHECK((p.multiply(diag).to_dense() - pd * dd).cwiseAbs().maxCoeff() == 0.0);
        CHECK((diag.multiply(p).to_dense() - dd * pd).cwiseAbs().maxCoeff() == 0.0);
        CHECK(p.trace().real() == doctest::Approx(pd.trace()).epsilon(1e-14));
        CHECK((p.transpose().to_dense() - pd.transpose()).cwiseAbs().maxCoeff() == 0.0);

        const Vector v = random_matrix(8, 1).col(0);
        CHECK((p.apply(v) - pd * v).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("permutation form keeps one nonzero per column") {
    const auto p = random_permutation_op(16, true);
    const Matrix d = p.to_dense();
    for (Index j = 0; j < d.cols(); ++j) {
        int nonzeros = 0;
        for (Index i = 0; i < d.rows(); ++i) nonzeros += d(i, j) != 0.0;
        CHECK(nonzeros == 1);
    }
    CHECK_THROWS_AS(LinearOperator::permutation({0, 1}, Vector::Zero(2)), InvalidArgument);
}

TEST_CASE("spectral norm matches an SVD oracle") {
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = random_matrix(30, 20);
        Eigen::BDCSVD<Matrix> svd(a);
        CHECK(spectral_norm_dense(a) ==
              doctest::Approx(svd.singularValues()[0]).epsilon(1e-10));
    }
    const MatrixC ac = random_cmatrix(15, 15);
    Eigen::BDCSVD<MatrixC> svdc(ac);
    CHECK(spectral_norm_dense(ac) == doctest::Approx(svdc.singularValues()[0]).epsilon(1e-10));
}

TEST_CASE("matrix-free norm matches dense") {
    const Matrix a = random_matrix(200, 150);
    const double dense = spectral_norm_dense(a);
    const double lanczos = spectral_norm_apply(
        a.rows(), a.cols(), [&](const Vector& v, Vector& out) { out.noalias() = a * v; },
        [&](const Vector& v, Vector& out) { out.noalias() = a.transpose() * v; });
    CHECK(lanczos == doctest::Approx(dense).epsilon(1e-9));
}

TEST_CASE("spectral norm properties") {
    // the five norm facts used throughout, exercised on random operators
    for (int trial = 0; trial < 10; ++trial) {
        const MatrixC phi = random_cmatrix(10, 10);
        const MatrixC psi = random_cmatrix(10, 10);

        // 1: ||phi|| = ||phi phi*||^(1/2)
        CHECK(spectral_norm_dense(phi) ==
              doctest::Approx(std::sqrt(spectral_norm_dense(MatrixC(phi * phi.adjoint()))))
                  .epsilon(1e-9));
        // 2: submultiplicativity
        CHECK(spectral_norm_dense(MatrixC(phi * psi)) <=
              spectral_norm_dense(phi) * spectral_norm_dense(psi) + 1e-12);

        // 3 & 4: orthogonal images (and coimages)
        MatrixC u = random_cmatrix(12, 12);
        Eigen::HouseholderQR<MatrixC> qr(u);
        const MatrixC q = qr.householderQ() * MatrixC::Identity(12, 12);
        const MatrixC u1 = q.leftCols(6), u2 = q.rightCols(6);
        const MatrixC a = u1 * random_cmatrix(6, 12);
        const MatrixC b = u2 * random_cmatrix(6, 12);
        CHECK(spectral_norm_dense(a) <= spectral_norm_dense(MatrixC(a + b)) + 1e-10);

        MatrixC v = random_cmatrix(12, 12);
        Eigen::HouseholderQR<MatrixC> qrv(v);
        const MatrixC qv = qrv.householderQ() * MatrixC::Identity(12, 12);
        const MatrixC a2 = u1 * random_cmatrix(6, 6) * qv.leftCols(6).adjoint();
        const MatrixC b2 = u2 * random_cmatrix(6, 6) * qv.rightCols(6).adjoint();
        CHECK(spectral_norm_dense(MatrixC(a2 + b2)) ==
              doctest::Approx(std::max(spectral_norm_dense(a2), spectral_norm_dense(b2)))
                  .epsilon(1e-9));

        // 5: commuting resolution of the identity
        const MatrixC d1 = random_cmatrix(5, 5), d2 = random_cmatrix(7, 7);
        MatrixC block = MatrixC::Zero(12, 12);
        block.topLeftCorner(5, 5) = d1;
        block.bottomRightCorner(7, 7) = d2;
        Matrix p1 = Matrix::Zero(12, 12), p2 = Matrix::Zero(12, 12);
        p1.topLeftCorner(5, 5).setIdentity();
        p2.bottomRightCorner(7, 7).setIdentity();
        const double lhs = spectral_norm_dense(block);
        const double rhs = std::max(spectral_norm_dense(MatrixC(block * p1.cast<Complex>())),
                                    spectral_norm_dense(MatrixC(block * p2.cast<Complex>())));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("orthonormal range drops null directions") {
    Matrix g(6, 3);
    g.col(0) = random_matrix(6, 1).col(0);
    g.col(1) = 2.0 * g.col(0);
    g.col(2) = random_matrix(6, 1).col(0);
    const Matrix basis = orthonormal_range(g);
    CHECK(basis.cols() == 2);
    CHECK((basis.transpose() * basis - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(orthonormal_range(Matrix::Zero(4, 2)).cols() == 0);
}

TEST_CASE("eigenspace at one recovers a projector's range") {
    const Matrix basis = orthonormal_range(random_matrix(9, 4));
    const Matrix proj = basis * basis.transpose();
    const Matrix rec = eigenspace_at_one(proj);
    CHECK(rec.cols() == 4);
    CHECK(spectral_norm_dense(Matrix(rec * rec.transpose() - proj)) < 1e-10);
}

TEST_CASE("kron acts factorwise") {
    const Matrix a = random_matrix(3, 3), b = random_matrix(4, 4);
    const Vector x = random_matrix(3, 1).col(0), y = random_matrix(4, 1).col(0);
    Vector xy(12), axby(12);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 4; ++j) {
            xy[i * 4 + j] = x[i] * y[j];
            axby[i * 4 + j] = (a * x)[i] * (b * y)[j];
        }
    CHECK((kron(a, b) * xy - axby).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("json export lists the nonzero triplets") {
    const auto p = random_permutation_op(5, true);
    const auto j = p.to_json();
    CHECK(j["rows"] == 5);
    CHECK(j["cols"] == 5);
    CHECK(j["entries"].size() == 5);

    Vector d(3);
    d << 1.0, 0.0, -2.0;
    const auto dj = LinearOperator::diagonal(d).to_json();
    CHECK(dj["entries"].size() == 2);  // zero diagonal entries are dropped
}

TEST_CASE("memory budget guards dense materialization") {
    const auto big = LinearOperator::identity(2048);
    const std::size_t old_cap = MemoryBudget::cap();
    MemoryBudget::set_cap(1 << 20);
    CHECK_THROWS_AS(big.to_dense(), CapacityError);
    MemoryBudget::set_cap(old_cap);
    CHECK(big.to_dense().rows() == 2048);
}
