#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oraclelab/perm_space.hpp"

using namespace oraclelab;

namespace {

std::mt19937_64 rng(7);

Perm random_perm(int n) {
    Perm p = perm_identity(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Assignment make_assignment(std::vector<std::pair<int, int>> pairs,
                           OracleMode mode = OracleMode::Permutation) {
    Assignment a;
    a.pairs = std::move(pairs);
    a.mode = mode;
    return a;
}

}  // namespace

TEST_CASE("permutation utilities") {
    const Perm p = random_perm(6), q = random_perm(6);
    CHECK(perm_compose(p, perm_inverse(p)) == perm_identity(6));
    const Perm pq = perm_compose(p, q);
    for (int x = 0; x < 6; ++x) CHECK(pq[x] == p[q[x]]);
    CHECK(cycle_type(perm_identity(5)) == YoungDiagram({1, 1, 1, 1, 1}));
    CHECK(cycle_type(perm_transposition(5, 1, 3)) == YoungDiagram({2, 1, 1, 1}));
    CHECK(perms_of_subset(5, {0, 2, 4}).size() == 6);
}

TEST_CASE("function index round trip") {
    const auto space = FunctionSpace::permutations(5);
    CHECK(space.dim() == 120);
    for (Index i = 0; i < space.dim(); ++i) CHECK(space.index_of(space.table_of(i)) == i);

    const auto fspace = FunctionSpace::functions(4, 3);
    CHECK(fspace.dim() == 64);
    for (Index i = 0; i < fspace.dim(); ++i) CHECK(fspace.index_of(fspace.table_of(i)) == i);
    CHECK(fspace.value_at(fspace.index_of({3, 1, 2}), 0) == 3);
    CHECK(fspace.value_at(fspace.index_of({3, 1, 2}), 2) == 2);
}

TEST_CASE("group action on bijections") {
    const Perm f = perm_identity(3);
    CHECK(act(perm_identity(3), perm_identity(3), f) == f);
    CHECK(act(perm_transposition(3, 0, 1), perm_identity(3), f) == Perm{1, 0, 2});

    for (int trial = 0; trial < 100; ++trial) {
        const Perm pi = random_perm(5), tau = random_perm(5), g = random_perm(5);
        CHECK(act(pi, perm_identity(5), act(perm_identity(5), tau, g)) ==
              act(perm_identity(5), tau, act(pi, perm_identity(5), g)));
    }
}

TEST_CASE("representation operators") {
    const auto space = FunctionSpace::permutations(4);
    const Perm id = perm_identity(4);

    const Matrix identity_op = rep_operator(space, id, id).to_dense();
    CHECK((identity_op - Matrix::Identity(24, 24)).cwiseAbs().maxCoeff() == 0.0);

    for (int trial = 0; trial < 50; ++trial) {
        const Perm p1 = random_perm(4), t1 = random_perm(4);
        const Perm p2 = random_perm(4), t2 = random_perm(4);
        const auto v1 = rep_operator(space, p1, t1);
        const auto v2 = rep_operator(space, p2, t2);
        // orthogonality
        const Matrix vd = v1.to_dense();
        CHECK((vd.transpose() * vd - Matrix::Identity(24, 24)).cwiseAbs().maxCoeff() == 0.0);
        // homomorphism
        const auto composed = rep_operator(space, perm_compose(p1, p2), perm_compose(t1, t2));
        CHECK((v1.multiply(v2).to_dense() - composed.to_dense()).cwiseAbs().maxCoeff() == 0.0);
        // the domain and range actions commute
        const auto dom = rep_operator(space, p1, id);
        const auto ran = rep_operator(space, id, t1);
        CHECK((dom.multiply(ran).to_dense() - ran.multiply(dom).to_dense())
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }

    // oracle: tr V_pi = number of f with f o pi^{-1} = f, zero unless pi = id
    const auto v_swap = rep_operator(space, perm_transposition(4, 0, 1), id);
    int fixed = 0;
    for (Index j = 0; j < space.dim(); ++j) {
        const auto f = space.table_of(j);
        Perm moved(4);
        const Perm pinv = perm_inverse(perm_transposition(4, 0, 1));
        for (int x = 0; x < 4; ++x) moved[x] = f[pinv[x]];
        fixed += moved == f;
    }
    CHECK(fixed == 0);
    CHECK(v_swap.trace().real() == doctest::Approx(0.0));
}

TEST_CASE("coordinate projectors") {
    const auto space5 = FunctionSpace::permutations(5);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            CHECK(xi_projector(space5, x, y).trace().real() == doctest::Approx(24.0));  // 4!

    const auto space4 = FunctionSpace::permutations(4);
    for (int x = 0; x < 4; ++x) {
        Vector sum = Vector::Zero(space4.dim());
        for (int y = 0; y < 4; ++y) sum += xi_diagonal(space4, x, y);
        CHECK((sum - Vector::Ones(space4.dim())).cwiseAbs().maxCoeff() == 0.0);
    }
    // permutation case only: the x-sum also resolves the identity
    for (int y = 0; y < 4; ++y) {
        Vector sum = Vector::Zero(space4.dim());
        for (int x = 0; x < 4; ++x) sum += xi_diagonal(space4, x, y);
        CHECK((sum - Vector::Ones(space4.dim())).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("spanning vectors") {
    const auto space3 = FunctionSpace::permutations(3);
    const Vector v_empty = v_state(space3, make_assignment({}));
    CHECK(v_empty.size() == 6);
    for (Index i = 0; i < 6; ++i)
        CHECK(v_empty[i] == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-14));

    // weight N-1 pins the bijection completely
    const Vector pinned = v_state(space3, make_assignment({{0, 1}, {1, 2}}));
    CHECK(pinned.cwiseAbs().maxCoeff() == doctest::Approx(1.0));
    CHECK(pinned.norm() == doctest::Approx(1.0));

    CHECK_THROWS_AS(v_state(space3, make_assignment({{0, 1}, {1, 1}})), InvalidArgument);

    // recursion: summing the one-step extensions scales by sqrt(N - |alpha|)
    const auto space4 = FunctionSpace::permutations(4);
    const auto alpha = make_assignment({{0, 0}, {1, 1}});  // weight 2 at N=4
    Vector sum = Vector::Zero(space4.dim());
    for (int y = 0; y < 4; ++y) {
        if (y == 0 || y == 1) continue;  // y already in the image
        auto ext = alpha;
        ext.pairs.push_back({2, y});
        sum += v_state(space4, ext);
    }
    const Vector lhs = std::sqrt(2.0) * v_state(space4, alpha);  // sqrt(N - k), k = 2
    CHECK((sum - lhs).cwiseAbs().maxCoeff() < 1e-12);

    // function case: the same recursion scales by sqrt(N)
    const auto fspace = FunctionSpace::functions(4, 2);
    const auto beta = make_assignment({{0, 2}}, OracleMode::Function);
    Vector fsum = Vector::Zero(fspace.dim());
    for (int y = 0; y < 4; ++y) {
        auto ext = beta;
        ext.pairs.push_back({1, y});
        fsum += v_state(fspace, ext);
    }
    CHECK((fsum - 2.0 * v_state(fspace, beta)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("projector action on spanning vectors, exhaustively") {
    // Xi_x^y |v_alpha>: fixed point, extension by 1/sqrt(N-k), or annihilation
    const auto space = FunctionSpace::permutations(4);
    for (int k = 0; k <= 2; ++k) {
        for (const auto& alpha : all_assignments(space, k)) {
            const Vector v = v_state(space, alpha);
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y) {
                    const Vector result = xi_diagonal(space, x, y).cwiseProduct(v);
                    bool in_alpha = false, clashes = false;
                    for (auto [ax, ay] : alpha.pairs) {
                        if (ax == x && ay == y) in_alpha = true;
                        if ((ax == x) != (ay == y)) clashes = true;
                    }
                    if (in_alpha) {
                        CHECK((result - v).cwiseAbs().maxCoeff() < 1e-14);
                    } else if (clashes) {
                        CHECK(result.cwiseAbs().maxCoeff() < 1e-14);
                    } else {
                        auto ext = alpha;
                        ext.pairs.push_back({x, y});
                        const Vector expected =
                            v_state(space, ext) / std::sqrt(static_cast<double>(4 - k));
                        CHECK((result - expected).cwiseAbs().maxCoeff() < 1e-14);
                    }
                }
        }
    }
}

TEST_CASE("extended oracle") {
    for (auto arith : {OracleArithmetic::Xor, OracleArithmetic::ModAdd}) {
        const auto space = FunctionSpace::permutations(4);
        const auto oracle = extended_oracle(space, arith);
        const Matrix od = oracle.to_dense();
        CHECK((od.transpose() * od - Matrix::Identity(od.rows(), od.cols()))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);

        // O |f, x, 0> = |f, x, f(x)>
        for (Index f = 0; f < space.dim(); ++f)
            for (int x = 0; x < 4; ++x) {
                Vector in = Vector::Zero(od.cols());
                in[(f * 4 + x) * 4 + 0] = 1.0;
                const Vector out = oracle.apply(in);
                CHECK(out[(f * 4 + x) * 4 + space.value_at(f, x)] == doctest::Approx(1.0));
            }

        if (arith == OracleArithmetic::Xor) {
            const auto twice = oracle.multiply(oracle);
            CHECK((twice.to_dense() - Matrix::Identity(od.rows(), od.cols()))
                      .cwiseAbs()
                      .maxCoeff() == 0.0);
        }
    }
    CHECK_THROWS_AS(extended_oracle(FunctionSpace::permutations(5), OracleArithmetic::Xor),
                    InvalidArgument);
}

TEST_CASE("success projector") {
    const auto space = FunctionSpace::permutations(4);
    const Index wdim = 3;
    const auto p = success_projector(space, wdim);
    const Matrix pd = p.to_dense();
    CHECK((pd * pd - pd).cwiseAbs().maxCoeff() == 0.0);
    CHECK((pd - pd.transpose()).cwiseAbs().maxCoeff() == 0.0);

    // basis states are kept exactly when f(r) = 0
    for (Index f = 0; f < space.dim(); ++f)
        for (Index w = 0; w < wdim; ++w)
            for (int r = 0; r < 4; ++r) {
                Vector e = Vector::Zero(pd.rows());
                e[(f * wdim + w) * 4 + r] = 1.0;
                const double kept = p.apply(e).norm();
                CHECK(kept == doctest::Approx(space.value_at(f, r) == 0 ? 1.0 : 0.0));
            }

    // perfectly correlated state: uniform over (f, r = f^{-1}(0))
    Vector good = Vector::Zero(pd.rows());
    for (Index f = 0; f < space.dim(); ++f) {
        const auto table = space.table_of(f);
        const int preimage =
            static_cast<int>(std::find(table.begin(), table.end(), 0) - table.begin());
        good[(f * wdim + 0) * 4 + preimage] = 1.0 / std::sqrt(static_cast<double>(space.dim()));
    }
    CHECK(good.dot(p.apply(good)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("assignment enumeration") {
    const auto space = FunctionSpace::permutations(4);
    CHECK(all_assignments(space, 0).size() == 1);
    CHECK(all_assignments(space, 1).size() == 16);       // 4 x-choices, 4 y-values
    CHECK(all_assignments(space, 2).size() == 72);       // C(4,2) * 4*3
    CHECK(all_assignments(space, 1, true).size() == 4);  // y = 0 forced
    CHECK(all_assignments(space, 1, false, true).size() == 12);

    const auto fspace = FunctionSpace::functions(3, 2);
    CHECK(all_assignments(fspace, 2).size() == 9);  // one x-set, 3^2 y-tuples
}
