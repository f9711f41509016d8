#include "oraclelab/simulate.hpp"

#include <cmath>
#include <random>

namespace oraclelab {

void AlgorithmSpec::validate() const {
    if (unitaries.empty()) throw InvalidArgument("algorithm needs at least U_0");
    if (mode == OracleMode::Permutation && n != m)
        throw InvalidArgument("permutation case needs equal register sizes");
    if (arith == OracleArithmetic::Xor && !is_power_of_two(n))
        throw InvalidArgument("xor arithmetic needs a power-of-two N");
    const Index a = dim_a();
    for (const auto& u : unitaries) {
        if (u.rows() != a || u.cols() != a)
            throw InvalidArgument("unitary has wrong dimension");
        const double err = (u.adjoint() * u - MatrixC::Identity(a, a)).cwiseAbs().maxCoeff();
        if (err > 1e-10) throw InvalidArgument("matrix is not unitary within 1e-10");
    }
}

namespace {

// (O ⊗ I_{W'}) in place: o <- o op f(i), per oracle-function block.
void apply_oracle(const FunctionSpace& space, const AlgorithmSpec& spec, VectorC& state) {
    const Index di = spec.dim_i(), do_ = spec.dim_o(), slab = spec.wdim * spec.dim_r();
    VectorC block(do_ * slab);
    for (Index f = 0; f < space.dim(); ++f) {
        Complex* base = state.data() + f * spec.dim_a();
        for (Index i = 0; i < di; ++i) {
            const int y = space.value_at(f, static_cast<int>(i));
            Complex* iblock = base + i * do_ * slab;
            for (Index o = 0; o < do_; ++o) {
                const Index o2 = spec.arith == OracleArithmetic::Xor
                                     ? (o ^ y)
                                     : (o + y) % spec.n;
                std::copy(iblock + o * slab, iblock + (o + 1) * slab, block.data() + o2 * slab);
            }
            std::copy(block.data(), block.data() + do_ * slab, iblock);
        }
    }
}

}  // namespace

SimulationTrace simulate(const FunctionSpace& space, const AlgorithmSpec& spec) {
    spec.validate();
    if (space.n() != spec.n || space.m() != spec.m || space.mode() != spec.mode)
        throw InvalidArgument("simulate: space and spec disagree");
    const Index dim_a = spec.dim_a();
    const Index total = space.dim() * dim_a;
    MemoryBudget::require(static_cast<std::size_t>(total) * sizeof(Complex) * 4,
                          "joint state simulation");

    // phi_0 = |v_empty> ⊗ |0...0>
    VectorC state = VectorC::Zero(total);
    const double amp = 1.0 / std::sqrt(static_cast<double>(space.dim()));
    for (Index f = 0; f < space.dim(); ++f) state[f * dim_a] = amp;

    SimulationTrace trace;
    trace.phi.push_back(state);
    for (int k = 0; k <= spec.queries(); ++k) {
        // psi_k = (I_F ⊗ U_k) phi_k, as one GEMM over the F-indexed columns
        Eigen::Map<MatrixC> mat(state.data(), dim_a, space.dim());
        mat = spec.unitaries[k] * mat;
        trace.psi.push_back(state);
        if (k == spec.queries()) break;
        apply_oracle(space, spec, state);
        trace.phi.push_back(state);
    }
    return trace;
}

double amplitude_on(const Matrix& proj_f, Index dim_a, const VectorC& state) {
    const Index dim_f = proj_f.rows();
    Eigen::Map<const MatrixC> mat(state.data(), dim_a, dim_f);
    return (mat * proj_f.transpose().cast<Complex>()).norm();  // Frobenius = vector 2-norm
}

double success_probability(const FunctionSpace& space, const AlgorithmSpec& spec,
                           const VectorC& psi_final) {
    const Index slab = spec.wdim * spec.dim_r();
    double p = 0.0;
    for (Index f = 0; f < space.dim(); ++f)
        for (Index i = 0; i < spec.dim_i(); ++i)
            for (Index o = 0; o < spec.dim_o(); ++o) {
                const Complex* base =
                    psi_final.data() + ((f * spec.dim_i() + i) * spec.dim_o() + o) * slab;
                for (Index w = 0; w < spec.wdim; ++w)
                    for (Index r = 0; r < spec.dim_r(); ++r)
                        if (space.value_at(f, static_cast<int>(r)) == 0)
                            p += std::norm(base[w * spec.dim_r() + r]);
            }
    return p;
}

namespace {

// real orthogonal matrix sending |0> to the uniform superposition
Matrix uniform_prep(int n) {
    Vector u = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    Vector w = u;
    w[0] -= 1.0;
    const double wn = w.squaredNorm();
    if (wn < 1e-15) return Matrix::Identity(n, n);
    return Matrix::Identity(n, n) - (2.0 / wn) * (w * w.transpose());
}

// lift an I-register operator to the algorithm registers
MatrixC on_input_register(const AlgorithmSpec& s, const Matrix& op) {
    const Index rest = s.dim_o() * s.wdim * s.dim_r();
    return kron(op, Matrix::Identity(rest, rest)).cast<Complex>();
}

}  // namespace

AlgorithmSpec grover_spec(int n, int kappa) {
    if (kappa % 2 != 0) throw InvalidArgument("grover_spec: kappa must be even");
    if (n < 2) throw InvalidArgument("grover_spec: N >= 2");
    if (!is_power_of_two(n))
        throw InvalidArgument("grover_spec: simulation needs a power-of-two N");

    AlgorithmSpec s;
    s.mode = OracleMode::Permutation;
    s.n = s.m = n;
    s.wdim = 1;
    s.arith = OracleArithmetic::Xor;
    s.name = "grover";

    const Index a = s.dim_a();
    const Matrix prep = uniform_prep(n);
    const Vector uniform = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    const Matrix diff = 2.0 * (uniform * uniform.transpose()) - Matrix::Identity(n, n);

    // phase flip on O = |0>
    VectorC phase = VectorC::Ones(a);
    for (Index i = 0; i < s.dim_i(); ++i)
        for (Index w = 0; w < s.wdim; ++w)
            for (Index r = 0; r < s.dim_r(); ++r)
                phase[((i * s.dim_o() + 0) * s.wdim + w) * s.dim_r() + r] = -1.0;

    // copy I into R: r <- r xor i
    MatrixC copy = MatrixC::Zero(a, a);
    for (Index i = 0; i < s.dim_i(); ++i)
        for (Index o = 0; o < s.dim_o(); ++o)
            for (Index w = 0; w < s.wdim; ++w)
                for (Index r = 0; r < s.dim_r(); ++r) {
                    const Index from = ((i * s.dim_o() + o) * s.wdim + w) * s.dim_r() + r;
                    const Index to = ((i * s.dim_o() + o) * s.wdim + w) * s.dim_r() + (r ^ i);
                    copy(to, from) = 1.0;
                }

    s.unitaries.push_back(on_input_register(s, prep));
    const int iterations = kappa / 2;
    for (int t = 1; t <= iterations; ++t) {
        s.unitaries.push_back(MatrixC(phase.asDiagonal()));
        MatrixC step = on_input_register(s, diff);
        if (t == iterations) step = copy * step;
        s.unitaries.push_back(std::move(step));
    }
    if (kappa == 0) s.unitaries[0] = copy * s.unitaries[0];
    return s;
}

double grover_success_formula(int n, int kappa) {
    if (kappa % 2 != 0) throw InvalidArgument("grover formula: kappa must be even");
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
    const double s = std::sin((1.0 + kappa) * theta);
    return s * s;
}

AlgorithmSpec random_spec(OracleMode mode, int n, int m, int kappa, Index wdim,
                          std::uint64_t seed) {
    AlgorithmSpec s;
    s.mode = mode;
    s.n = n;
    s.m = mode == OracleMode::Permutation ? n : m;
    s.wdim = wdim;
    s.arith = OracleArithmetic::ModAdd;
    s.name = "random-" + std::to_string(seed);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Index a = s.dim_a();
    for (int k = 0; k <= kappa; ++k) {
        MatrixC g(a, a);
        for (Index i = 0; i < a; ++i)
            for (Index j = 0; j < a; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
        Eigen::HouseholderQR<MatrixC> qr(g);
        MatrixC q = qr.householderQ() * MatrixC::Identity(a, a);
        // fix the phase ambiguity so the spec is a pure function of the seed
        const MatrixC rmat = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Index j = 0; j < a; ++j) {
            const Complex d = rmat(j, j);
            if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
        }
        s.unitaries.push_back(std::move(q));
    }
    return s;
}

AlgorithmSpec classify_then_query_spec(int n) {
    AlgorithmSpec s;
    s.mode = OracleMode::Permutation;
    s.n = s.m = n;
    s.wdim = 1;
    s.arith = OracleArithmetic::ModAdd;
    s.name = "classify-then-query";
    s.unitaries.push_back(on_input_register(s, uniform_prep(n)));
    const Index a = s.dim_a();
    s.unitaries.push_back(MatrixC::Identity(a, a));
    return s;
}

}  // namespace oraclelab
