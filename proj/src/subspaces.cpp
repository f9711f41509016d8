#include "oraclelab/subspaces.hpp"

#include <algorithm>

namespace oraclelab {

std::string to_string(SubspaceLabel label) {
    switch (label) {
        case SubspaceLabel::A: return "A";
        case SubspaceLabel::B: return "B";
        case SubspaceLabel::HbarLow: return "HbarLow";
        case SubspaceLabel::HbarHigh: return "HbarHigh";
        case SubspaceLabel::HLow: return "HLow";
        case SubspaceLabel::HHigh: return "HHigh";
        case SubspaceLabel::AAlt: return "AAlt";
    }
    return "?";
}

SubspaceBuilder::SubspaceBuilder(const FunctionSpace& space) : space_(space) {}

Matrix SubspaceBuilder::generators(int weight, bool require_zero, bool forbid_zero) {
    const auto assignments = all_assignments(space_, weight, require_zero, forbid_zero);
    Matrix g(space_.dim(), static_cast<Index>(assignments.size()));
    for (std::size_t i = 0; i < assignments.size(); ++i)
        g.col(static_cast<Index>(i)) = v_state(space_, assignments[i]);
    return g;
}

const SubspaceBasis& SubspaceBuilder::span(SubspaceLabel label, int k) {
    const auto key = std::make_pair(label, k);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    return cache_.emplace(key, build(label, k)).first->second;
}

Matrix SubspaceBuilder::span_projector(SubspaceLabel label, int k) {
    return span(label, k).projector();
}

SubspaceBasis SubspaceBuilder::build(SubspaceLabel label, int k) {
    const int max_weight = space_.mode() == OracleMode::Permutation ? space_.n() - 1 : space_.m();
    if (k < 0 || k > max_weight + 1)
        throw InvalidArgument("subspace weight out of range");

    SubspaceBasis basis;
    basis.label = label;
    basis.k = k;
    basis.source = "span";

    switch (label) {
        case SubspaceLabel::A:
            basis.vectors = orthonormal_range(generators(k, false, false));
            break;
        case SubspaceLabel::AAlt:
            basis.vectors = orthonormal_range(generators(k, false, true));
            break;
        case SubspaceLabel::B:
            basis.vectors = orthonormal_range(generators(k, true, false));
            break;
        case SubspaceLabel::HbarHigh: {
            if (k == 0) {
                basis.vectors = Matrix::Zero(space_.dim(), 0);
                break;
            }
            const Matrix pb = span_projector(SubspaceLabel::B, k);
            const Matrix pa = span_projector(SubspaceLabel::A, k - 1);
            basis.vectors = eigenspace_at_one(pb * (Matrix::Identity(space_.dim(), space_.dim()) - pa) * pb);
            break;
        }
        case SubspaceLabel::HbarLow: {
            const Matrix pa = span_projector(SubspaceLabel::A, k);
            // span of B_k together with A_{k-1}
            Matrix joint;
            if (k == 0) {
                joint = Matrix::Zero(space_.dim(), 0);
            } else {
                const Matrix gb = generators(k, true, false);
                const Matrix ga = generators(k - 1, false, false);
                joint = Matrix(space_.dim(), gb.cols() + ga.cols());
                joint << gb, ga;
            }
            const Matrix range = orthonormal_range(joint);
            const Matrix pba = range * range.transpose();
            basis.vectors = eigenspace_at_one(pa * (Matrix::Identity(space_.dim(), space_.dim()) - pba) * pa);
            break;
        }
        case SubspaceLabel::HLow:
        case SubspaceLabel::HHigh: {
            const SubspaceLabel piece =
                label == SubspaceLabel::HLow ? SubspaceLabel::HbarLow : SubspaceLabel::HbarHigh;
            std::vector<const SubspaceBasis*> pieces;
            Index total = 0;
            for (int kk = label == SubspaceLabel::HLow ? 0 : 1; kk <= k; ++kk) {
                pieces.push_back(&span(piece, kk));
                total += pieces.back()->dim();
            }
            Matrix joint(space_.dim(), total);
            Index at = 0;
            for (const auto* p : pieces) {
                joint.middleCols(at, p->dim()) = p->vectors;
                at += p->dim();
            }
            // the pieces are mutually orthogonal; the SVD pass just tidies up
            basis.vectors = orthonormal_range(joint);
            break;
        }
    }
    return basis;
}

namespace {

IrrepLabel full_label(const YoungDiagram& bar_diagram) {
    return IrrepLabel{bar_diagram, GroupSide::Both, {}};
}

IrrepLabel range_label(const YoungDiagram& diagram, std::vector<int> removed) {
    return IrrepLabel{diagram, GroupSide::Range, std::move(removed)};
}

/// thetas with at most `max_boxes` boxes whose bar diagram at (n, ell) exists.
std::vector<YoungDiagram> light_partitions(int max_boxes) {
    std::vector<YoungDiagram> out;
    for (int w = 0; w <= max_boxes; ++w)
        for (const auto& p : enumerate_partitions(w)) out.push_back(p);
    return out;
}

}  // namespace

Matrix irrep_projector(PermSpaceRep& rep, SubspaceLabel label, int k) {
    const int n = rep.n();
    Matrix sum = Matrix::Zero(rep.space().dim(), rep.space().dim());

    switch (label) {
        case SubspaceLabel::A:
        case SubspaceLabel::AAlt:  // the alternative span coincides with A_k
            for (const auto& theta : light_partitions(k))
                if (auto tb = bar(theta, n, 0)) sum += rep.projector(full_label(*tb));
            break;
        case SubspaceLabel::B:
            for (const auto& theta : light_partitions(k - 1))
                if (auto tb0 = bar(theta, n, 1)) sum += rep.projector(range_label(*tb0, {0}));
            break;
        case SubspaceLabel::HbarLow:
            for (const auto& theta : enumerate_partitions(k)) {
                const auto tb = bar(theta, n, 0);
                const auto tb0 = bar(theta, n, 1);
                if (tb && tb0)
                    sum += rep.combined({full_label(*tb), range_label(*tb0, {0})});
            }
            break;
        case SubspaceLabel::HbarHigh:
            for (const auto& theta : enumerate_partitions(k)) {
                const auto tb = bar(theta, n, 0);
                if (!tb) continue;
                for (const auto& rho : branch_down(theta)) {
                    const auto rb0 = bar(rho, n, 1);
                    if (rb0)
                        sum += rep.combined({full_label(*tb), range_label(*rb0, {0})});
                }
            }
            break;
        case SubspaceLabel::HLow:
            for (int kk = 0; kk <= k; ++kk) sum += irrep_projector(rep, SubspaceLabel::HbarLow, kk);
            break;
        case SubspaceLabel::HHigh:
            for (int kk = 1; kk <= k; ++kk) sum += irrep_projector(rep, SubspaceLabel::HbarHigh, kk);
            break;
    }
    return sum;
}

SubspaceBasis irrep_basis(PermSpaceRep& rep, SubspaceLabel label, int k) {
    SubspaceBasis basis;
    basis.label = label;
    basis.k = k;
    basis.source = "irrep";
    basis.vectors = eigenspace_at_one(irrep_projector(rep, label, k));
    return basis;
}

double span_vs_irrep_gap(SubspaceBuilder& spans, PermSpaceRep& rep, SubspaceLabel label, int k) {
    const Matrix p_span = spans.span_projector(label, k);
    const Matrix p_irrep = irrep_projector(rep, label, k);
    return spectral_norm_dense(Matrix(p_span - p_irrep));
}

double alt_space_gap(SubspaceBuilder& spans, int k) {
    return spectral_norm_dense(Matrix(spans.span_projector(SubspaceLabel::AAlt, k) -
                                      spans.span_projector(SubspaceLabel::A, k)));
}

Matrix phi_operator(const FunctionSpace& space, int k) {
    if (space.mode() != OracleMode::Permutation)
        throw InvalidArgument("phi_operator: permutation case only");
    const double scale = static_cast<double>(factorial(space.n() - k));
    Matrix phi = Matrix::Zero(space.dim(), space.dim());
    for (const auto& alpha : all_assignments(space, k)) {
        const Vector v = v_state(space, alpha);
        phi.noalias() += scale * (v * v.transpose());
    }
    return phi;
}

std::vector<PhiEigenvalue> phi_spectrum(PermSpaceRep& rep, int k) {
    const int n = rep.n();
    const Matrix phi = phi_operator(rep.space(), k);
    std::vector<PhiEigenvalue> out;
    for (const auto& lambda : enumerate_partitions(n)) {
        PhiEigenvalue e;
        e.lambda = lambda;
        const Matrix& p = rep.projector(full_label(lambda));
        const double d = static_cast<double>(dim_specht(lambda));
        e.computed = (phi * p).trace() / (d * d);
        const YoungDiagram tail = lambda.below_first_row();
        e.formula_applies = k < n / 2.0;
        e.formula = tail.box_count() <= k
                        ? static_cast<double>(h1(lambda)) /
                              static_cast<double>(factorial(k - tail.box_count()))
                        : 0.0;
        out.push_back(std::move(e));
    }
    return out;
}

double overlap_on_span(SubspaceBuilder& spans, SubspaceLabel label, int k,
                       const Assignment& alpha) {
    const Vector v = v_state(spans.space(), alpha);
    return (spans.span(label, k).vectors.transpose() * v).norm();
}

double overlap_on_fresh_slice(SubspaceBuilder& spans, int k, const Assignment& alpha) {
    const Vector v = v_state(spans.space(), alpha);
    const Matrix pa = spans.span_projector(SubspaceLabel::A, k);
    const Matrix prev = k == 0 ? Matrix::Zero(pa.rows(), pa.cols())
                               : spans.span_projector(SubspaceLabel::A, k - 1);
    return ((pa - prev) * v).norm();  // A_{k-1} ⊆ A_k, so the difference projects
}

BarOverlap overlap_on_bar_component(PermSpaceRep& rep, const YoungDiagram& theta,
                                    const Assignment& alpha) {
    const int n = rep.n();
    const int k = alpha.weight();
    if (theta.box_count() != k)
        throw InvalidArgument("overlap_on_bar_component: |theta| must equal |alpha|");
    const auto tb = bar(theta, n, 0);
    if (!tb) throw InvalidArgument("overlap_on_bar_component: bar diagram undefined");
    const Vector v = v_state(rep.space(), alpha);
    BarOverlap o;
    o.computed_sq = v.dot(rep.projector(full_label(*tb)) * v);
    o.formula_sq = static_cast<double>(dim_specht(*tb)) / static_cast<double>(binomial(n, k)) *
                   static_cast<double>(dim_specht(theta)) / static_cast<double>(factorial(k));
    return o;
}

}  // namespace oraclelab
