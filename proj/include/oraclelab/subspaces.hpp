#pragma once

// The chain of oracle subspaces A_k, B_k, Hbar_k^{low/high}, H_k^{low/high},
// built two independent ways: as spans of the |v_alpha> vectors, and (in the
// permutation case) as direct sums of isotypic components. Also the Gram-type
// operator Phi_k with its closed-form spectrum, and the overlap values of
// single |v_alpha> vectors on these spaces.

#include <map>
#include <optional>

#include "oraclelab/isotypic.hpp"
#include "oraclelab/linear_operator.hpp"
#include "oraclelab/perm_space.hpp"

namespace oraclelab {

enum class SubspaceLabel { A, B, HbarLow, HbarHigh, HLow, HHigh, AAlt };
std::string to_string(SubspaceLabel label);

struct SubspaceBasis {
    Matrix vectors;  // orthonormal columns spanning the subspace
    std::string source;
    SubspaceLabel label = SubspaceLabel::A;
    int k = 0;

    Index dim() const { return vectors.cols(); }
    Matrix projector() const { return vectors * vectors.transpose(); }
};

/// Span-route construction over one oracle space; bases cached per (label, k).
/// Intersections with complements are realized through projector algebra:
/// the eigenvalue-1 eigenspace of P_B (I - P_A) P_B.
class SubspaceBuilder {
public:
    explicit SubspaceBuilder(const FunctionSpace& space);

    const FunctionSpace& space() const { return space_; }
    const SubspaceBasis& span(SubspaceLabel label, int k);
    Matrix span_projector(SubspaceLabel label, int k);

private:
    SubspaceBasis build(SubspaceLabel label, int k);
    Matrix generators(int weight, bool require_zero, bool forbid_zero);

    FunctionSpace space_;
    std::map<std::pair<SubspaceLabel, int>, SubspaceBasis> cache_;
};

/// Irrep-route construction (permutation case): sums of isotypic projectors
/// per the bar-diagram decomposition of A_k and B_k.
Matrix irrep_projector(PermSpaceRep& rep, SubspaceLabel label, int k);
SubspaceBasis irrep_basis(PermSpaceRep& rep, SubspaceLabel label, int k);

/// || P_span - P_irrep || for one labelled space.
double span_vs_irrep_gap(SubspaceBuilder& spans, PermSpaceRep& rep, SubspaceLabel label, int k);

/// || P_{A_k^alt} - P_{A_k} ||; the two spans coincide in the permutation case.
double alt_space_gap(SubspaceBuilder& spans, int k);

/// Phi_k = (N-k)! sum_{|alpha|=k} |v_alpha><v_alpha| (permutation case).
Matrix phi_operator(const FunctionSpace& space, int k);

struct PhiEigenvalue {
    YoungDiagram lambda;
    double computed = 0.0;       // tr[Phi_k P_lambda] / d_lambda^2
    double formula = 0.0;        // h1(lambda) / (k - |lambda_{>=2}|)!  (or 0)
    bool formula_applies = true; // the closed form needs k < N/2
};
std::vector<PhiEigenvalue> phi_spectrum(PermSpaceRep& rep, int k);

/// Norm of the projection of one spanning vector onto a labelled space.
double overlap_on_span(SubspaceBuilder& spans, SubspaceLabel label, int k,
                       const Assignment& alpha);

/// Norm of the projection onto A_k ∩ A_{k-1}^perp (the fresh-weight slice).
double overlap_on_fresh_slice(SubspaceBuilder& spans, int k, const Assignment& alpha);

/// ||Pi_{theta_bar} |v_alpha>||^2 compared to its closed form
/// d_{theta_bar} d_theta / (C(N,k) k!)   for theta of exactly k = |alpha| boxes.
struct BarOverlap {
    double computed_sq = 0.0;
    double formula_sq = 0.0;
};
BarOverlap overlap_on_bar_component(PermSpaceRep& rep, const YoungDiagram& theta,
                                    const Assignment& alpha);

}  // namespace oraclelab
