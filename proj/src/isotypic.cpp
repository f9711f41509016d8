#include "oraclelab/isotypic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>
#include <random>

namespace oraclelab {

std::string to_string(GroupSide side) {
    switch (side) {
        case GroupSide::Domain: return "domain";
        case GroupSide::Range: return "range";
        case GroupSide::Both: return "both";
    }
    return "?";
}

std::string IrrepLabel::key() const {
    std::string k = to_string(side) + ":" + diagram.to_string() + ":";
    for (int p : removed) k += std::to_string(p) + ",";
    return k;
}

void IrrepLabel::validate(int n) const {
    if (static_cast<int>(removed.size()) > 2)
        throw InvalidArgument("irrep label: at most two removed points");
    if (diagram.box_count() != n - static_cast<int>(removed.size()))
        throw InvalidArgument("irrep label: diagram must have N - |removed| boxes");
    for (std::size_t i = 0; i < removed.size(); ++i) {
        if (removed[i] < 0 || removed[i] >= n)
            throw InvalidArgument("irrep label: removed point out of range");
        for (std::size_t j = i + 1; j < removed.size(); ++j)
            if (removed[i] == removed[j])
                throw InvalidArgument("irrep label: removed points must be distinct");
    }
    if (side == GroupSide::Both && !removed.empty())
        throw InvalidArgument("irrep label: side 'both' allows no removed points");
}

PermSpaceRep::PermSpaceRep(int n) : space_(FunctionSpace::permutations(n)) {}

std::vector<Index> PermSpaceRep::action_rows(const Perm& pi, const Perm& tau) const {
    const Perm pi_inv = perm_inverse(pi);
    std::vector<Index> rows(space_.dim());
    Perm g(space_.n());
    for (Index j = 0; j < space_.dim(); ++j) {
        const auto& f = space_.table_of(j);
        for (int x = 0; x < space_.n(); ++x) g[x] = tau[f[pi_inv[x]]];
        rows[j] = space_.index_of(g);
    }
    return rows;
}

namespace {

// cycle type of p restricted to `support` (p must fix the complement)
YoungDiagram support_cycle_type(const Perm& p, const std::vector<int>& support) {
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (int s : support) {
        if (seen[s]) continue;
        int len = 0;
        for (int x = s; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return YoungDiagram(lens);
}

}  // namespace

Matrix PermSpaceRep::build_char_projector(const IrrepLabel& label) const {
    const int n = space_.n();
    label.validate(n);
    MemoryBudget::require(static_cast<std::size_t>(space_.dim()) * space_.dim() * sizeof(double),
                          "isotypic projector");

    std::vector<int> support;
    for (int p = 0; p < n; ++p)
        if (std::find(label.removed.begin(), label.removed.end(), p) == label.removed.end())
            support.push_back(p);

    // Character values only depend on the class; tabulate once per cycle type.
    const int sub_n = static_cast<int>(support.size());
    std::unordered_map<std::string, double> chi;
    for (const auto& cls : conjugacy_classes(sub_n))
        chi[cls.cycle_type().to_string()] =
            static_cast<double>(character(label.diagram, cls));

    const double dim_rho = static_cast<double>(dim_specht(label.diagram));
    const double order = static_cast<double>(factorial(sub_n));

    Matrix out = Matrix::Zero(space_.dim(), space_.dim());
    const Perm id = perm_identity(n);
    for (const Perm& h : perms_of_subset(n, support)) {
        const double c = dim_rho / order * chi[support_cycle_type(h, support).to_string()];
        if (c == 0.0) continue;
        // Side Both uses the range action; it equals the domain-side projector
        // for full-size diagrams (the V decomposition pairs lambda with lambda).
        const auto rows = label.side == GroupSide::Domain ? action_rows(h, id)
                                                          : action_rows(id, h);
        for (Index j = 0; j < space_.dim(); ++j) out(rows[j], j) += c;
    }
    return out;
}

const Matrix& PermSpaceRep::projector(const IrrepLabel& label) {
    const std::string key = label.key();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Matrix built = build_char_projector(label);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(key, std::move(built)).first->second;
}

Matrix PermSpaceRep::projector_tableaux(const IrrepLabel& label) const {
    const int n = space_.n();
    label.validate(n);
    std::vector<int> support;
    for (int p = 0; p < n; ++p)
        if (std::find(label.removed.begin(), label.removed.end(), p) == label.removed.end())
            support.push_back(p);
    const int boxes = label.diagram.box_count();

    const Perm id = perm_identity(n);
    auto action_dense = [&](const Perm& h) {
        const auto rows = label.side == GroupSide::Domain ? action_rows(h, id)
                                                          : action_rows(id, h);
        Matrix m = Matrix::Zero(space_.dim(), space_.dim());
        for (Index j = 0; j < space_.dim(); ++j) m(rows[j], j) = 1.0;
        return m;
    };
    // E_B^± = sum over the subgroup permuting B, optionally signed by sgn(h)
    auto group_sum = [&](const std::vector<int>& block, bool signed_sum) {
        Matrix m = Matrix::Zero(space_.dim(), space_.dim());
        for (const Perm& h : perms_of_subset(n, block)) {
            double s = 1.0;
            if (signed_sum) {
                const int cycles = support_cycle_type(h, block).row_count();
                s = (static_cast<int>(block.size()) - cycles) % 2 ? -1.0 : 1.0;
            }
            m += s * action_dense(h);
        }
        return m;
    };

    const double dim_rho = static_cast<double>(dim_specht(label.diagram));
    const double order = static_cast<double>(factorial(boxes));
    const YoungDiagram shape = label.diagram;
    const YoungDiagram shape_t = transpose(shape);

    Matrix total = Matrix::Zero(space_.dim(), space_.dim());
    std::vector<int> fill = support;  // row-major tableau filling
    std::sort(fill.begin(), fill.end());
    do {
        // rows and columns of this tableau
        Matrix eplus = Matrix::Identity(space_.dim(), space_.dim());
        int offset = 0;
        for (int i = 1; i <= shape.row_count(); ++i) {
            std::vector<int> row_set(fill.begin() + offset, fill.begin() + offset + shape.row(i));
            offset += shape.row(i);
            eplus = group_sum(row_set, false) * eplus;
        }
        Matrix eminus = Matrix::Identity(space_.dim(), space_.dim());
        for (int j = 1; j <= shape_t.row_count(); ++j) {
            std::vector<int> col_set;
            int off = 0;
            for (int i = 1; i <= shape.row_count(); ++i) {
                if (shape.row(i) >= j) col_set.push_back(fill[off + j - 1]);
                off += shape.row(i);
            }
            eminus = group_sum(col_set, true) * eminus;
        }
        total += eminus * eplus;  // P_T up to the (dim/|A|!) factor
    } while (std::next_permutation(fill.begin(), fill.end()));

    // Pi = (d/|A|!) sum_T P_T, with P_T = (d/|A|!) E^-_col E^+_row.
    // The same projector also arises from standard tableaux alone without the
    // normalization; that variant is untested here.
    return (dim_rho / order) * (dim_rho / order) * total;
}

const Matrix& PermSpaceRep::combined(const std::vector<IrrepLabel>& labels, double commute_tol) {
    if (labels.empty()) throw InvalidArgument("combined: need at least one label");
    std::string key = "product:";
    for (const auto& l : labels) key += l.key() + "|";
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    std::vector<const Matrix*> parts;
    for (const auto& l : labels) parts.push_back(&projector(l));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            const Matrix comm = (*parts[i]) * (*parts[j]) - (*parts[j]) * (*parts[i]);
            const double nrm = spectral_norm_dense(comm);
            if (nrm > commute_tol)
                throw InvalidArgument("combined: projectors for " + labels[i].key() + " and " +
                                      labels[j].key() + " do not commute (norm " +
                                      std::to_string(nrm) + ")");
        }
    Matrix prod = *parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) prod = prod * (*parts[i]);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(key, std::move(prod)).first->second;
}

namespace {

// sign convention helper for group_sum is above; nothing else local

double trace_of(const Matrix& a, const Matrix& b) { return (a * b).trace(); }

}  // namespace

SchurOverlapReport verify_schur_overlap(PermSpaceRep& rep, const YoungDiagram& lambda,
                                        int trials, double tol, unsigned seed) {
    const int n = rep.n();
    const int d = static_cast<int>(dim_specht(lambda));
    if (d < 3) throw InvalidArgument("verify_schur_overlap: multiplicity too small");

    // Range-side isotypic component; multiplicity equals dim lambda.
    IrrepLabel label{lambda, GroupSide::Range, {}};
    const Matrix& pi_iso = rep.projector(label);
    const Matrix basis = eigenspace_at_one(pi_iso);  // dim F x (m*d)
    const Index comp = basis.cols();
    const int mult = static_cast<int>(comp) / d;
    if (mult < 3) throw InvalidArgument("verify_schur_overlap: multiplicity too small");

    // Range action restricted to the component.
    std::vector<Matrix> action;
    const Perm id = perm_identity(n);
    std::vector<int> all_points(n);
    std::iota(all_points.begin(), all_points.end(), 0);
    for (const Perm& tau : perms_of_subset(n, all_points)) {
        const auto rows = rep.action_rows(id, tau);
        Matrix vb(basis.rows(), comp);
        for (Index c = 0; c < comp; ++c)
            for (Index r = 0; r < basis.rows(); ++r) vb(rows[r], c) = basis(r, c);
        action.push_back(basis.transpose() * vb);
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_matrix = [&](bool symmetric) {
        Matrix g(comp, comp);
        for (Index i = 0; i < comp; ++i)
            for (Index j = 0; j < comp; ++j) g(i, j) = gauss(rng);
        if (symmetric) g = Matrix(0.5 * (g + g.transpose()));
        return g;
    };
    auto average = [&](const Matrix& g) {
        Matrix m = Matrix::Zero(comp, comp);
        for (const Matrix& a : action) m += a * g * a.transpose();
        return Matrix(m / static_cast<double>(action.size()));
    };

    // Canonical tensor alignment: eigenspaces of an averaged random symmetric
    // matrix are the instances; a second averaged matrix transports the
    // canonical instance basis to every other instance consistently.
    const Matrix m_avg = average(random_matrix(true));
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_avg);
    std::vector<std::pair<double, Index>> evs;
    for (Index i = 0; i < comp; ++i) evs.push_back({es.eigenvalues()[i], i});
    std::sort(evs.begin(), evs.end());
    std::vector<Matrix> instances;  // comp x d each
    for (int i = 0; i < mult; ++i) {
        Matrix inst(comp, d);
        for (int j = 0; j < d; ++j) inst.col(j) = es.eigenvectors().col(evs[i * d + j].second);
        // degeneracy sanity: the d eigenvalues of one instance agree
        if (std::abs(evs[i * d + d - 1].first - evs[i * d].first) > 1e-7)
            throw InvalidArgument("verify_schur_overlap: eigenvalue clustering failed");
        instances.push_back(std::move(inst));
    }

    const Matrix transport = average(random_matrix(false));
    Matrix aligned = Matrix::Zero(comp, comp);  // columns grouped (instance, j)
    for (int i = 0; i < mult; ++i) {
        // W = U_i^T T U_1 is a scalar multiple of an orthogonal map; divide out
        Matrix w = instances[i].transpose() * transport * instances[0];
        const double scale = w.col(0).norm();
        if (scale < 1e-9) throw InvalidArgument("verify_schur_overlap: transport degenerated");
        Matrix cols = instances[i] * (w / scale);
        for (int j = 0; j < d; ++j) aligned.col(i * d + j) = cols.col(j);
    }

    auto instance_projector = [&](const Vector& u) {
        Matrix p = Matrix::Zero(comp, comp);
        for (int j = 0; j < d; ++j) {
            Vector col = Vector::Zero(comp);
            for (int i = 0; i < mult; ++i) col += u[i] * aligned.col(i * d + j);
            p += col * col.transpose();
        }
        return p;
    };
    auto random_unit = [&]() {
        Vector u(mult);
        for (int i = 0; i < mult; ++i) u[i] = gauss(rng);
        u.normalize();
        return u;
    };

    SchurOverlapReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const Matrix p = instance_projector(random_unit());
        const Matrix p1 = instance_projector(random_unit());
        const Matrix p2 = instance_projector(random_unit());
        const double lhs = (p * p1 * p * p2).trace();
        const double rhs = trace_of(p, p1) * trace_of(p, p2) / d;
        report.max_deviation = std::max(report.max_deviation, std::abs(lhs - rhs));
    }
    {
        // orthogonal instances: e_1 vs e_2 rotations never meet
        Vector u1 = Vector::Zero(mult), u2 = Vector::Zero(mult);
        u1[0] = 1.0;
        u2[1] = 1.0;
        const Matrix p = instance_projector(u1);
        const Matrix q = instance_projector(u2);
        report.orthogonal_case = std::abs((p * q * p * q).trace());
        const Matrix self = p;
        report.self_case_deviation =
            std::abs((self * self * self * self).trace() - self.trace() * self.trace() / d);
    }
    report.pass = report.max_deviation <= tol && report.orthogonal_case <= tol &&
                  report.self_case_deviation <= tol;
    return report;
}

}  // namespace oraclelab
