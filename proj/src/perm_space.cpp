#include "oraclelab/perm_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace oraclelab {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw InvalidArgument("compose: size mismatch");
    Perm c(a.size());
    for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm inv(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) inv[a[x]] = static_cast<int>(x);
    return inv;
}

Perm perm_transposition(int n, int a, int b) {
    Perm p = perm_identity(n);
    std::swap(p[a], p[b]);
    return p;
}

YoungDiagram cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lens;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return YoungDiagram(lens);
}

std::vector<Perm> perms_of_subset(int n, const std::vector<int>& support) {
    std::vector<int> images = support;
    std::sort(images.begin(), images.end());
    std::vector<Perm> out;
    std::vector<int> arrangement = images;
    do {
        Perm p = perm_identity(n);
        for (std::size_t i = 0; i < images.size(); ++i) p[images[i]] = arrangement[i];
        out.push_back(std::move(p));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return out;
}

void Assignment::validate(int domain_size, int range_size) const {
    std::vector<bool> xs(domain_size, false), ys(range_size, false);
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= domain_size || y < 0 || y >= range_size)
            throw InvalidArgument("assignment: point out of range");
        if (xs[x]) throw InvalidArgument("assignment: repeated domain point");
        xs[x] = true;
        if (mode == OracleMode::Permutation) {
            if (ys[y]) throw InvalidArgument("assignment: repeated range point in permutation mode");
            ys[y] = true;
        }
    }
}

bool Assignment::maps_to(int y) const {
    for (auto [x, yy] : pairs)
        if (yy == y) return true;
    return false;
}

Perm act(const Perm& pi, const Perm& tau, const Perm& f) {
    return perm_compose(tau, perm_compose(f, perm_inverse(pi)));
}

FunctionSpace::FunctionSpace(OracleMode mode, int n, int m) : mode_(mode), n_(n), m_(m) {
    if (n < 1 || m < 1) throw InvalidArgument("oracle space needs positive sizes");
    if (mode_ == OracleMode::Permutation) {
        if (m_ != n_) throw InvalidArgument("permutation case needs |D| = |R|");
        dim_ = 1;
        for (int i = 2; i <= n_; ++i) dim_ *= i;
        MemoryBudget::require(static_cast<std::size_t>(dim_) * n_ * sizeof(int),
                              "bijection table");
        tables_.reserve(dim_);
        Perm p = perm_identity(n_);
        // lexicographic enumeration of tables equals Lehmer rank order
        do {
            tables_.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    } else {
        double d = std::pow(static_cast<double>(n_), m_);
        if (d > 1e7) throw CapacityError("function space too large");
        dim_ = 1;
        for (int i = 0; i < m_; ++i) dim_ *= n_;
    }
}

int FunctionSpace::value_at(Index f_idx, int x) const {
    if (mode_ == OracleMode::Permutation) return tables_[f_idx][x];
    Index v = f_idx;
    for (int i = 0; i < x; ++i) v /= n_;
    return static_cast<int>(v % n_);
}

Index FunctionSpace::index_of(const std::vector<int>& table) const {
    if (static_cast<int>(table.size()) != m_) throw InvalidArgument("index_of: wrong table size");
    if (mode_ == OracleMode::Permutation) {
        // Lehmer code
        Index rank = 0;
        Index fact = 1;
        for (int i = 2; i <= n_; ++i) fact *= i;
        for (int i = 0; i < n_; ++i) {
            fact /= (n_ - i);
            int smaller = 0;
            for (int j = i + 1; j < n_; ++j) smaller += (table[j] < table[i]);
            rank += smaller * fact;
        }
        return rank;
    }
    Index idx = 0;
    for (int x = m_ - 1; x >= 0; --x) idx = idx * n_ + table[x];
    return idx;
}

std::vector<int> FunctionSpace::table_of(Index f_idx) const {
    if (mode_ == OracleMode::Permutation) return tables_[f_idx];
    std::vector<int> t(m_);
    for (int x = 0; x < m_; ++x) {
        t[x] = static_cast<int>(f_idx % n_);
        f_idx /= n_;
    }
    return t;
}

bool FunctionSpace::agrees(Index f_idx, const Assignment& alpha) const {
    for (auto [x, y] : alpha.pairs)
        if (value_at(f_idx, x) != y) return false;
    return true;
}

LinearOperator rep_operator(const FunctionSpace& space, const Perm& pi, const Perm& tau) {
    if (space.mode() != OracleMode::Permutation)
        throw InvalidArgument("rep_operator: permutation case only");
    std::vector<Index> row(space.dim());
    const Perm pi_inv = perm_inverse(pi);
    for (Index j = 0; j < space.dim(); ++j) {
        const auto& f = space.table_of(j);
        Perm g(space.n());
        for (int x = 0; x < space.n(); ++x) g[x] = tau[f[pi_inv[x]]];
        row[j] = space.index_of(g);
    }
    return LinearOperator::permutation(std::move(row));
}

Vector xi_diagonal(const FunctionSpace& space, int x, int y) {
    if (x < 0 || x >= space.m() || y < 0 || y >= space.n())
        throw InvalidArgument("xi_projector: point out of range");
    Vector d(space.dim());
    for (Index j = 0; j < space.dim(); ++j) d[j] = space.value_at(j, x) == y ? 1.0 : 0.0;
    return d;
}

LinearOperator xi_projector(const FunctionSpace& space, int x, int y) {
    return LinearOperator::diagonal(xi_diagonal(space, x, y));
}

Vector v_state(const FunctionSpace& space, const Assignment& alpha) {
    alpha.validate(space.m(), space.n());
    if (alpha.mode != space.mode()) throw InvalidArgument("v_state: mode mismatch");
    Vector v = Vector::Zero(space.dim());
    for (Index j = 0; j < space.dim(); ++j)
        if (space.agrees(j, alpha)) v[j] = 1.0;
    const double norm = v.norm();  // sqrt((N-k)!) or sqrt(N^(M-k))
    if (norm == 0.0) throw InvalidArgument("v_state: no function agrees with the assignment");
    return v / norm;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

LinearOperator extended_oracle(const FunctionSpace& space, OracleArithmetic arith) {
    if (arith == OracleArithmetic::Xor && !is_power_of_two(space.n()))
        throw InvalidArgument("xor oracle needs a power-of-two range");
    const Index dim_i = space.m(), dim_o = space.n();
    const Index dim = space.dim() * dim_i * dim_o;
    std::vector<Index> row(dim);
    for (Index f = 0; f < space.dim(); ++f) {
        for (Index i = 0; i < dim_i; ++i) {
            const int y = space.value_at(f, static_cast<int>(i));
            for (Index o = 0; o < dim_o; ++o) {
                const Index o2 = arith == OracleArithmetic::Xor
                                     ? (o ^ y)
                                     : (o + y) % space.n();
                row[(f * dim_i + i) * dim_o + o] = (f * dim_i + i) * dim_o + o2;
            }
        }
    }
    return LinearOperator::permutation(std::move(row));
}

LinearOperator success_projector(const FunctionSpace& space, Index wdim) {
    const Index dim_r = space.m();
    Vector d(space.dim() * wdim * dim_r);
    for (Index f = 0; f < space.dim(); ++f)
        for (Index w = 0; w < wdim; ++w)
            for (Index r = 0; r < dim_r; ++r)
                d[(f * wdim + w) * dim_r + r] =
                    space.value_at(f, static_cast<int>(r)) == 0 ? 1.0 : 0.0;
    return LinearOperator::diagonal(d);
}

namespace {

void domain_subsets(int m, int k, int start, std::vector<int>& acc,
                    std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    for (int x = start; x < m; ++x) {
        acc.push_back(x);
        domain_subsets(m, k, x + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Assignment> all_assignments(const FunctionSpace& space, int weight,
                                        bool require_zero_in_image, bool forbid_zero_in_image) {
    if (weight < 0 || weight > space.m()) throw InvalidArgument("assignment weight out of range");
    std::vector<std::vector<int>> subsets;
    std::vector<int> acc;
    domain_subsets(space.m(), weight, 0, acc, subsets);

    std::vector<Assignment> out;
    std::vector<int> ys(weight, 0);
    for (const auto& xs : subsets) {
        // odometer over y-tuples; skip invalid ones afterwards
        std::fill(ys.begin(), ys.end(), 0);
        while (true) {
            bool ok = true;
            if (space.mode() == OracleMode::Permutation) {
                for (int i = 0; ok && i < weight; ++i)
                    for (int j = i + 1; j < weight; ++j)
                        if (ys[i] == ys[j]) {
                            ok = false;
                            break;
                        }
            }
            if (ok && require_zero_in_image)
                ok = std::find(ys.begin(), ys.end(), 0) != ys.end();
            if (ok && forbid_zero_in_image)
                ok = std::find(ys.begin(), ys.end(), 0) == ys.end();
            if (ok) {
                Assignment a;
                a.mode = space.mode();
                for (int i = 0; i < weight; ++i) a.pairs.push_back({xs[i], ys[i]});
                out.push_back(std::move(a));
            }
            int pos = weight - 1;
            while (pos >= 0 && ys[pos] == space.n() - 1) ys[pos--] = 0;
            if (pos < 0) break;
            ++ys[pos];
        }
    }
    return out;
}

}  // namespace oraclelab
