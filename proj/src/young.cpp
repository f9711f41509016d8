#include "oraclelab/young.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace oraclelab {

BigInt factorial(int n) {
    if (n < 0) throw InvalidArgument("factorial of negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step: r is C(n, i+1) * remaining
    }
    return r;
}

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1) throw InvalidArgument("diagram rows must be positive");
        if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
            throw InvalidArgument("diagram rows must be weakly decreasing");
        box_count_ += rows_[i];
    }
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
    std::vector<int> rows;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        rows.push_back(std::stoi(part));
    }
    return YoungDiagram(rows);
}

std::string YoungDiagram::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows_[i]);
    }
    return out;
}

int YoungDiagram::row(int i) const {
    if (i < 1) throw InvalidArgument("row index is 1-based");
    return i <= row_count() ? rows_[i - 1] : 0;
}

bool YoungDiagram::contains(int r, int c) const {
    return r >= 1 && c >= 1 && r <= row_count() && c <= rows_[r - 1];
}

YoungDiagram YoungDiagram::below_first_row() const {
    if (rows_.empty()) return {};
    return YoungDiagram(std::vector<int>(rows_.begin() + 1, rows_.end()));
}

bool YoungDiagram::operator<(const YoungDiagram& o) const {
    // lexicographic descending: (4) before (3,1) before (2,2) ...
    return std::lexicographical_compare(rows_.begin(), rows_.end(), o.rows_.begin(),
                                        o.rows_.end(), std::greater<int>());
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.push_back(YoungDiagram(acc));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        enumerate_rec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> enumerate_partitions(int m) {
    if (m < 0) throw InvalidArgument("cannot partition a negative integer");
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    enumerate_rec(m, m == 0 ? 1 : m, acc, out);
    return out;  // the recursion emits lexicographic descending order directly
}

YoungDiagram transpose(const YoungDiagram& rho) {
    if (rho.empty()) return {};
    std::vector<int> cols(rho.rows()[0], 0);
    for (int len : rho.rows())
        for (int j = 0; j < len; ++j) ++cols[j];
    return YoungDiagram(cols);
}

int hook_length(const YoungDiagram& rho, int row, int col) {
    if (!rho.contains(row, col)) throw InvalidArgument("box not in diagram");
    const YoungDiagram t = transpose(rho);
    return (rho.row(row) - col) + (t.row(col) - row) + 1;
}

BigInt hook_product(const YoungDiagram& rho) {
    BigInt h = 1;
    for (int i = 1; i <= rho.row_count(); ++i)
        for (int j = 1; j <= rho.row(i); ++j) h *= hook_length(rho, i, j);
    return h;
}

BigInt dim_specht(const YoungDiagram& rho) {
    return factorial(rho.box_count()) / hook_product(rho);
}

BigInt h1(const YoungDiagram& rho) {
    BigInt h = 1;
    for (int j = 1; j <= rho.row(1); ++j) h *= hook_length(rho, 1, j);
    return h;
}

std::vector<YoungDiagram> branch_down(const YoungDiagram& rho) {
    std::vector<YoungDiagram> out;
    const auto& rows = rho.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // a corner box: last box of row i, removable iff the next row is shorter
        if (i + 1 < rows.size() && rows[i] == rows[i + 1]) continue;
        std::vector<int> r = rows;
        if (--r[i] == 0) r.erase(r.begin() + i);
        out.push_back(YoungDiagram(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungDiagram> branch_up(const YoungDiagram& rho, int m) {
    if (m != rho.box_count() + 1) throw InvalidArgument("branch_up target must add one box");
    std::vector<YoungDiagram> out;
    const auto& rows = rho.rows();
    for (std::size_t i = 0; i <= rows.size(); ++i) {
        const int len = i < rows.size() ? rows[i] : 0;
        const int above = i == 0 ? m : rows[i - 1];
        if (len + 1 > above) continue;
        std::vector<int> r = rows;
        if (i < rows.size())
            ++r[i];
        else
            r.push_back(1);
        out.push_back(YoungDiagram(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Append rows i..end of eta interlacing with xi (add at most one box per column):
// xi_{i-1} >= eta_i >= xi_i for every row, with eta_1 unconstrained from above.
void lambda_plus_rec(const YoungDiagram& xi, int remaining, int row_idx, int upper,
                     std::vector<int>& acc, std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        // all remaining xi rows must already be exhausted
        if (xi.row(row_idx) == 0) out.push_back(YoungDiagram(acc));
        return;
    }
    const int lo = std::max(xi.row(row_idx), 1);
    for (int len = std::min(remaining, upper); len >= lo; --len) {
        // below-row feasibility: each later row i needs at least xi_i boxes
        int tail_min = 0;
        for (int i = row_idx + 1; i <= xi.row_count(); ++i) tail_min += xi.row(i);
        if (remaining - len < tail_min) continue;
        acc.push_back(len);
        lambda_plus_rec(xi, remaining - len, row_idx + 1, std::min(len, xi.row(row_idx)),
                        acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> lambda_plus(const YoungDiagram& xi, int ell) {
    if (ell < xi.box_count()) throw InvalidArgument("lambda_plus target is too small");
    std::vector<YoungDiagram> out;
    if (ell == 0) {
        out.push_back(YoungDiagram{});
        return out;
    }
    std::vector<int> acc;
    // row 1 of the result may extend arbitrarily far to the right
    lambda_plus_rec(xi, ell, 1, ell, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

int box_distance(std::pair<int, int> b1, std::pair<int, int> b2) {
    return std::abs(b1.first - b2.first) + std::abs(b1.second - b2.second);
}

BarDiagram::BarDiagram(YoungDiagram tail, int total_boxes, int removed_points)
    : tail_(std::move(tail)), total_boxes_(total_boxes), removed_points_(removed_points) {
    if (removed_points_ < 0 || removed_points_ > 2)
        throw InvalidArgument("bar diagrams remove at most two points");
    if (!valid(tail_, total_boxes_))
        throw InvalidArgument("bar diagram undefined: first row shorter than the tail");
}

bool BarDiagram::valid(const YoungDiagram& tail, int total_boxes) {
    const int first = total_boxes - tail.box_count();
    if (first < 0) return false;
    if (tail.empty()) return true;  // first row may be empty only for an empty tail
    return first >= tail.rows()[0];
}

YoungDiagram BarDiagram::to_diagram() const {
    const int first = first_row();
    if (first == 0) return tail_;
    std::vector<int> rows;
    rows.reserve(tail_.row_count() + 1);
    rows.push_back(first);
    for (int r : tail_.rows()) rows.push_back(r);
    return YoungDiagram(rows);
}

std::optional<YoungDiagram> bar(const YoungDiagram& theta, int n, int ell) {
    const int total = n - ell;
    if (total < theta.box_count()) return std::nullopt;
    if (!BarDiagram::valid(theta, total)) return std::nullopt;
    return BarDiagram(theta, total, ell).to_diagram();
}

int diagram_pair_distance(const BarDiagram& theta_bar, const BarDiagram& rho_bar_star_star) {
    const YoungDiagram big = theta_bar.to_diagram();
    const YoungDiagram small = rho_bar_star_star.to_diagram();
    if (big.box_count() != small.box_count() + 2)
        throw InvalidArgument("second diagram must have exactly two boxes fewer");

    std::vector<std::pair<int, int>> removed;
    const int rows = std::max(big.row_count(), small.row_count());
    for (int i = 1; i <= rows; ++i) {
        const int from = big.row(i), to = small.row(i);
        if (to > from) throw InvalidArgument("not obtainable by removals");
        for (int c = to + 1; c <= from; ++c) removed.push_back({i, c});
    }
    if (removed.size() != 2) throw InvalidArgument("not obtainable by two removals");
    return box_distance(removed[0], removed[1]);
}

ConjugacyClass::ConjugacyClass(YoungDiagram cycle_type) : cycle_type_(std::move(cycle_type)) {
    if (cycle_type_.box_count() == 0)
        throw InvalidArgument("conjugacy class needs a cycle type of N >= 1 boxes");
}

BigInt ConjugacyClass::size() const {
    // centralizer order z = prod_i i^{m_i} m_i!
    std::map<int, int> mult;
    for (int part : cycle_type_.rows()) ++mult[part];
    BigInt z = 1;
    for (auto [len, m] : mult) {
        for (int i = 0; i < m; ++i) z *= len;
        z *= factorial(m);
    }
    return factorial(n()) / z;
}

int ConjugacyClass::fixed_points() const {
    int f = 0;
    for (int part : cycle_type_.rows()) f += (part == 1);
    return f;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
    std::vector<ConjugacyClass> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(ConjugacyClass(p));
    return out;
}

namespace {

// Murnaghan-Nakayama on beta-numbers. Removing a border strip of length t
// means lowering one beta number by t onto a free slot; the strip height is
// the number of beta numbers jumped over, giving the sign.
BigInt mn_recurse(const std::vector<int>& rows, const std::vector<int>& parts,
                  std::size_t part_idx, std::map<std::string, BigInt>& memo) {
    if (part_idx == parts.size()) return 1;  // all boxes consumed

    std::string key;
    for (int r : rows) key += std::to_string(r) + ',';
    key += '/';
    for (std::size_t i = part_idx; i < parts.size(); ++i) key += std::to_string(parts[i]) + ',';
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int t = parts[part_idx];
    const int L = static_cast<int>(rows.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = rows[i] + (L - 1 - i);  // strictly decreasing

    BigInt total = 0;
    for (int i = 0; i < L; ++i) {
        const int target = beta[i] - t;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nrows;
        for (int j = 0; j < L; ++j) {
            const int len = nb[j] - (L - 1 - j);
            if (len > 0) nrows.push_back(len);
        }
        const BigInt sub = mn_recurse(nrows, parts, part_idx + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace

BigInt character(const YoungDiagram& rho, const ConjugacyClass& c) {
    if (rho.box_count() != c.n())
        throw InvalidArgument("character: diagram and class size mismatch");
    static std::map<std::string, BigInt> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    return mn_recurse(rho.rows(), c.cycle_type().rows(), 0, memo);
}

BigInt perm_action_character(int k, const ConjugacyClass& c) {
    if (k < 0 || k > c.n()) throw InvalidArgument("perm_action_character: k out of range");
    return binomial(c.fixed_points(), k) * factorial(k);
}

BigInt class_inner_product(int n, const std::vector<BigInt>& chi1,
                           const std::vector<BigInt>& chi2) {
    const auto classes = conjugacy_classes(n);
    if (chi1.size() != classes.size() || chi2.size() != classes.size())
        throw InvalidArgument("class_inner_product: wrong number of class values");
    BigInt sum = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        sum += classes[i].size() * chi1[i] * chi2[i];
    const BigInt order = factorial(n);
    if (sum % order != 0)
        throw InvalidArgument("class_inner_product: sum not divisible by the group order");
    return sum / order;
}

}  // namespace oraclelab
