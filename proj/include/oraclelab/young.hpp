#pragma once

// Exact integer combinatorics of Young diagrams: enumeration, hooks, Specht
// dimensions, branching, horizontal-strip additions, box distances, and
// Murnaghan-Nakayama characters of the symmetric group.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oraclelab/common.hpp"

namespace oraclelab {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// A partition of a non-negative integer, drawn as left-aligned rows of boxes.
/// Rows are weakly decreasing positive integers; the empty diagram is valid.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);

    /// Parse a comma-separated row list, e.g. "6,3,2". "" is the empty diagram.
    static YoungDiagram parse(const std::string& text);
    std::string to_string() const;

    int box_count() const { return box_count_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    /// Row length, 1-based; 0 for rows below the diagram.
    int row(int i) const;
    const std::vector<int>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    /// Box membership, 1-based (row, col).
    bool contains(int row, int col) const;

    /// The diagram formed by the rows below the first one.
    YoungDiagram below_first_row() const;

    bool operator==(const YoungDiagram& o) const { return rows_ == o.rows_; }
    bool operator!=(const YoungDiagram& o) const { return rows_ != o.rows_; }
    /// Lexicographic-descending order: larger first rows sort earlier.
    bool operator<(const YoungDiagram& o) const;

private:
    std::vector<int> rows_;
    int box_count_ = 0;
};

/// All partitions of m, each exactly once, in lexicographic descending order.
std::vector<YoungDiagram> enumerate_partitions(int m);

YoungDiagram transpose(const YoungDiagram& rho);

/// Hook length of a box (1-based): arm + leg + 1. Throws if the box is outside.
int hook_length(const YoungDiagram& rho, int row, int col);

/// Product of all hook lengths.
BigInt hook_product(const YoungDiagram& rho);

/// Dimension of the Specht module: |rho|! / h(rho), exact.
BigInt dim_specht(const YoungDiagram& rho);

/// Product of the hook lengths of the first row; 1 for the empty diagram.
BigInt h1(const YoungDiagram& rho);

/// All diagrams obtained by removing exactly one box (empty for the empty diagram).
std::vector<YoungDiagram> branch_down(const YoungDiagram& rho);

/// All diagrams of m = |rho|+1 boxes obtained by adding exactly one box.
std::vector<YoungDiagram> branch_up(const YoungDiagram& rho, int m);

/// All ell-box diagrams obtained from xi by adding at most one box per column
/// (new columns allowed); the Littlewood-Richardson special case.
std::vector<YoungDiagram> lambda_plus(const YoungDiagram& xi, int ell);

/// Manhattan distance |i-i'| + |j-j'| between two boxes.
int box_distance(std::pair<int, int> b1, std::pair<int, int> b2);

/// A diagram (N - ell - k, theta) with the first row treated specially:
/// `tail` is theta (k boxes), `total_boxes` is N - ell, and the first row
/// holds the remaining boxes. Rejects tails that would not fit.
class BarDiagram {
public:
    BarDiagram(YoungDiagram tail, int total_boxes, int removed_points);

    const YoungDiagram& tail() const { return tail_; }
    int total_boxes() const { return total_boxes_; }
    int removed_points() const { return removed_points_; }
    int first_row() const { return total_boxes_ - tail_.box_count(); }

    YoungDiagram to_diagram() const;

    /// Whether (N - ell - k, theta) is a valid diagram.
    static bool valid(const YoungDiagram& tail, int total_boxes);

private:
    YoungDiagram tail_;
    int total_boxes_ = 0;
    int removed_points_ = 0;
};

/// Convenience: the diagram (N - ell - |theta|, theta), or nullopt if the
/// first row would be shorter than theta's first row.
std::optional<YoungDiagram> bar(const YoungDiagram& theta, int n, int ell);

/// Distance between the two boxes removed from theta_bar to obtain
/// rho_bar_star_star. Throws unless exactly two single-box removals work.
int diagram_pair_distance(const BarDiagram& theta_bar, const BarDiagram& rho_bar_star_star);

/// A conjugacy class of S_N, identified by its cycle type.
class ConjugacyClass {
public:
    explicit ConjugacyClass(YoungDiagram cycle_type);

    const YoungDiagram& cycle_type() const { return cycle_type_; }
    int n() const { return cycle_type_.box_count(); }
    /// Number of group elements in the class: N! / prod_i (i^{m_i} m_i!).
    BigInt size() const;
    /// Number of 1-cycles.
    int fixed_points() const;

private:
    YoungDiagram cycle_type_;
};

std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Irreducible character chi_rho on the class c, via the Murnaghan-Nakayama
/// recursion in exact integers. Characters of S_N are integer-valued.
BigInt character(const YoungDiagram& rho, const ConjugacyClass& c);

/// Character X_k of the action of S_N on k-permutations:
/// X_k(g) = C(fix(g), k) * k!.
BigInt perm_action_character(int k, const ConjugacyClass& c);

/// Class-function inner product <chi, chi'> = (1/N!) sum_c |c| chi(c) chi'(c),
/// summed over conjugacy classes. Must come out an exact integer.
BigInt class_inner_product(int n, const std::vector<BigInt>& chi1, const std::vector<BigInt>& chi2);

}  // namespace oraclelab
