#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oraclelab/young.hpp"

using namespace oraclelab;

namespace {

// Test oracle: count standard Young tableaux by brute-force backtracking.
// Independent of the hook length formula.
int count_syt(const YoungDiagram& shape) {
    const int m = shape.box_count();
    if (m == 0) return 1;
    std::vector<std::vector<int>> grid(shape.row_count());
    for (int i = 0; i < shape.row_count(); ++i) grid[i].assign(shape.rows()[i], 0);

    int count = 0;
    auto place = [&](auto&& self, int value) -> void {
        if (value > m) {
            ++count;
            return;
        }
        for (int i = 0; i < shape.row_count(); ++i) {
            const int j = static_cast<int>(
                std::find(grid[i].begin(), grid[i].end(), 0) - grid[i].begin());
            if (j == static_cast<int>(grid[i].size())) continue;
            const bool row_ok = j == 0 || grid[i][j - 1] != 0;
            const bool col_ok = i == 0 || (j < static_cast<int>(grid[i - 1].size()) &&
                                           grid[i - 1][j] != 0);
            if (row_ok && col_ok) {
                grid[i][j] = value;
                self(self, value + 1);
                grid[i][j] = 0;
            }
        }
    };
    place(place, 1);
    return count;
}

// Test oracle: all ell-box diagrams containing xi with at most one extra box
// per column, found by filtering the full enumeration through transposes.
std::vector<YoungDiagram> lambda_plus_oracle(const YoungDiagram& xi, int ell) {
    std::vector<YoungDiagram> out;
    const YoungDiagram xit = transpose(xi);
    for (const auto& eta : enumerate_partitions(ell)) {
        const YoungDiagram etat = transpose(eta);
        bool ok = true;
        for (int j = 1; j <= std::max(etat.row_count(), xit.row_count()); ++j) {
            const int have = etat.row(j), base = xit.row(j);
            if (have < base || have > base + 1) ok = false;
        }
        if (ok) out.push_back(eta);
    }
    return out;
}

}  // namespace

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());

    const auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == YoungDiagram({4}));
    CHECK(p4[1] == YoungDiagram({3, 1}));
    CHECK(p4[2] == YoungDiagram({2, 2}));
    CHECK(p4[3] == YoungDiagram({2, 1, 1}));
    CHECK(p4[4] == YoungDiagram({1, 1, 1, 1}));

    // partition counts p(0..11) = 1,1,2,3,5,7,11,15,22,30,42,56
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56};
    for (int m = 0; m <= 11; ++m) {
        const auto parts = enumerate_partitions(m);
        CHECK(static_cast<int>(parts.size()) == expected[m]);
        CHECK(std::set<YoungDiagram>(parts.begin(), parts.end()).size() == parts.size());
    }
    const auto p11 = enumerate_partitions(11);
    CHECK(std::find(p11.begin(), p11.end(), YoungDiagram({6, 3, 2})) != p11.end());
}

TEST_CASE("diagram validation and serialization") {
    CHECK_THROWS_AS(YoungDiagram({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(YoungDiagram({3, 0}), InvalidArgument);
    CHECK(YoungDiagram::parse("6,3,2") == YoungDiagram({6, 3, 2}));
    CHECK(YoungDiagram::parse("") == YoungDiagram{});
    CHECK(YoungDiagram({6, 3, 2}).to_string() == "6,3,2");
    CHECK(YoungDiagram{}.to_string() == "");
}

TEST_CASE("transpose") {
    CHECK(transpose(YoungDiagram({6, 3, 2})) == YoungDiagram({3, 3, 2, 1, 1, 1}));
    CHECK(transpose(YoungDiagram({5})) == YoungDiagram({1, 1, 1, 1, 1}));
    CHECK(transpose(YoungDiagram{}) == YoungDiagram{});
    for (int m = 0; m <= 8; ++m)
        for (const auto& rho : enumerate_partitions(m)) CHECK(transpose(transpose(rho)) == rho);
}

TEST_CASE("hook lengths") {
    const YoungDiagram rho({6, 3, 2});
    CHECK(hook_length(rho, 1, 1) == 8);
    CHECK(hook_length(rho, 3, 2) == 1);
    CHECK(hook_length(YoungDiagram({1}), 1, 1) == 1);
    CHECK_THROWS_AS(hook_length(rho, 4, 1), InvalidArgument);
    CHECK_THROWS_AS(hook_length(rho, 1, 7), InvalidArgument);

    const std::vector<int> expected = {8, 7, 5, 3, 2, 1, 4, 3, 1, 2, 1};
    std::vector<int> hooks;
    for (int i = 1; i <= rho.row_count(); ++i)
        for (int j = 1; j <= rho.row(i); ++j) hooks.push_back(hook_length(rho, i, j));
    CHECK(hooks == expected);
}

TEST_CASE("Specht dimensions") {
    CHECK(dim_specht(YoungDiagram({6, 3, 2})) == 990);
    for (int m = 1; m <= 12; ++m) CHECK(dim_specht(YoungDiagram({m})) == 1);
    CHECK(dim_specht(YoungDiagram({2, 1})) == count_syt(YoungDiagram({2, 1})));

    // oracle: hook dimensions equal standard-tableaux counts
    for (int m = 0; m <= 6; ++m)
        for (const auto& rho : enumerate_partitions(m))
            CHECK(dim_specht(rho) == count_syt(rho));

    // sum of squared dimensions is the group order
    for (int n = 0; n <= 12; ++n) {
        BigInt sum = 0;
        for (const auto& lam : enumerate_partitions(n)) sum += dim_specht(lam) * dim_specht(lam);
        CHECK(sum == factorial(n));
    }

    // transpose symmetry
    for (int m = 0; m <= 10; ++m)
        for (const auto& rho : enumerate_partitions(m))
            CHECK(dim_specht(rho) == dim_specht(transpose(rho)));
}

TEST_CASE("first-row hook products") {
    CHECK(h1(YoungDiagram({6, 3, 2})) == 1680);  // 8*7*5*3*2*1
    for (int n = 1; n <= 8; ++n) CHECK(h1(YoungDiagram({n})) == factorial(n));
    CHECK(h1(YoungDiagram{}) == 1);
}

TEST_CASE("branching") {
    const auto down = branch_down(YoungDiagram({2, 1}));
    REQUIRE(down.size() == 2);
    CHECK(std::find(down.begin(), down.end(), YoungDiagram({2})) != down.end());
    CHECK(std::find(down.begin(), down.end(), YoungDiagram({1, 1})) != down.end());
    CHECK(branch_down(YoungDiagram{}).empty());

    const auto up = branch_up(YoungDiagram({1}), 2);
    REQUIRE(up.size() == 2);
    CHECK_THROWS_AS(branch_up(YoungDiagram({1}), 3), InvalidArgument);

    // branching consistency: d_lambda = sum of the dimensions one level down
    for (int m = 1; m <= 10; ++m)
        for (const auto& lam : enumerate_partitions(m)) {
            BigInt sum = 0;
            for (const auto& sig : branch_down(lam)) sum += dim_specht(sig);
            CHECK(sum == dim_specht(lam));
        }

    // up/down duality: sigma < rho iff rho appears in branch_up(sigma)
    for (int m = 1; m <= 7; ++m)
        for (const auto& rho : enumerate_partitions(m))
            for (const auto& sig : branch_down(rho)) {
                const auto ups = branch_up(sig, m);
                CHECK(std::find(ups.begin(), ups.end(), rho) != ups.end());
            }

    // induced-dimension identity: sum_{chi > theta} d_chibar + d_thetabar = N d_thetabar*
    for (int n = 4; n <= 8; ++n)
        for (int k = 0; k + 1 <= n / 2; ++k)
            for (const auto& theta : enumerate_partitions(k)) {
                const auto tb = bar(theta, n, 0);
                const auto tbs = bar(theta, n, 1);
                if (!tb || !tbs) continue;
                BigInt lhs = dim_specht(*tb);
                for (const auto& chi : branch_up(theta, k + 1))
                    if (auto cb = bar(chi, n, 0)) lhs += dim_specht(*cb);
                CHECK(lhs == BigInt(n) * dim_specht(*tbs));
            }
}

TEST_CASE("horizontal strip additions") {
    const auto r1 = lambda_plus(YoungDiagram({1}), 3);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == YoungDiagram({3}));
    CHECK(r1[1] == YoungDiagram({2, 1}));

    for (int k = 1; k <= 5; ++k) {
        const auto r = lambda_plus(YoungDiagram{}, k);
        REQUIRE(r.size() == 1);
        CHECK(r[0] == YoungDiagram({k}));
    }
    const auto same = lambda_plus(YoungDiagram({2}), 2);
    REQUIRE(same.size() == 1);
    CHECK(same[0] == YoungDiagram({2}));
    CHECK_THROWS_AS(lambda_plus(YoungDiagram({2}), 1), InvalidArgument);

    for (int b = 0; b <= 4; ++b)
        for (const auto& xi : enumerate_partitions(b))
            for (int ell = b; ell <= b + 3; ++ell)
                CHECK(lambda_plus(xi, ell) == lambda_plus_oracle(xi, ell));
}

TEST_CASE("box distances") {
    CHECK(box_distance({3, 2}, {1, 6}) == 6);
    CHECK(box_distance({2, 5}, {2, 5}) == 0);

    // theta = (1) > rho = empty at N = 5: remove (1,4) and (2,1) from (4,1)
    const BarDiagram theta_bar(YoungDiagram({1}), 5, 0);
    const BarDiagram rho_ss(YoungDiagram{}, 3, 2);
    CHECK(diagram_pair_distance(theta_bar, rho_ss) == 4);

    CHECK_THROWS_AS(diagram_pair_distance(BarDiagram(YoungDiagram({1}), 5, 0),
                                          BarDiagram(YoungDiagram({1}), 4, 1)),
                    InvalidArgument);
}

TEST_CASE("bar diagrams") {
    CHECK_THROWS_AS(BarDiagram(YoungDiagram({3}), 5, 0), InvalidArgument);
    const BarDiagram ok(YoungDiagram({2, 1}), 8, 1);
    CHECK(ok.first_row() == 5);
    CHECK(ok.to_diagram() == YoungDiagram({5, 2, 1}));
    CHECK(bar(YoungDiagram({3}), 5, 0) == std::nullopt);
    CHECK(bar(YoungDiagram({1}), 5, 0) == YoungDiagram({4, 1}));
    CHECK(bar(YoungDiagram{}, 2, 2) == YoungDiagram{});
}

TEST_CASE("conjugacy classes") {
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& c : conjugacy_classes(n)) total += c.size();
        CHECK(total == factorial(n));
    }
    const ConjugacyClass transposition(YoungDiagram({2, 1, 1}));
    CHECK(transposition.size() == 6);
    CHECK(transposition.fixed_points() == 2);
}

TEST_CASE("characters") {
    // trivial representation
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : conjugacy_classes(n)) CHECK(character(YoungDiagram({n}), c) == 1);

    const ConjugacyClass id3(YoungDiagram({1, 1, 1}));
    const ConjugacyClass swap3(YoungDiagram({2, 1}));
    CHECK(character(YoungDiagram({2, 1}), id3) == 2);
    // oracle: the standard representation has character fix(g) - 1
    CHECK(character(YoungDiagram({2, 1}), swap3) == swap3.fixed_points() - 1);
    for (int n = 2; n <= 6; ++n)
        for (const auto& c : conjugacy_classes(n))
            CHECK(character(YoungDiagram({n - 1, 1}), c) == c.fixed_points() - 1);

    // sign representation: (-1)^{n - #cycles}
    for (int n = 2; n <= 6; ++n)
        for (const auto& c : conjugacy_classes(n)) {
            const int parity = (n - c.cycle_type().row_count()) % 2;
            CHECK(character(YoungDiagram(std::vector<int>(n, 1)), c) == (parity ? -1 : 1));
        }

    // orthogonality of the full character tables
    for (int n = 1; n <= 6; ++n) {
        const auto classes = conjugacy_classes(n);
        const auto parts = enumerate_partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j) {
                std::vector<BigInt> chi_i, chi_j;
                for (const auto& c : classes) {
                    chi_i.push_back(character(parts[i], c));
                    chi_j.push_back(character(parts[j], c));
                }
                CHECK(class_inner_product(n, chi_i, chi_j) == (i == j ? 1 : 0));
            }
    }

    CHECK_THROWS_AS(character(YoungDiagram({2, 1}), ConjugacyClass(YoungDiagram({2, 2}))),
                    InvalidArgument);
}

TEST_CASE("k-permutation action character") {
    const ConjugacyClass id4(YoungDiagram({1, 1, 1, 1}));
    const ConjugacyClass swap4(YoungDiagram({2, 1, 1}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : conjugacy_classes(n)) CHECK(perm_action_character(0, c) == 1);
    CHECK(perm_action_character(1, id4) == 4);

    // oracle: count ordered pairs fixed by an explicit transposition of {0..3}
    int fixed_pairs = 0;
    const int swap_map[] = {1, 0, 2, 3};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            if (swap_map[a] == a && swap_map[b] == b) ++fixed_pairs;
        }
    CHECK(perm_action_character(2, swap4) == fixed_pairs);
    CHECK(fixed_pairs == 2);
}

TEST_CASE("hook-bound and dimension-ratio claims at small scale") {
    // the exhaustive versions run in the check catalog; sanity here
    for (int n = 4; n <= 8; ++n)
        for (int k = 0; 2 * k < n; ++k)
            for (const auto& theta : enumerate_partitions(k)) {
                const auto tb = bar(theta, n, 0);
                const auto tbs = bar(theta, n, 1);
                if (!tb || !tbs) continue;
                CHECK(dim_specht(*tb) * (n - 2 * k) <= BigInt(n) * dim_specht(*tbs));
                if (n - 2 * k + 1 > 0) {
                    CHECK(h1(*tb) >= BigInt(n) * factorial(n - k - 1));
                    CHECK(h1(*tb) * (n - 2 * k + 1) <= factorial(n - k + 1));
                }
            }
}
