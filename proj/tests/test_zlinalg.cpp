#include <random>

#include "doctest.h"
#include "specseq/abgroup.hpp"
#include "specseq/smith.hpp"

using namespace specseq;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

// gcd of all k x k minors, brute force (k <= 4, small shapes only)
Int minor_gcd(const IntMatrix& a, std::size_t k) {
    std::vector<std::size_t> rows(a.rows()), cols(a.cols());
    Int g = 0;
    std::vector<std::size_t> rsel, csel;
    std::function<void(std::size_t, std::size_t)> pick_cols = [&](std::size_t start, std::size_t left) {
        if (left == 0) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rsel[i], csel[j]);
            g = gcd(g, sub.det());
            return;
        }
        for (std::size_t c = start; c + left <= a.cols(); ++c) {
            csel.push_back(c);
            pick_cols(c + 1, left - 1);
            csel.pop_back();
        }
    };
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t left) {
        if (left == 0) {
            pick_cols(0, k);
            return;
        }
        for (std::size_t r = start; r + left <= a.rows(); ++r) {
            rsel.push_back(r);
            pick_rows(r + 1, left - 1);
            rsel.pop_back();
        }
    };
    pick_rows(0, k);
    return abs(g);
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<int> d(-2, 2);
    std::uniform_int_distribution<std::size_t> idx(0, n ? n - 1 : 0);
    for (int step = 0; step < 12 && n > 1; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        u.add_row_multiple(i, j, d(rng));
    }
    return u;
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    SmithForm s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 4);

    SmithForm empty = smith_normal_form(IntMatrix(0, 0));
    CHECK(empty.diag.empty());

    SmithForm id3 = smith_normal_form(IntMatrix::identity(3));
    CHECK(id3.diag == IntVec{1, 1, 1});
}

TEST_CASE("smith transforms are unimodular and diagonalize") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + trial % 5, c = 1 + (trial / 3) % 5;
        IntMatrix a = random_matrix(rng, r, c);
        SmithForm s = smith_normal_form(a);
        CHECK(s.left * a * s.right == s.diagonal_matrix(r, c));
        CHECK(abs(s.left.det()) == 1);
        CHECK(abs(s.right.det()) == 1);
        CHECK(s.left * s.left_inv == IntMatrix::identity(r));
        CHECK(s.right * s.right_inv == IntMatrix::identity(c));
        for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
            if (s.diag[i + 1] != 0 || s.diag[i] != 0) CHECK(divides(s.diag[i], s.diag[i + 1]));
    }
}

TEST_CASE("invariant factors match gcds of k x k minors") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 2 + trial % 3, c = 2 + (trial / 2) % 3;
        IntMatrix a = random_matrix(rng, r, c, -5, 5);
        SmithForm s = smith_normal_form(a);
        Int prod = 1;
        for (std::size_t k = 1; k <= std::min({r, c, std::size_t(4)}); ++k) {
            prod *= s.diag[k - 1];
            CHECK(abs(prod) == minor_gcd(a, k));
        }
    }
}

TEST_CASE("solve_linear pinned examples") {
    auto x = solve_linear(IntMatrix{{2}}, IntVec{4});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);

    CHECK(!solve_linear(IntMatrix{{2}}, IntVec{3}).has_value());

    auto y = solve_linear(IntMatrix{{1, 1}, {0, 2}}, IntVec{3, 4});
    REQUIRE(y.has_value());
    CHECK(*y == IntVec{1, 2});
}

TEST_CASE("solve_linear round trip on random systems") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 2) % 4;
        IntMatrix a = random_matrix(rng, r, c, -4, 4);
        IntMatrix xs = random_matrix(rng, c, 1, -3, 3);
        IntVec b = a.apply(xs.column_vec(0));
        auto x = solve_linear(a, b);
        REQUIRE(x.has_value());
        CHECK(a.apply(*x) == b);
    }
}

TEST_CASE("kernel lattice") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix a = random_matrix(rng, 1 + trial % 3, 2 + trial % 4, -3, 3);
        IntMatrix k = kernel_lattice(a);
        CHECK((a * k).is_zero());
        // completeness: rank(kernel) + rank(a) = cols
        CHECK(k.cols() + smith_normal_form(a).rank == a.cols());
    }
}

TEST_CASE("group invariants pinned examples") {
    // ngens=2, one relation column (2,0)
    PresentedAbGroup g1(2, IntMatrix{{2}, {0}});
    CHECK(g1.invariants().free_rank == 1);
    CHECK(g1.invariants().torsion == IntVec{2});

    PresentedAbGroup g0(0, IntMatrix(0, 0));
    CHECK(g0.invariants().is_trivial());

    PresentedAbGroup g2(3, IntMatrix{{2, 0}, {0, 6}, {0, 0}});
    CHECK(g2.invariants().free_rank == 1);
    CHECK(g2.invariants().torsion == IntVec{2, 6});
}

TEST_CASE("group invariants are isomorphism invariant") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + trial % 3;
        IntMatrix rel = random_matrix(rng, n, 1 + trial % 4, -6, 6);
        PresentedAbGroup g(n, rel);
        IntMatrix u = random_unimodular(rng, n);
        PresentedAbGroup h(n, u * rel);
        CHECK(g.invariants() == h.invariants());
    }
}

TEST_CASE("element reduction and membership") {
    PresentedAbGroup g(2, IntMatrix{{2, 0}, {0, 3}});
    CHECK(g.contains_zero(IntVec{2, 0}));
    CHECK(g.contains_zero(IntVec{4, -3}));
    CHECK(!g.contains_zero(IntVec{1, 0}));
    CHECK(g.equal(IntVec{1, 1}, IntVec{3, 4}));
    CHECK(g.reduce(IntVec{1, 1}) == g.reduce(IntVec{5, 7}));
}

TEST_CASE("hom group pinned examples") {
    PresentedAbGroup z = PresentedAbGroup::free_group(1);
    PresentedAbGroup z2 = PresentedAbGroup::cyclic(2);

    HomGroup h1 = hom_group(z, z2);
    CHECK(h1.group.invariants().free_rank == 0);
    CHECK(h1.group.invariants().torsion == IntVec{2});

    HomGroup h2 = hom_group(z2, z);
    CHECK(h2.group.invariants().is_trivial());

    // Hom(Z^2, Z^2) commuting with the swap: free of rank 2, spanned by the
    // identity and the swap itself.
    PresentedAbGroup zz = PresentedAbGroup::free_group(2);
    IntMatrix swap{{0, 1}, {1, 0}};
    HomGroup h3 = hom_group(zz, zz, {{swap, swap}});
    CHECK(h3.group.invariants().free_rank == 2);
    CHECK(h3.group.invariants().torsion.empty());
    // brute-force oracle: every small commuting matrix is an integer combination
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            IntMatrix m{{a, b}, {b, a}};  // general solution of m*swap = swap*m
            bool found = false;
            for (int s = -4; s <= 4 && !found; ++s)
                for (int t = -4; t <= 4 && !found; ++t) {
                    IntMatrix combo = h3.generators[0].scaled(s) + h3.generators[1].scaled(t);
                    if (combo == m) found = true;
                }
            CHECK(found);
        }
}

TEST_CASE("hom group respects relations as constraints") {
    // Hom(Z/4, Z/2) = Z/2; Hom(Z/2, Z/4) = Z/2
    HomGroup a = hom_group(PresentedAbGroup::cyclic(4), PresentedAbGroup::cyclic(2));
    CHECK(a.group.invariants().torsion == IntVec{2});
    HomGroup b = hom_group(PresentedAbGroup::cyclic(2), PresentedAbGroup::cyclic(4));
    CHECK(b.group.invariants().torsion == IntVec{2});
}

TEST_CASE("subquotient presentation") {
    // Z^2 ⊇ S = <(2,0),(0,3)> ⊇ T = <(4,0)> : S/T = Z/2 + Z
    IntMatrix s{{2, 0}, {0, 3}};
    IntMatrix t{{4}, {0}};
    auto sq = subquotient(2, s, t);
    CHECK(sq.group.invariants().free_rank == 1);
    CHECK(sq.group.invariants().torsion == IntVec{2});
}
