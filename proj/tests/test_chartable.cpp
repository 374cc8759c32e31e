#include <set>

#include "doctest.h"
#include "specseq/burnside.hpp"
#include "specseq/chartable.hpp"

using namespace specseq;

namespace {

// index of the trivial character in the canonical basis order
std::size_t trivial_index(const CharacterTable& t) {
    for (std::size_t i = 0; i < t.nchars(); ++i) {
        bool all_one = true;
        for (std::size_t j = 0; j < t.nclasses(); ++j)
            if (!(t.value(i, j) == CycInt(t.conductor(), Int(1)))) all_one = false;
        if (all_one) return i;
    }
    FAIL("no trivial character");
    return 0;
}

}  // namespace

TEST_CASE("character tables of the preset groups verify exactly") {
    for (const char* name : {"1", "Z2", "Z3", "Z4", "Z6", "V4", "S3", "D4", "Q8", "A4", "S4"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const CharacterTable& t = CharacterTable::of(g);
        CHECK(t.nchars() == t.nclasses());
        CHECK_NOTHROW(t.verify_orthogonality());
    }
}

TEST_CASE("Z2 character table") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    const CharacterTable& t = CharacterTable::of(z2);
    REQUIRE(t.nchars() == 2);
    // rows are (1, -1) and (1, 1) in some canonical order
    std::size_t triv = trivial_index(t);
    std::size_t sign = 1 - triv;
    CHECK(t.value(sign, 0) == CycInt(2, Int(1)));
    CHECK(t.value(sign, 1) == CycInt(2, Int(-1)));
}

TEST_CASE("S3 degrees and Z3 cyclotomic values") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const CharacterTable& t = CharacterTable::of(s3);
    std::multiset<Int> degrees;
    for (std::size_t i = 0; i < t.nchars(); ++i) degrees.insert(t.degree(i));
    CHECK(degrees == std::multiset<Int>{1, 1, 2});

    FiniteGroup z3 = FiniteGroup::cyclic(3);
    const CharacterTable& t3 = CharacterTable::of(z3);
    REQUIRE(t3.nchars() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(t3.degree(i) == 1);
    // some non-rational value must appear
    bool has_zeta = false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (!t3.value(i, j).is_integer()) has_zeta = true;
    CHECK(has_zeta);
}

TEST_CASE("ring multiplication in R(H)") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    IntVec unit = rep_ring_unit(z2);
    const CharacterTable& t = CharacterTable::of(z2);
    std::size_t sign = 1 - trivial_index(t);
    IntVec signv(2, Int(0));
    signv[sign] = 1;
    CHECK(rep_ring_mult(z2, signv, signv) == unit);
    CHECK(rep_ring_mult(z2, unit, signv) == signv);

    // S3: square of the 2-dimensional irreducible = triv + sign + itself
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const CharacterTable& ts = CharacterTable::of(s3);
    std::size_t two = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (ts.degree(i) == 2) two = i;
    IntVec v(3, Int(0));
    v[two] = 1;
    IntVec sq = rep_ring_mult(s3, v, v);
    IntVec expected(3, Int(1));
    CHECK(sq == expected);
}

TEST_CASE("restriction of the 2-dim S3 irreducible to Z3") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    IntMatrix res = rep_res_matrix(s3, s3.full_subgroup(), cls[2].rep);
    const CharacterTable& ts = CharacterTable::of(s3);
    const FiniteGroup& z3 = s3.materialize(cls[2].rep);
    const CharacterTable& t3 = CharacterTable::of(z3);
    std::size_t two = 0, trivH = trivial_index(t3);
    for (std::size_t i = 0; i < 3; ++i)
        if (ts.degree(i) == 2) two = i;
    IntVec v(3, Int(0));
    v[two] = 1;
    IntVec r = res.apply(v);
    // restriction = zeta-char + zeta^2-char (the two nontrivial characters)
    for (std::size_t i = 0; i < 3; ++i) CHECK(r[i] == (i == trivH ? 0 : 1));

    // res(triv) = triv along any pair
    for (const auto& hc : cls)
        for (const auto& lcidx : cls) {
            if (!hc.rep.contains_subgroup(lcidx.rep)) continue;
            IntMatrix m = rep_res_matrix(s3, hc.rep, lcidx.rep);
            CHECK(m.apply(rep_ring_unit(s3.materialize(hc.rep))) == rep_ring_unit(s3.materialize(lcidx.rep)));
        }
}

TEST_CASE("induction: regular character and the S3 example") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    IntMatrix ind = rep_ind_matrix(z2, z2.trivial_subgroup(), z2.full_subgroup());
    IntVec triv1 = rep_ring_unit(z2.materialize(z2.trivial_subgroup()));
    IntVec reg = ind.apply(triv1);
    CHECK(reg == IntVec{1, 1});  // triv + sign in any basis order

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    const FiniteGroup& z3 = s3.materialize(cls[2].rep);
    const CharacterTable& t3 = CharacterTable::of(z3);
    const CharacterTable& ts = CharacterTable::of(s3);
    IntMatrix m = rep_ind_matrix(s3, cls[2].rep, s3.full_subgroup());
    std::size_t zchar = (trivial_index(t3) + 1) % 3;
    IntVec v(3, Int(0));
    v[zchar] = 1;
    IntVec up = m.apply(v);
    std::size_t two = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (ts.degree(i) == 2) two = i;
    for (std::size_t i = 0; i < 3; ++i) CHECK(up[i] == (i == two ? 1 : 0));
}

TEST_CASE("Frobenius reciprocity on all basis pairs") {
    for (const char* name : {"Z4", "S3", "D4", "Q8"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const auto& cls = g.subgroup_classes();
        for (const auto& hc : cls) {
            if (hc.rep.order() == g.full_subgroup().order()) continue;
            const Subgroup& h = hc.rep;
            IntMatrix up = rep_ind_matrix(g, h, g.full_subgroup());
            IntMatrix down = rep_res_matrix(g, g.full_subgroup(), h);
            // <ind x, y>_G = <x, res y>_H  <=>  up^T = down in the irreducible bases
            CHECK(up.transpose() == down);
        }
    }
}

TEST_CASE("conjugation matrices") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    const Subgroup& h = cls[1].rep;  // order 2
    // conjugating by elements of H is the identity
    for (int g0 : h.elems) CHECK(rep_conj_matrix(s3, h, g0).is_identity());
    // functoriality conj_f conj_g = conj_fg
    for (int f = 0; f < 6; ++f)
        for (int g0 = 0; g0 < 6; ++g0) {
            Subgroup hg = s3.conjugate_subgroup(h, g0);
            IntMatrix lhs = rep_conj_matrix(s3, hg, f) * rep_conj_matrix(s3, h, g0);
            IntMatrix rhs = rep_conj_matrix(s3, h, s3.mul(f, g0));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("character-level Mackey formula for all subgroup triples") {
    for (const char* name : {"Z4", "Z6", "S3", "D4", "Q8", "A4"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        // H ranges over subgroups, L, K <= H
        for (const auto& hc : g.subgroup_classes()) {
            const Subgroup& h = hc.rep;
            const FiniteGroup& mh = g.materialize(h);
            for (const auto& lc : mh.subgroup_classes())
                for (const auto& kc : mh.subgroup_classes()) {
                    Subgroup l = to_parent_subgroup(g, mh, lc.rep);
                    Subgroup k = to_parent_subgroup(g, mh, kc.rep);
                    IntMatrix lhs = rep_res_matrix(g, h, l) * rep_ind_matrix(g, k, h);
                    IntMatrix rhs(rep_res_matrix(g, h, l).rows(), rep_ind_matrix(g, k, h).cols());
                    for (int x : mh.double_coset_reps(lc.rep, kc.rep)) {
                        int xg = mh.parent_elements()[x];
                        Subgroup xk = g.conjugate_subgroup(k, xg);
                        Subgroup meet = g.intersect(l, xk);               // L ∩ ^xK
                        Subgroup meet_dn = g.conjugate_subgroup(meet, g.inv(xg));  // L^x ∩ K
                        rhs = rhs + rep_ind_matrix(g, meet, l) * rep_conj_matrix(g, meet_dn, xg) *
                                        rep_res_matrix(g, k, meet_dn);
                    }
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("imported tables are re-verified") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    std::vector<std::vector<CycInt>> bad{{CycInt(2, Int(1)), CycInt(2, Int(1))},
                                         {CycInt(2, Int(1)), CycInt(2, Int(1))}};
    CHECK_THROWS(CharacterTable(z2, 2, bad));
}
