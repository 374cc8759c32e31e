#include <set>

#include "doctest.h"
#include "specseq/group.hpp"

using namespace specseq;

TEST_CASE("preset construction and basic structure") {
    FiniteGroup z2 = FiniteGroup::preset("Z2");
    CHECK(z2.order() == 2);
    CHECK(z2.exponent() == 2);

    FiniteGroup s3 = FiniteGroup::preset("S3");
    CHECK(s3.order() == 6);
    CHECK(s3.exponent() == 6);
    CHECK(!s3.is_abelian());

    FiniteGroup d4 = FiniteGroup::preset("D4");
    CHECK(d4.order() == 8);
    CHECK(d4.exponent() == 4);

    FiniteGroup q8 = FiniteGroup::preset("Q8");
    CHECK(q8.order() == 8);
    CHECK(q8.exponent() == 4);
    // Q8 has a unique element of order 2
    int count = 0;
    for (int i = 0; i < 8; ++i)
        if (q8.element_order(i) == 2) ++count;
    CHECK(count == 1);

    FiniteGroup a4 = FiniteGroup::preset("A4");
    CHECK(a4.order() == 12);
    CHECK(a4.exponent() == 6);

    FiniteGroup v4 = FiniteGroup::preset("V4");
    CHECK(v4.order() == 4);
    CHECK(v4.exponent() == 2);

    FiniteGroup perm = FiniteGroup::preset("perm:3:(0,1);(1,2)");
    CHECK(perm.order() == 6);
}

TEST_CASE("subgroup classes of Z2, Z4, S3") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    CHECK(z2.subgroup_classes().size() == 2);

    FiniteGroup z4 = FiniteGroup::cyclic(4);
    CHECK(z4.subgroup_classes().size() == 3);  // 1, Z2, Z4

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    REQUIRE(cls.size() == 4);
    CHECK(cls[0].rep.order() == 1);
    CHECK(cls[1].rep.order() == 2);
    CHECK(cls[2].rep.order() == 3);
    CHECK(cls[3].rep.order() == 6);
    CHECK(cls[1].members.size() == 3);
    CHECK(cls[2].members.size() == 1);
}

TEST_CASE("subgroup enumeration matches brute force for S3") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    // brute force: all subsets closed under the operations
    std::set<std::vector<int>> brute;
    for (int mask = 1; mask < 64; ++mask) {
        if (!(mask & 1)) continue;
        std::vector<int> elems;
        for (int i = 0; i < 6; ++i)
            if (mask & (1 << i)) elems.push_back(i);
        bool closed = true;
        for (int a : elems)
            for (int b : elems) {
                int c = s3.mul(a, b);
                if (!std::binary_search(elems.begin(), elems.end(), c)) closed = false;
            }
        if (closed) brute.insert(elems);
    }
    CHECK(brute.size() == s3.all_subgroups().size());
}

TEST_CASE("double cosets") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    Subgroup g = s3.full_subgroup();
    CHECK(s3.double_coset_reps(g, g).size() == 1);

    // H = L = a transposition subgroup: two double cosets (sizes 2 and 4)
    const auto& cls = s3.subgroup_classes();
    const Subgroup& h = cls[1].rep;
    auto reps = s3.double_coset_reps(h, h);
    CHECK(reps.size() == 2);

    FiniteGroup z4 = FiniteGroup::cyclic(4);
    const Subgroup& z2 = z4.subgroup_classes()[1].rep;
    CHECK(z4.double_coset_reps(z2, z2).size() == 2);
}

TEST_CASE("sum over double cosets |HgL| = |G|") {
    for (const char* name : {"Z6", "S3", "D4", "Q8", "A4"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const auto& cls = g.subgroup_classes();
        for (const auto& hc : cls)
            for (const auto& lc : cls) {
                const Subgroup &h = hc.rep, &l = lc.rep;
                long total = 0;
                for (int x : g.double_coset_reps(h, l)) {
                    std::set<int> coset;
                    for (int a : h.elems)
                        for (int b : l.elems) coset.insert(g.mul(g.mul(a, x), b));
                    total += static_cast<long>(coset.size());
                }
                CHECK(total == g.order());
            }
    }
}

TEST_CASE("elementary and cyclic classification") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    // 1, Z2, Z3 elementary; S3 itself is not
    CHECK(cls[0].is_elementary);
    CHECK(cls[1].is_elementary);
    CHECK(cls[2].is_elementary);
    CHECK(!cls[3].is_elementary);

    FiniteGroup z6 = FiniteGroup::cyclic(6);
    for (const auto& c : z6.subgroup_classes()) {
        CHECK(c.is_cyclic);
        CHECK(c.is_elementary);
    }

    FiniteGroup q8 = FiniteGroup::quaternion8();
    CHECK(q8.subgroup_classes().back().is_elementary);  // 2-group

    FiniteGroup a4 = FiniteGroup::alternating4();
    CHECK(!a4.subgroup_classes().back().is_elementary);  // A4 is not nilpotent
}

TEST_CASE("normalizer and weyl data") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    const Subgroup& z3 = cls[2].rep;
    Subgroup n = s3.normalizer(z3);
    CHECK(n.order() == 6);  // Z3 normal in S3
    const WeylData& w = s3.weyl(z3);
    CHECK(w.coset_reps.size() == 2);

    const Subgroup& z2 = cls[1].rep;
    CHECK(s3.normalizer(z2).order() == 2);
    CHECK(s3.weyl(z2).coset_reps.size() == 1);

    // trivial subgroup: Weyl group is all of G
    CHECK(s3.weyl(s3.trivial_subgroup()).coset_reps.size() == 6);
}

TEST_CASE("materialized subgroups multiply consistently") {
    FiniteGroup a4 = FiniteGroup::alternating4();
    for (const auto& c : a4.subgroup_classes()) {
        const FiniteGroup& m = a4.materialize(c.rep);
        CHECK(m.order() == static_cast<int>(c.rep.order()));
        for (int x = 0; x < m.order(); ++x)
            for (int y = 0; y < m.order(); ++y) {
                int parent = a4.mul(m.parent_elements()[x], m.parent_elements()[y]);
                CHECK(parent == m.parent_elements()[m.mul(x, y)]);
            }
    }
}

TEST_CASE("conjugator and class lookups") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    for (const auto& c : cls)
        for (const auto& member : c.members) {
            int u = s3.conjugator_from_rep(member);
            CHECK(s3.conjugate_subgroup(c.rep, u) == member);
        }
}

TEST_CASE("randomized policy changes choices but not classification") {
    FiniteGroup a(FiniteGroup::symmetric(3));
    FiniteGroup b(FiniteGroup::symmetric(3));
    ChoicePolicy rnd;
    rnd.randomized = true;
    rnd.seed = 20240601;
    b.set_policy(rnd);
    const auto& ca = a.subgroup_classes();
    const auto& cb = b.subgroup_classes();
    REQUIRE(ca.size() == cb.size());
    for (std::size_t i = 0; i < ca.size(); ++i) {
        CHECK(ca[i].canonical.elems == cb[i].canonical.elems);
        CHECK(ca[i].rep.order() == cb[i].rep.order());
        CHECK(ca[i].is_elementary == cb[i].is_elementary);
    }
}

TEST_CASE("order cap is enforced") {
    FiniteGroup big = FiniteGroup::elementary_abelian(2, 4);
    big.set_order_cap(8);
    CHECK_THROWS(big.all_subgroups());
}
