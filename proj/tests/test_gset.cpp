#include <set>

#include "doctest.h"
#include "specseq/gset.hpp"

using namespace specseq;

TEST_CASE("orbit G-sets and decomposition") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    GSet pt = GSet::point(s3);
    CHECK(pt.npoints() == 1);
    CHECK(pt.orbits().size() == 1);
    CHECK(pt.orbits()[0].cls == static_cast<int>(s3.subgroup_classes().size()) - 1);

    GSet free = GSet::free_orbit(s3);
    CHECK(free.npoints() == 6);
    CHECK(free.orbits().size() == 1);
    CHECK(free.orbits()[0].cls == 0);

    GSet e = GSet::empty(s3);
    CHECK(e.npoints() == 0);
    CHECK(e.orbits().empty());
}

TEST_CASE("product of free orbits for Z2") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    GSet f = GSet::free_orbit(z2);
    GSet p = GSet::product(f, f);
    CHECK(p.npoints() == 4);
    CHECK(p.orbits().size() == 2);
    for (const auto& o : p.orbits()) CHECK(o.cls == 0);
}

TEST_CASE("unit law G/G x X = X at orbit level") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    for (const auto& c : cls) {
        GSet x = GSet::orbit(s3, c.rep);
        GSet p = GSet::product(GSet::point(s3), x);
        REQUIRE(p.orbits().size() == x.orbits().size());
        CHECK(p.orbits()[0].cls == x.orbits()[0].cls);
    }
}

TEST_CASE("orbit counting matches double cosets") {
    for (const char* name : {"Z4", "S3", "D4", "A4"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const auto& cls = g.subgroup_classes();
        for (const auto& hc : cls)
            for (const auto& lc : cls) {
                GSet p = GSet::product(GSet::orbit(g, hc.rep), GSet::orbit(g, lc.rep));
                CHECK(p.orbits().size() == g.double_coset_reps(hc.rep, lc.rep).size());
                // stabilizer classes match H ∩ ^xL up to conjugacy
                std::multiset<int> got, want;
                for (const auto& o : p.orbits()) got.insert(o.cls);
                for (int x : g.double_coset_reps(hc.rep, lc.rep))
                    want.insert(g.class_of_subgroup(g.intersect(hc.rep, g.conjugate_subgroup(lc.rep, x))));
                CHECK(got == want);
            }
    }
}

TEST_CASE("restriction of S3/<123> to a transposition subgroup") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    // X = G/Z3 has 2 points; restricted to Z2 it is one free Z2-orbit.
    GSet x = GSet::orbit(s3, cls[2].rep);
    CHECK(x.npoints() == 2);
    auto fixed = x.fixed_points(cls[1].rep);
    CHECK(fixed.empty());
}

TEST_CASE("maps between G-sets") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    GSet f = GSet::free_orbit(z2);
    // maps G/1 -> G/1: |G| = 2
    CHECK(maps_between(f, f).size() == 2);
    // maps G/H -> G/G: exactly one
    CHECK(maps_between(f, GSet::point(z2)).size() == 1);

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    for (const auto& c : cls) {
        GSet y = GSet::disjoint_union(GSet::orbit(s3, cls[1].rep), GSet::point(s3));
        GSet gk = GSet::orbit(s3, c.rep);
        CHECK(maps_between(gk, y).size() == y.fixed_points(c.rep).size());
    }
}

TEST_CASE("equivariance is enforced") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    GSet f = GSet::free_orbit(z2);
    CHECK_THROWS(GMap(f, f, std::vector<int>{0, 0}));  // collapses a free orbit: not equivariant
}

TEST_CASE("pullback of X -> pt <- Y is the product") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const auto& cls = s3.subgroup_classes();
    GSet x = GSet::orbit(s3, cls[1].rep);
    GSet y = GSet::orbit(s3, cls[2].rep);
    auto pb = pullback(GMap::to_point(x), GMap::to_point(y));
    CHECK(pb.object.npoints() == x.npoints() * y.npoints());
    GSet prod = GSet::product(x, y);
    CHECK(pb.object.orbits().size() == prod.orbits().size());
}

TEST_CASE("pullback square recognition") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    GSet x = GSet::free_orbit(s3);
    GMap id = GMap::identity(x);
    CHECK(is_pullback_square(id, id, id, id));

    // pullback of the two projections of a product square
    const auto& cls = s3.subgroup_classes();
    GSet a = GSet::orbit(s3, cls[1].rep);
    GSet b = GSet::orbit(s3, cls[2].rep);
    auto pb = pullback(GMap::to_point(a), GMap::to_point(b));
    CHECK(is_pullback_square(pb.to_y, pb.to_x, GMap::to_point(a), GMap::to_point(b)));
}

TEST_CASE("transversals move the base point as recorded") {
    FiniteGroup d4 = FiniteGroup::dihedral(4);
    const auto& cls = d4.subgroup_classes();
    for (const auto& c : cls) {
        GSet x = GSet::orbit(d4, c.rep);
        for (const auto& o : x.orbits())
            for (std::size_t i = 0; i < o.points.size(); ++i) CHECK(x.act(o.transversal[i], o.base) == o.points[i]);
    }
}
