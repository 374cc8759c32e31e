#include "doctest.h"
#include "specseq/bouc.hpp"

using namespace specseq;

TEST_CASE("hom group ranks match the double coset formula") {
    for (const char* name : {"Z2", "Z4", "S3", "D4", "Q8", "A4"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const GreenFunctor& r = GreenFunctor::representation(g);
        const auto& cls = g.subgroup_classes();
        for (const auto& hc : cls)
            for (const auto& lc : cls) {
                GSet x = GSet::orbit(g, hc.rep);
                GSet y = GSet::orbit(g, lc.rep);
                std::size_t expect = 0;
                for (int a : g.double_coset_reps(hc.rep, lc.rep))
                    expect += r.rank(g.intersect(hc.rep, g.conjugate_subgroup(lc.rep, a)));
                CHECK(bouc_rank(r, x, y) == expect);
            }
    }
}

TEST_CASE("B(G/G, G/G) = R(G), B(0, Y) = 0, and the Z2 free case") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GreenFunctor& r = GreenFunctor::representation(z2);
    CHECK(bouc_rank(r, GSet::point(z2), GSet::point(z2)) == 2);
    CHECK(bouc_rank(r, GSet::free_orbit(z2), GSet::free_orbit(z2)) == 2);
    CHECK(bouc_rank(r, GSet::empty(z2), GSet::free_orbit(z2)) == 0);
}

TEST_CASE("identity is a two-sided unit") {
    for (const char* name : {"Z2", "Z4", "S3"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const GreenFunctor& r = GreenFunctor::representation(g);
        const auto& cls = g.subgroup_classes();
        for (const auto& hc : cls)
            for (const auto& lc : cls) {
                GSet x = GSet::orbit(g, hc.rep);
                GSet y = GSet::orbit(g, lc.rep);
                BoucMorphism idx = bouc_identity(r, x);
                BoucMorphism idy = bouc_identity(r, y);
                std::size_t n = bouc_rank(r, x, y);
                for (std::size_t b = 0; b < n; ++b) {
                    IntVec e(n, Int(0));
                    e[b] = 1;
                    BoucMorphism f = bouc_from_flat(r, x, y, e);
                    CHECK(bouc_compose(r, f, idx).flat() == e);
                    CHECK(bouc_compose(r, idy, f).flat() == e);
                }
            }
    }
}

TEST_CASE("composition is associative on exhaustive basis triples (Z2, Z4, S3)") {
    for (const char* name : {"Z2", "Z4", "S3"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const GreenFunctor& r = GreenFunctor::representation(g);
        const auto& cls = g.subgroup_classes();
        // all object 4-tuples over single orbits
        for (const auto& c0 : cls)
            for (const auto& c1 : cls)
                for (const auto& c2 : cls)
                    for (const auto& c3 : cls) {
                        GSet w = GSet::orbit(g, c0.rep), x = GSet::orbit(g, c1.rep);
                        GSet y = GSet::orbit(g, c2.rep), z = GSet::orbit(g, c3.rep);
                        std::size_t na = bouc_rank(r, w, x), nb = bouc_rank(r, x, y), nc = bouc_rank(r, y, z);
                        for (std::size_t ia = 0; ia < na; ++ia)
                            for (std::size_t ib = 0; ib < nb; ++ib)
                                for (std::size_t ic = 0; ic < nc; ++ic) {
                                    IntVec ea(na, Int(0)), eb(nb, Int(0)), ec(nc, Int(0));
                                    ea[ia] = 1;
                                    eb[ib] = 1;
                                    ec[ic] = 1;
                                    BoucMorphism a = bouc_from_flat(r, w, x, ea);
                                    BoucMorphism b = bouc_from_flat(r, x, y, eb);
                                    BoucMorphism c = bouc_from_flat(r, y, z, ec);
                                    IntVec lhs = bouc_compose(r, c, bouc_compose(r, b, a)).flat();
                                    IntVec rhs = bouc_compose(r, bouc_compose(r, c, b), a).flat();
                                    CHECK(lhs == rhs);
                                }
                    }
    }
}

TEST_CASE("composition is bilinear") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const GreenFunctor& r = GreenFunctor::representation(s3);
    GSet x = GSet::free_orbit(s3);
    GSet y = GSet::orbit(s3, s3.subgroup_classes()[1].rep);
    std::size_t na = bouc_rank(r, x, y), nb = bouc_rank(r, y, x);
    IntVec u(na, Int(0)), v(na, Int(0)), w(nb, Int(0));
    u[0] = 2;
    v[na - 1] = -3;
    w[0] = 1;
    BoucMorphism fu = bouc_from_flat(r, x, y, u);
    BoucMorphism fv = bouc_from_flat(r, x, y, v);
    IntVec sum(na);
    for (std::size_t i = 0; i < na; ++i) sum[i] = u[i] + v[i];
    BoucMorphism fsum = bouc_from_flat(r, x, y, sum);
    BoucMorphism gw = bouc_from_flat(r, y, x, w);
    IntVec lhs = bouc_compose(r, gw, fsum).flat();
    IntVec c1 = bouc_compose(r, gw, fu).flat();
    IntVec c2 = bouc_compose(r, gw, fv).flat();
    for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == c1[i] + c2[i]);
}

TEST_CASE("burnside-functor hom sets compose associatively too") {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    const GreenFunctor& r = GreenFunctor::burnside(z4);
    const auto& cls = z4.subgroup_classes();
    GSet x = GSet::orbit(z4, cls[1].rep);
    BoucMorphism id = bouc_identity(r, x);
    std::size_t n = bouc_rank(r, x, x);
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        BoucMorphism f = bouc_from_flat(r, x, x, e);
        CHECK(bouc_compose(r, f, id).flat() == e);
        CHECK(bouc_compose(r, id, f).flat() == e);
    }
}
