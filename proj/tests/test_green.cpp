#include <set>

#include "doctest.h"
#include "specseq/green.hpp"

using namespace specseq;

TEST_CASE("burnside ring of Z2: marks and products") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    const BurnsideRing& b = BurnsideRing::of(z2);
    REQUIRE(b.rank() == 2);
    // classes sorted by order: index 0 = [G/1], 1 = [G/G]
    CHECK(b.marks.at(0, 0) == 2);  // |(G/1)^1|
    CHECK(b.marks.at(0, 1) == 0);  // |(G/1)^G|
    CHECK(b.marks.at(1, 0) == 1);  // |(G/G)^1|
    CHECK(b.marks.at(1, 1) == 1);  // |(G/G)^G|

    IntVec free{1, 0}, unit = b.unit();
    CHECK(unit == IntVec{0, 1});
    CHECK(b.mult(unit, free) == free);
    CHECK(b.mult(free, free) == IntVec{2, 0});  // [G/1]^2 = |G| [G/1]
}

TEST_CASE("burnside multiplication: orbit formula agrees with marks route") {
    for (const char* name : {"Z6", "S3", "D4", "Q8", "A4"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const BurnsideRing& b = BurnsideRing::of(g);
        for (std::size_t i = 0; i < b.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j) {
                IntVec ei(b.rank(), Int(0)), ej(b.rank(), Int(0));
                ei[i] = 1;
                ej[j] = 1;
                CHECK(b.mult(ei, ej) == b.mult_via_marks(ei, ej));
            }
    }
}

TEST_CASE("green functor evaluation ranks") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GreenFunctor& r = GreenFunctor::representation(z2);
    CHECK(green_rank(r, GSet::point(z2)) == 2);                    // R(G)
    CHECK(green_rank(r, GSet::empty(z2)) == 0);                    // R(0) = 0
    GSet both = GSet::disjoint_union(GSet::free_orbit(z2), GSet::point(z2));
    CHECK(green_rank(r, both) == 3);
}

TEST_CASE("identity and fold maps") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GreenFunctor& r = GreenFunctor::representation(z2);
    GSet f = GSet::free_orbit(z2);
    GMap id = GMap::identity(f);
    CHECK(green_covariant(r, id).is_identity());
    CHECK(green_contravariant(r, id).is_identity());

    GMap fold = GMap::fold(f);
    IntMatrix cov = green_covariant(r, fold);
    IntMatrix con = green_contravariant(r, fold);
    // covariant = sum of the two blocks, contravariant = diagonal copy
    CHECK(cov == IntMatrix{{1, 1}});
    CHECK(con == IntMatrix{{1}, {1}});
}

TEST_CASE("Z2 covariant along G/1 -> G/G is induction") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GreenFunctor& r = GreenFunctor::representation(z2);
    GSet f = GSet::free_orbit(z2);
    GMap to_pt = GMap::to_point(f);
    IntMatrix cov = green_covariant(r, to_pt);
    // triv_1 induces to the regular character triv + sign
    CHECK(cov == IntMatrix{{1}, {1}});
}

TEST_CASE("contravariant maps are ring homomorphisms") {
    for (const char* name : {"Z4", "S3"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        for (const GreenFunctor* r : {&GreenFunctor::representation(g), &GreenFunctor::burnside(g)}) {
            const auto& cls = g.subgroup_classes();
            for (const auto& hc : cls) {
                GSet x = GSet::orbit(g, hc.rep);
                GMap to_pt = GMap::to_point(x);
                IntMatrix con = green_contravariant(*r, to_pt);
                GreenValue ua = green_unit(*r, GSet::point(g));
                // unit pulls back to unit
                CHECK(con.apply(ua.flat()) == green_unit(*r, x).flat());
                // products pull back to products on all basis pairs
                std::size_t n = green_rank(*r, GSet::point(g));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        IntVec ei(n, Int(0)), ej(n, Int(0));
                        ei[i] = 1;
                        ej[j] = 1;
                        GreenValue a = GreenValue::from_flat(*r, GSet::point(g), ei);
                        GreenValue b = GreenValue::from_flat(*r, GSet::point(g), ej);
                        GreenValue ab = green_multiply(*r, a, b);
                        GreenValue pa = GreenValue::from_flat(*r, x, con.apply(ei));
                        GreenValue pb = GreenValue::from_flat(*r, x, con.apply(ej));
                        CHECK(green_multiply(*r, pa, pb).flat() == con.apply(ab.flat()));
                    }
            }
        }
    }
}

TEST_CASE("pullback axiom for orbit-map squares") {
    for (const char* name : {"Z4", "S3", "D4"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const auto& cls = g.subgroup_classes();
        for (const GreenFunctor* r : {&GreenFunctor::representation(g), &GreenFunctor::burnside(g)}) {
            for (const auto& hc : cls)
                for (const auto& lc : cls) {
                    GSet x = GSet::orbit(g, hc.rep);
                    GSet y = GSet::orbit(g, lc.rep);
                    auto pb = pullback(GMap::to_point(x), GMap::to_point(y));
                    CHECK(green_check_pullback_axiom(*r, pb.to_y, pb.to_x, GMap::to_point(x), GMap::to_point(y)));
                }
        }
    }
}

TEST_CASE("projection formula for orbit maps") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    const GreenFunctor& r = GreenFunctor::representation(s3);
    const auto& cls = s3.subgroup_classes();
    for (const auto& hc : cls) {
        GSet x = GSet::orbit(s3, hc.rep);
        GMap f = GMap::to_point(x);
        IntMatrix cov = green_covariant(r, f), con = green_contravariant(r, f);
        std::size_t nx = green_rank(r, x), ny = green_rank(r, GSet::point(s3));
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j) {
                IntVec xi(nx, Int(0)), yj(ny, Int(0));
                xi[i] = 1;
                yj[j] = 1;
                GreenValue xv = GreenValue::from_flat(r, x, xi);
                GreenValue yv = GreenValue::from_flat(r, GSet::point(s3), yj);
                GreenValue pulled = GreenValue::from_flat(r, x, con.apply(yj));
                IntVec lhs = cov.apply(green_multiply(r, pulled, xv).flat());
                IntVec rhs = green_multiply(r, yv, GreenValue::from_flat(r, GSet::point(s3), cov.apply(xi))).flat();
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("linearization Bur -> R is a morphism of Green functors") {
    for (const char* name : {"Z4", "S3", "Q8"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        const auto& cls = g.subgroup_classes();
        // commutes with res and ind between the full group and each subgroup
        for (const auto& hc : cls) {
            const Subgroup& h = hc.rep;
            IntMatrix lin_h = linearization_matrix(g, h);
            IntMatrix lin_g = linearization_matrix(g, g.full_subgroup());
            CHECK(rep_res_matrix(g, g.full_subgroup(), h) * lin_g ==
                  lin_h * bur_res_matrix(g, g.full_subgroup(), h));
            CHECK(rep_ind_matrix(g, h, g.full_subgroup()) * lin_h ==
                  lin_g * bur_ind_matrix(g, h, g.full_subgroup()));
            // unit goes to unit, products to products
            const FiniteGroup& mh = g.materialize(h);
            const BurnsideRing& b = BurnsideRing::of(mh);
            CHECK(lin_h.apply(b.unit()) == rep_ring_unit(mh));
            for (std::size_t i = 0; i < b.rank(); ++i)
                for (std::size_t j = 0; j < b.rank(); ++j) {
                    IntVec ei(b.rank(), Int(0)), ej(b.rank(), Int(0));
                    ei[i] = 1;
                    ej[j] = 1;
                    CHECK(lin_h.apply(b.mult(ei, ej)) ==
                          rep_ring_mult(mh, lin_h.apply(ei), lin_h.apply(ej)));
                }
        }
    }
}
