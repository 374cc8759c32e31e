#include "specseq/mackey_build.hpp"

#include <algorithm>

namespace specseq {

namespace {

IntVec basis_vec(std::size_t n, std::size_t i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    return v;
}

// coordinates of map*src_basis columns in tgt_basis modulo tgt_relations
IntMatrix induced_matrix(const IntMatrix& tgt_basis, const IntMatrix& tgt_relations, const IntMatrix& map,
                         const IntMatrix& src_basis) {
    RepeatedSolver solver(tgt_basis.hcat(tgt_relations));
    IntMatrix out(tgt_basis.cols(), src_basis.cols());
    for (std::size_t j = 0; j < src_basis.cols(); ++j) {
        auto c = solver.solve(map.apply(src_basis.column_vec(j)));
        if (!c) throw std::runtime_error("induced_matrix: map does not preserve the subgroup");
        for (std::size_t i = 0; i < tgt_basis.cols(); ++i) out.at(i, j) = (*c)[i];
    }
    return out;
}

GMap product_map(const GSet& from_prod, const GSet& to_prod, const GMap& left, int nx) {
    // (p, xi) -> (left(p), xi) between product sets sharing the same right factor
    std::vector<int> img(from_prod.npoints());
    for (int p = 0; p < from_prod.npoints() / nx; ++p)
        for (int xi = 0; xi < nx; ++xi) img[p * nx + xi] = left(p) * nx + xi;
    return GMap(from_prod, to_prod, std::move(img));
}

}  // namespace

GMap coset_mul_map(const GSet& from, const GSet& to, int e) {
    // Under the base-point identifications g*base <-> gH the intended map
    // xH_j -> x e H_i sends the source base to e * (target base).
    int image = to.act(e, to.orbits()[0].base);
    return GMap::from_base_images(from, to, {image});
}

MackeyModule zero_module(const GreenFunctor& r) {
    const auto& classes = r.group().subgroup_classes();
    std::vector<MackeyModule::ClassData> data(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Subgroup& hi = classes[i].rep;
        data[i].level = PresentedAbGroup(0, IntMatrix(0, 0));
        data[i].conj.assign(r.group().weyl(hi).coset_reps.size(), IntMatrix(0, 0));
        data[i].action.assign(r.rank(hi), IntMatrix(0, 0));
        const SuborbitTable& tbl = suborbit_table(r.group(), static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            data[i].res.emplace(key, IntMatrix(0, 0));
            data[i].ind.emplace(key, IntMatrix(0, 0));
        }
    }
    return MackeyModule(r, std::move(data));
}

MackeyModule unit_module(const GreenFunctor& r) {
    const FiniteGroup& g = r.group();
    const auto& classes = g.subgroup_classes();
    std::vector<MackeyModule::ClassData> data(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Subgroup& hi = classes[i].rep;
        std::size_t rk = r.rank(hi);
        data[i].level = PresentedAbGroup::free_group(rk);
        for (int n : g.weyl(hi).coset_reps) data[i].conj.push_back(r.conj(hi, n));
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            const Subgroup& s = tbl.slot_sub.at(key);
            int us = g.conjugator_from_rep(s);
            data[i].res.emplace(key, r.conj(s, g.inv(us)) * r.res(hi, s));
            Subgroup hj = g.subgroup_classes()[tbl.by_subgroup.at(key).cls].rep;
            data[i].ind.emplace(key, r.ind(s, hi) * r.conj(hj, us));
        }
        for (std::size_t b = 0; b < rk; ++b) {
            IntMatrix act(rk, rk);
            for (std::size_t c = 0; c < rk; ++c) act.set_column(c, r.mult(hi, basis_vec(rk, b), basis_vec(rk, c)));
            data[i].action.push_back(std::move(act));
        }
    }
    return MackeyModule(r, std::move(data));
}

MackeyModule shift_module(const MackeyModule& m, const GSet& x) {
    const GreenFunctor& r = m.functor();
    const FiniteGroup& g = r.group();
    const auto& classes = g.subgroup_classes();
    int nx = x.npoints();
    std::vector<GSet> orbit_sets, products;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        orbit_sets.push_back(GSet::orbit(g, classes[i].rep));
        products.push_back(GSet::product(orbit_sets[i], x));
    }
    std::vector<MackeyModule::ClassData> data(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Subgroup& hi = classes[i].rep;
        data[i].level = evaluate(m, products[i]).group;
        for (int n : g.weyl(hi).coset_reps) {
            GMap c = coset_mul_map(orbit_sets[i], orbit_sets[i], n);
            data[i].conj.push_back(evaluate_contravariant(m, product_map(products[i], products[i], c, nx)));
        }
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            std::size_t j = tbl.by_subgroup.at(key).cls;
            int us = g.conjugator_from_rep(tbl.slot_sub.at(key));
            GMap c = coset_mul_map(orbit_sets[j], orbit_sets[i], g.inv(us));
            GMap pc = product_map(products[j], products[i], c, nx);
            data[i].res.emplace(key, evaluate_contravariant(m, pc));
            data[i].ind.emplace(key, evaluate_covariant(m, pc));
        }
        std::size_t rk = r.rank(hi);
        IntMatrix pull = green_contravariant(r, GMap::proj1(orbit_sets[i], x));
        for (std::size_t b = 0; b < rk; ++b) {
            GreenValue val = GreenValue::from_flat(r, products[i], pull.apply(basis_vec(rk, b)));
            data[i].action.push_back(value_action(m, products[i], val));
        }
    }
    return MackeyModule(r, std::move(data));
}

MackeyModule representable(const GreenFunctor& r, const GSet& x) { return shift_module(unit_module(r), x); }

MackeyModule abelian_module(const GreenFunctor& r, const PresentedAbGroup& a) {
    if (r.group().order() != 1) throw std::invalid_argument("abelian_module: group must be trivial");
    std::vector<MackeyModule::ClassData> data(1);
    data[0].level = a;
    data[0].conj.push_back(IntMatrix::identity(a.ngens()));
    data[0].action.push_back(IntMatrix::identity(a.ngens()));
    return MackeyModule(r, std::move(data));
}

MackeyModule direct_sum_modules(const std::vector<MackeyModule>& ms) {
    if (ms.empty()) throw std::invalid_argument("direct_sum_modules: empty");
    const GreenFunctor& r = ms[0].functor();
    const FiniteGroup& g = r.group();
    const auto& classes = g.subgroup_classes();
    std::vector<MackeyModule::ClassData> data(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        data[i].level = PresentedAbGroup(0, IntMatrix(0, 0));
        for (const auto& m : ms) data[i].level = data[i].level.direct_sum(m.level(i));
        std::size_t ncosets = g.weyl(classes[i].rep).coset_reps.size();
        for (std::size_t c = 0; c < ncosets; ++c) {
            IntMatrix blk(0, 0);
            for (const auto& m : ms) blk = blk.diag_sum(m.class_data(i).conj[c]);
            data[i].conj.push_back(std::move(blk));
        }
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            IntMatrix rblk(0, 0), iblk(0, 0);
            for (const auto& m : ms) {
                rblk = rblk.diag_sum(m.class_data(i).res.at(key));
                iblk = iblk.diag_sum(m.class_data(i).ind.at(key));
            }
            data[i].res.emplace(key, std::move(rblk));
            data[i].ind.emplace(key, std::move(iblk));
        }
        std::size_t rk = r.rank(classes[i].rep);
        for (std::size_t b = 0; b < rk; ++b) {
            IntMatrix blk(0, 0);
            for (const auto& m : ms) blk = blk.diag_sum(m.class_data(i).action[b]);
            data[i].action.push_back(std::move(blk));
        }
    }
    return MackeyModule(r, std::move(data));
}

namespace {

// Generic sub-lattice module: per class a lattice basis (columns in the level
// generator coordinates of `m`) closed under all structure maps; builds the
// module presented on the basis plus the inclusion hom.
ModuleWithMap sublattice_module(const MackeyModule& m, const std::vector<IntMatrix>& lattices) {
    const FiniteGroup& g = m.group();
    const GreenFunctor& r = m.functor();
    const auto& classes = g.subgroup_classes();
    std::vector<IntMatrix> basis(classes.size());
    std::vector<SubquotientPresentation> sq(classes.size());
    std::vector<MackeyModule::ClassData> data(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        sq[i] = subquotient(m.level(i).ngens(), lattices[i], m.level(i).relations());
        basis[i] = sq[i].basis;
        data[i].level = sq[i].group;
    }
    auto induce = [&](std::size_t tgt, const IntMatrix& map, std::size_t src) {
        return induced_matrix(basis[tgt], m.level(tgt).relations(), map, basis[src]);
    };
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::size_t ncosets = g.weyl(classes[i].rep).coset_reps.size();
        for (std::size_t c = 0; c < ncosets; ++c) data[i].conj.push_back(induce(i, m.class_data(i).conj[c], i));
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            std::size_t j = tbl.by_subgroup.at(key).cls;
            data[i].res.emplace(key, induce(j, m.class_data(i).res.at(key), i));
            data[i].ind.emplace(key, induce(i, m.class_data(i).ind.at(key), j));
        }
        for (const auto& act : m.class_data(i).action) data[i].action.push_back(induce(i, act, i));
    }
    MackeyModule sub(r, std::move(data));
    ModuleHom incl{sub, m, basis};
    return {sub, incl};
}

}  // namespace

ModuleWithMap kernel_module(const ModuleHom& h) {
    const MackeyModule& m = h.src;
    std::vector<IntMatrix> lattices;
    for (std::size_t i = 0; i < m.nclasses(); ++i) {
        IntMatrix pre = preimage_lattice(h.comps[i], h.dst.level(i).relations());
        lattices.push_back(pre.hcat(m.level(i).relations()));
    }
    return sublattice_module(m, lattices);
}

ModuleWithMap image_module(const ModuleHom& h) {
    const MackeyModule& n = h.dst;
    std::vector<IntMatrix> lattices;
    for (std::size_t i = 0; i < n.nclasses(); ++i) lattices.push_back(h.comps[i].hcat(n.level(i).relations()));
    return sublattice_module(n, lattices);
}

ModuleWithMap cokernel_module(const ModuleHom& h) {
    const MackeyModule& n = h.dst;
    const FiniteGroup& g = n.group();
    const auto& classes = g.subgroup_classes();
    std::vector<MackeyModule::ClassData> data(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        data[i] = n.class_data(i);
        data[i].level = n.level(i).quotient(h.comps[i]);
    }
    MackeyModule q(n.functor(), std::move(data));
    std::vector<IntMatrix> id;
    for (std::size_t i = 0; i < classes.size(); ++i) id.push_back(IntMatrix::identity(n.level(i).ngens()));
    return {q, ModuleHom{n, q, std::move(id)}};
}

ModuleWithMap submodule_generated(const MackeyModule& m, const std::vector<std::vector<IntVec>>& elements) {
    const FiniteGroup& g = m.group();
    const auto& classes = g.subgroup_classes();
    std::size_t ncls = classes.size();
    std::vector<IntMatrix> lat(ncls);
    for (std::size_t i = 0; i < ncls; ++i) {
        std::vector<IntVec> cols = elements.size() > i ? elements[i] : std::vector<IntVec>{};
        for (std::size_t c = 0; c < m.level(i).relations().cols(); ++c)
            cols.push_back(m.level(i).relations().column_vec(c));
        lat[i] = column_lattice_basis(IntMatrix::from_columns(m.level(i).ngens(), cols));
    }
    // batched worklist: per pass, collect every image outside the current
    // lattices, then extend each lattice once
    for (;;) {
        std::vector<std::unique_ptr<RepeatedSolver>> solver(ncls);
        for (std::size_t i = 0; i < ncls; ++i) solver[i] = std::make_unique<RepeatedSolver>(lat[i]);
        std::vector<std::vector<IntVec>> fresh(ncls);
        auto feed = [&](std::size_t tgt, IntVec v) {
            if (lat[tgt].cols() == 0 ? !is_zero_vec(v) : !solver[tgt]->solve(v).has_value())
                fresh[tgt].push_back(std::move(v));
        };
        for (std::size_t i = 0; i < ncls; ++i) {
            const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
            for (std::size_t c = 0; c < lat[i].cols(); ++c) {
                IntVec v = lat[i].column_vec(c);
                for (const auto& cm : m.class_data(i).conj) feed(i, cm.apply(v));
                for (const auto& act : m.class_data(i).action) feed(i, act.apply(v));
                for (const auto& key : tbl.slot_keys) feed(tbl.by_subgroup.at(key).cls, m.class_data(i).res.at(key).apply(v));
            }
            for (const auto& key : tbl.slot_keys) {
                std::size_t j = tbl.by_subgroup.at(key).cls;
                for (std::size_t c = 0; c < lat[j].cols(); ++c)
                    feed(i, m.class_data(i).ind.at(key).apply(lat[j].column_vec(c)));
            }
        }
        bool grew = false;
        for (std::size_t i = 0; i < ncls; ++i) {
            if (fresh[i].empty()) continue;
            grew = true;
            IntMatrix extra = IntMatrix::from_columns(m.level(i).ngens(), fresh[i]);
            lat[i] = column_lattice_basis(lat[i].hcat(extra));
        }
        if (!grew) break;
    }
    return sublattice_module(m, lat);
}

MackeyModule restrict_module(const MackeyModule& m, const Subgroup& sub) {
    const FiniteGroup& g = m.group();
    const FiniteGroup& mg = g.materialize(sub);
    const GreenFunctor& rsub = m.functor().kind() == GreenKind::Representation ? GreenFunctor::representation(mg)
                                                                               : GreenFunctor::burnside(mg);
    const auto& sub_classes = mg.subgroup_classes();
    std::vector<MackeyModule::ClassData> data(sub_classes.size());
    for (std::size_t j = 0; j < sub_classes.size(); ++j) {
        Subgroup k = to_parent_subgroup(g, mg, sub_classes[j].rep);
        data[j].level = m.level(g.class_of_subgroup(k));
        for (int n_loc : mg.weyl(sub_classes[j].rep).coset_reps)
            data[j].conj.push_back(m.con_map(mg.parent_elements()[n_loc], k));
        const SuborbitTable& tbl = suborbit_table(mg, static_cast<int>(j));
        for (const auto& key : tbl.slot_keys) {
            const Subgroup& s_loc = tbl.slot_sub.at(key);
            Subgroup s = to_parent_subgroup(g, mg, s_loc);
            int us_loc = mg.conjugator_from_rep(s_loc);
            int us = mg.parent_elements()[us_loc];
            data[j].res.emplace(key, m.con_map(g.inv(us), s) * m.res_map(k, s));
            Subgroup hj_loc = sub_classes[tbl.by_subgroup.at(key).cls].rep;
            Subgroup hj = to_parent_subgroup(g, mg, hj_loc);
            data[j].ind.emplace(key, m.ind_map(s, k) * m.con_map(us, hj));
        }
        std::size_t rk = rsub.rank(sub_classes[j].rep);
        for (std::size_t b = 0; b < rk; ++b) data[j].action.push_back(m.action_map(k, basis_vec(rk, b)));
    }
    return MackeyModule(rsub, std::move(data));
}

GSet restrict_gset(const FiniteGroup& g, const Subgroup& sub, const GSet& x) {
    const FiniteGroup& mg = g.materialize(sub);
    std::vector<std::vector<int>> act(mg.order(), std::vector<int>(x.npoints()));
    for (int a = 0; a < mg.order(); ++a)
        for (int p = 0; p < x.npoints(); ++p) act[a][p] = x.act(mg.parent_elements()[a], p);
    return GSet::from_action(mg, std::move(act), "res(" + x.label() + ")");
}

GreenValue green_restrict_value(const GreenFunctor& parent, const GreenFunctor& sub_functor, const GSet& x_parent,
                                const GSet& x_restricted, const GreenValue& v) {
    const FiniteGroup& g = parent.group();
    const FiniteGroup& mg = sub_functor.group();
    const auto& g_classes = g.subgroup_classes();
    GreenValue out{x_restricted, {}};
    for (const auto& o : x_restricted.orbits()) {
        int q = o.base;
        // component of v at q in the parent world: conj-transport from the
        // parent orbit base, then restrict to the subgroup stabilizer
        int po = x_parent.orbit_of(q);
        const Subgroup& k_par = g_classes[x_parent.orbits()[po].cls].rep;
        int t = x_parent.transversal_of(q);
        Subgroup kt = g.conjugate_subgroup(k_par, t);  // ^t K = Stab_G(q)
        Subgroup stab_sub = to_parent_subgroup(g, mg, mg.subgroup_classes()[o.cls].rep);
        IntVec comp = parent.res(kt, stab_sub).apply(parent.conj(k_par, t).apply(v.comps[po]));
        out.comps.push_back(std::move(comp));
    }
    return out;
}

MackeyModule induce_module(const MackeyModule& m_sub, const FiniteGroup& g, const Subgroup& sub) {
    const FiniteGroup& mg = g.materialize(sub);
    if (&m_sub.group() != &mg) throw std::invalid_argument("induce_module: module not over the materialized subgroup");
    const GreenFunctor& r = m_sub.functor().kind() == GreenKind::Representation ? GreenFunctor::representation(g)
                                                                                : GreenFunctor::burnside(g);
    const auto& classes = g.subgroup_classes();
    std::vector<GSet> orbit_sets, restricted;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        orbit_sets.push_back(GSet::orbit(g, classes[i].rep));
        restricted.push_back(restrict_gset(g, sub, orbit_sets[i]));
    }
    std::vector<MackeyModule::ClassData> data(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Subgroup& hi = classes[i].rep;
        data[i].level = evaluate(m_sub, restricted[i]).group;
        for (int n : g.weyl(hi).coset_reps) {
            GMap c = coset_mul_map(orbit_sets[i], orbit_sets[i], n);
            GMap rc(restricted[i], restricted[i], c.images());
            data[i].conj.push_back(evaluate_contravariant(m_sub, rc));
        }
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            std::size_t j = tbl.by_subgroup.at(key).cls;
            int us = g.conjugator_from_rep(tbl.slot_sub.at(key));
            GMap c = coset_mul_map(orbit_sets[j], orbit_sets[i], g.inv(us));
            GMap rc(restricted[j], restricted[i], c.images());
            data[i].res.emplace(key, evaluate_contravariant(m_sub, rc));
            data[i].ind.emplace(key, evaluate_covariant(m_sub, rc));
        }
        std::size_t rk = r.rank(hi);
        for (std::size_t b = 0; b < rk; ++b) {
            GreenValue vb{orbit_sets[i], {basis_vec(rk, b)}};
            GreenValue vres = green_restrict_value(r, m_sub.functor(), orbit_sets[i], restricted[i], vb);
            data[i].action.push_back(value_action(m_sub, restricted[i], vres));
        }
    }
    return MackeyModule(r, std::move(data));
}

IntVec yoneda_element(const GreenFunctor& r, const GSet& x) {
    const FiniteGroup& g = r.group();
    const auto& classes = g.subgroup_classes();
    IntVec out;
    for (const auto& o : x.orbits()) {
        GSet s = GSet::orbit(g, classes[o.cls].rep);
        GSet p = GSet::product(s, x);
        // graph of the orbit inclusion: base of s -> (base of s, o.base)
        GMap graph = GMap::from_base_images(s, p, {s.orbits()[0].base * x.npoints() + o.base});
        IntVec comp = green_covariant(r, graph).apply(green_unit(r, s).flat());
        out.insert(out.end(), comp.begin(), comp.end());
    }
    return out;
}

ModuleHom yoneda_hom(const MackeyModule& rep_x, const MackeyModule& m, const GSet& x, const IntVec& elem) {
    const GreenFunctor& r = m.functor();
    const FiniteGroup& g = r.group();
    const auto& classes = g.subgroup_classes();
    std::vector<IntMatrix> comps;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        GSet s = GSet::orbit(g, classes[j].rep);
        GSet p = GSet::product(s, x);
        IntMatrix down = evaluate_contravariant(m, GMap::proj2(s, x));
        IntMatrix up = evaluate_covariant(m, GMap::proj1(s, x));
        IntVec pulled = down.apply(elem);
        std::size_t nbasis = rep_x.level(j).ngens();
        IntMatrix col(m.level(j).ngens(), nbasis);
        for (std::size_t b = 0; b < nbasis; ++b) {
            GreenValue beta = GreenValue::from_flat(r, p, basis_vec(nbasis, b));
            col.set_column(b, up.apply(value_action(m, p, beta).apply(pulled)));
        }
        comps.push_back(std::move(col));
    }
    return ModuleHom{rep_x, m, std::move(comps)};
}

IntMatrix evaluate_hom(const ModuleHom& h, const GSet& x) {
    IntMatrix out(0, 0);
    for (const auto& o : x.orbits()) out = out.diag_sum(h.comps[o.cls]);
    return out;
}

ModuleHom hom_from_summands(const MackeyModule& sum, const MackeyModule& target, const std::vector<ModuleHom>& parts) {
    std::vector<IntMatrix> comps;
    for (std::size_t i = 0; i < sum.nclasses(); ++i) {
        IntMatrix m(target.level(i).ngens(), 0);
        for (const auto& part : parts) m = m.hcat(part.comps[i]);
        comps.push_back(std::move(m));
    }
    return ModuleHom{sum, target, std::move(comps)};
}

}  // namespace specseq
