#include "specseq/burnside.hpp"

#include <algorithm>

#include "specseq/chartable.hpp"
#include "specseq/smith.hpp"

namespace specseq {

Subgroup to_local_subgroup(const FiniteGroup& mat, const Subgroup& parent_sub) {
    const auto& pm = mat.parent_elements();
    std::vector<int> local;
    local.reserve(parent_sub.elems.size());
    for (int e : parent_sub.elems) {
        auto it = std::lower_bound(pm.begin(), pm.end(), e);
        if (it == pm.end() || *it != e) throw std::invalid_argument("to_local_subgroup: element outside subgroup");
        local.push_back(static_cast<int>(it - pm.begin()));
    }
    std::sort(local.begin(), local.end());
    return Subgroup{&mat, std::move(local)};
}

Subgroup to_parent_subgroup(const FiniteGroup& g, const FiniteGroup& mat, const Subgroup& local_sub) {
    std::vector<int> parent;
    parent.reserve(local_sub.elems.size());
    for (int e : local_sub.elems) parent.push_back(mat.parent_elements()[e]);
    std::sort(parent.begin(), parent.end());
    return Subgroup{&g, std::move(parent)};
}

const BurnsideRing& BurnsideRing::of(const FiniteGroup& h) {
    auto cached = std::static_pointer_cast<const BurnsideRing>(h.plugin_get("burnside"));
    if (cached) return *cached;
    auto ring = std::make_shared<BurnsideRing>();
    ring->h = &h;
    const auto& classes = h.subgroup_classes();
    std::size_t r = classes.size();
    ring->marks = IntMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const Subgroup& li = classes[i].rep;
        auto cosets = h.left_coset_reps(li);
        for (std::size_t j = 0; j < r; ++j) {
            const Subgroup& kj = classes[j].rep;
            long count = 0;
            for (int c : cosets) {
                bool fixed = true;
                int cinv = h.inv(c);
                for (int k : kj.elems)
                    if (!li.contains(h.mul(h.mul(cinv, k), c))) {
                        fixed = false;
                        break;
                    }
                if (fixed) ++count;
            }
            ring->marks.at(i, j) = count;
        }
    }
    auto stored = std::static_pointer_cast<const BurnsideRing>(h.plugin_put("burnside", ring));
    return *stored;
}

IntVec BurnsideRing::unit() const {
    IntVec u(rank(), Int(0));
    u[rank() - 1] = 1;  // classes are sorted by order; the full subgroup is last
    return u;
}

IntVec BurnsideRing::mult(const IntVec& a, const IntVec& b) const {
    const auto& classes = h->subgroup_classes();
    IntVec out(rank(), Int(0));
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (b[j] == 0) continue;
            for (int x : h->double_coset_reps(classes[i].rep, classes[j].rep)) {
                Subgroup inter = h->intersect(classes[i].rep, h->conjugate_subgroup(classes[j].rep, x));
                out[h->class_of_subgroup(inter)] += a[i] * b[j];
            }
        }
    }
    return out;
}

IntVec BurnsideRing::mark_vector(const IntVec& a) const {
    IntVec v(rank(), Int(0));
    for (std::size_t j = 0; j < rank(); ++j)
        for (std::size_t i = 0; i < rank(); ++i) v[j] += a[i] * marks.at(i, j);
    return v;
}

IntVec BurnsideRing::mult_via_marks(const IntVec& a, const IntVec& b) const {
    IntVec va = mark_vector(a), vb = mark_vector(b);
    IntVec w(rank());
    for (std::size_t j = 0; j < rank(); ++j) w[j] = va[j] * vb[j];
    auto c = solve_linear(marks.transpose(), w);
    if (!c) throw std::runtime_error("burnside: marks system has no integral solution");
    return *c;
}

IntMatrix bur_res_matrix(const FiniteGroup& g, const Subgroup& h, const Subgroup& l) {
    if (!h.contains_subgroup(l)) throw std::invalid_argument("bur_res_matrix: L not contained in H");
    const FiniteGroup& mh = g.materialize(h);
    const FiniteGroup& ml = g.materialize(l);
    const auto& ch = mh.subgroup_classes();
    const auto& cl = ml.subgroup_classes();
    Subgroup l_in_h = to_local_subgroup(mh, l);
    IntMatrix out(cl.size(), ch.size());
    for (std::size_t j = 0; j < ch.size(); ++j) {
        for (int x : mh.double_coset_reps(l_in_h, ch[j].rep)) {
            Subgroup inter = mh.intersect(l_in_h, mh.conjugate_subgroup(ch[j].rep, x));
            Subgroup in_l = to_local_subgroup(ml, to_parent_subgroup(g, mh, inter));
            out.at(ml.class_of_subgroup(in_l), j) += 1;
        }
    }
    return out;
}

IntMatrix bur_ind_matrix(const FiniteGroup& g, const Subgroup& l, const Subgroup& h) {
    if (!h.contains_subgroup(l)) throw std::invalid_argument("bur_ind_matrix: L not contained in H");
    const FiniteGroup& mh = g.materialize(h);
    const FiniteGroup& ml = g.materialize(l);
    const auto& cl = ml.subgroup_classes();
    IntMatrix out(mh.subgroup_classes().size(), cl.size());
    for (std::size_t j = 0; j < cl.size(); ++j) {
        Subgroup in_h = to_local_subgroup(mh, to_parent_subgroup(g, ml, cl[j].rep));
        out.at(mh.class_of_subgroup(in_h), j) += 1;
    }
    return out;
}

IntMatrix bur_conj_matrix(const FiniteGroup& g, const Subgroup& h, int conj_by) {
    Subgroup hc = g.conjugate_subgroup(h, conj_by);
    const FiniteGroup& mh = g.materialize(h);
    const FiniteGroup& mc = g.materialize(hc);
    const auto& ch = mh.subgroup_classes();
    IntMatrix out(mc.subgroup_classes().size(), ch.size());
    for (std::size_t j = 0; j < ch.size(); ++j) {
        Subgroup parent = to_parent_subgroup(g, mh, ch[j].rep);
        Subgroup conj = g.conjugate_subgroup(parent, conj_by);
        out.at(mc.class_of_subgroup(to_local_subgroup(mc, conj)), j) += 1;
    }
    return out;
}

IntMatrix linearization_matrix(const FiniteGroup& g, const Subgroup& h) {
    const FiniteGroup& mh = g.materialize(h);
    const auto& classes = mh.subgroup_classes();
    const CharacterTable& th = CharacterTable::of(mh);
    IntMatrix out(th.nchars(), classes.size());
    for (std::size_t j = 0; j < classes.size(); ++j) {
        Subgroup k = to_parent_subgroup(g, mh, classes[j].rep);
        IntMatrix ind = rep_ind_matrix(g, k, h);
        IntVec triv = rep_ring_unit(g.materialize(k));
        out.set_column(j, ind.apply(triv));
    }
    return out;
}

}  // namespace specseq
