#include "specseq/mackey.hpp"

#include <algorithm>
#include <sstream>

namespace specseq {

const SuborbitTable& suborbit_table(const FiniteGroup& g, int cls) {
    std::string plugin = "suborbits:" + std::to_string(cls);
    auto cached = std::static_pointer_cast<const SuborbitTable>(g.plugin_get(plugin));
    if (cached) return *cached;

    auto t = std::make_shared<SuborbitTable>();
    const Subgroup& rep = g.subgroup_classes()[cls].rep;
    const FiniteGroup& mh = g.materialize(rep);
    const WeylData& w = g.weyl(rep);
    // all subgroups of the representative, as subgroups of g
    std::vector<Subgroup> subs;
    for (const auto& local : mh.all_subgroups()) {
        std::vector<int> parent;
        for (int e : local.elems) parent.push_back(mh.parent_elements()[e]);
        std::sort(parent.begin(), parent.end());
        subs.push_back(Subgroup{&g, std::move(parent)});
    }
    std::sort(subs.begin(), subs.end());
    // N_G(rep)-orbits
    (void)w;
    Subgroup normals = g.normalizer(rep);
    std::map<std::string, std::pair<std::string, int>> assignment;  // subgroup key -> (slot key, n)
    for (const auto& s : subs) {
        if (assignment.count(s.key())) continue;
        // s is the least unassigned, hence the orbit representative
        for (int n : normals.elems) {
            Subgroup img = g.conjugate_subgroup(s, n);
            if (!assignment.count(img.key())) assignment[img.key()] = {s.key(), n};
        }
        if (!(s == rep)) {
            t->slot_keys.push_back(s.key());
            t->slot_sub.emplace(s.key(), s);
        }
    }
    for (const auto& s : subs)
        t->by_subgroup[s.key()] =
            SuborbitTable::Entry{assignment[s.key()].first, assignment[s.key()].second, g.class_of_subgroup(s)};
    std::sort(t->slot_keys.begin(), t->slot_keys.end());
    return *std::static_pointer_cast<const SuborbitTable>(g.plugin_put(plugin, t));
}

std::string AxiomReport::str() const {
    if (pass()) return "pass";
    std::ostringstream os;
    os << failures.size() << " failed identities:";
    for (const auto& f : failures) os << "\n  " << f.identity << " @ " << f.instance;
    return os.str();
}

MackeyModule::MackeyModule(const GreenFunctor& r, std::vector<ClassData> data) {
    auto d = std::make_shared<Data>();
    d->r = &r;
    d->g = &r.group();
    d->cls = std::move(data);
    const auto& classes = d->g->subgroup_classes();
    if (d->cls.size() != classes.size()) throw std::invalid_argument("mackey module: wrong class count");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& cd = d->cls[i];
        const WeylData& w = d->g->weyl(classes[i].rep);
        if (cd.conj.size() != w.coset_reps.size()) throw std::invalid_argument("mackey module: conj slot count");
        if (cd.action.size() != r.rank(classes[i].rep)) throw std::invalid_argument("mackey module: action slot count");
        const SuborbitTable& tbl = suborbit_table(*d->g, static_cast<int>(i));
        if (cd.res.size() != tbl.slot_keys.size() || cd.ind.size() != tbl.slot_keys.size())
            throw std::invalid_argument("mackey module: res/ind slot count");
        std::size_t n = cd.level.ngens();
        for (const auto& m : cd.conj)
            if (m.rows() != n || m.cols() != n) throw std::invalid_argument("mackey module: conj shape");
        for (const auto& m : cd.action)
            if (m.rows() != n || m.cols() != n) throw std::invalid_argument("mackey module: action shape");
        for (const auto& key : tbl.slot_keys) {
            std::size_t j = tbl.by_subgroup.at(key).cls;
            if (!cd.res.count(key) || !cd.ind.count(key)) throw std::invalid_argument("mackey module: missing slot");
            if (cd.res.at(key).rows() != d->cls[j].level.ngens() || cd.res.at(key).cols() != n)
                throw std::invalid_argument("mackey module: res shape");
            if (cd.ind.at(key).rows() != n || cd.ind.at(key).cols() != d->cls[j].level.ngens())
                throw std::invalid_argument("mackey module: ind shape");
        }
    }
    d_ = std::move(d);
}

bool MackeyModule::is_zero() const {
    for (const auto& c : d_->cls)
        if (!c.level.is_trivial()) return false;
    return true;
}

const IntMatrix& MackeyModule::cached(const std::string& key, const std::function<IntMatrix()>& make) const {
    {
        std::lock_guard<std::mutex> lock(d_->mutex);
        auto it = d_->derived.find(key);
        if (it != d_->derived.end()) return it->second;
    }
    IntMatrix m = make();
    std::lock_guard<std::mutex> lock(d_->mutex);
    return d_->derived.emplace(key, std::move(m)).first->second;
}

IntMatrix MackeyModule::weyl_con(std::size_t cls, int n) const {
    const FiniteGroup& g = *d_->g;
    const WeylData& w = g.weyl(g.subgroup_classes()[cls].rep);
    int coset = w.coset_of[n];
    if (coset < 0) throw std::logic_error("weyl_con: element not in the normalizer");
    return d_->cls[cls].conj[coset];
}

IntMatrix MackeyModule::con_map(int g0, const Subgroup& k) const {
    const FiniteGroup& g = *d_->g;
    std::size_t i = g.class_of_subgroup(k);
    Subgroup kc = g.conjugate_subgroup(k, g0);
    int uk = g.conjugator_from_rep(k);
    int ukc = g.conjugator_from_rep(kc);
    int n = g.mul(g.mul(g.inv(ukc), g0), uk);
    return cached("c:" + std::to_string(i) + ":" + std::to_string(n),
                  [&] { return weyl_con(i, n); });
}

IntMatrix MackeyModule::res_map(const Subgroup& h, const Subgroup& l) const {
    if (h == l) return IntMatrix::identity(d_->cls[d_->g->class_of_subgroup(h)].level.ngens());
    const FiniteGroup& g = *d_->g;
    return cached("r:" + h.key() + "|" + l.key(), [&] {
        std::size_t i = g.class_of_subgroup(h);
        std::size_t j = g.class_of_subgroup(l);
        int uh = g.conjugator_from_rep(h);
        int ul = g.conjugator_from_rep(l);
        Subgroup l0 = g.conjugate_subgroup(l, g.inv(uh));
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        const auto& e = tbl.by_subgroup.at(l0.key());
        int n = e.conj;
        int us = g.conjugator_from_rep(tbl.slot_sub.at(e.slot));
        int b = g.mul(g.mul(g.inv(ul), uh), n);
        return weyl_con(j, g.mul(b, us)) * d_->cls[i].res.at(e.slot) * weyl_con(i, g.inv(n));
    });
}

IntMatrix MackeyModule::ind_map(const Subgroup& l, const Subgroup& h) const {
    if (h == l) return IntMatrix::identity(d_->cls[d_->g->class_of_subgroup(h)].level.ngens());
    const FiniteGroup& g = *d_->g;
    return cached("i:" + l.key() + "|" + h.key(), [&] {
        std::size_t i = g.class_of_subgroup(h);
        std::size_t j = g.class_of_subgroup(l);
        int uh = g.conjugator_from_rep(h);
        int ul = g.conjugator_from_rep(l);
        Subgroup l0 = g.conjugate_subgroup(l, g.inv(uh));
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        const auto& e = tbl.by_subgroup.at(l0.key());
        int n = e.conj;
        int us = g.conjugator_from_rep(tbl.slot_sub.at(e.slot));
        int c = g.mul(g.mul(g.mul(g.inv(us), g.inv(n)), g.inv(uh)), ul);
        return weyl_con(i, n) * d_->cls[i].ind.at(e.slot) * weyl_con(j, c);
    });
}

IntMatrix MackeyModule::action_map(const Subgroup& h, const IntVec& r) const {
    const FiniteGroup& g = *d_->g;
    std::size_t i = g.class_of_subgroup(h);
    int uh = g.conjugator_from_rep(h);
    IntVec rc = d_->r->conj(h, g.inv(uh)).apply(r);
    std::size_t n = d_->cls[i].level.ngens();
    IntMatrix out(n, n);
    for (std::size_t b = 0; b < rc.size(); ++b)
        if (rc[b] != 0) out = out + d_->cls[i].action[b].scaled(rc[b]);
    return out;
}

namespace {

bool maps_equal(const PresentedAbGroup& target, const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!target.contains_zero(a.column_vec(j) - b.column_vec(j))) return false;
    return true;
}

}  // namespace

AxiomReport MackeyModule::check_axioms(bool stop_at_first) const {
    AxiomReport rep;
    const FiniteGroup& g = *d_->g;
    const auto& classes = g.subgroup_classes();
    auto fail = [&](const std::string& id, const std::string& inst) { rep.failures.push_back({id, inst}); };
    auto bail = [&] { return stop_at_first && !rep.failures.empty(); };

    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Subgroup& hi = classes[i].rep;
        const WeylData& w = g.weyl(hi);
        const PresentedAbGroup& lvl = d_->cls[i].level;
        // identity axioms on the Weyl table (con_h = id for h in H is coset 0)
        if (!maps_equal(lvl, d_->cls[i].conj[0], IntMatrix::identity(lvl.ngens())))
            fail("conj-identity", "class " + std::to_string(i));
        for (std::size_t a = 0; a < w.coset_reps.size(); ++a)
            for (std::size_t b = 0; b < w.coset_reps.size(); ++b) {
                int prod = g.mul(w.coset_reps[a], w.coset_reps[b]);
                if (!maps_equal(lvl, d_->cls[i].conj[a] * d_->cls[i].conj[b], weyl_con(i, prod)))
                    fail("conj-composition", "class " + std::to_string(i) + " cosets " + std::to_string(a) + "," +
                                                 std::to_string(b));
            }
        // action: unital and associative
        std::size_t rk = d_->r->rank(hi);
        if (!maps_equal(lvl, action_map(hi, d_->r->unit(hi)), IntMatrix::identity(lvl.ngens())))
            fail("action-unital", "class " + std::to_string(i));
        for (std::size_t a = 0; a < rk; ++a)
            for (std::size_t b = 0; b < rk; ++b) {
                IntVec ea(rk, Int(0)), eb(rk, Int(0));
                ea[a] = 1;
                eb[b] = 1;
                IntMatrix lhs = d_->cls[i].action[a] * d_->cls[i].action[b];
                IntMatrix rhs = action_map(hi, d_->r->mult(hi, ea, eb));
                if (!maps_equal(lvl, lhs, rhs))
                    fail("action-associative",
                         "class " + std::to_string(i) + " basis " + std::to_string(a) + "," + std::to_string(b));
            }
    }

    if (bail()) return rep;

    // conjugation functoriality over all pairs of elements, at class reps
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Subgroup& k = classes[i].rep;
        for (int f = 0; f < g.order(); ++f)
            for (int h = 0; h < g.order(); ++h) {
                Subgroup kh = g.conjugate_subgroup(k, h);
                IntMatrix lhs = con_map(f, kh) * con_map(h, k);
                IntMatrix rhs = con_map(g.mul(f, h), k);
                std::size_t tgt = g.class_of_subgroup(g.conjugate_subgroup(kh, f));
                if (!maps_equal(d_->cls[tgt].level, lhs, rhs))
                    fail("conj-functoriality",
                         "class " + std::to_string(i) + " f=" + std::to_string(f) + " g=" + std::to_string(h));
            }
    }

    if (bail()) return rep;

    // per class representative H: relations over subgroups of H
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (bail()) return rep;
        const Subgroup& h = classes[i].rep;
        std::vector<Subgroup> subs;
        {
            const FiniteGroup& mh = g.materialize(h);
            for (const auto& local : mh.all_subgroups()) subs.push_back(to_parent_subgroup(g, mh, local));
            std::sort(subs.begin(), subs.end());
        }
        std::size_t rk = d_->r->rank(h);

        for (const auto& l : subs) {
            if (bail()) return rep;
            std::size_t jl = g.class_of_subgroup(l);
            // transitivity through every intermediate K with L <= K <= H
            for (const auto& k : subs) {
                if (!k.contains_subgroup(l)) continue;
                if (!maps_equal(d_->cls[jl].level, res_map(k, l) * res_map(h, k), res_map(h, l)))
                    fail("res-transitivity", "H cls " + std::to_string(i) + " K " + k.key() + " L " + l.key());
                if (!maps_equal(d_->cls[i].level, ind_map(k, h) * ind_map(l, k), ind_map(l, h)))
                    fail("ind-transitivity", "H cls " + std::to_string(i) + " K " + k.key() + " L " + l.key());
            }
            // conjugation compatibility
            for (int c = 0; c < g.order(); ++c) {
                Subgroup hc = g.conjugate_subgroup(h, c);
                Subgroup lc = g.conjugate_subgroup(l, c);
                std::size_t jlc = g.class_of_subgroup(lc);
                if (!maps_equal(d_->cls[jlc].level, con_map(c, l) * res_map(h, l), res_map(hc, lc) * con_map(c, h)))
                    fail("conj-res", "H cls " + std::to_string(i) + " L " + l.key() + " g=" + std::to_string(c));
                std::size_t ic = g.class_of_subgroup(hc);
                if (!maps_equal(d_->cls[ic].level, con_map(c, h) * ind_map(l, h), ind_map(lc, hc) * con_map(c, l)))
                    fail("conj-ind", "H cls " + std::to_string(i) + " L " + l.key() + " g=" + std::to_string(c));
            }
            // module relations with the action
            for (std::size_t b = 0; b < rk; ++b) {
                IntVec eb(rk, Int(0));
                eb[b] = 1;
                IntVec resb = d_->r->res(h, l).apply(eb);
                if (!maps_equal(d_->cls[jl].level, res_map(h, l) * action_map(h, eb),
                                action_map(l, resb) * res_map(h, l)))
                    fail("action-res", "H cls " + std::to_string(i) + " L " + l.key() + " b=" + std::to_string(b));
                if (!maps_equal(d_->cls[i].level, action_map(h, eb) * ind_map(l, h),
                                ind_map(l, h) * action_map(l, resb)))
                    fail("frobenius-module-1", "H cls " + std::to_string(i) + " L " + l.key() + " b=" + std::to_string(b));
            }
            std::size_t rkl = d_->r->rank(l);
            for (std::size_t b = 0; b < rkl; ++b) {
                IntVec eb(rkl, Int(0));
                eb[b] = 1;
                IntVec indb = d_->r->ind(l, h).apply(eb);
                if (!maps_equal(d_->cls[i].level, action_map(h, indb),
                                ind_map(l, h) * action_map(l, eb) * res_map(h, l)))
                    fail("frobenius-module-2", "H cls " + std::to_string(i) + " L " + l.key() + " b=" + std::to_string(b));
            }
            // conjugation acts on the action through the Green functor
            for (int c = 0; c < g.order(); ++c) {
                Subgroup hc = g.conjugate_subgroup(h, c);
                std::size_t ic = g.class_of_subgroup(hc);
                for (std::size_t b = 0; b < rk && c < g.order(); ++b) {
                    IntVec eb(rk, Int(0));
                    eb[b] = 1;
                    IntVec cb = d_->r->conj(h, c).apply(eb);
                    if (!maps_equal(d_->cls[ic].level, con_map(c, h) * action_map(h, eb),
                                    action_map(hc, cb) * con_map(c, h))) {
                        fail("action-conj", "H cls " + std::to_string(i) + " g=" + std::to_string(c) + " b=" + std::to_string(b));
                        break;
                    }
                }
            }
        }

        if (bail()) return rep;
        // Mackey formula: res^H_L ind^H_K over double cosets inside H
        const FiniteGroup& mh = g.materialize(h);
        for (const auto& l : subs)
            for (const auto& k : subs) {
                Subgroup l_loc = to_local_subgroup(mh, l);
                Subgroup k_loc = to_local_subgroup(mh, k);
                IntMatrix lhs = res_map(h, l) * ind_map(k, h);
                IntMatrix rhs(d_->cls[g.class_of_subgroup(l)].level.ngens(),
                              d_->cls[g.class_of_subgroup(k)].level.ngens());
                for (int x_loc : mh.double_coset_reps(l_loc, k_loc)) {
                    int x = mh.parent_elements()[x_loc];
                    Subgroup meet = g.intersect(l, g.conjugate_subgroup(k, x));
                    Subgroup meet_dn = g.conjugate_subgroup(meet, g.inv(x));
                    rhs = rhs + ind_map(meet, l) * con_map(x, meet_dn) * res_map(k, meet_dn);
                }
                if (!maps_equal(d_->cls[g.class_of_subgroup(l)].level, lhs, rhs))
                    fail("mackey-formula", "H cls " + std::to_string(i) + " L " + l.key() + " K " + k.key());
            }
    }
    return rep;
}

std::string MackeyModule::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < nclasses(); ++i) {
        if (i) os << ", ";
        os << "M[" << i << "]=" << level(i).str();
    }
    return os.str();
}

bool ModuleHom::is_zero() const {
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = 0; j < comps[i].cols(); ++j)
            if (!dst.level(i).contains_zero(comps[i].column_vec(j))) return false;
    return true;
}

ModuleHom ModuleHom::zero(const MackeyModule& m, const MackeyModule& n) {
    ModuleHom h{m, n, {}};
    for (std::size_t i = 0; i < m.nclasses(); ++i) h.comps.emplace_back(n.level(i).ngens(), m.level(i).ngens());
    return h;
}

ModuleHom ModuleHom::identity(const MackeyModule& m) {
    ModuleHom h{m, m, {}};
    for (std::size_t i = 0; i < m.nclasses(); ++i) h.comps.push_back(IntMatrix::identity(m.level(i).ngens()));
    return h;
}

ModuleHom ModuleHom::compose_after(const ModuleHom& first) const {
    ModuleHom h{first.src, dst, {}};
    for (std::size_t i = 0; i < comps.size(); ++i) h.comps.push_back(comps[i] * first.comps[i]);
    return h;
}

ModuleHom ModuleHom::operator+(const ModuleHom& o) const {
    ModuleHom h{src, dst, {}};
    for (std::size_t i = 0; i < comps.size(); ++i) h.comps.push_back(comps[i] + o.comps[i]);
    return h;
}

ModuleHom ModuleHom::scaled(const Int& c) const {
    ModuleHom h{src, dst, {}};
    for (const auto& m : comps) h.comps.push_back(m.scaled(c));
    return h;
}

bool ModuleHom::equals(const ModuleHom& o) const {
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!maps_equal(dst.level(i), comps[i], o.comps[i])) return false;
    return true;
}

bool ModuleHom::verify() const {
    const FiniteGroup& g = src.group();
    const auto& classes = g.subgroup_classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Subgroup& hi = classes[i].rep;
        const WeylData& w = g.weyl(hi);
        for (int n : w.coset_reps) {
            if (!maps_equal(dst.level(i), comps[i] * src.con_map(n, hi), dst.con_map(n, hi) * comps[i])) return false;
        }
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            const Subgroup& s = tbl.slot_sub.at(key);
            std::size_t j = tbl.by_subgroup.at(key).cls;
            if (!maps_equal(dst.level(j), comps[j] * src.res_map(hi, s), dst.res_map(hi, s) * comps[i])) return false;
            if (!maps_equal(dst.level(i), comps[i] * src.ind_map(s, hi), dst.ind_map(s, hi) * comps[j])) return false;
        }
        std::size_t rk = src.functor().rank(hi);
        for (std::size_t b = 0; b < rk; ++b) {
            IntVec eb(rk, Int(0));
            eb[b] = 1;
            if (!maps_equal(dst.level(i), comps[i] * src.action_map(hi, eb), dst.action_map(hi, eb) * comps[i]))
                return false;
        }
    }
    return true;
}

ModuleValue evaluate(const MackeyModule& m, const GSet& x) {
    ModuleValue v;
    v.group = PresentedAbGroup(0, IntMatrix(0, 0));
    for (const auto& o : x.orbits()) {
        v.offsets.push_back(v.group.ngens());
        v.group = v.group.direct_sum(m.level(o.cls));
    }
    return v;
}

namespace {

struct EvalOffsets {
    std::vector<std::size_t> off;
    std::size_t total;
};

EvalOffsets offsets_of(const MackeyModule& m, const GSet& x) {
    EvalOffsets e{{}, 0};
    for (const auto& o : x.orbits()) {
        e.off.push_back(e.total);
        e.total += m.level(o.cls).ngens();
    }
    return e;
}

}  // namespace

IntMatrix evaluate_covariant(const MackeyModule& m, const GMap& f) {
    const FiniteGroup& g = f.source().group();
    const auto& classes = g.subgroup_classes();
    EvalOffsets src = offsets_of(m, f.source()), tgt = offsets_of(m, f.target());
    IntMatrix out(tgt.total, src.total);
    for (std::size_t oi = 0; oi < f.source().orbits().size(); ++oi) {
        const auto& o = f.source().orbits()[oi];
        const Subgroup& k = classes[o.cls].rep;
        int image = f(o.base);
        std::size_t ti = f.target().orbit_of(image);
        const Subgroup& l = classes[f.target().orbits()[ti].cls].rep;
        int t = f.target().transversal_of(image);
        Subgroup kt = g.conjugate_subgroup(k, g.inv(t));
        IntMatrix block = m.ind_map(kt, l) * m.con_map(g.inv(t), k);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c) out.at(tgt.off[ti] + r, src.off[oi] + c) += block.at(r, c);
    }
    return out;
}

IntMatrix evaluate_contravariant(const MackeyModule& m, const GMap& f) {
    const FiniteGroup& g = f.source().group();
    const auto& classes = g.subgroup_classes();
    EvalOffsets src = offsets_of(m, f.source()), tgt = offsets_of(m, f.target());
    IntMatrix out(src.total, tgt.total);
    for (std::size_t oi = 0; oi < f.source().orbits().size(); ++oi) {
        const auto& o = f.source().orbits()[oi];
        const Subgroup& k = classes[o.cls].rep;
        int image = f(o.base);
        std::size_t ti = f.target().orbit_of(image);
        const Subgroup& l = classes[f.target().orbits()[ti].cls].rep;
        int t = f.target().transversal_of(image);
        Subgroup tl = g.conjugate_subgroup(l, t);
        IntMatrix block = m.res_map(tl, k) * m.con_map(t, l);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c) out.at(src.off[oi] + r, tgt.off[ti] + c) += block.at(r, c);
    }
    return out;
}

IntMatrix value_action(const MackeyModule& m, const GSet& x, const GreenValue& r) {
    const auto& classes = x.group().subgroup_classes();
    EvalOffsets eo = offsets_of(m, x);
    IntMatrix out(eo.total, eo.total);
    for (std::size_t oi = 0; oi < x.orbits().size(); ++oi) {
        IntMatrix block = m.action_map(classes[x.orbits()[oi].cls].rep, r.comps[oi]);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j) out.at(eo.off[oi] + i, eo.off[oi] + j) = block.at(i, j);
    }
    return out;
}

HomSystemSolution solve_hom_system(const std::vector<HomVar>& vars, const std::vector<HomCondition>& conditions,
                                   const std::vector<IntMatrix>& trivial_lattices) {
    std::vector<std::size_t> var_off{0};
    for (const auto& v : vars) var_off.push_back(var_off.back() + v.rows * v.cols);
    std::size_t flat = var_off.back();
    auto idx = [&](std::size_t v, std::size_t i, std::size_t j) { return var_off[v] + i * vars[v].cols + j; };

    // Smith-reduce each condition against its target lattice: a condition row
    // with invariant factor 1 is vacuous, a torsion row keeps one auxiliary
    // unknown, a free row becomes a strict equation.
    struct Reduced {
        IntMatrix p, r;       // premultiplied by the left Smith transform
        std::vector<Int> mod;  // per kept row: 0 for strict equality, else d_i
        std::vector<std::size_t> rows;
    };
    std::vector<Reduced> reduced;
    std::size_t total_rows = 0, total_aux = 0;
    for (const auto& c : conditions) {
        Reduced red;
        SmithForm s = smith_normal_form(c.target);
        red.p = s.left * c.p;
        red.r = s.left * c.r;
        std::size_t t = c.p.rows();
        for (std::size_t i = 0; i < t; ++i) {
            if (i < s.rank && s.diag[i] == 1) continue;  // always satisfiable
            red.rows.push_back(i);
            red.mod.push_back(i < s.rank ? s.diag[i] : Int(0));
        }
        std::size_t w = c.q.cols();
        total_rows += red.rows.size() * w;
        for (const auto& m : red.mod)
            if (m != 0) total_aux += w;
        reduced.push_back(std::move(red));
    }

    IntMatrix big(total_rows, flat + total_aux);
    std::size_t row0 = 0, aux0 = 0;
    for (std::size_t ci = 0; ci < conditions.size(); ++ci) {
        const auto& c = conditions[ci];
        const auto& red = reduced[ci];
        std::size_t w = c.q.cols();
        for (std::size_t col = 0; col < w; ++col)
            for (std::size_t ri = 0; ri < red.rows.size(); ++ri) {
                std::size_t i = red.rows[ri];
                std::size_t row = row0 + col * red.rows.size() + ri;
                for (std::size_t a = 0; a < vars[c.a].rows; ++a) {
                    if (red.p.at(i, a) == 0) continue;
                    for (std::size_t b = 0; b < vars[c.a].cols; ++b)
                        if (c.q.at(b, col) != 0) big.at(row, idx(c.a, a, b)) += red.p.at(i, a) * c.q.at(b, col);
                }
                for (std::size_t a = 0; a < vars[c.b].rows; ++a) {
                    if (red.r.at(i, a) == 0) continue;
                    for (std::size_t b = 0; b < vars[c.b].cols; ++b)
                        if (c.s.at(b, col) != 0) big.at(row, idx(c.b, a, b)) -= red.r.at(i, a) * c.s.at(b, col);
                }
                if (red.mod[ri] != 0) {
                    big.at(row, flat + aux0) = -red.mod[ri];
                    ++aux0;
                }
            }
        row0 += red.rows.size() * w;
    }

    IntMatrix ker = kernel_lattice(big);
    IntMatrix sol = column_lattice_basis(ker.submatrix(0, 0, flat, ker.cols()));

    std::vector<IntVec> triv_cols;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        const IntMatrix& lat = trivial_lattices[v];
        for (std::size_t j = 0; j < vars[v].cols; ++j)
            for (std::size_t m = 0; m < lat.cols(); ++m) {
                IntVec col(flat, Int(0));
                for (std::size_t i = 0; i < vars[v].rows; ++i) col[idx(v, i, j)] = lat.at(i, m);
                triv_cols.push_back(std::move(col));
            }
    }
    IntMatrix triv = IntMatrix::from_columns(flat, triv_cols);

    auto sq = subquotient(flat, sol, triv);
    HomSystemSolution out;
    out.group = sq.group;
    out.vars = vars;
    out.basis = sq.basis;
    out.trivial = triv;
    out.solver = std::make_shared<RepeatedSolver>(out.basis.hcat(out.trivial));
    for (std::size_t gidx = 0; gidx < sq.basis.cols(); ++gidx) {
        std::vector<IntMatrix> mats;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            IntMatrix m(vars[v].rows, vars[v].cols);
            for (std::size_t i = 0; i < vars[v].rows; ++i)
                for (std::size_t j = 0; j < vars[v].cols; ++j) m.at(i, j) = sq.basis.at(idx(v, i, j), gidx);
            mats.push_back(std::move(m));
        }
        out.generators.push_back(std::move(mats));
    }
    return out;
}

IntVec HomSystemSolution::coordinates(const std::vector<IntMatrix>& assignment) const {
    std::vector<std::size_t> var_off{0};
    for (const auto& v : vars) var_off.push_back(var_off.back() + v.rows * v.cols);
    IntVec flatv(var_off.back(), Int(0));
    for (std::size_t v = 0; v < vars.size(); ++v)
        for (std::size_t i = 0; i < vars[v].rows; ++i)
            for (std::size_t j = 0; j < vars[v].cols; ++j) flatv[var_off[v] + i * vars[v].cols + j] = assignment[v].at(i, j);
    auto c = solver->solve(flatv);
    if (!c) throw std::runtime_error("hom coordinates: assignment not in the solution group");
    return IntVec(c->begin(), c->begin() + basis.cols());
}

ModuleHomGroup hom_modules(const MackeyModule& m, const MackeyModule& n) {
    if (&m.group() != &n.group()) throw std::invalid_argument("hom_modules: different groups");
    const FiniteGroup& g = m.group();
    const auto& classes = g.subgroup_classes();
    std::vector<HomVar> vars;
    std::vector<IntMatrix> trivial;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        vars.push_back({n.level(i).ngens(), m.level(i).ngens()});
        trivial.push_back(n.level(i).relations());
    }
    std::vector<HomCondition> conds;
    auto well_defined = [&](std::size_t i) {
        // phi_i * rel_M = 0 mod rel_N
        HomCondition c;
        c.a = c.b = i;
        c.p = IntMatrix::identity(n.level(i).ngens());
        c.q = m.level(i).relations();
        c.r = IntMatrix(n.level(i).ngens(), n.level(i).ngens());
        c.s = IntMatrix(n.level(i).ngens(), m.level(i).relations().cols());
        c.target = n.level(i).relations();
        conds.push_back(std::move(c));
    };
    auto commute = [&](std::size_t tgt_cls, std::size_t a, const IntMatrix& mm, std::size_t b, const IntMatrix& nm) {
        // phi_a * mm = nm * phi_b mod rel_N(tgt)
        HomCondition c;
        c.a = a;
        c.b = b;
        c.p = IntMatrix::identity(n.level(a).ngens());
        c.q = mm;
        c.r = nm;
        c.s = IntMatrix::identity(m.level(b).ngens());
        c.target = n.level(tgt_cls).relations();
        conds.push_back(std::move(c));
    };
    for (std::size_t i = 0; i < classes.size(); ++i) {
        well_defined(i);
        const Subgroup& hi = classes[i].rep;
        const WeylData& w = g.weyl(hi);
        // generators suffice: commuting with them propagates to all cosets
        for (int gen : w.generators) {
            std::size_t cidx = static_cast<std::size_t>(w.coset_of[gen]);
            commute(i, i, m.class_data(i).conj[cidx], i, n.class_data(i).conj[cidx]);
        }
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            std::size_t j = tbl.by_subgroup.at(key).cls;
            commute(j, j, m.class_data(i).res.at(key), i, n.class_data(i).res.at(key));
            commute(i, i, m.class_data(i).ind.at(key), j, n.class_data(i).ind.at(key));
        }
        for (std::size_t b = 0; b < m.class_data(i).action.size(); ++b)
            commute(i, i, m.class_data(i).action[b], i, n.class_data(i).action[b]);
    }
    ModuleHomGroup out{PresentedAbGroup(), {}, solve_hom_system(vars, conds, trivial)};
    out.group = out.solution.group;
    for (const auto& gen : out.solution.generators) out.generators.push_back(ModuleHom{m, n, gen});
    return out;
}

IntVec ModuleHomGroup::coordinates(const ModuleHom& h) const { return solution.coordinates(h.comps); }

}  // namespace specseq
