#include "specseq/green.hpp"

#include <sstream>

namespace specseq {

const GreenFunctor& GreenFunctor::representation(const FiniteGroup& g) {
    auto cached = std::static_pointer_cast<const GreenFunctor>(g.plugin_get("green-rep"));
    if (cached) return *cached;
    auto fresh = std::shared_ptr<const GreenFunctor>(new GreenFunctor(GreenKind::Representation, g));
    return *std::static_pointer_cast<const GreenFunctor>(
        g.plugin_put("green-rep", std::const_pointer_cast<GreenFunctor>(fresh)));
}

const GreenFunctor& GreenFunctor::burnside(const FiniteGroup& g) {
    auto cached = std::static_pointer_cast<const GreenFunctor>(g.plugin_get("green-bur"));
    if (cached) return *cached;
    auto fresh = std::shared_ptr<const GreenFunctor>(new GreenFunctor(GreenKind::Burnside, g));
    return *std::static_pointer_cast<const GreenFunctor>(
        g.plugin_put("green-bur", std::const_pointer_cast<GreenFunctor>(fresh)));
}

std::size_t GreenFunctor::rank(const Subgroup& h) const {
    const FiniteGroup& mh = g_->materialize(h);
    if (kind_ == GreenKind::Representation) return CharacterTable::of(mh).nchars();
    return mh.subgroup_classes().size();
}

IntVec GreenFunctor::unit(const Subgroup& h) const {
    const FiniteGroup& mh = g_->materialize(h);
    if (kind_ == GreenKind::Representation) return rep_ring_unit(mh);
    return BurnsideRing::of(mh).unit();
}

IntVec GreenFunctor::mult(const Subgroup& h, const IntVec& a, const IntVec& b) const {
    const FiniteGroup& mh = g_->materialize(h);
    if (kind_ == GreenKind::Representation) return rep_ring_mult(mh, a, b);
    return BurnsideRing::of(mh).mult(a, b);
}

const IntMatrix& GreenFunctor::res(const Subgroup& h, const Subgroup& l) const {
    std::string key = "r:" + h.key() + "/" + l.key();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = matrix_cache_.find(key);
        if (it != matrix_cache_.end()) return it->second;
    }
    IntMatrix m = kind_ == GreenKind::Representation ? rep_res_matrix(*g_, h, l) : bur_res_matrix(*g_, h, l);
    std::lock_guard<std::mutex> lock(mutex_);
    return matrix_cache_.emplace(key, std::move(m)).first->second;
}

const IntMatrix& GreenFunctor::ind(const Subgroup& l, const Subgroup& h) const {
    std::string key = "i:" + l.key() + "/" + h.key();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = matrix_cache_.find(key);
        if (it != matrix_cache_.end()) return it->second;
    }
    IntMatrix m = kind_ == GreenKind::Representation ? rep_ind_matrix(*g_, l, h) : bur_ind_matrix(*g_, l, h);
    std::lock_guard<std::mutex> lock(mutex_);
    return matrix_cache_.emplace(key, std::move(m)).first->second;
}

const IntMatrix& GreenFunctor::conj(const Subgroup& h, int g) const {
    std::string key = "c:" + h.key() + "@" + std::to_string(g);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = matrix_cache_.find(key);
        if (it != matrix_cache_.end()) return it->second;
    }
    IntMatrix m = kind_ == GreenKind::Representation ? rep_conj_matrix(*g_, h, g) : bur_conj_matrix(*g_, h, g);
    std::lock_guard<std::mutex> lock(mutex_);
    return matrix_cache_.emplace(key, std::move(m)).first->second;
}

std::string GreenFunctor::basis_label(const Subgroup& h, std::size_t idx) const {
    const FiniteGroup& mh = g_->materialize(h);
    std::ostringstream os;
    if (kind_ == GreenKind::Representation) {
        os << "chi" << idx << "(deg " << CharacterTable::of(mh).degree(idx).get_str() << ")";
    } else {
        os << "[H/K" << idx << "(|K|=" << mh.subgroup_classes()[idx].rep.order() << ")]";
    }
    return os.str();
}

IntVec GreenValue::flat() const {
    IntVec out;
    for (const auto& c : comps) out.insert(out.end(), c.begin(), c.end());
    return out;
}

GreenValue GreenValue::from_flat(const GreenFunctor& r, const GSet& x, const IntVec& v) {
    GreenValue val{x, {}};
    const auto& classes = x.group().subgroup_classes();
    std::size_t pos = 0;
    for (const auto& o : x.orbits()) {
        std::size_t k = r.rank(classes[o.cls].rep);
        val.comps.emplace_back(v.begin() + pos, v.begin() + pos + k);
        pos += k;
    }
    if (pos != v.size()) throw std::invalid_argument("GreenValue::from_flat: length mismatch");
    return val;
}

std::size_t green_rank(const GreenFunctor& r, const GSet& x) {
    const auto& classes = x.group().subgroup_classes();
    std::size_t total = 0;
    for (const auto& o : x.orbits()) total += r.rank(classes[o.cls].rep);
    return total;
}

GreenValue green_zero(const GreenFunctor& r, const GSet& x) {
    GreenValue v{x, {}};
    const auto& classes = x.group().subgroup_classes();
    for (const auto& o : x.orbits()) v.comps.emplace_back(r.rank(classes[o.cls].rep), Int(0));
    return v;
}

GreenValue green_unit(const GreenFunctor& r, const GSet& x) {
    GreenValue v{x, {}};
    const auto& classes = x.group().subgroup_classes();
    for (const auto& o : x.orbits()) v.comps.push_back(r.unit(classes[o.cls].rep));
    return v;
}

GreenValue green_multiply(const GreenFunctor& r, const GreenValue& a, const GreenValue& b) {
    if (!a.x.same_set(b.x)) throw std::invalid_argument("green_multiply: different G-sets");
    GreenValue v{a.x, {}};
    const auto& classes = a.x.group().subgroup_classes();
    for (std::size_t i = 0; i < a.comps.size(); ++i)
        v.comps.push_back(r.mult(classes[a.x.orbits()[i].cls].rep, a.comps[i], b.comps[i]));
    return v;
}

GreenValue green_add(const GreenValue& a, const GreenValue& b) {
    GreenValue v{a.x, {}};
    for (std::size_t i = 0; i < a.comps.size(); ++i) v.comps.push_back(a.comps[i] + b.comps[i]);
    return v;
}

namespace {

// Per-orbit data of a map: source orbit cls K -> target orbit cls L with
// f(base_src) = t * base_tgt. Covariant piece ind^L_{K^t} conj_{t^-1},
// contravariant piece res^{^tL}_K conj_t.
struct OrbitHit {
    std::size_t src_orbit, tgt_orbit;
    int t;
};

std::vector<OrbitHit> orbit_hits(const GMap& f) {
    std::vector<OrbitHit> hits;
    for (std::size_t i = 0; i < f.source().orbits().size(); ++i) {
        const auto& o = f.source().orbits()[i];
        int image = f(o.base);
        hits.push_back({i, static_cast<std::size_t>(f.target().orbit_of(image)), f.target().transversal_of(image)});
    }
    return hits;
}

}  // namespace

IntMatrix green_covariant(const GreenFunctor& r, const GMap& f) {
    const FiniteGroup& g = f.source().group();
    const auto& classes = g.subgroup_classes();
    std::vector<std::size_t> src_off{0}, tgt_off{0};
    for (const auto& o : f.source().orbits()) src_off.push_back(src_off.back() + r.rank(classes[o.cls].rep));
    for (const auto& o : f.target().orbits()) tgt_off.push_back(tgt_off.back() + r.rank(classes[o.cls].rep));
    IntMatrix out(tgt_off.back(), src_off.back());
    for (const auto& hit : orbit_hits(f)) {
        const Subgroup& k = classes[f.source().orbits()[hit.src_orbit].cls].rep;
        const Subgroup& l = classes[f.target().orbits()[hit.tgt_orbit].cls].rep;
        int tinv = g.inv(hit.t);
        Subgroup kt = g.conjugate_subgroup(k, tinv);  // K^t
        IntMatrix block = r.ind(kt, l) * r.conj(k, tinv);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                out.at(tgt_off[hit.tgt_orbit] + i, src_off[hit.src_orbit] + j) += block.at(i, j);
    }
    return out;
}

IntMatrix green_contravariant(const GreenFunctor& r, const GMap& f) {
    const FiniteGroup& g = f.source().group();
    const auto& classes = g.subgroup_classes();
    std::vector<std::size_t> src_off{0}, tgt_off{0};
    for (const auto& o : f.source().orbits()) src_off.push_back(src_off.back() + r.rank(classes[o.cls].rep));
    for (const auto& o : f.target().orbits()) tgt_off.push_back(tgt_off.back() + r.rank(classes[o.cls].rep));
    IntMatrix out(src_off.back(), tgt_off.back());
    for (const auto& hit : orbit_hits(f)) {
        const Subgroup& k = classes[f.source().orbits()[hit.src_orbit].cls].rep;
        const Subgroup& l = classes[f.target().orbits()[hit.tgt_orbit].cls].rep;
        Subgroup tl = g.conjugate_subgroup(l, hit.t);  // ^t L
        IntMatrix block = r.res(tl, k) * r.conj(l, hit.t);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                out.at(src_off[hit.src_orbit] + i, tgt_off[hit.tgt_orbit] + j) += block.at(i, j);
    }
    return out;
}

bool green_check_pullback_axiom(const GreenFunctor& r, const GMap& top, const GMap& left, const GMap& bottom,
                                const GMap& right) {
    if (!is_pullback_square(top, left, bottom, right)) throw std::invalid_argument("not a pullback square");
    IntMatrix lhs = green_contravariant(r, right) * green_covariant(r, bottom);
    IntMatrix rhs = green_covariant(r, top) * green_contravariant(r, left);
    return lhs == rhs;
}

}  // namespace specseq
