#include "specseq/gset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specseq {

GSet GSet::finish(std::unique_ptr<Data> d) {
    const FiniteGroup& g = *d->g;
    int n = d->npoints;
    // sanity: group action
    for (int x = 0; x < n; ++x)
        if (d->act.empty() || d->act[0][x] != x) throw std::logic_error("gset: identity must act trivially");
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            for (int x = 0; x < n; ++x)
                if (d->act[g.mul(a, b)][x] != d->act[a][d->act[b][x]])
                    throw std::logic_error("gset: not a group action");

    d->orbit_index.assign(n, -1);
    const auto& classes = g.subgroup_classes();
    for (int p = 0; p < n; ++p) {
        if (d->orbit_index[p] >= 0) continue;
        GSetOrbit orb;
        for (int gg = 0; gg < g.order(); ++gg) {
            int q = d->act[gg][p];
            if (d->orbit_index[q] < 0) {
                d->orbit_index[q] = static_cast<int>(d->orbits.size());
                orb.points.push_back(q);
            }
        }
        std::sort(orb.points.begin(), orb.points.end());
        // stabilizer class, then a base point realizing the representative
        std::vector<int> st;
        for (int gg = 0; gg < g.order(); ++gg)
            if (d->act[gg][orb.points[0]] == orb.points[0]) st.push_back(gg);
        Subgroup stab{&g, std::move(st)};
        orb.cls = g.class_of_subgroup(stab);
        const Subgroup& rep = classes[orb.cls].rep;
        std::vector<int> qualifying;
        for (int q : orb.points) {
            bool match = true;
            for (int e : rep.elems)
                if (d->act[e][q] != q) {
                    match = false;
                    break;
                }
            // order comparison suffices: the stabilizer has the same order on
            // every point of the orbit, so containment means equality
            if (match) qualifying.push_back(q);
        }
        std::string ctx = d->label + ":orbit" + std::to_string(orb.points[0]);
        orb.base = qualifying[g.policy().pick("base:" + ctx, qualifying.size())];
        orb.transversal.resize(orb.points.size());
        for (std::size_t i = 0; i < orb.points.size(); ++i) {
            std::vector<int> movers;
            for (int gg = 0; gg < g.order(); ++gg)
                if (d->act[gg][orb.base] == orb.points[i]) movers.push_back(gg);
            orb.transversal[i] =
                movers[g.policy().pick("transversal:" + ctx + ":" + std::to_string(orb.points[i]), movers.size())];
        }
        d->orbits.push_back(std::move(orb));
    }
    // cache key: orbit structure + chosen base/transversal data
    std::ostringstream k;
    k << g.name() << "#" << n;
    for (const auto& o : d->orbits) {
        k << "|c" << o.cls << "b" << o.base << "t";
        for (int t : o.transversal) k << t << ",";
        k << "p";
        for (int p : o.points) k << p << ",";
    }
    d->key = k.str();
    GSet s;
    s.d_ = std::move(d);
    return s;
}

GSet GSet::empty(const FiniteGroup& g) {
    auto d = std::make_unique<Data>();
    d->g = &g;
    d->npoints = 0;
    d->act.assign(g.order(), {});
    d->label = "0";
    return finish(std::move(d));
}

GSet GSet::point(const FiniteGroup& g) { return orbit(g, g.full_subgroup()); }

GSet GSet::orbit(const FiniteGroup& g, const Subgroup& h) {
    auto reps = g.left_coset_reps(h);
    int n = static_cast<int>(reps.size());
    // coset of x = index of the least element of xH
    std::vector<int> coset_of(g.order(), -1);
    for (int i = 0; i < n; ++i)
        for (int e : h.elems) coset_of[g.mul(reps[i], e)] = i;
    auto d = std::make_unique<Data>();
    d->g = &g;
    d->npoints = n;
    d->act.assign(g.order(), std::vector<int>(n));
    for (int a = 0; a < g.order(); ++a)
        for (int i = 0; i < n; ++i) d->act[a][i] = coset_of[g.mul(a, reps[i])];
    d->label = "G/[" + h.key() + "]";
    return finish(std::move(d));
}

GSet GSet::disjoint_union(const GSet& x, const GSet& y) {
    if (&x.group() != &y.group()) throw std::invalid_argument("disjoint_union: different groups");
    const FiniteGroup& g = x.group();
    auto d = std::make_unique<Data>();
    d->g = &g;
    d->npoints = x.npoints() + y.npoints();
    d->act.assign(g.order(), std::vector<int>(d->npoints));
    for (int a = 0; a < g.order(); ++a) {
        for (int p = 0; p < x.npoints(); ++p) d->act[a][p] = x.act(a, p);
        for (int p = 0; p < y.npoints(); ++p) d->act[a][x.npoints() + p] = x.npoints() + y.act(a, p);
    }
    d->label = "(" + x.label() + "+" + y.label() + ")";
    return finish(std::move(d));
}

GSet GSet::product(const GSet& x, const GSet& y) {
    if (&x.group() != &y.group()) throw std::invalid_argument("product: different groups");
    const FiniteGroup& g = x.group();
    auto d = std::make_unique<Data>();
    d->g = &g;
    d->npoints = x.npoints() * y.npoints();
    d->act.assign(g.order(), std::vector<int>(d->npoints));
    int ny = y.npoints();
    for (int a = 0; a < g.order(); ++a)
        for (int p = 0; p < x.npoints(); ++p)
            for (int q = 0; q < ny; ++q) d->act[a][p * ny + q] = x.act(a, p) * ny + y.act(a, q);
    d->label = "(" + x.label() + "x" + y.label() + ")";
    return finish(std::move(d));
}

GSet GSet::from_action(const FiniteGroup& g, std::vector<std::vector<int>> act, std::string label) {
    auto d = std::make_unique<Data>();
    d->g = &g;
    d->npoints = act.empty() ? 0 : static_cast<int>(act[0].size());
    d->act = std::move(act);
    d->label = std::move(label);
    return finish(std::move(d));
}

int GSet::transversal_of(int point) const {
    const GSetOrbit& o = d_->orbits[orbit_of(point)];
    auto it = std::lower_bound(o.points.begin(), o.points.end(), point);
    return o.transversal[it - o.points.begin()];
}

Subgroup GSet::stabilizer(int point) const {
    std::vector<int> st;
    for (int g = 0; g < group().order(); ++g)
        if (act(g, point) == point) st.push_back(g);
    return Subgroup{&group(), std::move(st)};
}

std::vector<int> GSet::fixed_points(const Subgroup& k) const {
    std::vector<int> out;
    for (int p = 0; p < npoints(); ++p) {
        bool fixed = true;
        for (int e : k.elems)
            if (act(e, p) != p) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(p);
    }
    return out;
}

GMap::GMap(GSet source, GSet target, std::vector<int> images)
    : src_(std::move(source)), tgt_(std::move(target)), img_(std::move(images)) {
    if (static_cast<int>(img_.size()) != src_.npoints()) throw std::invalid_argument("GMap: image size mismatch");
    const FiniteGroup& g = src_.group();
    if (&g != &tgt_.group()) throw std::invalid_argument("GMap: different groups");
    for (int a = 0; a < g.order(); ++a)
        for (int p = 0; p < src_.npoints(); ++p)
            if (img_[src_.act(a, p)] != tgt_.act(a, img_[p])) throw std::invalid_argument("GMap: not equivariant");
}

GMap GMap::from_base_images(const GSet& source, const GSet& target, const std::vector<int>& base_images) {
    if (base_images.size() != source.orbits().size()) throw std::invalid_argument("from_base_images: orbit count");
    std::vector<int> img(source.npoints(), -1);
    for (std::size_t i = 0; i < source.orbits().size(); ++i) {
        const GSetOrbit& o = source.orbits()[i];
        for (std::size_t j = 0; j < o.points.size(); ++j) img[o.points[j]] = target.act(o.transversal[j], base_images[i]);
    }
    return GMap(source, target, std::move(img));
}

GMap GMap::identity(const GSet& x) {
    std::vector<int> img(x.npoints());
    std::iota(img.begin(), img.end(), 0);
    return GMap(x, x, std::move(img));
}

GMap GMap::to_point(const GSet& x) {
    return GMap(x, GSet::point(x.group()), std::vector<int>(x.npoints(), 0));
}

GMap GMap::proj1(const GSet& x, const GSet& y) {
    GSet p = GSet::product(x, y);
    std::vector<int> img(p.npoints());
    for (int i = 0; i < p.npoints(); ++i) img[i] = i / y.npoints();
    return GMap(p, x, std::move(img));
}

GMap GMap::proj2(const GSet& x, const GSet& y) {
    GSet p = GSet::product(x, y);
    std::vector<int> img(p.npoints());
    for (int i = 0; i < p.npoints(); ++i) img[i] = i % y.npoints();
    return GMap(p, y, std::move(img));
}

GMap GMap::diagonal(const GSet& x) {
    GSet p = GSet::product(x, x);
    std::vector<int> img(x.npoints());
    for (int i = 0; i < x.npoints(); ++i) img[i] = i * x.npoints() + i;
    return GMap(x, p, std::move(img));
}

GMap GMap::into_union_left(const GSet& x, const GSet& y) {
    GSet u = GSet::disjoint_union(x, y);
    std::vector<int> img(x.npoints());
    std::iota(img.begin(), img.end(), 0);
    return GMap(x, u, std::move(img));
}

GMap GMap::into_union_right(const GSet& x, const GSet& y) {
    GSet u = GSet::disjoint_union(x, y);
    std::vector<int> img(y.npoints());
    std::iota(img.begin(), img.end(), x.npoints());
    return GMap(y, u, std::move(img));
}

GMap GMap::fold(const GSet& x) {
    GSet u = GSet::disjoint_union(x, x);
    std::vector<int> img(2 * x.npoints());
    for (int i = 0; i < x.npoints(); ++i) img[i] = img[x.npoints() + i] = i;
    return GMap(u, x, std::move(img));
}

GMap GMap::compose_after(const GMap& first) const {
    if (!first.tgt_.same_set(src_)) throw std::invalid_argument("GMap compose: middle object mismatch");
    std::vector<int> img(first.src_.npoints());
    for (int p = 0; p < first.src_.npoints(); ++p) img[p] = img_[first.img_[p]];
    return GMap(first.src_, tgt_, std::move(img));
}

PullbackResult pullback(const GMap& f, const GMap& g) {
    const GSet& x = f.source();
    const GSet& y = g.source();
    if (!f.target().same_set(g.target())) throw std::invalid_argument("pullback: different targets");
    const FiniteGroup& grp = x.group();
    std::vector<std::pair<int, int>> pts;
    std::vector<int> index(x.npoints() * y.npoints(), -1);
    for (int p = 0; p < x.npoints(); ++p)
        for (int q = 0; q < y.npoints(); ++q)
            if (f(p) == g(q)) {
                index[p * y.npoints() + q] = static_cast<int>(pts.size());
                pts.emplace_back(p, q);
            }
    std::vector<std::vector<int>> act(grp.order(), std::vector<int>(pts.size()));
    for (int a = 0; a < grp.order(); ++a)
        for (std::size_t i = 0; i < pts.size(); ++i)
            act[a][i] = index[x.act(a, pts[i].first) * y.npoints() + y.act(a, pts[i].second)];
    GSet pb = GSet::from_action(grp, std::move(act), "pb(" + x.label() + "," + y.label() + ")");
    std::vector<int> ix(pts.size()), iy(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        ix[i] = pts[i].first;
        iy[i] = pts[i].second;
    }
    return PullbackResult{pb, GMap(pb, x, std::move(ix)), GMap(pb, y, std::move(iy))};
}

std::vector<GMap> maps_between(const GSet& x, const GSet& y) {
    std::vector<std::vector<int>> choices;
    const auto& classes = x.group().subgroup_classes();
    for (const auto& o : x.orbits()) choices.push_back(y.fixed_points(classes[o.cls].rep));
    std::vector<GMap> out;
    std::vector<int> pick(choices.size(), 0);
    for (const auto& c : choices)
        if (c.empty()) return out;
    for (;;) {
        std::vector<int> base_images(choices.size());
        for (std::size_t i = 0; i < choices.size(); ++i) base_images[i] = choices[i][pick[i]];
        out.push_back(GMap::from_base_images(x, y, base_images));
        std::size_t i = 0;
        while (i < choices.size() && ++pick[i] == static_cast<int>(choices[i].size())) pick[i++] = 0;
        if (i == choices.size()) break;
        if (choices.empty()) break;
    }
    return out;
}

bool is_pullback_square(const GMap& top, const GMap& left, const GMap& bottom, const GMap& right) {
    // commuting: bottom ∘ left == right ∘ top
    if (!top.source().same_set(left.source())) return false;
    for (int p = 0; p < top.source().npoints(); ++p)
        if (bottom(left(p)) != right(top(p))) return false;
    PullbackResult pb = pullback(bottom, right);
    // the induced map w -> pb must be bijective
    if (pb.object.npoints() != top.source().npoints()) return false;
    std::vector<char> hit(pb.object.npoints(), 0);
    for (int p = 0; p < top.source().npoints(); ++p) {
        int xq = left(p), yq = top(p);
        int found = -1;
        for (int i = 0; i < pb.object.npoints(); ++i)
            if (pb.to_x(i) == xq && pb.to_y(i) == yq) {
                found = i;
                break;
            }
        if (found < 0 || hit[found]) return false;
        hit[found] = 1;
    }
    return true;
}

}  // namespace specseq
