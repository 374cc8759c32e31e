#pragma once

#include <memory>
#include <string>
#include <vector>

#include "specseq/group.hpp"

namespace specseq {

// One orbit of a finite G-set. The base point is chosen so that its
// stabilizer is exactly the representative subgroup of its conjugacy class;
// every point p carries a transversal element t with t*base = p.
struct GSetOrbit {
    std::vector<int> points;       // ascending point indices
    int base = 0;
    int cls = 0;                   // subgroup class of the base stabilizer
    std::vector<int> transversal;  // aligned with `points`
};

// Finite G-set with full action table, orbit-decomposed on construction.
// Value type: copies share immutable data.
class GSet {
  public:
    GSet() = default;

    static GSet empty(const FiniteGroup& g);
    static GSet point(const FiniteGroup& g);                     // G/G
    static GSet orbit(const FiniteGroup& g, const Subgroup& h);  // G/H, cosets labelled canonically
    static GSet free_orbit(const FiniteGroup& g) { return orbit(g, g.trivial_subgroup()); }
    static GSet disjoint_union(const GSet& x, const GSet& y);
    static GSet product(const GSet& x, const GSet& y);
    // Arbitrary action table (used by pullbacks and file loaders).
    static GSet from_action(const FiniteGroup& g, std::vector<std::vector<int>> act, std::string label);

    bool valid() const { return d_ != nullptr; }
    const FiniteGroup& group() const { return *d_->g; }
    int npoints() const { return d_ ? d_->npoints : 0; }
    int act(int g, int x) const { return d_->act[g][x]; }
    const std::vector<GSetOrbit>& orbits() const { return d_->orbits; }
    int orbit_of(int point) const { return d_->orbit_index[point]; }
    int transversal_of(int point) const;  // t with t*base(orbit of point) = point
    Subgroup stabilizer(int point) const;

    std::vector<int> fixed_points(const Subgroup& k) const;

    const std::string& label() const { return d_->label; }
    const std::string& key() const { return d_->key; }
    bool same_set(const GSet& o) const { return d_ == o.d_ || key() == o.key(); }

  private:
    struct Data {
        const FiniteGroup* g;
        int npoints;
        std::vector<std::vector<int>> act;
        std::vector<GSetOrbit> orbits;
        std::vector<int> orbit_index;
        std::string label;
        std::string key;
    };
    std::shared_ptr<const Data> d_;
    static GSet finish(std::unique_ptr<Data> d);
};

// Equivariant map of G-sets, stored pointwise; equivariance is verified on
// construction.
class GMap {
  public:
    GMap() = default;
    GMap(GSet source, GSet target, std::vector<int> images);

    // The unique extension with base(orbit i) -> base_images[i].
    static GMap from_base_images(const GSet& source, const GSet& target, const std::vector<int>& base_images);
    static GMap identity(const GSet& x);
    static GMap to_point(const GSet& x);
    static GMap proj1(const GSet& x, const GSet& y);  // X x Y -> X (expects product(x, y))
    static GMap proj2(const GSet& x, const GSet& y);
    static GMap diagonal(const GSet& x);              // X -> X x X
    static GMap into_union_left(const GSet& x, const GSet& y);
    static GMap into_union_right(const GSet& x, const GSet& y);
    static GMap fold(const GSet& x);                  // X + X -> X

    const GSet& source() const { return src_; }
    const GSet& target() const { return tgt_; }
    int operator()(int p) const { return img_[p]; }
    const std::vector<int>& images() const { return img_; }

    GMap compose_after(const GMap& first) const;  // this ∘ first

  private:
    GSet src_, tgt_;
    std::vector<int> img_;
};

struct PullbackResult {
    GSet object;
    GMap to_x;  // projection to the source of f
    GMap to_y;  // projection to the source of g
};
// Pullback of X --f--> Z <--g-- Y as the equalizing subset of X x Y.
PullbackResult pullback(const GMap& f, const GMap& g);

// All equivariant maps X -> Y (product over orbits of fixed-point choices).
std::vector<GMap> maps_between(const GSet& x, const GSet& y);

// Does the square (w --top--> y, w --left--> x, x --bottom--> z, y --right--> z)
// commute and induce an isomorphism onto the pullback of (bottom, right)?
bool is_pullback_square(const GMap& top, const GMap& left, const GMap& bottom, const GMap& right);

}  // namespace specseq
