#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace specseq {

// Selection policy for all non-canonical choices (class representatives,
// double-coset representatives, base points, conjugators). The default picks
// lexicographically least everywhere; the randomized mode draws from a seeded
// generator so that isomorphism-invariant outputs can be checked to be
// independent of every such choice.
struct ChoicePolicy {
    bool randomized = false;
    std::uint64_t seed = 0;

    // Deterministic pick of one index out of `count` for a given context tag.
    std::size_t pick(const std::string& context, std::size_t count) const;
};

class FiniteGroup;

// Subgroup of a fixed parent group: sorted element-index set.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elems;  // sorted, contains 0

    std::size_t order() const { return elems.size(); }
    bool contains(int g) const;
    bool contains_subgroup(const Subgroup& o) const;
    bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
    bool operator<(const Subgroup& o) const;  // by (order, elems lex)
    std::string key() const;
};

struct SubgroupClass {
    Subgroup rep;                  // chosen representative (canonical or randomized)
    Subgroup canonical;            // lex-least member, used for labels
    std::vector<Subgroup> members;
    bool is_cyclic = false;
    bool is_elementary = false;
};

// Weyl group data for a subgroup H: transversal of H in N_G(H) plus a
// generating subset of the transversal (as parent elements).
struct WeylData {
    std::vector<int> coset_reps;  // coset_reps[0] represents H itself
    std::vector<int> generators;  // subset of coset_reps (excluding identity coset)
    std::vector<int> coset_of;    // parent element -> index into coset_reps, -1 outside N
};

class FiniteGroup {
  public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name);
    static FiniteGroup from_permutations(int npoints, const std::vector<std::vector<int>>& gens, std::string name);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);  // order 2n, n >= 1
    static FiniteGroup symmetric(int n); // n <= 4
    static FiniteGroup alternating4();
    static FiniteGroup quaternion8();
    static FiniteGroup elementary_abelian(int p, int k);
    // Named presets: Z<n>/C<n>, D<n>, S<n>, A4, Q8, E<p>^<k>, V4, 1,
    // or "perm:<npoints>:<cycles>;<cycles>;..." with cycles like (0,1)(2,3).
    static FiniteGroup preset(const std::string& spec);

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conj_elem(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int element_order(int a) const { return elem_order_[a]; }
    unsigned long exponent() const { return exponent_; }
    const std::string& name() const { return name_; }
    bool is_abelian() const;

    void set_policy(const ChoicePolicy& p);  // call before any cached query
    const ChoicePolicy& policy() const { return policy_; }
    void set_order_cap(int cap) { order_cap_ = cap; }
    int order_cap() const { return order_cap_; }

    // Element conjugacy classes, sorted by (element order, least member).
    struct ElemClass {
        int rep;
        std::vector<int> members;
        int inverse_class;
        int order;
    };
    const std::vector<ElemClass>& elem_classes() const;
    int elem_class_of(int g) const;

    // Full subgroup lattice (sorted) and conjugacy classes of subgroups,
    // sorted by (order, lex of canonical member). Throws if order() exceeds
    // the configured cap.
    const std::vector<Subgroup>& all_subgroups() const;
    const std::vector<SubgroupClass>& subgroup_classes() const;
    int class_of_subgroup(const Subgroup& s) const;
    // u with rep-of-class conjugated by u equal to K: K = u * rep * u^{-1}.
    int conjugator_from_rep(const Subgroup& k) const;

    std::vector<int> elementary_class_indices() const;
    std::vector<int> cyclic_class_indices() const;

    Subgroup trivial_subgroup() const;
    Subgroup full_subgroup() const;
    Subgroup subgroup_generated(const std::vector<int>& gens) const;
    Subgroup conjugate_subgroup(const Subgroup& s, int g) const;  // ^g s

    bool is_cyclic_subgroup(const Subgroup& s) const;
    bool is_elementary_subgroup(const Subgroup& s) const;

    std::vector<int> left_coset_reps(const Subgroup& h) const;             // least per coset
    std::vector<int> double_coset_reps(const Subgroup& h, const Subgroup& l) const;
    Subgroup normalizer(const Subgroup& h) const;
    const WeylData& weyl(const Subgroup& h) const;

    // The subgroup as a group of its own; element i of the result corresponds
    // to parent element materialize(s).parent_elements()[i].
    const FiniteGroup& materialize(const Subgroup& s) const;
    const std::vector<int>& parent_elements() const { return parent_map_; }
    bool has_parent() const { return !parent_map_.empty(); }

    // Subgroup of this group from a set of parent elements of a materialized
    // subgroup (helper for moving between the two index worlds).
    Subgroup intersect(const Subgroup& a, const Subgroup& b) const;

    std::string describe() const;

    // Lifetime-bound cache slots for derived data (character tables, Green
    // functor bases). First stored value wins; safe under concurrent fills.
    std::shared_ptr<void> plugin_get(const std::string& name) const;
    std::shared_ptr<void> plugin_put(const std::string& name, std::shared_ptr<void> value) const;

  private:
    FiniteGroup() = default;
    void finish_construction();

    int order_ = 0;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> elem_order_;
    unsigned long exponent_ = 1;
    std::string name_;
    std::vector<std::vector<int>> perm_gens_;  // provenance, may be empty
    int perm_degree_ = 0;
    ChoicePolicy policy_;
    int order_cap_ = 64;
    std::vector<int> parent_map_;  // nonempty iff materialized from a parent

    struct Caches {
        std::recursive_mutex mutex;
        std::optional<std::vector<ElemClass>> elem_classes;
        std::vector<int> elem_class_of;
        std::optional<std::vector<Subgroup>> subgroups;
        std::optional<std::vector<SubgroupClass>> classes;
        bool class_flags_done = false;
        std::map<std::string, int> class_index;
        std::map<std::string, int> conjugator;
        std::map<std::string, std::unique_ptr<FiniteGroup>> materialized;
        std::map<std::string, WeylData> weyl;
        std::map<std::string, std::shared_ptr<void>> plugins;
    };
    mutable std::unique_ptr<Caches> caches_ = std::make_unique<Caches>();

    void build_elem_classes_locked() const;
    void build_subgroups_locked() const;
    void build_classes_locked() const;
};

}  // namespace specseq
