#pragma once

#include <map>
#include <mutex>

#include "specseq/abgroup.hpp"
#include <functional>

#include "specseq/green.hpp"

namespace specseq {

// Conjugation data of one subgroup class: all subgroups of the class
// representative H_i, grouped into N_G(H_i)-orbits. Structure maps of a
// module are stored once per orbit representative ("slot"); everything else
// is derived by conjugation.
struct SuborbitTable {
    struct Entry {
        std::string slot;  // key of the orbit representative S
        int conj;          // n in N_G(H_i) with ^n S = this subgroup
        int cls;           // class of the subgroup in G
    };
    std::vector<std::string> slot_keys;          // sorted; excludes H_i itself
    std::map<std::string, Subgroup> slot_sub;
    std::map<std::string, Entry> by_subgroup;    // keyed by subgroup key, all L <= H_i
};
const SuborbitTable& suborbit_table(const FiniteGroup& g, int cls);

struct AxiomFailure {
    std::string identity;
    std::string instance;
};
struct AxiomReport {
    std::vector<AxiomFailure> failures;
    bool pass() const { return failures.empty(); }
    std::string str() const;
};

// Finitely presented Mackey module over a Green functor, in the subgroup
// picture. Data lives at the class representatives: one presented abelian
// group per class, conjugation matrices per Weyl coset, restriction and
// induction matrices per subconjugate slot, and one action matrix per basis
// element of R(H_i). Matrices of arbitrary structure maps are derived (and
// cached) from this data; check_axioms certifies global consistency.
class MackeyModule {
  public:
    struct ClassData {
        PresentedAbGroup level;
        std::vector<IntMatrix> conj;           // per Weyl coset rep of the class rep
        std::map<std::string, IntMatrix> res;  // slot key -> matrix level(i) -> level(cls(S))
        std::map<std::string, IntMatrix> ind;  // slot key -> matrix level(cls(S)) -> level(i)
        std::vector<IntMatrix> action;         // per basis element of R(H_i)
    };

    MackeyModule() = default;
    MackeyModule(const GreenFunctor& r, std::vector<ClassData> data);

    bool valid() const { return d_ != nullptr; }
    const FiniteGroup& group() const { return *d_->g; }
    const GreenFunctor& functor() const { return *d_->r; }
    std::size_t nclasses() const { return d_->cls.size(); }
    const PresentedAbGroup& level(std::size_t i) const { return d_->cls[i].level; }
    const ClassData& class_data(std::size_t i) const { return d_->cls[i]; }
    bool is_zero() const;

    // Matrices of the structure maps between class levels, in transported
    // coordinates (source level -> target level).
    IntMatrix con_map(int g, const Subgroup& k) const;                 // M[K] -> M[^gK]
    IntMatrix res_map(const Subgroup& h, const Subgroup& l) const;     // M[H] -> M[L]
    IntMatrix ind_map(const Subgroup& l, const Subgroup& h) const;     // M[L] -> M[H]
    IntMatrix action_map(const Subgroup& h, const IntVec& r) const;    // r in R(H)

    AxiomReport check_axioms(bool stop_at_first = false) const;

    std::string describe() const;

  private:
    struct Data {
        const GreenFunctor* r;
        const FiniteGroup* g;
        std::vector<ClassData> cls;
        mutable std::mutex mutex;
        mutable std::map<std::string, IntMatrix> derived;
    };
    std::shared_ptr<Data> d_;

    const IntMatrix& cached(const std::string& key, const std::function<IntMatrix()>& make) const;
    IntMatrix weyl_con(std::size_t cls, int n) const;  // con by n in N(H_cls) on level(cls)
};

// Degree-preserving homomorphism of Mackey modules: one matrix per class
// level (generator coordinates, valid modulo the target presentations).
struct ModuleHom {
    MackeyModule src, dst;
    std::vector<IntMatrix> comps;

    bool is_zero() const;
    static ModuleHom zero(const MackeyModule& m, const MackeyModule& n);
    static ModuleHom identity(const MackeyModule& m);
    ModuleHom compose_after(const ModuleHom& first) const;  // this ∘ first
    ModuleHom operator+(const ModuleHom& o) const;
    ModuleHom scaled(const Int& c) const;
    bool equals(const ModuleHom& o) const;  // modulo target presentations
    // does it commute with every structure map (i.e. is it really a hom)?
    bool verify() const;
};

// Evaluation of a module at a G-set: direct sum of the levels at the orbit
// stabilizers (which are class representatives by the base point convention).
struct ModuleValue {
    PresentedAbGroup group;
    std::vector<std::size_t> offsets;  // per orbit, offset into the generators
};
ModuleValue evaluate(const MackeyModule& m, const GSet& x);
IntMatrix evaluate_covariant(const MackeyModule& m, const GMap& f);
IntMatrix evaluate_contravariant(const MackeyModule& m, const GMap& f);
// Action of a Green value r in R(X) on M(X), as a matrix on evaluate(m, x).
IntMatrix value_action(const MackeyModule& m, const GSet& x, const GreenValue& r);

// Solver for systems of commuting-matrix conditions over presented groups:
// unknowns phi_v, conditions p*phi_a*q - r*phi_b*s = 0 modulo a target
// lattice. Used for module homs and induced maps.
struct HomVar {
    std::size_t rows, cols;
};
struct HomCondition {
    std::size_t a, b;       // variable indices; set b = a for one-sided conditions
    IntMatrix p, q, r, s;   // shapes: p (t x rows_a), q (cols_a x c), r (t x rows_b), s (cols_b x c)
    IntMatrix target;       // lattice columns in dimension t (empty allowed)
};
struct HomSystemSolution {
    PresentedAbGroup group;
    std::vector<std::vector<IntMatrix>> generators;  // [generator][variable]
    std::vector<HomVar> vars;
    IntMatrix basis;    // flat solution basis (internal)
    IntMatrix trivial;  // flat trivial lattice (internal)
    std::shared_ptr<const RepeatedSolver> solver;  // over [basis | trivial]
    IntVec coordinates(const std::vector<IntMatrix>& assignment) const;
};
HomSystemSolution solve_hom_system(const std::vector<HomVar>& vars, const std::vector<HomCondition>& conditions,
                                   const std::vector<IntMatrix>& trivial_lattices);

// The group of module homomorphisms with explicit generating homs.
struct ModuleHomGroup {
    PresentedAbGroup group;
    std::vector<ModuleHom> generators;
    HomSystemSolution solution;  // retained for coordinate queries
    IntVec coordinates(const ModuleHom& h) const;
};
ModuleHomGroup hom_modules(const MackeyModule& m, const MackeyModule& n);

}  // namespace specseq
