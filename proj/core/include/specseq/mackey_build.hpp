#pragma once

#include "specseq/mackey.hpp"

namespace specseq {

MackeyModule zero_module(const GreenFunctor& r);
// The Green functor as a module over itself (the tensor unit).
MackeyModule unit_module(const GreenFunctor& r);
// The shifted module M_X : Y -> M(Y x X).
MackeyModule shift_module(const MackeyModule& m, const GSet& x);
// Representable module R_X = (unit)_X; projective generator.
MackeyModule representable(const GreenFunctor& r, const GSet& x);
// Module over the trivial group from a plain abelian group.
MackeyModule abelian_module(const GreenFunctor& r, const PresentedAbGroup& a);

MackeyModule direct_sum_modules(const std::vector<MackeyModule>& ms);

struct ModuleWithMap {
    MackeyModule module;
    ModuleHom map;  // inclusion (kernel/image/submodule) or projection (cokernel)
};
ModuleWithMap kernel_module(const ModuleHom& h);
ModuleWithMap cokernel_module(const ModuleHom& h);
ModuleWithMap image_module(const ModuleHom& h);
// Closure of the given elements (coordinate vectors per class level) under
// all structure maps of m; returns the submodule with its inclusion.
ModuleWithMap submodule_generated(const MackeyModule& m, const std::vector<std::vector<IntVec>>& elements);

// Change of group: restriction to a subgroup (module over g.materialize(sub))
// and induction from a materialized subgroup back up.
MackeyModule restrict_module(const MackeyModule& m, const Subgroup& sub);
MackeyModule induce_module(const MackeyModule& m_sub, const FiniteGroup& g, const Subgroup& sub);

// Yoneda machinery.
// The element id_X of (R_X)(X), in evaluate(representable(x), x) coordinates.
IntVec yoneda_element(const GreenFunctor& r, const GSet& x);
// The module map R_X -> M classifying an element of M(X) = evaluate(m, x).
ModuleHom yoneda_hom(const MackeyModule& rep_x, const MackeyModule& m, const GSet& x, const IntVec& elem);
// The map M(X) -> N(X) induced by a hom, in evaluate coordinates.
IntMatrix evaluate_hom(const ModuleHom& h, const GSet& x);
// Hom out of a direct sum assembled from homs out of the summands.
ModuleHom hom_from_summands(const MackeyModule& sum, const MackeyModule& target, const std::vector<ModuleHom>& parts);

// Green-value restriction along a subgroup inclusion: a value of the parent
// functor on a G-set becomes a value of the subgroup functor on the same set
// with the restricted action.
GreenValue green_restrict_value(const GreenFunctor& parent, const GreenFunctor& sub_functor, const GSet& x_parent,
                                const GSet& x_restricted, const GreenValue& v);
// The G-set x viewed as a set with the action of the subgroup only.
GSet restrict_gset(const FiniteGroup& g, const Subgroup& sub, const GSet& x);

// The coset-multiplication map G/H_j -> G/H_i, xH_j -> x e H_i (requires
// ^(e^-1) H_j <= H_i; verified by the GMap constructor).
GMap coset_mul_map(const GSet& from, const GSet& to, int e);

}  // namespace specseq
