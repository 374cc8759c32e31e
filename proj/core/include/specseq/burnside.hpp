#pragma once

#include "specseq/group.hpp"
#include "specseq/intmatrix.hpp"

namespace specseq {

// Burnside ring of a group H, with basis the transitive H-sets [H/K] indexed
// by the subgroup classes of H in canonical order. Two independent product
// routes are kept: the double-coset orbit formula and pointwise-multiplied
// marks; tests compare them.
struct BurnsideRing {
    const FiniteGroup* h;
    IntMatrix marks;  // marks.at(i, j) = |(H/L_i)^{K_j}|, lower-triangular

    static const BurnsideRing& of(const FiniteGroup& h);

    std::size_t rank() const { return marks.rows(); }
    IntVec unit() const;
    IntVec mult(const IntVec& a, const IntVec& b) const;        // orbit formula
    IntVec mult_via_marks(const IntVec& a, const IntVec& b) const;
    IntVec mark_vector(const IntVec& a) const;
};

// Structure maps of the Burnside Green functor between subgroups of g.
IntMatrix bur_res_matrix(const FiniteGroup& g, const Subgroup& h, const Subgroup& l);
IntMatrix bur_ind_matrix(const FiniteGroup& g, const Subgroup& l, const Subgroup& h);
IntMatrix bur_conj_matrix(const FiniteGroup& g, const Subgroup& h, int conj_by);

// Subgroup translation between a materialized subgroup and its parent.
Subgroup to_local_subgroup(const FiniteGroup& mat, const Subgroup& parent_sub);
Subgroup to_parent_subgroup(const FiniteGroup& g, const FiniteGroup& mat, const Subgroup& local_sub);

// Unit morphism of Green functors Bur -> R: [H/K] -> permutation character.
IntMatrix linearization_matrix(const FiniteGroup& g, const Subgroup& h);

}  // namespace specseq
