#pragma once

#include <string>
#include <vector>

#include "specseq/smith.hpp"

namespace specseq {

// Isomorphism invariants of a finitely generated abelian group: free rank
// plus torsion coefficients t_1 | t_2 | ... (no 1s).
struct AbInvariants {
    std::size_t free_rank = 0;
    IntVec torsion;

    bool operator==(const AbInvariants& o) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string str() const;
};

AbInvariants direct_sum(const AbInvariants& a, const AbInvariants& b);

// Z^ngens modulo the column lattice of `relations`. Element = coordinate
// vector on the generators; equality is membership of the difference in the
// relation lattice. The Smith data of the relations is cached once.
class PresentedAbGroup {
  public:
    PresentedAbGroup() : ngens_(0), relations_(0, 0) { finish(); }
    PresentedAbGroup(std::size_t ngens, IntMatrix relations);

    static PresentedAbGroup free_group(std::size_t rank);
    static PresentedAbGroup cyclic(const Int& n);  // Z/n, n = 0 gives Z

    std::size_t ngens() const { return ngens_; }
    const IntMatrix& relations() const { return relations_; }

    const AbInvariants& invariants() const { return inv_; }
    bool is_trivial() const { return inv_.is_trivial(); }

    bool contains_zero(const IntVec& v) const;   // v == 0 in the group
    bool equal(const IntVec& a, const IntVec& b) const;
    IntVec reduce(const IntVec& v) const;        // canonical coset representative

    PresentedAbGroup direct_sum(const PresentedAbGroup& o) const;

    // Quotient by additional relation columns.
    PresentedAbGroup quotient(const IntMatrix& extra_relations) const;

    // Generators realizing the invariant-factor decomposition: one column per
    // invariant factor != 1 (torsion first, then free), as elements of Z^ngens.
    IntMatrix canonical_generators() const;

    std::string str() const;

  private:
    void finish();

    std::size_t ngens_;
    IntMatrix relations_;
    SmithForm snf_;
    AbInvariants inv_;
};

// Subquotient S/T where S is spanned by the columns of `sub` inside Z^n and T
// by the columns of `trivial` (required: T subset of S). Returns the group
// presented on the basis of S, plus that basis (columns, elements of Z^n).
struct SubquotientPresentation {
    PresentedAbGroup group;
    IntMatrix basis;  // n x s, columns = generators of S
    // Coordinates of v (in Z^n, must lie in S + T) w.r.t. `basis`, valid
    // modulo the subquotient relations.
    IntVec coordinates(const IntVec& v) const;
};
SubquotientPresentation subquotient(std::size_t ambient_rank, const IntMatrix& sub, const IntMatrix& trivial);

// Group of homomorphisms A -> B subject to commutation constraints
// phi * lhs_a = lhs_b * phi (matrices given at generator level, the pair
// (lhs_a, lhs_b) per constraint). Representatives are matrices B.ngens x A.ngens.
struct HomGroup {
    PresentedAbGroup group;
    std::vector<IntMatrix> generators;
};
HomGroup hom_group(const PresentedAbGroup& a, const PresentedAbGroup& b,
                   const std::vector<std::pair<IntMatrix, IntMatrix>>& constraints = {});

}  // namespace specseq
