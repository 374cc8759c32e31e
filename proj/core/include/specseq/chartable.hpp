#pragma once

#include "specseq/cyclotomic.hpp"
#include "specseq/group.hpp"
#include "specseq/intmatrix.hpp"

namespace specseq {

// Exact complex character table, computed once per group by simultaneous
// class-algebra diagonalization over a suitable prime field and lifted to
// Z[zeta_e], e = exp(G). Both orthogonality relations are verified before the
// table is released.
class CharacterTable {
  public:
    static const CharacterTable& of(const FiniteGroup& g);

    const FiniteGroup& group() const { return *g_; }
    std::size_t nchars() const { return values_.size(); }
    std::size_t nclasses() const { return values_.empty() ? 0 : values_[0].size(); }
    unsigned long conductor() const { return conductor_; }

    const CycInt& value(std::size_t chi, std::size_t cls) const { return values_[chi][cls]; }
    const std::vector<CycInt>& row(std::size_t chi) const { return values_[chi]; }
    Int degree(std::size_t chi) const { return values_[chi][0].integer_part(); }

    int class_size(std::size_t cls) const { return class_sizes_[cls]; }
    int class_rep(std::size_t cls) const { return class_reps_[cls]; }
    std::size_t inverse_class(std::size_t cls) const { return inverse_class_[cls]; }
    std::size_t class_of_element(int g) const;

    // <a, b> = |G|^-1 sum |C_j| a(j) b(j*); exact, must be an integer.
    Int inner(const std::vector<CycInt>& a, const std::vector<CycInt>& b) const;

    std::vector<CycInt> class_function(const IntVec& coords) const;
    IntVec decompose(const std::vector<CycInt>& classfun) const;

    void verify_orthogonality() const;  // throws on violation

    // Construct from externally supplied data (file import); verification runs.
    CharacterTable(const FiniteGroup& g, unsigned long conductor, std::vector<std::vector<CycInt>> values);

  private:
    explicit CharacterTable(const FiniteGroup& g);
    void init_classes();
    void compute();
    void sort_canonically();

    const FiniteGroup* g_;
    unsigned long conductor_;
    std::vector<int> class_reps_;
    std::vector<int> class_sizes_;
    std::vector<std::size_t> inverse_class_;
    std::vector<std::vector<CycInt>> values_;  // values_[chi][cls]
};

// Representation-ring operations for subgroups of a common parent group.
// Coordinates are over Irr of the materialized subgroup's table, in its
// canonical order.
IntVec rep_ring_mult(const FiniteGroup& h, const IntVec& a, const IntVec& b);
IntVec rep_ring_unit(const FiniteGroup& h);

// res: R(H) -> R(L) for L <= H <= G, as a matrix in the canonical bases.
IntMatrix rep_res_matrix(const FiniteGroup& g, const Subgroup& h, const Subgroup& l);
// ind: R(L) -> R(H).
IntMatrix rep_ind_matrix(const FiniteGroup& g, const Subgroup& l, const Subgroup& h);
// conj: R(H) -> R(^gH).
IntMatrix rep_conj_matrix(const FiniteGroup& g, const Subgroup& h, int conj_by);

}  // namespace specseq
