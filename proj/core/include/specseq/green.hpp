#pragma once

#include <map>
#include <mutex>

#include "specseq/burnside.hpp"
#include "specseq/chartable.hpp"
#include "specseq/gset.hpp"

namespace specseq {

enum class GreenKind { Representation, Burnside };

// Uniform handle over the two implemented Green functors. Values at a
// subgroup H are coordinate vectors over the canonical basis (Irr(H) for the
// representation functor, subgroup classes of H for the Burnside functor);
// structure matrices are exact and cached.
class GreenFunctor {
  public:
    static const GreenFunctor& representation(const FiniteGroup& g);
    static const GreenFunctor& burnside(const FiniteGroup& g);

    GreenKind kind() const { return kind_; }
    const FiniteGroup& group() const { return *g_; }
    std::string tag() const { return kind_ == GreenKind::Representation ? "representation" : "burnside"; }

    std::size_t rank(const Subgroup& h) const;
    IntVec unit(const Subgroup& h) const;
    IntVec mult(const Subgroup& h, const IntVec& a, const IntVec& b) const;
    const IntMatrix& res(const Subgroup& h, const Subgroup& l) const;   // R(H) -> R(L)
    const IntMatrix& ind(const Subgroup& l, const Subgroup& h) const;   // R(L) -> R(H)
    const IntMatrix& conj(const Subgroup& h, int g) const;              // R(H) -> R(^gH)

    // Basis label for printing (irreducible degree / orbit type).
    std::string basis_label(const Subgroup& h, std::size_t idx) const;

  private:
    GreenFunctor(GreenKind k, const FiniteGroup& g) : kind_(k), g_(&g) {}
    GreenKind kind_;
    const FiniteGroup* g_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, IntMatrix> matrix_cache_;
};

// Value of the functor at a G-set: one coordinate block per orbit, at the
// canonical class-representative stabilizer of the orbit base point.
struct GreenValue {
    GSet x;
    std::vector<IntVec> comps;

    IntVec flat() const;
    static GreenValue from_flat(const GreenFunctor& r, const GSet& x, const IntVec& v);
};

std::size_t green_rank(const GreenFunctor& r, const GSet& x);
GreenValue green_zero(const GreenFunctor& r, const GSet& x);
GreenValue green_unit(const GreenFunctor& r, const GSet& x);
GreenValue green_multiply(const GreenFunctor& r, const GreenValue& a, const GreenValue& b);
GreenValue green_add(const GreenValue& a, const GreenValue& b);

// Matrices of the two functorialities along an equivariant map, in the flat
// bases of green_rank.
IntMatrix green_covariant(const GreenFunctor& r, const GMap& f);
IntMatrix green_contravariant(const GreenFunctor& r, const GMap& f);

bool green_check_pullback_axiom(const GreenFunctor& r, const GMap& top, const GMap& left, const GMap& bottom,
                                const GMap& right);

}  // namespace specseq
