#pragma once

#include "specseq/green.hpp"

namespace specseq {

// Morphism X -> Y in the category with hom groups R(X x Y): an element of
// the Green functor value at the product, in the flat orbit basis.
struct BoucMorphism {
    GSet x, y;
    GreenValue elem;  // over bouc_product(x, y)

    IntVec flat() const { return elem.flat(); }
};

// Product G-sets reused across hom-group computations; one build wins,
// concurrent readers share the result.
GSet bouc_product(const GSet& x, const GSet& y);

std::size_t bouc_rank(const GreenFunctor& r, const GSet& x, const GSet& y);
BoucMorphism bouc_from_flat(const GreenFunctor& r, const GSet& x, const GSet& y, const IntVec& v);
BoucMorphism bouc_zero(const GreenFunctor& r, const GSet& x, const GSet& y);

// Pushforward of the unit along the diagonal; the two-sided identity of
// composition.
BoucMorphism bouc_identity(const GreenFunctor& r, const GSet& x);

// b ∘ a for a: X -> Y, b: Y -> Z, by pull-multiply-push through X x Y x Z.
BoucMorphism bouc_compose(const GreenFunctor& r, const BoucMorphism& b, const BoucMorphism& a);

// Basis description of B(X, Y): one line per (orbit of X x Y, basis element
// of the value at its stabilizer), carrying the double-coset indexing.
std::vector<std::string> bouc_basis_labels(const GreenFunctor& r, const GSet& x, const GSet& y);

}  // namespace specseq
