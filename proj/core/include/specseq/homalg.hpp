#pragma once

#include <array>

#include "specseq/bouc.hpp"
#include "specseq/mackey_build.hpp"

namespace specseq {

// Z/2-graded module: a pair of ungraded levels; the shift swaps them.
struct GradedMackeyModule {
    std::array<MackeyModule, 2> part;

    static GradedMackeyModule concentrated(const MackeyModule& m, int degree);
    GradedMackeyModule shifted() const { return GradedMackeyModule{{part[1], part[0]}}; }
    const FiniteGroup& group() const { return part[0].group(); }
    bool is_zero() const { return part[0].is_zero() && part[1].is_zero(); }
    AxiomReport check_axioms() const;
};

// Projective resolution by sums of orbit representables. Step k holds the
// sum module, the differential to step k-1 (the augmentation to the target
// for k = 0), and the classifying Bouc elements of each summand column.
struct ResolutionStep {
    std::vector<std::size_t> summand_cls;
    MackeyModule module;
    ModuleHom d;
    // bouc_entries[a][b]: element of B(X_b, X_a), X_b = summand b of this
    // step, X_a = summand a of the previous step; present for k >= 1.
    std::vector<std::vector<IntVec>> bouc_entries;
};

struct Resolution {
    MackeyModule target;
    std::vector<ResolutionStep> steps;
    bool complete = false;
    // last index with nonzero step when complete (-1 for the zero module)
    int projective_dimension = -2;
};

// Generator selection: canonical generators per class, classes ordered by
// subgroup order descending; perm_seed != 0 reshuffles the selection order
// (used by the resolution-independence tests).
Resolution resolve(const MackeyModule& m, int max_len, unsigned perm_seed = 0);

struct ExactnessReport {
    bool dd_zero = false;
    bool exact = false;
    std::vector<std::string> issues;
    bool pass() const { return dd_zero && exact; }
};
ExactnessReport certify_resolution(const Resolution& res);

// Transport between Bouc morphisms and module maps.
// The induced map N(Y) -> N(X) for a in B(X, Y), in evaluate coordinates.
IntMatrix presheaf_action(const MackeyModule& n, const BoucMorphism& a);
// The induced module map N_X -> N_Y (shift modules must be supplied).
ModuleHom shift_hom(const MackeyModule& n, const MackeyModule& n_x, const MackeyModule& n_y, const BoucMorphism& a);
// Element of evaluate(representable(y-side), x) matching a in B(X, Y).
IntVec bouc_to_evaluate_coords(const GreenFunctor& r, const BoucMorphism& a);
// Yoneda-transported module map R_X -> R_Y of a (the two-path oracle mate of
// shift_hom on representables).
ModuleHom bouc_transport(const MackeyModule& rep_x, const MackeyModule& rep_y, const BoucMorphism& a);

struct UngradedExt {
    std::vector<AbInvariants> groups;  // index n
    bool complete = false;
    int projective_dimension = -2;
};
UngradedExt ext_with_resolution(const Resolution& res, const MackeyModule& n, int max_n);

struct UngradedTor {
    std::vector<std::vector<AbInvariants>> levels;  // [n][class]
    bool complete = false;
    int projective_dimension = -2;
};
UngradedTor tor_with_resolution(const Resolution& res, const MackeyModule& n, int max_n);

struct GradedExtTable {
    std::vector<std::array<AbInvariants, 2>> cells;  // [n][degree]
    int max_n = 0;
    bool complete = false;
    int projective_dimension = -2;
};
GradedExtTable ext_modules(const GradedMackeyModule& m, const GradedMackeyModule& n, int max_n, unsigned perm_seed = 0);

struct GradedTorTable {
    std::vector<std::array<std::vector<AbInvariants>, 2>> cells;  // [n][degree][class]
    int max_n = 0;
    bool complete = false;
    int projective_dimension = -2;
};
GradedTorTable tor_modules(const GradedMackeyModule& m, const GradedMackeyModule& n, int max_n, unsigned perm_seed = 0);

// Tensor product via right exactness: coker(N_{X(P_1)} -> N_{X(P_0)}).
MackeyModule box_product(const MackeyModule& m, const MackeyModule& n);
GradedMackeyModule box_graded(const GradedMackeyModule& m, const GradedMackeyModule& n);

// Direct coequalizer presentation of (M box N)(X) over orbit maps into X.
PresentedAbGroup box_direct_oracle(const MackeyModule& m, const MackeyModule& n, const GSet& x);

// Internal hom: value at G/H is Hom(M, N_{G/H}).
MackeyModule internal_hom(const MackeyModule& m, const MackeyModule& n);

// Ind(M) box N vs Ind(M box Res N), compared levelwise.
bool frobenius_check(const MackeyModule& m_sub, const FiniteGroup& g, const Subgroup& sub, const MackeyModule& n);

}  // namespace specseq
