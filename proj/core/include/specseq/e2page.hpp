#pragma once

#include "specseq/homalg.hpp"

namespace specseq {

// Second page of the universal-coefficient (Ext, cohomological indexing) or
// Kunneth (Tor, homological indexing) spectral sequence. Only the E2 page is
// computed; collapse annotations quote the proven confinement bounds when a
// finite projective resolution certifies them.
struct E2Page {
    enum class Kind { UCT, Kunneth };
    Kind kind;
    std::string group;
    int p_max = 0;
    bool truncated = false;
    int projective_dimension = -2;  // certified only when !truncated
    std::string collapse;           // human-readable confinement note, may be empty
    // cells[p][q mod 2]: UCT entries Ext^p(kA,kB)_{-q}; Kunneth entries are
    // the top-subgroup level of Tor_p(kA, kB)_q
    std::vector<std::array<AbInvariants, 2>> cells;
    // Kunneth detail: Tor levelwise per subgroup class
    std::vector<std::array<std::vector<AbInvariants>, 2>> levelwise;

    std::string str() const;
};

E2Page uct_e2(const GradedMackeyModule& ka, const GradedMackeyModule& kb, int p_max, unsigned perm_seed = 0);
E2Page kunneth_e2(const GradedMackeyModule& ka, const GradedMackeyModule& kb, int p_max, unsigned perm_seed = 0);

// Reports whether all elementary levels vanish, whether the module is zero,
// and the rational variant over cyclic levels; the implications are part of
// the report.
struct VanishingReport {
    bool elementary_levels_zero = false;
    bool module_zero = false;
    bool rational_cyclic_levels_zero = false;
    bool rational_module_zero = false;
    bool consistent() const {
        return (!elementary_levels_zero || module_zero) && (!rational_cyclic_levels_zero || rational_module_zero);
    }
    std::string str() const;
};
VanishingReport vanishing_check(const GradedMackeyModule& m);

// The induction matrix over elementary (resp. cyclic) subgroup classes with
// its cokernel invariants and rational rank.
struct InductionReport {
    std::vector<std::size_t> source_classes;
    IntMatrix matrix;
    AbInvariants cokernel;
    std::size_t rank = 0;
    std::size_t target_rank = 0;
    bool surjective() const { return cokernel.is_trivial(); }
    bool full_rank() const { return rank == target_rank; }
    std::string str() const;
};
InductionReport brauer_surjectivity(const FiniteGroup& g);
InductionReport artin_rank(const FiniteGroup& g);

}  // namespace specseq
