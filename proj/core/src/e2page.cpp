#include "specseq/e2page.hpp"

#include <sstream>

namespace specseq {

namespace {

std::string collapse_note(E2Page::Kind kind, bool truncated, int pd) {
    if (truncated) return "";
    std::ostringstream os;
    if (pd < 0) return "zero module; page vanishes";
    if (pd == 0) return "resolution has length 0; page concentrated in p = 0";
    if (kind == E2Page::Kind::Kunneth) {
        os << "pd = " << pd << ": page confined in 0 <= p <= " << pd << ", collapses at E^" << (pd + 1);
    } else {
        // the two stated confinement bounds (m and m+1) are both quoted
        os << "pd = " << pd << ": confinement bounds 0 <= p <= " << pd << " and 0 <= p <= " << (pd + 1)
           << " are both on record; collapse at E^" << (pd + 1);
    }
    return os.str();
}

}  // namespace

E2Page uct_e2(const GradedMackeyModule& ka, const GradedMackeyModule& kb, int p_max, unsigned perm_seed) {
    GradedExtTable t = ext_modules(ka, kb, p_max, perm_seed);
    E2Page page;
    page.kind = E2Page::Kind::UCT;
    page.group = ka.group().name();
    page.p_max = p_max;
    page.truncated = !t.complete;
    page.projective_dimension = t.complete ? t.projective_dimension : -2;
    page.collapse = collapse_note(page.kind, page.truncated, t.projective_dimension);
    for (int p = 0; p <= p_max && static_cast<std::size_t>(p) < t.cells.size(); ++p) {
        // E2^{p,q} = Ext^p(..)_{-q}; modulo 2 the degrees -q and q coincide
        page.cells.push_back(t.cells[p]);
    }
    return page;
}

E2Page kunneth_e2(const GradedMackeyModule& ka, const GradedMackeyModule& kb, int p_max, unsigned perm_seed) {
    GradedTorTable t = tor_modules(ka, kb, p_max, perm_seed);
    E2Page page;
    page.kind = E2Page::Kind::Kunneth;
    page.group = ka.group().name();
    page.p_max = p_max;
    page.truncated = !t.complete;
    page.projective_dimension = t.complete ? t.projective_dimension : -2;
    page.collapse = collapse_note(page.kind, page.truncated, t.projective_dimension);
    std::size_t top = ka.group().subgroup_classes().size() - 1;  // full subgroup is last
    for (int p = 0; p <= p_max && static_cast<std::size_t>(p) < t.cells.size(); ++p) {
        std::array<AbInvariants, 2> cell{t.cells[p][0].empty() ? AbInvariants{} : t.cells[p][0][top],
                                         t.cells[p][1].empty() ? AbInvariants{} : t.cells[p][1][top]};
        page.cells.push_back(cell);
        page.levelwise.push_back(t.cells[p]);
    }
    return page;
}

std::string E2Page::str() const {
    std::ostringstream os;
    os << (kind == Kind::UCT ? "UCT" : "Kunneth") << " E2 page over " << group << " (p <= " << p_max << ")";
    if (truncated) os << " [truncated]";
    os << "\n";
    if (!collapse.empty()) os << "  " << collapse << "\n";
    for (std::size_t p = 0; p < cells.size(); ++p)
        for (int q = 0; q < 2; ++q)
            os << "  E2[p=" << p << ", q=" << q << "] = " << cells[p][q].str() << "\n";
    return os.str();
}

VanishingReport vanishing_check(const GradedMackeyModule& m) {
    VanishingReport r;
    const FiniteGroup& g = m.group();
    auto elem = g.elementary_class_indices();
    auto cyc = g.cyclic_class_indices();
    r.elementary_levels_zero = true;
    for (int e : elem)
        for (int d = 0; d < 2; ++d)
            if (!m.part[d].level(e).is_trivial()) r.elementary_levels_zero = false;
    r.module_zero = m.is_zero();
    r.rational_cyclic_levels_zero = true;
    for (int c : cyc)
        for (int d = 0; d < 2; ++d)
            if (m.part[d].level(c).invariants().free_rank != 0) r.rational_cyclic_levels_zero = false;
    r.rational_module_zero = true;
    for (std::size_t i = 0; i < m.part[0].nclasses(); ++i)
        for (int d = 0; d < 2; ++d)
            if (m.part[d].level(i).invariants().free_rank != 0) r.rational_module_zero = false;
    return r;
}

std::string VanishingReport::str() const {
    std::ostringstream os;
    os << "elementary levels zero: " << (elementary_levels_zero ? "yes" : "no")
       << "; module zero: " << (module_zero ? "yes" : "no")
       << "; cyclic levels rationally zero: " << (rational_cyclic_levels_zero ? "yes" : "no")
       << "; module rationally zero: " << (rational_module_zero ? "yes" : "no")
       << "; implications hold: " << (consistent() ? "yes" : "NO");
    return os.str();
}

namespace {

InductionReport induction_report(const FiniteGroup& g, const std::vector<int>& classes_used) {
    InductionReport rep;
    const auto& cls = g.subgroup_classes();
    const CharacterTable& tg = CharacterTable::of(g.materialize(g.full_subgroup()));
    rep.target_rank = tg.nchars();
    IntMatrix m(rep.target_rank, 0);
    for (int i : classes_used) {
        rep.source_classes.push_back(static_cast<std::size_t>(i));
        m = m.hcat(rep_ind_matrix(g, cls[i].rep, g.full_subgroup()));
    }
    rep.matrix = m;
    rep.cokernel = PresentedAbGroup(rep.target_rank, m).invariants();
    rep.rank = smith_normal_form(m).rank;
    return rep;
}

}  // namespace

InductionReport brauer_surjectivity(const FiniteGroup& g) {
    return induction_report(g, g.elementary_class_indices());
}

InductionReport artin_rank(const FiniteGroup& g) { return induction_report(g, g.cyclic_class_indices()); }

std::string InductionReport::str() const {
    std::ostringstream os;
    os << "induction matrix " << matrix.rows() << "x" << matrix.cols() << " from " << source_classes.size()
       << " classes; cokernel " << cokernel.str() << "; rank " << rank << "/" << target_rank;
    return os.str();
}

}  // namespace specseq
