#include "specseq/abgroup.hpp"

#include <sstream>

namespace specseq {

std::string AbInvariants::str() const {
    std::ostringstream os;
    if (is_trivial()) return "0";
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

AbInvariants direct_sum(const AbInvariants& a, const AbInvariants& b) {
    // Merge torsion by re-running SNF on a diagonal matrix.
    std::size_t n = a.torsion.size() + b.torsion.size();
    IntMatrix d(n, n);
    std::size_t k = 0;
    for (const auto& t : a.torsion) d.at(k, k) = t, ++k;
    for (const auto& t : b.torsion) d.at(k, k) = t, ++k;
    SmithForm s = smith_normal_form(d);
    AbInvariants r;
    r.free_rank = a.free_rank + b.free_rank;
    for (const auto& t : s.diag)
        if (t > 1) r.torsion.push_back(t);
    return r;
}

PresentedAbGroup::PresentedAbGroup(std::size_t ngens, IntMatrix relations)
    : ngens_(ngens), relations_(std::move(relations)) {
    if (relations_.rows() != ngens_) throw std::invalid_argument("PresentedAbGroup: relation rows != ngens");
    finish();
}

PresentedAbGroup PresentedAbGroup::free_group(std::size_t rank) {
    return PresentedAbGroup(rank, IntMatrix(rank, 0));
}

PresentedAbGroup PresentedAbGroup::cyclic(const Int& n) {
    IntMatrix rel(1, n == 0 ? 0 : 1);
    if (n != 0) rel.at(0, 0) = n;
    return PresentedAbGroup(1, rel);
}

void PresentedAbGroup::finish() {
    snf_ = smith_normal_form(relations_);
    inv_.free_rank = ngens_ - snf_.rank;
    inv_.torsion.clear();
    for (std::size_t i = 0; i < snf_.rank; ++i)
        if (snf_.diag[i] > 1) inv_.torsion.push_back(snf_.diag[i]);
}

bool PresentedAbGroup::contains_zero(const IntVec& v) const {
    if (v.size() != ngens_) throw std::invalid_argument("element size mismatch");
    IntVec w = snf_.left.apply(v);
    for (std::size_t i = 0; i < ngens_; ++i) {
        if (i < snf_.rank) {
            if (!divides(snf_.diag[i], w[i])) return false;
        } else if (w[i] != 0) {
            return false;
        }
    }
    return true;
}

bool PresentedAbGroup::equal(const IntVec& a, const IntVec& b) const { return contains_zero(a - b); }

IntVec PresentedAbGroup::reduce(const IntVec& v) const {
    IntVec w = snf_.left.apply(v);
    for (std::size_t i = 0; i < snf_.rank; ++i) w[i] = snf_.diag[i] == 0 ? w[i] : mod_euclid(w[i], snf_.diag[i]);
    return snf_.left_inv.apply(w);
}

PresentedAbGroup PresentedAbGroup::direct_sum(const PresentedAbGroup& o) const {
    return PresentedAbGroup(ngens_ + o.ngens_, relations_.diag_sum(o.relations_));
}

PresentedAbGroup PresentedAbGroup::quotient(const IntMatrix& extra_relations) const {
    return PresentedAbGroup(ngens_, relations_.hcat(extra_relations));
}

IntMatrix PresentedAbGroup::canonical_generators() const {
    std::vector<IntVec> cols;
    for (std::size_t i = 0; i < ngens_; ++i) {
        bool keep = i >= snf_.rank || snf_.diag[i] > 1;
        if (keep) cols.push_back(snf_.left_inv.column_vec(i));
    }
    return IntMatrix::from_columns(ngens_, cols);
}

std::string PresentedAbGroup::str() const { return inv_.str(); }

IntVec SubquotientPresentation::coordinates(const IntVec& v) const {
    // Solve basis * c = v modulo the subquotient relations; relations columns of
    // the presentation are expressed in the same basis, so solve against
    // [basis | basis*relations]... relations already live in coordinate space.
    // Instead solve basis*c + ambient 0 = v over the sub lattice extended by
    // nothing: v must lie in S (+T subset S), use exact solve.
    auto c = solve_linear(basis, v);
    if (!c) throw std::runtime_error("subquotient coordinates: vector not in subgroup");
    return *c;
}

SubquotientPresentation subquotient(std::size_t ambient_rank, const IntMatrix& sub, const IntMatrix& trivial) {
    IntMatrix basis = column_lattice_basis(sub);
    // Express each trivial column in the basis; these are the relations.
    RepeatedSolver solver(basis);
    IntMatrix rel(basis.cols(), trivial.cols());
    for (std::size_t j = 0; j < trivial.cols(); ++j) {
        auto c = solver.solve(trivial.column_vec(j));
        if (!c) throw std::runtime_error("subquotient: trivial lattice not inside sub lattice");
        rel.set_column(j, *c);
    }
    SubquotientPresentation out{PresentedAbGroup(basis.cols(), rel), basis};
    (void)ambient_rank;
    return out;
}

HomGroup hom_group(const PresentedAbGroup& a, const PresentedAbGroup& b,
                   const std::vector<std::pair<IntMatrix, IntMatrix>>& constraints) {
    const std::size_t m = a.ngens(), n = b.ngens();
    const std::size_t nphi = n * m;
    auto phi_index = [&](std::size_t bi, std::size_t aj) { return bi * m + aj; };

    // Rows of the big system: conditions on vec(phi) plus auxiliary unknowns
    // absorbing "modulo relations of b" on each condition column.
    // (1) well-definedness: phi * rel_a = rel_b * y.
    // (2) each constraint: phi * lhs_a - lhs_b * phi = rel_b * y'.
    const IntMatrix& ra = a.relations();
    const IntMatrix& rb = b.relations();

    std::vector<IntMatrix> condition_blocks;  // each: (n * cols) x nphi, paired with target columns count
    std::vector<std::size_t> cond_cols;

    auto make_block = [&](std::size_t ncols) { return IntMatrix(n * ncols, nphi); };

    {  // (1)
        IntMatrix blk = make_block(ra.cols());
        for (std::size_t c = 0; c < ra.cols(); ++c)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < m; ++j) blk.at(c * n + i, phi_index(i, j)) = ra.at(j, c);
        condition_blocks.push_back(std::move(blk));
        cond_cols.push_back(ra.cols());
    }
    for (const auto& [la, lb] : constraints) {
        if (la.rows() != m || la.cols() != m || lb.rows() != n || lb.cols() != n)
            throw std::invalid_argument("hom_group: constraint dimensions inconsistent");
        IntMatrix blk = make_block(m);
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < m; ++j) blk.at(c * n + i, phi_index(i, j)) += la.at(j, c);
                for (std::size_t k = 0; k < n; ++k) blk.at(c * n + i, phi_index(k, c)) -= lb.at(i, k);
            }
        condition_blocks.push_back(std::move(blk));
        cond_cols.push_back(m);
    }

    // Assemble [C | -RB-blocks] and take the kernel.
    std::size_t total_rows = 0, total_aux = 0;
    for (std::size_t k = 0; k < condition_blocks.size(); ++k) {
        total_rows += condition_blocks[k].rows();
        total_aux += rb.cols() * cond_cols[k];
    }
    IntMatrix big(total_rows, nphi + total_aux);
    std::size_t row0 = 0, aux0 = 0;
    for (std::size_t k = 0; k < condition_blocks.size(); ++k) {
        const IntMatrix& blk = condition_blocks[k];
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < nphi; ++j) big.at(row0 + i, j) = blk.at(i, j);
        for (std::size_t c = 0; c < cond_cols[k]; ++c)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t r = 0; r < rb.cols(); ++r)
                    big.at(row0 + c * n + i, nphi + aux0 + c * rb.cols() + r) = -rb.at(i, r);
        row0 += blk.rows();
        aux0 += cond_cols[k] * rb.cols();
    }

    IntMatrix ker = kernel_lattice(big);
    IntMatrix sol = column_lattice_basis(ker.submatrix(0, 0, nphi, ker.cols()));

    // Trivial homs: generator j of a maps into the relation lattice of b.
    std::vector<IntVec> triv_cols;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < rb.cols(); ++r) {
            IntVec t(nphi, Int(0));
            for (std::size_t i = 0; i < n; ++i) t[phi_index(i, j)] = rb.at(i, r);
            triv_cols.push_back(std::move(t));
        }
    IntMatrix triv = IntMatrix::from_columns(nphi, triv_cols);

    auto sq = subquotient(nphi, sol, triv);
    HomGroup out;
    out.group = sq.group;
    for (std::size_t g = 0; g < sq.basis.cols(); ++g) {
        IntMatrix rep(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) rep.at(i, j) = sq.basis.at(phi_index(i, j), g);
        out.generators.push_back(std::move(rep));
    }
    return out;
}

}  // namespace specseq
