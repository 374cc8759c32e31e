#include "specseq/smith.hpp"

namespace specseq {

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d.at(i, i) = diag[i];
    return d;
}

namespace {

// Row/column operations applied to B are mirrored into the transforms and
// their inverses. For a row op E applied on the left (B <- E B, U <- E U) the
// inverse transform picks up E^{-1} on the right (Uinv <- Uinv E^{-1}).
struct Worker {
    IntMatrix b, u, v, uinv, vinv;

    explicit Worker(const IntMatrix& a)
        : b(a),
          u(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          uinv(IntMatrix::identity(a.rows())),
          vinv(IntMatrix::identity(a.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        b.swap_rows(i, j);
        u.swap_rows(i, j);
        uinv.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        b.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    }
    void row_op(std::size_t dst, std::size_t src, const Int& c) {  // row dst += c * row src
        if (c == 0) return;
        b.add_row_multiple(dst, src, c);
        u.add_row_multiple(dst, src, c);
        uinv.add_col_multiple(src, dst, -c);
    }
    void col_op(std::size_t dst, std::size_t src, const Int& c) {  // col dst += c * col src
        if (c == 0) return;
        b.add_col_multiple(dst, src, c);
        v.add_col_multiple(dst, src, c);
        vinv.add_row_multiple(src, dst, -c);
    }
    void negate_row(std::size_t i) {
        b.negate_row(i);
        u.negate_row(i);
        uinv.negate_col(i);
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < b.rows(); ++i)
            for (std::size_t j = t; j < b.cols(); ++j) {
                const Int& x = b.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                    if (best == 1) return true;  // cannot improve
                }
            }
        return found;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    Worker w(a);
    std::size_t m = a.rows(), n = a.cols();
    std::size_t t = 0;
    std::size_t bound = std::min(m, n);

    while (t < bound) {
        std::size_t pi = 0, pj = 0;
        if (!w.find_pivot(t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        // Eliminate row/column t; the pivot shrinks every pass, so this ends.
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                const Int& x = w.b.at(i, t);
                if (x == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), w.b.at(t, t).get_mpz_t());
                w.row_op(i, t, -q);
                if (w.b.at(i, t) != 0) {  // remainder smaller than pivot: swap in
                    w.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                const Int& x = w.b.at(t, j);
                if (x == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), w.b.at(t, t).get_mpz_t());
                w.col_op(j, t, -q);
                if (w.b.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Pivot must divide every entry of the remaining block.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(w.b.at(t, t), w.b.at(i, j))) {
                        w.row_op(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (w.b.at(t, t) < 0) w.negate_row(t);
        ++t;
    }

    SmithForm s;
    s.diag.resize(bound);
    for (std::size_t i = 0; i < bound; ++i) s.diag[i] = w.b.at(i, i);
    s.rank = t;
    s.left = std::move(w.u);
    s.right = std::move(w.v);
    s.left_inv = std::move(w.uinv);
    s.right_inv = std::move(w.vinv);
    return s;
}

std::optional<IntVec> solve_linear(const IntMatrix& a, const IntVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    SmithForm s = smith_normal_form(a);
    IntVec y = s.left.apply(b);
    IntVec z(a.cols(), Int(0));
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s.diag.size() && s.diag[i] != 0) {
            if (!divides(s.diag[i], y[i])) return std::nullopt;
            z[i] = divexact(y[i], s.diag[i]);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return s.right.apply(z);
}

namespace {

// Column echelon reduction by unimodular column operations. After the call,
// columns [0, lead) of `b` are a basis of the column lattice and columns
// [lead, cols) are zero; `v` (when tracked) carries the transform.
std::size_t column_echelon(IntMatrix& b, IntMatrix* v) {
    std::size_t rows = b.rows(), cols = b.cols();
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < cols; ++r) {
        for (;;) {
            std::size_t pivot = cols;
            bool unit = false;
            for (std::size_t j = lead; j < cols; ++j) {
                const Int& x = b.at(r, j);
                if (x == 0) continue;
                if (pivot == cols || abs(x) < abs(b.at(r, pivot))) pivot = j;
                if (abs(b.at(r, pivot)) == 1) {
                    unit = true;
                    break;
                }
            }
            if (pivot == cols) break;  // row r already clear
            b.swap_cols(lead, pivot);
            if (v) v->swap_cols(lead, pivot);
            bool clean = true;
            for (std::size_t j = lead + 1; j < cols; ++j) {
                const Int& x = b.at(r, j);
                if (x == 0) continue;
                Int q;
                if (unit) {
                    q = b.at(r, lead) > 0 ? x : -x;
                } else {
                    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), b.at(r, lead).get_mpz_t());
                }
                b.add_col_multiple(j, lead, -q);
                if (v) v->add_col_multiple(j, lead, -q);
                if (b.at(r, j) != 0) clean = false;
            }
            if (clean) {
                ++lead;
                break;
            }
        }
    }
    return lead;
}

}  // namespace

IntMatrix kernel_lattice(const IntMatrix& a) {
    IntMatrix b = a;
    IntMatrix v = IntMatrix::identity(a.cols());
    std::size_t lead = column_echelon(b, &v);
    return v.submatrix(0, lead, a.cols(), a.cols() - lead);
}

IntMatrix column_lattice_basis(const IntMatrix& a) {
    IntMatrix b = a;
    std::size_t lead = column_echelon(b, nullptr);
    return b.submatrix(0, 0, a.rows(), lead);
}

bool lattice_contains(const IntMatrix& lattice_cols, const IntVec& v) {
    if (lattice_cols.cols() == 0) return is_zero_vec(v);
    return solve_linear(lattice_cols, v).has_value();
}

RepeatedSolver::RepeatedSolver(const IntMatrix& a) : s_(smith_normal_form(a)), rows_(a.rows()), cols_(a.cols()) {}

std::optional<IntVec> RepeatedSolver::solve(const IntVec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("RepeatedSolver: dimension mismatch");
    IntVec y = s_.left.apply(b);
    IntVec z(cols_, Int(0));
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s_.diag.size() && s_.diag[i] != 0) {
            if (!divides(s_.diag[i], y[i])) return std::nullopt;
            z[i] = divexact(y[i], s_.diag[i]);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return s_.right.apply(z);
}

IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& l) {
    // {x : a x = l y for some y}: kernel of [a | -l] projected to x.
    if (l.cols() == 0) return kernel_lattice(a);
    IntMatrix stacked = a.hcat(-l);
    IntMatrix ker = kernel_lattice(stacked);
    IntMatrix proj = ker.submatrix(0, 0, a.cols(), ker.cols());
    return column_lattice_basis(proj);
}

}  // namespace specseq
