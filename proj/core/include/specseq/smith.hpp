#pragma once

#include <optional>

#include "specseq/intmatrix.hpp"

namespace specseq {

// left * A * right is diagonal with nonnegative entries d_1 | d_2 | ... ;
// left and right are unimodular and their inverses are carried along so that
// lattice computations never have to invert anything.
struct SmithForm {
    IntVec diag;            // min(rows, cols) entries, divisibility chain, 1s not pruned
    IntMatrix left;         // rows x rows
    IntMatrix right;        // cols x cols
    IntMatrix left_inv;
    IntMatrix right_inv;
    std::size_t rank = 0;   // number of nonzero diagonal entries

    IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

// Pivoting: minimal absolute value among nonzero entries of the working
// block, ties broken by (row, col). Fully deterministic.
SmithForm smith_normal_form(const IntMatrix& a);

// Some x with a*x = b over Z, or nullopt if none exists.
std::optional<IntVec> solve_linear(const IntMatrix& a, const IntVec& b);

// Basis of {x : a*x = 0} as matrix columns (cols x k).
IntMatrix kernel_lattice(const IntMatrix& a);

// Basis of the column lattice of a (rows x rank), in a deterministic form.
IntMatrix column_lattice_basis(const IntMatrix& a);

bool lattice_contains(const IntMatrix& lattice_cols, const IntVec& v);

// Columns x with [a | lattice] solvable against them; returns basis of the
// preimage lattice {x : a*x lies in the column lattice of l}.
IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& l);

// One Smith decomposition, many right-hand sides.
class RepeatedSolver {
  public:
    explicit RepeatedSolver(const IntMatrix& a);
    std::optional<IntVec> solve(const IntVec& b) const;

  private:
    SmithForm s_;
    std::size_t rows_, cols_;
};

}  // namespace specseq
