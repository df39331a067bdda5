#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qtl/coefficients.hpp"

namespace qtl {

/// Sparse integer row: (column, nonzero value), columns strictly increasing.
using SparseRow = std::vector<std::pair<int, mpz_class>>;

/// Rank over the rationals by fraction-free sparse elimination. Pivots are
/// chosen Markowitz-style (shortest row, unit entries preferred) to limit
/// fill-in; rows are divided by their content after every update.
int sparse_rank(std::vector<SparseRow> rows, int ncols);

using RatMatrix = std::vector<std::vector<RatFun>>;

/// Gauss-Jordan inverse over RatFun; the pivot is the first nonzero entry of
/// the column in row order. Throws Error if singular.
RatMatrix invert(RatMatrix a);

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

/// Sparse RatFun row: column -> nonzero coefficient.
struct RatRow {
  std::vector<std::pair<int, RatFun>> entries;  // columns strictly increasing
  RatFun rhs;
};

/// Solves a consistent system with a unique solution. Throws Error if some
/// column stays free or the system is inconsistent.
std::vector<RatFun> solve_sparse(std::vector<RatRow> rows, int ncols);

}  // namespace qtl
