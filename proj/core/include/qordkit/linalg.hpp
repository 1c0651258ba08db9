#pragma once

#include <map>
#include <vector>

#include "qordkit/rational.hpp"

namespace qordkit {

using IntMatrix = std::vector<std::vector<Integer>>;

struct SmithForm {
    std::vector<Integer> divisors; // min(rows, cols) entries, d_1 | d_2 | ...
    IntMatrix U;                   // rows x rows, unimodular
    IntMatrix V;                   // cols x cols, unimodular
};

// U * M * V is diagonal with the divisors on the diagonal. cols is needed
// when M has no rows.
SmithForm smith_normal_form(const IntMatrix& m, std::size_t cols = 0);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner_hint = 0);

// Sparse rational vectors keyed by coordinate.
using SparseVector = std::map<int, Rational>;

/// Row-reduced echelon form of a sparse rational matrix with a fixed
/// number of columns. Rows are added incrementally.
class SparseEchelon {
public:
    explicit SparseEchelon(int cols) : cols_(cols) {}

    // Returns true when the row was independent of the earlier ones.
    bool add_row(SparseVector row);
    int rank() const { return static_cast<int>(pivots_.size()); }
    int cols() const { return cols_; }

    // Basis of the nullspace: one vector per free column, equal to 1 there
    // and 0 at every other free column.
    std::vector<SparseVector> nullspace() const;
    std::vector<int> free_columns() const;

private:
    void reduce(SparseVector& row) const;

    int cols_;
    std::map<int, SparseVector> pivots_; // pivot column -> row with leading 1 there
};

} // namespace qordkit
