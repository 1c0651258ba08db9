#include "qordkit/linalg.hpp"

#include <algorithm>
#include <utility>

#include "qordkit/error.hpp"

namespace qordkit {

namespace {

IntMatrix identity(std::size_t n)
{
    IntMatrix out(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        out[i][i] = 1;
    }
    return out;
}

} // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner_hint)
{
    const std::size_t rows = a.size();
    const std::size_t inner = rows ? a[0].size() : inner_hint;
    if (b.size() != inner) {
        throw ValidationError("matrix dimensions do not agree");
    }
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMatrix out(rows, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m, std::size_t cols_hint)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : cols_hint;
    for (const auto& r : m) {
        if (r.size() != cols) {
            throw ValidationError("ragged integer matrix");
        }
    }
    IntMatrix a = m;
    SmithForm out;
    out.U = identity(rows);
    out.V = identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(out.U[i], out.U[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& r : a) {
            std::swap(r[i], r[j]);
        }
        for (auto& r : out.V) {
            std::swap(r[i], r[j]);
        }
    };
    // row_i += q * row_j
    auto add_row = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t c = 0; c < cols; ++c) {
            a[i][c] += q * a[j][c];
        }
        for (std::size_t c = 0; c < rows; ++c) {
            out.U[i][c] += q * out.U[j][c];
        }
    };
    auto add_col = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t r = 0; r < rows; ++r) {
            a[r][i] += q * a[r][j];
        }
        for (std::size_t r = 0; r < cols; ++r) {
            out.V[r][i] += q * out.V[r][j];
        }
    };

    const std::size_t diag = std::min(rows, cols);
    for (std::size_t t = 0; t < diag; ++t) {
        for (;;) {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == rows) {
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] != 0) {
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                    add_row(i, t, -q);
                    clean = clean && a[i][t] == 0;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] != 0) {
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                    add_col(j, t, -q);
                    clean = clean && a[t][j] == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // The pivot must divide the rest of the block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (a[t][t] < 0) {
            for (std::size_t c = 0; c < cols; ++c) {
                a[t][c] = -a[t][c];
            }
            for (std::size_t c = 0; c < rows; ++c) {
                out.U[t][c] = -out.U[t][c];
            }
        }
        out.divisors.push_back(a[t][t]);
    }
    return out;
}

void SparseEchelon::reduce(SparseVector& row) const
{
    // Clear every entry that sits in a pivot column, left to right.
    auto it = row.begin();
    while (it != row.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const Rational factor = it->second;
        const int col = it->first;
        for (const auto& [c, v] : p->second) {
            auto [slot, fresh] = row.emplace(c, 0);
            slot->second -= factor * v;
            if (slot->second == 0) {
                row.erase(slot);
            }
            (void)fresh;
        }
        it = row.upper_bound(col);
    }
}

bool SparseEchelon::add_row(SparseVector row)
{
    for (auto it = row.begin(); it != row.end();) {
        if (it->first < 0 || it->first >= cols_) {
            throw ValidationError("sparse row entry outside the matrix");
        }
        it = it->second == 0 ? row.erase(it) : std::next(it);
    }
    reduce(row);
    if (row.empty()) {
        return false;
    }
    // Normalize on the leading free column and keep the echelon reduced.
    const int lead = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) {
        v *= inv;
    }
    for (auto& [pc, prow] : pivots_) {
        auto hit = prow.find(lead);
        if (hit == prow.end()) {
            continue;
        }
        const Rational factor = hit->second;
        for (const auto& [c, v] : row) {
            auto [slot, fresh] = prow.emplace(c, 0);
            slot->second -= factor * v;
            if (slot->second == 0) {
                prow.erase(slot);
            }
            (void)fresh;
        }
    }
    pivots_.emplace(lead, std::move(row));
    return true;
}

std::vector<int> SparseEchelon::free_columns() const
{
    std::vector<int> out;
    for (int c = 0; c < cols_; ++c) {
        if (!pivots_.count(c)) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<SparseVector> SparseEchelon::nullspace() const
{
    std::vector<SparseVector> out;
    for (int f : free_columns()) {
        SparseVector v{{f, Rational(1)}};
        for (const auto& [pc, prow] : pivots_) {
            auto hit = prow.find(f);
            if (hit != prow.end()) {
                v[pc] = -hit->second;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace qordkit
