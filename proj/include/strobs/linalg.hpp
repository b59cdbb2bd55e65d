#pragma once

#include "strobs/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strobs {

// Sparse vector over column indices, sorted ascending, no explicit zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_axpy(const SparseVec& x, const Rat& a, const SparseVec& y); // x + a*y
bool sparse_is_zero(const SparseVec& v);

// Exact sparse matrix over the rationals. Row and column dictionaries bind
// coordinates to monomial labels for reporting; they are optional.
struct SparseMatrix {
    int cols = 0;
    std::vector<SparseVec> rows;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    void add_row(SparseVec r, std::string label = "");
    // y = M v for a dense rational vector
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
};

// Reduced row echelon form data. Deterministic pivoting: ascending column
// index, first remaining row; pivots normalized to 1 and eliminated upward.
struct Rref {
    int cols = 0;
    std::vector<SparseVec> rows;     // echelon rows, pivot cols strictly increasing
    std::vector<int> pivot_cols;     // one per row
    std::vector<int> free_cols;      // complement, ascending

    std::size_t rank() const { return rows.size(); }
    // Reduce an arbitrary vector modulo the row space.
    SparseVec residual(const SparseVec& v) const;
};

Rref rref(const SparseMatrix& m);

// Rank via the mirrored strategy (descending column order) for the
// determinism cross-check; must agree with rref().rank().
std::size_t rank_descending(const SparseMatrix& m);

// Exact kernel basis: one vector per free column, deterministic order and
// normalization (free coordinate = 1).
std::vector<SparseVec> nullspace(const SparseMatrix& m);

// Particular solution of M x = b with free coordinates set to zero;
// nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const SparseMatrix& m, const std::vector<Rat>& b);

// Incrementally grown row space, used for span bookkeeping.
class SpanBuilder {
public:
    explicit SpanBuilder(int cols) : cols_(cols) {}

    std::size_t dimension() const { return rows_.size(); }
    // Reduce v against the current span; if a nonzero residual remains,
    // insert it and return true.
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const;

private:
    int cols_;
    // rows kept in reduced echelon form, keyed by pivot column
    std::vector<SparseVec> rows_;
    std::vector<int> pivot_cols_;
};

} // namespace strobs
