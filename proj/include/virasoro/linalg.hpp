#pragma once

#include "virasoro/rational.hpp"

#include <cstddef>
#include <vector>

namespace virasoro {

using RatVector = std::vector<Rat>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    RatVector row(std::size_t r) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

// Row echelon form by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. Entries stay integral throughout; each
// division is exact.
struct IntEchelon {
    std::vector<std::vector<BigInt>> rows;  // nonzero rows only
    std::vector<std::size_t> pivots;        // pivot column of each row
};

IntEchelon bareiss_echelon(const Matrix& m);

// Reduced row echelon form: pivot entries 1, pivot columns otherwise zero.
struct Rref {
    std::vector<RatVector> rows;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;
    std::size_t rank() const { return rows.size(); }
};

Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}, one vector per free column, each scaled to a
// primitive integer vector whose first nonzero entry is positive.
std::vector<RatVector> nullspace(const Matrix& m);

// Scales v to a primitive integer vector with a positive first nonzero entry.
RatVector primitive(const RatVector& v);

// Canonical reduction modulo span(generators). Lower column indices are
// eliminated first, so a caller controls which coordinates are preferred as
// leading by choosing the column order.
class SubspaceReducer {
public:
    SubspaceReducer() = default;
    SubspaceReducer(const std::vector<RatVector>& generators, std::size_t dim);

    std::size_t dim() const { return basis_.cols; }
    std::size_t rank() const { return basis_.rank(); }
    const std::vector<std::size_t>& pivots() const { return basis_.pivots; }

    // Unique representative of v + span with zeros in every pivot column.
    RatVector reduce(const RatVector& v) const;
    bool contains(const RatVector& v) const;

private:
    Rref basis_;
};

}  // namespace virasoro
