#pragma once

#include "fpalg/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fpalg {

// Dense matrix over the exact rationals. Small sizes only (relation spaces,
// witness systems); the big sparse ranks live in SparseIntMat.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    void append_row(const std::vector<Rat>& row);

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref();

    int rank() const;

    // Canonical basis of the right kernel {x : Ax = 0}, one vector per free
    // column, derived from the RREF. Deterministic.
    std::vector<std::vector<Rat>> kernel_basis() const;

    // Stack rows of both matrices (must agree on cols).
    static QMatrix stacked(const QMatrix& a, const QMatrix& b);

    bool operator==(const QMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Solve Ax = b exactly. Returns the canonical solution with all free
// variables set to zero, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_linear(QMatrix A, std::vector<Rat> b);

// d1 == d2 as subspaces spanned by the rows.
bool same_row_span(const QMatrix& a, const QMatrix& b);

// Sparse exact rank over the integers (rows are kept primitive; updates are
// fraction-free cross-multiplications). Rows may be fed as rational vectors;
// denominators are cleared on entry.
class SparseIntMat {
public:
    explicit SparseIntMat(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    size_t row_count() const { return rows_.size(); }

    void add_row(std::vector<std::pair<int, Rat>> entries);
    void add_int_row(std::vector<std::pair<int, Int>> entries);

    // Destructive; call once.
    long rank();

private:
    int cols_;
    std::vector<std::vector<std::pair<int, Int>>> rows_;
};

} // namespace fpalg
