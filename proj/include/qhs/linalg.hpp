#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qhs/rational.hpp"

namespace qhs {

// Sparse vector over an integer-indexed column space.
using SparseVec = std::map<int, Rat>;

void sv_axpy(SparseVec& a, const SparseVec& b, const Rat& c);

// Incremental reduced row echelon form over Q.  Rows are kept fully
// reduced; column order is the natural order of the indices.
class Echelon {
public:
    // Reduces v against the current rows; returns the residual.
    SparseVec reduce(SparseVec v) const;
    // Reduces and inserts if nonzero; returns true when the vector
    // enlarged the span.
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return (int)rows_.size(); }
    const std::map<int, int>& pivots() const { return pivot_; }
    const std::vector<SparseVec>& rows() const { return rows_; }

private:
    std::vector<SparseVec> rows_;
    std::map<int, int> pivot_;  // column -> row index
};

// Dense matrix over Q, row major.
class Mat {
public:
    Mat() = default;
    Mat(int r, int c) : r_(r), c_(c), a_(size_t(r) * c) {}
    static Mat eye(int n);
    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Rat& c) const;
    Mat transpose() const;
    bool is_zero() const;
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    Rat trace() const;
    int rank() const;
    // Basis of the right kernel, as columns.
    std::vector<std::vector<Rat>> kernel() const;
    std::optional<Mat> inverse() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

Mat mat_from_cols(const std::vector<std::vector<Rat>>& cols, int nrows);

// Row space utilities on dense vectors.
class DenseSpan {
public:
    explicit DenseSpan(int dim) : dim_(dim) {}
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    bool insert(std::vector<Rat> v);
    bool contains(const std::vector<Rat>& v) const;
    int rank() const { return (int)rows_.size(); }
    int dim() const { return dim_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    // Indices without a pivot (complement coordinates).
    std::vector<int> free_columns() const;
    // Coordinates of v in the span's row basis, if v lies in the span.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;

private:
    int dim_;
    std::vector<std::vector<Rat>> rows_;
    std::map<int, int> pivot_;
};

} // namespace qhs
