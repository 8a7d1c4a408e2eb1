#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qgdf/errors.hpp"
#include "qgdf/scalar.hpp"

namespace qgdf {

/// Dense matrix over an exact field (Rat or Fp). Row-major.
///
/// Elimination uses exact pivot tests with deterministic column order, so
/// every rank, kernel and echelon form is reproducible.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw dimension_error("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Column selection, preserving order of `which`.
    Matrix columns(const std::vector<std::size_t>& which) const {
        Matrix out(rows_, which.size());
        for (std::size_t j = 0; j < which.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, which[j]);
        return out;
    }

    /// [this | other] side by side.
    Matrix hstack(const Matrix& other) const {
        if (rows_ != other.rows_) throw dimension_error("hstack row mismatch");
        Matrix out(rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
        }
        return out;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && is_zero((*this)(sel, col))) ++sel;
            if (sel == rows_) continue;
            swap_rows(sel, row);
            F inv = F(1) / (*this)(row, col);
            for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || is_zero((*this)(i, col))) continue;
                F factor = (*this)(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    (*this)(i, j) -= factor * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix tmp = *this;
        return tmp.rref().size();
    }

    /// Basis of the right kernel, as columns of the returned matrix.
    Matrix kernel_basis() const {
        Matrix tmp = *this;
        auto pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        Matrix ker(cols_, free_cols.size());
        for (std::size_t j = 0; j < free_cols.size(); ++j) {
            std::size_t fc = free_cols[j];
            ker(fc, j) = F(1);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                ker(pivots[i], j) = -tmp(i, fc);
        }
        return ker;
    }

    /// Solve A x = b for each column b of rhs. Throws if inconsistent;
    /// free variables (if any) are set to zero.
    Matrix solve(const Matrix& rhs) const {
        if (rows_ != rhs.rows_) throw dimension_error("solve shape mismatch");
        Matrix aug = hstack(rhs);
        auto pivots = aug.rref();
        Matrix x(cols_, rhs.cols_);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] >= cols_)
                throw invariant_violation("inconsistent linear system in solve");
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                x(pivots[i], j) = aug(i, cols_ + j);
        }
        return x;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

}  // namespace qgdf
