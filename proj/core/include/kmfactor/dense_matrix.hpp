#pragma once

/**
 * @file dense_matrix.hpp
 * @brief Row-major dense matrix of doubles with the handful of operations
 * the k-means factorization algebra needs.
 */

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace kmf {

/**
 * @brief Dense real matrix stored row-major.
 *
 * Both dimensions are at least one and every entry is finite when the matrix
 * is built from caller-supplied values. Element access through `operator()`
 * is unchecked.
 */
class DenseMatrix {
public:
    /// Zero-filled `rows` x `cols` matrix.
    DenseMatrix(std::size_t rows, std::size_t cols);

    /// Takes ownership of `entries` (row-major, length rows*cols).
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    /// Nested initializer, one inner list per row: `{{1, 2}, {3, 4}}`.
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }

    std::span<const double> entries() const noexcept { return entries_; }
    std::span<const double> row(std::size_t r) const noexcept {
        return std::span<const double>(entries_).subspan(r * cols_, cols_);
    }

    /// Copy of column `c` as a contiguous vector.
    std::vector<double> column(std::size_t c) const;

    /// "RxC" for error messages.
    std::string shape() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

/// Columns are data points x_j (m x n).
using DataMatrix = DenseMatrix;
/// Columns are centroids mu_i (m x k).
using CentroidMatrix = DenseMatrix;

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b);

/// Sum of diagonal entries; throws DimensionMismatch for non-square input.
double trace(const DenseMatrix& a);

/// Sum of squared entries, i.e. tr(A^T A).
double frobenius_norm_sq(const DenseMatrix& a);

std::ostream& operator<<(std::ostream& os, const DenseMatrix& a);

}  // namespace kmf
