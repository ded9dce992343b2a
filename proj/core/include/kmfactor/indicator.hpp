#pragma once

/**
 * @file indicator.hpp
 * @brief Binary cluster-indicator matrix Z (k x n, one-hot columns).
 *
 * Z is stored as an assignment vector, so the one-hot column property holds
 * by construction. The dense k x n form is only built on request.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "kmfactor/dense_matrix.hpp"

namespace kmf {

class IndicatorMatrix {
public:
    /// `assignment[j]` is the cluster of point j; each entry must be < k.
    IndicatorMatrix(std::size_t k, std::vector<std::size_t> assignment);

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return assignment_.size(); }

    std::size_t operator[](std::size_t j) const noexcept { return assignment_[j]; }
    std::span<const std::size_t> assignment() const noexcept { return assignment_; }

    friend bool operator==(const IndicatorMatrix&, const IndicatorMatrix&) = default;

private:
    std::size_t k_;
    std::vector<std::size_t> assignment_;
};

/// n_i = |C_i| for every cluster; sums to n.
struct ClusterSizes {
    std::vector<std::size_t> sizes;

    std::size_t operator[](std::size_t i) const noexcept { return sizes[i]; }
    std::size_t size() const noexcept { return sizes.size(); }
    /// Index of the first empty cluster, or size() when all are populated.
    std::size_t first_empty() const noexcept;

    friend bool operator==(const ClusterSizes&, const ClusterSizes&) = default;
};

/// Dense k x n 0/1 matrix.
DenseMatrix materialize(const IndicatorMatrix& z);

ClusterSizes cluster_sizes(const IndicatorMatrix& z);

/// ZZ^T, which is diag(n_1, ..., n_k).
DenseMatrix gram(const IndicatorMatrix& z);

/**
 * Right-multiplies `a` by (ZZ^T)^-1, i.e. divides column i of `a` by n_i.
 *
 * Throws EmptyClusterSingularity naming the first cluster with n_i = 0 and
 * DimensionMismatch when `a` does not have k columns.
 */
DenseMatrix gram_inverse_apply(const IndicatorMatrix& z, const DenseMatrix& a);

/// Recovers Z from a dense k x n matrix by per-column argmax.
IndicatorMatrix indicator_from_dense(const DenseMatrix& z);

}  // namespace kmf
