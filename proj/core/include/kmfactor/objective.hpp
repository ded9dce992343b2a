#pragma once

/**
 * @file objective.hpp
 * @brief The hard k-means objective in its three equivalent forms, the term
 * expansions that connect them, the gradient in M and the closed-form M.
 *
 * With X (m x n, columns are points), M (m x k, columns are centroids) and
 * one-hot Z (k x n):
 *
 *     sum_ij z_ij ||x_j - mu_i||^2  ==  ||X - MZ||^2  ==  ||X - X Z^T (ZZ^T)^-1 Z||^2
 *
 * where the last equality holds for M = X Z^T (ZZ^T)^-1.
 */

#include <cstddef>

#include "kmfactor/dense_matrix.hpp"
#include "kmfactor/indicator.hpp"

namespace kmf {

/// Above this many points `objective_projected` skips forming the n x n projector.
inline constexpr std::size_t kDefaultProjectorThreshold = 4096;

/// Pointwise expansion (t1..t3) and factored-trace expansion (t4..t6).
struct ObjectiveTerms {
    double t1 = 0.0;  ///< sum_ij z_ij x_j^T x_j
    double t2 = 0.0;  ///< sum_ij z_ij x_j^T mu_i
    double t3 = 0.0;  ///< sum_ij z_ij mu_i^T mu_i
    double t4 = 0.0;  ///< tr(X^T X)
    double t5 = 0.0;  ///< tr(X^T M Z)
    double t6 = 0.0;  ///< tr(Z^T M^T M Z)

    double pointwise_total() const noexcept { return t1 - 2.0 * t2 + t3; }
    double factored_total() const noexcept { return t4 - 2.0 * t5 + t6; }
};

/// Sum over points of the squared distance to the assigned centroid.
double objective_pointwise(const DataMatrix& x, const CentroidMatrix& m, const IndicatorMatrix& z);

/// ||X - MZ||^2.
double objective_factored(const DataMatrix& x, const CentroidMatrix& m, const IndicatorMatrix& z);

/**
 * ||X - XP||^2 with P = Z^T (ZZ^T)^-1 Z.
 *
 * For n above `projector_threshold` the value is computed as ||X - M*Z||^2
 * with M* = optimal_centroids(x, z), which avoids the n x n projector.
 * Throws EmptyClusterSingularity if any cluster is empty.
 */
double objective_projected(const DataMatrix& x, const IndicatorMatrix& z,
                           std::size_t projector_threshold = kDefaultProjectorThreshold);

/// n x n matrix Z^T (ZZ^T)^-1 Z. Symmetric and idempotent.
DenseMatrix projector(const IndicatorMatrix& z);

ObjectiveTerms expand_terms(const DataMatrix& x, const CentroidMatrix& m, const IndicatorMatrix& z);

/// d/dM ||X - MZ||^2 = 2 (M ZZ^T - X Z^T), an m x k matrix.
DenseMatrix objective_gradient_wrt_m(const DataMatrix& x, const CentroidMatrix& m,
                                     const IndicatorMatrix& z);

/// M = X Z^T (ZZ^T)^-1; column i is the mean of the points in cluster i.
CentroidMatrix optimal_centroids(const DataMatrix& x, const IndicatorMatrix& z);

}  // namespace kmf
