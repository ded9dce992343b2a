#pragma once

/**
 * @file solver.hpp
 * @brief Alternating minimization of ||X - MZ||^2 over one-hot Z and M.
 *
 * The Z-step picks the nearest centroid for every column independently; the
 * M-step is the closed form M = X Z^T (ZZ^T)^-1. This is Lloyd's algorithm.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmfactor/dense_matrix.hpp"
#include "kmfactor/indicator.hpp"

namespace kmf {

enum class InitStrategy { RandomPoints, KMeansPlusPlus, ProvidedCentroids, ProvidedAssignment };

enum class EmptyClusterPolicy { RepairFarthestPoint, Error };

std::string_view to_string(InitStrategy init);
std::string_view to_string(EmptyClusterPolicy policy);

struct SolverConfig {
    std::size_t k = 1;
    InitStrategy init = InitStrategy::KMeansPlusPlus;
    std::uint64_t seed = 0;
    std::size_t max_iters = 100;
    /// Relative objective decrease below which iteration stops.
    double tol = 1e-9;
    EmptyClusterPolicy empty_cluster_policy = EmptyClusterPolicy::RepairFarthestPoint;

    /// Required for InitStrategy::ProvidedCentroids (m x k).
    std::optional<CentroidMatrix> initial_centroids;
    /// Required for InitStrategy::ProvidedAssignment (length n, labels < k).
    std::optional<std::vector<std::size_t>> initial_assignment;
};

struct ClusteringResult {
    IndicatorMatrix assignment;
    CentroidMatrix centroids;
    double objective_pointwise = 0.0;
    double objective_factored = 0.0;
    double objective_projected = 0.0;
    /// Objective after every completed update step.
    std::vector<double> objective_trace;
    std::size_t iterations = 0;
    /// True iff the final assignment is unchanged by one more assign step.
    bool converged = false;

    friend bool operator==(const ClusteringResult&, const ClusteringResult&) = default;
};

struct UpdateResult {
    CentroidMatrix centroids;
    /// Equal to the input assignment unless empty clusters were repaired.
    IndicatorMatrix assignment;
};

/// Nearest centroid per point; ties go to the lowest cluster index.
IndicatorMatrix assign_step(const DataMatrix& x, const CentroidMatrix& m);

/**
 * Closed-form centroids for `z`.
 *
 * Under RepairFarthestPoint every empty cluster, in ascending index order,
 * receives the point farthest from its current cluster mean (ties to the
 * lowest point index; points in singleton clusters are never taken). Under
 * Error the first empty cluster raises EmptyClusterSingularity.
 */
UpdateResult update_step(const DataMatrix& x, const IndicatorMatrix& z, EmptyClusterPolicy policy);

/// Starting centroids per `cfg.init`. Deterministic in `cfg.seed`.
CentroidMatrix init_centroids(const DataMatrix& x, const SolverConfig& cfg);

/// Throws DomainError when `cfg` cannot be applied to `x`.
void validate(const SolverConfig& cfg, const DataMatrix& x);

/**
 * Runs one alternating-minimization pass from `init_centroids`.
 *
 * Stops when the assignment is a fixed point, when the relative objective
 * decrease drops below `cfg.tol`, or after `cfg.max_iters` update steps.
 * `converged` reports whether the final assignment is a fixed point.
 */
ClusteringResult fit(const DataMatrix& x, const SolverConfig& cfg);

struct RestartOutcome {
    ClusteringResult best;
    std::size_t best_restart = 0;
    std::size_t restarts = 0;
};

/// Runs `fit` with seeds cfg.seed, cfg.seed + 1, ...; lowest objective wins, ties to the earlier run.
RestartOutcome fit_with_restarts(const DataMatrix& x, const SolverConfig& cfg, std::size_t restarts);

}  // namespace kmf
