#pragma once

/**
 * @file oracle.hpp
 * @brief Exhaustive ground truth for tiny clustering instances.
 *
 * The oracle evaluates the objective with its own scalar loops and shares no
 * code with objective.hpp, so agreement between the two is a real check.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kmfactor/dense_matrix.hpp"
#include "kmfactor/indicator.hpp"

namespace kmf {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

struct OracleReport {
    double global_min_objective = 0.0;
    /// One representative per minimizing partition, labels in order of first appearance.
    std::vector<IndicatorMatrix> argmin_assignments;
    /// Number of surjective assignments evaluated.
    std::uint64_t enumerated_count = 0;
};

/// k^n, saturating at UINT64_MAX.
std::uint64_t assignment_space_size(std::size_t n, std::size_t k);

/// Relabels clusters in order of first appearance.
IndicatorMatrix canonicalize(const IndicatorMatrix& z);

/// Direct per-point evaluation of the objective at the cluster means.
double oracle_objective(const DataMatrix& x, const IndicatorMatrix& z);

/**
 * Enumerates all k^n assignments, skipping those with an empty cluster.
 *
 * Throws BudgetExceeded when k^n > limit and DomainError when k > n.
 */
OracleReport enumerate_global_min(const DataMatrix& x, std::size_t k,
                                  std::uint64_t limit = kDefaultEnumerationLimit);

struct SurjectiveSample {
    std::vector<IndicatorMatrix> assignments;
    /// True when `assignments` is every surjective assignment.
    bool exhaustive = false;
};

/**
 * Up to `samples` assignments of n points to k clusters with no empty cluster.
 *
 * When the whole surjective set is small enough to list and has at most
 * `samples` members, it is returned in full. Otherwise `samples` random
 * surjective assignments are drawn from `seed`.
 */
SurjectiveSample draw_surjective_assignments(std::size_t n, std::size_t k, std::size_t samples,
                                             std::uint64_t seed);

struct FormCheckReport {
    bool passed = true;
    /// Largest pairwise relative difference among the three objective forms.
    double worst_discrepancy = 0.0;
    std::size_t checked = 0;
    bool exhaustive = false;
};

/// Checks the three objective forms agree on sampled assignments with M at the cluster means.
FormCheckReport cross_check_forms(const DataMatrix& x, std::size_t k, std::size_t samples,
                                  std::uint64_t seed);

}  // namespace kmf
