#pragma once

#include <algorithm>
#include <cmath>

namespace kmf {

/// Tolerance for quantities that are equal in exact arithmetic.
inline constexpr double kIdentityTolerance = 1e-10;
/// Tolerance for analytic-vs-finite-difference comparisons.
inline constexpr double kFiniteDifferenceTolerance = 1e-6;
/// Slack allowed for monotone descent of the objective trace.
inline constexpr double kDescentSlack = 1e-12;

/// |a - b| scaled by (1 + max(|a|, |b|)).
inline double relative_difference(double a, double b) {
    return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace kmf
