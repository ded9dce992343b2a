#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kmfactor/dense_matrix.hpp"
#include "kmfactor/indicator.hpp"

namespace kmf {

struct CheckResult {
    std::string name;
    double worst = 0.0;
    /// Check passes when worst <= tolerance.
    double tolerance = 0.0;
    std::size_t cases = 0;

    bool passed() const noexcept { return worst <= tolerance; }
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool exhaustive = false;

    bool passed() const noexcept;
};

/// Cap on how many sampled assignments get the (costlier) gradient checks.
inline constexpr std::size_t kGradientCheckCases = 20;

/**
 * Runs every algebraic identity of the factorization view on `x` over
 * sampled surjective assignments:
 *
 *  - three-form equality of the objective
 *  - term identities t1=t4, t2=t5, t3=t6 and their recombination
 *  - projector idempotence (||P^2 - P||^2 / n) and symmetry
 *  - analytic gradient vs central finite differences at perturbed M
 *  - vanishing gradient at the closed-form M
 *
 * `samples == 0` gives a vacuous pass.
 */
VerificationReport verify_identities(const DataMatrix& x, std::size_t k, std::size_t samples,
                                     std::uint64_t seed);

/// Central-difference gradient of ||X - MZ||^2 in M with step 1e-5 * (1 + |m_li|).
DenseMatrix finite_difference_gradient(const DataMatrix& x, const DenseMatrix& m,
                                       const IndicatorMatrix& z);

}  // namespace kmf
