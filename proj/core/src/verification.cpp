#include "kmfactor/verification.hpp"

#include <algorithm>
#include <cmath>

#include "kmfactor/indicator.hpp"
#include "kmfactor/objective.hpp"
#include "kmfactor/oracle.hpp"
#include "kmfactor/random.hpp"
#include "kmfactor/tolerance.hpp"

namespace kmf {

bool VerificationReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

DenseMatrix finite_difference_gradient(const DataMatrix& x, const DenseMatrix& m,
                                       const IndicatorMatrix& z) {
    DenseMatrix grad(m.rows(), m.cols());
    DenseMatrix probe = m;
    for (std::size_t l = 0; l < m.rows(); ++l) {
        for (std::size_t i = 0; i < m.cols(); ++i) {
            const double h = 1e-5 * (1.0 + std::abs(m(l, i)));
            probe(l, i) = m(l, i) + h;
            const double up = objective_factored(x, probe, z);
            probe(l, i) = m(l, i) - h;
            const double down = objective_factored(x, probe, z);
            probe(l, i) = m(l, i);
            grad(l, i) = (up - down) / (2.0 * h);
        }
    }
    return grad;
}

VerificationReport verify_identities(const DataMatrix& x, std::size_t k, std::size_t samples,
                                     std::uint64_t seed) {
    const SurjectiveSample sample = draw_surjective_assignments(x.cols(), k, samples, seed);
    const std::size_t n = x.cols();
    const bool form_projector = n <= kDefaultProjectorThreshold;

    CheckResult forms{"three-form equality", 0.0, kIdentityTolerance, 0};
    CheckResult terms{"term identities", 0.0, kIdentityTolerance, 0};
    CheckResult idempotence{"projector idempotence", 0.0, 1e-20, 0};
    CheckResult symmetry{"projector symmetry", 0.0, 1e-12, 0};
    CheckResult gradient{"gradient vs finite differences", 0.0, kFiniteDifferenceTolerance, 0};
    CheckResult stationarity{"gradient at closed-form M", 0.0, kIdentityTolerance, 0};

    const double x_norm = std::sqrt(frobenius_norm_sq(x));
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);

    for (const IndicatorMatrix& z : sample.assignments) {
        const CentroidMatrix m = optimal_centroids(x, z);
        const double pointwise = objective_pointwise(x, m, z);
        const double factored = objective_factored(x, m, z);
        const double projected = objective_projected(x, z);
        forms.worst = std::max({forms.worst, relative_difference(pointwise, factored),
                                relative_difference(pointwise, projected),
                                relative_difference(factored, projected)});
        ++forms.cases;

        const ObjectiveTerms t = expand_terms(x, m, z);
        terms.worst = std::max({terms.worst, relative_difference(t.t1, t.t4),
                                relative_difference(t.t2, t.t5), relative_difference(t.t3, t.t6),
                                relative_difference(t.pointwise_total(), pointwise),
                                relative_difference(t.factored_total(), factored)});
        ++terms.cases;

        if (form_projector) {
            const DenseMatrix p = projector(z);
            idempotence.worst = std::max(
                idempotence.worst, frobenius_norm_sq(sub(matmul(p, p), p)) / static_cast<double>(n));
            ++idempotence.cases;
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    symmetry.worst = std::max(symmetry.worst, std::abs(p(a, b) - p(b, a)));
                }
            }
            ++symmetry.cases;
        }

        const DenseMatrix at_optimum = objective_gradient_wrt_m(x, m, z);
        for (double g : at_optimum.entries()) {
            stationarity.worst = std::max(stationarity.worst, std::abs(g) / (1.0 + x_norm));
        }
        ++stationarity.cases;

        if (gradient.cases < kGradientCheckCases) {
            DenseMatrix perturbed = m;
            for (std::size_t l = 0; l < m.rows(); ++l) {
                for (std::size_t i = 0; i < m.cols(); ++i) {
                    perturbed(l, i) += rng.uniform(-1.0, 1.0);
                }
            }
            const DenseMatrix analytic = objective_gradient_wrt_m(x, perturbed, z);
            const DenseMatrix numeric = finite_difference_gradient(x, perturbed, z);
            for (std::size_t e = 0; e < analytic.entries().size(); ++e) {
                gradient.worst = std::max(
                    gradient.worst, relative_difference(analytic.entries()[e], numeric.entries()[e]));
            }
            ++gradient.cases;
        }
    }

    VerificationReport report;
    report.exhaustive = sample.exhaustive;
    report.checks = {forms, terms, idempotence, symmetry, gradient, stationarity};
    return report;
}

}  // namespace kmf
