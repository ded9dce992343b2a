#include "kmfactor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "kmfactor/error.hpp"
#include "kmfactor/objective.hpp"
#include "kmfactor/random.hpp"
#include "kmfactor/tolerance.hpp"

namespace kmf {

namespace {

// Enumeration cap used when deciding whether the surjective set can be listed.
constexpr std::uint64_t kListingLimit = 1'000'000;

// Calls fn(labels) for every assignment in lexicographic order.
template <typename Fn>
void for_each_assignment(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> labels(n, 0);
    for (;;) {
        fn(std::as_const(labels));
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++labels[pos] < k) {
                break;
            }
            labels[pos] = 0;
            if (pos == 0) {
                return;
            }
        }
    }
}

bool is_surjective(std::span<const std::size_t> labels, std::size_t k, std::vector<std::size_t>& counts) {
    counts.assign(k, 0);
    for (std::size_t label : labels) {
        ++counts[label];
    }
    return std::find(counts.begin(), counts.end(), std::size_t{0}) == counts.end();
}

double scalar_objective(const DataMatrix& x, std::span<const std::size_t> labels,
                        std::span<const std::size_t> counts) {
    const std::size_t m = x.rows();
    std::vector<double> sums(m * counts.size(), 0.0);
    for (std::size_t j = 0; j < labels.size(); ++j) {
        for (std::size_t l = 0; l < m; ++l) {
            sums[labels[j] * m + l] += x(l, j);
        }
    }
    double total = 0.0;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const std::size_t c = labels[j];
        const double size = static_cast<double>(counts[c]);
        for (std::size_t l = 0; l < m; ++l) {
            const double d = x(l, j) - sums[c * m + l] / size;
            total += d * d;
        }
    }
    return total;
}

void require_k_le_n(std::size_t n, std::size_t k) {
    if (k == 0) {
        throw DomainError("k must be at least 1");
    }
    if (k > n) {
        throw DomainError("k exceeds number of points (k = " + std::to_string(k) +
                          ", n = " + std::to_string(n) + ")");
    }
}

}  // namespace

std::uint64_t assignment_space_size(std::size_t n, std::size_t k) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (k != 0 && total > kMax / k) {
            return kMax;
        }
        total *= k;
    }
    return total;
}

IndicatorMatrix canonicalize(const IndicatorMatrix& z) {
    std::vector<std::size_t> relabel(z.k(), z.k());
    std::size_t next = 0;
    std::vector<std::size_t> labels(z.n());
    for (std::size_t j = 0; j < z.n(); ++j) {
        std::size_t& target = relabel[z[j]];
        if (target == z.k()) {
            target = next++;
        }
        labels[j] = target;
    }
    return IndicatorMatrix(z.k(), std::move(labels));
}

double oracle_objective(const DataMatrix& x, const IndicatorMatrix& z) {
    if (x.cols() != z.n()) {
        throw DimensionMismatch("oracle: data has " + std::to_string(x.cols()) +
                                " points, assignment has " + std::to_string(z.n()));
    }
    std::vector<std::size_t> counts;
    if (!is_surjective(z.assignment(), z.k(), counts)) {
        throw EmptyClusterSingularity(static_cast<std::size_t>(
            std::find(counts.begin(), counts.end(), std::size_t{0}) - counts.begin()));
    }
    return scalar_objective(x, z.assignment(), counts);
}

OracleReport enumerate_global_min(const DataMatrix& x, std::size_t k, std::uint64_t limit) {
    const std::size_t n = x.cols();
    require_k_le_n(n, k);
    const std::uint64_t space = assignment_space_size(n, k);
    if (space > limit) {
        throw BudgetExceeded(space, limit,
                             "exhaustive search needs " + std::to_string(k) + "^" +
                                 std::to_string(n) + " = " +
                                 (space == std::numeric_limits<std::uint64_t>::max()
                                      ? std::string("more than 2^64")
                                      : std::to_string(space)) +
                                 " candidates, limit is " + std::to_string(limit));
    }

    struct Candidate {
        double objective;
        std::vector<std::size_t> labels;
    };
    std::vector<Candidate> best;
    double best_value = std::numeric_limits<double>::infinity();
    std::uint64_t evaluated = 0;
    std::vector<std::size_t> counts;

    for_each_assignment(n, k, [&](const std::vector<std::size_t>& labels) {
        if (!is_surjective(labels, k, counts)) {
            return;
        }
        ++evaluated;
        const double value = scalar_objective(x, labels, counts);
        if (best.empty()) {
            best.push_back({value, labels});
            best_value = value;
            return;
        }
        const double slack = kDescentSlack * (1.0 + std::abs(best_value));
        if (value < best_value - slack) {
            best.clear();
        }
        if (value <= best_value + slack) {
            best.push_back({value, labels});
        }
        best_value = std::min(best_value, value);
    });

    OracleReport report;
    report.global_min_objective = best_value;
    report.enumerated_count = evaluated;
    const double slack = kDescentSlack * (1.0 + std::abs(best_value));
    for (const Candidate& c : best) {
        if (c.objective > best_value + slack) {
            continue;
        }
        IndicatorMatrix canonical = canonicalize(IndicatorMatrix(k, c.labels));
        if (std::find(report.argmin_assignments.begin(), report.argmin_assignments.end(), canonical) ==
            report.argmin_assignments.end()) {
            report.argmin_assignments.push_back(std::move(canonical));
        }
    }
    return report;
}

SurjectiveSample draw_surjective_assignments(std::size_t n, std::size_t k, std::size_t samples,
                                             std::uint64_t seed) {
    require_k_le_n(n, k);
    SurjectiveSample out;
    if (samples == 0) {
        return out;
    }

    if (assignment_space_size(n, k) <= kListingLimit) {
        std::vector<IndicatorMatrix> all;
        std::vector<std::size_t> counts;
        bool too_many = false;
        for_each_assignment(n, k, [&](const std::vector<std::size_t>& labels) {
            if (too_many || !is_surjective(labels, k, counts)) {
                return;
            }
            if (all.size() == samples) {
                too_many = true;
                return;
            }
            all.emplace_back(k, labels);
        });
        if (!too_many) {
            out.assignments = std::move(all);
            out.exhaustive = true;
            return out;
        }
    }

    Rng rng(seed);
    out.assignments.reserve(samples);
    std::vector<std::size_t> order(n);
    for (std::size_t s = 0; s < samples; ++s) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t t = 0; t < k; ++t) {
            std::swap(order[t], order[t + rng.uniform_index(n - t)]);
        }
        std::vector<std::size_t> labels(n);
        for (std::size_t t = 0; t < n; ++t) {
            labels[order[t]] = t < k ? t : rng.uniform_index(k);
        }
        out.assignments.emplace_back(k, std::move(labels));
    }
    return out;
}

FormCheckReport cross_check_forms(const DataMatrix& x, std::size_t k, std::size_t samples,
                                  std::uint64_t seed) {
    const SurjectiveSample sample = draw_surjective_assignments(x.cols(), k, samples, seed);
    FormCheckReport report;
    report.exhaustive = sample.exhaustive;
    for (const IndicatorMatrix& z : sample.assignments) {
        const CentroidMatrix m = optimal_centroids(x, z);
        const double pointwise = objective_pointwise(x, m, z);
        const double factored = objective_factored(x, m, z);
        const double projected = objective_projected(x, z);
        report.worst_discrepancy = std::max({report.worst_discrepancy,
                                             relative_difference(pointwise, factored),
                                             relative_difference(pointwise, projected),
                                             relative_difference(factored, projected)});
        ++report.checked;
    }
    report.passed = report.worst_discrepancy < kIdentityTolerance;
    return report;
}

}  // namespace kmf
