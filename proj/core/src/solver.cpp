#include "kmfactor/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kmfactor/error.hpp"
#include "kmfactor/objective.hpp"
#include "kmfactor/random.hpp"

namespace kmf {

namespace {

double squared_distance(const DataMatrix& x, std::size_t j, const DenseMatrix& m, std::size_t i) {
    double d2 = 0.0;
    for (std::size_t l = 0; l < x.rows(); ++l) {
        const double d = x(l, j) - m(l, i);
        d2 += d * d;
    }
    return d2;
}

// Means of the populated clusters; columns of empty clusters stay zero.
DenseMatrix partial_means(const DataMatrix& x, std::span<const std::size_t> labels,
                          std::span<const std::size_t> sizes) {
    DenseMatrix means(x.rows(), sizes.size());
    for (std::size_t j = 0; j < labels.size(); ++j) {
        for (std::size_t l = 0; l < x.rows(); ++l) {
            means(l, labels[j]) += x(l, j);
        }
    }
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] == 0) {
            continue;
        }
        for (std::size_t l = 0; l < x.rows(); ++l) {
            means(l, i) /= static_cast<double>(sizes[i]);
        }
    }
    return means;
}

DenseMatrix columns_of(const DataMatrix& x, std::span<const std::size_t> picks) {
    DenseMatrix out(x.rows(), picks.size());
    for (std::size_t i = 0; i < picks.size(); ++i) {
        for (std::size_t l = 0; l < x.rows(); ++l) {
            out(l, i) = x(l, picks[i]);
        }
    }
    return out;
}

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t t = 0; t < k; ++t) {
        std::swap(idx[t], idx[t + rng.uniform_index(n - t)]);
    }
    idx.resize(k);
    return idx;
}

std::vector<std::size_t> kmeanspp_picks(const DataMatrix& x, std::size_t k, Rng& rng) {
    const std::size_t n = x.cols();
    std::vector<std::size_t> picks{rng.uniform_index(n)};
    std::vector<bool> chosen(n, false);
    chosen[picks[0]] = true;

    std::vector<double> d2(n);
    for (std::size_t j = 0; j < n; ++j) {
        d2[j] = squared_distance(x, j, x, picks[0]);
    }

    while (picks.size() < k) {
        const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
        std::size_t next = n;
        if (total > 0.0) {
            const double target = rng.uniform01() * total;
            double cumulative = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (d2[j] <= 0.0) {
                    continue;
                }
                cumulative += d2[j];
                next = j;
                if (cumulative > target) {
                    break;
                }
            }
        } else {
            // Every remaining point coincides with a chosen one.
            std::vector<std::size_t> rest;
            for (std::size_t j = 0; j < n; ++j) {
                if (!chosen[j]) {
                    rest.push_back(j);
                }
            }
            next = rest[rng.uniform_index(rest.size())];
        }
        picks.push_back(next);
        chosen[next] = true;
        for (std::size_t j = 0; j < n; ++j) {
            d2[j] = std::min(d2[j], squared_distance(x, j, x, next));
        }
    }
    return picks;
}

}  // namespace

std::string_view to_string(InitStrategy init) {
    switch (init) {
        case InitStrategy::RandomPoints: return "random-points";
        case InitStrategy::KMeansPlusPlus: return "kmeans-plus-plus";
        case InitStrategy::ProvidedCentroids: return "provided-centroids";
        case InitStrategy::ProvidedAssignment: return "provided-assignment";
    }
    return "unknown";
}

std::string_view to_string(EmptyClusterPolicy policy) {
    switch (policy) {
        case EmptyClusterPolicy::RepairFarthestPoint: return "repair-farthest-point";
        case EmptyClusterPolicy::Error: return "error";
    }
    return "unknown";
}

IndicatorMatrix assign_step(const DataMatrix& x, const CentroidMatrix& m) {
    if (m.rows() != x.rows()) {
        throw DimensionMismatch("centroids are " + m.shape() + " but data is " + x.shape());
    }
    std::vector<std::size_t> labels(x.cols(), 0);
    for (std::size_t j = 0; j < x.cols(); ++j) {
        double best = squared_distance(x, j, m, 0);
        for (std::size_t i = 1; i < m.cols(); ++i) {
            const double d2 = squared_distance(x, j, m, i);
            if (d2 < best) {
                best = d2;
                labels[j] = i;
            }
        }
    }
    return IndicatorMatrix(m.cols(), std::move(labels));
}

UpdateResult update_step(const DataMatrix& x, const IndicatorMatrix& z, EmptyClusterPolicy policy) {
    if (x.cols() != z.n()) {
        throw DimensionMismatch("data has " + std::to_string(x.cols()) +
                                " points but the assignment covers " + std::to_string(z.n()));
    }
    std::vector<std::size_t> labels(z.assignment().begin(), z.assignment().end());
    std::vector<std::size_t> sizes = cluster_sizes(z).sizes;

    for (std::size_t empty = 0; empty < sizes.size(); ++empty) {
        if (sizes[empty] != 0) {
            continue;
        }
        if (policy == EmptyClusterPolicy::Error) {
            throw EmptyClusterSingularity(empty);
        }
        const DenseMatrix means = partial_means(x, labels, sizes);
        std::size_t farthest = labels.size();
        double farthest_d2 = -1.0;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (sizes[labels[j]] < 2) {
                continue;
            }
            const double d2 = squared_distance(x, j, means, labels[j]);
            if (d2 > farthest_d2) {
                farthest_d2 = d2;
                farthest = j;
            }
        }
        if (farthest == labels.size()) {
            // Only possible when k > n.
            throw DomainError("cannot repair empty cluster " + std::to_string(empty) +
                              ": no cluster has a spare point");
        }
        --sizes[labels[farthest]];
        labels[farthest] = empty;
        sizes[empty] = 1;
    }

    IndicatorMatrix repaired(z.k(), std::move(labels));
    CentroidMatrix centroids = optimal_centroids(x, repaired);
    return UpdateResult{std::move(centroids), std::move(repaired)};
}

void validate(const SolverConfig& cfg, const DataMatrix& x) {
    if (cfg.k == 0) {
        throw DomainError("k must be at least 1");
    }
    if (cfg.k > x.cols()) {
        throw DomainError("k exceeds number of points (k = " + std::to_string(cfg.k) +
                          ", n = " + std::to_string(x.cols()) + ")");
    }
    if (cfg.max_iters == 0) {
        throw DomainError("max_iters must be at least 1");
    }
    if (!(cfg.tol >= 0.0) || !std::isfinite(cfg.tol)) {
        throw DomainError("tol must be a finite nonnegative number");
    }
}

CentroidMatrix init_centroids(const DataMatrix& x, const SolverConfig& cfg) {
    validate(cfg, x);
    Rng rng(cfg.seed);
    switch (cfg.init) {
        case InitStrategy::RandomPoints:
            return columns_of(x, sample_without_replacement(x.cols(), cfg.k, rng));
        case InitStrategy::KMeansPlusPlus:
            return columns_of(x, kmeanspp_picks(x, cfg.k, rng));
        case InitStrategy::ProvidedCentroids: {
            if (!cfg.initial_centroids) {
                throw DomainError("provided-centroids initialization without centroids");
            }
            const CentroidMatrix& m = *cfg.initial_centroids;
            if (m.rows() != x.rows() || m.cols() != cfg.k) {
                throw DimensionMismatch("provided centroids are " + m.shape() + ", expected " +
                                        std::to_string(x.rows()) + "x" + std::to_string(cfg.k));
            }
            return m;
        }
        case InitStrategy::ProvidedAssignment: {
            if (!cfg.initial_assignment) {
                throw DomainError("provided-assignment initialization without an assignment");
            }
            if (cfg.initial_assignment->size() != x.cols()) {
                throw DimensionMismatch("provided assignment has " +
                                        std::to_string(cfg.initial_assignment->size()) +
                                        " labels for " + std::to_string(x.cols()) + " points");
            }
            const IndicatorMatrix z(cfg.k, *cfg.initial_assignment);
            return update_step(x, z, cfg.empty_cluster_policy).centroids;
        }
    }
    throw DomainError("unknown initialization strategy");
}

ClusteringResult fit(const DataMatrix& x, const SolverConfig& cfg) {
    CentroidMatrix m = init_centroids(x, cfg);

    UpdateResult state = update_step(x, assign_step(x, m), cfg.empty_cluster_policy);
    double previous = objective_pointwise(x, state.centroids, state.assignment);
    std::vector<double> trace{previous};
    bool fixed_point = false;

    while (trace.size() < cfg.max_iters) {
        IndicatorMatrix next = assign_step(x, state.centroids);
        if (next == state.assignment) {
            fixed_point = true;
            break;
        }
        state = update_step(x, next, cfg.empty_cluster_policy);
        const double current = objective_pointwise(x, state.centroids, state.assignment);
        trace.push_back(current);
        const bool stalled = previous - current < cfg.tol * previous;
        previous = current;
        if (stalled) {
            break;
        }
    }
    if (!fixed_point) {
        fixed_point = assign_step(x, state.centroids) == state.assignment;
    }

    ClusteringResult result{
        .assignment = state.assignment,
        .centroids = state.centroids,
        .objective_pointwise = objective_pointwise(x, state.centroids, state.assignment),
        .objective_factored = objective_factored(x, state.centroids, state.assignment),
        .objective_projected = objective_projected(x, state.assignment),
        .objective_trace = std::move(trace),
        .iterations = 0,
        .converged = fixed_point,
    };
    result.iterations = result.objective_trace.size();
    return result;
}

RestartOutcome fit_with_restarts(const DataMatrix& x, const SolverConfig& cfg, std::size_t restarts) {
    if (restarts == 0) {
        throw DomainError("restarts must be at least 1");
    }
    SolverConfig run = cfg;
    std::optional<RestartOutcome> outcome;
    for (std::size_t r = 0; r < restarts; ++r) {
        run.seed = cfg.seed + r;
        ClusteringResult result = fit(x, run);
        if (!outcome || result.objective_pointwise < outcome->best.objective_pointwise) {
            outcome = RestartOutcome{std::move(result), r, restarts};
        }
    }
    return *std::move(outcome);
}

}  // namespace kmf
