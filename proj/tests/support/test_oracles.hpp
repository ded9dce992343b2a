#pragma once

// Test-only reference computations. Nothing here calls the objective or
// solver code it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "kmfactor/dense_matrix.hpp"
#include "kmfactor/indicator.hpp"
#include "kmfactor/random.hpp"

namespace kmf::testing {

inline double rel(double a, double b) {
    return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

inline DenseMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, double lo = -10.0,
                                 double hi = 10.0) {
    std::vector<double> v(rows * cols);
    for (double& e : v) {
        e = rng.uniform(lo, hi);
    }
    return DenseMatrix(rows, cols, std::move(v));
}

/// Any one-hot assignment; clusters may be empty.
inline IndicatorMatrix random_assignment(std::size_t k, std::size_t n, Rng& rng) {
    std::vector<std::size_t> labels(n);
    for (auto& l : labels) {
        l = rng.uniform_index(k);
    }
    return IndicatorMatrix(k, std::move(labels));
}

/// Every cluster nonempty; requires k <= n.
inline IndicatorMatrix random_surjective(std::size_t k, std::size_t n, Rng& rng) {
    std::vector<std::size_t> labels(n);
    for (auto& l : labels) {
        l = rng.uniform_index(k);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t t = 0; t < n; ++t) {
        std::swap(order[t], order[t + rng.uniform_index(n - t)]);
    }
    for (std::size_t i = 0; i < k; ++i) {
        labels[order[i]] = i;
    }
    return IndicatorMatrix(k, std::move(labels));
}

/// Mean of each cluster by direct per-cluster summation (m x k, row-major vectors).
inline std::vector<std::vector<double>> direct_means(const DenseMatrix& x, const IndicatorMatrix& z) {
    std::vector<std::vector<double>> means(z.k(), std::vector<double>(x.rows(), 0.0));
    std::vector<std::size_t> counts(z.k(), 0);
    for (std::size_t j = 0; j < x.cols(); ++j) {
        ++counts[z[j]];
        for (std::size_t l = 0; l < x.rows(); ++l) {
            means[z[j]][l] += x(l, j);
        }
    }
    for (std::size_t i = 0; i < z.k(); ++i) {
        for (double& v : means[i]) {
            v /= static_cast<double>(counts[i]);
        }
    }
    return means;
}

/// sum_j ||x_j - c_{z_j}||^2 with centroids given as column-major vectors.
inline double direct_objective(const DenseMatrix& x, const std::vector<std::vector<double>>& centroids,
                               const IndicatorMatrix& z) {
    double total = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j) {
        for (std::size_t l = 0; l < x.rows(); ++l) {
            const double d = x(l, j) - centroids[z[j]][l];
            total += d * d;
        }
    }
    return total;
}

inline std::vector<std::vector<double>> columns(const DenseMatrix& m) {
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < m.cols(); ++i) {
        out.push_back(m.column(i));
    }
    return out;
}

/// Central differences of direct_objective in each centroid coordinate.
inline std::vector<std::vector<double>> fd_gradient(const DenseMatrix& x, const DenseMatrix& m,
                                                    const IndicatorMatrix& z) {
    auto c = columns(m);
    auto grad = c;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t l = 0; l < c[i].size(); ++l) {
            const double base = c[i][l];
            const double h = 1e-5 * (1.0 + std::abs(base));
            c[i][l] = base + h;
            const double up = direct_objective(x, c, z);
            c[i][l] = base - h;
            const double down = direct_objective(x, c, z);
            c[i][l] = base;
            grad[i][l] = (up - down) / (2.0 * h);
        }
    }
    return grad;
}

/// Exhaustive minimum over surjective assignments, by plain recursion.
inline double brute_force_min(const DenseMatrix& x, std::size_t k) {
    const std::size_t n = x.cols();
    std::vector<std::size_t> labels(n, 0);
    double best = INFINITY;
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            std::vector<std::size_t> counts(k, 0);
            for (auto l : labels) {
                ++counts[l];
            }
            if (std::count(counts.begin(), counts.end(), std::size_t{0}) > 0) {
                return;
            }
            IndicatorMatrix z(k, labels);
            best = std::min(best, direct_objective(x, direct_means(x, z), z));
            return;
        }
        for (std::size_t i = 0; i < k; ++i) {
            labels[j] = i;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace kmf::testing
