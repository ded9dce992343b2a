#include "kmfactor/indicator.hpp"

#include <string>

#include "kmfactor/error.hpp"

namespace kmf {

IndicatorMatrix::IndicatorMatrix(std::size_t k, std::vector<std::size_t> assignment)
    : k_(k), assignment_(std::move(assignment)) {
    if (k_ == 0) {
        throw DomainError("indicator matrix needs at least one cluster");
    }
    if (assignment_.empty()) {
        throw DomainError("indicator matrix needs at least one point");
    }
    for (std::size_t j = 0; j < assignment_.size(); ++j) {
        if (assignment_[j] >= k_) {
            throw DomainError("point " + std::to_string(j) + " assigned to cluster " +
                              std::to_string(assignment_[j]) + " but k = " + std::to_string(k_));
        }
    }
}

std::size_t ClusterSizes::first_empty() const noexcept {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] == 0) {
            return i;
        }
    }
    return sizes.size();
}

DenseMatrix materialize(const IndicatorMatrix& z) {
    DenseMatrix out(z.k(), z.n());
    for (std::size_t j = 0; j < z.n(); ++j) {
        out(z[j], j) = 1.0;
    }
    return out;
}

ClusterSizes cluster_sizes(const IndicatorMatrix& z) {
    ClusterSizes out{std::vector<std::size_t>(z.k(), 0)};
    for (std::size_t label : z.assignment()) {
        ++out.sizes[label];
    }
    return out;
}

DenseMatrix gram(const IndicatorMatrix& z) {
    const ClusterSizes sizes = cluster_sizes(z);
    DenseMatrix out(z.k(), z.k());
    for (std::size_t i = 0; i < z.k(); ++i) {
        out(i, i) = static_cast<double>(sizes[i]);
    }
    return out;
}

DenseMatrix gram_inverse_apply(const IndicatorMatrix& z, const DenseMatrix& a) {
    if (a.cols() != z.k()) {
        throw DimensionMismatch("gram_inverse_apply: operand is " + a.shape() + " but k = " +
                                std::to_string(z.k()));
    }
    const ClusterSizes sizes = cluster_sizes(z);
    if (const std::size_t empty = sizes.first_empty(); empty != sizes.size()) {
        throw EmptyClusterSingularity(empty);
    }
    DenseMatrix out = a;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t i = 0; i < out.cols(); ++i) {
            out(r, i) /= static_cast<double>(sizes[i]);
        }
    }
    return out;
}

IndicatorMatrix indicator_from_dense(const DenseMatrix& z) {
    std::vector<std::size_t> assignment(z.cols(), 0);
    for (std::size_t j = 0; j < z.cols(); ++j) {
        for (std::size_t i = 1; i < z.rows(); ++i) {
            if (z(i, j) > z(assignment[j], j)) {
                assignment[j] = i;
            }
        }
    }
    return IndicatorMatrix(z.rows(), std::move(assignment));
}

}  // namespace kmf
