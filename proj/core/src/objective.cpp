#include "kmfactor/objective.hpp"

#include <string>

#include "kmfactor/error.hpp"

namespace kmf {

namespace {

void check_data_assignment(const DataMatrix& x, const IndicatorMatrix& z) {
    if (x.cols() != z.n()) {
        throw DimensionMismatch("data has " + std::to_string(x.cols()) +
                                " points but the assignment covers " + std::to_string(z.n()));
    }
}

void check_shapes(const DataMatrix& x, const CentroidMatrix& m, const IndicatorMatrix& z) {
    check_data_assignment(x, z);
    if (m.rows() != x.rows()) {
        throw DimensionMismatch("centroids are " + m.shape() + " but data is " + x.shape());
    }
    if (m.cols() != z.k()) {
        throw DimensionMismatch("centroids are " + m.shape() + " but k = " + std::to_string(z.k()));
    }
}

}  // namespace

double objective_pointwise(const DataMatrix& x, const CentroidMatrix& m, const IndicatorMatrix& z) {
    check_shapes(x, m, z);
    double total = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j) {
        const std::size_t i = z[j];
        for (std::size_t l = 0; l < x.rows(); ++l) {
            const double d = x(l, j) - m(l, i);
            total += d * d;
        }
    }
    return total;
}

double objective_factored(const DataMatrix& x, const CentroidMatrix& m, const IndicatorMatrix& z) {
    check_shapes(x, m, z);
    return frobenius_norm_sq(sub(x, matmul(m, materialize(z))));
}

DenseMatrix projector(const IndicatorMatrix& z) {
    const DenseMatrix dense = materialize(z);
    return matmul(gram_inverse_apply(z, transpose(dense)), dense);
}

double objective_projected(const DataMatrix& x, const IndicatorMatrix& z,
                           std::size_t projector_threshold) {
    check_data_assignment(x, z);
    if (z.n() > projector_threshold) {
        return frobenius_norm_sq(sub(x, matmul(optimal_centroids(x, z), materialize(z))));
    }
    return frobenius_norm_sq(sub(x, matmul(x, projector(z))));
}

ObjectiveTerms expand_terms(const DataMatrix& x, const CentroidMatrix& m, const IndicatorMatrix& z) {
    check_shapes(x, m, z);
    ObjectiveTerms t;

    // Summation forms, written over all (i, j) pairs with z_ij in {0, 1}.
    for (std::size_t i = 0; i < z.k(); ++i) {
        for (std::size_t j = 0; j < z.n(); ++j) {
            if (z[j] != i) {
                continue;
            }
            for (std::size_t l = 0; l < x.rows(); ++l) {
                t.t1 += x(l, j) * x(l, j);
                t.t2 += x(l, j) * m(l, i);
                t.t3 += m(l, i) * m(l, i);
            }
        }
    }

    // Trace forms.
    const DenseMatrix dense_z = materialize(z);
    const DenseMatrix xt = transpose(x);
    const DenseMatrix mz = matmul(m, dense_z);
    t.t4 = trace(matmul(xt, x));
    t.t5 = trace(matmul(xt, mz));
    t.t6 = trace(matmul(transpose(mz), mz));
    return t;
}

DenseMatrix objective_gradient_wrt_m(const DataMatrix& x, const CentroidMatrix& m,
                                     const IndicatorMatrix& z) {
    check_shapes(x, m, z);
    const DenseMatrix residual = sub(matmul(m, gram(z)), matmul(x, transpose(materialize(z))));
    std::vector<double> scaled(residual.entries().begin(), residual.entries().end());
    for (double& v : scaled) {
        v *= 2.0;
    }
    return DenseMatrix(residual.rows(), residual.cols(), std::move(scaled));
}

CentroidMatrix optimal_centroids(const DataMatrix& x, const IndicatorMatrix& z) {
    check_data_assignment(x, z);
    return gram_inverse_apply(z, matmul(x, transpose(materialize(z))));
}

}  // namespace kmf
