#include "kmfactor/dense_matrix.hpp"

#include <cmath>
#include <ostream>

#include "kmfactor/error.hpp"

namespace kmf {

namespace {

void check_positive(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionMismatch("matrix dimensions must be positive, got " + std::to_string(rows) +
                                "x" + std::to_string(cols));
    }
}

void check_finite(std::span<const double> entries, std::size_t cols) {
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        if (!std::isfinite(entries[idx])) {
            throw DomainError("non-finite matrix entry at (" + std::to_string(idx / cols) + ", " +
                              std::to_string(idx % cols) + ")");
        }
    }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_positive(rows, cols);
    entries_.assign(rows * cols, 0.0);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_positive(rows, cols);
    if (entries_.size() != rows * cols) {
        throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries for a " +
                                shape() + " matrix, got " + std::to_string(entries_.size()));
    }
    check_finite(entries_, cols_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    check_positive(rows_, cols_);
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionMismatch("ragged initializer: rows have different lengths");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    check_finite(entries_, cols_);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

std::vector<double> DenseMatrix::column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

std::string DenseMatrix::shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: cannot multiply " + a.shape() + " by " + b.shape());
    }
    DenseMatrix out(a.rows(), b.cols());
    // i-l-j order keeps the inner loop contiguous in both b and out.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            if (ail == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += ail * b(l, j);
            }
        }
    }
    return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = a(r, c);
        }
    }
    return out;
}

DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("sub: shape mismatch " + a.shape() + " vs " + b.shape());
    }
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c) - b(r, c);
        }
    }
    return out;
}

double trace(const DenseMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("trace: matrix is not square (" + a.shape() + ")");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

double frobenius_norm_sq(const DenseMatrix& a) {
    double sum = 0.0;
    for (double v : a.entries()) {
        sum += v * v;
    }
    return sum;
}

std::ostream& operator<<(std::ostream& os, const DenseMatrix& a) {
    os << '[';
    for (std::size_t r = 0; r < a.rows(); ++r) {
        os << (r == 0 ? "[" : ", [");
        for (std::size_t c = 0; c < a.cols(); ++c) {
            os << (c == 0 ? "" : ", ") << a(r, c);
        }
        os << ']';
    }
    return os << ']';
}

}  // namespace kmf
