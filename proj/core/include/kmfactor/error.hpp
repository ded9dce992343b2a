#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kmf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Precondition on a value (non-finite entry, k > n, bad config) failed.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Raised when (ZZ^T)^-1 is needed but a cluster has no members.
class EmptyClusterSingularity : public Error {
public:
    explicit EmptyClusterSingularity(std::size_t cluster)
        : Error("cluster " + std::to_string(cluster) + " is empty; (ZZ^T) is singular"),
          cluster_(cluster) {}

    std::size_t cluster() const noexcept { return cluster_; }

private:
    std::size_t cluster_;
};

/// Exhaustive enumeration would exceed the caller's budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t limit, const std::string& what)
        : Error(what), required_(required), limit_(limit) {}

    /// Number of candidates the search needs; saturates at UINT64_MAX.
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

/// Malformed input file. Row and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
    ParseError(std::size_t row, std::size_t column, const std::string& what)
        : Error(what), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

}  // namespace kmf
