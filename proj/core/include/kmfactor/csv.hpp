#pragma once

/**
 * @file csv.hpp
 * @brief Numeric CSV ingestion.
 *
 * Files hold one observation per row and one feature per column. On load the
 * table is transposed once so that the resulting DataMatrix has points as
 * columns (m features x n points).
 */

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "kmfactor/dense_matrix.hpp"
#include "kmfactor/indicator.hpp"

namespace kmf {

enum class HeaderMode { Auto, Present, Absent };

struct CsvOptions {
    char delimiter = ',';
    /// Auto treats the first row as a header when any of its cells is non-numeric.
    HeaderMode header = HeaderMode::Auto;
};

struct Dataset {
    DataMatrix matrix;
    /// Feature names from the header row; empty without a header.
    std::vector<std::string> labels;

    std::size_t point_count() const noexcept { return matrix.cols(); }
    std::size_t feature_count() const noexcept { return matrix.rows(); }
};

/// Throws ParseError with a 1-based file row and column on malformed input.
Dataset parse_csv(std::istream& in, const CsvOptions& options = {});
Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

/// Rows of a CSV as a k x m table, returned as an m x k centroid matrix.
CentroidMatrix load_centroids_csv(const std::filesystem::path& path, const CsvOptions& options = {});

/// One non-negative integer label per line.
std::vector<std::size_t> load_assignment(const std::filesystem::path& path);

/// Writes "x,y,cluster" rows using the first two features (y = 0 when m = 1).
void write_plot_data(const std::filesystem::path& path, const DataMatrix& x, const IndicatorMatrix& z);

}  // namespace kmf
