#include "kmfactor/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "kmfactor/error.hpp"

namespace kmf {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(delimiter, start);
        cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) {
            return cells;
        }
        start = pos + 1;
    }
}

std::optional<double> parse_number(std::string_view cell) {
    if (!cell.empty() && cell.front() == '+') {
        cell.remove_prefix(1);
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size()) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    while (!lines.empty() && trim(lines.back()).empty()) {
        lines.pop_back();
    }
    return lines;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, 0, "cannot open '" + path.string() + "'");
    }
    return in;
}

}  // namespace

Dataset parse_csv(std::istream& in, const CsvOptions& options) {
    const std::vector<std::string> lines = read_lines(in);
    if (lines.empty()) {
        throw ParseError(0, 0, "empty file");
    }

    std::size_t first_data = 0;
    std::vector<std::string> labels;
    const auto header_cells = split(lines[0], options.delimiter);
    bool has_header = options.header == HeaderMode::Present;
    if (options.header == HeaderMode::Auto) {
        for (auto cell : header_cells) {
            if (!parse_number(cell)) {
                has_header = true;
                break;
            }
        }
    }
    if (has_header) {
        labels.assign(header_cells.begin(), header_cells.end());
        first_data = 1;
    }
    if (first_data >= lines.size()) {
        throw ParseError(0, 0, "no data rows");
    }

    const std::size_t features = split(lines[first_data], options.delimiter).size();
    if (has_header && labels.size() != features) {
        throw ParseError(1, 0, "header has " + std::to_string(labels.size()) +
                                   " columns but data rows have " + std::to_string(features));
    }
    const std::size_t points = lines.size() - first_data;
    std::vector<double> entries(features * points);

    for (std::size_t r = first_data; r < lines.size(); ++r) {
        const std::size_t row = r + 1;
        const auto cells = split(lines[r], options.delimiter);
        if (cells.size() != features) {
            throw ParseError(row, 0, "row " + std::to_string(row) + " has " +
                                         std::to_string(cells.size()) + " columns, expected " +
                                         std::to_string(features));
        }
        for (std::size_t c = 0; c < features; ++c) {
            const std::string where =
                "row " + std::to_string(row) + ", column " + std::to_string(c + 1);
            const auto value = parse_number(cells[c]);
            if (!value) {
                throw ParseError(row, c + 1,
                                 "non-numeric cell '" + std::string(cells[c]) + "' at " + where);
            }
            if (!std::isfinite(*value)) {
                throw ParseError(row, c + 1, "non-finite value '" + std::string(cells[c]) + "' at " + where);
            }
            // Transpose: feature c of point (r - first_data).
            entries[c * points + (r - first_data)] = *value;
        }
    }
    return Dataset{DataMatrix(features, points, std::move(entries)), std::move(labels)};
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in = open_or_throw(path);
    return parse_csv(in, options);
}

CentroidMatrix load_centroids_csv(const std::filesystem::path& path, const CsvOptions& options) {
    return load_csv(path, options).matrix;
}

std::vector<std::size_t> load_assignment(const std::filesystem::path& path) {
    std::ifstream in = open_or_throw(path);
    const std::vector<std::string> lines = read_lines(in);
    std::vector<std::size_t> labels;
    labels.reserve(lines.size());
    for (std::size_t r = 0; r < lines.size(); ++r) {
        const std::string_view cell = trim(lines[r]);
        std::size_t label = 0;
        const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), label);
        if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size()) {
            throw ParseError(r + 1, 1, "invalid cluster label '" + std::string(cell) + "' at row " +
                                           std::to_string(r + 1));
        }
        labels.push_back(label);
    }
    if (labels.empty()) {
        throw ParseError(0, 0, "empty assignment file");
    }
    return labels;
}

void write_plot_data(const std::filesystem::path& path, const DataMatrix& x, const IndicatorMatrix& z) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out.precision(17);
    out << "x,y,cluster\n";
    for (std::size_t j = 0; j < x.cols(); ++j) {
        out << x(0, j) << ',' << (x.rows() > 1 ? x(1, j) : 0.0) << ',' << z[j] << '\n';
    }
}

}  // namespace kmf
