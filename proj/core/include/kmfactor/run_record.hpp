#pragma once

/**
 * @file run_record.hpp
 * @brief Serializable record of one clustering run.
 *
 * The record is a JSON document. Doubles are written in shortest round-trip
 * form, so parse(serialize(r)) == r holds exactly for every numeric field.
 */

#include <cstdint>
#include <string>

#include "kmfactor/dense_matrix.hpp"
#include "kmfactor/solver.hpp"

namespace kmf {

struct RunConfigEcho {
    std::size_t k = 0;
    std::string init;
    std::uint64_t seed = 0;
    std::size_t max_iters = 0;
    double tol = 0.0;
    std::string empty_cluster;
    std::size_t restarts = 1;

    friend bool operator==(const RunConfigEcho&, const RunConfigEcho&) = default;
};

struct RunRecord {
    std::string tool_version;
    RunConfigEcho config;
    std::size_t points = 0;
    std::size_t features = 0;
    std::string dataset_fingerprint;
    ClusteringResult result;
    std::size_t best_restart = 0;
    double duration_seconds = 0.0;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// FNV-1a over the shape and the IEEE-754 bit patterns of the entries, as 16 hex digits.
std::string fingerprint(const DataMatrix& x);

RunConfigEcho echo_config(const SolverConfig& cfg, std::size_t restarts);

std::string serialize(const RunRecord& record);

/// Throws ParseError when the document is malformed or incomplete.
RunRecord parse_run_record(const std::string& text);

}  // namespace kmf
