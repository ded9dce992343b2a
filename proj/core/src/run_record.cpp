#include "kmfactor/run_record.hpp"

#include <bit>
#include <cstdio>

#include <json.hpp>

#include "kmfactor/error.hpp"

namespace kmf {

namespace {

using nlohmann::json;

json centroids_to_json(const CentroidMatrix& m) {
    // One array per centroid, matching the rows-are-points file convention.
    json out = json::array();
    for (std::size_t i = 0; i < m.cols(); ++i) {
        out.push_back(m.column(i));
    }
    return out;
}

CentroidMatrix centroids_from_json(const json& j) {
    const auto rows = j.get<std::vector<std::vector<double>>>();
    if (rows.empty() || rows.front().empty()) {
        throw ParseError(0, 0, "run record has no centroids");
    }
    CentroidMatrix m(rows.front().size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.rows()) {
            throw ParseError(0, 0, "run record centroids are ragged");
        }
        for (std::size_t l = 0; l < m.rows(); ++l) {
            m(l, i) = rows[i][l];
        }
    }
    return m;
}

}  // namespace

std::string fingerprint(const DataMatrix& x) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    auto mix = [&hash](std::uint64_t word) {
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (word >> (8 * byte)) & 0xffU;
            hash *= 0x100000001b3ULL;
        }
    };
    mix(x.rows());
    mix(x.cols());
    for (double v : x.entries()) {
        mix(std::bit_cast<std::uint64_t>(v));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

RunConfigEcho echo_config(const SolverConfig& cfg, std::size_t restarts) {
    return RunConfigEcho{cfg.k,
                         std::string(to_string(cfg.init)),
                         cfg.seed,
                         cfg.max_iters,
                         cfg.tol,
                         std::string(to_string(cfg.empty_cluster_policy)),
                         restarts};
}

std::string serialize(const RunRecord& record) {
    const ClusteringResult& r = record.result;
    json doc;
    doc["tool_version"] = record.tool_version;
    doc["config"] = {
        {"k", record.config.k},
        {"init", record.config.init},
        {"seed", record.config.seed},
        {"max_iters", record.config.max_iters},
        {"tol", record.config.tol},
        {"empty_cluster", record.config.empty_cluster},
        {"restarts", record.config.restarts},
    };
    doc["dataset"] = {
        {"points", record.points},
        {"features", record.features},
        {"fingerprint", record.dataset_fingerprint},
    };
    doc["result"] = {
        {"k", r.assignment.k()},
        {"assignment", std::vector<std::size_t>(r.assignment.assignment().begin(),
                                                r.assignment.assignment().end())},
        {"centroids", centroids_to_json(r.centroids)},
        {"objective_pointwise", r.objective_pointwise},
        {"objective_factored", r.objective_factored},
        {"objective_projected", r.objective_projected},
        {"objective_trace", r.objective_trace},
        {"iterations", r.iterations},
        {"converged", r.converged},
        {"best_restart", record.best_restart},
    };
    doc["duration_seconds"] = record.duration_seconds;
    return doc.dump(2) + "\n";
}

RunRecord parse_run_record(const std::string& text) {
    try {
        const json doc = json::parse(text);
        const json& cfg = doc.at("config");
        const json& data = doc.at("dataset");
        const json& res = doc.at("result");

        ClusteringResult result{
            .assignment = IndicatorMatrix(res.at("k").get<std::size_t>(),
                                          res.at("assignment").get<std::vector<std::size_t>>()),
            .centroids = centroids_from_json(res.at("centroids")),
            .objective_pointwise = res.at("objective_pointwise").get<double>(),
            .objective_factored = res.at("objective_factored").get<double>(),
            .objective_projected = res.at("objective_projected").get<double>(),
            .objective_trace = res.at("objective_trace").get<std::vector<double>>(),
            .iterations = res.at("iterations").get<std::size_t>(),
            .converged = res.at("converged").get<bool>(),
        };
        return RunRecord{
            .tool_version = doc.at("tool_version").get<std::string>(),
            .config = RunConfigEcho{cfg.at("k").get<std::size_t>(), cfg.at("init").get<std::string>(),
                                    cfg.at("seed").get<std::uint64_t>(),
                                    cfg.at("max_iters").get<std::size_t>(), cfg.at("tol").get<double>(),
                                    cfg.at("empty_cluster").get<std::string>(),
                                    cfg.at("restarts").get<std::size_t>()},
            .points = data.at("points").get<std::size_t>(),
            .features = data.at("features").get<std::size_t>(),
            .dataset_fingerprint = data.at("fingerprint").get<std::string>(),
            .result = std::move(result),
            .best_restart = res.at("best_restart").get<std::size_t>(),
            .duration_seconds = doc.at("duration_seconds").get<double>(),
        };
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, 0, std::string("malformed run record: ") + e.what());
    }
}

}  // namespace kmf
