#include "commands.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmfactor/csv.hpp"
#include "kmfactor/error.hpp"
#include "kmfactor/oracle.hpp"
#include "kmfactor/random.hpp"
#include "kmfactor/run_record.hpp"
#include "kmfactor/solver.hpp"
#include "kmfactor/verification.hpp"
#include "kmfactor/version.hpp"

namespace kmf::cli {

namespace {

enum class Format { Table, Record };

struct CommonOptions {
    std::string input;
    char delimiter = ',';
    std::string header = "auto";
    std::uint64_t seed = 0;
    Format format = Format::Table;
};

struct ClusterOptions {
    std::size_t k = 0;
    std::string init = "kmeanspp";
    std::string init_file;
    std::size_t max_iters = 100;
    double tol = 1e-9;
    std::size_t restarts = 1;
    std::string empty_cluster = "repair";
    std::string output;
    std::string plot_data;
};

struct VerifyOptions {
    std::size_t k = 0;
    std::size_t samples = 100;
    bool random = false;
    std::size_t m = 4;
    std::size_t n = 30;
};

struct OracleOptions {
    std::size_t k = 0;
    std::uint64_t limit = kDefaultEnumerationLimit;
    bool compare = false;
    std::size_t restarts = 10;
};

/// Raised for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const CLI::Validator kAtLeastOne(
    [](std::string& value) -> std::string {
        std::size_t parsed = 0;
        if (!CLI::detail::lexical_cast(value, parsed) || parsed == 0) {
            return "must be an integer >= 1, got " + value;
        }
        return {};
    },
    "INT>=1");

void add_common(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--input", opts.input, "CSV file, one point per row");
    cmd.add_option("--delimiter", opts.delimiter, "Field separator")->capture_default_str();
    cmd.add_option("--header", opts.header, "First row is a header: auto, true or false")
        ->check(CLI::IsMember({"auto", "true", "false"}))
        ->capture_default_str();
    cmd.add_option("--seed", opts.seed, "Random seed")->capture_default_str();
    const std::map<std::string, Format> formats{{"table", Format::Table}, {"record", Format::Record}};
    cmd.add_option("--format", opts.format, "Output format: table or record")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("table");
}

CsvOptions csv_options(const CommonOptions& opts) {
    CsvOptions csv;
    csv.delimiter = opts.delimiter;
    csv.header = opts.header == "true"    ? HeaderMode::Present
                 : opts.header == "false" ? HeaderMode::Absent
                                          : HeaderMode::Auto;
    return csv;
}

Dataset load_input(const CommonOptions& opts) {
    if (opts.input.empty()) {
        throw UsageError("--input is required");
    }
    return load_csv(opts.input, csv_options(opts));
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string describe_partition(const IndicatorMatrix& z) {
    std::vector<std::vector<std::size_t>> members(z.k());
    for (std::size_t j = 0; j < z.n(); ++j) {
        members[z[j]].push_back(j);
    }
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        out += i == 0 ? "{" : " | {";
        for (std::size_t t = 0; t < members[i].size(); ++t) {
            out += (t == 0 ? "" : ",") + std::to_string(members[i][t]);
        }
        out += "}";
    }
    return out;
}

int run_cluster(const CommonOptions& common, const ClusterOptions& opts, std::ostream& out,
                std::ostream& err) {
    const Dataset data = load_input(common);
    const DataMatrix& x = data.matrix;

    SolverConfig cfg;
    cfg.k = opts.k;
    cfg.seed = common.seed;
    cfg.max_iters = opts.max_iters;
    cfg.tol = opts.tol;
    cfg.empty_cluster_policy =
        opts.empty_cluster == "error" ? EmptyClusterPolicy::Error : EmptyClusterPolicy::RepairFarthestPoint;
    if (opts.init == "random") {
        cfg.init = InitStrategy::RandomPoints;
    } else if (opts.init == "kmeanspp") {
        cfg.init = InitStrategy::KMeansPlusPlus;
    } else {
        if (opts.init_file.empty()) {
            throw UsageError("--init " + opts.init + " requires --init-file");
        }
        if (opts.init == "centroids-file") {
            cfg.init = InitStrategy::ProvidedCentroids;
            cfg.initial_centroids = load_centroids_csv(opts.init_file, csv_options(common));
        } else {
            cfg.init = InitStrategy::ProvidedAssignment;
            cfg.initial_assignment = load_assignment(opts.init_file);
        }
    }
    validate(cfg, x);

    const auto start = std::chrono::steady_clock::now();
    RestartOutcome outcome = fit_with_restarts(x, cfg, opts.restarts);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    RunRecord record{
        .tool_version = kVersion,
        .config = echo_config(cfg, opts.restarts),
        .points = x.cols(),
        .features = x.rows(),
        .dataset_fingerprint = fingerprint(x),
        .result = std::move(outcome.best),
        .best_restart = outcome.best_restart,
        .duration_seconds = elapsed.count(),
    };
    const ClusteringResult& r = record.result;

    if (!opts.output.empty()) {
        std::ofstream file(opts.output);
        if (!file) {
            throw Error("cannot write '" + opts.output + "'");
        }
        file << serialize(record);
    }
    if (!opts.plot_data.empty()) {
        write_plot_data(opts.plot_data, x, r.assignment);
    }

    if (common.format == Format::Record) {
        out << serialize(record);
    } else {
        out << "points        " << x.cols() << "\n"
            << "features      " << x.rows() << "\n"
            << "k             " << cfg.k << "\n"
            << "objective     " << format_double(r.objective_pointwise) << "\n"
            << "  factored    " << format_double(r.objective_factored) << "\n"
            << "  projected   " << format_double(r.objective_projected) << "\n"
            << "iterations    " << r.iterations << "\n"
            << "converged     " << (r.converged ? "yes" : "no") << "\n"
            << "best restart  " << record.best_restart << " of " << opts.restarts << "\n"
            << "partition     " << describe_partition(r.assignment) << "\n";
        for (std::size_t i = 0; i < r.centroids.cols(); ++i) {
            out << "centroid " << i << "   ";
            for (std::size_t l = 0; l < r.centroids.rows(); ++l) {
                out << (l == 0 ? "" : ", ") << format_double(r.centroids(l, i));
            }
            out << "\n";
        }
    }
    if (!r.converged) {
        err << "warning: stopped after " << r.iterations << " iterations without reaching a fixed point\n";
        return kNotConverged;
    }
    return kSuccess;
}

DataMatrix random_data(std::size_t m, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> entries(m * n);
    for (double& v : entries) {
        v = rng.uniform(-10.0, 10.0);
    }
    return DataMatrix(m, n, std::move(entries));
}

int run_verify(const CommonOptions& common, const VerifyOptions& opts, std::ostream& out) {
    DataMatrix x = opts.random ? random_data(opts.m, opts.n, common.seed) : load_input(common).matrix;
    const VerificationReport report = verify_identities(x, opts.k, opts.samples, common.seed);

    if (common.format == Format::Record) {
        nlohmann::json doc;
        doc["points"] = x.cols();
        doc["features"] = x.rows();
        doc["k"] = opts.k;
        doc["exhaustive"] = report.exhaustive;
        doc["passed"] = report.passed();
        for (const CheckResult& c : report.checks) {
            doc["checks"].push_back({{"name", c.name},
                                     {"cases", c.cases},
                                     {"worst", c.worst},
                                     {"tolerance", c.tolerance},
                                     {"passed", c.passed()}});
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "points " << x.cols() << ", features " << x.rows() << ", k " << opts.k << ", "
            << (report.exhaustive ? "all surjective assignments" : "sampled assignments") << "\n";
        for (const CheckResult& c : report.checks) {
            out << std::left << std::setw(32) << c.name << " cases " << std::setw(5) << c.cases
                << " worst " << std::setw(24) << format_double(c.worst) << " tol "
                << std::setw(8) << c.tolerance << (c.passed() ? " PASS" : " FAIL") << "\n";
        }
        out << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
    }
    return report.passed() ? kSuccess : kDataError;
}

int run_oracle(const CommonOptions& common, const OracleOptions& opts, std::ostream& out) {
    const Dataset data = load_input(common);
    const DataMatrix& x = data.matrix;
    const OracleReport report = enumerate_global_min(x, opts.k, opts.limit);

    std::optional<RestartOutcome> fitted;
    if (opts.compare) {
        SolverConfig cfg;
        cfg.k = opts.k;
        cfg.seed = common.seed;
        fitted = fit_with_restarts(x, cfg, opts.restarts);
    }

    if (common.format == Format::Record) {
        nlohmann::json doc;
        doc["global_min_objective"] = report.global_min_objective;
        doc["enumerated_count"] = report.enumerated_count;
        for (const IndicatorMatrix& z : report.argmin_assignments) {
            doc["argmin_assignments"].push_back(
                std::vector<std::size_t>(z.assignment().begin(), z.assignment().end()));
        }
        if (fitted) {
            doc["fit_objective"] = fitted->best.objective_pointwise;
            doc["fit_restarts"] = opts.restarts;
            doc["gap"] = fitted->best.objective_pointwise - report.global_min_objective;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "global minimum   " << format_double(report.global_min_objective) << "\n"
            << "enumerated       " << report.enumerated_count << "\n"
            << "minimizers       " << report.argmin_assignments.size() << "\n";
        for (const IndicatorMatrix& z : report.argmin_assignments) {
            out << "  " << describe_partition(z) << "\n";
        }
        if (fitted) {
            out << "fit objective    " << format_double(fitted->best.objective_pointwise) << " (best of "
                << opts.restarts << " restarts)\n"
                << "gap              "
                << format_double(fitted->best.objective_pointwise - report.global_min_objective) << "\n";
        }
    }
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-means clustering as constrained matrix factorization", "kmfactor"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOptions common;
    ClusterOptions cluster;
    VerifyOptions verify;
    OracleOptions oracle;

    CLI::App* cluster_cmd = app.add_subcommand("cluster", "Fit k-means by alternating minimization");
    add_common(*cluster_cmd, common);
    cluster_cmd->add_option("--k", cluster.k, "Number of clusters")->required()->check(kAtLeastOne);
    cluster_cmd->add_option("--init", cluster.init, "Initialization")
        ->check(CLI::IsMember({"random", "kmeanspp", "centroids-file", "assignment-file"}))
        ->capture_default_str();
    cluster_cmd->add_option("--init-file", cluster.init_file,
                            "Centroid CSV or label file for --init centroids-file/assignment-file");
    cluster_cmd->add_option("--max-iters", cluster.max_iters, "Iteration cap")
        ->check(kAtLeastOne)
        ->capture_default_str();
    cluster_cmd->add_option("--tol", cluster.tol, "Relative objective-decrease threshold")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cluster_cmd->add_option("--restarts", cluster.restarts, "Independent runs; best objective wins")
        ->check(kAtLeastOne)
        ->capture_default_str();
    cluster_cmd->add_option("--empty-cluster", cluster.empty_cluster, "Empty-cluster policy")
        ->check(CLI::IsMember({"repair", "error"}))
        ->capture_default_str();
    cluster_cmd->add_option("--output", cluster.output, "Also write the run record to this file");
    cluster_cmd->add_option("--emit-plot-data", cluster.plot_data, "Write x,y,cluster rows for plotting");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Check the objective identities numerically");
    add_common(*verify_cmd, common);
    verify_cmd->add_option("--k", verify.k, "Number of clusters")->required()->check(kAtLeastOne);
    verify_cmd->add_option("--samples", verify.samples, "Assignments to check")->capture_default_str();
    verify_cmd->add_flag("--random", verify.random, "Use uniform [-10, 10] data instead of --input");
    verify_cmd->add_option("--m", verify.m, "Features of random data")
        ->check(kAtLeastOne)
        ->capture_default_str();
    verify_cmd->add_option("--n", verify.n, "Points of random data")
        ->check(kAtLeastOne)
        ->capture_default_str();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive global minimum for tiny inputs");
    add_common(*oracle_cmd, common);
    oracle_cmd->add_option("--k", oracle.k, "Number of clusters")->required()->check(kAtLeastOne);
    oracle_cmd->add_option("--limit", oracle.limit, "Maximum k^n to enumerate")->capture_default_str();
    oracle_cmd->add_flag("--compare", oracle.compare, "Also run the solver and report the gap");
    oracle_cmd->add_option("--restarts", oracle.restarts, "Solver restarts for --compare")
        ->check(kAtLeastOne)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kSuccess;
        }
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*cluster_cmd) {
            return run_cluster(common, cluster, out, err);
        }
        if (*verify_cmd) {
            return run_verify(common, verify, out);
        }
        return run_oracle(common, oracle, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    }
}

}  // namespace kmf::cli
