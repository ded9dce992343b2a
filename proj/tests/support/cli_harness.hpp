#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

namespace kmf::testing {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

inline CliRun run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "kmfactor");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    CliRun run;
    run.code = kmf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    run.out = out.str();
    run.err = err.str();
    return run;
}

inline std::string fixture(const std::string& name) {
    return std::string(KMFACTOR_TEST_DATA_DIR) + "/" + name;
}

}  // namespace kmf::testing
