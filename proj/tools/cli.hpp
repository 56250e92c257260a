#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include <cliquanta/verify.hpp>

namespace cliquanta::cli {

enum exit_code : int {
    exit_ok = 0,
    exit_refuted = 2,
    exit_partial = 3,
    exit_usage = 64,
    exit_data = 65,
    exit_io = 74,
};

/// Worker count from CLIQUANTA_WORKERS, else the hardware thread count.
std::size_t default_workers();

/// Runs tasks on up to `workers` threads; 1 runs them in order on the caller.
task_runner make_runner(std::size_t workers);

/// Runs one claim row, e.g. {"claim": "thm1.2", "n": 8, "r": 3}.
certificate run_claim(const nlohmann::ordered_json& row, const verify_options& opts);

/// Entry point; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliquanta::cli
