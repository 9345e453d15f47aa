#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclowed/json_io.hpp"

namespace cyclowed::cli {

enum class Status { Ok, Violation, Error };

struct CommandResult {
    std::string command;
    Status status = Status::Ok;
    Json payload;
    double timing_ms = 0;
    /// Aligned text for the default output mode.
    std::string text;
};

Json to_json(const CommandResult& r);

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_internal = 3;

/// Parses args (without the program name), runs one command and writes its output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cyclowed::cli
