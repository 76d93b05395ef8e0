#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sphereprod::cli {

inline constexpr int kSchemaVersion = 1;

enum class Status { ok = 0, non_member = 1, input_error = 2, verification_failure = 3 };

struct CommandResult {
    Status status = Status::ok;
    nlohmann::ordered_json payload;
    std::string text;         // rendering for --format text
    std::string diagnostics;  // goes to stderr
    bool json_output = true;

    int exit_code() const { return static_cast<int>(status); }
    // What the executable writes to stdout.
    std::string output() const;
};

// argv without the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace sphereprod::cli
