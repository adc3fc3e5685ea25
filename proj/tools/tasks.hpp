#pragma once

#include <optional>
#include <string>

#include "problem.hpp"

namespace hacoh::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kBudget = 2, kInputError = 3 };

struct Flags {
    std::string method;  // "", "bruteforce" or "bridge"
    std::optional<std::size_t> degree;
    bool measuring = false;  // cohom: insist on the measuring complex
};

/// The artifacts of one run. `report` is deterministic: no timings, no paths, sorted keys.
struct Outcome {
    json report;
    json witnesses;
    std::string text;
    int exit_code = kPass;
};

Outcome run(const Problem& p, const Flags& flags = {});

/// Re-validates every serialized witness against the problem embedded in the report, without searching.
Outcome recheck(const json& report, const json& witnesses);
/// Reads a report.json and the witness file it names (relative to the report's directory).
Outcome recheck_file(const std::string& report_path);

/// Human-readable rendering of a report.
std::string render_text(const json& report);

}  // namespace hacoh::cli
