#pragma once

// Report builders behind the CLI subcommands.  Every report is an ordered
// JSON object starting with "schema" and "command"; the table format is a
// rendering of the same object.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "superq/problem.hpp"
#include "superq/unipotent.hpp"

namespace superq {

enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFails = 1,
    kExitInvalidInput = 2,
    kExitUnknownAtBound = 3,
    kExitIo = 4,
};

struct CommandResult {
    Json report;
    int exit_code = kExitOk;
};

Json report_header(const std::string& command);

CommandResult cmd_describe(const Problem& problem);
CommandResult cmd_check_hopf(const Problem& problem);
CommandResult cmd_check_coaction(const Problem& problem, std::size_t samples, std::uint64_t seed);
CommandResult cmd_invariants(const Problem& problem, int max_degree);
CommandResult cmd_generators(const Problem& problem, int max_degree);
CommandResult cmd_freeness(const Problem& problem, int bound, const std::optional<StabilizerWitness>& witness);
CommandResult cmd_quotient_verify(const Problem& problem, int max_degree);
CommandResult cmd_unipotent(const ShuffleData& shuffle, int max_degree);
CommandResult cmd_demo(const std::string& name);

/// Validate, invariants, freeness, then quotient and basis certificates when free.
Json run_pipeline(const Problem& problem);

/// Runs `body`, turning library exceptions into an error report and exit code.
CommandResult guarded(const std::string& command, const std::function<CommandResult()>& body);

std::string render_table(const Json& report);

}  // namespace superq
