#pragma once

#include <string>
#include <vector>

#include "superq/problem.hpp"

namespace superq {

/// Named problem file together with the report fragments it must reproduce.
struct Preset {
    std::string name;
    std::string summary;
    Json problem;
    Json expected;
};

const std::vector<Preset>& presets();
/// Throws InputError for unknown names.
const Preset& find_preset(const std::string& name);

/// Pointers (and values) where `report` disagrees with `expected`.  Objects
/// in `expected` are matched key by key; everything else must be equal.
std::vector<std::string> fragment_mismatches(const Json& expected, const Json& report);

struct PresetRun {
    Json report;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

PresetRun run_preset(const std::string& name);

}  // namespace superq
