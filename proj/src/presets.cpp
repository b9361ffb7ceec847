#include "superq/presets.hpp"

#include "superq/commands.hpp"

namespace superq {

namespace {

Json ones(int n, int leading_zero)
{
    Json a = Json::array();
    for (int i = 0; i < n; ++i)
        a.push_back(i < leading_zero ? 0 : 1);
    return a;
}

Json example_3_1()
{
    return Json::parse(R"({
  "schema": "superq/1",
  "name": "example-3-1",
  "description": "odd additive group on K[v1|v2] with phi(v1) = v2",
  "field": {"kind": "rationals"},
  "algebra": {"generators": [
    {"name": "v1", "parity": "even"},
    {"name": "v2", "parity": "odd"}
  ]},
  "group": {"kind": "odd-additive"},
  "action": {"kind": "odd-derivation", "images": {"v1": "v2", "v2": "0"}},
  "options": {"invariants_max_degree": 10, "freeness_bound": 6},
  "witness": {
    "algebra": {"generators": [
      {"name": "w", "parity": "even"},
      {"name": "xi", "parity": "odd"}
    ]},
    "point": {"v1": "w", "v2": "0"},
    "element": {"t": "xi"}
  }
})");
}

Json gana_free()
{
    return Json::parse(R"({
  "schema": "superq/1",
  "name": "gana-free",
  "description": "odd additive group on K[x|theta] with phi(theta) = 1",
  "field": {"kind": "rationals"},
  "algebra": {"generators": [
    {"name": "x", "parity": "even"},
    {"name": "theta", "parity": "odd"}
  ]},
  "group": {"kind": "odd-additive"},
  "action": {"kind": "odd-derivation", "images": {"x": "0", "theta": "1"}},
  "options": {"invariants_max_degree": 8, "freeness_bound": 6, "quotient_max_degree": 6, "assert_free": true},
  "free_basis": ["1", "theta"]
})");
}

Json frobenius_translation_p5()
{
    return Json::parse(R"({
  "schema": "superq/1",
  "name": "frobenius-translation-p5",
  "description": "first Frobenius kernel of G_a over F_5 translating K[x]",
  "field": {"kind": "prime", "characteristic": 5},
  "algebra": {"generators": [{"name": "x", "parity": "even"}]},
  "group": {"kind": "frobenius-1"},
  "action": {"kind": "explicit", "tau": {"x": [["x", "1"], ["1", "u"]]}},
  "options": {"invariants_max_degree": 12, "freeness_bound": 6, "quotient_max_degree": 12, "assert_free": true},
  "free_basis": ["1", "x", "x^2", "x^3", "x^4"]
})");
}

std::vector<Preset> make_presets()
{
    std::vector<Preset> out;

    Json e31;
    e31["status"] = "not_free";
    e31["coaction"] = {{"ok", true}};
    e31["invariants"] = {{"slice_dimensions", ones(11, 0)}, {"ledger_counts", ones(11, 1)}};
    e31["freeness"] = {{"status", "not_free"}, {"witness_confirmed", true}};
    out.push_back({"example-3-1", "non-free odd additive action with non-finitely generated invariants",
                   example_3_1(), e31});

    Json gf;
    gf["status"] = "free";
    gf["coaction"] = {{"ok", true}};
    Json gana_ledger = Json::array({0, 1, 0, 0, 0, 0, 0, 0, 0});
    gf["invariants"] = {{"slice_dimensions", ones(9, 0)}, {"ledger_counts", gana_ledger}};
    gf["freeness"] = {{"status", "free"}, {"certificate_degrees", {0}}};
    gf["quotient"] = {{"max_degree", 6}, {"surjective", true}, {"bijective", true}};
    gf["free_basis"] = {{"verified", true}};
    gf["splitting"] = {{"found", true}, {"z", "theta"}};
    out.push_back({"gana-free", "free odd additive action with invariants K[x]", gana_free(), gf});

    Json fr;
    fr["status"] = "free";
    fr["coaction"] = {{"ok", true}};
    Json dims = Json::array();
    Json ledger = Json::array();
    for (int d = 0; d <= 12; ++d) {
        dims.push_back(d % 5 == 0 ? 1 : 0);
        ledger.push_back(d == 5 ? 1 : 0);
    }
    fr["invariants"] = {{"slice_dimensions", dims}, {"ledger_counts", ledger}};
    fr["freeness"] = {{"status", "free"}};
    fr["quotient"] = {{"surjective", true}, {"bijective", true}};
    fr["free_basis"] = {{"verified", true}};
    out.push_back({"frobenius-translation-p5", "height one Frobenius kernel translating K[x] over F_5",
                   frobenius_translation_p5(), fr});
    return out;
}

void diff(const Json& expected, const Json& report, const std::string& ptr, std::vector<std::string>& out)
{
    if (expected.is_object()) {
        if (!report.is_object()) {
            out.push_back((ptr.empty() ? "/" : ptr) + ": expected an object");
            return;
        }
        for (const auto& [key, value] : expected.items()) {
            auto p = ptr + "/" + key;
            if (!report.contains(key))
                out.push_back(p + ": missing");
            else
                diff(value, report[key], p, out);
        }
        return;
    }
    if (expected != report)
        out.push_back(ptr + ": expected " + expected.dump() + ", got " + report.dump());
}

}  // namespace

const std::vector<Preset>& presets()
{
    static const std::vector<Preset> all = make_presets();
    return all;
}

const Preset& find_preset(const std::string& name)
{
    for (const auto& p : presets())
        if (p.name == name)
            return p;
    std::string known;
    for (const auto& p : presets())
        known += (known.empty() ? "" : ", ") + p.name;
    throw InputError("", "unknown preset '" + name + "' (known: " + known + ")");
}

std::vector<std::string> fragment_mismatches(const Json& expected, const Json& report)
{
    std::vector<std::string> out;
    diff(expected, report, "", out);
    return out;
}

PresetRun run_preset(const std::string& name)
{
    const auto& preset = find_preset(name);
    auto problem = parse_problem(nlohmann::json::parse(preset.problem.dump()));
    PresetRun run;
    run.report = run_pipeline(problem);
    run.mismatches = fragment_mismatches(preset.expected, run.report);
    return run;
}

}  // namespace superq
