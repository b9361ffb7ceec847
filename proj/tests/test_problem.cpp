#include "doctest.h"

#include "generators.hpp"
#include "superq/commands.hpp"
#include "superq/parse.hpp"
#include "superq/presets.hpp"
#include "superq/problem.hpp"

using namespace superq;
using nlohmann::json;

namespace {

json trivial_doc()
{
    return json::parse(R"({
      "schema": "superq/1",
      "algebra": {"generators": [{"name": "x", "parity": "even"}]},
      "group": {"kind": "constant", "cyclic": 1},
      "action": {"kind": "group-action", "images": {}}
    })");
}

json preset_doc(const std::string& name) { return json::parse(find_preset(name).problem.dump()); }

std::string pointer_of(const json& doc)
{
    try {
        parse_problem(doc);
    } catch (const InputError& e) {
        return e.pointer();
    }
    return "<accepted>";
}

}  // namespace

TEST_CASE("minimal problem file")
{
    auto p = parse_problem(trivial_doc());
    CHECK(p.field == Field::rationals());
    CHECK(p.space->size() == 1);
    CHECK(p.group->kind() == SupergroupKind::ConstantGroup);
    CHECK(p.action.kind == ActionKind::GroupAction);
    CHECK(p.options.invariants_max_degree == 8);
    CHECK(p.options.freeness_bound == 6);
    CHECK(p.options.quotient_max_degree == 6);
    auto c = build_coaction(p);
    auto x = Polynomial::variable(p.space, "x");
    CHECK(c.coact(x) == c.trivial(x));
}

TEST_CASE("schema violations carry JSON pointers")
{
    auto doc = trivial_doc();
    doc["algebra"]["generators"].push_back({{"name", "th"}, {"parity", "odd"}});
    doc["algebra"]["generators"].push_back({{"name", "th"}, {"parity", "odd"}});
    CHECK(pointer_of(doc) == "/algebra/generators/2/name");

    doc = trivial_doc();
    doc["options"] = {{"freeness_bnd", 3}};
    CHECK(pointer_of(doc) == "/options/freeness_bnd");

    doc = trivial_doc();
    doc["extra"] = 1;
    CHECK(pointer_of(doc) == "/extra");

    doc = trivial_doc();
    doc["schema"] = "superq/0";
    CHECK(pointer_of(doc) == "/schema");

    doc = trivial_doc();
    doc["field"] = {{"kind", "prime"}, {"characteristic", 6}};
    CHECK(pointer_of(doc) == "/field/characteristic");

    doc = trivial_doc();
    doc["group"] = {{"kind", "frobenius-1"}};
    CHECK(pointer_of(doc) == "/group");

    doc = trivial_doc();
    doc["algebra"]["generators"][0]["power"] = 3;
    doc["algebra"]["generators"].push_back({{"name", "th"}, {"parity", "odd"}, {"power", 2}});
    CHECK(pointer_of(doc) == "/algebra/generators/1/power");

    doc = preset_doc("gana-free");
    doc["action"]["images"]["theta"] = "1 +* x";
    CHECK(pointer_of(doc) == "/action/images/theta");
    doc["action"]["images"].erase("theta");
    doc["action"]["images"]["eta"] = "1";
    CHECK(pointer_of(doc) == "/action/images/eta");

    doc = trivial_doc();
    doc["action"]["images"] = {{"7", {{"x", "x"}}}};
    CHECK(pointer_of(doc) == "/action/images/7");

    doc = trivial_doc();
    doc["group"] = {{"kind", "constant"}, {"elements", {"a", "b"}}, {"table", {{"a", "b"}, {"b", "b"}}}};
    CHECK(pointer_of(doc) == "/group/table");

    doc = trivial_doc();
    doc["options"] = {{"normal_subgroup", {"5"}}};
    CHECK(pointer_of(doc) == "/options/normal_subgroup/0");

    CHECK_THROWS_AS(parse_problem_text("{\"schema\": "), InputError);
    CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), IoError);
}

TEST_CASE("semantic failures are coaction errors, not input errors")
{
    auto doc = preset_doc("gana-free");
    doc["action"]["images"]["x"] = "theta";
    auto p = parse_problem(doc);
    try {
        build_coaction(p);
        FAIL("accepted phi^2 != 0");
    } catch (const CoactionError& e) {
        CHECK(e.failure().witness == "x");
    }
    auto r = guarded("describe", [&] { return cmd_describe(p); });
    CHECK(r.exit_code == kExitPropertyFails);
    CHECK(r.report["status"] == "invalid_coaction");
    CHECK(r.report["failure"]["law"] == "phi^2 = 0");
}

TEST_CASE("group specifications")
{
    auto doc = trivial_doc();
    doc["group"] = {{"kind", "constant"}, {"direct_product", {2, 2}}};
    auto p = parse_problem(doc);
    CHECK(p.group->group()->size() == 4);
    CHECK(p.group->group()->index_of("1_0"));

    doc["group"] = {{"kind", "constant"},
                    {"elements", {"e", "a", "b", "c"}},
                    {"table", {{"e", "a", "b", "c"}, {"a", "e", "c", "b"}, {"b", "c", "e", "a"}, {"c", "b", "a", "e"}}}};
    doc["action"] = {{"kind", "group-action"}, {"images", {{"a", {{"x", "-x"}}}, {"c", {{"x", "-x"}}}}}};
    p = parse_problem(doc);
    auto c = build_coaction(p);
    auto x = Polynomial::variable(p.space, "x");
    CHECK(c.act(*p.group->group()->index_of("b"), x) == x);
    CHECK(c.act(*p.group->group()->index_of("a"), x) == -x);

    doc["group"] = {{"kind", "product"}, {"factors", {{{"kind", "odd-additive"}}, {{"kind", "constant"}, {"cyclic", 2}}}}};
    doc["action"] = {{"kind", "explicit"}, {"tau", json::object()}};
    p = parse_problem(doc);
    CHECK(p.group->kind() == SupergroupKind::Product);
    CHECK(order(*p.group) == 4);
    c = build_coaction(p);
    CHECK(c.coact(x) == c.trivial(x));
}

TEST_CASE("worked example parses as an odd additive problem")
{
    auto p = parse_problem(preset_doc("example-3-1"));
    CHECK(p.group_spec.kind == SupergroupKind::OddAdditive);
    CHECK(catalog_id(*p.group->kind()) == "odd-additive");
    REQUIRE(p.witness);
    CHECK(p.witness->algebra->size() == 2);
    CHECK(p.witness->point[1].is_zero());
    CHECK(p.options.invariants_max_degree == 10);
}

TEST_CASE("polynomial strings round-trip")
{
    Rng rng(11);
    for (auto field : {Field::rationals(), Field::prime(5)}) {
        auto pres = Presentation::create(field, {{"x", Parity::Even, 1, {}, -1},
                                                 {"y", Parity::Even, 2, 4u, -1},
                                                 {"theta1", Parity::Odd, 1, {}, -1},
                                                 {"theta2", Parity::Odd, 1, {}, -1}});
        for (int i = 0; i < 200; ++i) {
            auto p = random_polynomial(rng, pres, 5, 6);
            CHECK(parse_polynomial(pres, to_json(p).get<std::string>()) == p);
        }
    }
}

TEST_CASE("coaction images round-trip through explicit actions")
{
    for (const auto& preset : presets()) {
        CAPTURE(preset.name);
        auto p = parse_problem(preset_doc(preset.name));
        auto c = build_coaction(p);
        auto doc = preset_doc(preset.name);
        json tau = json::object();
        for (std::size_t i = 0; i < p.space->size(); ++i)
            tau[p.space->variable(i).name] = json::parse(to_json(c.tau().image(i)).dump());
        doc["action"] = {{"kind", "explicit"}, {"tau", tau}};
        auto q = parse_problem(doc);
        auto d = build_coaction(q);
        REQUIRE(d.kind() == ActionKind::Explicit);
        for (std::size_t i = 0; i < p.space->size(); ++i) {
            // Same generators, different presentation objects: compare by serialized form.
            CHECK(to_json(d.tau().image(i)) == to_json(c.tau().image(i)));
        }
    }
}

TEST_CASE("witness serialization round-trips")
{
    auto p = parse_problem(preset_doc("example-3-1"));
    auto j = to_json(*p.witness, p.space, p.group->presentation());
    auto w = parse_witness(json::parse(j.dump()), p);
    REQUIRE(w.point.size() == p.witness->point.size());
    for (std::size_t i = 0; i < w.point.size(); ++i)
        CHECK(w.point[i].to_string() == p.witness->point[i].to_string());
    CHECK(w.element[0].to_string() == "xi");
    auto wrapped = parse_witness(json{{"witness", json::parse(j.dump())}}, p);
    CHECK(wrapped.element[0].to_string() == "xi");
    CHECK_THROWS_AS(parse_witness(json{{"algebra", {{"generators", json::array()}}}, {"point", {{"q", "1"}}},
                                       {"element", json::object()}},
                                  p),
                    InputError);
}

TEST_CASE("fragment diff")
{
    Json report = Json::parse(R"({"a": 1, "b": {"c": [1, 2], "d": "x"}, "e": true})");
    CHECK(fragment_mismatches(Json::parse(R"({"b": {"c": [1, 2]}})"), report).empty());
    auto m = fragment_mismatches(Json::parse(R"({"b": {"c": [1, 3], "z": 0}, "e": false})"), report);
    REQUIRE(m.size() == 3);
    CHECK(m[0].rfind("/b/c:", 0) == 0);
    CHECK(m[1] == "/b/z: missing");
    CHECK(m[2].rfind("/e:", 0) == 0);
    CHECK_THROWS_AS(find_preset("example-9-9"), InputError);
}

TEST_CASE("presets reproduce their expected fragments")
{
    for (const auto& preset : presets()) {
        CAPTURE(preset.name);
        auto run = run_preset(preset.name);
        CHECK(run.ok());
        for (const auto& m : run.mismatches)
            MESSAGE(m);
    }
}

TEST_CASE("command exit codes")
{
    auto free_problem = parse_problem(preset_doc("gana-free"));
    CHECK(cmd_freeness(free_problem, 2, std::nullopt).exit_code == kExitOk);
    CHECK(cmd_quotient_verify(free_problem, 4).exit_code == kExitOk);

    auto worked = parse_problem(preset_doc("example-3-1"));
    CHECK(cmd_freeness(worked, 3, std::nullopt).exit_code == kExitOk);
    worked.options.assert_free = true;
    auto r = cmd_freeness(worked, 3, std::nullopt);
    CHECK(r.exit_code == kExitPropertyFails);
    CHECK(r.report["status"] == "not_free");
    CHECK(cmd_quotient_verify(worked, 3).exit_code == kExitPropertyFails);

    // Z/2 acting trivially: never certified free and no witness search for constant groups.
    auto doc = trivial_doc();
    doc["group"]["cyclic"] = 2;
    auto trivial = parse_problem(doc);
    r = cmd_freeness(trivial, 3, std::nullopt);
    CHECK(r.exit_code == kExitUnknownAtBound);
    CHECK(r.report["status"] == "unknown_at_bound");

    auto u = cmd_unipotent(ShuffleData::identity(2, 1), 2);
    CHECK(u.exit_code == kExitOk);
    CHECK(u.report["subbialgebras"].size() == 2);

    auto bad = guarded("demo", [] { return cmd_demo("nope"); });
    CHECK(bad.exit_code == kExitInvalidInput);
    CHECK(bad.report["status"] == "invalid_input");
}

TEST_CASE("reports are deterministic")
{
    auto p = parse_problem(preset_doc("gana-free"));
    auto a = cmd_check_coaction(p, 25, 7).report.dump();
    auto b = cmd_check_coaction(p, 25, 7).report.dump();
    CHECK(a == b);
    CHECK(cmd_check_coaction(p, 25, 7).exit_code == kExitOk);
    CHECK(cmd_demo("example-3-1").report.dump() == cmd_demo("example-3-1").report.dump());
    auto table = render_table(cmd_invariants(p, 3).report);
    CHECK(table.find("slice_dimensions: 1 1 1 1") != std::string::npos);
}
