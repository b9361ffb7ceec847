#include "superq/problem.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "superq/parse.hpp"

namespace superq {

namespace {

using nlohmann::json;

std::string child(const std::string& ptr, const std::string& key)
{
    std::string escaped;
    for (char c : key) {
        if (c == '~')
            escaped += "~0";
        else if (c == '/')
            escaped += "~1";
        else
            escaped += c;
    }
    return ptr + "/" + escaped;
}

std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

void expect_object(const json& j, const std::string& ptr, std::initializer_list<const char*> allowed)
{
    if (!j.is_object())
        throw InputError(ptr, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
        if (!known)
            throw InputError(child(ptr, key), "unknown key");
    }
}

const json& require(const json& j, const std::string& ptr, const char* key)
{
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(ptr, std::string("missing key '") + key + "'");
    return *it;
}

std::string get_string(const json& j, const std::string& ptr)
{
    if (!j.is_string())
        throw InputError(ptr, "expected a string");
    return j.get<std::string>();
}

long long get_int(const json& j, const std::string& ptr, long long min)
{
    if (!j.is_number_integer())
        throw InputError(ptr, "expected an integer");
    auto v = j.get<long long>();
    if (v < min)
        throw InputError(ptr, "must be >= " + std::to_string(min));
    return v;
}

const json& get_array(const json& j, const std::string& ptr)
{
    if (!j.is_array())
        throw InputError(ptr, "expected an array");
    return j;
}

Polynomial get_polynomial(const json& j, const std::string& ptr, const PresentationPtr& pres)
{
    if (j.is_number_integer())
        return Polynomial::constant(pres, pres->field().from_int(j.get<long>()));
    try {
        return parse_polynomial(pres, get_string(j, ptr));
    } catch (const ParseError& e) {
        throw InputError(ptr, e.what());
    }
}

Field parse_field(const json& j, const std::string& ptr)
{
    expect_object(j, ptr, {"kind", "characteristic"});
    auto kind = get_string(require(j, ptr, "kind"), child(ptr, "kind"));
    if (kind == "rationals") {
        if (j.contains("characteristic") && get_int(j["characteristic"], child(ptr, "characteristic"), 0) != 0)
            throw InputError(child(ptr, "characteristic"), "rationals have characteristic 0");
        return Field::rationals();
    }
    if (kind == "prime") {
        auto cp = child(ptr, "characteristic");
        auto p = get_int(require(j, ptr, "characteristic"), cp, 2);
        if (!is_prime(static_cast<std::uint64_t>(p)))
            throw InputError(cp, std::to_string(p) + " is not prime");
        return Field::prime(static_cast<std::uint64_t>(p));
    }
    throw InputError(child(ptr, "kind"), "expected \"rationals\" or \"prime\"");
}

std::vector<SuperVariable> parse_generators(const json& j, const std::string& ptr)
{
    std::vector<SuperVariable> vars;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < get_array(j, ptr).size(); ++i) {
        const auto& g = j[i];
        auto gp = child(ptr, i);
        expect_object(g, gp, {"name", "parity", "degree", "power"});
        SuperVariable v;
        v.name = get_string(require(g, gp, "name"), child(gp, "name"));
        if (!seen.insert(v.name).second)
            throw InputError(child(gp, "name"), "generator '" + v.name + "' declared twice");
        auto parity = get_string(require(g, gp, "parity"), child(gp, "parity"));
        if (parity == "even")
            v.parity = Parity::Even;
        else if (parity == "odd")
            v.parity = Parity::Odd;
        else
            throw InputError(child(gp, "parity"), "expected \"even\" or \"odd\"");
        if (g.contains("degree"))
            v.degree = static_cast<int>(get_int(g["degree"], child(gp, "degree"), 1));
        if (g.contains("power")) {
            if (v.parity == Parity::Odd)
                throw InputError(child(gp, "power"), "odd generators cannot carry a power relation");
            v.nilpotency = static_cast<unsigned>(get_int(g["power"], child(gp, "power"), 2));
        }
        vars.push_back(std::move(v));
    }
    return vars;
}

PresentationPtr parse_algebra(const json& j, const std::string& ptr, const Field& field)
{
    expect_object(j, ptr, {"generators"});
    auto gp = child(ptr, "generators");
    auto vars = parse_generators(require(j, ptr, "generators"), gp);
    try {
        return Presentation::create(field, std::move(vars));
    } catch (const Error& e) {
        throw InputError(gp, e.what());
    }
}

FiniteGroup parse_finite_group(const json& j, const std::string& ptr)
{
    int forms = j.contains("cyclic") + j.contains("direct_product") + j.contains("elements");
    if (forms != 1)
        throw InputError(ptr, "constant group needs exactly one of cyclic, direct_product, elements");
    if (j.contains("cyclic"))
        return FiniteGroup::cyclic(static_cast<std::size_t>(get_int(j["cyclic"], child(ptr, "cyclic"), 1)));
    if (j.contains("direct_product")) {
        auto dp = child(ptr, "direct_product");
        const auto& a = get_array(j["direct_product"], dp);
        if (a.empty())
            throw InputError(dp, "needs at least one factor");
        std::optional<FiniteGroup> g;
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto c = FiniteGroup::cyclic(static_cast<std::size_t>(get_int(a[i], child(dp, i), 1)));
            g = g ? FiniteGroup::direct_product(*g, c) : c;
        }
        return *g;
    }
    auto ep = child(ptr, "elements");
    auto tp = child(ptr, "table");
    const auto& elems = get_array(j["elements"], ep);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elems.size(); ++i)
        names.push_back(get_string(elems[i], child(ep, i)));
    const auto& table = get_array(require(j, ptr, "table"), tp);
    auto lookup = [&](const std::string& n, const std::string& p) {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end())
            throw InputError(p, "unknown element '" + n + "'");
        return static_cast<std::size_t>(it - names.begin());
    };
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& row = get_array(table[i], child(tp, i));
        std::vector<std::size_t> r;
        for (std::size_t k = 0; k < row.size(); ++k) {
            auto p = child(child(tp, i), k);
            r.push_back(lookup(get_string(row[k], p), p));
        }
        rows.push_back(std::move(r));
    }
    try {
        return FiniteGroup::from_table(names, rows);
    } catch (const Error& e) {
        throw InputError(tp, e.what());
    }
}

SupergroupSpec parse_group(const json& j, const std::string& ptr)
{
    if (!j.is_object())
        throw InputError(ptr, "expected an object");
    auto kind = get_string(require(j, ptr, "kind"), child(ptr, "kind"));
    if (kind == "odd-additive") {
        expect_object(j, ptr, {"kind"});
        return SupergroupSpec::odd_additive();
    }
    if (kind == "frobenius-1") {
        expect_object(j, ptr, {"kind"});
        return SupergroupSpec::frobenius_kernel();
    }
    if (kind == "constant") {
        expect_object(j, ptr, {"kind", "cyclic", "direct_product", "elements", "table"});
        return SupergroupSpec::constant(parse_finite_group(j, ptr));
    }
    if (kind == "product") {
        expect_object(j, ptr, {"kind", "factors"});
        auto fp = child(ptr, "factors");
        const auto& f = get_array(require(j, ptr, "factors"), fp);
        if (f.size() < 2)
            throw InputError(fp, "a product needs at least two factors");
        std::vector<SupergroupSpec> factors;
        for (std::size_t i = 0; i < f.size(); ++i)
            factors.push_back(parse_group(f[i], child(fp, i)));
        return SupergroupSpec::product(std::move(factors));
    }
    throw InputError(child(ptr, "kind"), "unknown group kind '" + kind + "'");
}

std::size_t require_generator(const PresentationPtr& pres, const std::string& name, const std::string& ptr)
{
    auto i = pres->index_of(name);
    if (!i)
        throw InputError(ptr, "unknown generator '" + name + "'");
    return *i;
}

/// {gen: poly} with unlisted generators taking `fallback(i)`.
std::vector<Polynomial> parse_generator_map(const json& j, const std::string& ptr, const PresentationPtr& keys,
                                            const PresentationPtr& values,
                                            const std::function<Polynomial(std::size_t)>& fallback)
{
    if (!j.is_object())
        throw InputError(ptr, "expected an object");
    std::vector<std::optional<Polynomial>> found(keys->size());
    for (const auto& [name, value] : j.items()) {
        auto p = child(ptr, name);
        found[require_generator(keys, name, p)] = get_polynomial(value, p, values);
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < keys->size(); ++i)
        out.push_back(found[i] ? *found[i] : fallback(i));
    return out;
}

Tensor parse_tensor(const json& j, const std::string& ptr, const PresentationPtr& left, const PresentationPtr& right)
{
    Tensor t(left->field(), {left, right});
    const auto& a = get_array(j, ptr);
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto tp = child(ptr, i);
        if (!a[i].is_array() || a[i].size() != 2)
            throw InputError(tp, "expected a pair [left, right]");
        t += Tensor::pure({get_polynomial(a[i][0], child(tp, 0), left), get_polynomial(a[i][1], child(tp, 1), right)});
    }
    return t;
}

ActionSpec parse_action(const json& j, const std::string& ptr, const PresentationPtr& space,
                        const HopfSuperAlgebra& group)
{
    if (!j.is_object())
        throw InputError(ptr, "expected an object");
    auto kind = get_string(require(j, ptr, "kind"), child(ptr, "kind"));
    ActionSpec spec;
    auto var = [&](std::size_t i) { return Polynomial::from_monomial(space, space->generator(i)); };
    if (kind == "odd-derivation") {
        expect_object(j, ptr, {"kind", "images"});
        if (group.kind() != SupergroupKind::OddAdditive)
            throw InputError(child(ptr, "kind"), "odd-derivation actions need the odd-additive group");
        spec.kind = ActionKind::OddDerivation;
        spec.derivation = parse_generator_map(require(j, ptr, "images"), child(ptr, "images"), space, space,
                                              [&](std::size_t) { return Polynomial(space); });
        return spec;
    }
    if (kind == "group-action") {
        expect_object(j, ptr, {"kind", "images"});
        const auto& g = group.group();
        if (!g)
            throw InputError(child(ptr, "kind"), "group-action needs a constant group");
        spec.kind = ActionKind::GroupAction;
        auto ip = child(ptr, "images");
        const auto& images = require(j, ptr, "images");
        if (!images.is_object())
            throw InputError(ip, "expected an object");
        std::vector<std::optional<std::vector<Polynomial>>> per(g->size());
        for (const auto& [name, value] : images.items()) {
            auto ep = child(ip, name);
            auto e = g->index_of(name);
            if (!e)
                throw InputError(ep, "unknown group element '" + name + "'");
            per[*e] = parse_generator_map(value, ep, space, space, var);
        }
        for (std::size_t e = 0; e < g->size(); ++e) {
            if (per[e]) {
                spec.element_images.push_back(*per[e]);
                continue;
            }
            std::vector<Polynomial> id;
            for (std::size_t i = 0; i < space->size(); ++i)
                id.push_back(var(i));
            spec.element_images.push_back(std::move(id));
        }
        return spec;
    }
    if (kind == "explicit") {
        expect_object(j, ptr, {"kind", "tau"});
        spec.kind = ActionKind::Explicit;
        auto tp = child(ptr, "tau");
        const auto& tau = require(j, ptr, "tau");
        if (!tau.is_object())
            throw InputError(tp, "expected an object");
        const auto& gpres = group.presentation();
        std::vector<std::optional<Tensor>> found(space->size());
        for (const auto& [name, value] : tau.items()) {
            auto p = child(tp, name);
            found[require_generator(space, name, p)] = parse_tensor(value, p, space, gpres);
        }
        for (std::size_t i = 0; i < space->size(); ++i)
            spec.tau.push_back(found[i] ? *found[i] : Tensor::pure({var(i), Polynomial::one(gpres)}));
        return spec;
    }
    throw InputError(child(ptr, "kind"), "unknown action kind '" + kind + "'");
}

ProblemOptions parse_options(const json& j, const std::string& ptr)
{
    expect_object(j, ptr,
                  {"invariants_max_degree", "freeness_bound", "quotient_max_degree", "validate_max_degree",
                   "assert_free", "normal_subgroup"});
    ProblemOptions o;
    auto degree = [&](const char* key, int& out) {
        if (j.contains(key))
            out = static_cast<int>(get_int(j[key], child(ptr, key), 0));
    };
    degree("invariants_max_degree", o.invariants_max_degree);
    degree("freeness_bound", o.freeness_bound);
    degree("quotient_max_degree", o.quotient_max_degree);
    degree("validate_max_degree", o.validate_max_degree);
    if (j.contains("assert_free")) {
        if (!j["assert_free"].is_boolean())
            throw InputError(child(ptr, "assert_free"), "expected a boolean");
        o.assert_free = j["assert_free"].get<bool>();
    }
    if (j.contains("normal_subgroup")) {
        auto np = child(ptr, "normal_subgroup");
        const auto& a = get_array(j["normal_subgroup"], np);
        for (std::size_t i = 0; i < a.size(); ++i)
            o.normal_subgroup.push_back(get_string(a[i], child(np, i)));
    }
    return o;
}

StabilizerWitness parse_witness_at(const json& j, const std::string& ptr, const Problem& problem)
{
    expect_object(j, ptr, {"algebra", "point", "element"});
    auto a = parse_algebra(require(j, ptr, "algebra"), child(ptr, "algebra"), problem.field);
    const auto& gpres = problem.group->presentation();
    auto zero = [&](std::size_t) { return Polynomial(a); };
    StabilizerWitness w{a, {}, {}};
    w.point = parse_generator_map(require(j, ptr, "point"), child(ptr, "point"), problem.space, a, zero);
    w.element = parse_generator_map(require(j, ptr, "element"), child(ptr, "element"), gpres, a, zero);
    return w;
}

json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw InputError("", std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

Problem parse_problem(const json& doc)
{
    expect_object(doc, "",
                  {"schema", "name", "description", "field", "algebra", "group", "action", "options", "witness",
                   "free_basis"});
    auto schema = get_string(require(doc, "", "schema"), "/schema");
    if (schema != kSchema)
        throw InputError("/schema", "unsupported schema '" + schema + "'");
    Problem p;
    if (doc.contains("name"))
        p.name = get_string(doc["name"], "/name");
    if (doc.contains("description"))
        get_string(doc["description"], "/description");
    p.field = doc.contains("field") ? parse_field(doc["field"], "/field") : Field::rationals();
    p.space = parse_algebra(require(doc, "", "algebra"), "/algebra", p.field);
    p.group_spec = parse_group(require(doc, "", "group"), "/group");
    try {
        p.group = std::make_shared<const HopfSuperAlgebra>(build(p.group_spec, p.field));
    } catch (const Error& e) {
        throw InputError("/group", e.what());
    }
    p.action = parse_action(require(doc, "", "action"), "/action", p.space, *p.group);
    if (doc.contains("options"))
        p.options = parse_options(doc["options"], "/options");
    if (doc.contains("witness"))
        p.witness = parse_witness_at(doc["witness"], "/witness", p);
    if (doc.contains("free_basis")) {
        const auto& a = get_array(doc["free_basis"], "/free_basis");
        for (std::size_t i = 0; i < a.size(); ++i)
            p.free_basis.push_back(get_polynomial(a[i], child("/free_basis", i), p.space));
    }
    if (!p.options.normal_subgroup.empty()) {
        const auto& g = p.group->group();
        if (!g)
            throw InputError("/options/normal_subgroup", "needs a constant group");
        for (std::size_t i = 0; i < p.options.normal_subgroup.size(); ++i)
            if (!g->index_of(p.options.normal_subgroup[i]))
                throw InputError(child("/options/normal_subgroup", i),
                                 "unknown group element '" + p.options.normal_subgroup[i] + "'");
    }
    return p;
}

Problem parse_problem_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("", std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(doc);
}

Problem load_problem(const std::filesystem::path& path) { return parse_problem(read_json(path)); }

StabilizerWitness parse_witness(const json& doc, const Problem& problem)
{
    if (doc.is_object() && doc.contains("witness"))
        return parse_witness_at(doc["witness"], "/witness", problem);
    return parse_witness_at(doc, "", problem);
}

StabilizerWitness load_witness(const std::filesystem::path& path, const Problem& problem)
{
    return parse_witness(read_json(path), problem);
}

Coaction build_coaction(const Problem& problem)
{
    switch (problem.action.kind) {
    case ActionKind::OddDerivation:
        try {
            return from_odd_derivation(problem.group, OddDerivation(problem.space, problem.action.derivation));
        } catch (const CoactionError&) {
            throw;
        } catch (const Error& e) {
            throw InputError("/action/images", e.what());
        }
    case ActionKind::GroupAction:
        return from_group_action(problem.group, problem.space, problem.action.element_images);
    case ActionKind::Explicit:
        return from_explicit(problem.group, problem.space, problem.action.tau);
    }
    throw Error("unreachable action kind");
}

Json to_json(const Polynomial& p) { return p.to_string(); }

Json to_json(const Tensor& t)
{
    Json out = Json::array();
    if (t.rank() != 2)
        throw Error("only two-leg tensors serialize");
    std::set<Monomial, std::greater<>> rights;
    for (const auto& [k, c] : t.terms())
        rights.insert(k[1]);
    for (const auto& r : rights)
        out.push_back(Json::array({t.left_factor_of(r).to_string(),
                                   Polynomial::from_monomial(t.legs()[1], r).to_string()}));
    return out;
}

Json to_json(const PresentationPtr& pres)
{
    Json gens = Json::array();
    for (const auto& v : pres->variables()) {
        Json g;
        g["name"] = v.name;
        g["parity"] = to_string(v.parity);
        g["degree"] = v.degree;
        if (v.nilpotency)
            g["power"] = *v.nilpotency;
        if (v.idempotent_family >= 0)
            g["idempotent_family"] = v.idempotent_family;
        gens.push_back(std::move(g));
    }
    Json out;
    out["field"] = pres->field().name();
    out["generators"] = std::move(gens);
    return out;
}

Json to_json(const StabilizerWitness& w, const PresentationPtr& space, const PresentationPtr& group)
{
    Json gens = Json::array();
    for (const auto& v : w.algebra->variables()) {
        Json g{{"name", v.name}, {"parity", to_string(v.parity)}};
        if (v.degree != 1)
            g["degree"] = v.degree;
        if (v.nilpotency)
            g["power"] = *v.nilpotency;
        gens.push_back(std::move(g));
    }
    auto named = [](const PresentationPtr& keys, const std::vector<Polynomial>& values) {
        Json out = Json::object();
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!values[i].is_zero())
                out[keys->variable(i).name] = values[i].to_string();
        return out;
    };
    return {{"algebra", {{"generators", gens}}}, {"point", named(space, w.point)}, {"element", named(group, w.element)}};
}

}  // namespace superq
