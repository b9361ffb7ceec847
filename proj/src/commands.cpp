#include "superq/commands.hpp"

#include <algorithm>
#include <sstream>

#include "superq/freeness.hpp"
#include "superq/invariants.hpp"
#include "superq/presets.hpp"
#include "superq/random.hpp"

namespace superq {

namespace {

Json strings(const std::vector<Polynomial>& ps)
{
    Json out = Json::array();
    for (const auto& p : ps)
        out.push_back(p.to_string());
    return out;
}

Json failure_json(const LawFailure& f) { return {{"law", f.law}, {"witness", f.witness}, {"detail", f.detail}}; }

std::string group_kind(const HopfSuperAlgebra& g) { return g.kind() ? catalog_id(*g.kind()) : "custom"; }

Json validation_json(const Coaction& c, int max_degree)
{
    auto v = validate_to_degree(c, max_degree);
    Json failures = Json::array();
    for (const auto& f : v.failures)
        failures.push_back(failure_json(f));
    return {{"validated_through", max_degree},
            {"monomials_checked", v.monomials_checked},
            {"ok", v.ok()},
            {"failures", failures}};
}

Json invariants_json(const InvariantRing& inv, int max_degree, bool with_bases)
{
    Json dims = Json::array();
    Json slices = Json::array();
    for (int d = 0; d <= max_degree; ++d) {
        dims.push_back(inv.slice(d).size());
        if (with_bases)
            slices.push_back({{"degree", d}, {"dimension", inv.slice(d).size()}, {"basis", strings(inv.slice(d))}});
    }
    Json out{{"max_degree", max_degree}, {"slice_dimensions", dims}};
    if (with_bases)
        out["slices"] = slices;
    return out;
}

Json ledger_json(const GeneratorLedger& ledger, int max_degree, bool with_generators)
{
    Json counts = Json::array();
    Json rows = Json::array();
    for (int d = 0; d <= max_degree; ++d) {
        auto it = ledger.find(d);
        std::size_t n = it == ledger.end() ? 0 : it->second.size();
        counts.push_back(n);
        if (with_generators && n > 0)
            rows.push_back({{"degree", d}, {"count", n}, {"generators", strings(it->second)}});
    }
    Json out{{"ledger_counts", counts}};
    if (with_generators)
        out["ledger"] = rows;
    return out;
}

Json iterated_json(const Problem& problem, const Coaction& c, int max_degree)
{
    const auto& g = *c.group().group();
    std::vector<std::size_t> normal;
    for (const auto& name : problem.options.normal_subgroup)
        normal.push_back(*g.index_of(name));
    auto rep = iterated_invariants_check(c, normal, max_degree);
    Json rows = Json::array();
    for (const auto& d : rep.degrees)
        rows.push_back({{"degree", d.degree},
                        {"normal", d.normal_invariants},
                        {"iterated", d.iterated_invariants},
                        {"full", d.full_invariants},
                        {"equal", d.equal}});
    Json out{{"normal_subgroup", problem.options.normal_subgroup}, {"ok", rep.ok()}, {"degrees", rows}};
    out["witness_degree"] = rep.witness_degree ? Json(*rep.witness_degree) : Json(nullptr);
    return out;
}

Json freeness_json(const FreenessProblem& fp, const FreenessVerdict& v)
{
    const auto& space = fp.coaction.space();
    const auto& gp = fp.coaction.group().presentation();
    Json certs = Json::array();
    Json degrees = Json::array();
    for (const auto& cert : v.certificates) {
        Json terms = Json::array();
        for (const auto& t : cert.terms)
            terms.push_back({{"generator", space->variable(t.generator).name},
                             {"group_monomial", gp->format(t.group_monomial)},
                             {"coefficient", t.coefficient.to_string()}});
        certs.push_back({{"target", cert.target.to_string()},
                         {"degree", cert.degree},
                         {"verified", verify_certificate(fp, cert)},
                         {"terms", terms}});
        degrees.push_back(cert.degree);
    }
    Json out{{"status", to_string(v.status)},
             {"bound", v.bound},
             {"certificate_degrees", degrees},
             {"certificates", certs},
             {"unreached", strings(v.unreached)}};
    if (v.witness) {
        out["witness"] = to_json(*v.witness, space, gp);
        out["witness_confirmed"] = v.status == FreenessStatus::NotFree;
    } else {
        out["witness"] = nullptr;
        out["witness_confirmed"] = false;
    }
    if (v.witness_rejection)
        out["witness_rejection"] = *v.witness_rejection;
    return out;
}

FreenessVerdict run_freeness(const FreenessProblem& fp, int bound, const std::optional<StabilizerWitness>& witness)
{
    bool search = !witness && fp.coaction.group().kind() == SupergroupKind::OddAdditive;
    return decide_freeness(fp, bound, witness, search);
}

Json psi_json(const PsiReport& r)
{
    return {{"max_degree", r.max_degree},
            {"source_dimension", r.source_dimension},
            {"image_dimension", r.image_dimension},
            {"balanced_upper_bound", r.balanced_upper_bound},
            {"surjective", r.surjective},
            {"surjective_through", r.surjective_through},
            {"bijective", r.bijective},
            {"unreached", strings(r.unreached)},
            {"caveat", r.caveat}};
}

Json basis_json(const std::vector<Polynomial>& candidates, const FreeBasisReport& r)
{
    Json rows = Json::array();
    for (const auto& d : r.degrees)
        rows.push_back({{"degree", d.degree}, {"dimension", d.dimension}, {"expected", d.expected}, {"rank", d.rank}});
    Json out{{"candidates", strings(candidates)}, {"verified", r.verified}};
    out["failing_degree"] = r.failing_degree ? Json(*r.failing_degree) : Json(nullptr);
    out["reason"] = r.reason;
    out["degrees"] = rows;
    return out;
}

std::optional<Json> splitting_json(const Coaction& c, int bound)
{
    if (c.group().kind() != SupergroupKind::OddAdditive)
        return std::nullopt;
    auto s = find_gana_splitting(c, bound);
    if (!s)
        return Json{{"found", false}};
    return Json{{"found", true},
                {"z", s->z.to_string()},
                {"f", s->f.to_string()},
                {"phi_f", s->g_unit.to_string()},
                {"phi_f_inverse", s->g_inverse.to_string()}};
}

}  // namespace

Json report_header(const std::string& command)
{
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

CommandResult cmd_describe(const Problem& problem)
{
    auto c = build_coaction(problem);
    auto r = report_header("describe");
    r["status"] = "ok";
    r["name"] = problem.name;
    r["field"] = problem.field.name();
    r["algebra"] = to_json(problem.space)["generators"];
    const auto& g = *problem.group;
    r["group"] = {{"kind", group_kind(g)},
                  {"label", g.label()},
                  {"order", order(g)},
                  {"generators", to_json(g.presentation())["generators"]}};
    Json tau = Json::object();
    for (std::size_t i = 0; i < problem.space->size(); ++i)
        tau[problem.space->variable(i).name] = to_json(c.tau().image(i));
    r["action"] = {{"kind", to_string(c.kind())}, {"tau", tau}};
    r["coaction"] = validation_json(c, problem.options.validate_max_degree);
    if (!r["coaction"]["ok"].get<bool>())
        return {r, kExitPropertyFails};
    return {r, kExitOk};
}

CommandResult cmd_check_hopf(const Problem& problem)
{
    const auto& g = *problem.group;
    auto rep = check_hopf_axioms(g);
    auto r = report_header("check-hopf");
    r["status"] = rep.ok() ? "ok" : "failed";
    r["group"] = {{"kind", group_kind(g)}, {"label", g.label()}, {"order", order(g)}};
    r["basis_elements_checked"] = rep.basis_elements_checked;
    Json failures = Json::array();
    for (const auto& f : rep.failures)
        failures.push_back({{"identity", f.identity}, {"witness", f.witness}, {"detail", f.detail}});
    r["failures"] = failures;
    return {r, rep.ok() ? kExitOk : kExitPropertyFails};
}

CommandResult cmd_check_coaction(const Problem& problem, std::size_t samples, std::uint64_t seed)
{
    auto c = build_coaction(problem);
    auto r = report_header("check-coaction");
    auto validation = validation_json(c, problem.options.validate_max_degree);

    const auto& space = c.space();
    const auto& group = c.group();
    Rng rng(seed);
    int sample_degree = std::min(problem.options.validate_max_degree, 3);
    Json sample_failures = Json::array();
    for (std::size_t i = 0; i < samples; ++i) {
        auto p = random_polynomial(rng, space, sample_degree, 4);
        auto q = random_polynomial(rng, space, sample_degree, 4);
        auto tp = c.coact(p);
        if (!(c.coact(p * q) == tp * c.coact(q)))
            sample_failures.push_back({{"law", "multiplicative"}, {"sample", i}, {"p", p.to_string()}, {"q", q.to_string()}});
        if (!(apply_on_leg(tp, 1, group.counit_map()).to_polynomial() == p))
            sample_failures.push_back({{"law", "counit"}, {"sample", i}, {"p", p.to_string()}});
        if (!(apply_on_leg(tp, 0, c.tau()) == apply_on_leg(tp, 1, group.comultiplication())))
            sample_failures.push_back({{"law", "coassociativity"}, {"sample", i}, {"p", p.to_string()}});
    }
    bool ok = validation["ok"].get<bool>() && sample_failures.empty();
    r["status"] = ok ? "ok" : "failed";
    r["action"] = to_string(c.kind());
    r["validation"] = validation;
    r["samples"] = {{"count", samples}, {"seed", seed}, {"max_degree", sample_degree}, {"failures", sample_failures}};
    return {r, ok ? kExitOk : kExitPropertyFails};
}

CommandResult cmd_invariants(const Problem& problem, int max_degree)
{
    auto c = build_coaction(problem);
    InvariantRing inv(c, max_degree);
    auto r = report_header("invariants");
    r["status"] = "ok";
    r.update(invariants_json(inv, max_degree, true));
    int code = kExitOk;
    if (!problem.options.normal_subgroup.empty()) {
        r["iterated"] = iterated_json(problem, c, max_degree);
        if (!r["iterated"]["ok"].get<bool>()) {
            r["status"] = "failed";
            code = kExitPropertyFails;
        }
    }
    return {r, code};
}

CommandResult cmd_generators(const Problem& problem, int max_degree)
{
    auto c = build_coaction(problem);
    auto ledger = minimal_generators(c, max_degree);
    auto r = report_header("generators");
    r["status"] = "ok";
    r["max_degree"] = max_degree;
    r.update(ledger_json(ledger, max_degree, true));
    return {r, kExitOk};
}

CommandResult cmd_freeness(const Problem& problem, int bound, const std::optional<StabilizerWitness>& witness)
{
    auto c = build_coaction(problem);
    FreenessProblem fp(c);
    auto v = run_freeness(fp, bound, witness ? witness : problem.witness);
    auto r = report_header("freeness");
    r.update(freeness_json(fp, v));
    r["assert_free"] = problem.options.assert_free;
    int code = kExitOk;
    if (v.status == FreenessStatus::UnknownAtBound)
        code = kExitUnknownAtBound;
    else if (v.status == FreenessStatus::NotFree && problem.options.assert_free)
        code = kExitPropertyFails;
    return {r, code};
}

CommandResult cmd_quotient_verify(const Problem& problem, int max_degree)
{
    auto c = build_coaction(problem);
    InvariantRing inv(c, max_degree);
    auto psi = psi_certify(c, inv, max_degree);
    auto r = report_header("quotient-verify");
    bool ok = psi.surjective && psi.bijective;
    r["max_degree"] = max_degree;
    r["psi"] = psi_json(psi);
    if (!problem.free_basis.empty()) {
        auto fb = verify_free_basis(c, inv, problem.free_basis, max_degree);
        r["free_basis"] = basis_json(problem.free_basis, fb);
        ok = ok && fb.verified;
    }
    if (auto s = splitting_json(c, max_degree))
        r["splitting"] = *s;
    r["status"] = ok ? "certified" : "not_certified";
    return {r, ok ? kExitOk : kExitPropertyFails};
}

CommandResult cmd_unipotent(const ShuffleData& shuffle, int max_degree)
{
    auto u = build_u_sigma(shuffle);
    const auto& pres = u.hopf.presentation();
    auto r = report_header("unipotent");
    r["m"] = shuffle.m;
    r["n"] = shuffle.n;
    r["sigma"] = shuffle.sigma;
    r["max_degree"] = max_degree;
    Json gens = Json::array();
    for (std::size_t v = 0; v < pres->size(); ++v)
        gens.push_back({{"name", pres->variable(v).name},
                        {"entry", {u.entries[v].first, u.entries[v].second}},
                        {"parity", to_string(pres->variable(v).parity)},
                        {"gap", u.gap(v)}});
    r["generators"] = gens;

    auto axioms = check_hopf_axioms(u.hopf, max_degree);
    Json af = Json::array();
    for (const auto& f : axioms.failures)
        af.push_back({{"identity", f.identity}, {"witness", f.witness}, {"detail", f.detail}});
    r["hopf_axioms"] = {{"basis_elements_checked", axioms.basis_elements_checked}, {"ok", axioms.ok()}, {"failures", af}};

    auto filt = filtration_check(u, max_degree);
    Json ff = Json::array();
    for (const auto& f : filt.failures)
        ff.push_back({{"monomial", f.monomial}, {"left_factor", f.left_factor}});
    r["filtration"] = {{"monomials_checked", filt.monomials_checked}, {"ok", filt.ok()}, {"failures", ff}};

    bool ok = axioms.ok() && filt.ok();
    Json levels = Json::array();
    for (int k = 1; k < shuffle.size(); ++k) {
        auto b = bk_subbialgebra_check(u, k);
        ok = ok && b.ok();
        levels.push_back({{"k", k}, {"generators", b.generators}, {"ok", b.ok()}, {"failures", b.failures}});
    }
    r["subbialgebras"] = levels;
    r["status"] = ok ? "ok" : "failed";
    return {r, ok ? kExitOk : kExitPropertyFails};
}

Json run_pipeline(const Problem& problem)
{
    const auto& o = problem.options;
    auto c = build_coaction(problem);
    Json r;
    r["coaction"] = validation_json(c, o.validate_max_degree);

    FreenessProblem fp(c);
    auto v = run_freeness(fp, o.freeness_bound, problem.witness);
    bool free = v.status == FreenessStatus::Free;
    int depth = std::max(o.invariants_max_degree, free ? o.quotient_max_degree : 0);
    InvariantRing inv(c, depth);

    auto invariants = invariants_json(inv, o.invariants_max_degree, false);
    invariants.update(ledger_json(minimal_generators(c, o.invariants_max_degree), o.invariants_max_degree, false));
    r["invariants"] = invariants;
    if (!o.normal_subgroup.empty())
        r["iterated"] = iterated_json(problem, c, o.invariants_max_degree);
    r["freeness"] = freeness_json(fp, v);
    if (free) {
        r["quotient"] = psi_json(psi_certify(c, inv, o.quotient_max_degree));
        if (!problem.free_basis.empty())
            r["free_basis"] = basis_json(problem.free_basis,
                                         verify_free_basis(c, inv, problem.free_basis, o.quotient_max_degree));
        if (auto s = splitting_json(c, o.quotient_max_degree))
            r["splitting"] = *s;
    }
    r["status"] = to_string(v.status);
    return r;
}

CommandResult cmd_demo(const std::string& name)
{
    auto run = run_preset(name);
    auto r = report_header("demo");
    r["preset"] = name;
    r["status"] = run.report["status"];
    for (const auto& [key, value] : run.report.items())
        if (key != "status")
            r[key] = value;
    r["expected"] = {{"matched", run.ok()}, {"mismatches", run.mismatches}};
    return {r, run.ok() ? kExitOk : kExitPropertyFails};
}

CommandResult guarded(const std::string& command, const std::function<CommandResult()>& body)
{
    auto fail = [&](const char* status, const std::string& message, int code) {
        auto r = report_header(command);
        r["status"] = status;
        r["message"] = message;
        return CommandResult{r, code};
    };
    try {
        return body();
    } catch (const InputError& e) {
        auto res = fail("invalid_input", e.what(), kExitInvalidInput);
        res.report["pointer"] = e.pointer().empty() ? "/" : e.pointer();
        return res;
    } catch (const IoError& e) {
        return fail("io_error", e.what(), kExitIo);
    } catch (const CoactionError& e) {
        auto res = fail("invalid_coaction", e.what(), kExitPropertyFails);
        res.report["failure"] = failure_json(e.failure());
        return res;
    } catch (const Error& e) {
        return fail("error", e.what(), kExitPropertyFails);
    }
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string cell(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "-";
    if (j.is_array() && std::all_of(j.begin(), j.end(), is_scalar)) {
        std::string s;
        for (std::size_t i = 0; i < j.size(); ++i)
            s += (i ? (j[i].is_string() ? ", " : " ") : "") + cell(j[i]);
        return s.empty() ? "-" : s;
    }
    return j.dump();
}

bool tabular(const Json& j)
{
    if (!j.is_array() || j.empty())
        return false;
    for (const auto& row : j) {
        if (!row.is_object())
            return false;
        for (const auto& [k, v] : row.items())
            if (v.is_object() || (v.is_array() && !std::all_of(v.begin(), v.end(), is_scalar)))
                return false;
    }
    return true;
}

void render(const Json& j, const std::string& indent, std::ostringstream& out)
{
    for (const auto& [key, value] : j.items()) {
        if (key == "schema")
            continue;
        if (value.is_object()) {
            out << indent << key << ":\n";
            render(value, indent + "  ", out);
        } else if (tabular(value)) {
            std::vector<std::string> cols;
            for (const auto& row : value)
                for (const auto& [k, v] : row.items())
                    if (std::find(cols.begin(), cols.end(), k) == cols.end())
                        cols.push_back(k);
            std::vector<std::size_t> width;
            for (const auto& c : cols)
                width.push_back(c.size());
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : value) {
                std::vector<std::string> line;
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    line.push_back(row.contains(cols[i]) ? cell(row[cols[i]]) : "");
                    width[i] = std::max(width[i], line.back().size());
                }
                cells.push_back(std::move(line));
            }
            out << indent << key << ":\n";
            auto emit = [&](const std::vector<std::string>& line) {
                out << indent << " ";
                for (std::size_t i = 0; i < line.size(); ++i) {
                    out << " " << line[i];
                    if (i + 1 < line.size())
                        out << std::string(width[i] - line[i].size(), ' ');
                }
                out << "\n";
            };
            emit(cols);
            for (const auto& line : cells)
                emit(line);
        } else if (value.is_array() && !std::all_of(value.begin(), value.end(), is_scalar)) {
            out << indent << key << ":\n";
            for (const auto& item : value)
                if (item.is_object()) {
                    out << indent << "  -\n";
                    render(item, indent + "    ", out);
                } else {
                    out << indent << "  - " << cell(item) << "\n";
                }
        } else {
            out << indent << key << ": " << cell(value) << "\n";
        }
    }
}

}  // namespace

std::string render_table(const Json& report)
{
    std::ostringstream out;
    render(report, "", out);
    return out.str();
}

}  // namespace superq
