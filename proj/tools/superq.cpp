// superq: command-line front end over problem files.

#include <iostream>

#include "CLI11.hpp"
#include "superq/commands.hpp"
#include "superq/presets.hpp"

using namespace superq;

namespace {

struct Globals {
    std::string format = "table";
    std::uint64_t seed = 0;
};

int emit(const CommandResult& res, const Globals& g)
{
    if (g.format == "json")
        std::cout << res.report.dump(2) << "\n";
    else
        std::cout << "superq " << res.report.value("command", "") << "\n" << render_table(res.report);
    if (res.report.contains("message"))
        std::cerr << "superq: " << res.report["message"].get<std::string>() << "\n";
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for finite supergroup actions"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--seed", g.seed, "Seed for randomized checks");

    std::string file;
    auto with_file = [&](CLI::App* sub) {
        sub->add_option("problem", file, "Problem file (JSON)")->required();
        return sub;
    };

    auto* describe = with_file(app.add_subcommand("describe", "Summarize a problem and validate its coaction"));
    auto* check_hopf = with_file(app.add_subcommand("check-hopf", "Check the Hopf axioms of the group"));

    std::size_t samples = 100;
    auto* check_coaction = with_file(app.add_subcommand("check-coaction", "Validate the coaction laws"));
    check_coaction->add_option("--samples", samples, "Random samples")->capture_default_str();

    std::optional<int> max_degree;
    auto* invariants = with_file(app.add_subcommand("invariants", "Invariant slices by degree"));
    invariants->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
    auto* generators = with_file(app.add_subcommand("generators", "Minimal generator ledger"));
    generators->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);

    std::optional<int> bound;
    std::string witness_file;
    auto* freeness = with_file(app.add_subcommand("freeness", "Decide freeness up to a degree bound"));
    freeness->add_option("--bound", bound)->check(CLI::NonNegativeNumber);
    freeness->add_option("--witness", witness_file, "Stabilizer witness file");

    auto* quotient = with_file(app.add_subcommand("quotient-verify", "Certify psi and a free basis"));
    quotient->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);

    ShuffleData shuffle;
    std::vector<int> sigma;
    int unipotent_degree = 3;
    auto* unipotent = app.add_subcommand("unipotent", "Check U_sigma(m|n)");
    unipotent->add_option("--m", shuffle.m)->required()->check(CLI::NonNegativeNumber);
    unipotent->add_option("--n", shuffle.n)->required()->check(CLI::NonNegativeNumber);
    unipotent->add_option("--max-degree", unipotent_degree)->capture_default_str()->check(CLI::NonNegativeNumber);
    unipotent->add_option("--sigma", sigma, "Shuffle values, comma separated")->delimiter(',');

    std::string preset;
    bool emit_problem = false;
    auto* demo = app.add_subcommand("demo", "Run a bundled preset");
    demo->add_option("name", preset)->required();
    demo->add_flag("--emit-problem", emit_problem, "Print the preset problem file instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    auto* sub = app.get_subcommands().front();
    auto name = sub->get_name();
    auto problem = [&] { return load_problem(file); };

    auto res = guarded(name, [&]() -> CommandResult {
        if (sub == describe)
            return cmd_describe(problem());
        if (sub == check_hopf)
            return cmd_check_hopf(problem());
        if (sub == check_coaction)
            return cmd_check_coaction(problem(), samples, g.seed);
        if (sub == invariants) {
            auto p = problem();
            return cmd_invariants(p, max_degree.value_or(p.options.invariants_max_degree));
        }
        if (sub == generators) {
            auto p = problem();
            return cmd_generators(p, max_degree.value_or(p.options.invariants_max_degree));
        }
        if (sub == freeness) {
            auto p = problem();
            std::optional<StabilizerWitness> w;
            if (!witness_file.empty())
                w = load_witness(witness_file, p);
            return cmd_freeness(p, bound.value_or(p.options.freeness_bound), w);
        }
        if (sub == quotient) {
            auto p = problem();
            return cmd_quotient_verify(p, max_degree.value_or(p.options.quotient_max_degree));
        }
        if (sub == unipotent) {
            shuffle.sigma = sigma.empty() ? ShuffleData::identity(shuffle.m, shuffle.n).sigma : sigma;
            try {
                shuffle.validate();
            } catch (const Error& e) {
                throw InputError("--sigma", e.what());
            }
            return cmd_unipotent(shuffle, unipotent_degree);
        }
        if (emit_problem) {
            auto r = find_preset(preset).problem;
            return {r, kExitOk};
        }
        return cmd_demo(preset);
    });

    if (sub == demo && emit_problem && res.exit_code == kExitOk) {
        std::cout << res.report.dump(2) << "\n";
        return kExitOk;
    }
    return emit(res, g);
}
