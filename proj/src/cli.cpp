#include "bfo/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "bfo/engine.hpp"
#include "bfo/metrics.hpp"
#include "bfo/rule.hpp"
#include "bfo/verifier.hpp"

namespace bfo::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned default_workers() {
    if (const char* env = std::getenv(workers_env)) {
        try {
            const long value = std::stol(env);
            if (value >= 1) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string(workers_env) + " must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Configuration parse_config(const std::string& text) {
    try {
        return Configuration::parse(text);
    } catch (const LatticeError& e) {
        throw UsageError(std::string("--config: ") + e.what());
    }
}

std::string describe(const Outcome& outcome) {
    struct Visitor {
        std::string operator()(const Converged& c) const {
            return "converged to " + c.fixed_point.str() + " at t0=" + std::to_string(c.t0);
        }
        std::string operator()(const Cycle& c) const {
            return "cycle entry=" + std::to_string(c.entry) + " period=" + std::to_string(c.period) +
                   " displacement=" + std::to_string(c.displacement) + " after " +
                   std::to_string(c.shift_period) + " steps";
        }
        std::string operator()(const BudgetExceeded& b) const {
            return "no fixed point within " + std::to_string(b.steps) + " steps";
        }
    };
    return std::visit(Visitor{}, outcome);
}

// Rows needed to show the whole transient (and one period of a cycle).
std::size_t diagram_length(const Outcome& outcome) {
    struct Visitor {
        std::size_t operator()(const Converged& c) const { return c.t0; }
        std::size_t operator()(const Cycle& c) const { return c.entry + c.period; }
        std::size_t operator()(const BudgetExceeded& b) const { return b.steps; }
    };
    return std::visit(Visitor{}, outcome);
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file " + path);
        }
        stream_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

} // namespace

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    auto number = [&](const std::string& s) -> std::size_t {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw UsageError("bad size '" + s + "' in --sizes");
        return value;
    };
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = number(text.substr(0, dots));
        const auto hi = number(text.substr(dots + 2));
        if (lo > hi) throw UsageError("empty size range " + text);
        for (auto n = lo; n <= hi; ++n)
            if (n % 2 == 1) sizes.push_back(n);
    } else {
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) sizes.push_back(number(item));
    }
    if (sizes.empty()) throw UsageError("--sizes selects no odd size");
    for (auto n : sizes)
        if (n % 2 == 0) throw UsageError("size " + std::to_string(n) + " is even");
    return sizes;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Corrected BFO cellular automaton for the parity problem"};
    app.require_subcommand(1);

    std::string rule_name = "corrected";
    std::string config_text;
    std::string format = "text";
    std::string output_path;
    std::string mode_name = "full";
    std::string sizes_text;
    std::string emit = "table";
    std::size_t steps = 0;
    std::size_t budget = 0;
    std::size_t max_size = 13;
    std::uint64_t chunk_size = std::uint64_t{1} << 16;
    unsigned workers = 0;
    bool invariants = false;

    const auto variants = CLI::IsMember({"corrected", "original"});

    auto* evolve_cmd = app.add_subcommand("evolve", "Print the space-time diagram of a configuration");
    evolve_cmd->add_option("--rule", rule_name, "Rule variant")->check(variants);
    evolve_cmd->add_option("--config", config_text, "Initial configuration, e.g. 0001110101001")->required();
    evolve_cmd->add_option("--steps", steps, "Rows to print after t=0 (default: until the outcome)");
    evolve_cmd->add_option("--budget", budget, "Step budget (default 4n^2)");
    evolve_cmd->add_option("--format", format, "text, json or pbm")->check(CLI::IsMember({"text", "json", "pbm"}));
    evolve_cmd->add_option("--output", output_path, "Write to a file instead of stdout");

    auto* annotate_cmd = app.add_subcommand("annotate", "Switches, boxes, domains and ordered blocks");
    annotate_cmd->add_option("--config", config_text, "Configuration")->required();
    annotate_cmd->add_option("--format", format, "text (annotated line then JSON) or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive correctness sweep, one JSON report per size");
    verify_cmd->add_option("--rule", rule_name, "Rule variant")->check(variants);
    verify_cmd->add_option("--sizes", sizes_text, "Sizes, e.g. 1..21 or 13,15")->required();
    verify_cmd->add_option("--mode", mode_name, "full or necklace")->check(CLI::IsMember({"full", "necklace"}));
    verify_cmd->add_option("--workers", workers, "Worker threads (default $BFO_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--budget", budget, "Step budget per trajectory (default 4n^2)");
    verify_cmd->add_option("--chunk", chunk_size, "Configurations per work item")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--invariants", invariants, "Also check the per-state property suite");
    verify_cmd->add_option("--output", output_path, "Write to a file instead of stdout");

    auto* rule_cmd = app.add_subcommand("rule", "Inspect the rule table");
    rule_cmd->add_option("--variant", rule_name, "Rule variant")->check(variants);
    rule_cmd->add_option("--emit", emit, "table, number or diff")->check(CLI::IsMember({"table", "number", "diff"}));

    auto* search_cmd = app.add_subcommand("search", "List misclassified configurations up to a size");
    search_cmd->add_option("--rule", rule_name, "Rule variant")->check(variants);
    search_cmd->add_option("--max-size", max_size, "Largest size searched")->check(CLI::PositiveNumber);
    search_cmd->add_option("--mode", mode_name, "full or necklace")->check(CLI::IsMember({"full", "necklace"}));
    search_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_option("--budget", budget, "Step budget per trajectory (default 4n^2)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const RuleTable rule = RuleTable::build(parse_variant(rule_name));

        if (evolve_cmd->parsed()) {
            const auto x = parse_config(config_text);
            const auto outcome = evolve(rule, x, budget ? budget : default_budget(x.size()));
            const auto rows = evolve_cmd->count("--steps") ? steps : diagram_length(outcome);
            const auto diagram = space_time(rule, x, rows);
            Output sink(output_path, out);
            if (format == "json") {
                *sink << to_json(diagram, rule.variant(), outcome).dump() << '\n';
            } else if (format == "pbm") {
                *sink << render_pbm(diagram);
            } else {
                *sink << render_text(diagram);
                err << describe(outcome) << '\n';
            }
            return exit_ok;
        }

        if (annotate_cmd->parsed()) {
            const auto x = parse_config(config_text);
            const auto report = structure_report(x);
            if (format == "text") {
                out << report.at("annotated").get<std::string>() << '\n';
                out << "s=" << report.at("s") << " boxes=" << report.at("boxes").size()
                    << " ordered_blocks=" << report.at("ordered_blocks").size() << '\n';
            }
            out << report.dump() << '\n';
            return exit_ok;
        }

        if (verify_cmd->parsed() || search_cmd->parsed()) {
            SweepOptions options;
            options.budget = budget;
            options.mode = parse_sweep_mode(mode_name);
            options.workers = workers ? workers : default_workers();
            options.chunk_size = chunk_size;
            options.check_invariants = invariants;

            if (search_cmd->parsed()) {
                const auto found = search_counterexamples(rule, max_size, options);
                for (const auto& c : found)
                    out << nlohmann::json{{"n", c.n}, {"config", c.config.str()}, {"outcome", to_json(c.outcome)}}
                               .dump()
                        << '\n';
                err << found.size() << " counterexample(s) up to n=" << max_size << '\n';
                return found.empty() ? exit_ok : exit_failure;
            }

            const auto sizes = parse_sizes(sizes_text);
            Output sink(output_path, out);
            bool all_passed = true;
            for (auto n : sizes) {
                const auto report = verify_size(rule, n, options);
                *sink << to_json(report).dump() << std::endl;
                all_passed = all_passed && report.passed();
            }
            return all_passed ? exit_ok : exit_failure;
        }

        if (rule_cmd->parsed()) {
            if (emit == "table") {
                out << rule.table_string() << '\n';
            } else if (emit == "number") {
                out << wolfram_number(rule) << '\n';
            } else {
                const auto other_variant = rule.variant() == Variant::corrected ? Variant::original : Variant::corrected;
                const auto other = RuleTable::build(other_variant);
                for (const auto nb : table_diff(rule, other))
                    out << nb.str() << ' ' << to_string(rule.variant()) << '=' << rule.output(nb) << ' '
                        << to_string(other_variant) << '=' << other.output(nb) << '\n';
            }
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace bfo::cli
