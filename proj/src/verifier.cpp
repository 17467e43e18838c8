#include "bfo/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "bfo/metrics.hpp"

namespace bfo {

namespace {

constexpr DomainKind decrease_triggers[] = {DomainKind::d56r, DomainKind::d78r, DomainKind::d910r,
                                            DomainKind::d912r};

constexpr DomainKind constant_switch_forbidden[] = {DomainKind::d56b, DomainKind::d910b,
                                                    DomainKind::d910rb, DomainKind::d911,
                                                    DomainKind::d912b};

void flag(std::vector<Violation>& out, std::string_view id, const Configuration& x, std::size_t t = 0) {
    out.push_back({std::string(id), x, t});
}

bool has_decrease_trigger(const Configuration& x, const Configuration& next) {
    return std::any_of(std::begin(decrease_triggers), std::end(decrease_triggers),
                       [&](DomainKind k) { return contains_domain(x, k); }) ||
           merge_events(x, next) > 0;
}

bool contains_pattern(const Configuration& x, std::string_view pattern) {
    for (std::size_t pos = 0; pos < x.size(); ++pos)
        if (matches_at(x, pattern, pos)) return true;
    return false;
}

} // namespace

std::vector<Violation> check_state_invariants(const RuleTable& rule, const Configuration& x) {
    std::vector<Violation> out;
    const auto n = x.size();
    const Configuration y = step(rule, x);
    const Configuration z = step(rule, y);
    const auto sx = switch_count(x);
    const auto sy = switch_count(y);
    const auto sz = switch_count(z);
    const bool homogeneous = is_homogeneous(x);

    if (parity(y) != parity(x)) flag(out, invariant::parity, x);
    if ((y == x) != homogeneous) flag(out, invariant::fixed_point, x);
    if ((sx == 0) != homogeneous) flag(out, invariant::zero_switches, x);
    if (sy > sx) flag(out, invariant::monotone, x);

    const bool trigger = has_decrease_trigger(x, y);
    if (trigger && sy >= sx) flag(out, invariant::strict_decrease, x);
    if (sy == sx && trigger) flag(out, invariant::plateau, x);
    if (contains_domain(x, DomainKind::d78b) && !(sy < sx || sz < sy)) flag(out, invariant::d78b, x);

    if (longest_ordered_block(x, 2 * n + 2) > n + 1) flag(out, invariant::ordered_block_length, x);
    if (step(rule, rotate(x, 1)) != rotate(y, 1)) flag(out, invariant::shift, x);
    if (step(rule, concat_power(x, 3)) != concat_power(y, 3)) flag(out, invariant::lift, x);
    return out;
}

std::vector<Violation> check_trajectory_invariants(const RuleTable& rule, const Configuration& x,
                                                   std::size_t budget) {
    std::vector<Violation> out;
    Configuration current = x;
    for (std::size_t t = 0; t <= budget; ++t) {
        for (auto& v : check_state_invariants(rule, current)) {
            v.time = t;
            out.push_back(std::move(v));
        }
        Configuration next = step(rule, current);
        if (next == current) break;
        current = std::move(next);
    }
    return out;
}

std::vector<Violation> check_plateau_structure(const RuleTable& rule, const Configuration& x) {
    std::vector<Violation> out;
    const auto n = x.size();
    const auto s0 = switch_count(x);
    Configuration current = x;
    bool constant = true;
    for (std::size_t t = 1; t <= n * n; ++t) {
        current = step(rule, current);
        if (switch_count(current) != s0) {
            constant = false;
            break;
        }
    }
    if (constant && !is_homogeneous(x)) flag(out, invariant::constant_switches, x);

    if (is_homogeneous(current)) {
        bool bad = contains_pattern(current, "010101") || !ordered_blocks(current).empty();
        for (auto k : constant_switch_forbidden) bad = bad || contains_domain(current, k);
        if (bad) flag(out, invariant::homogeneous_structure, current);
    }
    return out;
}

std::string_view to_string(SweepMode mode) { return mode == SweepMode::full ? "full" : "necklace"; }

SweepMode parse_sweep_mode(std::string_view name) {
    if (name == "full") return SweepMode::full;
    if (name == "necklace") return SweepMode::necklace;
    throw std::invalid_argument("unknown sweep mode '" + std::string(name) + "'");
}

namespace {

struct ChunkResult {
    std::uint64_t checked = 0;
    std::uint64_t correct = 0;
    std::uint64_t wrong_class_count = 0;
    std::uint64_t non_converged_count = 0;
    std::uint64_t violation_count = 0;
    std::size_t max_t0 = 0;
    std::optional<std::uint64_t> max_t0_witness;
    std::vector<Counterexample> wrong_class;
    std::vector<Counterexample> non_converged;
    std::vector<Violation> violations;
};

template <typename T>
void append_capped(std::vector<T>& into, std::vector<T>&& from, std::size_t limit) {
    for (auto& item : from) {
        if (into.size() >= limit) break;
        into.push_back(std::move(item));
    }
}

ChunkResult sweep_chunk(const RuleTable& rule, const PackedStepper& stepper, unsigned n, std::uint64_t first,
                        std::uint64_t last, std::size_t budget, const SweepOptions& options) {
    ChunkResult r;
    const std::uint64_t ones = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t code = first; code < last; ++code) {
        if (options.mode == SweepMode::necklace && canonical_rotation(code, n) != code) continue;
        ++r.checked;

        std::uint64_t state = code;
        std::size_t t = 0;
        bool converged = false;
        for (;; ++t) {
            const std::uint64_t next = stepper.step(state, n);
            if (next == state) {
                converged = true;
                break;
            }
            if (t == budget) break;
            state = next;
        }

        const bool par = std::popcount(code) & 1;
        const auto x = [&] { return Configuration::from_word(code, n); };
        if (converged && state == (par ? ones : 0)) {
            ++r.correct;
            if (t > r.max_t0 || !r.max_t0_witness) {
                r.max_t0 = t;
                r.max_t0_witness = code;
            }
        } else if (converged) {
            ++r.wrong_class_count;
            if (r.wrong_class.size() < options.witness_limit)
                r.wrong_class.push_back({x(), Converged{Configuration::from_word(state, n), t}});
        } else {
            // The packed loop only knows the budget ran out; replay exactly to
            // tell cycles from slow transients.
            ++r.non_converged_count;
            if (r.non_converged.size() < options.witness_limit)
                r.non_converged.push_back({x(), evolve(rule, x(), budget)});
        }

        if (options.check_invariants) {
            auto found = check_state_invariants(rule, x());
            auto plateau = check_plateau_structure(rule, x());
            found.insert(found.end(), plateau.begin(), plateau.end());
            r.violation_count += found.size();
            append_capped(r.violations, std::move(found), options.witness_limit);
        }
    }
    return r;
}

} // namespace

VerificationReport verify_size(const RuleTable& rule, std::size_t n, const SweepOptions& options) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("verify_size: n must be odd and positive");
    if (n > 40) throw std::invalid_argument("verify_size: exhaustive sweeps are limited to n <= 40");
    if (options.chunk_size == 0) throw std::invalid_argument("verify_size: chunk size must be positive");

    VerificationReport report;
    report.variant = rule.variant();
    report.n = n;
    report.mode = options.mode;
    report.budget = options.budget ? options.budget : default_budget(n);

    const PackedStepper stepper(rule);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t chunks = (total + options.chunk_size - 1) / options.chunk_size;
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::uint64_t> next_chunk{0};

    auto worker = [&] {
        for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
            const std::uint64_t first = c * options.chunk_size;
            const std::uint64_t last = std::min(total, first + options.chunk_size);
            results[c] = sweep_chunk(rule, stepper, static_cast<unsigned>(n), first, last, report.budget, options);
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(chunks)));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();

    // Chunks are merged in code order, so witness lists are ascending and the
    // max_t0 witness is the smallest code attaining the maximum.
    for (auto& r : results) {
        report.checked += r.checked;
        report.correct += r.correct;
        report.wrong_class_count += r.wrong_class_count;
        report.non_converged_count += r.non_converged_count;
        report.violation_count += r.violation_count;
        if (r.max_t0_witness && (!report.max_t0_witness || r.max_t0 > report.max_t0)) {
            report.max_t0 = r.max_t0;
            report.max_t0_witness = Configuration::from_word(*r.max_t0_witness, n);
        }
        append_capped(report.wrong_class, std::move(r.wrong_class), options.witness_limit);
        append_capped(report.non_converged, std::move(r.non_converged), options.witness_limit);
        append_capped(report.violations, std::move(r.violations), options.witness_limit);
    }
    return report;
}

std::vector<FoundCounterexample> search_counterexamples(const RuleTable& rule, std::size_t n_max,
                                                        const SweepOptions& options) {
    std::vector<FoundCounterexample> out;
    for (std::size_t n = 1; n <= n_max; n += 2) {
        auto report = verify_size(rule, n, options);
        std::vector<Counterexample> found = std::move(report.wrong_class);
        found.insert(found.end(), std::make_move_iterator(report.non_converged.begin()),
                     std::make_move_iterator(report.non_converged.end()));
        std::sort(found.begin(), found.end(), [](const Counterexample& a, const Counterexample& b) {
            return a.config.word() < b.config.word();
        });
        for (auto& c : found) out.push_back({n, std::move(c.config), std::move(c.outcome)});
    }
    return out;
}

nlohmann::json to_json(const VerificationReport& report) {
    auto witness_list = [](const std::vector<Counterexample>& list, std::string_view kind) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& c : list)
            out.push_back({{"config", c.config.str()}, {"kind", kind}, {"outcome", to_json(c.outcome)}});
        return out;
    };
    nlohmann::json counterexamples = witness_list(report.wrong_class, "wrong_class");
    for (auto& c : witness_list(report.non_converged, "non_converged")) counterexamples.push_back(std::move(c));

    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"invariant", v.invariant}, {"witness", v.witness.str()}, {"t", v.time}});

    nlohmann::json max_t0 = {{"steps", report.max_t0}, {"witness", nullptr}};
    if (report.max_t0_witness) max_t0["witness"] = report.max_t0_witness->str();

    return {{"rule", std::string(to_string(report.variant))},
            {"n", report.n},
            {"mode", std::string(to_string(report.mode))},
            {"budget", report.budget},
            {"checked", report.checked},
            {"correct", report.correct},
            {"wrong_class", report.wrong_class_count},
            {"non_converged", report.non_converged_count},
            {"max_t0", std::move(max_t0)},
            {"counterexamples", std::move(counterexamples)},
            {"violation_count", report.violation_count},
            {"violations", std::move(violations)},
            {"passed", report.passed()}};
}

std::vector<std::string> replay_report(const RuleTable& rule, const nlohmann::json& report) {
    std::vector<std::string> mismatches;
    const std::size_t budget = report.at("budget").get<std::size_t>();

    const auto& max_t0 = report.at("max_t0");
    if (!max_t0.at("witness").is_null()) {
        const auto x = Configuration::parse(max_t0.at("witness").get<std::string>());
        const auto outcome = evolve(rule, x, budget);
        const auto* done = std::get_if<Converged>(&outcome);
        if (!done || done->t0 != max_t0.at("steps").get<std::size_t>() || !classified_correctly(x, outcome))
            mismatches.push_back("max_t0 witness " + x.str() + " replays to " + to_json(outcome).dump());
    }
    for (const auto& c : report.at("counterexamples")) {
        const auto x = Configuration::parse(c.at("config").get<std::string>());
        const auto outcome = to_json(evolve(rule, x, budget));
        if (outcome != c.at("outcome"))
            mismatches.push_back("counterexample " + x.str() + " replays to " + outcome.dump());
    }
    for (const auto& v : report.at("violations")) {
        const auto x = Configuration::parse(v.at("witness").get<std::string>());
        auto found = check_state_invariants(rule, x);
        auto plateau = check_plateau_structure(rule, x);
        found.insert(found.end(), plateau.begin(), plateau.end());
        const auto id = v.at("invariant").get<std::string>();
        if (std::none_of(found.begin(), found.end(), [&](const Violation& f) { return f.invariant == id; }))
            mismatches.push_back("violation " + id + " on " + x.str() + " does not reproduce");
    }
    return mismatches;
}

} // namespace bfo
