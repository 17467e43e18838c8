#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bfo/metrics.hpp"
#include "bfo/verifier.hpp"
#include "reference.hpp"

using namespace bfo;

namespace {

const RuleTable corrected = RuleTable::build(Variant::corrected);
const RuleTable original = RuleTable::build(Variant::original);

Configuration cfg(std::string_view s) { return Configuration::parse(s); }

bool is_rotation_of(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (rotate(a, static_cast<std::ptrdiff_t>(k)) == b) return true;
    return false;
}

} // namespace

TEST_CASE("corrected rule classifies every configuration up to n = 15") {
    for (std::size_t n = 1; n <= 15; n += 2) {
        CAPTURE(n);
        const auto report = verify_size(corrected, n);
        CHECK(report.checked == (std::uint64_t{1} << n));
        CHECK(report.correct == report.checked);
        CHECK(report.passed());
        CHECK(report.budget == default_budget(n));
    }
    const auto r13 = verify_size(corrected, 13);
    REQUIRE(r13.max_t0_witness);
    CHECK(r13.max_t0 >= 13);
    CHECK(std::get<Converged>(evolve(corrected, *r13.max_t0_witness)).t0 == r13.max_t0);
}

TEST_CASE("trivial and invalid sizes") {
    const auto r1 = verify_size(corrected, 1);
    CHECK(r1.checked == 2);
    CHECK(r1.max_t0 == 0);
    CHECK(r1.passed());
    CHECK_THROWS_AS(verify_size(corrected, 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_size(corrected, 41), std::invalid_argument);
}

TEST_CASE("original rule fails on the faulty configuration") {
    SweepOptions options;
    options.witness_limit = 1u << 13;
    const auto report = verify_size(original, 13, options);
    CHECK_FALSE(report.passed());
    const auto x = cfg(reference::faulty_config);
    CHECK(std::any_of(report.non_converged.begin(), report.non_converged.end(),
                      [&](const Counterexample& c) { return c.config == x; }));
    // Every rotation fails too.
    const auto count = std::count_if(report.non_converged.begin(), report.non_converged.end(),
                                     [&](const Counterexample& c) { return is_rotation_of(c.config, x); });
    CHECK(count == 13);
    CHECK(report.non_converged_count == report.non_converged.size());
}

TEST_CASE("witness lists are capped but counts stay exact") {
    SweepOptions options;
    options.witness_limit = 2;
    const auto report = verify_size(original, 13, options);
    CHECK(report.non_converged.size() <= 2);
    CHECK(report.non_converged_count >= 13);
}

TEST_CASE("counterexample search") {
    const auto found = search_counterexamples(original, 13);
    REQUIRE_FALSE(found.empty());
    const auto x = cfg(reference::faulty_config);
    CHECK(std::any_of(found.begin(), found.end(), [&](const FoundCounterexample& f) {
        return f.n == 13 && is_rotation_of(f.config, x) && std::holds_alternative<Cycle>(f.outcome);
    }));
    CHECK(std::is_sorted(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.n < b.n; }));

    CHECK(search_counterexamples(corrected, 15).empty());
}

TEST_CASE("state invariants on the reference trajectories") {
    for (auto row : reference::switch_rows) CHECK(check_state_invariants(corrected, cfg(row)).empty());
    for (auto row : reference::faulty_corrected) CHECK(check_state_invariants(corrected, cfg(row)).empty());
    CHECK(check_trajectory_invariants(corrected, cfg(reference::switch_sample), 1000).empty());
    CHECK(check_trajectory_invariants(corrected, cfg(reference::faulty_config), 1000).empty());
}

TEST_CASE("the original rule stalls with constant switch count") {
    const auto x = cfg(reference::faulty_config);
    const auto plateau = check_plateau_structure(original, x);
    CHECK(std::any_of(plateau.begin(), plateau.end(),
                      [](const Violation& v) { return v.invariant == invariant::constant_switches; }));
    CHECK(check_plateau_structure(corrected, x).empty());

    // No decrease trigger is present (1110101 is followed by 00), so the
    // per-state checks have nothing to object to; only the plateau check sees it.
    CHECK(check_state_invariants(original, x).empty());
}

TEST_CASE("invariant sweep finds nothing for the corrected rule") {
    SweepOptions options;
    options.check_invariants = true;
    for (std::size_t n = 1; n <= 13; n += 2) {
        const auto report = verify_size(corrected, n, options);
        CHECK(report.violation_count == 0);
        CHECK(report.passed());
    }
}

TEST_CASE("reports do not depend on workers or chunking") {
    SweepOptions base;
    base.check_invariants = true;
    const auto reference = to_json(verify_size(original, 15, base)).dump();
    for (unsigned workers : {2u, 3u, 8u})
        for (std::uint64_t chunk : {std::uint64_t{64}, std::uint64_t{777}, std::uint64_t{1} << 20}) {
            auto options = base;
            options.workers = workers;
            options.chunk_size = chunk;
            CHECK(to_json(verify_size(original, 15, options)).dump() == reference);
        }
}

TEST_CASE("necklace mode agrees with the full sweep") {
    SweepOptions necklace;
    necklace.mode = SweepMode::necklace;
    for (const auto* rule : {&corrected, &original})
        for (std::size_t n = 3; n <= 15; n += 2) {
            const auto full = verify_size(*rule, n);
            const auto reduced = verify_size(*rule, n, necklace);
            CHECK(reduced.checked < full.checked);
            CHECK(reduced.passed() == full.passed());
            CHECK(reduced.max_t0 == full.max_t0);
            // Failures come in whole rotation classes.
            CHECK((reduced.non_converged_count == 0) == (full.non_converged_count == 0));
            CHECK((reduced.wrong_class_count == 0) == (full.wrong_class_count == 0));
        }
    CHECK(parse_sweep_mode("necklace") == SweepMode::necklace);
    CHECK(to_string(SweepMode::full) == "full");
    CHECK_THROWS_AS(parse_sweep_mode("bracelet"), std::invalid_argument);
}

TEST_CASE("json report and replay") {
    SweepOptions options;
    options.witness_limit = 20;
    const auto report = to_json(verify_size(original, 13, options));
    CHECK(report.at("rule") == "original");
    CHECK(report.at("n") == 13);
    CHECK(report.at("checked") == 8192);
    CHECK(report.at("passed") == false);
    CHECK(report.at("counterexamples").size() >= 1);
    CHECK(replay_report(original, report).empty());

    // Replaying against the other rule must disagree.
    CHECK_FALSE(replay_report(corrected, report).empty());

    auto tampered = report;
    tampered["max_t0"]["steps"] = report.at("max_t0").at("steps").get<std::size_t>() + 1;
    CHECK(replay_report(original, tampered).size() == 1);

    const auto good = to_json(verify_size(corrected, 11));
    CHECK(good.at("passed") == true);
    CHECK(good.at("counterexamples").empty());
    CHECK(replay_report(corrected, good).empty());
}
