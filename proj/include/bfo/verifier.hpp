#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bfo/engine.hpp"
#include "bfo/lattice.hpp"
#include "bfo/rule.hpp"

namespace bfo {

// Identifiers of the checked claims, as they appear in reports.
namespace invariant {
inline constexpr std::string_view parity = "parity_conservation";
inline constexpr std::string_view fixed_point = "homogeneous_fixed_points";
inline constexpr std::string_view zero_switches = "zero_switches_iff_homogeneous";
inline constexpr std::string_view monotone = "switch_count_non_increasing";
inline constexpr std::string_view strict_decrease = "switch_count_strict_decrease";
inline constexpr std::string_view plateau = "plateau_without_decrease_trigger";
inline constexpr std::string_view d78b = "d78b_decrease_within_two_steps";
inline constexpr std::string_view ordered_block_length = "ordered_block_length_bound";
inline constexpr std::string_view shift = "shift_equivariance";
inline constexpr std::string_view lift = "concat_power_lift";
inline constexpr std::string_view constant_switches = "constant_switch_count_nonhomogeneous";
inline constexpr std::string_view homogeneous_structure = "homogeneous_structure";
} // namespace invariant

struct Violation {
    std::string invariant;
    Configuration witness;
    std::size_t time = 0;
};

// Per-state claims about (x, F(x), F(F(x))): parity conservation, fixed
// points, s = 0 iff homogeneous, monotone and strictly decreasing switch
// counts, the D78b two-step decrease, the ordered-block length bound, shift
// equivariance and the x^3 lift. Meaningful for the corrected rule only.
std::vector<Violation> check_state_invariants(const RuleTable& rule, const Configuration& x);

// check_state_invariants along the trajectory of x until it reaches a fixed
// point or the budget runs out; `time` is the step at which it failed.
std::vector<Violation> check_trajectory_invariants(const RuleTable& rule, const Configuration& x,
                                                   std::size_t budget);

// Flags x when it is not homogeneous and its switch count stays constant
// for n^2 steps. Homogeneous states reached are also scanned for the
// patterns that cannot survive a constant switch count (010101, ordered
// blocks, D56b, D910b, D910rb, D911, D912b).
std::vector<Violation> check_plateau_structure(const RuleTable& rule, const Configuration& x);

enum class SweepMode { full, necklace };

std::string_view to_string(SweepMode mode);
SweepMode parse_sweep_mode(std::string_view name);

struct SweepOptions {
    std::size_t budget = 0;  // 0: default_budget(n)
    SweepMode mode = SweepMode::full;
    unsigned workers = 1;
    std::uint64_t chunk_size = std::uint64_t{1} << 16;
    bool check_invariants = false;
    // Cap on stored witnesses per list; counts are always exact.
    std::size_t witness_limit = 1000;
};

struct Counterexample {
    Configuration config;
    Outcome outcome;
};

struct VerificationReport {
    Variant variant = Variant::corrected;
    std::size_t n = 0;
    SweepMode mode = SweepMode::full;
    std::size_t budget = 0;
    std::uint64_t checked = 0;
    std::uint64_t correct = 0;
    std::uint64_t wrong_class_count = 0;
    std::uint64_t non_converged_count = 0;
    std::uint64_t violation_count = 0;
    std::size_t max_t0 = 0;
    std::optional<Configuration> max_t0_witness;
    // Converged to the wrong homogeneous state or a non-homogeneous fixed point.
    std::vector<Counterexample> wrong_class;
    // Cycles and budget exhaustion.
    std::vector<Counterexample> non_converged;
    std::vector<Violation> violations;

    bool passed() const noexcept {
        return wrong_class_count == 0 && non_converged_count == 0 && violation_count == 0;
    }
};

// Evolves every configuration of odd size n (or one per rotation class) and
// classifies the outcome. The report does not depend on workers or chunk size.
VerificationReport verify_size(const RuleTable& rule, std::size_t n, const SweepOptions& options = {});

struct FoundCounterexample {
    std::size_t n = 0;
    Configuration config;
    Outcome outcome;
};

// Sizes 1, 3, ..., n_max in order; within a size ascending by packed word.
std::vector<FoundCounterexample> search_counterexamples(const RuleTable& rule, std::size_t n_max,
                                                        const SweepOptions& options = {});

nlohmann::json to_json(const VerificationReport& report);

// Re-evolves every witness in a JSON report and compares with what the
// report states. Returns the mismatches as human-readable lines.
std::vector<std::string> replay_report(const RuleTable& rule, const nlohmann::json& report);

} // namespace bfo
