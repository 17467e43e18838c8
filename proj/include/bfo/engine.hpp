#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bfo/lattice.hpp"
#include "bfo/rule.hpp"

namespace bfo {

__extension__ using uint128 = unsigned __int128;

// Synchronous update of every cell from its radius-4 cyclic window.
Configuration step(const RuleTable& rule, const Configuration& x);

// Same map as step() on packed words of length 1..max_length. Used by the
// exhaustive sweeps, where building a Configuration per step would dominate.
class PackedStepper {
public:
    static constexpr unsigned max_length = 42;

    explicit PackedStepper(const RuleTable& rule);

    std::uint64_t step(std::uint64_t x, unsigned n) const noexcept {
        const unsigned base = lead(n);
        const auto tiled = tile(x, n, base);
        std::uint64_t out = 0;
        for (unsigned i = 0; i < n; ++i) {
            const auto w = static_cast<unsigned>(tiled >> (i + base - radius)) & 0x1ffu;
            out |= std::uint64_t{lut_[w]} << i;
        }
        return out;
    }

private:
    // Smallest multiple of n that is >= radius.
    static constexpr unsigned lead(unsigned n) noexcept { return n * ((radius + n - 1) / n); }

    // x repeated so that bit (i + base - 4 + k) is cell (i - 4 + k) mod n for
    // every cell i and window offset k.
    static uint128 tile(std::uint64_t x, unsigned n, unsigned base) noexcept {
        const unsigned reps = (n + base + radius + n - 1) / n;
        uint128 t = 0;
        for (unsigned r = 0; r < reps; ++r) t |= static_cast<uint128>(x) << (r * n);
        return t;
    }

    // Indexed by the window with cell i-4 in bit 0, i.e. the bit-reversed
    // neighborhood code.
    std::array<std::uint8_t, neighborhood_count> lut_{};
};

struct Converged {
    Configuration fixed_point;
    std::size_t t0 = 0;
};

// F^{entry+period}(x) == F^{entry}(x). The first state of the cycle reappears
// rotated by `displacement` cells after `shift_period` steps; for a cycle
// without any spatial drift that is displacement 0 after the full period.
struct Cycle {
    std::size_t entry = 0;
    std::size_t period = 0;
    std::size_t shift_period = 0;
    std::size_t displacement = 0;
};

struct BudgetExceeded {
    std::size_t steps = 0;
};

using Outcome = std::variant<Converged, Cycle, BudgetExceeded>;

inline std::size_t default_budget(std::size_t n) { return 4 * n * n; }

Outcome evolve(const RuleTable& rule, const Configuration& x, std::size_t budget);
inline Outcome evolve(const RuleTable& rule, const Configuration& x) {
    return evolve(rule, x, default_budget(x.size()));
}

// True iff the trajectory settled on the homogeneous state of x's parity.
bool classified_correctly(const Configuration& x, const Outcome& outcome);

struct SpaceTimeDiagram {
    std::vector<Configuration> rows;
};

SpaceTimeDiagram space_time(const RuleTable& rule, const Configuration& x, std::size_t steps);

std::string render_text(const SpaceTimeDiagram& diagram);
// Plain PBM (P1); a live cell is black.
std::string render_pbm(const SpaceTimeDiagram& diagram);

nlohmann::json to_json(const Outcome& outcome);
nlohmann::json to_json(const SpaceTimeDiagram& diagram, Variant variant, const Outcome& outcome);

} // namespace bfo
