#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bfo {

inline constexpr int radius = 4;
inline constexpr int window = 2 * radius + 1;
inline constexpr int neighborhood_count = 1 << window;

// Nine cells x_{i-4}..x_{i+4}; cell 0 is the most significant bit of the code.
struct Neighborhood {
    std::uint16_t code = 0;

    static Neighborhood parse(std::string_view cells);

    bool cell(int k) const noexcept { return (code >> (window - 1 - k)) & 1u; }
    bool center() const noexcept { return cell(radius); }
    std::string str() const;

    friend auto operator<=>(const Neighborhood&, const Neighborhood&) = default;
};

// One row of the active-transition table. pattern uses '0', '1' and '*' for
// don't-care; the center is always fixed and a matching neighborhood flips it.
struct ActiveTransition {
    std::string_view id;
    std::string_view pattern;

    bool matches(Neighborhood nb) const noexcept;
};

enum class Variant { corrected, original, custom };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

// T1..T12 of the given variant. The corrected and original rules differ only
// in T7 and T8, which are left-right mirror images of each other.
std::span<const ActiveTransition> active_transitions(Variant v);

class RuleTable {
public:
    static RuleTable build(Variant v);
    static RuleTable from_outputs(const std::bitset<neighborhood_count>& outputs);
    // Output equals the center bit everywhere.
    static RuleTable identity();

    Variant variant() const noexcept { return variant_; }
    bool output(Neighborhood nb) const noexcept { return outputs_[nb.code]; }
    bool output(unsigned code) const noexcept { return outputs_[code]; }
    const std::bitset<neighborhood_count>& outputs() const noexcept { return outputs_; }

    // 512 characters, neighborhood 111111111 first and 000000000 last.
    std::string table_string() const;

    friend bool operator==(const RuleTable& a, const RuleTable& b) { return a.outputs_ == b.outputs_; }

private:
    RuleTable(std::bitset<neighborhood_count> outputs, Variant v) : outputs_(outputs), variant_(v) {}

    std::bitset<neighborhood_count> outputs_;
    Variant variant_;
};

// Neighborhoods on which a and b disagree, ascending.
std::vector<Neighborhood> table_diff(const RuleTable& a, const RuleTable& b);

// Neighborhoods whose output differs from their center bit, ascending.
std::vector<Neighborhood> active_neighborhoods(const RuleTable& rule);

// Base-10 rendering of the rule as a 512-bit integer in Wolfram order
// (bit k holds the output of neighborhood code k).
std::string wolfram_number(const RuleTable& rule);

} // namespace bfo
