#include "bfo/rule.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <memory>
#include <stdexcept>

#include <gmp.h>

namespace bfo {

namespace {

// Table of active transitions, center at index 4.
constexpr std::array<ActiveTransition, 12> corrected_transitions{{
    {"T1", "*11100***"},
    {"T2", "11100****"},
    {"T3", "*00100***"},
    {"T4", "00100****"},
    {"T5", "***0110**"},
    {"T6", "**0110***"},
    {"T7", "*001010**"},
    {"T8", "**001010*"},
    {"T9", "***11101*"},
    {"T10", "111010***"},
    {"T11", "1110111**"},
    {"T12", "**1110110"},
}};

constexpr std::array<ActiveTransition, 12> original_transitions{{
    corrected_transitions[0],
    corrected_transitions[1],
    corrected_transitions[2],
    corrected_transitions[3],
    corrected_transitions[4],
    corrected_transitions[5],
    {"T7", "**010100*"},
    {"T8", "*010100**"},
    corrected_transitions[8],
    corrected_transitions[9],
    corrected_transitions[10],
    corrected_transitions[11],
}};

std::bitset<neighborhood_count> expand(std::span<const ActiveTransition> transitions) {
    std::bitset<neighborhood_count> out;
    for (unsigned code = 0; code < neighborhood_count; ++code) {
        const Neighborhood nb{static_cast<std::uint16_t>(code)};
        const bool active = std::any_of(transitions.begin(), transitions.end(),
                                        [&](const ActiveTransition& t) { return t.matches(nb); });
        out[code] = active ? !nb.center() : nb.center();
    }
    return out;
}

} // namespace

Neighborhood Neighborhood::parse(std::string_view cells) {
    if (cells.size() != static_cast<std::size_t>(window))
        throw std::invalid_argument("neighborhood must have 9 cells");
    std::uint16_t code = 0;
    for (char c : cells) {
        if (c != '0' && c != '1') throw std::invalid_argument("neighborhood cells must be 0 or 1");
        code = static_cast<std::uint16_t>((code << 1) | (c == '1'));
    }
    return {code};
}

std::string Neighborhood::str() const {
    std::string out(window, '0');
    for (int k = 0; k < window; ++k)
        if (cell(k)) out[static_cast<std::size_t>(k)] = '1';
    return out;
}

bool ActiveTransition::matches(Neighborhood nb) const noexcept {
    for (int k = 0; k < window; ++k) {
        const char p = pattern[static_cast<std::size_t>(k)];
        if (p != '*' && (p == '1') != nb.cell(k)) return false;
    }
    return true;
}

std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::corrected: return "corrected";
    case Variant::original: return "original";
    case Variant::custom: return "custom";
    }
    return "custom";
}

Variant parse_variant(std::string_view name) {
    if (name == "corrected") return Variant::corrected;
    if (name == "original") return Variant::original;
    throw std::invalid_argument("unknown rule variant '" + std::string(name) + "'");
}

std::span<const ActiveTransition> active_transitions(Variant v) {
    switch (v) {
    case Variant::corrected: return corrected_transitions;
    case Variant::original: return original_transitions;
    case Variant::custom: break;
    }
    return {};
}

RuleTable RuleTable::build(Variant v) {
    if (v == Variant::custom) throw std::invalid_argument("custom rules are built from outputs");
    const auto transitions = active_transitions(v);
    for ([[maybe_unused]] const auto& t : transitions) {
        assert(t.pattern.size() == static_cast<std::size_t>(window));
        assert(t.pattern[radius] != '*');
    }
    return RuleTable(expand(transitions), v);
}

RuleTable RuleTable::from_outputs(const std::bitset<neighborhood_count>& outputs) {
    return RuleTable(outputs, Variant::custom);
}

RuleTable RuleTable::identity() {
    return RuleTable(expand({}), Variant::custom);
}

std::string RuleTable::table_string() const {
    std::string out(neighborhood_count, '0');
    for (unsigned k = 0; k < neighborhood_count; ++k)
        if (outputs_[neighborhood_count - 1 - k]) out[k] = '1';
    return out;
}

std::vector<Neighborhood> table_diff(const RuleTable& a, const RuleTable& b) {
    std::vector<Neighborhood> out;
    const auto differ = a.outputs() ^ b.outputs();
    for (unsigned code = 0; code < neighborhood_count; ++code)
        if (differ[code]) out.push_back({static_cast<std::uint16_t>(code)});
    return out;
}

std::vector<Neighborhood> active_neighborhoods(const RuleTable& rule) {
    std::vector<Neighborhood> out;
    for (unsigned code = 0; code < neighborhood_count; ++code) {
        const Neighborhood nb{static_cast<std::uint16_t>(code)};
        if (rule.output(nb) != nb.center()) out.push_back(nb);
    }
    return out;
}

std::string wolfram_number(const RuleTable& rule) {
    // Least significant 64-bit limb first.
    std::array<std::uint64_t, neighborhood_count / 64> limbs{};
    for (unsigned code = 0; code < neighborhood_count; ++code)
        if (rule.output(code)) limbs[code / 64] |= std::uint64_t{1} << (code % 64);

    mpz_t value;
    mpz_init(value);
    mpz_import(value, limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
    std::unique_ptr<char, void (*)(void*)> digits(mpz_get_str(nullptr, 10, value), std::free);
    mpz_clear(value);
    return std::string(digits.get());
}

} // namespace bfo
