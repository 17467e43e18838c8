#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bfo/lattice.hpp"

namespace bfo {

// True iff x_{pos}..x_{pos+|pattern|-1} (cyclic) spells pattern.
bool matches_at(const Configuration& x, std::string_view pattern, std::size_t pos);

// A box is the pair x_i x_{i+1} = 01 with x_{i-1} = 1 and x_{i+2} x_{i+3} = 00.
// Returns every such i, ascending.
std::vector<std::size_t> find_boxes(const Configuration& x);

enum class SwitchKind { regular, block };

// Switch at position i sits between cells i and i+1 (mod n).
struct Switch {
    std::size_t position = 0;
    SwitchKind kind = SwitchKind::regular;

    friend bool operator==(const Switch&, const Switch&) = default;
};

struct SwitchReport {
    std::vector<Switch> switches;
    std::vector<std::size_t> boxes;

    std::size_t count() const noexcept { return switches.size(); }
};

SwitchReport switches(const Configuration& x);
inline std::size_t switch_count(const Configuration& x) { return switches(x).count(); }

enum class DomainKind {
    d12, d34, d56r, d56b, d78r, d78b, d910r, d910b, d910rb, d911, d912r, d912b,
};

inline constexpr std::size_t domain_kind_count = 12;

std::string_view to_string(DomainKind kind);
// Defining cells of the domain, starting at the hit position.
std::string_view domain_pattern(DomainKind kind);

struct DomainHit {
    DomainKind kind;
    std::size_t position = 0;

    friend bool operator==(const DomainHit&, const DomainHit&) = default;
};

bool has_domain_at(const Configuration& x, DomainKind kind, std::size_t pos);

// All hits of all kinds, ordered by position then kind. Overlaps are kept.
std::vector<DomainHit> find_domains(const Configuration& x);

bool contains_domain(const Configuration& x, DomainKind kind);

// Sites where T_{1,2} or T_{3,4} fills a 00 pair that is immediately followed
// by a 1 which survives the step, so two blocks of 1s join. `next` must be the
// successor of x under the corrected rule.
std::size_t merge_events(const Configuration& x, const Configuration& next);
std::size_t merge_events(const Configuration& x);

struct OrderedBlock {
    std::size_t start = 0;
    std::size_t length = 0;
    bool maximal = false;

    friend bool operator==(const OrderedBlock&, const OrderedBlock&) = default;
};

// Aligned pairs in {00, 01, 11}; first pair 01, last pair not 01; a trailing
// 11 must be followed by 0. Cyclic, so a block may be longer than n.
bool is_ordered_block(const Configuration& x, std::size_t start, std::size_t length);

// Every ordered block of length 4..n+1, ordered by start then length.
std::vector<OrderedBlock> ordered_blocks(const Configuration& x);

// Longest ordered block of length <= max_length anywhere in x, 0 if none.
std::size_t longest_ordered_block(const Configuration& x, std::size_t max_length);

// Cells with numbered switches between them and boxes in brackets, e.g.
// "111(1)0(2)1(3)0(4)1(5)[01]000(6)111".
std::string render_annotated(const Configuration& x);

nlohmann::json structure_report(const Configuration& x);

} // namespace bfo
