#include "bfo/metrics.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "bfo/engine.hpp"
#include "bfo/rule.hpp"

namespace bfo {

namespace {

struct DomainSpec {
    DomainKind kind;
    std::string_view name;
    std::string_view pattern;
    // Cells right after the pattern that must NOT spell this (empty: no condition).
    std::string_view excluded_suffix;
};

// Regular variants exclude exactly the continuation that would put a box
// right behind the domain; that continuation is the b variant.
constexpr std::array<DomainSpec, domain_kind_count> domain_specs{{
    {DomainKind::d12, "D12", "11100", ""},
    {DomainKind::d34, "D34", "00100", ""},
    {DomainKind::d56r, "D56r", "0110", "100"},
    {DomainKind::d56b, "D56b", "0110100", ""},
    {DomainKind::d78r, "D78r", "0010101", ""},
    {DomainKind::d78b, "D78b", "0010100", ""},
    {DomainKind::d910r, "D910r", "1110101", "00"},
    {DomainKind::d910b, "D910b", "1110100", ""},
    {DomainKind::d910rb, "D910rb", "111010100", ""},
    {DomainKind::d911, "D911", "1110111", ""},
    {DomainKind::d912r, "D912r", "1110110", "100"},
    {DomainKind::d912b, "D912b", "1110110100", ""},
}};

const DomainSpec& spec_of(DomainKind kind) { return domain_specs[static_cast<std::size_t>(kind)]; }

std::vector<bool> box_cells(const Configuration& x, const std::vector<std::size_t>& boxes) {
    std::vector<bool> in_box(x.size(), false);
    for (auto i : boxes) {
        in_box[i] = true;
        in_box[(i + 1) % x.size()] = true;
    }
    return in_box;
}

} // namespace

bool matches_at(const Configuration& x, std::string_view pattern, std::size_t pos) {
    const auto n = x.size();
    for (std::size_t k = 0; k < pattern.size(); ++k)
        if (x.cell((pos + k) % n) != (pattern[k] == '1')) return false;
    return true;
}

std::vector<std::size_t> find_boxes(const Configuration& x) {
    std::vector<std::size_t> out;
    const auto n = x.size();
    for (std::size_t i = 0; i < n; ++i)
        if (matches_at(x, "10100", (i + n - 1) % n)) out.push_back(i);
    return out;
}

SwitchReport switches(const Configuration& x) {
    SwitchReport report;
    report.boxes = find_boxes(x);
    const auto n = x.size();
    const auto in_box = box_cells(x, report.boxes);
    for (std::size_t i = 0; i < n; ++i) {
        const auto next = (i + 1) % n;
        if (std::binary_search(report.boxes.begin(), report.boxes.end(), next)) {
            report.switches.push_back({i, SwitchKind::block});
        } else if (x.cell(i) != x.cell(next) && !in_box[i] && !in_box[next]) {
            report.switches.push_back({i, SwitchKind::regular});
        }
    }
    return report;
}

std::string_view to_string(DomainKind kind) { return spec_of(kind).name; }

std::string_view domain_pattern(DomainKind kind) { return spec_of(kind).pattern; }

bool has_domain_at(const Configuration& x, DomainKind kind, std::size_t pos) {
    const auto& spec = spec_of(kind);
    if (!matches_at(x, spec.pattern, pos)) return false;
    if (spec.excluded_suffix.empty()) return true;
    return !matches_at(x, spec.excluded_suffix, (pos + spec.pattern.size()) % x.size());
}

std::vector<DomainHit> find_domains(const Configuration& x) {
    std::vector<DomainHit> out;
    for (std::size_t pos = 0; pos < x.size(); ++pos)
        for (const auto& spec : domain_specs)
            if (has_domain_at(x, spec.kind, pos)) out.push_back({spec.kind, pos});
    return out;
}

bool contains_domain(const Configuration& x, DomainKind kind) {
    for (std::size_t pos = 0; pos < x.size(); ++pos)
        if (has_domain_at(x, kind, pos)) return true;
    return false;
}

std::size_t merge_events(const Configuration& x, const Configuration& next) {
    assert(x.size() == next.size());
    const auto n = x.size();
    std::size_t count = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (!has_domain_at(x, DomainKind::d12, pos) && !has_domain_at(x, DomainKind::d34, pos)) continue;
        const auto after = (pos + 5) % n;
        if (x.cell(after) && next.cell(after)) ++count;
    }
    return count;
}

std::size_t merge_events(const Configuration& x) {
    static const RuleTable corrected = RuleTable::build(Variant::corrected);
    return merge_events(x, step(corrected, x));
}

bool is_ordered_block(const Configuration& x, std::size_t start, std::size_t length) {
    if (length < 4 || length % 2 != 0) return false;
    const auto n = x.size();
    auto pair = [&](std::size_t j) {
        return std::pair<bool, bool>{x.cell((start + 2 * j) % n), x.cell((start + 2 * j + 1) % n)};
    };
    const auto pairs = length / 2;
    for (std::size_t j = 0; j < pairs; ++j)
        if (pair(j) == std::pair{true, false}) return false;
    if (pair(0) != std::pair{false, true}) return false;
    const auto last = pair(pairs - 1);
    if (last == std::pair{false, true}) return false;
    if (last == std::pair{true, true} && x.cell((start + length) % n)) return false;
    return true;
}

std::vector<OrderedBlock> ordered_blocks(const Configuration& x) {
    const auto n = x.size();
    std::vector<OrderedBlock> blocks;
    for (std::size_t start = 0; start < n; ++start)
        for (std::size_t length = 4; length <= n + 1; length += 2)
            if (is_ordered_block(x, start, length)) blocks.push_back({start, length, false});

    for (auto& b : blocks) {
        b.maximal = std::none_of(blocks.begin(), blocks.end(), [&](const OrderedBlock& outer) {
            if (outer.length <= b.length) return false;
            return (b.start + n - outer.start) % n + b.length <= outer.length;
        });
        assert(b.length <= n + 1);
    }
    return blocks;
}

std::size_t longest_ordered_block(const Configuration& x, std::size_t max_length) {
    std::size_t best = 0;
    for (std::size_t start = 0; start < x.size(); ++start)
        for (std::size_t length = 4; length <= max_length; length += 2)
            if (is_ordered_block(x, start, length)) best = std::max(best, length);
    return best;
}

std::string render_annotated(const Configuration& x) {
    const auto report = switches(x);
    const auto n = x.size();
    std::vector<std::size_t> label(n, 0);
    for (std::size_t k = 0; k < report.switches.size(); ++k) label[report.switches[k].position] = k + 1;

    auto is_box = [&](std::size_t i) {
        return std::binary_search(report.boxes.begin(), report.boxes.end(), i);
    };
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_box(i)) out += '[';
        out += x.cell(i) ? '1' : '0';
        if (is_box((i + n - 1) % n)) out += ']';
        if (label[i]) out += "(" + std::to_string(label[i]) + ")";
    }
    return out;
}

nlohmann::json structure_report(const Configuration& x) {
    const auto report = switches(x);
    nlohmann::json sw = nlohmann::json::array();
    for (const auto& s : report.switches)
        sw.push_back({{"pos", s.position}, {"kind", s.kind == SwitchKind::block ? "b" : "r"}});
    nlohmann::json domains = nlohmann::json::array();
    for (const auto& hit : find_domains(x))
        domains.push_back({{"kind", std::string(to_string(hit.kind))}, {"pos", hit.position}});
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : ordered_blocks(x))
        blocks.push_back({{"start", b.start}, {"length", b.length}, {"maximal", b.maximal}});
    return {{"config", x.str()},
            {"s", report.count()},
            {"switches", std::move(sw)},
            {"boxes", report.boxes},
            {"domains", std::move(domains)},
            {"merge_events", merge_events(x)},
            {"ordered_blocks", std::move(blocks)},
            {"annotated", render_annotated(x)}};
}

} // namespace bfo
