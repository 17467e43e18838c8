#include "bfo/engine.hpp"

#include <unordered_map>

namespace bfo {

Configuration step(const RuleTable& rule, const Configuration& x) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    Configuration out = x;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        unsigned code = 0;
        for (std::ptrdiff_t k = -radius; k <= radius; ++k) code = (code << 1) | x[i + k];
        out.set(static_cast<std::size_t>(i), rule.output(code));
    }
    return out;
}

PackedStepper::PackedStepper(const RuleTable& rule) {
    for (unsigned w = 0; w < neighborhood_count; ++w) {
        unsigned code = 0;
        for (int k = 0; k < window; ++k) code = (code << 1) | ((w >> k) & 1u);
        lut_[w] = rule.output(code) ? 1 : 0;
    }
}

namespace {

Cycle describe_cycle(const std::vector<Configuration>& trajectory, std::size_t entry, std::size_t period) {
    Cycle cycle{entry, period, period, 0};
    const Configuration& head = trajectory[entry];
    const auto n = head.size();
    for (std::size_t j = 1; j <= period; ++j) {
        const Configuration& later = j < period ? trajectory[entry + j] : head;
        for (std::size_t d = 0; d < n; ++d) {
            if (rotate(head, static_cast<std::ptrdiff_t>(d)) == later) {
                cycle.shift_period = j;
                cycle.displacement = d;
                return cycle;
            }
        }
    }
    return cycle;
}

} // namespace

Outcome evolve(const RuleTable& rule, const Configuration& x, std::size_t budget) {
    std::unordered_map<Configuration, std::size_t> seen;
    std::vector<Configuration> trajectory;
    Configuration current = x;
    for (std::size_t t = 0;; ++t) {
        Configuration next = step(rule, current);
        if (next == current) return Converged{std::move(current), t};
        if (t == budget) return BudgetExceeded{budget};
        seen.emplace(current, t);
        trajectory.push_back(current);
        if (auto it = seen.find(next); it != seen.end())
            return describe_cycle(trajectory, it->second, t + 1 - it->second);
        current = std::move(next);
    }
}

bool classified_correctly(const Configuration& x, const Outcome& outcome) {
    const auto* done = std::get_if<Converged>(&outcome);
    if (!done || !is_homogeneous(done->fixed_point)) return false;
    return done->fixed_point.cell(0) == parity(x);
}

SpaceTimeDiagram space_time(const RuleTable& rule, const Configuration& x, std::size_t steps) {
    SpaceTimeDiagram diagram;
    diagram.rows.reserve(steps + 1);
    diagram.rows.push_back(x);
    for (std::size_t t = 0; t < steps; ++t) diagram.rows.push_back(step(rule, diagram.rows.back()));
    return diagram;
}

std::string render_text(const SpaceTimeDiagram& diagram) {
    std::string out;
    for (const auto& row : diagram.rows) {
        out += row.str();
        out += '\n';
    }
    return out;
}

std::string render_pbm(const SpaceTimeDiagram& diagram) {
    const std::size_t width = diagram.rows.empty() ? 0 : diagram.rows.front().size();
    std::string out = "P1\n" + std::to_string(width) + " " + std::to_string(diagram.rows.size()) + "\n";
    for (const auto& row : diagram.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += row.cell(i) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const Outcome& outcome) {
    struct Visitor {
        nlohmann::json operator()(const Converged& c) const {
            return {{"kind", "converged"}, {"t0", c.t0}, {"fixed_point", c.fixed_point.str()}};
        }
        nlohmann::json operator()(const Cycle& c) const {
            return {{"kind", "cycle"},
                    {"entry", c.entry},
                    {"period", c.period},
                    {"shift_period", c.shift_period},
                    {"displacement", c.displacement}};
        }
        nlohmann::json operator()(const BudgetExceeded& b) const {
            return {{"kind", "budget_exceeded"}, {"steps", b.steps}};
        }
    };
    return std::visit(Visitor{}, outcome);
}

nlohmann::json to_json(const SpaceTimeDiagram& diagram, Variant variant, const Outcome& outcome) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : diagram.rows) rows.push_back(row.str());
    return {{"rule", std::string(to_string(variant))},
            {"initial", diagram.rows.empty() ? std::string() : diagram.rows.front().str()},
            {"rows", std::move(rows)},
            {"outcome", to_json(outcome)}};
}

} // namespace bfo
