#ifndef GI_INSTANCE_IO_HPP
#define GI_INSTANCE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gi/core.hpp"
#include "gi/solvers.hpp"

// Instance file and solution report I/O, the seeded instance generator and
// the hardness-reduction instance builders. Agents are 1-based in every file
// and report.

namespace gi {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Instance load_instance(const std::string& path);

// Split-mix style 64-bit generator; the exact recurrence is documented in the
// README so fixtures reproduce across implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1): 53 mantissa bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi] by modulo (documented; bias negligible for small ranges)
    std::uint64_t next_range(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }
};

struct GenSpec {
    int n = 5;
    Rule rule = Rule::lsr();
    bool link = false;
    double density = 0.5;
    std::uint64_t seed = 0;
    GoalKind goal_kind = GoalKind::Constructive;
    int aplus_size = 0;
    int aminus_size = 0;
    std::optional<Cost> budget;
    Cost price_min = 1;
    Cost price_max = 1;
};

// Draw order is fixed: profile entries row-major, then prices (agents, or
// links row-major), then A+ members, then A- members.
Instance generate_random(const GenSpec& spec);

enum class ReductionKind { SetCover, IndependentSet, DominatingSet, X3C };

// Inputs for the reduction builders.
struct SetCoverInput {
    int universe = 0;                     // elements 1..universe
    int k = 0;                            // requested cover size = budget
    std::vector<std::vector<int>> sets;
};
struct GraphInput {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // 1-based endpoints
    int k = 0;                               // solution size bound
};
struct X3cInput {
    int m = 0;                               // |U| = |S| = 3m
    std::vector<std::vector<int>> sets;      // triples over 1..3m
};

Instance reduce_set_cover(const SetCoverInput& in);
Instance reduce_independent_set(const GraphInput& in);
Instance reduce_dominating_set(const GraphInput& in);
Instance reduce_x3c(const X3cInput& in);

// Text-format parsers for the reduction inputs (formats in the README).
SetCoverInput parse_set_cover(const std::string& text);
GraphInput parse_graph(const std::string& text);
X3cInput parse_x3c(const std::string& text);

std::string render_solution(const SolveResult& res, const Instance& inst);

struct ParsedSolution {
    SolveStatus status = SolveStatus::Unsupported;
    std::optional<Cost> cost;
    FlipSet flips;
};
ParsedSolution parse_solution(const std::string& text, const Instance& inst);

}  // namespace gi

#endif
