#ifndef GI_ORACLE_HPP
#define GI_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "gi/core.hpp"
#include "gi/solvers.hpp"

// Exhaustive reference solvers for small instances. Flip sets are enumerated
// in nondecreasing total price, so the first hit is the optimum and every
// witness at that price is collected. Candidate flips are pruned only by
// arguments that hold for arbitrary briberies (goal columns under consent,
// flip directions that provably never help a goal side).

namespace gi {

struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SearchBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    int max_n = 8;        // oracle_link size guard
    int max_n_agent = 6;  // oracle_agent size guard (hard cap 12 either way)
    int max_bribed = 3;   // oracle_agent bribed-set size guard
    bool deletion_only = false;  // restrict link flips to removals (+1 -> -1)
    bool obs1_restrict = false;  // rows path: allow at most one new initially qualified agent
};

struct LinkOracleResult {
    SolveStatus status = SolveStatus::Infeasible;
    Cost cost = 0;
    std::vector<FlipSet> witnesses;  // every optimum, lexicographic order
};

struct AgentOracleResult {
    SolveStatus status = SolveStatus::Infeasible;
    Cost cost = 0;
    FlipSet witness;
};

LinkOracleResult oracle_link(const Instance& inst, const OracleOptions& opts = {});

// Bribed subsets in nondecreasing total price; per subset, consent goals are
// decided column by column while iterative rules enumerate the candidate
// final qualified sets (equivalent to trying every row rewrite; see
// oracle_agent_rows for the literal reference).
AgentOracleResult oracle_agent(const Instance& inst, const OracleOptions& opts = {});

// Literal reference path: all 2^n row rewrites per bribed agent. Tiny n only.
AgentOracleResult oracle_agent_rows(const Instance& inst, const OracleOptions& opts = {});

// Decision form for deletion-only link bribery under iterative rules, by
// branching over the arcs of a surviving path into A- (complete: every
// successful deletion set hits every such path).
bool deletion_only_feasible(const Instance& inst, Cost budget);

// dispatch() helper: oracle-backed result for the guarded Const+Dest cell.
SolveResult oracle_link_as_solver(const Instance& inst, int max_n);

}  // namespace gi

#endif
