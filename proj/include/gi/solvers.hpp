#ifndef GI_SOLVERS_HPP
#define GI_SOLVERS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gi/core.hpp"

// One solver per algorithm, plus dualization and dispatch. Every solver
// returns an optimal FlipSet (or decides against the instance budget); the
// guess loops run in parallel unless opts.parallel is off, with costs and
// witnesses independent of the thread count.

namespace gi {

enum class SolveStatus { Optimal, Infeasible, BudgetExceeded, Unsupported };

struct SolveResult {
    SolveStatus status = SolveStatus::Unsupported;
    std::optional<Cost> cost;
    std::optional<FlipSet> witness;
    std::string note;

    static SolveResult optimal(Cost c, FlipSet w) {
        return {SolveStatus::Optimal, c, std::move(w), ""};
    }
    static SolveResult infeasible() { return {SolveStatus::Infeasible, {}, {}, ""}; }
    static SolveResult budget_exceeded(Cost c) { return {SolveStatus::BudgetExceeded, c, {}, ""}; }
    static SolveResult unsupported(std::string why) {
        return {SolveStatus::Unsupported, {}, {}, std::move(why)};
    }
};

struct SolveOptions {
    bool parallel = true;
};

// Full-row rewrites for agent bribery: later rows override earlier ones,
// flips are the diff against the base profile.
class RowBribery {
  public:
    explicit RowBribery(const Profile& base) : base_(&base) {}

    void set_row(int briber, std::vector<std::int8_t> row);
    void set_row_qualify(int briber, const std::vector<int>& qualify_set);

    Profile apply() const;
    FlipSet flips() const;
    bool bribed(int a) const { return rows_.count(a) != 0; }

  private:
    const Profile* base_;
    std::map<int, std::vector<std::int8_t>> rows_;
};

std::vector<std::int8_t> row_qualifying(int n, const std::vector<int>& qualify_set);

// Iterative rules (LSR / CSR)
SolveResult solve_iter_agent(const Instance& inst, const SolveOptions& opts = {});
SolveResult solve_iter_link_dest(const Instance& inst, const SolveOptions& opts = {});
SolveResult solve_iter_link_exact(const Instance& inst, const SolveOptions& opts = {});
SolveResult solve_iter_link_const(const Instance& inst, const SolveOptions& opts = {});

// Consent rule
SolveResult solve_consent_link(const Instance& inst, const SolveOptions& opts = {});
SolveResult solve_consent_agent_const_branch(const Instance& inst, const SolveOptions& opts = {});
SolveResult solve_consent_agent_const_subsetcover(const Instance& inst,
                                                  const SolveOptions& opts = {});
SolveResult solve_consent_agent_dest(const Instance& inst, const SolveOptions& opts = {});
SolveResult solve_consent_agent_constdest(const Instance& inst, const SolveOptions& opts = {});

// Exact 0/1 covering: minimize sum of weights subject to, per row j,
// sum_{i in rows[j]} x_i >= thresholds[j]. Branch and bound with a greedy
// upper bound and a fractional (cheapest-completion) lower bound.
struct CoveringResult {
    bool feasible = false;
    Cost cost = 0;
    std::vector<char> take;
};
CoveringResult covering_bnb(const std::vector<Cost>& weights,
                            const std::vector<std::vector<int>>& rows,
                            const std::vector<int>& thresholds);

constexpr int kMaxGoalGuess = 20;        // subset-guess caps (|A+|, |A+|+|A-|)
constexpr int kOracleCellMaxN = 12;      // guarded NP-hard dispatch cell

// Routes (rule, cost model, goal) to the matching solver; the iterative-rule
// link Const+Dest cell has no algorithm and falls back to the enumeration
// oracle for n <= kOracleCellMaxN, Unsupported above.
SolveResult dispatch(const Instance& inst, const SolveOptions& opts = {});

// Named solver selection for the CLI (--algorithm). "auto" dispatches.
SolveResult solve_by_name(const Instance& inst, std::string_view name,
                          const SolveOptions& opts = {});
std::vector<std::string> solver_names();

}  // namespace gi

#endif
