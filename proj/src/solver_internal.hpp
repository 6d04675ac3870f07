#ifndef GI_SOLVER_INTERNAL_HPP
#define GI_SOLVER_INTERNAL_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "gi/core.hpp"
#include "gi/solvers.hpp"

namespace gi::detail {

inline bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Goal sets with Exact expanded to its complement form.
inline std::pair<std::vector<int>, std::vector<int>> goal_sets(const Instance& inst) {
    Goal g = inst.goal;
    g.normalize();
    return {g.aplus, g.effective_aminus(inst.n())};
}

// Optimum witness -> final result against the instance budget.
inline SolveResult finish(const Instance& inst, std::optional<FlipSet> witness) {
    if (!witness) return SolveResult::infeasible();
    Cost c = cost_of(*witness, inst.cost, inst.n());
    if (inst.budget && c > *inst.budget) return SolveResult::budget_exceeded(c);
    return SolveResult::optimal(c, std::move(*witness));
}

// Smallest budget in [lo, hi] accepted by the monotone decision procedure,
// or nullopt if even hi is rejected.
inline std::optional<Cost> min_feasible_budget(Cost lo, Cost hi,
                                               const std::function<bool(Cost)>& feasible) {
    if (!feasible(hi)) return std::nullopt;
    while (lo < hi) {
        Cost mid = lo + (hi - lo) / 2;
        if (feasible(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

inline Cost total_link_price(const Instance& inst) {
    Cost s = 0;
    for (Cost p : inst.cost.link_prices) s += p;
    return s;
}

inline Cost total_agent_price(const Instance& inst) {
    Cost s = 0;
    for (Cost p : inst.cost.agent_prices) s += p;
    return s;
}

}  // namespace gi::detail

#endif
