#include "gi/solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "gi/oracle.hpp"
#include "gi/rules.hpp"
#include "solver_internal.hpp"

namespace gi {

void RowBribery::set_row(int briber, std::vector<std::int8_t> row) {
    if (static_cast<int>(row.size()) != base_->n()) throw ValidationError("row size mismatch");
    rows_[briber] = std::move(row);
}

void RowBribery::set_row_qualify(int briber, const std::vector<int>& qualify_set) {
    set_row(briber, row_qualifying(base_->n(), qualify_set));
}

Profile RowBribery::apply() const {
    Profile out = *base_;
    for (const auto& [a, row] : rows_)
        for (int j = 0; j < base_->n(); ++j) out.set(a, j, row[j]);
    return out;
}

FlipSet RowBribery::flips() const {
    FlipSet fs;
    for (const auto& [a, row] : rows_)
        for (int j = 0; j < base_->n(); ++j)
            if (base_->at(a, j) != row[j]) fs.flips.push_back({a, j, row[j]});
    return fs;  // rows_ sorted by briber, targets ascending
}

std::vector<std::int8_t> row_qualifying(int n, const std::vector<int>& qualify_set) {
    std::vector<std::int8_t> row(n, -1);
    for (int a : qualify_set) row[a] = 1;
    return row;
}

SolveResult dispatch(const Instance& inst, const SolveOptions& opts) {
    inst.validate();
    Goal g = inst.goal;
    g.normalize();

    if (inst.rule.iterative()) {
        if (!inst.cost.link) return solve_iter_agent(inst, opts);
        switch (g.kind) {
            case GoalKind::Exact:
                return solve_iter_link_exact(inst, opts);
            case GoalKind::Destructive:
                return solve_iter_link_dest(inst, opts);
            case GoalKind::Constructive:
                return solve_iter_link_const(inst, opts);
            case GoalKind::ConstDest: {
                if (g.aminus.empty()) {
                    Instance sub = inst;
                    sub.goal.kind = GoalKind::Constructive;
                    return solve_iter_link_const(sub, opts);
                }
                if (g.aplus.empty()) {
                    Instance sub = inst;
                    sub.goal.kind = GoalKind::Destructive;
                    return solve_iter_link_dest(sub, opts);
                }
                // NP-hard cell with no algorithm in scope: guarded oracle.
                return oracle_link_as_solver(inst, kOracleCellMaxN);
            }
        }
    }

    // consent rule
    if (inst.cost.link) return solve_consent_link(inst, opts);
    switch (g.kind) {
        case GoalKind::Constructive:
            if (static_cast<int>(g.aplus.size()) <= kMaxGoalGuess)
                return solve_consent_agent_const_subsetcover(inst, opts);
            return solve_consent_agent_const_branch(inst, opts);
        case GoalKind::Destructive:
            return solve_consent_agent_dest(inst, opts);
        case GoalKind::ConstDest:
        case GoalKind::Exact:
            return solve_consent_agent_constdest(inst, opts);
    }
    return SolveResult::unsupported("unroutable instance");
}

std::vector<std::string> solver_names() {
    return {"auto",           "iter-agent",     "iter-link-dest", "iter-link-exact",
            "iter-link-const", "consent-link",  "consent-branch", "consent-cover",
            "consent-dest",    "consent-constdest", "oracle"};
}

SolveResult solve_by_name(const Instance& inst, std::string_view name, const SolveOptions& opts) {
    inst.validate();
    if (name == "auto") return dispatch(inst, opts);
    if (name == "iter-agent") return solve_iter_agent(inst, opts);
    if (name == "iter-link-dest") return solve_iter_link_dest(inst, opts);
    if (name == "iter-link-exact") return solve_iter_link_exact(inst, opts);
    if (name == "iter-link-const") return solve_iter_link_const(inst, opts);
    if (name == "consent-link") return solve_consent_link(inst, opts);
    if (name == "consent-branch") return solve_consent_agent_const_branch(inst, opts);
    if (name == "consent-cover") return solve_consent_agent_const_subsetcover(inst, opts);
    if (name == "consent-dest") return solve_consent_agent_dest(inst, opts);
    if (name == "consent-constdest") return solve_consent_agent_constdest(inst, opts);
    if (name == "oracle") return oracle_link_as_solver(inst, kOracleCellMaxN);
    throw ValidationError("unknown algorithm name");
}

}  // namespace gi
