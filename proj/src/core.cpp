#include "gi/core.hpp"

#include <algorithm>

#include "gi/rules.hpp"

namespace gi {

std::vector<int> Profile::qualified_by_all() const {
    std::vector<int> out;
    for (int a = 0; a < n_; ++a) {
        bool all = true;
        for (int i = 0; i < n_ && all; ++i) all = at(i, a) == 1;
        if (all) out.push_back(a);
    }
    return out;
}

void Goal::normalize() {
    auto norm = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    norm(aplus);
    norm(aminus);
}

void Goal::validate(int n) const {
    auto check_range = [n](const std::vector<int>& v) {
        for (int a : v)
            if (a < 0 || a >= n) throw ValidationError("goal agent index out of range");
    };
    check_range(aplus);
    check_range(aminus);
    for (int a : aplus)
        if (std::binary_search(aminus.begin(), aminus.end(), a))
            throw ValidationError("goal sets A+ and A- must be disjoint");
    if (kind == GoalKind::Constructive && !aminus.empty())
        throw ValidationError("constructive goal cannot carry A-");
    if (kind == GoalKind::Destructive && !aplus.empty())
        throw ValidationError("destructive goal cannot carry A+");
    if (kind == GoalKind::Exact && !aminus.empty())
        throw ValidationError("exact goal stores A+ only");
}

std::vector<int> Goal::effective_aminus(int n) const {
    if (kind != GoalKind::Exact) return aminus;
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (!std::binary_search(aplus.begin(), aplus.end(), a)) out.push_back(a);
    return out;
}

void CostModel::validate(int n) const {
    const auto& v = link ? link_prices : agent_prices;
    size_t want = link ? static_cast<size_t>(n) * n : static_cast<size_t>(n);
    if (v.size() != want) throw ValidationError("price vector has wrong size");
    for (Cost p : v)
        if (p < 1 || p > kMaxPrice) throw ValidationError("prices must lie in [1, 10^6]");
}

void FlipSet::add(int briber, int target, std::int8_t value) {
    Flip f{briber, target, value};
    auto it = std::lower_bound(flips.begin(), flips.end(), Flip{briber, target, -2});
    if (it != flips.end() && it->briber == briber && it->target == target)
        throw ValidationError("duplicate (briber, target) pair in flip set");
    flips.insert(it, f);
}

std::vector<int> FlipSet::bribers() const {
    std::vector<int> out;
    for (const Flip& f : flips)
        if (out.empty() || out.back() != f.briber) out.push_back(f.briber);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FlipSet FlipSet::inverse() const {
    FlipSet inv;
    inv.flips = flips;
    for (Flip& f : inv.flips) f.value = static_cast<std::int8_t>(-f.value);
    return inv;
}

void Instance::validate() const {
    rule.validate(n());
    Goal g = goal;
    g.validate(n());
    cost.validate(n());
    if (budget && *budget < 0) throw ValidationError("budget must be nonnegative");
}

Profile apply_flips(const Profile& p, const FlipSet& flips) {
    Profile out = p;
    for (const Flip& f : flips.flips) {
        if (f.briber < 0 || f.briber >= p.n() || f.target < 0 || f.target >= p.n())
            throw ValidationError("flip index out of range");
        if (out.at(f.briber, f.target) == f.value)
            throw FlipNotAChange("flip does not change the profile entry");
        out.set(f.briber, f.target, f.value);
    }
    return out;
}

Cost cost_of(const FlipSet& flips, const CostModel& cost, int n) {
    Cost total = 0;
    if (cost.link) {
        for (const Flip& f : flips.flips) total += cost.link_price(f.briber, f.target, n);
    } else {
        int prev = -1;
        for (const Flip& f : flips.flips) {
            if (f.briber != prev) total += cost.agent_price(f.briber);
            prev = f.briber;
        }
    }
    return total;
}

Profile negate_profile(const Profile& p) {
    Profile out(p.n());
    for (int i = 0; i < p.n(); ++i)
        for (int j = 0; j < p.n(); ++j) out.set(i, j, static_cast<std::int8_t>(-p.at(i, j)));
    return out;
}

std::pair<int, int> qualifier_counts(const Profile& p, int a) {
    int qp = p.qplus(a);
    return {qp, p.n() - qp};
}

bool goal_satisfied(const Goal& goal, const std::vector<int>& qualified, int n) {
    auto in = [&](int a) { return std::binary_search(qualified.begin(), qualified.end(), a); };
    if (goal.kind == GoalKind::Exact) return qualified == goal.aplus;
    for (int a : goal.aplus)
        if (!in(a)) return false;
    for (int a : goal.aminus)
        if (in(a)) return false;
    (void)n;
    return true;
}

CheckResult check_solution(const Instance& inst, const FlipSet& flips) {
    Profile after = apply_flips(inst.profile, flips);
    std::vector<int> f = evaluate(after, inst.rule);
    if (!goal_satisfied(inst.goal, f, inst.n())) return CheckResult::GoalViolated;
    if (inst.budget && cost_of(flips, inst.cost, inst.n()) > *inst.budget)
        return CheckResult::BudgetExceeded;
    return CheckResult::Ok;
}

}  // namespace gi
