#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "gi/rules.hpp"
#include "gi/solvers.hpp"
#include "solver_internal.hpp"

// Consent-rule solvers. Link bribery decomposes per goal agent (a flip only
// moves its target column). Agent bribery is covering-flavored: the
// subset-guess solvers reduce to an exact 0/1 covering program, the branch
// solver is the budgeted CalcB search with its priced refinement.

namespace gi {

namespace {

using detail::contains;

void verify_goal(const Instance& inst, const FlipSet& fs, const char* where) {
    Profile after = apply_flips(inst.profile, fs);
    if (!goal_satisfied(inst.goal, evaluate(after, inst.rule), inst.n()))
        throw std::logic_error(std::string("solver produced an unsuccessful bribery: ") + where);
}

}  // namespace

// ---------------------------------------------------------------------------
// Link bribery (all goals)

namespace {

// Cheapest flips putting agent a into / out of the socially qualified set.
// Case pairs follow the outcome taxonomy: qualified via (1a) self+1 with
// >= s-1 other supporters or (2b) self-1 with <= t-2 other detractors;
// disqualified via (1b) or (2a).
std::optional<FlipSet> consent_column_flips(const Instance& inst, int a, bool want_qualified) {
    const Profile& phi = inst.profile;
    const int n = phi.n();
    const int s = inst.rule.s, t = inst.rule.t;
    auto lp = [&](int x) { return inst.cost.link_price(x, a, n); };

    std::vector<int> plus, minus;  // other agents by current column entry
    for (int x = 0; x < n; ++x) {
        if (x == a) continue;
        (phi.at(x, a) == 1 ? plus : minus).push_back(x);
    }
    auto by_price = [&](std::vector<int> v) {
        std::sort(v.begin(), v.end(), [&](int x, int y) {
            return lp(x) != lp(y) ? lp(x) < lp(y) : x < y;
        });
        return v;
    };
    std::vector<int> plus_cheap = by_price(plus), minus_cheap = by_price(minus);

    // take k cheapest flips of `from` onto value v
    auto flips_for = [&](bool self_value_plus, const std::vector<int>& from, int k,
                         std::int8_t v) -> std::optional<FlipSet> {
        if (k > static_cast<int>(from.size())) return std::nullopt;
        FlipSet fs;
        if (phi.self_qualifies(a) != self_value_plus)
            fs.add(a, a, self_value_plus ? 1 : -1);
        for (int i = 0; i < k; ++i) fs.add(from[i], a, v);
        return fs;
    };

    int p = static_cast<int>(plus.size());   // other qualifiers
    int m = static_cast<int>(minus.size());  // other detractors

    std::optional<FlipSet> first, second;
    if (want_qualified) {
        first = flips_for(true, minus_cheap, std::max(0, (s - 1) - p), 1);             // (1a)
        second = t >= 2 ? flips_for(false, minus_cheap, std::max(0, m - (t - 2)), 1)   // (2b)
                        : std::nullopt;
    } else {
        first = s >= 2 ? flips_for(true, plus_cheap, std::max(0, p - (s - 2)), -1)     // (1b)
                       : std::nullopt;
        second = flips_for(false, plus_cheap, std::max(0, (t - 1) - m), -1);           // (2a)
    }

    auto cost = [&](const std::optional<FlipSet>& fs) {
        return fs ? cost_of(*fs, inst.cost, n) : std::numeric_limits<Cost>::max();
    };
    if (!first && !second) return std::nullopt;
    return cost(first) <= cost(second) ? first : second;
}

}  // namespace

SolveResult solve_consent_link(const Instance& inst, const SolveOptions&) {
    if (!inst.cost.link) return SolveResult::unsupported("link prices required");
    if (inst.rule.kind != RuleKind::Consent) return SolveResult::unsupported("consent rule required");
    auto [ap, am] = detail::goal_sets(inst);

    FlipSet all;
    for (int a : ap) {
        auto fs = consent_column_flips(inst, a, true);
        if (!fs) return SolveResult::infeasible();
        for (const Flip& f : fs->flips) all.add(f.briber, f.target, f.value);
    }
    for (int a : am) {
        auto fs = consent_column_flips(inst, a, false);
        if (!fs) return SolveResult::infeasible();
        for (const Flip& f : fs->flips) all.add(f.briber, f.target, f.value);
    }
    verify_goal(inst, all, "consent link");
    return detail::finish(inst, std::move(all));
}

// ---------------------------------------------------------------------------
// Agent bribery: shared pieces

namespace {

bool consent_member(const Profile& phi, int a, int s, int t) {
    return phi.self_qualifies(a) ? phi.qplus(a) >= s : phi.qminus(a) <= t - 1;
}

std::vector<std::int8_t> row_all_ones(int n) { return std::vector<std::int8_t>(n, 1); }

// Row for a Const+Dest briber: qualify A+, disqualify A-, leave the rest.
std::vector<std::int8_t> row_goal_directed(const Profile& phi, int briber,
                                           const std::vector<int>& ap,
                                           const std::vector<int>& am) {
    std::vector<std::int8_t> row(phi.n());
    for (int j = 0; j < phi.n(); ++j) row[j] = phi.at(briber, j);
    for (int j : ap) row[j] = 1;
    for (int j : am) row[j] = -1;
    return row;
}

}  // namespace

// ---------------------------------------------------------------------------
// Constructive agent bribery, FPT in |A+| (guess + covering program)

SolveResult solve_consent_agent_const_subsetcover(const Instance& inst, const SolveOptions& opts) {
    if (inst.cost.link) return SolveResult::unsupported("agent prices required");
    if (inst.rule.kind != RuleKind::Consent) return SolveResult::unsupported("consent rule required");
    if (inst.goal.kind != GoalKind::Constructive)
        return SolveResult::unsupported("constructive goal required");
    auto [ap, am] = detail::goal_sets(inst);
    (void)am;
    if (static_cast<int>(ap.size()) > kMaxGoalGuess)
        return SolveResult::unsupported("|A+| exceeds the subset-guess cap");

    const Profile& phi = inst.profile;
    const int n = phi.n();
    const int s = inst.rule.s, t = inst.rule.t;
    if (ap.empty()) return detail::finish(inst, FlipSet{});
    if (s > n) return SolveResult::infeasible();  // forces t=1: no agent can be qualified

    std::vector<int> vars;  // bribable non-targets
    for (int a = 0; a < n; ++a)
        if (!contains(ap, a)) vars.push_back(a);
    std::vector<Cost> weights(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) weights[i] = inst.cost.agent_price(vars[i]);

    const int k = static_cast<int>(ap.size());
    Cost best_cost = std::numeric_limits<Cost>::max();
    long best_guess = -1;
    FlipSet best;
    std::exception_ptr err;

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (long guess = 0; guess < (1L << k); ++guess) {
        try {
            RowBribery rb(phi);
            for (int i = 0; i < k; ++i)
                if (guess >> i & 1) rb.set_row(ap[i], row_all_ones(n));
            Profile cur = rb.apply();

            std::vector<std::vector<int>> rows;
            std::vector<int> thresholds;
            for (int a : ap) {
                int thr = cur.self_qualifies(a) ? s - cur.qplus(a)
                                                : cur.qminus(a) - (t - 1);
                if (thr <= 0) continue;
                std::vector<int> row;
                for (size_t i = 0; i < vars.size(); ++i)
                    if (cur.at(vars[i], a) == -1) row.push_back(static_cast<int>(i));
                rows.push_back(std::move(row));
                thresholds.push_back(thr);
            }
            CoveringResult cov = covering_bnb(weights, rows, thresholds);
            if (!cov.feasible) continue;
            for (size_t i = 0; i < vars.size(); ++i)
                if (cov.take[i]) rb.set_row(vars[i], row_all_ones(n));
            FlipSet fs = rb.flips();
            Cost c = cost_of(fs, inst.cost, n);
#pragma omp critical
            {
                if (c < best_cost || (c == best_cost && guess < best_guess)) {
                    best_cost = c;
                    best_guess = guess;
                    best = fs;
                }
            }
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    if (best_guess < 0) return SolveResult::infeasible();
    verify_goal(inst, best, "consent cover");
    return detail::finish(inst, std::move(best));
}

// ---------------------------------------------------------------------------
// Destructive agent bribery via the consent duality: solve the constructive
// problem on the negated profile with s and t switched, map flips back.

SolveResult solve_consent_agent_dest(const Instance& inst, const SolveOptions& opts) {
    if (inst.cost.link) return SolveResult::unsupported("agent prices required");
    if (inst.rule.kind != RuleKind::Consent) return SolveResult::unsupported("consent rule required");
    if (inst.goal.kind != GoalKind::Destructive)
        return SolveResult::unsupported("destructive goal required");

    Goal g = inst.goal;
    g.normalize();
    Instance dual;
    dual.profile = negate_profile(inst.profile);
    dual.rule = Rule::consent(inst.rule.t, inst.rule.s);
    dual.goal.kind = GoalKind::Constructive;
    dual.goal.aplus = g.aminus;
    dual.cost = inst.cost;
    dual.budget = inst.budget;

    SolveResult r = static_cast<int>(dual.goal.aplus.size()) <= kMaxGoalGuess
                        ? solve_consent_agent_const_subsetcover(dual, opts)
                        : solve_consent_agent_const_branch(dual, opts);
    if (r.status != SolveStatus::Optimal) return r;

    FlipSet mapped = r.witness->inverse();  // same pairs, values negated
    verify_goal(inst, mapped, "consent dest");
    return detail::finish(inst, std::move(mapped));
}

// ---------------------------------------------------------------------------
// Const+Dest / Exact agent bribery, FPT in |A+| + |A-| (double guess +
// covering program); linear for s = t = 1 where only self-entries matter.

SolveResult solve_consent_agent_constdest(const Instance& inst, const SolveOptions& opts) {
    if (inst.cost.link) return SolveResult::unsupported("agent prices required");
    if (inst.rule.kind != RuleKind::Consent) return SolveResult::unsupported("consent rule required");
    if (inst.goal.kind != GoalKind::ConstDest && inst.goal.kind != GoalKind::Exact)
        return SolveResult::unsupported("const+dest or exact goal required");
    auto [ap, am] = detail::goal_sets(inst);

    const Profile& phi = inst.profile;
    const int n = phi.n();
    const int s = inst.rule.s, t = inst.rule.t;

    if (s == 1 && t == 1) {
        FlipSet fs;
        for (int a : ap)
            if (!phi.self_qualifies(a)) fs.add(a, a, 1);
        for (int a : am)
            if (phi.self_qualifies(a)) fs.add(a, a, -1);
        verify_goal(inst, fs, "consent constdest s=t=1");
        return detail::finish(inst, std::move(fs));
    }

    if (static_cast<int>(ap.size() + am.size()) > kMaxGoalGuess)
        return SolveResult::unsupported("|A+|+|A-| exceeds the subset-guess cap");
    if (!ap.empty() && s > n) return SolveResult::infeasible();
    if (!am.empty() && t > n) return SolveResult::infeasible();

    std::vector<int> vars;
    for (int a = 0; a < n; ++a)
        if (!contains(ap, a) && !contains(am, a)) vars.push_back(a);
    std::vector<Cost> weights(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) weights[i] = inst.cost.agent_price(vars[i]);

    const int kp = static_cast<int>(ap.size());
    const int km = static_cast<int>(am.size());
    Cost best_cost = std::numeric_limits<Cost>::max();
    long best_guess = -1;
    FlipSet best;
    std::exception_ptr err;

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (long guess = 0; guess < (1L << (kp + km)); ++guess) {
        try {
            RowBribery rb(phi);
            for (int i = 0; i < kp; ++i)
                if (guess >> i & 1) rb.set_row(ap[i], row_goal_directed(phi, ap[i], ap, am));
            for (int i = 0; i < km; ++i)
                if (guess >> (kp + i) & 1)
                    rb.set_row(am[i], row_goal_directed(phi, am[i], ap, am));
            Profile cur = rb.apply();

            std::vector<std::vector<int>> rows;
            std::vector<int> thresholds;
            bool bad = false;
            for (int a : ap) {
                int thr = cur.self_qualifies(a) ? s - cur.qplus(a) : cur.qminus(a) - (t - 1);
                if (thr <= 0) continue;
                std::vector<int> row;
                for (size_t i = 0; i < vars.size(); ++i)
                    if (cur.at(vars[i], a) == -1) row.push_back(static_cast<int>(i));
                if (thr > static_cast<int>(row.size())) bad = true;
                rows.push_back(std::move(row));
                thresholds.push_back(thr);
            }
            for (int a : am) {
                int thr = cur.self_qualifies(a) ? cur.qplus(a) - (s - 1) : t - cur.qminus(a);
                if (thr <= 0) continue;
                std::vector<int> row;
                for (size_t i = 0; i < vars.size(); ++i)
                    if (cur.at(vars[i], a) == 1) row.push_back(static_cast<int>(i));
                if (thr > static_cast<int>(row.size())) bad = true;
                rows.push_back(std::move(row));
                thresholds.push_back(thr);
            }
            if (bad) continue;
            CoveringResult cov = covering_bnb(weights, rows, thresholds);
            if (!cov.feasible) continue;
            for (size_t i = 0; i < vars.size(); ++i)
                if (cov.take[i]) rb.set_row(vars[i], row_goal_directed(phi, vars[i], ap, am));
            FlipSet fs = rb.flips();
            Cost c = cost_of(fs, inst.cost, n);
#pragma omp critical
            {
                if (c < best_cost || (c == best_cost && guess < best_guess)) {
                    best_cost = c;
                    best_guess = guess;
                    best = fs;
                }
            }
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    if (best_guess < 0) return SolveResult::infeasible();
    verify_goal(inst, best, "consent constdest");
    return detail::finish(inst, std::move(best));
}

// ---------------------------------------------------------------------------
// Constructive agent bribery, FPT in l+t for constant s: budgeted CalcB
// branching with the priced split on n <= s+l+t, wrapped in a binary search
// over the budget (feasibility is monotone).

namespace {

struct BranchCtx {
    const Instance& inst;
    const Profile& phi;
    int n, s, t;
    std::vector<int> ap;  // members of A+ not already socially qualified
    bool unit_prices;

    Cost price(int a) const { return inst.cost.agent_price(a); }

    bool qualified_after(const Profile& cur, int a) const {
        return cur.self_qualifies(a) ? cur.qplus(a) >= s : cur.qminus(a) <= t - 1;
    }

    bool all_ap_qualified(const Profile& cur, const std::vector<int>& targets) const {
        return std::all_of(targets.begin(), targets.end(),
                           [&](int a) { return qualified_after(cur, a); });
    }

    Profile bribe_all_ones(const std::vector<int>& bribed) const {
        RowBribery rb(phi);
        for (int a : bribed) rb.set_row(a, row_all_ones(n));
        return rb.apply();
    }

    FlipSet flips_of(const std::vector<int>& bribed) const {
        RowBribery rb(phi);
        for (int a : bribed) rb.set_row(a, row_all_ones(n));
        return rb.flips();
    }
};

// DFS over subsets of agents with total price <= budget (and an optional size
// cap); first subset whose all-ones bribery qualifies every target wins.
bool subset_search(const BranchCtx& ctx, int from, std::vector<int>& chosen, Cost left,
                   int size_cap, std::vector<int>* out) {
    Profile cur = ctx.bribe_all_ones(chosen);
    if (ctx.all_ap_qualified(cur, ctx.ap)) {
        *out = chosen;
        return true;
    }
    if (from >= ctx.n) return false;
    if (size_cap >= 0 && static_cast<int>(chosen.size()) >= size_cap) return false;
    for (int a = from; a < ctx.n; ++a) {
        if (ctx.price(a) > left) continue;
        chosen.push_back(a);
        if (subset_search(ctx, a + 1, chosen, left - ctx.price(a), size_cap, out)) return true;
        chosen.pop_back();
    }
    return false;
}

// Alg. CalcB. y holds the t-side deficiency per agent; A' members count via
// their Q- membership in the original profile. State is copied per node so
// forced insertions in a rejected branch never leak into its siblings.
// Returns the bribed set.
bool calcb(const BranchCtx& ctx, std::vector<int> targets, std::vector<char> bribed,
           std::vector<int> bribed_list, Cost p, const std::vector<int>& y, bool priced,
           std::vector<int>* out) {
    auto covered = [&](int a) {
        int c = 0;
        for (int x : bribed_list) c += ctx.phi.at(x, a) == -1;
        return c;
    };

    if (!priced) {
        // forced insertions: remaining budget cannot close the gap otherwise
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = targets.begin(); it != targets.end(); ++it) {
                int a = *it;
                if (bribed[a]) continue;
                if (y[a] - covered(a) > p) {
                    bribed[a] = 1;
                    bribed_list.push_back(a);
                    targets.erase(it);
                    p -= 1;
                    changed = true;
                    break;
                }
            }
        }
    }
    targets.erase(std::remove_if(targets.begin(), targets.end(),
                                 [&](int a) { return bribed[a] || covered(a) >= y[a]; }),
                  targets.end());
    if (p < 0) return false;
    if (targets.empty()) {
        *out = bribed_list;
        return true;
    }

    int pivot = targets.front();
    std::vector<int> branch{pivot};
    for (int x = 0; x < ctx.n; ++x)
        if (x != pivot && ctx.phi.at(x, pivot) == -1 && !bribed[x]) branch.push_back(x);
    for (int b : branch) {
        Cost c = priced ? ctx.price(b) : 1;
        bribed[b] = 1;
        bribed_list.push_back(b);
        if (calcb(ctx, targets, bribed, bribed_list, p - c, y, priced, out)) return true;
        bribed_list.pop_back();
        bribed[b] = 0;
    }
    return false;
}

std::optional<std::vector<int>> branch_decision(const BranchCtx& ctx, Cost budget) {
    const int n = ctx.n, s = ctx.s, t = ctx.t;
    if (ctx.ap.empty()) return std::vector<int>{};

    std::vector<int> out;
    std::vector<int> chosen;
    if (budget < s) {
        if (subset_search(ctx, 0, chosen, budget, -1, &out)) return out;
        return std::nullopt;
    }

    if (ctx.unit_prices) {
        // s reduces to 1: gather the t-side demands and branch; the returned
        // set is padded to size >= s so every self-qualifier clears s.
        std::vector<int> targets;
        std::vector<int> y(n, 0);
        for (int a : ctx.ap) {
            if (ctx.phi.self_qualifies(a)) continue;
            int d = ctx.phi.qminus(a) - (t - 1);
            if (d <= 0) continue;
            y[a] = d;
            targets.push_back(a);
        }
        std::vector<char> bribed(n, 0);
        std::vector<int> blist;
        if (!calcb(ctx, targets, bribed, blist, budget, y, false, &out)) return std::nullopt;
        std::sort(out.begin(), out.end());
        for (int a = 0; a < n && static_cast<int>(out.size()) < s; ++a)
            if (!std::binary_search(out.begin(), out.end(), a)) {
                out.insert(std::lower_bound(out.begin(), out.end(), a), a);
            }
        if (static_cast<Cost>(out.size()) > budget) return std::nullopt;  // cannot happen: budget >= s
        return out;
    }

    if (n <= s + budget + t) {
        if (subset_search(ctx, 0, chosen, budget, -1, &out)) return out;
        return std::nullopt;
    }

    // n > s + budget + t: every target with small t-side deficiency already
    // holds >= s supporters, so bribing it succeeds; targets needing more
    // than the budget in extra qualifications split off as forced bribes.
    std::vector<int> y(n, 0);
    std::vector<int> low, high;
    for (int a : ctx.ap) {
        y[a] = std::max(0, ctx.phi.qminus(a) - (t - 1));
        (y[a] <= budget ? low : high).push_back(a);
    }
    std::vector<int> forced;
    Cost forced_cost = 0;
    for (int a : high)
        if (!ctx.phi.self_qualifies(a)) {
            forced.push_back(a);
            forced_cost += ctx.price(a);
        }
    if (forced_cost > budget) return std::nullopt;

    auto run_calcb = [&](const std::vector<int>& base, Cost left) -> bool {
        std::vector<char> bribed(n, 0);
        std::vector<int> blist;
        for (int a : base) {
            bribed[a] = 1;
            blist.push_back(a);
        }
        return calcb(ctx, low, bribed, blist, left, y, true, &out);
    };

    Profile after_forced = ctx.bribe_all_ones(forced);
    if (ctx.all_ap_qualified(after_forced, high)) {
        if (run_calcb(forced, budget - forced_cost)) return out;
        return std::nullopt;
    }

    // enumerate extra subsets of size <= s that finish the high-demand targets
    std::vector<int> extra;
    auto try_extra = [&](auto&& self, int from, Cost left) -> bool {
        std::vector<int> base = forced;
        base.insert(base.end(), extra.begin(), extra.end());
        Profile cur = ctx.bribe_all_ones(base);
        if (ctx.all_ap_qualified(cur, high) && run_calcb(base, left)) return true;
        if (static_cast<int>(extra.size()) >= ctx.s) return false;
        for (int a = from; a < ctx.n; ++a) {
            if (std::binary_search(forced.begin(), forced.end(), a)) continue;
            if (ctx.price(a) > left) continue;
            extra.push_back(a);
            if (self(self, a + 1, left - ctx.price(a))) return true;
            extra.pop_back();
        }
        return false;
    };
    if (!try_extra(try_extra, 0, budget - forced_cost)) return std::nullopt;
    return out;
}

}  // namespace

SolveResult solve_consent_agent_const_branch(const Instance& inst, const SolveOptions&) {
    if (inst.cost.link) return SolveResult::unsupported("agent prices required");
    if (inst.rule.kind != RuleKind::Consent) return SolveResult::unsupported("consent rule required");
    if (inst.goal.kind != GoalKind::Constructive)
        return SolveResult::unsupported("constructive goal required");
    auto [ap_all, am] = detail::goal_sets(inst);
    (void)am;

    const Profile& phi = inst.profile;
    BranchCtx ctx{inst, phi, phi.n(), inst.rule.s, inst.rule.t, {}, true};
    for (Cost p : inst.cost.agent_prices) ctx.unit_prices &= p == 1;
    for (int a : ap_all)
        if (!consent_member(phi, a, ctx.s, ctx.t)) ctx.ap.push_back(a);
    if (ctx.ap.empty()) return detail::finish(inst, FlipSet{});
    if (ctx.s > ctx.n) return SolveResult::infeasible();  // forces t=1: unreachable goal

    Cost hi = detail::total_agent_price(inst);
    auto feasible = [&](Cost l) { return branch_decision(ctx, l).has_value(); };
    std::optional<Cost> opt = detail::min_feasible_budget(0, hi, feasible);
    if (!opt) return SolveResult::infeasible();

    std::optional<std::vector<int>> bribed = branch_decision(ctx, *opt);
    FlipSet wit = ctx.flips_of(*bribed);
    verify_goal(inst, wit, "consent branch");
    return detail::finish(inst, std::move(wit));
}

}  // namespace gi
