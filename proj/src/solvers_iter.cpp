#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

#include "gi/graphalg.hpp"
#include "gi/rules.hpp"
#include "gi/solvers.hpp"
#include "solver_internal.hpp"

// Solvers for the iterative rules. The destructive side of every goal is
// handled by separating the initially qualified agents from A- in an
// augmented qualification graph: a vertex separator under agent prices, an
// arc cut under link prices. The constructive side rides on arborescence
// (exact goal) and directed Steiner tree (constructive goal) constructions.

namespace gi {

namespace {

using detail::contains;

std::vector<char> mask_of(int n, const std::vector<int>& v) {
    std::vector<char> m(n, 0);
    for (int a : v) m[a] = 1;
    return m;
}

std::vector<int> self_qualifiers(const Profile& p) {
    std::vector<int> out;
    for (int a = 0; a < p.n(); ++a)
        if (p.self_qualifies(a)) out.push_back(a);
    return out;
}

void verify_goal(const Instance& inst, const FlipSet& fs, const char* where) {
    Profile after = apply_flips(inst.profile, fs);
    if (!goal_satisfied(inst.goal, evaluate(after, inst.rule), inst.n()))
        throw std::logic_error(std::string("solver produced an unsuccessful bribery: ") + where);
}

// ---------------------------------------------------------------------------
// Agent bribery, Const+Dest (covers all goals after normalization)

FlipSet iter_agent_lsr(const Instance& inst, const std::vector<int>& ap,
                       const std::vector<int>& am) {
    const Profile& phi = inst.profile;
    const int n = phi.n();
    const auto am_mask = mask_of(n, am);
    RowBribery rb(phi);

    // Self-qualifying members of A- must be bribed; make them disqualify everyone.
    for (int a : am)
        if (phi.self_qualifies(a)) rb.set_row_qualify(a, {});
    Profile phi1 = rb.apply();

    const int sigma = n, tau = n + 1;
    Digraph g(n + 2);
    g.vertex_weight.assign(n + 2, 0);
    for (int a = 0; a < n; ++a) g.vertex_weight[a] = inst.cost.agent_price(a);
    for (int i = 0; i < n; ++i) {
        if (am_mask[i]) continue;  // A- is merged into tau; out-arcs vanish
        for (int j = 0; j < n; ++j)
            if (i != j && phi1.at(i, j) == 1) g.add_arc(i, am_mask[j] ? tau : j, 0);
    }
    for (int a : ap) g.add_arc(sigma, a, 0);
    for (int a : self_qualifiers(phi1))
        if (!am_mask[a]) g.add_arc(sigma, a, 0);

    SeparatorResult sep = min_vertex_separator(g, sigma, tau);
    if (sep.vertices.empty()) {
        std::vector<int> f1 = evaluate(phi1, Rule::lsr());
        bool all_qualified = std::all_of(ap.begin(), ap.end(),
                                         [&](int a) { return contains(f1, a); });
        if (!all_qualified) {
            int cheapest = -1;
            for (int a = 0; a < n; ++a)
                if (!am_mask[a] &&
                    (cheapest < 0 || inst.cost.agent_price(a) < inst.cost.agent_price(cheapest)))
                    cheapest = a;
            std::vector<int> row = ap;
            row.push_back(cheapest);
            rb.set_row_qualify(cheapest, row);
        }
    } else {
        for (int a : sep.vertices) {
            std::vector<int> row = ap;
            row.push_back(a);
            rb.set_row_qualify(a, row);
        }
    }
    return rb.flips();
}

// The guess a* is the one agent left qualified by everyone at the end; the
// loop runs over every admissible agent even when A* is nonempty, because a
// bribery may cheaply strip other A* members of their seed status (every
// bribed row disqualifies everything outside A+ and a*). Sigma therefore
// feeds only A+ and a*.
FlipSet iter_agent_csr(const Instance& inst, const std::vector<int>& ap,
                       const std::vector<int>& am, const SolveOptions& opts) {
    const Profile& phi = inst.profile;
    const int n = phi.n();
    const auto am_mask = mask_of(n, am);
    auto price = [&](int a) { return inst.cost.agent_price(a); };

    if (ap.empty()) {
        std::vector<int> f = evaluate(phi, Rule::csr());
        bool clean = std::none_of(am.begin(), am.end(), [&](int a) { return contains(f, a); });
        RowBribery rb(phi);
        if (!clean) {
            // One agent disqualifying everyone empties A*, hence the outcome.
            int cheapest = 0;
            for (int a = 1; a < n; ++a)
                if (price(a) < price(cheapest)) cheapest = a;
            rb.set_row_qualify(cheapest, {});
        }
        return rb.flips();
    }

    std::vector<int> guesses;
    for (int a = 0; a < n; ++a)
        if (!am_mask[a]) guesses.push_back(a);

    Cost best_cost = std::numeric_limits<Cost>::max();
    int best_guess = -1;
    FlipSet best_flips;
    std::exception_ptr err;

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (size_t gidx = 0; gidx < guesses.size(); ++gidx) {
        try {
            int astar_guess = guesses[gidx];
            std::vector<int> target = ap;
            target.push_back(astar_guess);
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());

            RowBribery rb(phi);
            for (int x = 0; x < n; ++x)
                if (phi.at(x, astar_guess) == -1) rb.set_row_qualify(x, target);
            Profile phi1 = rb.apply();

            const int sigma = n, tau = n + 1;
            Digraph g(n + 2);
            g.vertex_weight.assign(n + 2, 0);
            for (int a = 0; a < n; ++a) g.vertex_weight[a] = price(a);
            for (int i = 0; i < n; ++i) {
                if (am_mask[i]) continue;  // A- is merged into tau
                for (int j = 0; j < n; ++j)
                    if (i != j && phi1.at(i, j) == 1) g.add_arc(i, am_mask[j] ? tau : j, 0);
            }
            for (int a : target) g.add_arc(sigma, a, 0);

            SeparatorResult sep = min_vertex_separator(g, sigma, tau);
            for (int a : sep.vertices) rb.set_row_qualify(a, target);

            Profile phi2 = rb.apply();
            std::vector<int> f2 = evaluate(phi2, Rule::csr());
            bool all_qualified =
                std::all_of(ap.begin(), ap.end(), [&](int a) { return contains(f2, a); });
            if (!all_qualified) {
                // Cheapest socially qualified agent finishes the constructive
                // side; its row also strips leftover seeds.
                int extra = -1;
                for (int a : f2)
                    if (extra < 0 || price(a) < price(extra)) extra = a;
                if (extra < 0) throw std::logic_error("csr agent: no qualified helper");
                rb.set_row_qualify(extra, target);
                phi2 = rb.apply();
                f2 = evaluate(phi2, Rule::csr());
            }
            bool dest_ok =
                std::none_of(am.begin(), am.end(), [&](int a) { return contains(f2, a); });
            if (!dest_ok) {
                // only possible with no briber at all: old seeds kept their
                // status; any single agent's row removes them
                if (!rb.flips().empty())
                    throw std::logic_error("csr agent: seeds survived a bribery");
                int extra = 0;
                for (int a = 1; a < n; ++a)
                    if (price(a) < price(extra)) extra = a;
                rb.set_row_qualify(extra, target);
            }

            FlipSet fs = rb.flips();
            Cost c = cost_of(fs, inst.cost, n);
#pragma omp critical
            {
                if (c < best_cost ||
                    (c == best_cost && static_cast<int>(gidx) < best_guess)) {
                    best_cost = c;
                    best_guess = static_cast<int>(gidx);
                    best_flips = fs;
                }
            }
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return best_flips;
}

}  // namespace

SolveResult solve_iter_agent(const Instance& inst, const SolveOptions& opts) {
    if (inst.cost.link) return SolveResult::unsupported("agent prices required");
    if (!inst.rule.iterative()) return SolveResult::unsupported("iterative rule required");
    auto [ap, am] = detail::goal_sets(inst);

    FlipSet wit = inst.rule.kind == RuleKind::Lsr ? iter_agent_lsr(inst, ap, am)
                                                  : iter_agent_csr(inst, ap, am, opts);
    verify_goal(inst, wit, "iter agent");
    return detail::finish(inst, std::move(wit));
}

// ---------------------------------------------------------------------------
// Link bribery, destructive goal: budgeted cut decision + binary search.

namespace {

std::optional<FlipSet> iter_link_dest_decision(const Instance& inst, const std::vector<int>& am,
                                               Cost budget, const SolveOptions& opts) {
    const Profile& phi = inst.profile;
    const int n = phi.n();
    auto lp = [&](int i, int j) { return inst.cost.link_price(i, j, n); };

    if (inst.rule.kind == RuleKind::Lsr) {
        FlipSet forced;
        Cost c0 = 0;
        for (int a : am)
            if (phi.self_qualifies(a)) {
                forced.add(a, a, -1);
                c0 += lp(a, a);
            }
        if (c0 > budget) return std::nullopt;
        Cost rem = budget - c0;
        Profile phi1 = apply_flips(phi, forced);

        const int sigma = n, tau = n + 1;
        Digraph g(n + 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && phi1.at(i, j) == 1) g.add_arc(i, j, lp(i, j));
        for (int a = 0; a < n; ++a)
            if (phi1.self_qualifies(a)) g.add_arc(sigma, a, lp(a, a));
        for (int a : am) g.add_arc(a, tau, rem + 1);

        CutResult cut = max_flow_min_cut(g, sigma, tau);
        if (cut.value > rem) return std::nullopt;
        FlipSet wit = forced;
        for (const Arc& a : cut.arcs) {
            if (a.from == sigma)
                wit.add(a.to, a.to, -1);
            else if (a.to == tau)
                throw std::logic_error("dest cut crossed a budget arc");
            else
                wit.add(a.from, a.to, -1);
        }
        return wit;
    }

    // CSR: either break every seed cheaply, or guess the surviving seed.
    std::vector<int> astar = phi.qualified_by_all();
    Cost d = 0;
    FlipSet cheap_bribe;
    for (int a : astar) {
        int argmin = -1;
        for (int x = 0; x < n; ++x)
            if (phi.at(x, a) == 1 && (argmin < 0 || lp(x, a) < lp(argmin, a))) argmin = x;
        cheap_bribe.add(argmin, a, -1);
        d += lp(argmin, a);
    }
    if (d <= budget) return cheap_bribe;

    const auto am_mask = mask_of(n, am);
    Cost best_cost = std::numeric_limits<Cost>::max();
    int best_guess = -1;
    FlipSet best;
    std::exception_ptr err;
    std::vector<int> guesses;
    for (int a : astar)
        if (!am_mask[a]) guesses.push_back(a);

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (size_t gidx = 0; gidx < guesses.size(); ++gidx) {
        try {
            int survivor = guesses[gidx];
            const int sigma = n, tau = n + 1;
            Digraph g(n + 2);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && phi.at(i, j) == 1) g.add_arc(i, j, lp(i, j));
            g.add_arc(sigma, survivor, budget + 1);
            for (int a : am) g.add_arc(a, tau, budget + 1);

            CutResult cut = max_flow_min_cut(g, sigma, tau);
            if (cut.value > budget) continue;
            FlipSet wit;
            for (const Arc& a : cut.arcs) {
                if (a.from == sigma || a.to == tau)
                    throw std::logic_error("dest cut crossed a budget arc");
                wit.add(a.from, a.to, -1);
            }
            Cost c = cost_of(wit, inst.cost, n);
#pragma omp critical
            {
                if (c < best_cost || (c == best_cost && static_cast<int>(gidx) < best_guess)) {
                    best_cost = c;
                    best_guess = static_cast<int>(gidx);
                    best = wit;
                }
            }
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    if (best_guess < 0) return std::nullopt;
    return best;
}

}  // namespace

SolveResult solve_iter_link_dest(const Instance& inst, const SolveOptions& opts) {
    if (!inst.cost.link) return SolveResult::unsupported("link prices required");
    if (!inst.rule.iterative()) return SolveResult::unsupported("iterative rule required");
    if (inst.goal.kind != GoalKind::Destructive)
        return SolveResult::unsupported("destructive goal required");
    auto [ap, am] = detail::goal_sets(inst);
    (void)ap;
    if (am.empty()) return detail::finish(inst, FlipSet{});

    Cost hi = detail::total_link_price(inst);
    auto feasible = [&](Cost l) { return iter_link_dest_decision(inst, am, l, opts).has_value(); };
    std::optional<Cost> opt = detail::min_feasible_budget(0, hi, feasible);
    if (!opt) return SolveResult::infeasible();
    std::optional<FlipSet> wit = iter_link_dest_decision(inst, am, *opt, opts);
    verify_goal(inst, *wit, "iter link dest");
    return detail::finish(inst, std::move(wit));
}

// ---------------------------------------------------------------------------
// Link bribery, exact goal: forced deletions + minimum spanning arborescence.

namespace {

// Arborescence stage shared by both rules: connect the not yet qualified
// members of A+ (M) below the merged root R. root_arc picks the cheapest way
// to hand v its first qualification from R (or a self-loop under LSR).
FlipSet arborescence_stage(const Instance& inst, const Profile& cur, FlipSet base,
                           const std::vector<int>& ap, const std::vector<int>& reached,
                           bool allow_self_root) {
    const int n = inst.n();
    auto lp = [&](int i, int j) { return inst.cost.link_price(i, j, n); };
    std::vector<int> m;  // to be spanned
    for (int a : ap)
        if (!contains(reached, a)) m.push_back(a);
    if (m.empty()) return base;

    const int k = static_cast<int>(m.size());
    Digraph g(k + 1);  // 0 = merged root r, 1..k = m[i-1]
    std::map<std::pair<int, int>, Flip> flip_for;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (cur.at(m[i], m[j]) == 1)
                g.add_arc(i + 1, j + 1, 0);
            else {
                g.add_arc(i + 1, j + 1, lp(m[i], m[j]));
                flip_for[{i + 1, j + 1}] = {m[i], m[j], 1};
            }
        }
        int v = m[i];
        Cost best = std::numeric_limits<Cost>::max();
        Flip chosen{};
        if (allow_self_root && !cur.self_qualifies(v)) {
            best = lp(v, v);
            chosen = {v, v, 1};
        }
        for (int a : reached) {
            if (cur.at(a, v) == 1) throw std::logic_error("reached set not closed");
            if (lp(a, v) < best) {
                best = lp(a, v);
                chosen = {a, v, 1};
            }
        }
        g.add_arc(0, i + 1, best);
        flip_for[{0, i + 1}] = chosen;
    }

    TreeResult arb = min_spanning_arborescence(g, 0);
    for (const Arc& a : arb.arcs) {
        if (a.w == 0) continue;
        const Flip& f = flip_for.at({a.from, a.to});
        base.add(f.briber, f.target, f.value);
    }
    return base;
}

}  // namespace

SolveResult solve_iter_link_exact(const Instance& inst, const SolveOptions& opts) {
    if (!inst.cost.link) return SolveResult::unsupported("link prices required");
    if (!inst.rule.iterative()) return SolveResult::unsupported("iterative rule required");
    if (inst.goal.kind != GoalKind::Exact) return SolveResult::unsupported("exact goal required");
    const Profile& phi = inst.profile;
    const int n = phi.n();
    auto [ap, am] = detail::goal_sets(inst);
    auto lp = [&](int i, int j) { return inst.cost.link_price(i, j, n); };

    if (inst.rule.kind == RuleKind::Lsr) {
        FlipSet forced;
        for (int a : am)
            if (phi.self_qualifies(a)) forced.add(a, a, -1);
        for (int p : ap)
            for (int q : am)
                if (phi.at(p, q) == 1) forced.add(p, q, -1);
        Profile phi1 = apply_flips(phi, forced);
        std::vector<int> reached = iterative_closure(phi1, self_qualifiers(phi1));
        FlipSet wit = arborescence_stage(inst, phi1, forced, ap, reached, true);
        verify_goal(inst, wit, "iter link exact lsr");
        return detail::finish(inst, std::move(wit));
    }

    // CSR
    if (ap.empty()) {
        FlipSet wit;
        for (int a : phi.qualified_by_all()) {
            int argmin = -1;
            for (int x = 0; x < n; ++x)
                if (phi.at(x, a) == 1 && (argmin < 0 || lp(x, a) < lp(argmin, a))) argmin = x;
            wit.add(argmin, a, -1);
        }
        verify_goal(inst, wit, "iter link exact csr empty");
        return detail::finish(inst, std::move(wit));
    }

    FlipSet forced;
    for (int p : ap)
        for (int q : am)
            if (phi.at(p, q) == 1) forced.add(p, q, -1);
    Profile phi1 = apply_flips(phi, forced);
    std::vector<int> a1 = phi1.qualified_by_all();

    if (!a1.empty()) {
        std::vector<int> reached = iterative_closure(phi1, a1);
        FlipSet wit = arborescence_stage(inst, phi1, forced, ap, reached, false);
        verify_goal(inst, wit, "iter link exact csr");
        return detail::finish(inst, std::move(wit));
    }

    // Guess the member of A+ that ends up qualified by everyone.
    Cost best_cost = std::numeric_limits<Cost>::max();
    int best_guess = -1;
    FlipSet best;
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (size_t gidx = 0; gidx < ap.size(); ++gidx) {
        try {
            int astar_guess = ap[gidx];
            FlipSet fl = forced;
            for (int x = 0; x < n; ++x)
                if (phi1.at(x, astar_guess) == -1) fl.add(x, astar_guess, 1);
            Profile phig = apply_flips(phi, fl);
            std::vector<int> reached = iterative_closure(phig, phig.qualified_by_all());
            FlipSet wit = arborescence_stage(inst, phig, fl, ap, reached, false);
            Cost c = cost_of(wit, inst.cost, n);
#pragma omp critical
            {
                if (c < best_cost || (c == best_cost && static_cast<int>(gidx) < best_guess)) {
                    best_cost = c;
                    best_guess = static_cast<int>(gidx);
                    best = wit;
                }
            }
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    verify_goal(inst, best, "iter link exact csr guess");
    return detail::finish(inst, std::move(best));
}

// ---------------------------------------------------------------------------
// Link bribery, constructive goal: directed Steiner tree with A+ as terminals.

SolveResult solve_iter_link_const(const Instance& inst, const SolveOptions& opts) {
    if (!inst.cost.link) return SolveResult::unsupported("link prices required");
    if (!inst.rule.iterative()) return SolveResult::unsupported("iterative rule required");
    if (inst.goal.kind != GoalKind::Constructive)
        return SolveResult::unsupported("constructive goal required");
    auto [ap, am] = detail::goal_sets(inst);
    (void)am;
    if (static_cast<int>(ap.size()) > kMaxSteinerTerminals)
        return SolveResult::unsupported("|A+| exceeds the Steiner terminal cap");
    if (ap.empty()) return detail::finish(inst, FlipSet{});

    const Profile& phi = inst.profile;
    const int n = phi.n();
    auto lp = [&](int i, int j) { return inst.cost.link_price(i, j, n); };

    auto steiner_flips = [&](const Profile& cur, const std::vector<int>& root_zero,
                             bool self_root_arcs, FlipSet base) {
        const int r = n;
        Digraph g(n + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) g.add_arc(i, j, cur.at(i, j) == 1 ? 0 : lp(i, j));
        if (self_root_arcs) {
            for (int a = 0; a < n; ++a)
                g.add_arc(r, a, cur.self_qualifies(a) ? 0 : lp(a, a));
        } else {
            for (int a : root_zero) g.add_arc(r, a, 0);
        }
        TreeResult st = directed_steiner_tree(g, r, ap);
        for (const Arc& a : st.arcs) {
            if (a.w == 0) continue;
            if (a.from == r)
                base.add(a.to, a.to, 1);
            else
                base.add(a.from, a.to, 1);
        }
        return base;
    };

    if (inst.rule.kind == RuleKind::Lsr) {
        FlipSet wit = steiner_flips(phi, {}, true, {});
        verify_goal(inst, wit, "iter link const lsr");
        return detail::finish(inst, std::move(wit));
    }

    std::vector<int> astar = phi.qualified_by_all();
    if (!astar.empty()) {
        FlipSet wit = steiner_flips(phi, astar, false, {});
        verify_goal(inst, wit, "iter link const csr");
        return detail::finish(inst, std::move(wit));
    }

    Cost best_cost = std::numeric_limits<Cost>::max();
    int best_guess = -1;
    FlipSet best;
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (int astar_guess = 0; astar_guess < n; ++astar_guess) {
        try {
            FlipSet fl;
            for (int x = 0; x < n; ++x)
                if (phi.at(x, astar_guess) == -1) fl.add(x, astar_guess, 1);
            Profile phig = apply_flips(phi, fl);
            FlipSet wit = steiner_flips(phig, phig.qualified_by_all(), false, fl);
            Cost c = cost_of(wit, inst.cost, n);
#pragma omp critical
            {
                if (c < best_cost || (c == best_cost && astar_guess < best_guess)) {
                    best_cost = c;
                    best_guess = astar_guess;
                    best = wit;
                }
            }
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    verify_goal(inst, best, "iter link const csr guess");
    return detail::finish(inst, std::move(best));
}

}  // namespace gi
