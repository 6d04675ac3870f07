#include "gi/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>

#include "gi/rules.hpp"
#include "solver_internal.hpp"

namespace gi {

namespace {

using detail::contains;

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// --------------------------------------------------------------------------
// Bitmask profile for n <= 12

struct BitProfile {
    int n = 0;
    std::uint32_t full = 0;
    std::vector<std::uint32_t> rows, cols;

    static BitProfile from(const Profile& p) {
        BitProfile b;
        b.n = p.n();
        b.full = (1u << b.n) - 1;
        b.rows.assign(b.n, 0);
        b.cols.assign(b.n, 0);
        for (int i = 0; i < b.n; ++i)
            for (int j = 0; j < b.n; ++j)
                if (p.at(i, j) == 1) {
                    b.rows[i] |= 1u << j;
                    b.cols[j] |= 1u << i;
                }
        return b;
    }

    void toggle(int i, int j) {
        rows[i] ^= 1u << j;
        cols[j] ^= 1u << i;
    }
    bool get(int i, int j) const { return rows[i] >> j & 1; }

    std::uint32_t closure(std::uint32_t seeds) const {
        std::uint32_t k = seeds;
        while (true) {
            std::uint32_t nk = k;
            for (int a = 0; a < n; ++a)
                if (k >> a & 1) nk |= rows[a];
            if (nk == k) return k;
            k = nk;
        }
    }

    std::uint32_t initial_mask(const Rule& rule) const {
        std::uint32_t seeds = 0;
        if (rule.kind == RuleKind::Lsr) {
            for (int a = 0; a < n; ++a)
                if (get(a, a)) seeds |= 1u << a;
        } else {
            for (int a = 0; a < n; ++a)
                if (cols[a] == full) seeds |= 1u << a;
        }
        return seeds;
    }

    std::uint32_t eval_mask(const Rule& rule) const {
        if (rule.kind == RuleKind::Consent) {
            std::uint32_t out = 0;
            for (int a = 0; a < n; ++a) {
                int qp = __builtin_popcount(cols[a]);
                bool in = get(a, a) ? qp >= rule.s : n - qp <= rule.t - 1;
                if (in) out |= 1u << a;
            }
            return out;
        }
        return closure(initial_mask(rule));
    }
};

std::uint32_t set_mask(const std::vector<int>& v) {
    std::uint32_t m = 0;
    for (int a : v) m |= 1u << a;
    return m;
}

bool goal_ok_mask(GoalKind kind, std::uint32_t apm, std::uint32_t amm, std::uint32_t f) {
    if (kind == GoalKind::Exact) return f == apm;
    return (apm & ~f) == 0 && (amm & f) == 0;
}

// --------------------------------------------------------------------------
// Subsets of a priced item list in nondecreasing cost order. Each nonempty
// subset has a unique parent (drop or decrement its maximum item), and both
// tree edges are cost-nondecreasing once items are sorted by price, so a heap
// over the tree pops subsets in exact cost order.

struct SubsetStream {
    struct Node {
        Cost cost;
        int item;  // index into the sorted item list, -1 for the empty set
        int prev;  // arena id of the subset without `item`
    };

    explicit SubsetStream(std::vector<Cost> prices) : prices_(std::move(prices)) {
        order_.resize(prices_.size());
        for (size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return prices_[a] < prices_[b]; });
        arena_.push_back({0, -1, -1});
        heap_.push({0, 0});
    }

    // next subset (as original item indices) and its cost; false when done
    bool next(std::vector<int>* items, Cost* cost) {
        if (heap_.empty()) return false;
        auto [c, id] = heap_.top();
        heap_.pop();
        *cost = c;
        items->clear();
        for (int cur = id; cur > 0; cur = arena_[cur].prev)
            items->push_back(order_[arena_[cur].item]);
        std::reverse(items->begin(), items->end());

        int last = arena_[id].item;
        if (last + 1 < static_cast<int>(order_.size())) {
            Cost pnext = prices_[order_[last + 1]];
            arena_.push_back({c + pnext, last + 1, id});
            heap_.push({c + pnext, static_cast<int>(arena_.size()) - 1});
            if (last >= 0) {
                Cost grown = c - prices_[order_[last]] + pnext;
                arena_.push_back({grown, last + 1, arena_[id].prev});
                heap_.push({grown, static_cast<int>(arena_.size()) - 1});
            }
        }
        return true;
    }

    size_t visited() const { return arena_.size(); }

  private:
    std::vector<Cost> prices_;
    std::vector<int> order_;
    std::vector<Node> arena_;
    std::priority_queue<std::pair<Cost, int>, std::vector<std::pair<Cost, int>>,
                        std::greater<>> heap_;
};

constexpr size_t kEnumerationCap = 80u * 1000u * 1000u;

// --------------------------------------------------------------------------
// Candidate link flips. Pruned only by direction/target arguments that hold
// for arbitrary briberies of the given goal kind.

std::vector<Flip> link_candidates(const Instance& inst, const std::vector<int>& ap,
                                  const std::vector<int>& am, bool deletion_only) {
    const Profile& phi = inst.profile;
    const int n = phi.n();
    std::vector<Flip> out;

    if (inst.rule.kind == RuleKind::Consent) {
        for (int a : ap)
            for (int x = 0; x < n; ++x) out.push_back({x, a, static_cast<std::int8_t>(-phi.at(x, a))});
        for (int a : am)
            for (int x = 0; x < n; ++x) out.push_back({x, a, static_cast<std::int8_t>(-phi.at(x, a))});
    } else {
        // Purely destructive goals never reach this builder (path hitting
        // handles them); what remains is pruned by target only: deleting an
        // arc into a forced-in agent changes nothing it could reach anyway,
        // and inserting an arc toward a forced-out agent can never help.
        GoalKind kind = inst.goal.kind;
        std::vector<char> apm(n, 0), amm(n, 0);
        for (int a : ap) apm[a] = 1;
        for (int a : am) amm[a] = 1;

        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (phi.at(i, j) == 1) {  // deletion
                    bool keep = kind == GoalKind::Exact ? amm[j] != 0 : !apm[j];
                    if (kind == GoalKind::Constructive) keep = false;
                    if (keep) out.push_back({i, j, -1});
                } else {  // insertion
                    bool keep = kind == GoalKind::Exact ? apm[j] != 0 : !amm[j];
                    if (keep) out.push_back({i, j, 1});
                }
            }
    }
    if (deletion_only) {
        out.erase(std::remove_if(out.begin(), out.end(), [](const Flip& f) { return f.value == 1; }),
                  out.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

FlipSet flipset_of(const std::vector<Flip>& candidates, const std::vector<int>& picked) {
    FlipSet fs;
    for (int i : picked) fs.flips.push_back(candidates[i]);
    std::sort(fs.flips.begin(), fs.flips.end());
    return fs;
}

bool flipset_less(const FlipSet& a, const FlipSet& b) {
    return std::lexicographical_compare(a.flips.begin(), a.flips.end(), b.flips.begin(),
                                        b.flips.end());
}

// Flips contained in every successful bribery, independent of any algorithm:
// a member of A- keeping its self-loop stays initially qualified under LSR,
// and an arc from a required member of A+ into A- qualifies its head.
FlipSet elementary_forced_flips(const Instance& inst, const std::vector<int>& ap,
                                const std::vector<int>& am) {
    FlipSet forced;
    const Profile& phi = inst.profile;
    if (inst.rule.kind == RuleKind::Lsr)
        for (int a : am)
            if (phi.self_qualifies(a)) forced.add(a, a, -1);
    for (int p : ap)
        for (int q : am)
            if (phi.at(p, q) == 1 && !(p == q)) forced.add(p, q, -1);
    return forced;
}

// Exhaustive minimizer for deletion-closed goals (A+ empty after
// normalization): insertions only enlarge the outcome, so every optimal
// bribery deletes arcs, and every successful deletion set hits every
// surviving seed-to-A- path. Branching over one such path (plus the arcs
// seeding its start) therefore reaches every witness.
struct PathHitting {
    const Instance& inst;
    const std::vector<int>& am;
    BitProfile cur;
    std::uint32_t am_mask;
    Cost best = kInf;
    std::set<std::vector<Flip>> results;
    std::vector<Flip> deleted;

    PathHitting(const Instance& i, const std::vector<int>& am_)
        : inst(i), am(am_), cur(BitProfile::from(i.profile)), am_mask(set_mask(am_)) {}

    void dfs(Cost spent) {
        if (spent > best) return;
        std::uint32_t f = cur.eval_mask(inst.rule);
        if ((f & am_mask) == 0) {
            if (spent < best) {
                best = spent;
                results.clear();
            }
            std::vector<Flip> wit = deleted;
            std::sort(wit.begin(), wit.end());
            results.insert(std::move(wit));
            return;
        }

        // shortest path from a seed to a qualified A- member
        const int n = cur.n;
        std::uint32_t seeds = cur.initial_mask(inst.rule);
        std::vector<int> par(n, -2);
        std::vector<int> queue;
        int hit = -1;
        for (int a = 0; a < n; ++a)
            if (seeds >> a & 1) {
                par[a] = -1;
                queue.push_back(a);
                if (am_mask >> a & 1) hit = a;
            }
        for (size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < n && hit < 0; ++v)
                if (v != u && (cur.rows[u] >> v & 1) && par[v] == -2) {
                    par[v] = u;
                    queue.push_back(v);
                    if (am_mask >> v & 1) hit = v;
                }
        }
        if (hit < 0) throw std::logic_error("qualified A- member without a seed path");

        std::vector<std::pair<int, int>> branch;
        int v0 = hit;
        for (int v = hit; par[v] != -1; v = par[v]) {
            branch.push_back({par[v], v});
            v0 = par[v];
        }
        if (inst.rule.kind == RuleKind::Lsr)
            branch.push_back({v0, v0});
        else
            for (int x = 0; x < n; ++x)
                if (cur.rows[x] >> v0 & 1) branch.push_back({x, v0});

        for (auto [x, y] : branch) {
            Cost p = inst.cost.link_price(x, y, n);
            if (spent + p > best) continue;
            cur.toggle(x, y);
            deleted.push_back({x, y, -1});
            dfs(spent + p);
            deleted.pop_back();
            cur.toggle(x, y);
        }
    }
};

LinkOracleResult oracle_link_path_hitting(const Instance& inst, const std::vector<int>& am) {
    PathHitting ph(inst, am);
    ph.dfs(0);
    LinkOracleResult res;
    if (ph.best >= kInf) return res;
    res.status = SolveStatus::Optimal;
    res.cost = ph.best;
    for (const auto& flips : ph.results) {
        FlipSet fs;
        fs.flips = flips;
        res.witnesses.push_back(std::move(fs));
    }
    std::sort(res.witnesses.begin(), res.witnesses.end(), flipset_less);
    return res;
}

// --------------------------------------------------------------------------
// Consent link oracle: each flip moves only its target column, so columns are
// solved independently and combined (costs add, witnesses multiply).

struct ColumnSolution {
    Cost cost = 0;
    std::vector<FlipSet> witnesses;
};

std::optional<ColumnSolution> consent_column_optimum(const Instance& inst, int a,
                                                     bool want_qualified, bool deletion_only) {
    const Profile& phi = inst.profile;
    const int n = phi.n();
    const int s = inst.rule.s, t = inst.rule.t;

    std::vector<Flip> cand;
    for (int x = 0; x < n; ++x) {
        std::int8_t nv = static_cast<std::int8_t>(-phi.at(x, a));
        if (deletion_only && nv == 1) continue;
        cand.push_back({x, a, nv});
    }
    std::vector<Cost> prices(cand.size());
    for (size_t i = 0; i < cand.size(); ++i)
        prices[i] = inst.cost.link_price(cand[i].briber, a, n);

    SubsetStream stream(prices);
    std::vector<int> picked;
    Cost c;
    std::optional<ColumnSolution> best;
    while (stream.next(&picked, &c)) {
        if (best && c > best->cost) break;
        int qp = phi.qplus(a);
        bool self = phi.self_qualifies(a);
        for (int i : picked) {
            qp += cand[i].value == 1 ? 1 : -1;
            if (cand[i].briber == a) self = cand[i].value == 1;
        }
        bool qualified = self ? qp >= s : (n - qp) <= t - 1;
        if (qualified != want_qualified) continue;
        if (!best) best = ColumnSolution{c, {}};
        best->witnesses.push_back(flipset_of(cand, picked));
    }
    return best;
}

LinkOracleResult oracle_link_consent(const Instance& inst, const std::vector<int>& ap,
                                     const std::vector<int>& am, bool deletion_only) {
    LinkOracleResult res;
    std::vector<ColumnSolution> parts;
    for (int a : ap) {
        auto part = consent_column_optimum(inst, a, true, deletion_only);
        if (!part) return res;  // Infeasible
        parts.push_back(std::move(*part));
    }
    for (int a : am) {
        auto part = consent_column_optimum(inst, a, false, deletion_only);
        if (!part) return res;
        parts.push_back(std::move(*part));
    }
    res.status = SolveStatus::Optimal;
    res.witnesses = {FlipSet{}};
    for (const ColumnSolution& part : parts) {
        res.cost += part.cost;
        std::vector<FlipSet> grown;
        for (const FlipSet& base : res.witnesses)
            for (const FlipSet& ext : part.witnesses) {
                FlipSet combined = base;
                for (const Flip& f : ext.flips) combined.add(f.briber, f.target, f.value);
                grown.push_back(std::move(combined));
            }
        res.witnesses = std::move(grown);
        if (res.witnesses.size() > 200000)
            throw SearchBoundExceeded("too many optimal witnesses to enumerate");
    }
    std::sort(res.witnesses.begin(), res.witnesses.end(), flipset_less);
    return res;
}

}  // namespace

// --------------------------------------------------------------------------

LinkOracleResult oracle_link(const Instance& inst, const OracleOptions& opts) {
    inst.validate();
    if (!inst.cost.link) throw ValidationError("oracle_link needs link prices");
    if (inst.n() > opts.max_n) throw InstanceTooLarge("oracle_link size guard");
    auto [ap, am] = detail::goal_sets(inst);

    if (inst.rule.kind == RuleKind::Consent)
        return oracle_link_consent(inst, ap, am, opts.deletion_only);

    // With nothing to qualify, every useful flip is a deletion.
    if (ap.empty()) return oracle_link_path_hitting(inst, am);

    FlipSet forced = elementary_forced_flips(inst, ap, am);
    if (opts.deletion_only)
        for (const Flip& f : forced.flips)
            if (f.value == 1) throw ValidationError("forced insertion under deletion-only");
    Instance rest = inst;
    rest.profile = apply_flips(inst.profile, forced);
    Cost forced_cost = cost_of(forced, inst.cost, inst.n());

    std::vector<Flip> cand = link_candidates(rest, ap, am, opts.deletion_only);
    std::vector<Cost> prices(cand.size());
    for (size_t i = 0; i < cand.size(); ++i)
        prices[i] = inst.cost.link_price(cand[i].briber, cand[i].target, inst.n());

    BitProfile base = BitProfile::from(rest.profile);
    std::uint32_t apm = set_mask(ap), amm = set_mask(am);
    GoalKind kind = inst.goal.kind;

    SubsetStream stream(prices);
    std::vector<int> picked;
    Cost c;
    LinkOracleResult res;
    bool found = false;
    while (stream.next(&picked, &c)) {
        if (found && c > res.cost - forced_cost) break;
        if (stream.visited() > kEnumerationCap)
            throw SearchBoundExceeded("link oracle enumeration cap");
        for (int i : picked) base.toggle(cand[i].briber, cand[i].target);
        std::uint32_t f = base.eval_mask(inst.rule);
        bool ok = goal_ok_mask(kind, apm, amm, f);
        for (int i : picked) base.toggle(cand[i].briber, cand[i].target);
        if (!ok) continue;
        if (!found) {
            found = true;
            res.status = SolveStatus::Optimal;
            res.cost = forced_cost + c;
        }
        FlipSet wit = forced;
        for (int i : picked) wit.add(cand[i].briber, cand[i].target, cand[i].value);
        res.witnesses.push_back(std::move(wit));
    }
    std::sort(res.witnesses.begin(), res.witnesses.end(), flipset_less);
    return res;
}

// --------------------------------------------------------------------------
// Agent oracle

namespace {

// Column-local feasibility of a bribed set under consent: entries from B are
// free per target column, everything else is fixed.
bool consent_bribed_feasible(const Instance& inst, const std::vector<int>& bribed,
                             const std::vector<int>& ap, const std::vector<int>& am) {
    const Profile& phi = inst.profile;
    const int n = phi.n();
    const int s = inst.rule.s, t = inst.rule.t;
    std::vector<char> in_b(n, 0);
    for (int b : bribed) in_b[b] = 1;

    auto achievable = [&](int a, bool want) {
        int fixed_plus = 0, fixed_minus = 0;
        for (int x = 0; x < n; ++x) {
            if (x == a || in_b[x]) continue;
            (phi.at(x, a) == 1 ? fixed_plus : fixed_minus)++;
        }
        int free = static_cast<int>(bribed.size()) - (in_b[a] ? 1 : 0);
        bool self_plus_ok = phi.self_qualifies(a) || in_b[a];
        bool self_minus_ok = !phi.self_qualifies(a) || in_b[a];
        if (want) {
            if (self_plus_ok && fixed_plus + free + 1 >= s) return true;
            if (self_minus_ok && fixed_minus + 1 <= t - 1) return true;
            return false;
        }
        if (self_plus_ok && fixed_plus + 1 <= s - 1) return true;
        if (self_minus_ok && fixed_minus + free + 1 >= t) return true;
        return false;
    };

    for (int a : ap)
        if (!achievable(a, true)) return false;
    for (int a : am)
        if (!achievable(a, false)) return false;
    return true;
}

// Deterministic witness for a feasible consent bribed set.
FlipSet consent_bribed_witness(const Instance& inst, const std::vector<int>& bribed,
                               const std::vector<int>& ap, const std::vector<int>& am) {
    const Profile& phi = inst.profile;
    const int n = phi.n();
    const int s = inst.rule.s;
    std::vector<char> in_b(n, 0);
    for (int b : bribed) in_b[b] = 1;
    RowBribery rb(phi);
    std::vector<std::vector<std::int8_t>> rows;
    for (int b : bribed) {
        std::vector<std::int8_t> row(n);
        for (int j = 0; j < n; ++j) row[j] = phi.at(b, j);
        rows.push_back(std::move(row));
    }
    auto set_col = [&](int a, std::int8_t v) {
        for (size_t i = 0; i < bribed.size(); ++i)
            if (bribed[i] != a) rows[i][a] = v;
    };
    auto set_self = [&](int a, std::int8_t v) {
        for (size_t i = 0; i < bribed.size(); ++i)
            if (bribed[i] == a) rows[i][a] = v;
    };

    auto handle = [&](int a, bool want) {
        int fixed_plus = 0, fixed_minus = 0;
        for (int x = 0; x < n; ++x) {
            if (x == a || in_b[x]) continue;
            (phi.at(x, a) == 1 ? fixed_plus : fixed_minus)++;
        }
        int free = static_cast<int>(bribed.size()) - (in_b[a] ? 1 : 0);
        bool self_plus_ok = phi.self_qualifies(a) || in_b[a];
        if (want) {
            if (self_plus_ok && fixed_plus + free + 1 >= s) {
                set_col(a, 1);
                set_self(a, 1);
            } else {
                set_col(a, 1);
                set_self(a, -1);
            }
        } else {
            if (self_plus_ok && fixed_plus + 1 <= s - 1) {
                set_col(a, -1);
                set_self(a, 1);
            } else {
                set_col(a, -1);
                set_self(a, -1);
            }
        }
    };
    for (int a : ap) handle(a, true);
    for (int a : am) handle(a, false);
    for (size_t i = 0; i < bribed.size(); ++i) rb.set_row(bribed[i], rows[i]);
    return rb.flips();
}

// Iterative rules: trying every candidate final qualified set W is equivalent
// to trying every combination of row rewrites (each bribed row may be assumed
// to qualify W exactly); cross-checked against oracle_agent_rows in tests.
std::optional<FlipSet> iter_bribed_witness(const Instance& inst, const std::vector<int>& bribed,
                                           const std::vector<int>& ap,
                                           const std::vector<int>& am) {
    const Profile& phi = inst.profile;
    const int n = phi.n();
    BitProfile base = BitProfile::from(phi);
    std::uint32_t apm = set_mask(ap), amm = set_mask(am);
    GoalKind kind = inst.goal.kind;

    std::vector<std::uint32_t> saved_rows;
    for (int b : bribed) saved_rows.push_back(base.rows[b]);

    for (std::uint32_t w = 0; w <= base.full; ++w) {
        if ((apm & ~w) || (amm & w)) continue;
        for (int b : bribed) {
            std::uint32_t old = base.rows[b];
            base.rows[b] = w;
            for (int j = 0; j < n; ++j) {
                std::uint32_t bit = (old >> j & 1) != (w >> j & 1) ? 1u << b : 0;
                if (bit) base.cols[j] ^= bit;
            }
        }
        std::uint32_t f = base.eval_mask(inst.rule);
        bool ok = goal_ok_mask(kind, apm, amm, f);
        for (size_t i = 0; i < bribed.size(); ++i) {
            int b = bribed[i];
            std::uint32_t old = base.rows[b];
            base.rows[b] = saved_rows[i];
            for (int j = 0; j < n; ++j) {
                std::uint32_t bit = (old >> j & 1) != (saved_rows[i] >> j & 1) ? 1u << b : 0;
                if (bit) base.cols[j] ^= bit;
            }
        }
        if (ok) {
            RowBribery rb(phi);
            std::vector<std::int8_t> row(n);
            for (int j = 0; j < n; ++j) row[j] = w >> j & 1 ? 1 : -1;
            for (int b : bribed) rb.set_row(b, row);
            return rb.flips();
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> subsets_by_cost(const Instance& inst, int max_size) {
    const int n = inst.n();
    std::vector<std::pair<Cost, std::uint32_t>> order;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (__builtin_popcount(m) > max_size) continue;
        Cost c = 0;
        for (int a = 0; a < n; ++a)
            if (m >> a & 1) c += inst.cost.agent_price(a);
        order.push_back({c, m});
    }
    std::sort(order.begin(), order.end());
    std::vector<std::vector<int>> out;
    for (auto [c, m] : order) {
        std::vector<int> v;
        for (int a = 0; a < n; ++a)
            if (m >> a & 1) v.push_back(a);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

AgentOracleResult oracle_agent(const Instance& inst, const OracleOptions& opts) {
    inst.validate();
    if (inst.cost.link) throw ValidationError("oracle_agent needs agent prices");
    const int n = inst.n();
    if (n > opts.max_n_agent || n > 12) throw InstanceTooLarge("oracle_agent size guard");
    auto [ap, am] = detail::goal_sets(inst);

    auto feasible_witness = [&](const std::vector<int>& bribed) -> std::optional<FlipSet> {
        if (inst.rule.kind == RuleKind::Consent) {
            if (!consent_bribed_feasible(inst, bribed, ap, am)) return std::nullopt;
            return consent_bribed_witness(inst, bribed, ap, am);
        }
        return iter_bribed_witness(inst, bribed, ap, am);
    };

    int cap = std::min(opts.max_bribed, n);
    std::optional<Cost> best_cost;
    FlipSet best;
    for (const auto& bribed : subsets_by_cost(inst, cap)) {
        Cost c = 0;
        for (int a : bribed) c += inst.cost.agent_price(a);
        if (best_cost && c >= *best_cost) break;
        auto wit = feasible_witness(bribed);
        if (wit) {
            best_cost = c;
            best = std::move(*wit);
            break;  // subsets are cost-ordered: first hit is optimal
        }
    }

    if (cap < n) {
        // certify against the next larger bribed-set size
        std::optional<Cost> veri_cost;
        for (const auto& bribed : subsets_by_cost(inst, cap + 1)) {
            if (static_cast<int>(bribed.size()) != cap + 1) continue;
            Cost c = 0;
            for (int a : bribed) c += inst.cost.agent_price(a);
            if (best_cost && c >= *best_cost) break;
            if (veri_cost && c >= *veri_cost) break;
            if (feasible_witness(bribed)) veri_cost = c;
        }
        if (veri_cost && (!best_cost || *veri_cost < *best_cost))
            throw SearchBoundExceeded("cheaper bribery beyond the bribed-set bound");
        if (!best_cost) throw SearchBoundExceeded("no bribery within the bribed-set bound");
    }

    AgentOracleResult res;
    if (!best_cost) return res;  // Infeasible (full search)
    res.status = SolveStatus::Optimal;
    res.cost = cost_of(best, inst.cost, n);
    res.witness = std::move(best);
    return res;
}

AgentOracleResult oracle_agent_rows(const Instance& inst, const OracleOptions& opts) {
    inst.validate();
    if (inst.cost.link) throw ValidationError("oracle_agent_rows needs agent prices");
    const int n = inst.n();
    if (n > 5) throw InstanceTooLarge("row-enumeration oracle limited to n <= 5");
    auto [ap, am] = detail::goal_sets(inst);

    BitProfile base = BitProfile::from(inst.profile);
    std::uint32_t apm = set_mask(ap), amm = set_mask(am);
    std::uint32_t init0 = base.initial_mask(inst.rule);

    int cap = std::min(opts.max_bribed, n);
    for (const auto& bribed : subsets_by_cost(inst, cap)) {
        const int k = static_cast<int>(bribed.size());
        std::vector<std::uint32_t> saved;
        for (int b : bribed) saved.push_back(base.rows[b]);
        // odometer over all row assignments
        std::vector<std::uint32_t> assign(k, 0);
        bool done = k == 0;
        bool found = false;
        std::vector<std::uint32_t> found_rows;
        while (true) {
            BitProfile cur = base;
            for (int i = 0; i < k; ++i) {
                cur.rows[bribed[i]] = assign[i];
                for (int j = 0; j < n; ++j) {
                    bool bit = assign[i] >> j & 1;
                    if (bit != (base.rows[bribed[i]] >> j & 1)) cur.cols[j] ^= 1u << bribed[i];
                }
            }
            bool ok = goal_ok_mask(inst.goal.kind, apm, amm, cur.eval_mask(inst.rule));
            if (ok && opts.obs1_restrict) {
                std::uint32_t grown = cur.initial_mask(inst.rule) & ~init0;
                if (__builtin_popcount(grown) > 1) ok = false;
            }
            if (ok) {
                found = true;
                found_rows = assign;
                break;
            }
            if (done) break;
            int i = 0;
            while (i < k && assign[i] == base.full) assign[i++] = 0;
            if (i == k) break;
            ++assign[i];
        }
        if (found) {
            RowBribery rb(inst.profile);
            for (int i = 0; i < k; ++i) {
                std::vector<std::int8_t> row(n);
                for (int j = 0; j < n; ++j) row[j] = found_rows[i] >> j & 1 ? 1 : -1;
                rb.set_row(bribed[i], row);
            }
            AgentOracleResult res;
            res.status = SolveStatus::Optimal;
            res.witness = rb.flips();
            res.cost = cost_of(res.witness, inst.cost, n);
            return res;
        }
    }
    return {};
}

// --------------------------------------------------------------------------
// Deletion-only decision for iterative rules: branch on the arcs of a
// shortest surviving seed-to-A- path (plus the arcs keeping its seed seeded).

namespace {

bool deletion_dfs(const Instance& inst, Profile& phi, const std::vector<int>& ap,
                  const std::vector<int>& am, Cost left) {
    std::vector<int> f = evaluate(phi, inst.rule);
    for (int a : ap)
        if (!contains(f, a)) return false;  // deletions cannot re-qualify
    bool clean = std::none_of(am.begin(), am.end(), [&](int a) { return contains(f, a); });
    if (clean) return true;

    const int n = phi.n();
    std::vector<int> seeds;
    if (inst.rule.kind == RuleKind::Lsr) {
        for (int a = 0; a < n; ++a)
            if (phi.self_qualifies(a)) seeds.push_back(a);
    } else {
        seeds = phi.qualified_by_all();
    }

    // shortest path from a seed to a qualified A- member
    std::vector<int> par(n, -2);
    std::vector<int> queue;
    for (int s : seeds)
        if (par[s] == -2) {
            par[s] = -1;
            queue.push_back(s);
        }
    int hit = -1;
    for (size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
        int u = queue[qi];
        if (contains(am, u)) {
            hit = u;
            break;
        }
        for (int v = 0; v < n && hit < 0; ++v)
            if (v != u && phi.at(u, v) == 1 && par[v] == -2) {
                par[v] = u;
                if (contains(am, v)) {
                    hit = v;
                    break;
                }
                queue.push_back(v);
            }
    }
    if (hit < 0) throw std::logic_error("qualified A- member without a seed path");

    std::vector<std::pair<int, int>> branch;
    int v0 = hit;
    for (int v = hit; par[v] != -1; v = par[v]) {
        branch.push_back({par[v], v});
        v0 = par[v];
    }
    if (inst.rule.kind == RuleKind::Lsr)
        branch.push_back({v0, v0});
    else
        for (int x = 0; x < n; ++x) branch.push_back({x, v0});  // de-seed v0

    for (auto [x, y] : branch) {
        Cost p = inst.cost.link_price(x, y, n);
        if (p > left) continue;
        phi.set(x, y, -1);
        bool ok = deletion_dfs(inst, phi, ap, am, left - p);
        phi.set(x, y, 1);
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool deletion_only_feasible(const Instance& inst, Cost budget) {
    inst.validate();
    if (!inst.rule.iterative()) throw ValidationError("deletion-only decision is for iterative rules");
    if (!inst.cost.link) throw ValidationError("deletion-only decision needs link prices");
    auto [ap, am] = detail::goal_sets(inst);
    Profile phi = inst.profile;
    return deletion_dfs(inst, phi, ap, am, budget);
}

SolveResult oracle_link_as_solver(const Instance& inst, int max_n) {
    if (!inst.cost.link) return SolveResult::unsupported("oracle fallback needs link prices");
    if (inst.n() > max_n)
        return SolveResult::unsupported("no algorithm for this cell; oracle guard is n <= " +
                                        std::to_string(max_n));
    OracleOptions opts;
    opts.max_n = max_n;
    LinkOracleResult r = oracle_link(inst, opts);
    if (r.status != SolveStatus::Optimal) return SolveResult::infeasible();
    return detail::finish(inst, r.witnesses.front());
}

}  // namespace gi
