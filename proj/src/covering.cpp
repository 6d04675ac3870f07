#include <algorithm>
#include <limits>
#include <numeric>

#include "gi/solvers.hpp"

// Exact 0/1 multicover by branch and bound. Small by design: the callers
// never pass more than 20 rows (one per goal agent).

namespace gi {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

struct Bnb {
    const std::vector<Cost>& w;
    std::vector<std::vector<int>> rows;  // candidate var indices per row
    std::vector<int> need;               // remaining deficit per row
    std::vector<char> taken, excluded;
    Cost best = kInf;
    std::vector<char> best_take;
    Cost cur = 0;

    // Admissible bound: every row must still be completed on its own.
    Cost lower_bound() {
        Cost lb = 0;
        for (size_t j = 0; j < rows.size(); ++j) {
            if (need[j] <= 0) continue;
            std::vector<Cost> avail;
            for (int v : rows[j])
                if (!taken[v] && !excluded[v]) avail.push_back(w[v]);
            if (static_cast<int>(avail.size()) < need[j]) return kInf;
            std::nth_element(avail.begin(), avail.begin() + need[j] - 1, avail.end());
            lb = std::max(lb, std::accumulate(avail.begin(), avail.begin() + need[j], Cost{0}));
        }
        return lb;
    }

    void take(int v) {
        taken[v] = 1;
        cur += w[v];
        for (size_t j = 0; j < rows.size(); ++j)
            if (std::binary_search(rows[j].begin(), rows[j].end(), v)) --need[j];
    }
    void untake(int v) {
        taken[v] = 0;
        cur -= w[v];
        for (size_t j = 0; j < rows.size(); ++j)
            if (std::binary_search(rows[j].begin(), rows[j].end(), v)) ++need[j];
    }

    void dfs() {
        Cost lb = lower_bound();
        if (lb >= kInf || cur + lb >= best) return;
        int pick_row = -1;
        long long pick_slack = 0;
        for (size_t j = 0; j < rows.size(); ++j) {
            if (need[j] <= 0) continue;
            long long avail = 0;
            for (int v : rows[j]) avail += !taken[v] && !excluded[v];
            long long slack = avail - need[j];
            if (pick_row < 0 || slack < pick_slack) {
                pick_row = static_cast<int>(j);
                pick_slack = slack;
            }
        }
        if (pick_row < 0) {  // all rows satisfied
            best = cur;
            best_take = taken;
            return;
        }
        int v = -1;
        for (int u : rows[pick_row])
            if (!taken[u] && !excluded[u] && (v < 0 || w[u] < w[v])) v = u;
        take(v);
        dfs();
        untake(v);
        excluded[v] = 1;
        dfs();
        excluded[v] = 0;
    }
};

}  // namespace

CoveringResult covering_bnb(const std::vector<Cost>& weights,
                            const std::vector<std::vector<int>>& rows,
                            const std::vector<int>& thresholds) {
    if (rows.size() != thresholds.size()) throw ValidationError("rows/thresholds size mismatch");
    if (rows.size() > 20) throw ValidationError("covering program limited to 20 rows");
    const int nv = static_cast<int>(weights.size());
    for (Cost c : weights)
        if (c <= 0) throw ValidationError("covering weights must be positive");

    Bnb b{weights, {}, {}, std::vector<char>(nv, 0), std::vector<char>(nv, 0), kInf, {}, 0};
    for (size_t j = 0; j < rows.size(); ++j) {
        if (thresholds[j] <= 0) continue;
        std::vector<int> r = rows[j];
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        for (int v : r)
            if (v < 0 || v >= nv) throw ValidationError("covering var index out of range");
        if (thresholds[j] > static_cast<int>(r.size())) return {false, 0, {}};
        b.rows.push_back(std::move(r));
        b.need.push_back(thresholds[j]);
    }
    if (b.rows.empty()) return {true, 0, std::vector<char>(nv, 0)};

    // Greedy seed for the upper bound: best deficit reduction per unit weight.
    {
        std::vector<int> need = b.need;
        std::vector<char> take(nv, 0);
        Cost total = 0;
        while (true) {
            bool open = false;
            int pick = -1;
            long long pick_helps = 0;
            for (int v = 0; v < nv; ++v) {
                if (take[v]) continue;
                long long helps = 0;
                for (size_t j = 0; j < b.rows.size(); ++j)
                    if (need[j] > 0 &&
                        std::binary_search(b.rows[j].begin(), b.rows[j].end(), v))
                        ++helps;
                if (helps == 0) continue;
                open = true;
                if (pick < 0 || helps * weights[pick] > pick_helps * weights[v] ||
                    (helps * weights[pick] == pick_helps * weights[v] && weights[v] < weights[pick])) {
                    pick = v;
                    pick_helps = helps;
                }
            }
            bool unsat = std::any_of(need.begin(), need.end(), [](int d) { return d > 0; });
            if (!unsat) break;
            if (!open) return {false, 0, {}};  // cannot happen after row prechecks
            take[pick] = 1;
            total += weights[pick];
            for (size_t j = 0; j < b.rows.size(); ++j)
                if (std::binary_search(b.rows[j].begin(), b.rows[j].end(), pick)) --need[j];
        }
        b.best = total;
        b.best_take = take;
    }

    b.dfs();
    if (b.best >= kInf) return {false, 0, {}};
    return {true, b.best, b.best_take};
}

}  // namespace gi
