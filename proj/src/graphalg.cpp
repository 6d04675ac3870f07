#include "gi/graphalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace gi {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// Dinic with adjacency-list residual graph.
class MaxFlow {
  public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

    void add_edge(int u, int v, Cost cap) {
        edges_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({u, head_[v], 0});
        head_[v] = static_cast<int>(edges_.size()) - 1;
    }

    Cost run(int s, int t) {
        Cost flow = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (Cost f = dfs(s, t, kInf)) flow += f;
        }
        return flow;
    }

    // After run(): residual graph side reachable from s.
    std::vector<char> min_cut_side(int s) const {
        std::vector<char> side(head_.size(), 0);
        std::vector<int> stack{s};
        side[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = head_[u]; e != -1; e = edges_[e].next) {
                if (edges_[e].cap > 0 && !side[edges_[e].to]) {
                    side[edges_[e].to] = 1;
                    stack.push_back(edges_[e].to);
                }
            }
        }
        return side;
    }

  private:
    struct E {
        int to;
        int next;
        Cost cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e != -1; e = edges_[e].next) {
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[u] + 1;
                    q.push(edges_[e].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    Cost dfs(int u, int t, Cost pushed) {
        if (u == t) return pushed;
        for (int& e = it_[u]; e != -1; e = edges_[e].next) {
            int v = edges_[e].to;
            if (edges_[e].cap > 0 && level_[v] == level_[u] + 1) {
                Cost f = dfs(v, t, std::min(pushed, edges_[e].cap));
                if (f > 0) {
                    edges_[e].cap -= f;
                    edges_[e ^ 1].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }

    std::vector<E> edges_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> it_;
};

}  // namespace

void Digraph::add_arc(int u, int v, Cost w) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw ValidationError("arc endpoint out of range");
    if (w < 0) throw ValidationError("arc weights must be nonnegative");
    auto [it, fresh] = pos_.try_emplace(key(u, v), static_cast<int>(arcs_.size()));
    if (fresh)
        arcs_.push_back({u, v, w});
    else
        arcs_[it->second].w = std::min(arcs_[it->second].w, w);
}

std::vector<char> Digraph::reachable(const std::vector<int>& sources) const {
    std::vector<std::vector<int>> adj(n_);
    for (const Arc& a : arcs_) adj[a.from].push_back(a.to);
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    for (int s : sources)
        if (!seen[s]) {
            seen[s] = 1;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    return seen;
}

CutResult max_flow_min_cut(const Digraph& g, int sigma, int tau) {
    if (sigma == tau) throw ValidationError("cut endpoints must differ");
    MaxFlow mf(g.n());
    for (const Arc& a : g.arcs())
        if (a.from != a.to) mf.add_edge(a.from, a.to, a.w);
    CutResult res;
    res.value = mf.run(sigma, tau);
    std::vector<char> side = mf.min_cut_side(sigma);
    Cost check = 0;
    for (const Arc& a : g.arcs()) {
        if (a.from != a.to && side[a.from] && !side[a.to]) {
            res.arcs.push_back(a);
            check += a.w;
        }
    }
    if (check != res.value) throw std::logic_error("max-flow/min-cut mismatch");
    std::sort(res.arcs.begin(), res.arcs.end());
    return res;
}

SeparatorResult min_vertex_separator(const Digraph& g, int sigma, int tau) {
    if (sigma == tau) throw ValidationError("separator endpoints must differ");
    if (g.has_arc(sigma, tau)) throw NoSeparatorExists("direct sigma->tau arc");
    if (static_cast<int>(g.vertex_weight.size()) != g.n())
        throw ValidationError("vertex weights required");

    // Split x into x_in = 2x, x_out = 2x+1; finite capacity only on the
    // x_in -> x_out arcs. "Infinity" is total finite weight + 1.
    Cost inf = 1;
    for (int v = 0; v < g.n(); ++v)
        if (v != sigma && v != tau) inf += g.vertex_weight[v];

    MaxFlow mf(2 * g.n());
    for (int v = 0; v < g.n(); ++v) {
        Cost cap = (v == sigma || v == tau) ? inf : g.vertex_weight[v];
        mf.add_edge(2 * v, 2 * v + 1, cap);
    }
    for (const Arc& a : g.arcs())
        if (a.from != a.to) mf.add_edge(2 * a.from + 1, 2 * a.to, inf);

    SeparatorResult res;
    res.weight = mf.run(2 * sigma, 2 * tau + 1);
    if (res.weight >= inf) throw NoSeparatorExists("no finite separator");
    std::vector<char> side = mf.min_cut_side(2 * sigma);
    for (int v = 0; v < g.n(); ++v)
        if (v != sigma && v != tau && side[2 * v] && !side[2 * v + 1]) res.vertices.push_back(v);
    Cost check = 0;
    for (int v : res.vertices) check += g.vertex_weight[v];
    if (check != res.weight) throw std::logic_error("separator weight mismatch");
    return res;
}

namespace {

struct EdmondsArc {
    int from;
    int to;
    Cost w;
    int id;  // index into the caller's original arc list, stable across levels
};

// Chu-Liu/Edmonds by recursive cycle contraction; returns original arc ids.
std::vector<int> edmonds(int n, int root, const std::vector<EdmondsArc>& arcs) {
    std::vector<Cost> best(n, kInf);
    std::vector<int> best_arc(n, -1);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
        const EdmondsArc& a = arcs[i];
        if (a.to == root || a.from == a.to) continue;
        if (a.w < best[a.to]) {
            best[a.to] = a.w;
            best_arc[a.to] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (v != root && best_arc[v] < 0) throw NotSpannable("vertex unreachable from root");

    std::vector<int> color(n, 0);  // 0 unseen, 1 active, 2 done
    std::vector<int> cycle;
    for (int v0 = 0; v0 < n && cycle.empty(); ++v0) {
        int v = v0;
        std::vector<int> path;
        while (v != root && color[v] == 0) {
            color[v] = 1;
            path.push_back(v);
            v = arcs[best_arc[v]].from;
        }
        if (v != root && color[v] == 1) {
            auto it = std::find(path.begin(), path.end(), v);
            cycle.assign(it, path.end());
        }
        for (int u : path) color[u] = 2;
    }

    if (cycle.empty()) {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (v != root) out.push_back(arcs[best_arc[v]].id);
        return out;
    }

    // Contract the cycle into a fresh vertex; arcs entering the cycle get
    // their weight reduced by the weight of the replaced cycle in-arc.
    std::vector<char> in_cycle(n, 0);
    for (int v : cycle) in_cycle[v] = 1;
    std::vector<int> remap(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!in_cycle[v]) remap[v] = m++;
    int super = m++;

    std::vector<EdmondsArc> contracted;
    std::map<int, int> enters_at;  // original id -> cycle vertex the arc enters
    for (const EdmondsArc& a : arcs) {
        int u = in_cycle[a.from] ? super : remap[a.from];
        int v = in_cycle[a.to] ? super : remap[a.to];
        if (u == v) continue;
        Cost w = a.w;
        if (in_cycle[a.to]) {
            w -= arcs[best_arc[a.to]].w;
            enters_at[a.id] = a.to;
        }
        contracted.push_back({u, v, w, a.id});
    }

    std::vector<int> sub = edmonds(m, in_cycle[root] ? super : remap[root], contracted);

    // Keep every cycle arc except the one into the entry vertex.
    int entered = -1;
    std::vector<int> out;
    for (int id : sub) {
        out.push_back(id);
        auto it = enters_at.find(id);
        if (it != enters_at.end()) entered = it->second;
    }
    for (int v : cycle)
        if (v != entered) out.push_back(arcs[best_arc[v]].id);
    return out;
}

}  // namespace

TreeResult min_spanning_arborescence(const Digraph& g, int root) {
    std::vector<char> reach = g.reachable({root});
    for (int v = 0; v < g.n(); ++v)
        if (!reach[v]) throw NotSpannable("vertex unreachable from root");

    std::vector<EdmondsArc> arcs;
    arcs.reserve(g.arcs().size());
    for (int i = 0; i < static_cast<int>(g.arcs().size()); ++i) {
        const Arc& a = g.arcs()[i];
        if (a.from != a.to && a.to != root) arcs.push_back({a.from, a.to, a.w, i});
    }
    std::vector<int> ids = edmonds(g.n(), root, arcs);

    TreeResult res;
    for (int id : ids) {
        res.arcs.push_back(g.arcs()[id]);
        res.weight += g.arcs()[id].w;
    }
    std::sort(res.arcs.begin(), res.arcs.end());
    return res;
}

namespace {

// Dijkstra pass relaxing dist along reversed arcs: dist[v] <- w(v,u) + dist[u].
// rin[u] lists arc indices with head u. Records relaxing arcs when preds set.
void relax(const Digraph& g, const std::vector<std::vector<int>>& rin, std::vector<Cost>& dist,
           std::vector<int>* preds) {
    using Item = std::pair<Cost, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    if (preds) preds->assign(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (dist[v] < kInf) pq.push({dist[v], v});
    std::vector<char> done(g.n(), 0);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u] || d > dist[u]) continue;
        done[u] = 1;
        for (int ai : rin[u]) {
            const Arc& a = g.arcs()[ai];
            if (a.w + d < dist[a.from]) {
                dist[a.from] = a.w + d;
                if (preds) (*preds)[a.from] = ai;
                pq.push({dist[a.from], a.from});
            }
        }
    }
}

}  // namespace

TreeResult directed_steiner_tree(const Digraph& g, int root, std::vector<int> terminals) {
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    terminals.erase(std::remove(terminals.begin(), terminals.end(), root), terminals.end());
    if (static_cast<int>(terminals.size()) > kMaxSteinerTerminals)
        throw TooManyTerminals("steiner terminal cap exceeded");
    if (terminals.empty()) return {};

    std::vector<char> reach = g.reachable({root});
    for (int t : terminals)
        if (!reach[t]) throw TerminalUnreachable("terminal unreachable from root");

    const int k = static_cast<int>(terminals.size());
    const int full = (1 << k) - 1;
    const int n = g.n();
    std::vector<std::vector<int>> rin(n);
    for (int i = 0; i < static_cast<int>(g.arcs().size()); ++i)
        if (g.arcs()[i].from != g.arcs()[i].to) rin[g.arcs()[i].to].push_back(i);

    // dp[mask][v]: min weight of an arc set with a path from v to every
    // terminal in mask.
    std::vector<std::vector<Cost>> dp(full + 1, std::vector<Cost>(n, kInf));
    for (int i = 0; i < k; ++i) dp[1 << i][terminals[i]] = 0;

    auto merge_base = [&](int mask, std::vector<std::pair<int, int>>* split) {
        std::vector<Cost> base(n, kInf);
        if (split) split->assign(n, {-1, -1});
        if (__builtin_popcount(static_cast<unsigned>(mask)) == 1) {
            base[terminals[__builtin_ctz(static_cast<unsigned>(mask))]] = 0;
            return base;
        }
        for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
            int rest = mask ^ sub;
            if (sub < rest) continue;  // each unordered split once
            for (int v = 0; v < n; ++v) {
                if (dp[sub][v] < kInf && dp[rest][v] < kInf && dp[sub][v] + dp[rest][v] < base[v]) {
                    base[v] = dp[sub][v] + dp[rest][v];
                    if (split) (*split)[v] = {sub, rest};
                }
            }
        }
        return base;
    };

    for (int mask = 1; mask <= full; ++mask) {
        dp[mask] = merge_base(mask, nullptr);
        relax(g, rin, dp[mask], nullptr);
    }
    if (dp[full][root] >= kInf) throw TerminalUnreachable("terminal unreachable from root");

    // Reconstruct by re-running the per-mask relaxation with predecessors.
    std::set<int> chosen;
    std::vector<std::pair<int, int>> work{{full, root}};
    while (!work.empty()) {
        auto [mask, v] = work.back();
        work.pop_back();
        std::vector<std::pair<int, int>> split;
        std::vector<Cost> base = merge_base(mask, &split);
        std::vector<Cost> dist = base;
        std::vector<int> preds;
        relax(g, rin, dist, &preds);
        int cur = v;
        while (preds[cur] >= 0 && dist[cur] < base[cur]) {
            chosen.insert(preds[cur]);
            cur = g.arcs()[preds[cur]].to;
        }
        if (__builtin_popcount(static_cast<unsigned>(mask)) > 1) {
            work.push_back({split[cur].first, cur});
            work.push_back({split[cur].second, cur});
        }
    }

    TreeResult res;
    for (int id : chosen) {
        res.arcs.push_back(g.arcs()[id]);
        res.weight += g.arcs()[id].w;
    }
    std::sort(res.arcs.begin(), res.arcs.end());
    return res;
}

}  // namespace gi
