#ifndef GI_GRAPHALG_HPP
#define GI_GRAPHALG_HPP

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gi/core.hpp"

// Weighted-digraph algorithms backing the bribery solvers: minimum weighted
// cut, minimum weighted vertex separator, minimum spanning arborescence and
// weighted directed Steiner tree.

namespace gi {

struct NoSeparatorExists : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSpannable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TerminalUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooManyTerminals : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arc {
    int from = 0;
    int to = 0;
    Cost w = 0;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.from == b.from && a.to == b.to && a.w == b.w;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return a.w < b.w;
    }
};

// Parallel arcs are merged at insertion keeping the minimum weight.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n) {}

    int n() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    void add_arc(int u, int v, Cost w);
    bool has_arc(int u, int v) const { return pos_.count(key(u, v)) != 0; }

    std::vector<Cost> vertex_weight;  // used by min_vertex_separator

    // Vertices reachable from the sources along arcs (sources included).
    std::vector<char> reachable(const std::vector<int>& sources) const;

  private:
    long long key(int u, int v) const { return static_cast<long long>(u) * n_ + v; }

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::unordered_map<long long, int> pos_;
};

constexpr int kMaxSteinerTerminals = 20;

struct CutResult {
    Cost value = 0;
    std::vector<Arc> arcs;
};

struct SeparatorResult {
    Cost weight = 0;
    std::vector<int> vertices;
};

struct TreeResult {
    Cost weight = 0;
    std::vector<Arc> arcs;
};

// Max flow = min cut between sigma and tau; returns the cut arcs on the
// source side boundary. Value 0 with an empty cut when tau is unreachable.
CutResult max_flow_min_cut(const Digraph& g, int sigma, int tau);

// Minimum-weight vertex set (excluding sigma, tau) whose removal disconnects
// sigma from tau, via the in/out splitting construction. Requires
// g.vertex_weight and no direct sigma->tau arc.
SeparatorResult min_vertex_separator(const Digraph& g, int sigma, int tau);

// Chu-Liu/Edmonds. Every vertex must be reachable from the root.
TreeResult min_spanning_arborescence(const Digraph& g, int root);

// Dreyfus-Wagner style DP over terminal subsets with shortest-path
// relaxation per subset. Exponential in |terminals| (<= 20).
TreeResult directed_steiner_tree(const Digraph& g, int root, std::vector<int> terminals);

}  // namespace gi

#endif
