#include "gi/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gi/rules.hpp"

namespace gi {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{no, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

long long to_int(const Line& l, const std::string& tok) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) fail(l.number, "not an integer: " + tok);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(l.number, "not an integer: " + tok);
    }
}

int agent_index(const Line& l, const std::string& tok, int n) {
    long long v = to_int(l, tok);
    if (v < 1 || v > n) fail(l.number, "agent index out of range: " + tok);
    return static_cast<int>(v - 1);
}

}  // namespace

Instance parse_instance(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    size_t pos = 0;
    auto have = [&] { return pos < lines.size(); };
    auto peek = [&]() -> const Line& { return lines[pos]; };

    Instance inst;
    int n = -1;
    bool saw_rule = false, saw_cost = false, saw_profile = false;
    bool saw_const = false, saw_dest = false, saw_exact = false;
    std::optional<std::vector<Cost>> agentprices;
    std::optional<std::vector<Cost>> linkprices;

    while (have()) {
        const Line& l = peek();
        const std::string& key = l.tokens[0];
        if (key == "agents") {
            if (l.tokens.size() != 2) fail(l.number, "agents <n>");
            long long v = to_int(l, l.tokens[1]);
            if (v < 1 || v > kMaxAgents) fail(l.number, "agent count out of range");
            n = static_cast<int>(v);
            ++pos;
        } else if (key == "rule") {
            if (n < 0) fail(l.number, "agents must come first");
            saw_rule = true;
            if (l.tokens.size() == 2 && l.tokens[1] == "lsr")
                inst.rule = Rule::lsr();
            else if (l.tokens.size() == 2 && l.tokens[1] == "csr")
                inst.rule = Rule::csr();
            else if (l.tokens.size() == 4 && l.tokens[1] == "consent")
                inst.rule = Rule::consent(static_cast<int>(to_int(l, l.tokens[2])),
                                          static_cast<int>(to_int(l, l.tokens[3])));
            else
                fail(l.number, "rule lsr | rule csr | rule consent <s> <t>");
            ++pos;
        } else if (key == "cost") {
            if (l.tokens.size() != 2 || (l.tokens[1] != "agent" && l.tokens[1] != "link"))
                fail(l.number, "cost agent | cost link");
            saw_cost = true;
            inst.cost.link = l.tokens[1] == "link";
            ++pos;
        } else if (key == "goal") {
            if (n < 0) fail(l.number, "agents must come first");
            if (l.tokens.size() < 3) fail(l.number, "goal <kind> <k> <agents...>");
            long long k = to_int(l, l.tokens[2]);
            if (k < 0 || l.tokens.size() != 3 + static_cast<size_t>(k))
                fail(l.number, "goal member count mismatch");
            std::vector<int> members;
            for (size_t i = 3; i < l.tokens.size(); ++i)
                members.push_back(agent_index(l, l.tokens[i], n));
            if (l.tokens[1] == "constructive") {
                if (saw_const) fail(l.number, "duplicate constructive goal");
                saw_const = true;
                inst.goal.aplus = members;
            } else if (l.tokens[1] == "destructive") {
                if (saw_dest) fail(l.number, "duplicate destructive goal");
                saw_dest = true;
                inst.goal.aminus = members;
            } else if (l.tokens[1] == "exact") {
                if (saw_exact) fail(l.number, "duplicate exact goal");
                saw_exact = true;
                inst.goal.aplus = members;
            } else {
                fail(l.number, "goal kind must be constructive, destructive or exact");
            }
            ++pos;
        } else if (key == "budget") {
            if (l.tokens.size() != 2) fail(l.number, "budget <l>");
            long long v = to_int(l, l.tokens[1]);
            if (v < 0) fail(l.number, "budget must be nonnegative");
            inst.budget = v;
            ++pos;
        } else if (key == "profile") {
            if (n < 0) fail(l.number, "agents must come first");
            if (l.tokens.size() != 1) fail(l.number, "profile takes no arguments");
            ++pos;
            inst.profile = Profile(n);
            for (int i = 0; i < n; ++i) {
                if (!have()) throw ParseError("unexpected end of file inside profile");
                const Line& row = peek();
                if (row.tokens.size() != 1 || static_cast<int>(row.tokens[0].size()) != n)
                    fail(row.number, "profile row must be " + std::to_string(n) + " chars of 0/1");
                for (int j = 0; j < n; ++j) {
                    char c = row.tokens[0][j];
                    if (c != '0' && c != '1') fail(row.number, "profile entries are 0 or 1");
                    inst.profile.set(i, j, c == '1' ? 1 : -1);
                }
                ++pos;
            }
            saw_profile = true;
        } else if (key == "agentprices") {
            if (n < 0) fail(l.number, "agents must come first");
            if (l.tokens.size() != 1 + static_cast<size_t>(n))
                fail(l.number, "agentprices needs n values");
            agentprices.emplace();
            for (int i = 0; i < n; ++i) agentprices->push_back(to_int(l, l.tokens[1 + i]));
            ++pos;
        } else if (key == "linkprices") {
            if (n < 0) fail(l.number, "agents must come first");
            if (l.tokens.size() != 1) fail(l.number, "linkprices takes no arguments");
            ++pos;
            linkprices.emplace();
            for (int i = 0; i < n; ++i) {
                if (!have()) throw ParseError("unexpected end of file inside linkprices");
                const Line& row = peek();
                if (row.tokens.size() != static_cast<size_t>(n))
                    fail(row.number, "linkprices row must have n values");
                for (int j = 0; j < n; ++j) linkprices->push_back(to_int(row, row.tokens[j]));
                ++pos;
            }
        } else {
            fail(l.number, "unknown directive: " + key);
        }
    }

    if (n < 0) throw ParseError("missing agents line");
    if (!saw_rule) throw ParseError("missing rule line");
    if (!saw_cost) throw ParseError("missing cost line");
    if (!saw_profile) throw ParseError("missing profile block");
    if (saw_exact && (saw_const || saw_dest))
        throw ParseError("exact goal excludes constructive/destructive goals");

    if (saw_exact)
        inst.goal.kind = GoalKind::Exact;
    else if (saw_const && saw_dest)
        inst.goal.kind = GoalKind::ConstDest;
    else if (saw_dest)
        inst.goal.kind = GoalKind::Destructive;
    else
        inst.goal.kind = GoalKind::Constructive;
    inst.goal.normalize();

    if (inst.cost.link) {
        inst.cost.link_prices =
            linkprices ? std::move(*linkprices) : std::vector<Cost>(static_cast<size_t>(n) * n, 1);
        if (agentprices) throw ParseError("agentprices given for a link-cost instance");
    } else {
        inst.cost.agent_prices = agentprices ? std::move(*agentprices) : std::vector<Cost>(n, 1);
        if (linkprices) throw ParseError("linkprices given for an agent-cost instance");
    }

    try {
        inst.validate();
    } catch (const ValidationError& e) {
        throw ParseError(std::string("validation: ") + e.what());
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    const int n = inst.n();
    std::ostringstream out;
    out << "agents " << n << "\n";
    switch (inst.rule.kind) {
        case RuleKind::Lsr: out << "rule lsr\n"; break;
        case RuleKind::Csr: out << "rule csr\n"; break;
        case RuleKind::Consent:
            out << "rule consent " << inst.rule.s << " " << inst.rule.t << "\n";
            break;
    }
    out << "cost " << (inst.cost.link ? "link" : "agent") << "\n";
    Goal g = inst.goal;
    g.normalize();
    auto emit_goal = [&](const char* kind, const std::vector<int>& v) {
        out << "goal " << kind << " " << v.size();
        for (int a : v) out << " " << a + 1;
        out << "\n";
    };
    if (g.kind == GoalKind::Exact)
        emit_goal("exact", g.aplus);
    else {
        if (!g.aplus.empty() || g.kind == GoalKind::Constructive ||
            g.kind == GoalKind::ConstDest)
            emit_goal("constructive", g.aplus);
        if (!g.aminus.empty() || g.kind == GoalKind::Destructive ||
            g.kind == GoalKind::ConstDest)
            emit_goal("destructive", g.aminus);
    }
    if (inst.budget) out << "budget " << *inst.budget << "\n";
    out << "profile\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out << (inst.profile.at(i, j) == 1 ? '1' : '0');
        out << "\n";
    }
    if (inst.cost.link) {
        bool unit = std::all_of(inst.cost.link_prices.begin(), inst.cost.link_prices.end(),
                                [](Cost c) { return c == 1; });
        if (!unit) {
            out << "linkprices\n";
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j)
                    out << inst.cost.link_price(i, j, n) << (j + 1 < n ? " " : "");
                out << "\n";
            }
        }
    } else {
        bool unit = std::all_of(inst.cost.agent_prices.begin(), inst.cost.agent_prices.end(),
                                [](Cost c) { return c == 1; });
        if (!unit) {
            out << "agentprices";
            for (int i = 0; i < n; ++i) out << " " << inst.cost.agent_price(i);
            out << "\n";
        }
    }
    return out.str();
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

Instance generate_random(const GenSpec& spec) {
    if (spec.n < 1 || spec.n > kMaxAgents) throw ValidationError("generator: n out of range");
    if (spec.density < 0.0 || spec.density > 1.0)
        throw ValidationError("generator: density out of range");
    if (spec.price_min < 1 || spec.price_max < spec.price_min || spec.price_max > kMaxPrice)
        throw ValidationError("generator: bad price range");
    const int n = spec.n;

    SplitMix64 rng(spec.seed);
    Instance inst;
    inst.profile = Profile(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inst.profile.set(i, j, rng.next_double() < spec.density ? 1 : -1);

    inst.rule = spec.rule;
    inst.cost.link = spec.link;
    auto draw_price = [&] {
        return static_cast<Cost>(rng.next_range(static_cast<std::uint64_t>(spec.price_min),
                                                static_cast<std::uint64_t>(spec.price_max)));
    };
    if (spec.link) {
        inst.cost.link_prices.resize(static_cast<size_t>(n) * n);
        for (auto& p : inst.cost.link_prices) p = draw_price();
    } else {
        inst.cost.agent_prices.resize(n);
        for (auto& p : inst.cost.agent_prices) p = draw_price();
    }

    auto draw_set = [&](int size, const std::vector<char>& blocked) {
        std::vector<int> pool;
        for (int a = 0; a < n; ++a)
            if (!blocked[a]) pool.push_back(a);
        if (size > static_cast<int>(pool.size()))
            throw ValidationError("generator: goal set larger than the agent pool");
        std::vector<int> out;
        for (int i = 0; i < size; ++i) {
            size_t pick = static_cast<size_t>(rng.next_range(0, pool.size() - 1));
            out.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<long>(pick));
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    inst.goal.kind = spec.goal_kind;
    std::vector<char> blocked(n, 0);
    if (spec.goal_kind != GoalKind::Destructive) {
        inst.goal.aplus = draw_set(spec.aplus_size, blocked);
        for (int a : inst.goal.aplus) blocked[a] = 1;
    }
    if (spec.goal_kind == GoalKind::Destructive || spec.goal_kind == GoalKind::ConstDest)
        inst.goal.aminus = draw_set(spec.aminus_size, blocked);
    inst.budget = spec.budget;
    inst.validate();
    return inst;
}

// ---------------------------------------------------------------------------
// Hardness-reduction instance builders

Instance reduce_set_cover(const SetCoverInput& in) {
    if (in.universe < 1 || in.sets.empty()) throw ValidationError("set cover: empty input");
    for (const auto& s : in.sets)
        for (int e : s)
            if (e < 1 || e > in.universe) throw ValidationError("set cover: element out of range");
    const int m = static_cast<int>(in.sets.size());
    const int n = m + in.universe + 1;
    // agents: sets S_1..S_m, elements u_1..u_|U|, a* last
    const int astar = n - 1;
    auto elem = [&](int e) { return m + e - 1; };

    Instance inst;
    inst.profile = Profile(n);
    inst.profile.set(astar, astar, 1);  // a* qualifies only itself
    for (int i = 0; i < m; ++i) {
        inst.profile.set(i, astar, 1);
        for (int e : in.sets[i]) inst.profile.set(i, elem(e), 1);
    }
    for (int e = 1; e <= in.universe; ++e) inst.profile.set(elem(e), astar, 1);

    inst.rule = Rule::lsr();
    inst.cost = CostModel::unit_link(n);
    inst.goal.kind = GoalKind::Constructive;
    for (int e = 1; e <= in.universe; ++e) inst.goal.aplus.push_back(elem(e));
    inst.budget = in.k;
    inst.validate();
    return inst;
}

Instance reduce_independent_set(const GraphInput& in) {
    if (in.vertices < 1) throw ValidationError("independent set: empty graph");
    for (auto [u, v] : in.edges)
        if (u < 1 || u > in.vertices || v < 1 || v > in.vertices || u == v)
            throw ValidationError("independent set: bad edge");
    const int ne = static_cast<int>(in.edges.size());
    const int n = in.vertices + 2 * ne;
    // agents: vertex-agents, then per edge one edge-agent and one dummy
    auto edge_agent = [&](int e) { return in.vertices + 2 * e; };
    auto dummy_agent = [&](int e) { return in.vertices + 2 * e + 1; };

    Instance inst;
    inst.profile = Profile(n);
    for (int e = 0; e < ne; ++e) {
        auto [u, v] = in.edges[e];
        inst.profile.set(u - 1, edge_agent(e), 1);
        inst.profile.set(v - 1, edge_agent(e), 1);
        inst.profile.set(edge_agent(e), edge_agent(e), 1);
        inst.profile.set(edge_agent(e), dummy_agent(e), 1);
        inst.profile.set(dummy_agent(e), dummy_agent(e), 1);
        inst.goal.aplus.push_back(edge_agent(e));
        inst.goal.aplus.push_back(dummy_agent(e));
    }
    inst.rule = Rule::consent(in.k + 2, 1);
    inst.cost = CostModel::unit_agent(n);
    inst.goal.kind = GoalKind::Constructive;
    inst.budget = in.k;
    inst.validate();
    return inst;
}

Instance reduce_dominating_set(const GraphInput& in) {
    if (in.vertices < 1) throw ValidationError("dominating set: empty graph");
    std::vector<std::vector<char>> adj(in.vertices, std::vector<char>(in.vertices, 0));
    for (auto [u, v] : in.edges) {
        if (u < 1 || u > in.vertices || v < 1 || v > in.vertices || u == v)
            throw ValidationError("dominating set: bad edge");
        adj[u - 1][v - 1] = adj[v - 1][u - 1] = 1;
    }
    std::vector<int> deg(in.vertices, 0);
    int dmax = 0;
    for (int v = 0; v < in.vertices; ++v) {
        for (int u = 0; u < in.vertices; ++u) deg[v] += adj[v][u];
        dmax = std::max(dmax, deg[v]);
    }
    int n = in.vertices;
    std::vector<int> dummy_owner;  // one entry per dummy agent
    for (int v = 0; v < in.vertices; ++v)
        for (int c = 0; c < dmax - deg[v]; ++c) dummy_owner.push_back(v);
    n += static_cast<int>(dummy_owner.size());

    Instance inst;
    inst.profile = Profile(n);
    // vertex-agent v qualifies everyone except itself and its neighbors
    for (int v = 0; v < in.vertices; ++v)
        for (int j = 0; j < n; ++j) {
            bool neighbor = j < in.vertices && adj[v][j];
            inst.profile.set(v, j, (j == v || neighbor) ? -1 : 1);
        }
    // dummies qualify everyone except their vertex
    for (size_t d = 0; d < dummy_owner.size(); ++d) {
        int row = in.vertices + static_cast<int>(d);
        for (int j = 0; j < n; ++j) inst.profile.set(row, j, j == dummy_owner[d] ? -1 : 1);
    }

    inst.rule = Rule::consent(1, dmax + 1);
    inst.cost = CostModel::unit_agent(n);
    inst.goal.kind = GoalKind::Constructive;
    for (int v = 0; v < in.vertices; ++v) inst.goal.aplus.push_back(v);
    if (in.k > 0) inst.budget = in.k;
    inst.validate();
    return inst;
}

Instance reduce_x3c(const X3cInput& in) {
    const int m = in.m;
    if (m < 1 || static_cast<int>(in.sets.size()) != 3 * m)
        throw ValidationError("x3c: need 3m sets");
    std::vector<int> appearances(3 * m + 1, 0);
    for (const auto& s : in.sets) {
        if (s.size() != 3) throw ValidationError("x3c: every set has exactly three elements");
        for (int e : s) {
            if (e < 1 || e > 3 * m) throw ValidationError("x3c: element out of range");
            appearances[e]++;
        }
    }
    for (int e = 1; e <= 3 * m; ++e)
        if (appearances[e] != 3)
            throw ValidationError("x3c: every element appears in exactly three sets");

    const int n = 6 * m + 3;
    // agents: sets, elements, a*, a', a''
    auto elem = [&](int e) { return 3 * m + e - 1; };
    const int astar = 6 * m, aprime = 6 * m + 1, asecond = 6 * m + 2;

    Instance inst;
    inst.profile = Profile(n);
    for (int x = 0; x < n; ++x) inst.profile.set(x, astar, 1);  // everyone qualifies a*
    for (int i = 0; i < 3 * m; ++i) {
        inst.profile.set(astar, i, 1);  // a* qualifies all set-agents
        inst.profile.set(i, aprime, 1);
        inst.profile.set(i, asecond, 1);
        for (int e : in.sets[i]) inst.profile.set(i, elem(e), 1);
    }

    inst.rule = Rule::lsr();
    inst.cost = CostModel::unit_link(n);
    inst.goal.kind = GoalKind::ConstDest;
    for (int e = 1; e <= 3 * m; ++e) inst.goal.aplus.push_back(elem(e));
    inst.goal.aplus.push_back(astar);
    inst.goal.aminus = {aprime, asecond};
    inst.budget = 4 * m;
    inst.validate();
    return inst;
}

SetCoverInput parse_set_cover(const std::string& text) {
    SetCoverInput in;
    for (const Line& l : tokenize(text)) {
        if (l.tokens[0] == "k" && l.tokens.size() == 2)
            in.k = static_cast<int>(to_int(l, l.tokens[1]));
        else if (l.tokens[0] == "elements" && l.tokens.size() == 2)
            in.universe = static_cast<int>(to_int(l, l.tokens[1]));
        else if (l.tokens[0] == "set") {
            std::vector<int> s;
            for (size_t i = 1; i < l.tokens.size(); ++i)
                s.push_back(static_cast<int>(to_int(l, l.tokens[i])));
            in.sets.push_back(std::move(s));
        } else {
            fail(l.number, "expected k / elements / set lines");
        }
    }
    return in;
}

GraphInput parse_graph(const std::string& text) {
    GraphInput in;
    for (const Line& l : tokenize(text)) {
        if (l.tokens[0] == "vertices" && l.tokens.size() == 2)
            in.vertices = static_cast<int>(to_int(l, l.tokens[1]));
        else if (l.tokens[0] == "k" && l.tokens.size() == 2)
            in.k = static_cast<int>(to_int(l, l.tokens[1]));
        else if (l.tokens[0] == "edge" && l.tokens.size() == 3)
            in.edges.push_back({static_cast<int>(to_int(l, l.tokens[1])),
                                static_cast<int>(to_int(l, l.tokens[2]))});
        else
            fail(l.number, "expected vertices / k / edge lines");
    }
    return in;
}

X3cInput parse_x3c(const std::string& text) {
    X3cInput in;
    for (const Line& l : tokenize(text)) {
        if (l.tokens[0] == "m" && l.tokens.size() == 2)
            in.m = static_cast<int>(to_int(l, l.tokens[1]));
        else if (l.tokens[0] == "set") {
            std::vector<int> s;
            for (size_t i = 1; i < l.tokens.size(); ++i)
                s.push_back(static_cast<int>(to_int(l, l.tokens[i])));
            in.sets.push_back(std::move(s));
        } else {
            fail(l.number, "expected m / set lines");
        }
    }
    return in;
}

// ---------------------------------------------------------------------------
// Solution reports

std::string render_solution(const SolveResult& res, const Instance& inst) {
    std::ostringstream out;
    switch (res.status) {
        case SolveStatus::Unsupported:
            out << "status UNSUPPORTED\n";
            return out.str();
        case SolveStatus::Infeasible:
            out << "status INFEASIBLE\n";
            return out.str();
        case SolveStatus::BudgetExceeded:
            out << "status BUDGET_EXCEEDED\n";
            out << "cost " << *res.cost << "\n";
            return out.str();
        case SolveStatus::Optimal:
            break;
    }
    out << "status OPTIMAL\n";
    out << "cost " << *res.cost << "\n";
    const FlipSet& fs = *res.witness;
    out << "flips " << fs.size() << "\n";
    for (const Flip& f : fs.flips)
        out << f.briber + 1 << " " << f.target + 1 << " " << (f.value == 1 ? '+' : '-') << "\n";
    std::vector<int> q = evaluate(apply_flips(inst.profile, fs), inst.rule);
    out << "qualified " << q.size();
    for (int a : q) out << " " << a + 1;
    out << "\n";
    return out.str();
}

ParsedSolution parse_solution(const std::string& text, const Instance& inst) {
    ParsedSolution sol;
    std::vector<Line> lines = tokenize(text);
    size_t pos = 0;
    if (pos >= lines.size() || lines[pos].tokens[0] != "status")
        throw ParseError("solution must start with a status line");
    const std::string& st = lines[pos].tokens.at(1);
    if (st == "OPTIMAL")
        sol.status = SolveStatus::Optimal;
    else if (st == "INFEASIBLE")
        sol.status = SolveStatus::Infeasible;
    else if (st == "BUDGET_EXCEEDED")
        sol.status = SolveStatus::BudgetExceeded;
    else if (st == "UNSUPPORTED")
        sol.status = SolveStatus::Unsupported;
    else
        fail(lines[pos].number, "unknown status " + st);
    ++pos;
    while (pos < lines.size()) {
        const Line& l = lines[pos];
        if (l.tokens[0] == "cost" && l.tokens.size() == 2) {
            sol.cost = to_int(l, l.tokens[1]);
            ++pos;
        } else if (l.tokens[0] == "flips" && l.tokens.size() == 2) {
            long long count = to_int(l, l.tokens[1]);
            ++pos;
            for (long long i = 0; i < count; ++i) {
                if (pos >= lines.size()) throw ParseError("truncated flip list");
                const Line& fl = lines[pos];
                if (fl.tokens.size() != 3) fail(fl.number, "flip line: <briber> <target> <+|->");
                int b = agent_index(fl, fl.tokens[0], inst.n());
                int t = agent_index(fl, fl.tokens[1], inst.n());
                if (fl.tokens[2] != "+" && fl.tokens[2] != "-")
                    fail(fl.number, "flip sign must be + or -");
                sol.flips.add(b, t, fl.tokens[2] == "+" ? 1 : -1);
                ++pos;
            }
        } else if (l.tokens[0] == "qualified") {
            ++pos;  // informational; recomputed by check
        } else if (l.tokens[0] == "witnesses") {
            break;  // trailing oracle witness listing; not part of the solution
        } else {
            fail(l.number, "unknown solution line: " + l.tokens[0]);
        }
    }
    return sol;
}

}  // namespace gi
