#ifndef GI_CORE_HPP
#define GI_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core domain types for group identification bribery problems.
// Agents are 0-based everywhere in memory; the 1-based convention of the
// file format and CLI is handled at the I/O boundary.

namespace gi {

using Cost = long long;

constexpr int kMaxAgents = 10000;
constexpr Cost kMaxPrice = 1000000;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FlipNotAChange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n x n qualification matrix with entries in {+1,-1}.
// entry(i,j) = phi(a_i, a_j): row i holds the opinions *of* agent i.
class Profile {
  public:
    Profile() : n_(0) {}
    explicit Profile(int n, std::int8_t fill = -1) : n_(n), e_(static_cast<size_t>(n) * n, fill) {
        if (n < 1 || n > kMaxAgents) throw ValidationError("agent count out of range");
        if (fill != 1 && fill != -1) throw ValidationError("profile entries must be +1 or -1");
    }

    int n() const { return n_; }

    std::int8_t at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    void set(int i, int j, std::int8_t v) {
        if (v != 1 && v != -1) throw ValidationError("profile entries must be +1 or -1");
        e_[static_cast<size_t>(i) * n_ + j] = v;
    }

    // |Q+(a)|: number of agents qualifying a (column count, a included).
    int qplus(int a) const {
        int c = 0;
        for (int i = 0; i < n_; ++i) c += at(i, a) == 1;
        return c;
    }
    int qminus(int a) const { return n_ - qplus(a); }

    bool self_qualifies(int a) const { return at(a, a) == 1; }

    // A*: agents qualified by everyone, themselves included.
    std::vector<int> qualified_by_all() const;

    bool operator==(const Profile&) const = default;

  private:
    int n_;
    std::vector<std::int8_t> e_;
};

enum class RuleKind { Lsr, Csr, Consent };

struct Rule {
    RuleKind kind = RuleKind::Lsr;
    int s = 0;
    int t = 0;

    static Rule lsr() { return {RuleKind::Lsr, 0, 0}; }
    static Rule csr() { return {RuleKind::Csr, 0, 0}; }
    static Rule consent(int s, int t) { return {RuleKind::Consent, s, t}; }

    bool iterative() const { return kind != RuleKind::Consent; }

    // Consent requires s,t >= 1 and s + t <= n + 2.
    void validate(int n) const {
        if (kind != RuleKind::Consent) return;
        if (s < 1 || t < 1 || s + t > n + 2)
            throw ValidationError("invalid consent parameters: need s,t >= 1 and s+t <= n+2");
    }

    bool operator==(const Rule&) const = default;
};

enum class GoalKind { Constructive, Destructive, ConstDest, Exact };

// Goal sets are kept sorted and duplicate-free. For Exact, aminus stays
// empty in storage; semantically A- = A \ A+.
struct Goal {
    GoalKind kind = GoalKind::Constructive;
    std::vector<int> aplus;
    std::vector<int> aminus;

    void normalize();
    void validate(int n) const;

    // A- as it applies semantically (complement of A+ for Exact).
    std::vector<int> effective_aminus(int n) const;

    bool operator==(const Goal&) const = default;
};

// Agent prices or link prices; all prices are positive integers.
struct CostModel {
    bool link = false;
    std::vector<Cost> agent_prices;      // size n when !link
    std::vector<Cost> link_prices;       // size n*n row-major when link

    static CostModel unit_agent(int n) {
        CostModel m;
        m.agent_prices.assign(n, 1);
        return m;
    }
    static CostModel unit_link(int n) {
        CostModel m;
        m.link = true;
        m.link_prices.assign(static_cast<size_t>(n) * n, 1);
        return m;
    }

    Cost agent_price(int a) const { return agent_prices[a]; }
    Cost link_price(int i, int j, int n) const { return link_prices[static_cast<size_t>(i) * n + j]; }

    void validate(int n) const;

    bool operator==(const CostModel&) const = default;
};

struct Flip {
    int briber = 0;
    int target = 0;
    std::int8_t value = 1;  // the new value; must differ from the profile entry

    friend bool operator==(const Flip& a, const Flip& b) {
        return a.briber == b.briber && a.target == b.target && a.value == b.value;
    }
    friend bool operator<(const Flip& a, const Flip& b) {
        if (a.briber != b.briber) return a.briber < b.briber;
        if (a.target != b.target) return a.target < b.target;
        return a.value < b.value;
    }
};

// A bribery: sorted by (briber, target), no duplicate pair.
struct FlipSet {
    std::vector<Flip> flips;

    void add(int briber, int target, std::int8_t value);
    bool empty() const { return flips.empty(); }
    size_t size() const { return flips.size(); }

    std::vector<int> bribers() const;  // distinct, sorted

    // Flips restoring the original profile.
    FlipSet inverse() const;

    bool operator==(const FlipSet&) const = default;
};

struct Instance {
    Profile profile;
    Rule rule;
    Goal goal;
    CostModel cost;
    std::optional<Cost> budget;

    int n() const { return profile.n(); }
    void validate() const;
};

Profile apply_flips(const Profile& p, const FlipSet& flips);

Cost cost_of(const FlipSet& flips, const CostModel& cost, int n);

Profile negate_profile(const Profile& p);

// (|Q+(a)|, |Q-(a)|)
std::pair<int, int> qualifier_counts(const Profile& p, int a);

enum class CheckResult { Ok, GoalViolated, BudgetExceeded };

// Applies the flips, evaluates the rule and checks goal and budget.
CheckResult check_solution(const Instance& inst, const FlipSet& flips);

bool goal_satisfied(const Goal& goal, const std::vector<int>& qualified, int n);

}  // namespace gi

#endif
