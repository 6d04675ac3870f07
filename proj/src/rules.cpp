#include "gi/rules.hpp"

#include <algorithm>

namespace gi {

std::vector<int> iterative_closure(const Profile& p, const std::vector<int>& seeds) {
    const int n = p.n();
    std::vector<char> in(n, 0);
    std::vector<int> stack;
    stack.reserve(n);
    for (int a : seeds) {
        if (!in[a]) {
            in[a] = 1;
            stack.push_back(a);
        }
    }
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < n; ++b) {
            if (!in[b] && p.at(a, b) == 1) {
                in[b] = 1;
                stack.push_back(b);
            }
        }
    }
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (in[a]) out.push_back(a);
    return out;
}

std::vector<int> evaluate(const Profile& p, const Rule& rule) {
    rule.validate(p.n());
    const int n = p.n();
    switch (rule.kind) {
        case RuleKind::Lsr: {
            std::vector<int> seeds;
            for (int a = 0; a < n; ++a)
                if (p.self_qualifies(a)) seeds.push_back(a);
            return iterative_closure(p, seeds);
        }
        case RuleKind::Csr:
            return iterative_closure(p, p.qualified_by_all());
        case RuleKind::Consent: {
            std::vector<int> out;
            for (int a = 0; a < n; ++a) {
                int qp = p.qplus(a);
                bool qualified = p.self_qualifies(a) ? qp >= rule.s : (n - qp) <= rule.t - 1;
                if (qualified) out.push_back(a);
            }
            return out;
        }
    }
    return {};
}

}  // namespace gi
