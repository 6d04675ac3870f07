#ifndef GI_RULES_HPP
#define GI_RULES_HPP

#include <vector>

#include "gi/core.hpp"

namespace gi {

// Least fixpoint of K_i = { a | exists a' in K_{i-1}: phi(a',a) = 1 } seeded
// with K_1 = seeds, computed as reachability in the qualification graph with
// the seeds counted as qualified. Returns a sorted set.
std::vector<int> iterative_closure(const Profile& p, const std::vector<int>& seeds);

// Socially qualified set under the given rule. Sorted.
std::vector<int> evaluate(const Profile& p, const Rule& rule);

}  // namespace gi

#endif
