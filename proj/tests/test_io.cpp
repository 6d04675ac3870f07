#include <string>

#include "doctest.h"
#include "gi/instance_io.hpp"
#include "gi/oracle.hpp"
#include "gi/rules.hpp"
#include "gi/solvers.hpp"
#include "test_util.hpp"

using namespace gi;

namespace {

const char* kExampleFile = R"(# worked example
agents 5
rule consent 3 3
cost agent
goal exact 2 1 4
profile
11000
10000
11000
10010
11110
)";

}  // namespace

TEST_CASE("parse the worked example file") {
    Instance inst = parse_instance(kExampleFile);
    CHECK(inst.n() == 5);
    CHECK(inst.rule == Rule::consent(3, 3));
    CHECK(inst.goal.kind == GoalKind::Exact);
    CHECK(inst.goal.aplus == std::vector<int>{0, 3});
    CHECK(inst.profile == gitest::paper_profile());
    CHECK(!inst.cost.link);
    CHECK(!inst.budget);
}

TEST_CASE("parse errors carry line context") {
    CHECK_THROWS_AS(parse_instance("agents 3\nrule lsr\ncost agent\n"), ParseError);  // no profile
    CHECK_THROWS_AS(parse_instance("agents 3\nrule lsr\ncost agent\nprofile\n111\n11\n111\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance("agents 3\nrule consent 4 2\ncost agent\nprofile\n111\n111\n111\n"),
                    ParseError);  // s+t > n+2
    CHECK_THROWS_AS(
        parse_instance("agents 3\nrule lsr\ncost agent\ngoal constructive 1 2\n"
                       "goal destructive 1 2\nprofile\n111\n111\n111\n"),
        ParseError);  // overlapping goal sets
    CHECK_THROWS_AS(
        parse_instance("agents 3\nrule lsr\ncost agent\ngoal exact 1 1\n"
                       "goal destructive 1 2\nprofile\n111\n111\n111\n"),
        ParseError);  // exact excludes the others
    CHECK_THROWS_AS(parse_instance("agents 3\nrule lsr\ncost agent\ngoal constructive 1 4\n"
                                   "profile\n111\n111\n111\n"),
                    ParseError);  // index out of range
}

TEST_CASE("serialize then parse is the identity") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        gitest::RandSpec rs;
        rs.seed = seed * 3 + 1;
        rs.n = 3 + static_cast<int>(seed % 6);
        rs.rule = static_cast<int>(seed % 3);
        rs.link = seed % 2 == 0;
        rs.kind = static_cast<GoalKind>(seed % 4);
        rs.price_max = seed % 2 ? 4 : 1;
        Instance inst = gitest::random_instance(rs);
        if (seed % 3 == 0) inst.budget = static_cast<Cost>(seed % 7);
        Instance back = parse_instance(serialize_instance(inst));
        CHECK(back.profile == inst.profile);
        CHECK(back.rule == inst.rule);
        CHECK(back.goal == inst.goal);
        CHECK(back.cost == inst.cost);
        CHECK(back.budget == inst.budget);
    }
}

TEST_CASE("generator determinism and extremes") {
    GenSpec spec;
    spec.n = 6;
    spec.density = 0.5;
    spec.seed = 42;
    spec.link = true;
    spec.price_max = 4;
    CHECK(serialize_instance(generate_random(spec)) ==
          serialize_instance(generate_random(spec)));
    spec.seed = 43;
    GenSpec zero = spec;
    zero.density = 0.0;
    GenSpec one = spec;
    one.density = 1.0;
    Profile p0 = generate_random(zero).profile;
    Profile p1 = generate_random(one).profile;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            CHECK(p0.at(i, j) == -1);
            CHECK(p1.at(i, j) == 1);
        }
}

TEST_CASE("solution report round trip through the checker") {
    Instance inst = parse_instance(kExampleFile);
    SolveResult res = dispatch(inst);
    REQUIRE(res.status == SolveStatus::Optimal);
    std::string report = render_solution(res, inst);
    ParsedSolution sol = parse_solution(report, inst);
    CHECK(sol.status == SolveStatus::Optimal);
    CHECK(sol.cost == res.cost);
    CHECK(sol.flips == *res.witness);
    CHECK(check_solution(inst, sol.flips) == CheckResult::Ok);

    SolveResult unsupported = SolveResult::unsupported("x");
    CHECK(render_solution(unsupported, inst) == "status UNSUPPORTED\n");
    ParsedSolution nothing = parse_solution("status UNSUPPORTED\n", inst);
    CHECK(nothing.status == SolveStatus::Unsupported);

    SolveResult free_fix = SolveResult::optimal(0, FlipSet{});
    std::string zero = render_solution(free_fix, inst);
    CHECK(zero.substr(0, 30) == "status OPTIMAL\ncost 0\nflips 0\n");
}

TEST_CASE("reduction input formats") {
    SetCoverInput sc = parse_set_cover("k 1\nelements 2\nset 1\nset 2\nset 1 2\n");
    CHECK(sc.k == 1);
    CHECK(sc.universe == 2);
    CHECK(sc.sets.size() == 3);
    Instance inst = reduce_set_cover(sc);
    CHECK(inst.n() == 6);
    CHECK(inst.goal.aplus.size() == 2);
    CHECK(inst.budget == 1);

    GraphInput g = parse_graph("vertices 3\nk 2\nedge 1 2\nedge 2 3\n");
    CHECK(g.vertices == 3);
    CHECK(g.edges.size() == 2);

    CHECK_THROWS_AS(reduce_x3c(parse_x3c("m 1\nset 1 2 3\nset 1 2 3\n")),
                    ValidationError);  // only 2 sets
    X3cInput x3 = parse_x3c("m 1\nset 1 2 3\nset 1 2 3\nset 1 2 3\n");
    CHECK(reduce_x3c(x3).n() == 9);
    X3cInput bad = x3;
    bad.sets[2] = {1, 1, 2};  // element 3 appears twice, 3 never
    CHECK_THROWS_AS(reduce_x3c(bad), ValidationError);
}

TEST_CASE("files produced by the generator and reducers re-parse equal") {
    GenSpec spec;
    spec.n = 5;
    spec.seed = 9;
    spec.rule = Rule::consent(2, 2);
    spec.goal_kind = GoalKind::ConstDest;
    spec.aplus_size = 1;
    spec.aminus_size = 2;
    spec.price_max = 3;
    Instance gen = generate_random(spec);
    CHECK(parse_instance(serialize_instance(gen)).profile == gen.profile);

    SetCoverInput sc;
    sc.universe = 3;
    sc.k = 2;
    sc.sets = {{1, 2}, {3}};
    Instance red = reduce_set_cover(sc);
    Instance back = parse_instance(serialize_instance(red));
    CHECK(back.profile == red.profile);
    CHECK(back.goal == red.goal);
    CHECK(back.budget == red.budget);
}
