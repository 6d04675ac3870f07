// Benchmark comparing the serial reference path (guess loops pinned to one
// thread) against the OpenMP-parallel path on the guess-heavy solvers.

#include <chrono>
#include <cstdio>
#include <string>

#include "gi/instance_io.hpp"
#include "gi/solvers.hpp"

namespace {

double time_solver(const gi::Instance& inst, const std::string& name, bool parallel,
                   gi::Cost* cost) {
    gi::SolveOptions opts;
    opts.parallel = parallel;
    auto t0 = std::chrono::steady_clock::now();
    gi::SolveResult r = gi::solve_by_name(inst, name, opts);
    auto t1 = std::chrono::steady_clock::now();
    *cost = r.cost.value_or(-1);
    return std::chrono::duration<double>(t1 - t0).count();
}

void run_case(const char* label, const gi::Instance& inst, const std::string& name) {
    gi::Cost c_serial = 0, c_parallel = 0;
    double ts = time_solver(inst, name, false, &c_serial);
    double tp = time_solver(inst, name, true, &c_parallel);
    std::printf("%-34s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  cost %lld%s\n", label, ts,
                tp, tp > 0 ? ts / tp : 0.0, static_cast<long long>(c_serial),
                c_serial == c_parallel ? "" : "  COST MISMATCH");
}

}  // namespace

int main() {
    {
        gi::GenSpec spec;
        spec.n = 160;
        spec.rule = gi::Rule::csr();
        spec.density = 0.5;
        spec.seed = 7;
        spec.goal_kind = gi::GoalKind::ConstDest;
        spec.aplus_size = 3;
        spec.aminus_size = 3;
        run_case("iter-agent csr n=160 (guesses)", gi::generate_random(spec), "iter-agent");
    }
    {
        gi::GenSpec spec;
        spec.n = 44;
        spec.rule = gi::Rule::csr();
        spec.link = true;
        spec.density = 0.25;
        spec.seed = 11;
        spec.goal_kind = gi::GoalKind::Constructive;
        spec.aplus_size = 6;
        spec.price_max = 4;
        run_case("iter-link-const csr n=44", gi::generate_random(spec), "iter-link-const");
    }
    {
        gi::GenSpec spec;
        spec.n = 48;
        spec.rule = gi::Rule::consent(4, 5);
        spec.density = 0.35;
        spec.seed = 13;
        spec.goal_kind = gi::GoalKind::Constructive;
        spec.aplus_size = 14;
        spec.price_max = 4;
        run_case("consent-cover n=48 |A+|=14", gi::generate_random(spec), "consent-cover");
    }
    {
        gi::GenSpec spec;
        spec.n = 40;
        spec.rule = gi::Rule::consent(3, 4);
        spec.density = 0.4;
        spec.seed = 17;
        spec.goal_kind = gi::GoalKind::ConstDest;
        spec.aplus_size = 7;
        spec.aminus_size = 7;
        spec.price_max = 3;
        run_case("consent-constdest n=40 |goal|=14", gi::generate_random(spec),
                 "consent-constdest");
    }
    return 0;
}
