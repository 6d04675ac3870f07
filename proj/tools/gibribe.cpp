// Command-line front end: evaluate rules, solve and check bribery instances,
// run the enumeration oracle, generate seeded random instances and build the
// hardness-reduction instances.
//
// Exit codes: 0 solved / ok, 2 infeasible or over budget, 3 unsupported,
// 4 parse or validation error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gi/core.hpp"
#include "gi/instance_io.hpp"
#include "gi/oracle.hpp"
#include "gi/rules.hpp"
#include "gi/solvers.hpp"

namespace {

int status_exit_code(gi::SolveStatus st) {
    switch (st) {
        case gi::SolveStatus::Optimal: return 0;
        case gi::SolveStatus::Infeasible: return 2;
        case gi::SolveStatus::BudgetExceeded: return 2;
        case gi::SolveStatus::Unsupported: return 3;
    }
    return 4;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw gi::ParseError("cannot write " + path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gi::ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group identification bribery solver"};
    app.require_subcommand(1);

    std::string in_file, out_file, solution_file, algorithm = "auto", kind;
    bool single_thread = false, all_witnesses = false;
    int oracle_max_n = 8;

    auto* cmd_eval = app.add_subcommand("eval", "evaluate the socially qualified set");
    cmd_eval->add_option("file", in_file)->required();

    auto* cmd_solve = app.add_subcommand("solve", "solve a bribery instance");
    cmd_solve->add_option("file", in_file)->required();
    cmd_solve->add_option("--algorithm", algorithm, "auto or a solver name");
    cmd_solve->add_flag("--single-thread", single_thread, "disable guess-loop parallelism");
    cmd_solve->add_option("-o,--output", out_file, "write the report to a file");

    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive reference solver");
    cmd_oracle->add_option("file", in_file)->required();
    cmd_oracle->add_option("--max-n", oracle_max_n, "instance size guard");
    cmd_oracle->add_flag("--all-witnesses", all_witnesses, "append every optimal witness");
    cmd_oracle->add_option("-o,--output", out_file);

    auto* cmd_check = app.add_subcommand("check", "validate a solution report");
    cmd_check->add_option("instance", in_file)->required();
    cmd_check->add_option("solution", solution_file)->required();

    gi::GenSpec spec;
    std::string gen_rule = "lsr", gen_cost = "agent", gen_goal = "constructive";
    int gen_s = 1, gen_t = 1;
    long long gen_budget = -1;
    auto* cmd_gen = app.add_subcommand("gen", "generate a seeded random instance");
    cmd_gen->add_option("--n", spec.n)->required();
    cmd_gen->add_option("--rule", gen_rule, "lsr | csr | consent");
    cmd_gen->add_option("--s", gen_s);
    cmd_gen->add_option("--t", gen_t);
    cmd_gen->add_option("--cost", gen_cost, "agent | link");
    cmd_gen->add_option("--density", spec.density);
    cmd_gen->add_option("--seed", spec.seed)->required();
    cmd_gen->add_option("--goal", gen_goal, "constructive | destructive | constdest | exact");
    cmd_gen->add_option("--aplus", spec.aplus_size);
    cmd_gen->add_option("--aminus", spec.aminus_size);
    cmd_gen->add_option("--budget", gen_budget);
    cmd_gen->add_option("--price-min", spec.price_min);
    cmd_gen->add_option("--price-max", spec.price_max);
    cmd_gen->add_option("-o,--output", out_file);

    auto* cmd_reduce = app.add_subcommand("reduce", "build a hardness-reduction instance");
    cmd_reduce->add_option("kind", kind, "setcover | independentset | dominatingset | x3c")
        ->required();
    cmd_reduce->add_option("input", in_file)->required();
    cmd_reduce->add_option("-o,--output", out_file);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_eval->parsed()) {
            gi::Instance inst = gi::load_instance(in_file);
            std::vector<int> q = gi::evaluate(inst.profile, inst.rule);
            std::cout << "qualified " << q.size();
            for (int a : q) std::cout << " " << a + 1;
            std::cout << "\n";
            return 0;
        }

        if (cmd_solve->parsed()) {
            gi::Instance inst = gi::load_instance(in_file);
            gi::SolveOptions opts;
            opts.parallel = !single_thread;
            gi::SolveResult res = gi::solve_by_name(inst, algorithm, opts);
            write_out(out_file, gi::render_solution(res, inst));
            return status_exit_code(res.status);
        }

        if (cmd_oracle->parsed()) {
            gi::Instance inst = gi::load_instance(in_file);
            gi::OracleOptions opts;
            opts.max_n = oracle_max_n;
            opts.max_n_agent = std::min(oracle_max_n, 12);
            std::ostringstream out;
            gi::SolveStatus status;
            if (inst.cost.link) {
                gi::LinkOracleResult r = gi::oracle_link(inst, opts);
                status = r.status;
                gi::SolveResult as_result;
                if (r.status == gi::SolveStatus::Optimal)
                    as_result = gi::SolveResult::optimal(r.cost, r.witnesses.front());
                else
                    as_result = gi::SolveResult::infeasible();
                if (as_result.status == gi::SolveStatus::Optimal && inst.budget &&
                    *as_result.cost > *inst.budget) {
                    status = gi::SolveStatus::BudgetExceeded;
                    as_result = gi::SolveResult::budget_exceeded(*as_result.cost);
                }
                out << gi::render_solution(as_result, inst);
                if (all_witnesses && r.status == gi::SolveStatus::Optimal) {
                    out << "witnesses " << r.witnesses.size() << "\n";
                    for (const gi::FlipSet& w : r.witnesses) {
                        out << "flips " << w.size() << "\n";
                        for (const gi::Flip& f : w.flips)
                            out << f.briber + 1 << " " << f.target + 1 << " "
                                << (f.value == 1 ? '+' : '-') << "\n";
                    }
                }
            } else {
                opts.max_bribed = inst.n();  // full search: results are certified
                gi::AgentOracleResult r = gi::oracle_agent(inst, opts);
                gi::SolveResult as_result;
                if (r.status == gi::SolveStatus::Optimal)
                    as_result = gi::SolveResult::optimal(r.cost, r.witness);
                else
                    as_result = gi::SolveResult::infeasible();
                if (as_result.status == gi::SolveStatus::Optimal && inst.budget &&
                    *as_result.cost > *inst.budget)
                    as_result = gi::SolveResult::budget_exceeded(*as_result.cost);
                status = as_result.status;
                out << gi::render_solution(as_result, inst);
            }
            write_out(out_file, out.str());
            return status_exit_code(status);
        }

        if (cmd_check->parsed()) {
            gi::Instance inst = gi::load_instance(in_file);
            gi::ParsedSolution sol = gi::parse_solution(slurp(solution_file), inst);
            if (sol.status != gi::SolveStatus::Optimal) {
                std::cout << "check skipped: report carries no witness\n";
                return 0;
            }
            if (sol.cost && *sol.cost != gi::cost_of(sol.flips, inst.cost, inst.n())) {
                std::cout << "check cost_mismatch\n";
                return 2;
            }
            switch (gi::check_solution(inst, sol.flips)) {
                case gi::CheckResult::Ok:
                    std::cout << "check ok\n";
                    return 0;
                case gi::CheckResult::GoalViolated:
                    std::cout << "check goal_violated\n";
                    return 2;
                case gi::CheckResult::BudgetExceeded:
                    std::cout << "check budget_exceeded\n";
                    return 2;
            }
        }

        if (cmd_gen->parsed()) {
            if (gen_rule == "lsr")
                spec.rule = gi::Rule::lsr();
            else if (gen_rule == "csr")
                spec.rule = gi::Rule::csr();
            else if (gen_rule == "consent")
                spec.rule = gi::Rule::consent(gen_s, gen_t);
            else
                throw gi::ParseError("unknown rule: " + gen_rule);
            if (gen_cost == "link")
                spec.link = true;
            else if (gen_cost != "agent")
                throw gi::ParseError("unknown cost model: " + gen_cost);
            if (gen_goal == "constructive")
                spec.goal_kind = gi::GoalKind::Constructive;
            else if (gen_goal == "destructive")
                spec.goal_kind = gi::GoalKind::Destructive;
            else if (gen_goal == "constdest")
                spec.goal_kind = gi::GoalKind::ConstDest;
            else if (gen_goal == "exact")
                spec.goal_kind = gi::GoalKind::Exact;
            else
                throw gi::ParseError("unknown goal: " + gen_goal);
            if (gen_budget >= 0) spec.budget = gen_budget;
            write_out(out_file, gi::serialize_instance(gi::generate_random(spec)));
            return 0;
        }

        if (cmd_reduce->parsed()) {
            std::string text = slurp(in_file);
            gi::Instance inst;
            if (kind == "setcover")
                inst = gi::reduce_set_cover(gi::parse_set_cover(text));
            else if (kind == "independentset")
                inst = gi::reduce_independent_set(gi::parse_graph(text));
            else if (kind == "dominatingset")
                inst = gi::reduce_dominating_set(gi::parse_graph(text));
            else if (kind == "x3c")
                inst = gi::reduce_x3c(gi::parse_x3c(text));
            else
                throw gi::ParseError("unknown reduction kind: " + kind);
            write_out(out_file, gi::serialize_instance(inst));
            return 0;
        }
    } catch (const gi::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const gi::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 4;
}
