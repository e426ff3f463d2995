// Command-line front end: checks assumptions, synthesizes, plans, verifies
// strategies and compiles domains and formulas to automata.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pua/domain.hpp"
#include "pua/engine.hpp"
#include "pua/io.hpp"
#include "pua/ltlf_compile.hpp"

namespace fs = std::filesystem;
using namespace pua;

namespace {

enum Exit { kOk = 0, kUnrealizable = 1, kInvalidAssumption = 2, kInputError = 3, kUnsupported = 4 };

void summary(const std::string& key, const std::string& value) { std::cout << key << ": " << value << '\n'; }
void summary(const std::string& key, std::size_t value) { summary(key, std::to_string(value)); }

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError(path.string(), 0, "cannot write file");
    out << text;
}

template <typename Writer, typename Value>
std::string render(Writer w, const Value& v) {
    std::ostringstream os;
    w(os, v);
    return os.str();
}

int exit_for(Status s) {
    switch (s) {
        case Status::Realizable: return kOk;
        case Status::Unrealizable: return kUnrealizable;
        case Status::InvalidAssumption: return kInvalidAssumption;
        case Status::Unsupported: return kUnsupported;
    }
    return kUnsupported;
}

void emit_automata(const Problem& p, const fs::path& dir) {
    fs::create_directories(dir);
    if (p.semantics == Semantics::Finite) {
        Dfa assume = assumption_dfa(p);
        Dfa goal = objective_dfa(p.goal, p.vars);
        write_text(dir / "assumption.dfa", render(write_dfa, assume));
        write_text(dir / "goal.dfa", render(write_dfa, goal));
        write_text(dir / "game.dfa", render(write_dfa, minimize(combine(assume, goal, Connective::Implies))));
        if (p.is_planning()) write_text(dir / "domain.dfa", render(write_dfa, omega_d_dfa(*p.domain)));
        return;
    }
    Dpw assume = objective_dpw(p.assumption, p.vars);
    Dpw goal = objective_dpw(p.goal, p.vars);
    write_text(dir / "assumption.dpw", render(write_dpw, assume));
    write_text(dir / "goal.dpw", render(write_dpw, goal));
    if (p.is_planning()) write_text(dir / "domain.dpw", render(write_dpw, omega_d_dpw(*p.domain)));
}

int run_solve(const std::string& file, const std::string& out, const std::string& emit, bool planning) {
    Problem p = load_problem(file);
    if (planning != p.is_planning())
        throw FormatError(file, 0, planning ? "plan needs a problem with a domain" : "problem has a domain; use plan");
    if (!emit.empty()) {
        try {
            emit_automata(p, emit);
        } catch (const UnsupportedError&) {
        }
    }
    Verdict v = solve(p);
    summary("status", to_string(v.status));
    for (const auto& [k, n] : v.diagnostics) summary(k, n);
    if (!v.reason.empty()) summary("reason", v.reason);
    if (v.exported) summary("exported", pua::to_string(*v.exported, p.vars));
    if (v.strategy) {
        summary("strategy_memory", v.strategy->memory);
        if (!out.empty()) write_text(out, render(write_agent_strategy, *v.strategy));
    }
    return exit_for(v.status);
}

int run_check(const std::string& file) {
    Problem p = load_problem(file);
    bool valid = check_assumption(p);
    summary("status", valid ? "VALID" : "INVALID");
    if (p.semantics == Semantics::Finite) {
        summary("assumption_states", assumption_dfa(p).state_count());
    } else {
        summary("assumption_states", objective_dpw(p.assumption, p.vars).state_count());
        if (p.is_planning()) summary("domain_states", omega_d_dpw(*p.domain).state_count());
    }
    return valid ? kOk : kInvalidAssumption;
}

std::string outcome_name(VerifyResult::Outcome o) {
    switch (o) {
        case VerifyResult::Outcome::Accept: return "ACCEPT";
        case VerifyResult::Outcome::EmptyPlay: return "REJECT_EMPTY_PLAY";
        case VerifyResult::Outcome::GoalViolated: return "REJECT_GOAL_VIOLATED";
        case VerifyResult::Outcome::NonTerminating: return "REJECT_NON_TERMINATING";
    }
    return "?";
}

int run_verify(const std::string& problem_file, const std::string& strategy_file) {
    Problem p = load_problem(problem_file);
    std::istringstream in(read_file(strategy_file));
    auto s = read_strategy(in, p.vars, strategy_file);
    const auto* agent = std::get_if<AgentStrategy>(&s);
    if (!agent) throw FormatError(strategy_file, 0, "expected an agent strategy");
    VerifyResult r = verify_strategy(p, *agent);
    summary("status", outcome_name(r.outcome));
    if (!r.accepted()) {
        std::string moves;
        for (EnvMove e : r.env_moves) moves += (moves.empty() ? "" : " ") + to_bits(e, p.vars.env_count());
        summary("env_moves", moves);
        summary("witness", trace_to_string(p.vars, r.trace));
        if (!r.loop.empty()) summary("loop", trace_to_string(p.vars, r.loop));
    }
    return r.accepted() ? kOk : kUnrealizable;
}

int run_compile_domain(const std::string& file, const std::string& target, const std::string& out) {
    Domain d = load_domain(file);
    std::string text;
    if (target == "ltlf") text = pua::to_string(omega_d_ltlf(d), d.vars) + "\n";
    else if (target == "dfa") text = render(write_dfa, minimize(omega_d_dfa(d)));
    else if (target == "dpw") text = render(write_dpw, omega_d_dpw(d));
    else if (target == "fairness") text = pua::to_string(fairness_formula(d), d.vars) + "\n";
    else {
        validate(d);
        text = pua::to_string(exec_formula(d), d.vars) + "\n";
    }
    if (out.empty()) std::cout << text;
    else write_text(out, text);
    return kOk;
}

std::vector<std::string> split_names(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

int run_compile_formula(const std::string& formula, const std::string& env, const std::string& agent,
                        const std::string& out) {
    VarTable vars(split_names(env), split_names(agent));
    Formula f = parse_formula(formula, vars);
    std::string text = render(write_dfa, compile(f, vars));
    if (out.empty()) std::cout << text;
    else write_text(out, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthesis and planning under environment assumptions"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Reserved for randomized corpus generation");

    std::string problem, out, emit, strategy, domain, target = "ltlf", formula, env, agent;

    auto* check = app.add_subcommand("check-assumption", "Decide whether the assumption is environment realizable");
    check->add_option("problem", problem)->required();

    auto* synth = app.add_subcommand("synthesize", "Synthesis under assumptions");
    auto* planner = app.add_subcommand("plan", "Planning under assumptions");
    for (auto* c : {synth, planner}) {
        c->add_option("problem", problem)->required();
        c->add_option("--out", out, "Write the strategy here");
        c->add_option("--emit-automata", emit, "Dump intermediate automata into this directory");
    }

    auto* verify = app.add_subcommand("verify", "Check that a strategy realizes the goal under the assumption");
    verify->add_option("problem", problem)->required();
    verify->add_option("strategy", strategy)->required();

    auto* cdomain = app.add_subcommand("compile-domain", "Compile a domain");
    cdomain->add_option("domain", domain)->required();
    cdomain->add_option("--to", target)->check(CLI::IsMember({"ltlf", "dfa", "dpw", "fairness", "exec"}));
    cdomain->add_option("--out", out);

    auto* cformula = app.add_subcommand("compile-formula", "Compile an LTLf formula to a minimal DFA");
    cformula->add_option("formula", formula)->required();
    cformula->add_option("--env", env, "Environment variables, space separated");
    cformula->add_option("--agent", agent, "Agent variables, space separated");
    cformula->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return run_check(problem);
        if (*synth) return run_solve(problem, out, emit, false);
        if (*planner) return run_solve(problem, out, emit, true);
        if (*verify) return run_verify(problem, strategy);
        if (*cdomain) return run_compile_domain(domain, target, out);
        if (*cformula) return run_compile_formula(formula, env, agent, out);
    } catch (const InvalidAssumptionError& e) {
        summary("status", "INVALID_ASSUMPTION");
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidAssumption;
    } catch (const UnsupportedError& e) {
        summary("status", "UNSUPPORTED");
        std::cerr << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const GuardError& e) {
        summary("status", "UNSUPPORTED");
        std::cerr << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const ParseError& e) {
        std::cerr << "error: column " << e.offset() + 1 << ": " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
