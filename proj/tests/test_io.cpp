#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "pua/engine.hpp"
#include "pua/io.hpp"

using namespace pua;

namespace {

const VarTable kVars({"y"}, {"x"});

std::size_t error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_automaton(in);
    } catch (const FormatError& e) {
        return e.line();
    }
    return ~std::size_t{0};
}

}  // namespace

TEST_CASE("automata round-trip") {
    oracle::Rng rng(91);
    for (int i = 0; i < 50; ++i) {
        Dfa d = oracle::random_dfa(rng, kVars, 5);
        std::ostringstream out;
        write_dfa(out, d);
        std::istringstream in(out.str());
        CHECK(std::get<Dfa>(read_automaton(in)) == d);

        Dpw p = oracle::random_dpw(rng, VarTable({"a", "b"}, {}), 4, 4);
        std::ostringstream out2;
        write_dpw(out2, p);
        std::istringstream in2(out2.str());
        CHECK(std::get<Dpw>(read_automaton(in2)) == p);
    }
}

TEST_CASE("automaton format errors") {
    const std::string head = "vars: y | x\nstates: 1\ninitial: 0\nfinals: 0\n";
    std::string full = head;
    for (const char* bits : {"00", "10", "01", "11"}) full += std::string("0 ") + bits + " 0\n";
    std::istringstream ok(full);
    CHECK(std::get<Dfa>(read_automaton(ok)).is_final(0));
    CHECK(error_line(head + "0 00 0\n0 00 0\n") == 6);
    CHECK(error_line(head + "0 0 0\n") == 5);
    CHECK(error_line(head + "0 00 3\n") == 5);
    CHECK(error_line(head + "0 00 0\n") == 0);
    CHECK(error_line("vars: y x\nstates: 1\ninitial: 0\nfinals:\n") == 1);
    CHECK(error_line("# comment\nvars: y | x\nstates: 1\ninitial: 4\nfinals:\n") == 4);
}

TEST_CASE("strategies round-trip") {
    Problem p;
    p.vars = kVars;
    p.assumption = parse_formula("y -> x", kVars);
    p.goal = parse_formula("y -> !x", kVars);
    Verdict v = synthesize(p);
    REQUIRE(v.strategy);
    std::ostringstream out;
    write_agent_strategy(out, *v.strategy);
    std::istringstream in(out.str());
    CHECK(std::get<AgentStrategy>(read_strategy(in, kVars)) == *v.strategy);

    EnvStrategy e = constant_env(kVars, 1);
    std::ostringstream out2;
    write_env_strategy(out2, e);
    std::istringstream in2(out2.str());
    CHECK(std::get<EnvStrategy>(read_strategy(in2, kVars)) == e);

    std::istringstream partial("type: agent\nmemory: 1\ninitial: 0\n0 0 -> halt 0\n");
    CHECK_THROWS_AS(read_strategy(partial, kVars), FormatError);
    std::istringstream env_halt("type: env\nmemory: 1\ninitial: 0 output 0\n0 0 -> halt 0\n0 1 -> 0 0\n");
    CHECK_THROWS_AS(read_strategy(env_halt, kVars), FormatError);
}

TEST_CASE("domain and problem files") {
    std::istringstream dom(
        "# two rooms\nenv: room\nagent: go\ninit: !room\npre: true\ntrans: go | !go & (room' & room | !room' & !room)\n");
    Domain d = read_domain(dom);
    CHECK(d.vars == VarTable({"room"}, {"go"}));
    CHECK(validate(d).transition_count() == 6);

    std::istringstream prob("semantics: finite\nenv: y\nagent: x\nassumption: y -> x\ngoal: y -> !x\n");
    Problem p = read_problem(prob, ".");
    CHECK(p.vars == kVars);
    CHECK_FALSE(p.is_planning());
    CHECK(std::get<Formula>(p.goal) == parse_formula("y -> !x", kVars));

    std::istringstream bad("env: y\nagent: x\ngoal: y &\n");
    try {
        read_problem(bad, ".");
        FAIL("expected an error");
    } catch (const FormatError& e) {
        CHECK(e.line() == 3);
    }
    std::istringstream unknown("env: y\nagent: x\ngoal: y\ncolour: red\n");
    CHECK_THROWS_AS(read_problem(unknown, "."), FormatError);
    std::istringstream no_goal("env: y\nagent: x\n");
    CHECK_THROWS_AS(read_problem(no_goal, "."), FormatError);
}
