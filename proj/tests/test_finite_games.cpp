#include <doctest.h>

#include "oracles.hpp"
#include "pua/engine.hpp"
#include "pua/finite_games.hpp"

using namespace pua;

namespace {

const VarTable kVars({"y"}, {"x"});

// Every prefix of every play against the environment strategy, up to
// `rounds` letters, stays in F.
bool env_strategy_keeps_final(const Dfa& m, const EnvStrategy& s, std::size_t rounds) {
    const VarTable& v = m.vars();
    struct Node {
        StateId q;
        Memory mem;
        EnvMove e;
        std::size_t depth;
    };
    std::vector<Node> stack{{m.initial(), s.initial, s.initial_output, 0}};
    while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        if (n.depth == rounds) continue;
        for (Action a = 0; a < v.actions(); ++a) {
            StateId t = m.next(n.q, v.join(n.e, a));
            if (!m.is_final(t)) return false;
            auto [e, mem] = s.step(n.mem, a);
            stack.push_back({t, mem, e, n.depth + 1});
        }
    }
    return true;
}

}  // namespace

TEST_CASE("agent game agrees with bounded search") {
    oracle::Rng rng(51);
    for (int i = 0; i < 300; ++i) {
        Dfa m = oracle::random_dfa(rng, i % 2 ? kVars : VarTable({"a", "b"}, {"c"}), 6);
        AgentSolution s = agent_realizable(m);
        REQUIRE(s.realizable == oracle::agent_wins_bounded(m, m.state_count()));
        CHECK(s.strategy.has_value() == s.realizable);
        if (s.strategy) CHECK(verify_realizes(*s.strategy, m).accepted());
    }
}

TEST_CASE("environment game agrees with bounded search") {
    oracle::Rng rng(52);
    for (int i = 0; i < 300; ++i) {
        Dfa m = oracle::random_dfa(rng, kVars, 6);
        EnvSolution s = env_realizable(m);
        auto safe = oracle::env_safe_bounded(m, m.state_count());
        for (StateId q = 0; q < m.state_count(); ++q) REQUIRE(s.region.contains(q) == (safe[q] != 0));
        REQUIRE(s.realizable == (safe[m.initial()] != 0));
        if (s.strategy) CHECK(env_strategy_keeps_final(m, *s.strategy, m.state_count() + 2));
    }
}

TEST_CASE("duality of the two games") {
    oracle::Rng rng(53);
    for (int i = 0; i < 300; ++i) {
        Dfa m = oracle::random_dfa(rng, kVars, 6);
        CHECK(env_realizable(m).realizable == !agent_realizable(complement(m)).realizable);
    }
}

TEST_CASE("ranks and safe moves") {
    // F x: the agent plays x at once.
    Dfa m(kVars, 2, 0);
    m.set_final(1);
    for (Letter l = 0; l < 4; ++l) {
        m.set_next(0, l, kVars.agent_of(l) ? 1 : 0);
        m.set_next(1, l, 1);
    }
    AgentSolution a = agent_realizable(m);
    CHECK(a.realizable);
    CHECK(a.region.rank[1] == 0);
    CHECK(a.region.rank[0] == 1);
    CHECK(a.strategy->memory == 3);
    CHECK(a.strategy->step(a.strategy->initial, 0).action == Action{1});
    EnvSolution e = env_realizable(m);
    CHECK_FALSE(e.realizable);
    CHECK(safe_moves(m, e.region, 1) == std::vector<EnvMove>{0, 1});
}
