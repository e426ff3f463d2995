#include <doctest.h>

#include "oracles.hpp"
#include "pua/parity.hpp"

using namespace pua;

namespace {

const VarTable kVars({"y"}, {"x"});

}  // namespace

TEST_CASE("winning regions agree with positional enumeration") {
    oracle::Rng rng(61);
    for (int i = 0; i < 60; ++i) {
        Dpw m = oracle::random_dpw(rng, kVars, 5, 4);
        ParityRegions r = solve_parity_game(m);
        auto o = oracle::parity_by_enumeration(m);
        for (StateId q = 0; q < m.state_count(); ++q) {
            REQUIRE(r.agent_wins[q] == o.agent_wins[q]);
            REQUIRE(r.env_wins[q] == o.env_wins[q]);
            REQUIRE(r.agent_wins[q] != r.env_wins[q]);
        }
    }
}

TEST_CASE("the extracted positional strategies win") {
    oracle::Rng rng(62);
    for (int i = 0; i < 60; ++i) {
        Dpw m = oracle::random_dpw(rng, kVars, 5, 4);
        ParityRegions r = solve_parity_game(m);
        // Fixing the agent's choices leaves a one-player game for the
        // environment; the enumeration oracle on that game must find no win.
        Dpw restricted(kVars, m.state_count(), m.initial());
        for (StateId q = 0; q < m.state_count(); ++q) {
            restricted.set_color(q, m.color(q));
            for (Letter l = 0; l < 4; ++l) {
                const EnvMove e = kVars.env_of(l);
                const Action a = r.agent_wins[q] ? r.agent_choice[q * 2 + e] : kVars.agent_of(l);
                restricted.set_next(q, l, m.next(q, kVars.join(e, a)));
            }
        }
        auto o = oracle::parity_by_enumeration(restricted);
        for (StateId q = 0; q < m.state_count(); ++q)
            if (r.agent_wins[q]) CHECK(o.agent_wins[q]);
    }
}

TEST_CASE("realizability entry points") {
    oracle::Rng rng(63);
    for (int i = 0; i < 100; ++i) {
        Dpw m = oracle::random_dpw(rng, kVars, 6, 3);
        auto o = oracle::parity_by_enumeration(m);
        auto a = dpw_agent_realizable(m);
        auto e = dpw_env_realizable(m);
        CHECK(a.realizable == (o.agent_wins[m.initial()] != 0));
        CHECK(a.strategy.has_value() == a.realizable);
        // The environment wants acceptance here: it wins where the agent,
        // wanting rejection, loses.
        auto oc = oracle::parity_by_enumeration(dpw_complement(m));
        CHECK(e.realizable == (oc.env_wins[m.initial()] != 0));
        CHECK(e.realizable == !dpw_agent_realizable(dpw_complement(m)).realizable);
    }
}

TEST_CASE("solve_game on a hand-made game") {
    // Node 0 (player 0, color 1) can go to 1 (color 2, self loop) or 2
    // (color 3, self loop).
    ParityGame g;
    g.add_node(0, 1);
    g.add_node(1, 2);
    g.add_node(1, 3);
    g.succ[0] = {{1, 0}, {2, 1}};
    g.succ[1] = {{1, 0}};
    g.succ[2] = {{2, 0}};
    GameSolution s = solve_game(g);
    CHECK(s.winner == std::vector<std::uint8_t>{0, 0, 1});
    CHECK(g.succ[0][s.choice[0]].to == 1);
}
