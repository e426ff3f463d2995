#pragma once

#include <optional>
#include <vector>

#include "pua/dfa.hpp"
#include "pua/strategy.hpp"

namespace pua {

/// Winning region of a DFA game together with the fixpoint stage at which
/// each state entered (agent game) or left (environment game) the region.
struct Region {
    std::vector<char> member;
    /// Agent game: 0 for final states, i for states added in round i.
    /// Environment game: 0 for safe states, i for states removed in round i.
    std::vector<std::uint32_t> rank;
    std::size_t iterations = 0;

    bool contains(StateId q) const { return member[q] != 0; }
};

struct AgentSolution {
    bool realizable = false;
    Region region;
    std::optional<AgentStrategy> strategy;
};

struct EnvSolution {
    bool realizable = false;
    Region region;
    std::optional<EnvStrategy> strategy;
};

/// Reachability game on the DFA, environment first in each round. The agent
/// wins by stopping in a final state after at least one round. The extracted
/// strategy uses the DFA states as memory plus one start cell (the last one),
/// follows the lowest-rank successor and stops exactly in final states.
AgentSolution agent_realizable(const Dfa& m);

/// Dual safety game: the environment must keep every non-empty prefix inside
/// the final states, since the agent may stop at any time. The extracted
/// strategy is positional on DFA states and plays the lowest safe move.
EnvSolution env_realizable(const Dfa& m);

/// Environment moves at `q` that keep the run in F ∩ safe whatever the agent
/// answers.
std::vector<EnvMove> safe_moves(const Dfa& m, const Region& safe, StateId q);

}  // namespace pua
