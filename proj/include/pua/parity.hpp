#pragma once

#include <optional>
#include <vector>

#include "pua/dpw.hpp"
#include "pua/strategy.hpp"

namespace pua {

/// Explicit two-player max-parity game. Player 0 wins plays whose largest
/// infinitely recurring color is even. Every node needs a successor.
struct ParityGame {
    struct Edge {
        std::uint32_t to;
        std::uint32_t label;
    };
    std::vector<std::uint8_t> owner;
    std::vector<Color> color;
    std::vector<std::vector<Edge>> succ;

    std::size_t size() const { return owner.size(); }
    std::uint32_t add_node(std::uint8_t player, Color c);
};

struct GameSolution {
    /// Winning player per node.
    std::vector<std::uint8_t> winner;
    /// Index into succ[v] of the chosen edge, meaningful where owner == winner.
    std::vector<std::uint32_t> choice;
};

/// Recursive attractor decomposition (Zielonka) with positional strategies.
GameSolution solve_game(const ParityGame& g);

/// Winning regions of the automaton game: each round the environment picks
/// e ∈ ℰ, then the agent picks a ∈ 𝒜. Both players' strategies are positional
/// on automaton states (agent: per state and env move).
struct ParityRegions {
    std::vector<char> agent_wins;
    std::vector<char> env_wins;
    /// agent_choice[q * |ℰ| + e], defined on agent_wins.
    std::vector<Action> agent_choice;
    /// env_choice[q], defined on env_wins.
    std::vector<EnvMove> env_choice;
};

/// Solves the game where the agent wants the run accepted.
ParityRegions solve_parity_game(const Dpw& m);

struct DpwAgentSolution {
    bool realizable = false;
    std::optional<AgentStrategy> strategy;
};

struct DpwEnvSolution {
    bool realizable = false;
    std::optional<EnvStrategy> strategy;
};

DpwAgentSolution dpw_agent_realizable(const Dpw& m);
/// Solves the game in which the environment is the player wanting the run
/// accepted; by determinacy this agrees with !dpw_agent_realizable(complement).
DpwEnvSolution dpw_env_realizable(const Dpw& m);

}  // namespace pua
