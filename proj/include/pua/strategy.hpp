#pragma once

#include <optional>
#include <vector>

#include "pua/vars.hpp"

namespace pua {

using Memory = std::uint32_t;

struct AgentMove {
    /// Empty means the agent stops the play.
    std::optional<Action> action;
    Memory next = 0;

    bool operator==(const AgentMove&) const = default;
};

/// Finite-state agent transducer: memory × env move → action or halt.
/// Encodes a partial map from non-empty env histories to actions.
struct AgentStrategy {
    VarTable vars;
    std::size_t memory = 1;
    Memory initial = 0;
    /// moves[m * |ℰ| + e]
    std::vector<AgentMove> moves;

    AgentStrategy() = default;
    AgentStrategy(VarTable v, std::size_t mem, Memory init = 0);

    const AgentMove& step(Memory m, EnvMove e) const { return moves[m * vars.env_moves() + e]; }
    AgentMove& at(Memory m, EnvMove e) { return moves[m * vars.env_moves() + e]; }
    bool operator==(const AgentStrategy&) const = default;
};

/// Finite-state environment transducer. It emits `initial_output` on the
/// empty history and then answers every action; it is total.
struct EnvStrategy {
    VarTable vars;
    std::size_t memory = 1;
    Memory initial = 0;
    EnvMove initial_output = 0;
    /// output[m * |𝒜| + a], next[m * |𝒜| + a]
    std::vector<EnvMove> output;
    std::vector<Memory> next;

    EnvStrategy() = default;
    EnvStrategy(VarTable v, std::size_t mem, Memory init = 0, EnvMove first = 0);

    std::pair<EnvMove, Memory> step(Memory m, Action a) const {
        auto i = m * vars.actions() + a;
        return {output[i], next[i]};
    }
    void set(Memory m, Action a, EnvMove out, Memory to) {
        auto i = m * vars.actions() + a;
        output[i] = out;
        next[i] = to;
    }
    bool operator==(const EnvStrategy&) const = default;
};

struct PlayResult {
    Trace trace;
    /// False when max_rounds elapsed without the agent stopping.
    bool halted = false;
};

/// The longest trace complying with both strategies, cut at max_rounds.
PlayResult play(const AgentStrategy& agent, const EnvStrategy& env, std::size_t max_rounds);

/// Agent strategy that always plays `a`; with `rounds` set it stops after
/// that many rounds.
AgentStrategy constant_agent(const VarTable& vars, Action a, std::optional<std::size_t> rounds = std::nullopt);
/// Environment strategy that always plays `e`.
EnvStrategy constant_env(const VarTable& vars, EnvMove e);

}  // namespace pua
