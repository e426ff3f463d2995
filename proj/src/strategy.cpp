#include "pua/strategy.hpp"

#include <tuple>

namespace pua {

AgentStrategy::AgentStrategy(VarTable v, std::size_t mem, Memory init)
    : vars(std::move(v)), memory(mem), initial(init), moves(mem * vars.env_moves()) {}

EnvStrategy::EnvStrategy(VarTable v, std::size_t mem, Memory init, EnvMove first)
    : vars(std::move(v)),
      memory(mem),
      initial(init),
      initial_output(first),
      output(mem * vars.actions(), 0),
      next(mem * vars.actions(), 0) {}

PlayResult play(const AgentStrategy& agent, const EnvStrategy& env, std::size_t max_rounds) {
    PlayResult r;
    EnvMove e = env.initial_output;
    Memory me = env.initial;
    Memory ma = agent.initial;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        const AgentMove& mv = agent.step(ma, e);
        if (!mv.action) {
            r.halted = true;
            return r;
        }
        r.trace.push_back(agent.vars.join(e, *mv.action));
        ma = mv.next;
        std::tie(e, me) = env.step(me, *mv.action);
    }
    return r;
}

AgentStrategy constant_agent(const VarTable& vars, Action a, std::optional<std::size_t> rounds) {
    if (!rounds) {
        AgentStrategy s(vars, 1);
        for (auto& mv : s.moves) mv = {a, 0};
        return s;
    }
    AgentStrategy s(vars, *rounds + 1);
    for (Memory m = 0; m < *rounds; ++m)
        for (EnvMove e = 0; e < vars.env_moves(); ++e) s.at(m, e) = {a, m + 1};
    for (EnvMove e = 0; e < vars.env_moves(); ++e) s.at(static_cast<Memory>(*rounds), e) = {std::nullopt, static_cast<Memory>(*rounds)};
    return s;
}

EnvStrategy constant_env(const VarTable& vars, EnvMove e) {
    EnvStrategy s(vars, 1, 0, e);
    for (Action a = 0; a < vars.actions(); ++a) s.set(0, a, e, 0);
    return s;
}

}  // namespace pua
