#include "pua/parity.hpp"

#include <algorithm>
#include <deque>

namespace pua {

std::uint32_t ParityGame::add_node(std::uint8_t player, Color c) {
    owner.push_back(player);
    color.push_back(c);
    succ.emplace_back();
    return static_cast<std::uint32_t>(owner.size() - 1);
}

namespace {

class Zielonka {
public:
    explicit Zielonka(const ParityGame& g) : g_(g), pred_(g.size()) {
        for (std::uint32_t v = 0; v < g.size(); ++v)
            for (const auto& e : g.succ[v]) pred_[e.to].push_back(v);
        sol_.winner.assign(g.size(), 0);
        sol_.choice.assign(g.size(), 0);
    }

    GameSolution run() {
        std::vector<char> all(g_.size(), 1);
        auto w = solve(all);
        for (std::uint32_t v = 0; v < g_.size(); ++v) sol_.winner[v] = w[1][v] ? 1 : 0;
        return sol_;
    }

private:
    using Set = std::vector<char>;

    // Attractor for `player` to `target` inside `alive`; records attracting edges.
    Set attractor(const Set& alive, const Set& target, std::uint8_t player) {
        Set attr = target;
        std::vector<std::uint32_t> count(g_.size(), 0);
        std::deque<std::uint32_t> queue;
        for (std::uint32_t v = 0; v < g_.size(); ++v) {
            if (!alive[v]) continue;
            if (attr[v]) queue.push_back(v);
            for (const auto& e : g_.succ[v])
                if (alive[e.to]) ++count[v];
        }
        while (!queue.empty()) {
            std::uint32_t t = queue.front();
            queue.pop_front();
            for (std::uint32_t v : pred_[t]) {
                if (!alive[v] || attr[v]) continue;
                if (g_.owner[v] == player) {
                    attr[v] = 1;
                    sol_.choice[v] = edge_to(v, t);
                    queue.push_back(v);
                } else if (--count[v] == 0) {
                    attr[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        return attr;
    }

    std::uint32_t edge_to(std::uint32_t v, std::uint32_t t) const {
        const auto& s = g_.succ[v];
        for (std::uint32_t i = 0; i < s.size(); ++i)
            if (s[i].to == t) return i;
        return 0;
    }

    static Set minus(const Set& a, const Set& b) {
        Set out(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && !b[i];
        return out;
    }

    static bool empty(const Set& s) { return std::none_of(s.begin(), s.end(), [](char c) { return c != 0; }); }

    // Returns the winning regions {W0, W1} of the subgame induced by `alive`.
    std::array<Set, 2> solve(const Set& alive) {
        const std::size_t n = g_.size();
        std::array<Set, 2> w{Set(n, 0), Set(n, 0)};
        Color top = 0;
        bool any = false;
        for (std::uint32_t v = 0; v < n; ++v)
            if (alive[v]) {
                top = any ? std::max(top, g_.color[v]) : g_.color[v];
                any = true;
            }
        if (!any) return w;

        const auto i = static_cast<std::uint8_t>(top % 2);
        Set u(n, 0);
        for (std::uint32_t v = 0; v < n; ++v) u[v] = alive[v] && g_.color[v] == top;
        // Top-color nodes of player i may move anywhere inside the subgame.
        for (std::uint32_t v = 0; v < n; ++v)
            if (u[v] && g_.owner[v] == i) {
                const auto& s = g_.succ[v];
                for (std::uint32_t k = 0; k < s.size(); ++k)
                    if (alive[s[k].to]) {
                        sol_.choice[v] = k;
                        break;
                    }
            }
        Set a = attractor(alive, u, i);
        auto sub = solve(minus(alive, a));
        if (empty(sub[1 - i])) {
            w[i] = alive;
            return w;
        }
        Set b = attractor(alive, sub[1 - i], static_cast<std::uint8_t>(1 - i));
        auto rest = solve(minus(alive, b));
        w[i] = rest[i];
        for (std::uint32_t v = 0; v < n; ++v) w[1 - i][v] = rest[1 - i][v] || b[v];
        return w;
    }

    const ParityGame& g_;
    std::vector<std::vector<std::uint32_t>> pred_;
    GameSolution sol_;
};

// Environment nodes are the automaton states; agent nodes are (state, env move).
ParityGame arena(const Dpw& m, std::uint8_t agent_player) {
    const VarTable& v = m.vars();
    const std::size_t n = m.state_count();
    const auto env_player = static_cast<std::uint8_t>(1 - agent_player);
    ParityGame g;
    for (StateId q = 0; q < n; ++q) g.add_node(env_player, m.color(q));
    for (StateId q = 0; q < n; ++q)
        for (EnvMove e = 0; e < v.env_moves(); ++e) {
            // The lowest color never decides a play that also visits states.
            auto node = g.add_node(agent_player, 0);
            g.succ[q].push_back({node, e});
            for (Action a = 0; a < v.actions(); ++a) g.succ[node].push_back({m.next(q, v.join(e, a)), a});
        }
    return g;
}

ParityRegions regions_from(const Dpw& m, const GameSolution& s, std::uint8_t agent_player) {
    const VarTable& v = m.vars();
    const std::size_t n = m.state_count();
    ParityRegions r;
    r.agent_wins.assign(n, 0);
    r.env_wins.assign(n, 0);
    r.agent_choice.assign(n * v.env_moves(), 0);
    r.env_choice.assign(n, 0);
    // The game is over normalized colors, so node layout matches arena().
    ParityGame g = arena(m, agent_player);
    for (StateId q = 0; q < n; ++q) {
        const bool agent = s.winner[q] == agent_player;
        r.agent_wins[q] = agent;
        r.env_wins[q] = !agent;
        if (!agent) r.env_choice[q] = g.succ[q][s.choice[q]].label;
        for (EnvMove e = 0; e < v.env_moves(); ++e) {
            auto node = static_cast<std::uint32_t>(n + q * v.env_moves() + e);
            if (s.winner[node] == agent_player) r.agent_choice[q * v.env_moves() + e] = g.succ[node][s.choice[node]].label;
        }
    }
    return r;
}

AgentStrategy positional_agent(const Dpw& m, const ParityRegions& r) {
    const VarTable& v = m.vars();
    AgentStrategy s(v, m.state_count(), m.initial());
    for (StateId q = 0; q < m.state_count(); ++q)
        for (EnvMove e = 0; e < v.env_moves(); ++e) {
            Action a = r.agent_choice[q * v.env_moves() + e];
            s.at(q, e) = {a, m.next(q, v.join(e, a))};
        }
    return s;
}

EnvStrategy positional_env(const Dpw& m, const std::vector<EnvMove>& choice) {
    const VarTable& v = m.vars();
    EnvStrategy s(v, m.state_count(), m.initial(), choice[m.initial()]);
    for (StateId q = 0; q < m.state_count(); ++q)
        for (Action a = 0; a < v.actions(); ++a) {
            StateId t = m.next(q, v.join(choice[q], a));
            s.set(q, a, choice[t], t);
        }
    return s;
}

}  // namespace

GameSolution solve_game(const ParityGame& g) { return Zielonka(g).run(); }

ParityRegions solve_parity_game(const Dpw& m) {
    Dpw norm = normalize_colors(m);
    return regions_from(norm, solve_game(arena(norm, 0)), 0);
}

DpwAgentSolution dpw_agent_realizable(const Dpw& m) {
    Dpw norm = normalize_colors(m);
    ParityRegions r = solve_parity_game(norm);
    DpwAgentSolution out;
    out.realizable = r.agent_wins[norm.initial()] != 0;
    if (out.realizable) out.strategy = positional_agent(norm, r);
    return out;
}

DpwEnvSolution dpw_env_realizable(const Dpw& m) {
    Dpw norm = normalize_colors(m);
    // Here the environment is player 0 and wants the even parity.
    ParityRegions r = regions_from(norm, solve_game(arena(norm, 1)), 1);
    DpwEnvSolution out;
    out.realizable = r.env_wins[norm.initial()] != 0;
    if (out.realizable) out.strategy = positional_env(norm, r.env_choice);
    return out;
}

}  // namespace pua
