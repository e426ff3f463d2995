#include "pua/finite_games.hpp"

#include <limits>

namespace pua {

namespace {

constexpr std::uint32_t kNoRank = std::numeric_limits<std::uint32_t>::max();

// Lowest-rank winning reply to e at q, or nullopt if none leads into the region.
std::optional<Action> best_reply(const Dfa& m, const Region& w, StateId q, EnvMove e) {
    const VarTable& v = m.vars();
    std::optional<Action> best;
    std::uint32_t best_rank = kNoRank;
    for (Action a = 0; a < v.actions(); ++a) {
        StateId t = m.next(q, v.join(e, a));
        if (w.contains(t) && w.rank[t] < best_rank) {
            best = a;
            best_rank = w.rank[t];
        }
    }
    return best;
}

bool agent_controls(const Dfa& m, const Region& w, StateId q) {
    const VarTable& v = m.vars();
    for (EnvMove e = 0; e < v.env_moves(); ++e)
        if (!best_reply(m, w, q, e)) return false;
    return true;
}

bool is_safe_move(const Dfa& m, const std::vector<char>& safe, StateId q, EnvMove e) {
    const VarTable& v = m.vars();
    for (Action a = 0; a < v.actions(); ++a) {
        StateId t = m.next(q, v.join(e, a));
        if (!m.is_final(t) || !safe[t]) return false;
    }
    return true;
}

}  // namespace

AgentSolution agent_realizable(const Dfa& m) {
    const std::size_t n = m.state_count();
    const VarTable& v = m.vars();
    AgentSolution out;
    Region& w = out.region;
    w.member.assign(n, 0);
    w.rank.assign(n, kNoRank);
    for (StateId q = 0; q < n; ++q)
        if (m.is_final(q)) {
            w.member[q] = 1;
            w.rank[q] = 0;
        }
    // Least fixpoint; each round only sees states added in earlier rounds.
    for (std::uint32_t round = 1;; ++round) {
        std::vector<StateId> added;
        for (StateId q = 0; q < n; ++q)
            if (!w.member[q] && agent_controls(m, w, q)) added.push_back(q);
        w.iterations = round;
        if (added.empty()) break;
        for (StateId q : added) {
            w.member[q] = 1;
            w.rank[q] = round;
        }
    }

    out.realizable = agent_controls(m, w, m.initial());
    if (!out.realizable) return out;

    const auto start = static_cast<Memory>(n);
    AgentStrategy s(v, n + 1, start);
    for (StateId q = 0; q <= n; ++q) {
        const bool first = q == start;
        const StateId at = first ? m.initial() : q;
        for (EnvMove e = 0; e < v.env_moves(); ++e) {
            AgentMove& mv = s.at(q, e);
            if (!first && m.is_final(at)) {
                mv = {std::nullopt, q};
                continue;
            }
            Action a = best_reply(m, w, at, e).value_or(0);
            mv = {a, m.next(at, v.join(e, a))};
        }
    }
    out.strategy = std::move(s);
    return out;
}

EnvSolution env_realizable(const Dfa& m) {
    const std::size_t n = m.state_count();
    const VarTable& v = m.vars();
    EnvSolution out;
    Region& s = out.region;
    s.member.assign(n, 1);
    s.rank.assign(n, 0);
    // Greatest fixpoint of q ↦ ∃e ∀a: T(q, e∪a) ∈ F ∩ S.
    for (std::uint32_t round = 1;; ++round) {
        std::vector<StateId> removed;
        for (StateId q = 0; q < n; ++q) {
            if (!s.member[q]) continue;
            bool keep = false;
            for (EnvMove e = 0; e < v.env_moves() && !keep; ++e) keep = is_safe_move(m, s.member, q, e);
            if (!keep) removed.push_back(q);
        }
        s.iterations = round;
        if (removed.empty()) break;
        for (StateId q : removed) {
            s.member[q] = 0;
            s.rank[q] = round;
        }
    }

    out.realizable = s.contains(m.initial());
    if (!out.realizable) return out;

    std::vector<EnvMove> choice(n, 0);
    for (StateId q = 0; q < n; ++q) {
        if (!s.member[q]) continue;
        for (EnvMove e = 0; e < v.env_moves(); ++e)
            if (is_safe_move(m, s.member, q, e)) {
                choice[q] = e;
                break;
            }
    }
    EnvStrategy st(v, n, m.initial(), choice[m.initial()]);
    for (StateId q = 0; q < n; ++q)
        for (Action a = 0; a < v.actions(); ++a) {
            StateId t = m.next(q, v.join(choice[q], a));
            st.set(q, a, choice[t], t);
        }
    out.strategy = std::move(st);
    return out;
}

std::vector<EnvMove> safe_moves(const Dfa& m, const Region& safe, StateId q) {
    std::vector<EnvMove> out;
    for (EnvMove e = 0; e < m.vars().env_moves(); ++e)
        if (is_safe_move(m, safe.member, q, e)) out.push_back(e);
    return out;
}

}  // namespace pua
