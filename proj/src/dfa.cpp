#include "pua/dfa.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace pua {

Dfa::Dfa(VarTable vars, std::size_t states, StateId initial)
    : vars_(std::move(vars)), initial_(initial) {
    vars_.require_explicit();
    letters_ = static_cast<std::size_t>(vars_.letters());
    delta_.assign(states * letters_, 0);
    finals_.assign(states, 0);
}

void require_same_vars(const VarTable& a, const VarTable& b) {
    if (!(a == b)) throw VocabularyError("automata are over different vocabularies");
}

Dfa all_accepting_dfa(const VarTable& vars) {
    Dfa m(vars, 1);
    m.set_final(0);
    return m;
}

Dfa none_accepting_dfa(const VarTable& vars) { return Dfa(vars, 1); }

bool accepts(const Dfa& m, const Trace& word) {
    if (word.empty()) return false;
    StateId q = m.initial();
    for (Letter l : word) {
        if (l >= m.letter_count()) throw VocabularyError("letter outside the automaton's alphabet");
        q = m.next(q, l);
    }
    return m.is_final(q);
}

Dfa combine(const Dfa& m1, const Dfa& m2, Connective c) {
    require_same_vars(m1.vars(), m2.vars());
    const std::size_t k = m1.letter_count();
    std::unordered_map<std::uint64_t, StateId> index;
    std::vector<std::pair<StateId, StateId>> pairs;
    auto intern = [&](StateId a, StateId b) {
        auto key = (std::uint64_t{a} << 32) | b;
        auto [it, fresh] = index.emplace(key, static_cast<StateId>(pairs.size()));
        if (fresh) pairs.emplace_back(a, b);
        return it->second;
    };
    intern(m1.initial(), m2.initial());
    std::vector<StateId> delta;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        for (Letter l = 0; l < k; ++l) delta.push_back(intern(m1.next(a, l), m2.next(b, l)));
    }
    Dfa out(m1.vars(), pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out.set_final(static_cast<StateId>(i),
                      apply(c, m1.is_final(pairs[i].first), m2.is_final(pairs[i].second)));
        for (Letter l = 0; l < k; ++l) out.set_next(static_cast<StateId>(i), l, delta[i * k + l]);
    }
    return out;
}

Dfa complement(const Dfa& m) {
    Dfa out = m;
    for (StateId q = 0; q < m.state_count(); ++q) out.set_final(q, !m.is_final(q));
    return out;
}

std::vector<StateId> reachable_states(const Dfa& m) {
    std::vector<char> seen(m.state_count(), 0);
    std::vector<StateId> order{m.initial()};
    seen[m.initial()] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter l = 0; l < m.letter_count(); ++l) {
            StateId t = m.next(order[i], l);
            if (!seen[t]) {
                seen[t] = 1;
                order.push_back(t);
            }
        }
    }
    return order;
}

namespace {

// Renumbers the reachable part in breadth-first order.
Dfa renumber_bfs(const Dfa& m) {
    auto order = reachable_states(m);
    std::vector<StateId> id(m.state_count(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<StateId>(i);
    Dfa out(m.vars(), order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.set_final(static_cast<StateId>(i), m.is_final(order[i]));
        for (Letter l = 0; l < m.letter_count(); ++l)
            out.set_next(static_cast<StateId>(i), l, id[m.next(order[i], l)]);
    }
    return out;
}

// Copy of m whose initial state is a fresh state (never re-entered) with the
// given finality.
Dfa with_fresh_initial(const Dfa& m, bool final) {
    const auto n = static_cast<StateId>(m.state_count());
    Dfa out(m.vars(), n + 1, n);
    for (StateId q = 0; q < n; ++q) {
        out.set_final(q, m.is_final(q));
        for (Letter l = 0; l < m.letter_count(); ++l) out.set_next(q, l, m.next(q, l));
    }
    out.set_final(n, final);
    for (Letter l = 0; l < m.letter_count(); ++l) out.set_next(n, l, m.next(m.initial(), l));
    return out;
}

}  // namespace

Dfa hopcroft_minimize(const Dfa& input) {
    const Dfa m = renumber_bfs(input);
    const std::size_t n = m.state_count();
    const std::size_t k = m.letter_count();

    // Inverse transitions, bucketed per (letter, target).
    std::vector<std::uint32_t> inv_start(k * n + 1, 0);
    for (StateId q = 0; q < n; ++q)
        for (Letter l = 0; l < k; ++l) ++inv_start[l * n + m.next(q, l) + 1];
    for (std::size_t i = 1; i < inv_start.size(); ++i) inv_start[i] += inv_start[i - 1];
    std::vector<StateId> inv(n * k);
    {
        auto fill = inv_start;
        for (StateId q = 0; q < n; ++q)
            for (Letter l = 0; l < k; ++l) inv[fill[l * n + m.next(q, l)]++] = q;
    }

    std::vector<std::vector<StateId>> blocks;
    std::vector<std::uint32_t> block_of(n);
    {
        std::vector<StateId> fin, rest;
        for (StateId q = 0; q < n; ++q) (m.is_final(q) ? fin : rest).push_back(q);
        for (auto* b : {&rest, &fin}) {
            if (b->empty()) continue;
            for (StateId q : *b) block_of[q] = static_cast<std::uint32_t>(blocks.size());
            blocks.push_back(std::move(*b));
        }
    }

    std::deque<std::pair<std::uint32_t, Letter>> work;
    std::vector<std::vector<char>> in_work(blocks.size(), std::vector<char>(k, 0));
    auto enqueue = [&](std::uint32_t b, Letter l) {
        if (!in_work[b][l]) {
            in_work[b][l] = 1;
            work.emplace_back(b, l);
        }
    };
    if (blocks.size() == 2) {
        std::uint32_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
        for (Letter l = 0; l < k; ++l) enqueue(smaller, l);
    }

    std::vector<std::uint32_t> hits(n, 0);  // per block: states hit by the splitter
    std::vector<char> marked(n, 0);
    while (!work.empty()) {
        auto [splitter, l] = work.front();
        work.pop_front();
        in_work[splitter][l] = 0;

        std::vector<StateId> pre;
        for (StateId q : blocks[splitter])
            for (auto i = inv_start[l * n + q]; i < inv_start[l * n + q + 1]; ++i) pre.push_back(inv[i]);

        std::vector<std::uint32_t> touched;
        for (StateId p : pre) {
            if (marked[p]) continue;
            marked[p] = 1;
            std::uint32_t b = block_of[p];
            if (hits[b]++ == 0) touched.push_back(b);
        }
        for (std::uint32_t b : touched) {
            if (hits[b] < blocks[b].size()) {
                std::vector<StateId> in, out;
                for (StateId q : blocks[b]) (marked[q] ? in : out).push_back(q);
                auto nb = static_cast<std::uint32_t>(blocks.size());
                blocks[b] = std::move(out);
                for (StateId q : in) block_of[q] = nb;
                blocks.push_back(std::move(in));
                in_work.emplace_back(k, 0);
                for (Letter c = 0; c < k; ++c) {
                    if (in_work[b][c]) enqueue(nb, c);
                    else enqueue(blocks[b].size() <= blocks[nb].size() ? b : nb, c);
                }
            }
            hits[b] = 0;
        }
        for (StateId p : pre) marked[p] = 0;
    }

    Dfa q(m.vars(), blocks.size(), block_of[m.initial()]);
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
        StateId rep = blocks[b].front();
        q.set_final(b, m.is_final(rep));
        for (Letter l = 0; l < k; ++l) q.set_next(b, l, block_of[m.next(rep, l)]);
    }
    return renumber_bfs(q);
}

Dfa minimize(const Dfa& m) {
    Dfa rejecting = hopcroft_minimize(with_fresh_initial(m, false));
    Dfa accepting = hopcroft_minimize(with_fresh_initial(m, true));
    return accepting.state_count() < rejecting.state_count() ? accepting : rejecting;
}

bool language_equal(const Dfa& m1, const Dfa& m2) {
    require_same_vars(m1.vars(), m2.vars());
    return minimize(m1) == minimize(m2);
}

}  // namespace pua
