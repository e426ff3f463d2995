#include "pua/dpw.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

namespace pua {

Dpw::Dpw(VarTable vars, std::size_t states, StateId initial) : vars_(std::move(vars)), initial_(initial) {
    vars_.require_explicit();
    letters_ = static_cast<std::size_t>(vars_.letters());
    delta_.assign(states * letters_, 0);
    colors_.assign(states, 0);
}

std::size_t Dpw::color_count() const {
    return std::set<Color>(colors_.begin(), colors_.end()).size();
}

Dpw constant_dpw(const VarTable& vars, bool accepting) {
    Dpw m(vars, 1);
    m.set_color(0, accepting ? 0 : 1);
    return m;
}

Dpw dpw_complement(const Dpw& m) {
    Dpw out = m;
    for (StateId q = 0; q < m.state_count(); ++q) out.set_color(q, m.color(q) + 1);
    return out;
}

Dpw normalize_colors(const Dpw& m) {
    std::set<Color> used;
    for (StateId q = 0; q < m.state_count(); ++q) used.insert(m.color(q));
    std::map<Color, Color> remap;
    Color current = 0;
    bool first = true;
    Color prev = 0;
    for (Color c : used) {
        if (first) current = c % 2;
        else if (c % 2 != prev % 2) ++current;
        remap[c] = current;
        prev = c;
        first = false;
    }
    Dpw out = m;
    for (StateId q = 0; q < m.state_count(); ++q) out.set_color(q, remap[m.color(q)]);
    return out;
}

Dpw dpw_product(const std::vector<Dpw>& input, const AcceptanceCombiner& accept, std::size_t state_limit) {
    if (input.empty()) throw std::invalid_argument("product of no automata");
    const VarTable& vars = input.front().vars();
    std::vector<Dpw> parts;
    for (const Dpw& m : input) {
        require_same_vars(vars, m.vars());
        parts.push_back(normalize_colors(m));
    }
    const std::size_t k = parts.size();

    // Token of color c in part i is offset[i] + c - low[i].
    std::vector<Color> low(k), offset(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        Color lo = ~Color{0}, hi = 0;
        for (StateId q = 0; q < parts[i].state_count(); ++q) {
            lo = std::min(lo, parts[i].color(q));
            hi = std::max(hi, parts[i].color(q));
        }
        low[i] = lo;
        offset[i + 1] = offset[i] + (hi - lo + 1);
    }
    const std::size_t d = offset[k];
    if (d > kMaxProductColors)
        throw GuardError("product needs " + std::to_string(d) + " color tokens, limit is " +
                         std::to_string(kMaxProductColors));
    std::vector<std::size_t> owner(d);
    std::vector<Color> token_color(d);
    for (std::size_t i = 0; i < k; ++i)
        for (Color t = offset[i]; t < offset[i + 1]; ++t) {
            owner[t] = i;
            token_color[t] = low[i] + (t - offset[i]);
        }

    // Acceptance of a record prefix: every part judges its largest token.
    auto prefix_accepts = [&](const std::vector<std::uint8_t>& perm, std::size_t hit) {
        std::vector<Color> best(k, 0);
        std::vector<bool> seen(k, false);
        for (std::size_t p = 0; p <= hit; ++p) {
            std::size_t i = owner[perm[p]];
            Color c = token_color[perm[p]];
            if (!seen[i] || c > best[i]) best[i] = c;
            seen[i] = true;
        }
        std::vector<bool> verdicts(k);
        for (std::size_t i = 0; i < k; ++i) verdicts[i] = best[i] % 2 == 0;
        return accept(verdicts);
    };

    struct Node {
        std::vector<StateId> q;
        std::vector<std::uint8_t> perm;
        std::uint8_t hit;
    };
    auto key_of = [](const Node& n) {
        std::string key(reinterpret_cast<const char*>(n.q.data()), n.q.size() * sizeof(StateId));
        key.append(reinterpret_cast<const char*>(n.perm.data()), n.perm.size());
        key.push_back(static_cast<char>(n.hit));
        return key;
    };
    // Moves the tokens of the states in `q` to the front of the record.
    auto visit = [&](std::vector<StateId> q, const std::vector<std::uint8_t>& perm) {
        Node n{std::move(q), {}, 0};
        std::vector<std::uint8_t> moved;
        std::size_t deepest = 0;
        for (std::size_t i = 0; i < k; ++i) {
            auto t = static_cast<std::uint8_t>(offset[i] + parts[i].color(n.q[i]) - low[i]);
            moved.push_back(t);
            deepest = std::max<std::size_t>(deepest, std::find(perm.begin(), perm.end(), t) - perm.begin());
        }
        n.perm = moved;
        for (std::uint8_t t : perm)
            if (std::find(moved.begin(), moved.end(), t) == moved.end()) n.perm.push_back(t);
        n.hit = static_cast<std::uint8_t>(deepest);
        return n;
    };

    std::unordered_map<std::string, StateId> index;
    std::vector<Node> nodes;
    auto intern = [&](Node n) {
        auto key = key_of(n);
        auto [it, fresh] = index.emplace(std::move(key), static_cast<StateId>(nodes.size()));
        if (fresh) {
            if (nodes.size() >= state_limit) throw GuardError("parity product exceeded the state limit");
            nodes.push_back(std::move(n));
        }
        return it->second;
    };

    std::vector<std::uint8_t> identity(d);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<StateId> init(k);
    for (std::size_t i = 0; i < k; ++i) init[i] = parts[i].initial();
    intern(visit(init, identity));

    const std::size_t letters = vars.letters();
    std::vector<StateId> delta;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (Letter l = 0; l < letters; ++l) {
            std::vector<StateId> q(k);
            for (std::size_t j = 0; j < k; ++j) q[j] = parts[j].next(nodes[i].q[j], l);
            delta.push_back(intern(visit(std::move(q), nodes[i].perm)));
        }
    }

    Dpw out(vars, nodes.size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        out.set_color(static_cast<StateId>(i), 2 * Color{n.hit} + (prefix_accepts(n.perm, n.hit) ? 2 : 1));
        for (Letter l = 0; l < letters; ++l) out.set_next(static_cast<StateId>(i), l, delta[i * letters + l]);
    }
    return out;
}

Dpw dpw_combine(const Dpw& m1, const Dpw& m2, Connective c) {
    return dpw_product({m1, m2}, [c](const std::vector<bool>& v) { return apply(c, v[0], v[1]); });
}

bool accepts_lasso(const Dpw& m, const Trace& prefix, const Trace& loop) {
    if (loop.empty()) throw std::invalid_argument("lasso loop must be non-empty");
    StateId q = m.initial();
    for (Letter l : prefix) q = m.next(q, l);
    // State at the start of each loop iteration, and the largest color entered
    // during that iteration.
    std::unordered_map<StateId, std::size_t> started;
    std::vector<Color> iteration_max;
    while (!started.count(q)) {
        started.emplace(q, iteration_max.size());
        Color best = 0;
        for (Letter l : loop) {
            q = m.next(q, l);
            best = std::max(best, m.color(q));
        }
        iteration_max.push_back(best);
    }
    Color inf = 0;
    for (std::size_t i = started[q]; i < iteration_max.size(); ++i) inf = std::max(inf, iteration_max[i]);
    return inf % 2 == 0;
}

Dpw dfa_as_dpw(const Dfa& m) {
    Dpw out(m.vars(), m.state_count(), m.initial());
    for (StateId q = 0; q < m.state_count(); ++q) {
        out.set_color(q, m.is_final(q) ? 0 : 1);
        for (Letter l = 0; l < m.letter_count(); ++l) out.set_next(q, l, m.next(q, l));
    }
    return out;
}

}  // namespace pua
