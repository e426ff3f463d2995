#include "pua/ltlf_compile.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace pua {

namespace {

// Sorts and drops cubes that are supersets of other cubes.
Dnf simplify(Dnf d) {
    for (auto& c : d) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::sort(d.begin(), d.end(), [](const Cube& a, const Cube& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    d.erase(std::unique(d.begin(), d.end()), d.end());
    Dnf out;
    for (auto& c : d) {
        bool subsumed = std::any_of(out.begin(), out.end(), [&](const Cube& kept) {
            return std::includes(c.begin(), c.end(), kept.begin(), kept.end());
        });
        if (!subsumed) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Dnf dnf_or(const Dnf& a, const Dnf& b) {
    Dnf out = a;
    out.insert(out.end(), b.begin(), b.end());
    return simplify(std::move(out));
}

Dnf dnf_and(const Dnf& a, const Dnf& b) {
    Dnf out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            Cube c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
        }
    }
    return simplify(std::move(out));
}

bool AlternatingAutomaton::accepting_at_end(const Cube& c) const {
    return std::all_of(c.begin(), c.end(), [&](std::uint32_t s) { return weak[s] != 0; });
}

namespace {

class ClosureBuilder {
public:
    explicit ClosureBuilder(AlternatingAutomaton& aa) : aa_(aa) {}

    std::uint32_t obligation(const Formula& f) {
        auto it = ids_.find(f);
        if (it != ids_.end()) return it->second;
        auto id = static_cast<std::uint32_t>(aa_.states.size());
        ids_.emplace(f, id);
        aa_.states.push_back(f);
        aa_.weak.push_back(f.op() == Op::WeakNext);
        return id;
    }

    // Registers every obligation reachable from the subterms of f.
    void collect(const Formula& f) {
        switch (f.op()) {
            case Op::Next:
            case Op::WeakNext: obligation(f); break;
            case Op::Until:
            case Op::Eventually: obligation(Formula::next(f)); break;
            case Op::Release:
            case Op::Always: obligation(Formula::weak_next(f)); break;
            default: break;
        }
        if (is_unary(f.op()) || is_binary(f.op())) collect(f.lhs());
        if (is_binary(f.op())) collect(f.rhs());
    }

    // Obligations ψ must hold at the position reading `l`.
    Dnf now(const Formula& f, Letter l) {
        static const Dnf kTrue{Cube{}};
        static const Dnf kFalse{};
        auto single = [](std::uint32_t s) { return Dnf{Cube{s}}; };
        switch (f.op()) {
            case Op::True: return kTrue;
            case Op::False: return kFalse;
            case Op::Atom: return (l >> f.var() & 1u) ? kTrue : kFalse;
            case Op::Not:
                if (f.lhs().op() != Op::Atom) throw std::invalid_argument("closure construction needs NNF");
                return (l >> f.lhs().var() & 1u) ? kFalse : kTrue;
            case Op::And: return dnf_and(now(f.lhs(), l), now(f.rhs(), l));
            case Op::Or: return dnf_or(now(f.lhs(), l), now(f.rhs(), l));
            case Op::Next:
            case Op::WeakNext: return single(obligation(f));
            case Op::Until:
                return dnf_or(now(f.rhs(), l), dnf_and(now(f.lhs(), l), single(obligation(Formula::next(f)))));
            case Op::Release:
                return dnf_and(now(f.rhs(), l),
                               dnf_or(now(f.lhs(), l), single(obligation(Formula::weak_next(f)))));
            case Op::Eventually: return dnf_or(now(f.lhs(), l), single(obligation(Formula::next(f))));
            case Op::Always: return dnf_and(now(f.lhs(), l), single(obligation(Formula::weak_next(f))));
            case Op::Implies: throw std::invalid_argument("closure construction needs NNF");
        }
        return kFalse;
    }

private:
    AlternatingAutomaton& aa_;
    std::unordered_map<Formula, std::uint32_t, FormulaHash> ids_;
};

}  // namespace

AlternatingAutomaton compile_nnf_closure(const Formula& f, const VarTable& vars) {
    if (!is_nnf(f)) throw std::invalid_argument("compile_nnf_closure expects an NNF formula");
    vars.require_explicit();
    AlternatingAutomaton aa;
    aa.vars = vars;
    aa.states.push_back(f);
    aa.weak.push_back(0);
    ClosureBuilder builder(aa);
    builder.collect(f);
    const auto letters = vars.letters();
    aa.transitions.resize(aa.states.size() * letters);
    for (std::uint32_t s = 0; s < aa.states.size(); ++s) {
        // Obligation X ψ / WX ψ reads ψ; state 0 reads the formula itself.
        const Formula& body = s == 0 ? aa.states[0] : aa.states[s].lhs();
        for (Letter l = 0; l < letters; ++l) aa.transitions[s * letters + l] = builder.now(body, l);
    }
    return aa;
}

Dfa determinize(const AlternatingAutomaton& aa, std::size_t state_limit) {
    const auto letters = static_cast<Letter>(aa.vars.letters());
    std::map<Dnf, StateId> index;
    std::vector<Dnf> states;
    auto intern = [&](Dnf d) {
        auto [it, fresh] = index.emplace(d, static_cast<StateId>(states.size()));
        if (fresh) {
            if (states.size() >= state_limit) throw GuardError("determinization exceeded the state limit");
            states.push_back(std::move(d));
        }
        return it->second;
    };
    intern(Dnf{Cube{0}});
    std::vector<StateId> delta;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (Letter l = 0; l < letters; ++l) {
            Dnf succ;
            for (const Cube& c : states[i]) {
                Dnf term{Cube{}};
                for (std::uint32_t s : c) {
                    term = dnf_and(term, aa.step(s, l));
                    if (term.empty()) break;
                }
                succ.insert(succ.end(), term.begin(), term.end());
            }
            delta.push_back(intern(simplify(std::move(succ))));
        }
    }
    Dfa out(aa.vars, states.size(), 0);
    for (std::size_t i = 0; i < states.size(); ++i) {
        // The start state is entered only before the first letter.
        bool fin = i != 0 && std::any_of(states[i].begin(), states[i].end(),
                                         [&](const Cube& c) { return aa.accepting_at_end(c); });
        out.set_final(static_cast<StateId>(i), fin);
        for (Letter l = 0; l < letters; ++l) out.set_next(static_cast<StateId>(i), l, delta[i * letters + l]);
    }
    return out;
}

Dfa compile(const Formula& f, const VarTable& vars) {
    return minimize(determinize(compile_nnf_closure(to_nnf(f), vars)));
}

}  // namespace pua
