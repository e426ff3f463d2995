#include "pua/domain.hpp"

#include <functional>
#include <map>

namespace pua {

namespace {

bool only_vars(const Formula& f, const std::function<bool(VarId)>& allowed) {
    if (f.op() == Op::Atom) return allowed(f.var());
    if (is_unary(f.op())) return only_vars(f.lhs(), allowed);
    if (is_binary(f.op())) return only_vars(f.lhs(), allowed) && only_vars(f.rhs(), allowed);
    return true;
}

std::string describe(const VarTable& v, EnvMove s) { return "state " + to_bits(s, v.env_count()); }

std::string describe(const VarTable& v, EnvMove s, Action a) {
    return describe(v, s) + " with action " + to_bits(a, v.agent_count());
}

}  // namespace

std::size_t Domain::size() const {
    return vars.env_count() + vars.agent_count() + init.node_count() + pre.node_count() + delta.node_count();
}

std::vector<EnvMove> ExplicitDomain::successors(EnvMove s, Action a) const {
    std::vector<EnvMove> out;
    for (EnvMove t = 0; t < vars.env_moves(); ++t)
        if (transition(s, a, t)) out.push_back(t);
    return out;
}

std::size_t ExplicitDomain::transition_count() const {
    std::size_t n = 0;
    for (char c : delta) n += c != 0;
    return n;
}

ExplicitDomain enumerate(const Domain& d) {
    const VarTable& v = d.vars;
    v.require_explicit();
    if (v.env_count() == 0) throw DomainError(DomainErrorKind::IllFormed, "a domain needs at least one fluent");
    if (!is_propositional(d.init) || !is_propositional(d.pre) || !is_propositional(d.delta))
        throw DomainError(DomainErrorKind::IllFormed, "domain formulas must be propositional");
    if (!only_vars(d.init, [&](VarId x) { return v.is_env(x); }))
        throw DomainError(DomainErrorKind::IllFormed, "init may only mention fluents");
    if (!only_vars(d.pre, [&](VarId x) { return x < v.size(); }))
        throw DomainError(DomainErrorKind::IllFormed, "pre may not mention primed fluents");

    ExplicitDomain x;
    x.vars = v;
    const auto states = v.env_moves();
    const auto letters = v.letters();
    x.initial.assign(states, 0);
    x.pre.assign(letters, 0);
    x.delta.assign(letters * states, 0);
    for (EnvMove s = 0; s < states; ++s) x.initial[s] = eval_prop(d.init, s);
    for (Letter l = 0; l < letters; ++l) {
        x.pre[l] = eval_prop(d.pre, l);
        for (EnvMove t = 0; t < states; ++t)
            x.delta[l * states + t] = eval_prop(d.delta, std::uint64_t{l} | (std::uint64_t{t} << v.size()));
    }
    return x;
}

ExplicitDomain validate(const Domain& d) {
    ExplicitDomain x = enumerate(d);
    const VarTable& v = x.vars;
    bool any_initial = false;
    for (char c : x.initial) any_initial |= c != 0;
    if (!any_initial) throw DomainError(DomainErrorKind::EmptyInit, "init has no satisfying state");
    for (EnvMove s = 0; s < v.env_moves(); ++s) {
        bool some = false;
        for (Action a = 0; a < v.actions(); ++a) some |= x.available(s, a);
        if (!some) throw DomainError(DomainErrorKind::NoAvailableAction, "no action available in " + describe(v, s), s);
    }
    for (EnvMove s = 0; s < v.env_moves(); ++s)
        for (Action a = 0; a < v.actions(); ++a) {
            auto succ = x.successors(s, a);
            if (x.available(s, a) && succ.empty())
                throw DomainError(DomainErrorKind::NonSerialPre, "no successor for " + describe(v, s, a), s, a);
            if (!x.available(s, a) && !succ.empty())
                throw DomainError(DomainErrorKind::DanglingDelta,
                                  "transition from " + describe(v, s, a) + " to " + describe(v, succ.front()) +
                                      " although the action is unavailable",
                                  s, a, succ.front());
        }
    return x;
}

Formula omega_d_ltlf(const Domain& d) {
    validate(d);
    Formula step = prime_to_next(d.delta, d.vars, /*weak=*/true);
    return Formula::conj(d.init, Formula::disj(Formula::always(step),
                                               Formula::until(step, Formula::negation(d.pre))));
}

Dfa omega_d_dfa(const ExplicitDomain& x) {
    namespace os = omega_states;
    const VarTable& v = x.vars;
    const auto letters = static_cast<Letter>(v.letters());
    Dfa m(v, 3 + letters, os::kInitial);
    for (StateId q = 0; q < m.state_count(); ++q) m.set_final(q, q != os::kReject);
    for (Letter l = 0; l < letters; ++l) {
        const EnvMove e = v.env_of(l);
        const Action a = v.agent_of(l);
        const StateId onward = x.available(e, a) ? os::pair(l) : os::kAccept;
        m.set_next(os::kInitial, l, x.is_initial(e) ? onward : os::kReject);
        m.set_next(os::kAccept, l, os::kAccept);
        m.set_next(os::kReject, l, os::kReject);
        for (Letter prev = 0; prev < letters; ++prev) {
            const bool ok = x.transition(v.env_of(prev), v.agent_of(prev), e);
            m.set_next(os::pair(prev), l, ok ? onward : os::kReject);
        }
    }
    return m;
}

Dfa omega_d_dfa(const Domain& d) { return omega_d_dfa(validate(d)); }

Dpw omega_d_dpw(const ExplicitDomain& x) {
    Dfa m = omega_d_dfa(x);
    Dpw out(x.vars, m.state_count(), m.initial());
    for (StateId q = 0; q < m.state_count(); ++q) {
        out.set_color(q, q == omega_states::kReject ? 1 : 0);
        for (Letter l = 0; l < m.letter_count(); ++l) out.set_next(q, l, m.next(q, l));
    }
    return out;
}

Dpw omega_d_dpw(const Domain& d) { return omega_d_dpw(validate(d)); }

Formula exec_formula(const Domain& d) { return Formula::always(d.pre); }

Formula fairness_formula(const Domain& d) {
    const ExplicitDomain x = validate(d);
    const VarTable& v = d.vars;
    const auto agent_first = static_cast<VarId>(v.env_count());
    std::vector<Formula> conjuncts;
    for (EnvMove s = 0; s < v.env_moves(); ++s)
        for (Action a = 0; a < v.actions(); ++a) {
            if (!x.available(s, a)) continue;
            Formula here = Formula::conj(cube(0, v.env_count(), s), cube(agent_first, v.agent_count(), a));
            std::vector<Formula> effects;
            for (EnvMove t : x.successors(s, a))
                effects.push_back(Formula::always(
                    Formula::eventually(Formula::conj(here, Formula::next(cube(0, v.env_count(), t))))));
            conjuncts.push_back(Formula::implies(Formula::always(Formula::eventually(here)), conj_all(effects)));
        }
    return conj_all(conjuncts);
}

EnvStrategy round_robin_env(const Domain& d, std::size_t memory_limit) {
    const ExplicitDomain x = validate(d);
    const VarTable& v = d.vars;

    // One cyclic counter per available pair with several effects.
    std::vector<std::vector<EnvMove>> effects(v.letters());
    std::vector<int> slot(v.letters(), -1);
    int slots = 0;
    for (Letter l = 0; l < v.letters(); ++l) {
        if (!x.available(v.env_of(l), v.agent_of(l))) continue;
        effects[l] = x.successors(v.env_of(l), v.agent_of(l));
        if (effects[l].size() > 1) slot[l] = slots++;
    }

    EnvMove first = 0;
    while (!x.is_initial(first)) ++first;

    using Key = std::pair<EnvMove, std::vector<std::uint32_t>>;
    std::map<Key, Memory> index;
    std::vector<Key> cells;
    auto intern = [&](Key k) {
        auto [it, fresh] = index.emplace(k, static_cast<Memory>(cells.size()));
        if (fresh) {
            if (cells.size() >= memory_limit) throw GuardError("round-robin strategy exceeds the memory limit");
            cells.push_back(std::move(k));
        }
        return it->second;
    };
    intern({first, std::vector<std::uint32_t>(slots, 0)});

    std::vector<std::pair<EnvMove, Memory>> table;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (Action a = 0; a < v.actions(); ++a) {
            Key k = cells[i];
            const Letter l = v.join(k.first, a);
            EnvMove t = 0;
            if (!effects[l].empty()) {
                std::size_t pick = slot[l] < 0 ? 0 : k.second[slot[l]];
                t = effects[l][pick];
                if (slot[l] >= 0) k.second[slot[l]] = static_cast<std::uint32_t>((pick + 1) % effects[l].size());
            }
            k.first = t;
            table.emplace_back(t, intern(std::move(k)));
        }
    }

    EnvStrategy s(v, cells.size(), 0, first);
    for (Memory m = 0; m < cells.size(); ++m)
        for (Action a = 0; a < v.actions(); ++a) {
            auto [out, to] = table[m * v.actions() + a];
            s.set(m, a, out, to);
        }
    return s;
}

Domain universal_domain(const VarTable& vars) {
    if (vars.env_count() == 0 || vars.agent_count() == 0)
        throw VocabularyError("the universal domain needs environment and agent variables");
    return Domain{vars, Formula::top(), Formula::top(), Formula::top()};
}

}  // namespace pua
