#include "pua/engine.hpp"

#include <array>
#include <map>

#include "pua/ltlf_compile.hpp"
#include "pua/parity.hpp"

namespace pua {

std::string to_string(Status s) {
    switch (s) {
        case Status::Realizable: return "REALIZABLE";
        case Status::Unrealizable: return "UNREALIZABLE";
        case Status::InvalidAssumption: return "INVALID_ASSUMPTION";
        case Status::Unsupported: return "UNSUPPORTED";
    }
    return "?";
}

Dfa objective_dfa(const Objective& o, const VarTable& vars) {
    if (const auto* f = std::get_if<Formula>(&o)) return compile(*f, vars);
    if (const auto* m = std::get_if<Dfa>(&o)) {
        require_same_vars(vars, m->vars());
        return *m;
    }
    throw UnsupportedError("a parity automaton cannot be read over finite traces");
}

Dpw objective_dpw(const Objective& o, const VarTable& vars) {
    if (const auto* f = std::get_if<Formula>(&o)) {
        if (!is_propositional(*f))
            throw UnsupportedError("temporal formulas over infinite traces need a parity automaton (@file)");
        // Decided by the first letter; both sinks of the DFA are absorbing.
        return dfa_as_dpw(compile(*f, vars));
    }
    if (const auto* m = std::get_if<Dpw>(&o)) {
        require_same_vars(vars, m->vars());
        return *m;
    }
    throw UnsupportedError("a finite automaton cannot be read over infinite traces");
}

namespace {

Dpw assumption_dpw(const Problem& p) {
    Dpw m = objective_dpw(p.assumption, p.vars);
    if (p.is_planning()) m = dpw_combine(omega_d_dpw(*p.domain), m, Connective::And);
    return m;
}

void require_domain_vars(const Problem& p) {
    if (p.is_planning()) require_same_vars(p.vars, p.domain->vars);
}

}  // namespace

Dfa assumption_dfa(const Problem& p) {
    require_domain_vars(p);
    Dfa m = objective_dfa(p.assumption, p.vars);
    if (p.is_planning()) m = minimize(combine(omega_d_dfa(*p.domain), m, Connective::And));
    return m;
}

bool check_assumption(const Problem& p) {
    require_domain_vars(p);
    if (p.semantics == Semantics::Finite) return env_realizable(assumption_dfa(p)).realizable;
    return dpw_env_realizable(assumption_dpw(p)).realizable;
}

namespace {

Verdict unsupported(std::string reason) {
    Verdict v;
    v.status = Status::Unsupported;
    v.reason = std::move(reason);
    return v;
}

Verdict solve_finite(const Problem& p, const SolveOptions& opts) {
    Verdict v;
    Dfa assume = assumption_dfa(p);
    v.diagnostics["assumption_states"] = assume.state_count();
    EnvSolution env = env_realizable(assume);
    v.diagnostics["assumption_iterations"] = env.region.iterations;
    if (!env.realizable) {
        v.status = Status::InvalidAssumption;
        v.reason = "assumption is not environment realizable";
        return v;
    }
    Dfa goal = objective_dfa(p.goal, p.vars);
    v.diagnostics["goal_states"] = goal.state_count();
    Dfa game = minimize(combine(assume, goal, Connective::Implies));
    v.diagnostics["game_states"] = game.state_count();
    AgentSolution sol = agent_realizable(game);
    v.diagnostics["game_iterations"] = sol.region.iterations;
    if (!sol.realizable) {
        v.status = Status::Unrealizable;
        return v;
    }
    v.status = Status::Realizable;
    v.strategy = std::move(sol.strategy);
    if (opts.self_check && !verify_against(*v.strategy, &assume, goal).accepted())
        throw std::logic_error("extracted strategy failed verification");
    return v;
}

Verdict solve_infinite(const Problem& p, bool planning) {
    Verdict v;
    Dpw assume = objective_dpw(p.assumption, p.vars);
    Dpw goal = objective_dpw(p.goal, p.vars);
    v.diagnostics["assumption_states"] = assume.state_count();
    v.diagnostics["goal_states"] = goal.state_count();
    if (!check_assumption(p)) {
        v.status = Status::InvalidAssumption;
        v.reason = "assumption is not environment realizable";
        return v;
    }
    Dpw game;
    if (planning) {
        Dpw md = omega_d_dpw(*p.domain);
        v.diagnostics["domain_states"] = md.state_count();
        game = dpw_product({md, assume, goal},
                           [](const std::vector<bool>& a) { return !(a[0] && a[1]) || a[2]; });
    } else {
        game = dpw_combine(assume, goal, Connective::Implies);
    }
    v.diagnostics["game_states"] = game.state_count();
    v.diagnostics["game_colors"] = game.color_count();
    DpwAgentSolution sol = dpw_agent_realizable(game);
    v.status = sol.realizable ? Status::Realizable : Status::Unrealizable;
    v.strategy = std::move(sol.strategy);
    return v;
}

}  // namespace

Verdict synthesize(const Problem& p, SolveOptions opts) {
    if (p.is_planning()) throw std::invalid_argument("problem has a domain; use plan()");
    try {
        if (p.semantics == Semantics::Finite) return solve_finite(p, opts);
        return solve_infinite(p, false);
    } catch (const UnsupportedError& e) {
        return unsupported(e.what());
    }
}

Verdict plan(const Problem& p, SolveOptions opts) {
    if (!p.is_planning()) throw std::invalid_argument("planning needs a domain");
    require_domain_vars(p);
    validate(*p.domain);
    if (p.fair) {
        Verdict v = unsupported("UnsupportedFairSolve: fair planning is exported only");
        v.exported = fairness_formula(*p.domain);
        return v;
    }
    try {
        if (p.semantics == Semantics::Finite) {
            Verdict v = solve_finite(p, opts);
            v.diagnostics["domain_states"] = 3 + p.vars.letters();
            return v;
        }
        return solve_infinite(p, true);
    } catch (const UnsupportedError& e) {
        return unsupported(e.what());
    }
}

Verdict solve(const Problem& p, SolveOptions opts) { return p.is_planning() ? plan(p, opts) : synthesize(p, opts); }

VerifyResult verify_against(const AgentStrategy& s, const Dfa* assumption, const Dfa& goal) {
    const VarTable& v = goal.vars();
    require_same_vars(v, s.vars);
    std::optional<Region> safe;
    if (assumption) {
        require_same_vars(v, assumption->vars());
        EnvSolution env = env_realizable(*assumption);
        if (!env.realizable) throw InvalidAssumptionError("assumption is not environment realizable");
        safe = std::move(env.region);
    }
    std::vector<std::vector<EnvMove>> moves_at(assumption ? assumption->state_count() : 1);
    std::vector<char> moves_known(moves_at.size(), 0);
    auto allowed = [&](StateId qa) -> const std::vector<EnvMove>& {
        StateId slot = assumption ? qa : 0;
        if (!moves_known[slot]) {
            if (assumption) {
                moves_at[slot] = safe_moves(*assumption, *safe, qa);
            } else {
                for (EnvMove e = 0; e < v.env_moves(); ++e) moves_at[slot].push_back(e);
            }
            moves_known[slot] = 1;
        }
        return moves_at[slot];
    };

    using Key = std::array<std::uint32_t, 4>;  // memory, assumption state, goal state, started
    const std::uint64_t na = assumption ? assumption->state_count() : 1;
    const std::uint64_t space = std::uint64_t{s.memory} * na * goal.state_count() * 2;
    constexpr std::uint64_t kFlatLimit = 1 << 22;
    std::vector<std::uint32_t> flat(space <= kFlatLimit ? space : 0, ~std::uint32_t{0});
    std::map<Key, std::uint32_t> index;
    std::vector<char> color;  // 0 new, 1 on stack, 2 done
    auto intern = [&](const Key& k) {
        if (!flat.empty()) {
            auto& slot = flat[((k[0] * na + k[1]) * goal.state_count() + k[2]) * 2 + k[3]];
            if (slot == ~std::uint32_t{0}) {
                slot = static_cast<std::uint32_t>(color.size());
                color.push_back(0);
            }
            return slot;
        }
        auto [it, fresh] = index.emplace(k, static_cast<std::uint32_t>(color.size()));
        if (fresh) color.push_back(0);
        return it->second;
    };
    struct Frame {
        Key key;
        std::uint32_t id;
        std::size_t next_move = 0;
        Letter via = 0;  // letter that led here
    };
    std::vector<Frame> stack;
    Key root{s.initial, assumption ? assumption->initial() : 0, goal.initial(), 0};
    stack.push_back({root, intern(root)});
    color[stack.back().id] = 1;

    auto path = [&](std::size_t from, std::size_t to) {
        Trace t;
        for (std::size_t i = from; i < to; ++i) t.push_back(stack[i].via);
        return t;
    };
    auto env_moves_of = [&](const Trace& t) {
        std::vector<EnvMove> out;
        for (Letter l : t) out.push_back(v.env_of(l));
        return out;
    };

    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& moves = allowed(f.key[1]);
        if (f.next_move == moves.size()) {
            color[f.id] = 2;
            stack.pop_back();
            continue;
        }
        const EnvMove e = moves[f.next_move++];
        const AgentMove& mv = s.step(f.key[0], e);
        if (!mv.action) {
            const bool started = f.key[3] != 0;
            if (started && goal.is_final(f.key[2])) continue;
            VerifyResult r;
            r.outcome = started ? VerifyResult::Outcome::GoalViolated : VerifyResult::Outcome::EmptyPlay;
            r.trace = path(1, stack.size());
            r.env_moves = env_moves_of(r.trace);
            r.env_moves.push_back(e);
            return r;
        }
        const Letter l = v.join(e, *mv.action);
        Key child{mv.next, assumption ? assumption->next(f.key[1], l) : 0, goal.next(f.key[2], l), 1};
        const std::uint32_t id = intern(child);
        if (color[id] == 1) {
            std::size_t k = 0;
            while (stack[k].id != id) ++k;
            VerifyResult r;
            r.outcome = VerifyResult::Outcome::NonTerminating;
            r.trace = path(1, k + 1);
            r.loop = path(k + 1, stack.size());
            r.loop.push_back(l);
            r.env_moves = env_moves_of(r.trace);
            for (EnvMove x : env_moves_of(r.loop)) r.env_moves.push_back(x);
            return r;
        }
        if (color[id] == 0) {
            color[id] = 1;
            stack.push_back({child, id, 0, l});
        }
    }
    return {};
}

VerifyResult verify_strategy(const Problem& p, const AgentStrategy& s) {
    if (p.semantics != Semantics::Finite)
        throw UnsupportedError("strategy verification is provided for finite traces only");
    Dfa assume = assumption_dfa(p);
    Dfa goal = objective_dfa(p.goal, p.vars);
    return verify_against(s, &assume, goal);
}

VerifyResult verify_realizes(const AgentStrategy& s, const Dfa& goal) { return verify_against(s, nullptr, goal); }

Problem fond_to_pua(const Domain& d, const Formula& goal, bool fair) {
    validate(d);
    Problem p;
    p.vars = d.vars;
    p.domain = d;
    p.assumption = Formula::top();
    Formula target = is_propositional(goal) ? Formula::eventually(goal) : goal;
    p.goal = Formula::conj(exec_formula(d), target);
    p.fair = fair;
    return p;
}

}  // namespace pua
