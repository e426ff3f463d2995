#pragma once

#include <stdexcept>
#include <vector>

#include "pua/dfa.hpp"
#include "pua/dpw.hpp"
#include "pua/formula.hpp"
#include "pua/strategy.hpp"

namespace pua {

/// Compact nondeterministic planning domain: environment variables are the
/// fluents, agent variables encode actions. `delta` may mention primed
/// fluents `e'` describing the successor state.
struct Domain {
    VarTable vars;
    Formula init;
    Formula pre;
    Formula delta;

    /// |E| + |A| + |init| + |pre| + |delta|.
    std::size_t size() const;
};

/// The relations a Domain induces, enumerated. Pairs (s, a) are indexed by the
/// joint letter s ∪ a.
struct ExplicitDomain {
    VarTable vars;
    std::vector<char> initial;  // over ℰ
    std::vector<char> pre;      // over letters
    std::vector<char> delta;    // [letter * |ℰ| + t]

    bool is_initial(EnvMove s) const { return initial[s] != 0; }
    bool available(EnvMove s, Action a) const { return pre[vars.join(s, a)] != 0; }
    bool transition(EnvMove s, Action a, EnvMove t) const {
        return delta[vars.join(s, a) * vars.env_moves() + t] != 0;
    }
    /// Δ(s, a) in bitvector order.
    std::vector<EnvMove> successors(EnvMove s, Action a) const;
    std::size_t transition_count() const;
};

enum class DomainErrorKind { EmptyInit, NoAvailableAction, DanglingDelta, NonSerialPre, IllFormed };

class DomainError : public std::runtime_error {
public:
    DomainError(DomainErrorKind kind, const std::string& what, EnvMove s = 0, Action a = 0, EnvMove t = 0)
        : std::runtime_error(what), kind_(kind), state_(s), action_(a), successor_(t) {}
    DomainErrorKind kind() const { return kind_; }
    EnvMove state() const { return state_; }
    Action action() const { return action_; }
    EnvMove successor() const { return successor_; }

private:
    DomainErrorKind kind_;
    EnvMove state_;
    Action action_;
    EnvMove successor_;
};

/// Enumerates I, Pre and Δ and checks the domain conditions: I non-empty,
/// some action available everywhere, Δ only on available pairs, and every
/// available pair has a successor.
ExplicitDomain validate(const Domain& d);

/// Same enumeration without the checks.
ExplicitDomain enumerate(const Domain& d);

/// init ∧ (G δ'' ∨ δ'' U ¬pre), with δ'' = prime_to_next(delta, weak).
Formula omega_d_ltlf(const Domain& d);

namespace omega_states {
inline constexpr StateId kInitial = 0;
inline constexpr StateId kAccept = 1;  // q₊: an unavailable action was taken
inline constexpr StateId kReject = 2;  // q₋: I or Δ violated
/// State recording that the last letter was s ∪ a with (s, a) ∈ Pre.
inline StateId pair(Letter l) { return 3 + l; }
}  // namespace omega_states

/// The automaton for ω_D with states {q_in, q₊, q₋} ∪ (ℰ × 𝒜), not minimized.
/// Every state except q₋ is final.
Dfa omega_d_dfa(const Domain& d);
Dfa omega_d_dfa(const ExplicitDomain& d);
/// Same structure, color 1 on q₋ and 0 elsewhere.
Dpw omega_d_dpw(const Domain& d);
Dpw omega_d_dpw(const ExplicitDomain& d);

/// G pre: the agent only performs available actions.
Formula exec_formula(const Domain& d);

/// ⋀ over (s, a) ∈ Pre of  G F (s ∧ a) -> ⋀_{t ∈ Δ(s,a)} G F (s ∧ a ∧ X t),
/// states and actions written as full literal conjunctions. Infinite-trace
/// reading; exported, never solved.
Formula fairness_formula(const Domain& d);

/// Environment that starts in the first initial state and resolves the
/// effects of each available pair in turn, cycling through Δ(s, a) in
/// bitvector order. After an unavailable action it moves to state 0.
EnvStrategy round_robin_env(const Domain& d, std::size_t memory_limit = 1'000'000);

/// I = ℰ, Pre = ℰ × 𝒜, Δ = ℰ × 𝒜 × ℰ.
Domain universal_domain(const VarTable& vars);

}  // namespace pua
