#pragma once

// Reference implementations and generators used only by the tests. They
// recompute answers from definitions, by enumeration or bounded search, and
// never call the solver entry points they are compared against.

#include <optional>
#include <random>
#include <vector>

#include "pua/dfa.hpp"
#include "pua/domain.hpp"
#include "pua/dpw.hpp"
#include "pua/formula.hpp"
#include "pua/strategy.hpp"

namespace oracle {

using namespace pua;
using Rng = std::mt19937_64;

/// All non-empty words over `letters` symbols of length at most `max_len`.
std::vector<Trace> words(std::size_t letters, std::size_t max_len);

bool run_dfa(const Dfa& m, const Trace& w);

/// Acceptance of prefix · loop^ω by direct simulation.
bool run_dpw_lasso(const Dpw& m, const Trace& prefix, const Trace& loop);

Dfa random_dfa(Rng& rng, const VarTable& vars, std::size_t max_states);
Dpw random_dpw(Rng& rng, const VarTable& vars, std::size_t max_states, std::size_t max_colors);

/// Random formula of at most `depth` operator levels. Without `temporal` only
/// Boolean connectives are used. `primed` adds the primed environment atoms.
Formula random_formula(Rng& rng, const VarTable& vars, std::size_t depth, bool temporal, bool primed = false);

/// Random valid domain. Mostly random formulas filtered for validity, with a
/// fallback that writes an explicit relation as a disjunction of cubes.
/// Every Δ(s, a) has at most `max_effects` elements when the fallback is used
/// or the filter succeeds.
Domain random_domain(Rng& rng, std::size_t n_env, std::size_t n_agent, std::size_t max_effects);

/// The trace property ω_D, evaluated directly from init, pre and delta.
bool omega_d_holds(const Domain& d, const Trace& t);

/// All NNF formulas over the given variables with depth ≤ 2 (literals and
/// constants have depth 0).
std::vector<Formula> nnf_formulas_depth2(const VarTable& vars);

/// Parity game outcome by enumerating positional strategies on a DPW game
/// (environment picks e, then the agent picks a).
struct ParityOracle {
    std::vector<char> agent_wins;
    std::vector<char> env_wins;
};
ParityOracle parity_by_enumeration(const Dpw& m);

/// Reachability game on a DFA by depth-bounded AND-OR search.
bool agent_wins_bounded(const Dfa& m, std::size_t depth);

/// States from which the environment keeps every prefix in F for `depth`
/// more rounds; with depth = |Q| this is the safety region.
std::vector<char> env_safe_bounded(const Dfa& m, std::size_t depth);

/// Existence of an agent strategy realizing γ under ω by AND-OR search on
/// M_ω × M_γ with the environment restricted to moves that keep M_ω safe.
struct UnderAssumption {
    bool exists = false;
    std::optional<AgentStrategy> strategy;
};
UnderAssumption under_assumption(const Dfa& omega, const Dfa& gamma, std::size_t depth);

/// Strong plan existence for reaching `goal` (over fluents) in the domain.
bool strong_plan_exists(const Domain& d, const Formula& goal);

/// The loop condition of ω_{D,fair} on a lasso: every available pair (s, a)
/// in the loop is followed, inside the loop, by each element of Δ(s, a).
bool fair_loop(const ExplicitDomain& d, const Trace& loop);

/// Prefix and loop of the unique play between a positional agent choice
/// (indexed by the current state) and a finite-state environment.
void lasso_of(const EnvStrategy& env, const std::vector<Action>& agent, Trace& prefix, Trace& loop);

}  // namespace oracle
