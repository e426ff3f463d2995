#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "pua/dfa.hpp"
#include "pua/domain.hpp"
#include "pua/dpw.hpp"
#include "pua/finite_games.hpp"
#include "pua/formula.hpp"
#include "pua/strategy.hpp"

namespace pua {

enum class Semantics { Finite, Infinite };

/// An assumption or goal: a formula, or an automaton over the problem's
/// vocabulary (DFA for finite traces, DPW for infinite ones).
using Objective = std::variant<Formula, Dfa, Dpw>;

/// Synthesis under assumptions when `domain` is empty, planning under
/// assumptions otherwise.
struct Problem {
    Semantics semantics = Semantics::Finite;
    VarTable vars;
    std::optional<Domain> domain;
    Objective assumption = Formula::top();
    Objective goal = Formula::top();
    /// Fair planning: the assumption is additionally ω_{D,fair}. Only exported.
    bool fair = false;

    bool is_planning() const { return domain.has_value(); }
};

enum class Status { Realizable, Unrealizable, InvalidAssumption, Unsupported };

std::string to_string(Status s);

struct Verdict {
    Status status = Status::Unrealizable;
    std::optional<AgentStrategy> strategy;
    std::string reason;
    /// Formula handed back for unsupported requests (fair planning).
    std::optional<Formula> exported;
    /// Sizes and iteration counts, in key order.
    std::map<std::string, std::size_t> diagnostics;
};

class InvalidAssumptionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite semantics: the objective's DFA (formulas are compiled).
Dfa objective_dfa(const Objective& o, const VarTable& vars);
/// Infinite semantics: the objective's DPW. Formulas are accepted only when
/// propositional; temporal formulas need a user-supplied automaton.
Dpw objective_dpw(const Objective& o, const VarTable& vars);

/// The automaton for the environment's side: M_ω, or M_D ∧ M_ω for planning.
Dfa assumption_dfa(const Problem& p);

/// Whether ω (with ω_D for planning) is environment realizable.
bool check_assumption(const Problem& p);

struct SolveOptions {
    /// Run verify_strategy on extracted finite-trace strategies and fail loudly
    /// if one is rejected.
    bool self_check = true;
};

/// Solves the agent game for ω ⊃ γ after checking the assumption.
Verdict synthesize(const Problem& p, SolveOptions opts = {});
/// Solves the agent game for (M_D ∧ M_ω) ⊃ M_γ after checking the assumption.
Verdict plan(const Problem& p, SolveOptions opts = {});
/// Dispatches on is_planning().
Verdict solve(const Problem& p, SolveOptions opts = {});

struct VerifyResult {
    enum class Outcome { Accept, EmptyPlay, GoalViolated, NonTerminating };
    Outcome outcome = Outcome::Accept;
    /// Rejection witness: environment moves and the resulting trace. For
    /// NonTerminating, `loop` repeats forever after `trace`.
    std::vector<EnvMove> env_moves;
    Trace trace;
    Trace loop;

    bool accepted() const { return outcome == Outcome::Accept; }
};

/// Decides whether the strategy realizes γ assuming ω over finite traces:
/// every play against an environment that only makes safe moves of the
/// assumption automaton must stop, after at least one round, inside γ.
/// Throws InvalidAssumptionError if the assumption is not environment
/// realizable.
VerifyResult verify_strategy(const Problem& p, const AgentStrategy& s);

/// Plain realization of `goal` (all environment behaviours allowed).
VerifyResult verify_realizes(const AgentStrategy& s, const Dfa& goal);

/// Core check against explicit automata; `assumption` may be null.
VerifyResult verify_against(const AgentStrategy& s, const Dfa* assumption, const Dfa& goal);

/// FOND planning as planning under assumptions: ω = true and γ = G pre ∧ F goal
/// for a propositional goal, G pre ∧ goal otherwise. With `fair` the problem
/// is flagged fair and plan() reports it unsupported.
Problem fond_to_pua(const Domain& d, const Formula& goal, bool fair);

}  // namespace pua
