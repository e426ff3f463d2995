#pragma once

#include <vector>

#include "pua/dfa.hpp"
#include "pua/formula.hpp"

namespace pua {

/// Conjunction of automaton states, sorted and duplicate-free.
using Cube = std::vector<std::uint32_t>;
/// Disjunction of cubes: an empty DNF is false, a DNF holding the empty cube
/// is true. Kept sorted and free of subsumed cubes.
using Dnf = std::vector<Cube>;

Dnf dnf_or(const Dnf& a, const Dnf& b);
Dnf dnf_and(const Dnf& a, const Dnf& b);

/// Alternating automaton over the closure of an NNF formula. State 0 reads
/// the whole formula at the first position; every other state is a pending
/// next-step obligation `X ψ` or `WX ψ` taken from the formula's subterms
/// (including the unfoldings X(φ U ψ), X F ψ, WX(φ R ψ), WX G ψ). After the
/// last letter, only weak obligations may remain.
struct AlternatingAutomaton {
    VarTable vars;
    std::vector<Formula> states;
    std::vector<char> weak;
    /// transitions[state * letters + letter]
    std::vector<Dnf> transitions;

    std::size_t state_count() const { return states.size(); }
    const Dnf& step(std::uint32_t state, Letter l) const {
        return transitions[state * vars.letters() + l];
    }
    /// True iff the cube may be left pending when the word ends.
    bool accepting_at_end(const Cube& c) const;
};

/// Requires `f` in NNF.
AlternatingAutomaton compile_nnf_closure(const Formula& f, const VarTable& vars);

/// Subset construction: every reachable DNF over alternating states becomes a
/// DFA state (its cubes are the states of the implicit NFA). Not minimized.
Dfa determinize(const AlternatingAutomaton& aa, std::size_t state_limit = 1'000'000);

/// LTLf formula to its minimal DFA: NNF, closure automaton, determinize, minimize.
Dfa compile(const Formula& f, const VarTable& vars);

}  // namespace pua
