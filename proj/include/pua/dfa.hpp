#pragma once

#include <cstdint>
#include <vector>

#include "pua/vars.hpp"

namespace pua {

using StateId = std::uint32_t;

enum class Connective { And, Or, Implies };

inline bool apply(Connective c, bool l, bool r) {
    switch (c) {
        case Connective::And: return l && r;
        case Connective::Or: return l || r;
        case Connective::Implies: return !l || r;
    }
    return false;
}

/// Deterministic finite automaton over the explicit joint alphabet 2^(E∪A).
/// The transition function is total. Runs are taken over non-empty words
/// only: the empty word is never accepted, whatever the initial state.
class Dfa {
public:
    Dfa() = default;
    /// All transitions initially lead to state 0; no state is final.
    Dfa(VarTable vars, std::size_t states, StateId initial = 0);

    const VarTable& vars() const { return vars_; }
    std::size_t state_count() const { return finals_.size(); }
    std::size_t letter_count() const { return letters_; }
    StateId initial() const { return initial_; }

    StateId next(StateId q, Letter l) const { return delta_[q * letters_ + l]; }
    bool is_final(StateId q) const { return finals_[q] != 0; }

    void set_next(StateId q, Letter l, StateId to) { delta_[q * letters_ + l] = to; }
    void set_final(StateId q, bool f = true) { finals_[q] = f; }
    void set_initial(StateId q) { initial_ = q; }

    /// Structural equality: same vocabulary, numbering, transitions and finals.
    bool operator==(const Dfa& other) const = default;

private:
    VarTable vars_;
    std::size_t letters_ = 0;
    StateId initial_ = 0;
    std::vector<StateId> delta_;
    std::vector<char> finals_;
};

Dfa all_accepting_dfa(const VarTable& vars);
Dfa none_accepting_dfa(const VarTable& vars);

/// True iff the word is non-empty and its run ends in a final state.
bool accepts(const Dfa& m, const Trace& word);

/// Product over the reachable part of Q1 × Q2.
Dfa combine(const Dfa& m1, const Dfa& m2, Connective c);
Dfa complement(const Dfa& m);

/// States reachable from the initial state, in breadth-first letter order.
std::vector<StateId> reachable_states(const Dfa& m);

/// Canonical minimal automaton of the non-empty-word language. Since the
/// empty word is irrelevant, the initial state's finality is chosen to give
/// the fewest states (non-final on ties), and states are numbered by
/// breadth-first search in letter order.
Dfa minimize(const Dfa& m);

/// Hopcroft partition refinement on the reachable part, keeping the initial
/// state's finality as given. Exposed for tests.
Dfa hopcroft_minimize(const Dfa& m);

bool language_equal(const Dfa& m1, const Dfa& m2);

/// Throws VocabularyError if the two vocabularies differ.
void require_same_vars(const VarTable& a, const VarTable& b);

}  // namespace pua
