#pragma once

#include <functional>
#include <vector>

#include "pua/dfa.hpp"

namespace pua {

using Color = std::uint32_t;

/// Deterministic parity automaton over the joint alphabet. A run is
/// successful iff the largest color seen infinitely often is even.
class Dpw {
public:
    Dpw() = default;
    Dpw(VarTable vars, std::size_t states, StateId initial = 0);

    const VarTable& vars() const { return vars_; }
    std::size_t state_count() const { return colors_.size(); }
    std::size_t letter_count() const { return letters_; }
    StateId initial() const { return initial_; }
    StateId next(StateId q, Letter l) const { return delta_[q * letters_ + l]; }
    Color color(StateId q) const { return colors_[q]; }
    /// Number of distinct colors, |col(Q)|.
    std::size_t color_count() const;

    void set_next(StateId q, Letter l, StateId to) { delta_[q * letters_ + l] = to; }
    void set_color(StateId q, Color c) { colors_[q] = c; }
    void set_initial(StateId q) { initial_ = q; }

    bool operator==(const Dpw&) const = default;

private:
    VarTable vars_;
    std::size_t letters_ = 0;
    StateId initial_ = 0;
    std::vector<StateId> delta_;
    std::vector<Color> colors_;
};

inline constexpr std::size_t kMaxProductColors = 8;
inline constexpr std::size_t kMaxProductStates = 1'000'000;

/// One-state DPW with color 0 (accepts everything) or 1 (accepts nothing).
Dpw constant_dpw(const VarTable& vars, bool accepting);

/// Same structure with every color shifted by one.
Dpw dpw_complement(const Dpw& m);

/// Maps the colors onto a contiguous range starting at 0 or 1, merging
/// neighbouring colors of equal parity. Acceptance is unchanged.
Dpw normalize_colors(const Dpw& m);

/// Acceptance over a vector of component verdicts.
using AcceptanceCombiner = std::function<bool(const std::vector<bool>&)>;

/// Synchronous product of several DPWs whose acceptance is an arbitrary
/// Boolean function of the component acceptances. Colors of the normalized
/// components become d tokens of an index appearance record; the product
/// state carries the record and the deepest position touched by the last
/// step, whose prefix decides the color. At most ∏nᵢ · d · d! states and
/// 2d colors. Throws GuardError beyond d > 8 or too many states.
Dpw dpw_product(const std::vector<Dpw>& parts, const AcceptanceCombiner& accept,
                std::size_t state_limit = kMaxProductStates);

Dpw dpw_combine(const Dpw& m1, const Dpw& m2, Connective c);

/// Acceptance of the ultimately periodic word prefix · loop^ω.
bool accepts_lasso(const Dpw& m, const Trace& prefix, const Trace& loop);

/// Reads the DFA as a DPW: color 0 on final states, 1 elsewhere.
Dpw dfa_as_dpw(const Dfa& m);

}  // namespace pua
