#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pua/vars.hpp"

namespace pua {

enum class Op : std::uint8_t {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Next,      // strong next
    WeakNext,  // true at the last position
    Until,
    Release,
    Eventually,
    Always,
};

bool is_unary(Op op);
bool is_binary(Op op);
bool is_temporal(Op op);

struct FormulaNode;

/// Immutable LTLf syntax tree with structural sharing. Atoms refer to VarIds of
/// the VarTable the formula was built against.
class Formula {
public:
    Formula();  // the constant true

    static Formula top();
    static Formula bottom();
    static Formula atom(VarId v);
    static Formula negation(Formula f);
    static Formula conj(Formula l, Formula r);
    static Formula disj(Formula l, Formula r);
    static Formula implies(Formula l, Formula r);
    static Formula next(Formula f);
    static Formula weak_next(Formula f);
    static Formula until(Formula l, Formula r);
    static Formula release(Formula l, Formula r);
    static Formula eventually(Formula f);
    static Formula always(Formula f);
    static Formula make(Op op, Formula l, Formula r = {});

    Op op() const;
    VarId var() const;
    /// Operand of a unary node, left operand of a binary node.
    const Formula& lhs() const;
    const Formula& rhs() const;

    /// Syntax-tree node count, the size measure used throughout.
    std::size_t node_count() const;
    /// Longest root-to-leaf path counting operator nodes; literals have depth 0.
    std::size_t depth() const;
    std::size_t hash() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }
    /// Total structural order, used for canonical containers.
    bool operator<(const Formula& other) const;

private:
    explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
    Op op;
    VarId var = 0;
    Formula lhs;
    Formula rhs;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message), offset_(offset) {}
    /// Byte offset into the parsed text.
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct ParseOptions {
    /// Accept primed environment atoms such as `e1'`.
    bool allow_primed = false;
};

Formula parse_formula(std::string_view text, const VarTable& vars, ParseOptions opts = {});
/// Prints with minimal parentheses; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f, const VarTable& vars);

/// Negation normal form: negations only on atoms, implications eliminated.
Formula to_nnf(const Formula& f);
Formula negate_nnf(const Formula& f);
bool is_nnf(const Formula& f);
bool is_propositional(const Formula& f);

/// Finite-trace satisfaction (π, pos) ⊨ f. Throws std::invalid_argument for an
/// empty trace or an out-of-range position.
bool eval_finite(const Formula& f, const Trace& trace, std::size_t pos = 0);
/// Propositional evaluation where bit v of `assignment` is the value of VarId v.
bool eval_prop(const Formula& f, std::uint64_t assignment);

/// Replaces primed atoms e' of a propositional formula by a next-step
/// reference to e. With `weak`, positive occurrences become `WX e` and
/// negative ones `X e`, so every primed literal holds at the last position.
/// Without `weak` every occurrence becomes `X e` (infinite-trace reading).
Formula prime_to_next(const Formula& delta, const VarTable& vars, bool weak);

std::size_t count_primed(const Formula& f, const VarTable& vars);

/// Conjunction of all formulas, `true` for an empty range.
template <typename Range>
Formula conj_all(const Range& fs) {
    Formula out;
    bool first = true;
    for (const Formula& f : fs) {
        out = first ? f : Formula::conj(out, f);
        first = false;
    }
    return out;
}

/// Literal conjunction describing exactly the assignment `value` to the
/// variables [first, first + count).
Formula cube(VarId first, std::size_t count, std::uint32_t value);

}  // namespace pua
