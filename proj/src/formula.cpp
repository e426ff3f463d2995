#include "pua/formula.hpp"

#include <functional>
#include <vector>

namespace pua {

bool is_unary(Op op) {
    switch (op) {
        case Op::Not:
        case Op::Next:
        case Op::WeakNext:
        case Op::Eventually:
        case Op::Always:
            return true;
        default:
            return false;
    }
}

bool is_binary(Op op) {
    switch (op) {
        case Op::And:
        case Op::Or:
        case Op::Implies:
        case Op::Until:
        case Op::Release:
            return true;
        default:
            return false;
    }
}

bool is_temporal(Op op) {
    switch (op) {
        case Op::Next:
        case Op::WeakNext:
        case Op::Until:
        case Op::Release:
        case Op::Eventually:
        case Op::Always:
            return true;
        default:
            return false;
    }
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const Formula& null_formula() {
    static const Formula f;
    return f;
}

}  // namespace

// A null node stands for the constant true.
Formula::Formula() = default;

Formula Formula::make(Op op, Formula l, Formula r) {
    if (op == Op::True) return Formula();
    auto n = std::make_shared<FormulaNode>();
    n->op = op;
    n->hash = mix(0, static_cast<std::size_t>(op) + 1);
    if (is_unary(op)) {
        n->lhs = std::move(l);
        n->size = 1 + n->lhs.node_count();
        n->depth = op == Op::Not && n->lhs.op() == Op::Atom ? 0 : 1 + n->lhs.depth();
        n->hash = mix(n->hash, n->lhs.hash());
    } else if (is_binary(op)) {
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        n->size = 1 + n->lhs.node_count() + n->rhs.node_count();
        n->depth = 1 + std::max(n->lhs.depth(), n->rhs.depth());
        n->hash = mix(mix(n->hash, n->lhs.hash()), n->rhs.hash());
    }
    return Formula(std::move(n));
}

Formula Formula::top() { return Formula(); }
Formula Formula::bottom() { return make(Op::False, {}); }

Formula Formula::atom(VarId v) {
    auto n = std::make_shared<FormulaNode>();
    n->op = Op::Atom;
    n->var = v;
    n->hash = mix(mix(0, static_cast<std::size_t>(Op::Atom) + 1), v);
    return Formula(std::move(n));
}

Formula Formula::negation(Formula f) { return make(Op::Not, std::move(f)); }
Formula Formula::conj(Formula l, Formula r) { return make(Op::And, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return make(Op::Or, std::move(l), std::move(r)); }
Formula Formula::implies(Formula l, Formula r) { return make(Op::Implies, std::move(l), std::move(r)); }
Formula Formula::next(Formula f) { return make(Op::Next, std::move(f)); }
Formula Formula::weak_next(Formula f) { return make(Op::WeakNext, std::move(f)); }
Formula Formula::until(Formula l, Formula r) { return make(Op::Until, std::move(l), std::move(r)); }
Formula Formula::release(Formula l, Formula r) { return make(Op::Release, std::move(l), std::move(r)); }
Formula Formula::eventually(Formula f) { return make(Op::Eventually, std::move(f)); }
Formula Formula::always(Formula f) { return make(Op::Always, std::move(f)); }

Op Formula::op() const { return node_ ? node_->op : Op::True; }
VarId Formula::var() const { return node_ ? node_->var : 0; }
const Formula& Formula::lhs() const { return node_ ? node_->lhs : null_formula(); }
const Formula& Formula::rhs() const { return node_ ? node_->rhs : null_formula(); }
std::size_t Formula::node_count() const { return node_ ? node_->size : 1; }
std::size_t Formula::depth() const { return node_ ? node_->depth : 0; }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0x51ed27; }

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (hash() != other.hash() || op() != other.op() || node_count() != other.node_count()) return false;
    if (op() == Op::Atom) return var() == other.var();
    return lhs() == other.lhs() && rhs() == other.rhs();
}

bool Formula::operator<(const Formula& other) const {
    if (node_ == other.node_) return false;
    if (op() != other.op()) return op() < other.op();
    if (op() == Op::Atom) return var() < other.var();
    if (lhs() != other.lhs()) return lhs() < other.lhs();
    return rhs() < other.rhs();
}

Formula negate_nnf(const Formula& f) {
    switch (f.op()) {
        case Op::True: return Formula::bottom();
        case Op::False: return Formula::top();
        case Op::Atom: return Formula::negation(f);
        case Op::Not: return to_nnf(f.lhs());
        case Op::And: return Formula::disj(negate_nnf(f.lhs()), negate_nnf(f.rhs()));
        case Op::Or: return Formula::conj(negate_nnf(f.lhs()), negate_nnf(f.rhs()));
        case Op::Implies: return Formula::conj(to_nnf(f.lhs()), negate_nnf(f.rhs()));
        case Op::Next: return Formula::weak_next(negate_nnf(f.lhs()));
        case Op::WeakNext: return Formula::next(negate_nnf(f.lhs()));
        case Op::Until: return Formula::release(negate_nnf(f.lhs()), negate_nnf(f.rhs()));
        case Op::Release: return Formula::until(negate_nnf(f.lhs()), negate_nnf(f.rhs()));
        case Op::Eventually: return Formula::always(negate_nnf(f.lhs()));
        case Op::Always: return Formula::eventually(negate_nnf(f.lhs()));
    }
    return f;
}

Formula to_nnf(const Formula& f) {
    switch (f.op()) {
        case Op::True:
        case Op::False:
        case Op::Atom:
            return f;
        case Op::Not: return negate_nnf(f.lhs());
        case Op::Implies: return Formula::disj(negate_nnf(f.lhs()), to_nnf(f.rhs()));
        default:
            if (is_unary(f.op())) return Formula::make(f.op(), to_nnf(f.lhs()));
            return Formula::make(f.op(), to_nnf(f.lhs()), to_nnf(f.rhs()));
    }
}

bool is_nnf(const Formula& f) {
    switch (f.op()) {
        case Op::True:
        case Op::False:
        case Op::Atom:
            return true;
        case Op::Not: return f.lhs().op() == Op::Atom;
        case Op::Implies: return false;
        default:
            if (is_unary(f.op())) return is_nnf(f.lhs());
            return is_nnf(f.lhs()) && is_nnf(f.rhs());
    }
}

bool is_propositional(const Formula& f) {
    if (is_temporal(f.op())) return false;
    if (is_unary(f.op())) return is_propositional(f.lhs());
    if (is_binary(f.op())) return is_propositional(f.lhs()) && is_propositional(f.rhs());
    return true;
}

namespace {

// Truth value of f at every position of the trace, computed bottom-up.
std::vector<char> eval_all(const Formula& f, const Trace& t) {
    const std::size_t n = t.size();
    std::vector<char> out(n, 0);
    switch (f.op()) {
        case Op::True: std::fill(out.begin(), out.end(), 1); break;
        case Op::False: break;
        case Op::Atom:
            if (f.var() >= 32) throw VocabularyError("primed atom in temporal evaluation");
            for (std::size_t i = 0; i < n; ++i) out[i] = (t[i] >> f.var()) & 1u;
            break;
        case Op::Not: {
            auto a = eval_all(f.lhs(), t);
            for (std::size_t i = 0; i < n; ++i) out[i] = !a[i];
            break;
        }
        case Op::And:
        case Op::Or:
        case Op::Implies: {
            auto a = eval_all(f.lhs(), t);
            auto b = eval_all(f.rhs(), t);
            for (std::size_t i = 0; i < n; ++i) {
                if (f.op() == Op::And) out[i] = a[i] && b[i];
                else if (f.op() == Op::Or) out[i] = a[i] || b[i];
                else out[i] = !a[i] || b[i];
            }
            break;
        }
        case Op::Next:
        case Op::WeakNext: {
            auto a = eval_all(f.lhs(), t);
            for (std::size_t i = 0; i + 1 < n; ++i) out[i] = a[i + 1];
            out[n - 1] = f.op() == Op::WeakNext;
            break;
        }
        case Op::Until:
        case Op::Release: {
            auto a = eval_all(f.lhs(), t);
            auto b = eval_all(f.rhs(), t);
            // a U b at i: b at i, or a at i and (a U b) at i+1; false past the end.
            // a R b at i: b at i, and a at i or (a R b) at i+1; true past the end.
            char later = f.op() == Op::Release;
            for (std::size_t i = n; i-- > 0;) {
                if (f.op() == Op::Until) out[i] = b[i] || (a[i] && later);
                else out[i] = b[i] && (a[i] || later);
                later = out[i];
            }
            break;
        }
        case Op::Eventually:
        case Op::Always: {
            auto a = eval_all(f.lhs(), t);
            char later = f.op() == Op::Always;
            for (std::size_t i = n; i-- > 0;) {
                out[i] = f.op() == Op::Eventually ? (a[i] || later) : (a[i] && later);
                later = out[i];
            }
            break;
        }
    }
    return out;
}

}  // namespace

bool eval_finite(const Formula& f, const Trace& trace, std::size_t pos) {
    if (trace.empty()) throw std::invalid_argument("finite-trace semantics needs a non-empty trace");
    if (pos >= trace.size()) throw std::invalid_argument("position beyond the end of the trace");
    return eval_all(f, trace)[pos];
}

bool eval_prop(const Formula& f, std::uint64_t assignment) {
    switch (f.op()) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::Atom: return (assignment >> f.var()) & 1u;
        case Op::Not: return !eval_prop(f.lhs(), assignment);
        case Op::And: return eval_prop(f.lhs(), assignment) && eval_prop(f.rhs(), assignment);
        case Op::Or: return eval_prop(f.lhs(), assignment) || eval_prop(f.rhs(), assignment);
        case Op::Implies: return !eval_prop(f.lhs(), assignment) || eval_prop(f.rhs(), assignment);
        default: throw std::invalid_argument("temporal operator in propositional evaluation");
    }
}

namespace {

Formula substitute_primes(const Formula& f, const VarTable& vars, bool weak, bool positive) {
    switch (f.op()) {
        case Op::True:
        case Op::False:
            return f;
        case Op::Atom:
            if (vars.is_primed(f.var())) {
                Formula base = Formula::atom(vars.unprimed(f.var()));
                return weak && positive ? Formula::weak_next(base) : Formula::next(base);
            }
            if (f.var() >= vars.size()) throw VocabularyError("primed agent variable in transition formula");
            return f;
        case Op::Not: return Formula::negation(substitute_primes(f.lhs(), vars, weak, !positive));
        case Op::And:
        case Op::Or:
            return Formula::make(f.op(), substitute_primes(f.lhs(), vars, weak, positive),
                                 substitute_primes(f.rhs(), vars, weak, positive));
        case Op::Implies:
            return Formula::implies(substitute_primes(f.lhs(), vars, weak, !positive),
                                    substitute_primes(f.rhs(), vars, weak, positive));
        default:
            throw std::invalid_argument("transition formula must be propositional");
    }
}

}  // namespace

Formula prime_to_next(const Formula& delta, const VarTable& vars, bool weak) {
    return substitute_primes(delta, vars, weak, true);
}

std::size_t count_primed(const Formula& f, const VarTable& vars) {
    if (f.op() == Op::Atom) return vars.is_primed(f.var()) ? 1 : 0;
    if (is_unary(f.op())) return count_primed(f.lhs(), vars);
    if (is_binary(f.op())) return count_primed(f.lhs(), vars) + count_primed(f.rhs(), vars);
    return 0;
}

Formula cube(VarId first, std::size_t count, std::uint32_t value) {
    std::vector<Formula> lits;
    for (std::size_t i = 0; i < count; ++i) {
        Formula a = Formula::atom(static_cast<VarId>(first + i));
        lits.push_back(value >> i & 1u ? a : Formula::negation(a));
    }
    return conj_all(lits);
}

}  // namespace pua
