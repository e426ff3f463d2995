#include <cctype>
#include <vector>

#include "pua/formula.hpp"

namespace pua {

namespace {

enum class Tok {
    Ident,
    True,
    False,
    Not,
    Next,
    WeakNext,
    Eventually,
    Always,
    Until,
    Release,
    And,
    Or,
    Implies,
    LParen,
    RParen,
    Prime,
    End,
};

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            std::string_view word = s.substr(i, j - i);
            Tok k = Tok::Ident;
            if (word == "true") k = Tok::True;
            else if (word == "false") k = Tok::False;
            else if (word == "X") k = Tok::Next;
            else if (word == "WX") k = Tok::WeakNext;
            else if (word == "F") k = Tok::Eventually;
            else if (word == "G") k = Tok::Always;
            else if (word == "U") k = Tok::Until;
            else if (word == "R") k = Tok::Release;
            out.push_back({k, word, i});
            i = j;
            continue;
        }
        switch (c) {
            case '!': out.push_back({Tok::Not, s.substr(i, 1), i}); break;
            case '&': out.push_back({Tok::And, s.substr(i, 1), i}); break;
            case '|': out.push_back({Tok::Or, s.substr(i, 1), i}); break;
            case '(': out.push_back({Tok::LParen, s.substr(i, 1), i}); break;
            case ')': out.push_back({Tok::RParen, s.substr(i, 1), i}); break;
            case '\'': out.push_back({Tok::Prime, s.substr(i, 1), i}); break;
            case '-':
                if (i + 1 < s.size() && s[i + 1] == '>') {
                    out.push_back({Tok::Implies, s.substr(i, 2), i});
                    ++i;
                    break;
                }
                [[fallthrough]];
            default:
                throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", i);
        }
        ++i;
    }
    out.push_back({Tok::End, {}, s.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const VarTable& vars, ParseOptions opts)
        : toks_(lex(text)), vars_(vars), opts_(opts) {}

    Formula parse() {
        Formula f = implication();
        if (peek().kind != Tok::End) fail("unexpected '" + std::string(peek().text) + "'");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().offset); }

    Formula implication() {
        Formula l = disjunction();
        if (accept(Tok::Implies)) return Formula::implies(l, implication());
        return l;
    }

    Formula disjunction() {
        Formula l = conjunction();
        while (accept(Tok::Or)) l = Formula::disj(l, conjunction());
        return l;
    }

    Formula conjunction() {
        Formula l = binary_temporal();
        while (accept(Tok::And)) l = Formula::conj(l, binary_temporal());
        return l;
    }

    Formula binary_temporal() {
        Formula l = unary();
        if (accept(Tok::Until)) return Formula::until(l, binary_temporal());
        if (accept(Tok::Release)) return Formula::release(l, binary_temporal());
        return l;
    }

    Formula unary() {
        switch (peek().kind) {
            case Tok::Not: take(); return Formula::negation(unary());
            case Tok::Next: take(); return Formula::next(unary());
            case Tok::WeakNext: take(); return Formula::weak_next(unary());
            case Tok::Eventually: take(); return Formula::eventually(unary());
            case Tok::Always: take(); return Formula::always(unary());
            default: return primary();
        }
    }

    Formula primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::True: take(); return Formula::top();
            case Tok::False: take(); return Formula::bottom();
            case Tok::LParen: {
                take();
                Formula f = implication();
                if (!accept(Tok::RParen)) fail("expected ')'");
                return f;
            }
            case Tok::Ident: {
                take();
                auto v = vars_.find(t.text);
                if (!v) throw ParseError("undeclared atom '" + std::string(t.text) + "'", t.offset);
                if (peek().kind == Tok::Prime) {
                    const Token& p = take();
                    if (!opts_.allow_primed) throw ParseError("primed atoms are not allowed here", p.offset);
                    if (!vars_.is_env(*v))
                        throw ParseError("only environment variables can be primed", p.offset);
                    return Formula::atom(vars_.primed(*v));
                }
                return Formula::atom(*v);
            }
            case Tok::End: fail("unexpected end of formula");
            default: fail("unexpected '" + std::string(t.text) + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const VarTable& vars_;
    ParseOptions opts_;
};

// Binding strength; higher binds tighter.
int precedence(Op op) {
    switch (op) {
        case Op::Implies: return 1;
        case Op::Or: return 2;
        case Op::And: return 3;
        case Op::Until:
        case Op::Release: return 4;
        case Op::Not:
        case Op::Next:
        case Op::WeakNext:
        case Op::Eventually:
        case Op::Always: return 5;
        default: return 6;
    }
}

const char* symbol(Op op) {
    switch (op) {
        case Op::Not: return "!";
        case Op::Next: return "X ";
        case Op::WeakNext: return "WX ";
        case Op::Eventually: return "F ";
        case Op::Always: return "G ";
        case Op::And: return " & ";
        case Op::Or: return " | ";
        case Op::Implies: return " -> ";
        case Op::Until: return " U ";
        case Op::Release: return " R ";
        default: return "";
    }
}

void print(const Formula& f, const VarTable& vars, int min_prec, std::string& out) {
    const int p = precedence(f.op());
    const bool paren = p < min_prec;
    if (paren) out += '(';
    switch (f.op()) {
        case Op::True: out += "true"; break;
        case Op::False: out += "false"; break;
        case Op::Atom: out += vars.name(f.var()); break;
        default:
            if (is_unary(f.op())) {
                out += symbol(f.op());
                print(f.lhs(), vars, p, out);
            } else {
                const bool right_assoc = f.op() == Op::Implies || f.op() == Op::Until || f.op() == Op::Release;
                print(f.lhs(), vars, right_assoc ? p + 1 : p, out);
                out += symbol(f.op());
                print(f.rhs(), vars, right_assoc ? p : p + 1, out);
            }
    }
    if (paren) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text, const VarTable& vars, ParseOptions opts) {
    return Parser(text, vars, opts).parse();
}

std::string to_string(const Formula& f, const VarTable& vars) {
    std::string out;
    print(f, vars, 0, out);
    return out;
}

}  // namespace pua
