#include <doctest.h>

#include "oracles.hpp"
#include "pua/formula.hpp"

using namespace pua;

namespace {

// Textbook semantics, evaluated recursively without memoization.
bool holds(const Formula& f, const Trace& t, std::size_t i) {
    const std::size_t n = t.size();
    switch (f.op()) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::Atom: return (t[i] >> f.var()) & 1u;
        case Op::Not: return !holds(f.lhs(), t, i);
        case Op::And: return holds(f.lhs(), t, i) && holds(f.rhs(), t, i);
        case Op::Or: return holds(f.lhs(), t, i) || holds(f.rhs(), t, i);
        case Op::Implies: return !holds(f.lhs(), t, i) || holds(f.rhs(), t, i);
        case Op::Next: return i + 1 < n && holds(f.lhs(), t, i + 1);
        case Op::WeakNext: return i + 1 >= n || holds(f.lhs(), t, i + 1);
        case Op::Eventually:
            for (std::size_t j = i; j < n; ++j)
                if (holds(f.lhs(), t, j)) return true;
            return false;
        case Op::Always:
            for (std::size_t j = i; j < n; ++j)
                if (!holds(f.lhs(), t, j)) return false;
            return true;
        case Op::Until:
            for (std::size_t j = i; j < n; ++j) {
                if (holds(f.rhs(), t, j)) return true;
                if (!holds(f.lhs(), t, j)) return false;
            }
            return false;
        case Op::Release:
            for (std::size_t j = i; j < n; ++j) {
                if (!holds(f.rhs(), t, j)) return false;
                if (holds(f.lhs(), t, j)) return true;
            }
            return true;
    }
    return false;
}

const VarTable kVars({"y"}, {"x"});

Formula parse(std::string_view s, const VarTable& v = kVars) { return parse_formula(s, v); }

}  // namespace

TEST_CASE("strong and weak next at the last position") {
    Formula x = parse("x");
    Trace one{0b10};
    CHECK_FALSE(eval_finite(Formula::next(x), one));
    CHECK(eval_finite(Formula::weak_next(x), one));
    CHECK(eval_finite(parse("G x"), one));
    CHECK_FALSE(eval_finite(parse("F y"), one));
    CHECK_THROWS_AS(eval_finite(x, {}), std::invalid_argument);
    CHECK_THROWS_AS(eval_finite(x, one, 1), std::invalid_argument);
}

TEST_CASE("eval_finite agrees with the recursive semantics") {
    oracle::Rng rng(11);
    auto ws = oracle::words(4, 4);
    for (int i = 0; i < 300; ++i) {
        Formula f = oracle::random_formula(rng, kVars, 4, true);
        for (const Trace& w : ws)
            for (std::size_t pos = 0; pos < w.size(); ++pos) REQUIRE(eval_finite(f, w, pos) == holds(f, w, pos));
    }
}

TEST_CASE("negation normal form preserves the semantics") {
    oracle::Rng rng(12);
    auto ws = oracle::words(4, 4);
    for (int i = 0; i < 300; ++i) {
        Formula f = oracle::random_formula(rng, kVars, 4, true);
        Formula g = to_nnf(f);
        Formula ng = negate_nnf(to_nnf(f));
        CHECK(is_nnf(g));
        CHECK(is_nnf(ng));
        for (const Trace& w : ws) {
            REQUIRE(holds(g, w, 0) == holds(f, w, 0));
            REQUIRE(holds(ng, w, 0) == !holds(f, w, 0));
        }
    }
}

TEST_CASE("printing and parsing round-trip") {
    oracle::Rng rng(13);
    VarTable v({"a", "b"}, {"c"});
    for (int i = 0; i < 500; ++i) {
        Formula f = oracle::random_formula(rng, v, 5, true);
        std::string text = to_string(f, v);
        CAPTURE(text);
        REQUIRE(parse(text, v) == f);
    }
    Formula primed = parse_formula("a' & !b' -> c", v, {.allow_primed = true});
    CHECK(parse_formula(to_string(primed, v), v, {.allow_primed = true}) == primed);
}

TEST_CASE("operator precedence and associativity") {
    CHECK(parse("x | y & x") == Formula::disj(parse("x"), parse("y & x")));
    CHECK(parse("x -> y -> x") == Formula::implies(parse("x"), parse("y -> x")));
    CHECK(parse("x U y U x") == Formula::until(parse("x"), parse("y U x")));
    CHECK(parse("x R y R x") == Formula::release(parse("x"), parse("y R x")));
    CHECK(parse("!x U y") == Formula::until(parse("!x"), parse("y")));
    CHECK(parse("x & y U x") == Formula::conj(parse("x"), parse("y U x")));
    CHECK(parse("X x & y") == Formula::conj(parse("X x"), parse("y")));
    CHECK(parse("WX(x)") == Formula::weak_next(parse("x")));
    CHECK(parse("G F x") == Formula::always(Formula::eventually(parse("x"))));
    CHECK(to_string(parse("(x | y) & x"), kVars) == "(x | y) & x");
    CHECK(to_string(parse("!(x & y)"), kVars) == "!(x & y)");
}

TEST_CASE("parse errors carry positions") {
    auto offset_of = [](std::string_view s) {
        try {
            parse(s);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return std::string_view::npos;
    };
    CHECK(offset_of("x & z") == 4);
    CHECK(offset_of("x &") == 3);
    CHECK(offset_of("(x") == 2);
    CHECK(offset_of("x y") == 2);
    CHECK(offset_of("y'") != std::string_view::npos);
    CHECK_THROWS_AS(parse_formula("x'", kVars, {.allow_primed = true}), ParseError);
}

TEST_CASE("depth and size") {
    CHECK(parse("!x").depth() == 0);
    CHECK(parse("x & !y").depth() == 1);
    CHECK(parse("X (x U y)").depth() == 2);
    CHECK(parse("x & !y").node_count() == 4);
    CHECK(Formula::top().node_count() == 1);
}

TEST_CASE("primes become next-step literals") {
    VarTable v({"p", "q"}, {"a"});
    Formula d = parse_formula("a & p' | !q'", v, {.allow_primed = true});
    CHECK(count_primed(d, v) == 2);
    CHECK(to_string(prime_to_next(d, v, true), v) == "a & WX p | !X q");
    CHECK(to_string(prime_to_next(d, v, false), v) == "a & X p | !X q");
    Formula neg = parse_formula("!(p' & a)", v, {.allow_primed = true});
    CHECK(to_string(prime_to_next(neg, v, true), v) == "!(X p & a)");
    Formula nested = parse_formula("!(!p' | a)", v, {.allow_primed = true});
    CHECK(to_string(prime_to_next(nested, v, true), v) == "!(!WX p | a)");
}

TEST_CASE("cube describes exactly one assignment") {
    VarTable v({"a", "b", "c"}, {});
    for (std::uint32_t val = 0; val < 8; ++val) {
        Formula c = cube(0, 3, val);
        for (std::uint32_t s = 0; s < 8; ++s) CHECK(eval_prop(c, s) == (s == val));
    }
    CHECK(cube(0, 0, 0) == Formula::top());
}
