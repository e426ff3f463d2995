#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "pua/dfa.hpp"

using namespace pua;

namespace {

const VarTable kVars({"y"}, {"x"});

bool accepts_from(const Dfa& m, StateId q, const Trace& w) {
    for (Letter l : w) q = m.next(q, l);
    return m.is_final(q);
}

// Size of the smallest DFA for the non-empty-word language, from residual
// signatures over all words up to the Moore bound.
std::size_t minimal_size(const Dfa& m) {
    const std::size_t n = m.state_count();
    auto ws = oracle::words(m.letter_count(), n);
    auto signature = [&](StateId q) {
        std::vector<char> sig;
        for (const Trace& w : ws) sig.push_back(accepts_from(m, q, w));
        return sig;
    };
    std::set<StateId> inner;
    std::vector<StateId> frontier;
    for (Letter l = 0; l < m.letter_count(); ++l)
        if (inner.insert(m.next(m.initial(), l)).second) frontier.push_back(m.next(m.initial(), l));
    while (!frontier.empty()) {
        StateId q = frontier.back();
        frontier.pop_back();
        for (Letter l = 0; l < m.letter_count(); ++l)
            if (inner.insert(m.next(q, l)).second) frontier.push_back(m.next(q, l));
    }
    std::set<std::pair<bool, std::vector<char>>> classes;
    std::set<std::vector<char>> plus;
    for (StateId q : inner) {
        classes.insert({m.is_final(q), signature(q)});
        plus.insert(signature(q));
    }
    return classes.size() + (plus.count(signature(m.initial())) ? 0 : 1);
}

}  // namespace

TEST_CASE("the empty word is never accepted") {
    Dfa m = all_accepting_dfa(kVars);
    CHECK(m.state_count() == 1);
    CHECK_FALSE(accepts(m, {}));
    CHECK(accepts(m, {0}));
    CHECK_FALSE(accepts(none_accepting_dfa(kVars), {3}));
}

TEST_CASE("combine and complement follow the connectives pointwise") {
    oracle::Rng rng(21);
    auto ws = oracle::words(4, 5);
    for (int i = 0; i < 100; ++i) {
        Dfa a = oracle::random_dfa(rng, kVars, 5);
        Dfa b = oracle::random_dfa(rng, kVars, 5);
        Dfa c = complement(a);
        for (Connective op : {Connective::And, Connective::Or, Connective::Implies}) {
            Dfa p = combine(a, b, op);
            for (const Trace& w : ws)
                REQUIRE(accepts(p, w) == apply(op, oracle::run_dfa(a, w), oracle::run_dfa(b, w)));
        }
        for (const Trace& w : ws) REQUIRE(accepts(c, w) != oracle::run_dfa(a, w));
    }
}

TEST_CASE("minimize preserves the language and reaches the minimum") {
    oracle::Rng rng(22);
    VarTable v({"a"}, {"b"});
    for (int i = 0; i < 200; ++i) {
        Dfa m = oracle::random_dfa(rng, v, 7);
        Dfa mm = minimize(m);
        auto ws = oracle::words(4, m.state_count() + 2);
        for (const Trace& w : ws) REQUIRE(accepts(mm, w) == oracle::run_dfa(m, w));
        CHECK(mm.state_count() == minimal_size(m));
        CHECK(minimize(mm) == mm);
        CHECK(language_equal(m, mm));
    }
}

TEST_CASE("minimal automata are canonical") {
    oracle::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        Dfa a = oracle::random_dfa(rng, kVars, 4);
        Dfa b = oracle::random_dfa(rng, kVars, 4);
        bool same = true;
        for (const Trace& w : oracle::words(4, 8)) same &= accepts(a, w) == accepts(b, w);
        CHECK(language_equal(a, b) == same);
        // Renaming states does not change the canonical form.
        Dfa r(kVars, a.state_count(), static_cast<StateId>(a.state_count() - 1 - a.initial()));
        auto flip = [&](StateId q) { return static_cast<StateId>(a.state_count() - 1 - q); };
        for (StateId q = 0; q < a.state_count(); ++q) {
            r.set_final(flip(q), a.is_final(q));
            for (Letter l = 0; l < 4; ++l) r.set_next(flip(q), l, flip(a.next(q, l)));
        }
        CHECK(minimize(r) == minimize(a));
    }
}

TEST_CASE("hopcroft keeps the initial finality") {
    Dfa m(kVars, 2, 0);
    m.set_final(0);
    for (Letter l = 0; l < 4; ++l) {
        m.set_next(0, l, 1);
        m.set_next(1, l, 1);
    }
    CHECK(hopcroft_minimize(m).state_count() == 2);
    CHECK(minimize(m).state_count() == 1);
    CHECK(accepts(minimize(m), {0}) == false);
}

TEST_CASE("reachable states in breadth-first order") {
    Dfa m(kVars, 4, 2);
    for (Letter l = 0; l < 4; ++l) {
        m.set_next(2, l, l < 2 ? 3 : 0);
        m.set_next(3, l, 3);
        m.set_next(0, l, 0);
        m.set_next(1, l, 2);
    }
    CHECK(reachable_states(m) == std::vector<StateId>{2, 3, 0});
}

TEST_CASE("vocabularies must agree") {
    Dfa a = all_accepting_dfa(kVars);
    Dfa b = all_accepting_dfa(VarTable({"x"}, {"y"}));
    CHECK_THROWS_AS(combine(a, b, Connective::And), VocabularyError);
}
