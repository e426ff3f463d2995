#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pua/dpw.hpp"

using namespace pua;

namespace {

const VarTable kVars({"y"}, {"x"});

Trace random_word(oracle::Rng& rng, std::size_t min_len, std::size_t max_len) {
    Trace t(min_len + rng() % (max_len - min_len + 1));
    for (Letter& l : t) l = static_cast<Letter>(rng() % 4);
    return t;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("lasso acceptance matches direct simulation") {
    oracle::Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        Dpw m = oracle::random_dpw(rng, kVars, 6, 5);
        for (int k = 0; k < 20; ++k) {
            Trace p = random_word(rng, 0, 4), l = random_word(rng, 1, 4);
            REQUIRE(accepts_lasso(m, p, l) == oracle::run_dpw_lasso(m, p, l));
        }
    }
    CHECK_THROWS(accepts_lasso(constant_dpw(kVars, true), {}, {}));
}

TEST_CASE("complement and normalization") {
    oracle::Rng rng(72);
    for (int i = 0; i < 200; ++i) {
        Dpw m = oracle::random_dpw(rng, kVars, 6, 6);
        Dpw c = dpw_complement(m);
        Dpw n = normalize_colors(m);
        CHECK(n.color_count() <= m.color_count());
        for (int k = 0; k < 20; ++k) {
            Trace p = random_word(rng, 0, 3), l = random_word(rng, 1, 4);
            bool acc = oracle::run_dpw_lasso(m, p, l);
            REQUIRE(oracle::run_dpw_lasso(c, p, l) == !acc);
            REQUIRE(oracle::run_dpw_lasso(n, p, l) == acc);
        }
    }
}

TEST_CASE("products follow the connective on lassos") {
    oracle::Rng rng(73);
    for (int i = 0; i < 60; ++i) {
        Dpw a = oracle::random_dpw(rng, kVars, 4, 4);
        Dpw b = oracle::random_dpw(rng, kVars, 4, 4);
        for (Connective op : {Connective::And, Connective::Or, Connective::Implies}) {
            Dpw p = dpw_combine(a, b, op);
            const std::size_t d = normalize_colors(a).color_count() + normalize_colors(b).color_count();
            CHECK(p.state_count() <= a.state_count() * b.state_count() * d * factorial(d));
            for (int k = 0; k < 30; ++k) {
                Trace pre = random_word(rng, 0, 4), loop = random_word(rng, 1, 5);
                REQUIRE(oracle::run_dpw_lasso(p, pre, loop) ==
                        apply(op, oracle::run_dpw_lasso(a, pre, loop), oracle::run_dpw_lasso(b, pre, loop)));
            }
        }
    }
}

TEST_CASE("three-way product") {
    oracle::Rng rng(74);
    for (int i = 0; i < 20; ++i) {
        std::vector<Dpw> parts;
        for (int j = 0; j < 3; ++j) parts.push_back(oracle::random_dpw(rng, kVars, 3, 3));
        auto rule = [](const std::vector<bool>& v) { return !(v[0] && v[1]) || v[2]; };
        Dpw p = dpw_product(parts, rule);
        for (int k = 0; k < 30; ++k) {
            Trace pre = random_word(rng, 0, 4), loop = random_word(rng, 1, 5);
            std::vector<bool> bits;
            for (const Dpw& m : parts) bits.push_back(oracle::run_dpw_lasso(m, pre, loop));
            REQUIRE(oracle::run_dpw_lasso(p, pre, loop) == rule(bits));
        }
    }
}

TEST_CASE("product guards") {
    std::vector<Dpw> parts;
    for (int j = 0; j < 5; ++j) {
        Dpw m(kVars, 2, 0);
        m.set_color(0, 0);
        m.set_color(1, 1);
        parts.push_back(m);
    }
    auto any = [](const std::vector<bool>& v) { return v[0]; };
    CHECK_THROWS_AS(dpw_product(parts, any), GuardError);
    parts.resize(2);
    CHECK_THROWS_AS(dpw_product(parts, any, 1), GuardError);
}

TEST_CASE("reading a DFA as a DPW") {
    Dfa d(kVars, 2, 0);
    d.set_final(1);
    for (Letter l = 0; l < 4; ++l) {
        d.set_next(0, l, kVars.agent_of(l) ? 1 : 0);
        d.set_next(1, l, 1);
    }
    Dpw m = dfa_as_dpw(d);
    CHECK(accepts_lasso(m, {0}, {2}));
    CHECK_FALSE(accepts_lasso(m, {}, {0}));
    CHECK(constant_dpw(kVars, true).color(0) == 0);
    CHECK(constant_dpw(kVars, false).color(0) == 1);
}
