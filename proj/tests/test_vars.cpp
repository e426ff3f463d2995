#include <doctest.h>

#include "pua/vars.hpp"

using namespace pua;

TEST_CASE("variables are laid out environment first") {
    VarTable v({"y", "z"}, {"x"});
    CHECK(v.size() == 3);
    CHECK(v.is_env(0));
    CHECK(v.is_env(1));
    CHECK(v.is_agent(2));
    CHECK(v.primed(1) == 4);
    CHECK(v.is_primed(4));
    CHECK(v.unprimed(4) == 1);
    CHECK(v.name(4) == "z'");
    CHECK(v.find("x") == VarId{2});
    CHECK_FALSE(v.find("w"));
    CHECK(v.env_moves() == 4);
    CHECK(v.actions() == 2);
    CHECK(v.letters() == 8);
}

TEST_CASE("join splits back into its parts") {
    VarTable v({"a", "b"}, {"c", "d"});
    for (EnvMove e = 0; e < v.env_moves(); ++e)
        for (Action a = 0; a < v.actions(); ++a) {
            Letter l = v.join(e, a);
            CHECK(v.env_of(l) == e);
            CHECK(v.agent_of(l) == a);
        }
}

TEST_CASE("bad vocabularies are rejected") {
    CHECK_THROWS_AS(VarTable({"x"}, {"x"}), VocabularyError);
    CHECK_THROWS_AS(VarTable({"U"}, {}), VocabularyError);
    CHECK_THROWS_AS(VarTable({"true"}, {}), VocabularyError);
    CHECK_THROWS_AS(VarTable({"1x"}, {}), VocabularyError);
    CHECK_THROWS_AS(VarTable({"a"}, {}).primed(5), VocabularyError);
    std::vector<std::string> many;
    for (int i = 0; i < 17; ++i) many.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(VarTable(many, {}).require_explicit(), GuardError);
    CHECK_NOTHROW(VarTable({"a"}, {"b"}).require_explicit());
}

TEST_CASE("bit strings") {
    CHECK(to_bits(0b101, 3) == "101");
    CHECK(to_bits(0b001, 3) == "100");
    CHECK(to_bits(0, 0) == "-");
    for (std::uint32_t x = 0; x < 16; ++x) CHECK(from_bits(to_bits(x, 4), 4) == x);
    CHECK(from_bits("-", 0) == 0);
    CHECK_THROWS_AS(from_bits("10", 3), std::invalid_argument);
    CHECK_THROWS_AS(from_bits("1a", 2), std::invalid_argument);
}

TEST_CASE("letters render as literal sets") {
    VarTable v({"y"}, {"x"});
    CHECK(letter_to_string(v, v.join(1, 1)) == "{y, x}");
    CHECK(letter_to_string(v, v.join(0, 1)) == "{!y, x}");
    CHECK(trace_to_string(v, {v.join(1, 0), v.join(0, 0)}) == "{y, !x} {!y, !x}");
}
