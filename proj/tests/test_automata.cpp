#include <doctest.h>

#include "core/automata.hpp"
#include "core/errors.hpp"
#include "core/words.hpp"

using namespace fibmap::automata;

TEST_CASE("thue-morse machine follows the worked path") {
    Dfao tm = builtin("tm");
    std::vector<std::uint8_t> w{1, 1, 0};  // (6)_2 msd-first
    CHECK(tm.eval(w) == '0');
    CHECK(tm.term(6) == '0');
    CHECK(tm.term(0) == '0');
    CHECK(tm.eval(std::vector<std::uint8_t>{}) == '0');  // empty word: initial output
}

TEST_CASE("fibonacci machine reads zeckendorf words") {
    Dfao fib = builtin("fib");
    std::vector<std::uint8_t> w{1, 0, 1, 0, 0};  // (11)_F
    CHECK(fib.eval(w) == '0');
    CHECK(fib.term(11) == '0');
    CHECK(fib.term(0) == '0');
    CHECK(fib.term(4) == '1');
    // n = 3..7 -> 0,1,0,1,0 (substitution prefix 01001010...)
    std::string expect = "01010";
    for (int n = 3; n <= 7; ++n) CHECK(fib.term(n) == expect[n - 3]);
}

TEST_CASE("zeckendorf machines reject invalid digit words") {
    Dfao fib = builtin("fib");
    CHECK_THROWS_AS(fib.eval(std::vector<std::uint8_t>{1, 1}), fibmap::InvalidZeckendorf);
    CHECK_THROWS_AS(fib.eval(std::vector<std::uint8_t>{0, 1}), fibmap::InvalidZeckendorf);
    CHECK_THROWS_AS(fib.eval(std::vector<std::uint8_t>{2}), fibmap::InvalidZeckendorf);
    Dfao tm = builtin("tm");
    CHECK_THROWS_AS(tm.eval(std::vector<std::uint8_t>{2}), fibmap::DigitOutOfRange);
    CHECK_THROWS_AS(builtin("rs"), fibmap::UnknownName);
}

TEST_CASE("machines agree with the substitution streams") {
    Dfao fib = builtin("fib"), tm = builtin("tm");
    auto fs = fibmap::words::make_stream("fib");
    auto ts = fibmap::words::make_stream("tm");
    for (std::uint64_t n = 0; n < 30000; ++n) {
        CHECK(fib.term(n) == fs->term(n));
        CHECK(tm.term(n) == ts->term(n));
    }
}

TEST_CASE("json round trip") {
    Dfao fib = builtin("fib");
    std::string j = dfao_to_json(fib);
    Dfao back = dfao_from_json(j);
    CHECK(back.num_states == fib.num_states);
    CHECK(back.delta == fib.delta);
    CHECK(back.coding == fib.coding);
    CHECK(back.numeration == Numeration::zeckendorf);
    for (std::uint64_t n = 0; n < 500; ++n) CHECK(back.term(n) == fib.term(n));
}

TEST_CASE("json parsing failures") {
    CHECK_THROWS_AS(dfao_from_json("{"), fibmap::ParseError);
    CHECK_THROWS_AS(dfao_from_json(R"({"states":[0],"sigma":[0,1],"delta":[],"q0":0,
        "coding":{"0":"0"},"numeration":"roman"})"),
                    fibmap::ParseError);
    CHECK_THROWS_AS(dfao_from_json(R"({"states":[0,0],"sigma":[0],"delta":[],"q0":0,
        "coding":{"0":"0"}})"),
                    fibmap::ParseError);
}

TEST_CASE("dfa skeleton accepts through the accepting set") {
    // parity-of-ones acceptor over binary input
    Dfa m;
    m.num_states = 2;
    m.num_digits = 2;
    m.delta = {0, 1, 1, 0};
    m.initial = 0;
    m.accepting = {false, true};
    CHECK(m.accepts(std::vector<std::uint8_t>{1}));
    CHECK(!m.accepts(std::vector<std::uint8_t>{1, 1}));
    CHECK(m.accepts(std::vector<std::uint8_t>{1, 0, 0}));
    CHECK(!m.accepts(std::vector<std::uint8_t>{}));
}
