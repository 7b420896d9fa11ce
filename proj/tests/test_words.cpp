#include <doctest.h>

#include "core/errors.hpp"
#include "core/words.hpp"

using namespace fibmap::words;

TEST_CASE("substitute concatenates rule images") {
    auto fib = fibonacci_substitution();
    CHECK(substitute(fib, "0") == "01");
    CHECK(substitute(fib, "01") == "010");
    CHECK(substitute(fib, "") == "");
    CHECK_THROWS_AS(substitute(fib, "2"), fibmap::UnknownLetter);
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(fibonacci_substitution()));
    CHECK(is_primitive(thue_morse_substitution()));
    CHECK(is_primitive(rudin_shapiro_substitution(), 16));
    Substitution identity{"01", {{'0', "0"}, {'1', "1"}}};
    CHECK(!is_primitive(identity));
    Substitution periodic{"01", {{'0', "1"}, {'1', "0"}}};
    CHECK(!is_primitive(periodic, 8));
}

TEST_CASE("fixed point prefixes") {
    CHECK(fixed_point_prefix(fibonacci_substitution(), '0', 15) == "010010100100101");
    CHECK(fixed_point_prefix(thue_morse_substitution(), '0', 16) == "0110100110010110");
    auto coding = rudin_shapiro_coding();
    CHECK(fixed_point_prefix(rudin_shapiro_substitution(), 'a', 16, &coding) ==
          "0001001000011101");
    CHECK(fixed_point_prefix(fibonacci_substitution(), '0', 0).empty());
    CHECK_THROWS_AS(fixed_point_prefix(fibonacci_substitution(), '1', 5),
                    fibmap::NotExtendable);
}

TEST_CASE("streams give stable indexed access") {
    auto fib = make_stream("fib");
    CHECK(fib->term(4) == '1');
    CHECK(fib->term(20) == '0');
    CHECK(fib->term(0) == '0');
    CHECK(fib->term(4) == '1');  // stable after buffer growth
    auto tm = make_stream("tm");
    CHECK(tm->term(6) == '0');
    auto rs = make_stream("rs");
    CHECK(rs->prefix(16) == "0001001000011101");
}

TEST_CASE("stream max prefix is enforced") {
    auto fib = make_stream("fib");
    fib->set_max_prefix(1000);
    CHECK_NOTHROW(fib->term(999));
    CHECK_THROWS_AS(fib->term(1000), fibmap::ResourceLimit);
    CHECK_THROWS_AS(fib->prefix(1001), fibmap::ResourceLimit);
}

TEST_CASE("fixed point property holds on prefixes") {
    for (auto name : {"fib", "tm"}) {
        auto s = make_stream(name);
        auto sub = std::string(name) == "fib" ? fibonacci_substitution()
                                              : thue_morse_substitution();
        std::string p(s->prefix(2000));
        std::string image = substitute(sub, p);
        CHECK(image.substr(0, p.size()) == p);
    }
}

TEST_CASE("ones are isolated in the Fibonacci word") {
    auto fib = make_stream("fib");
    auto p = fib->prefix(1'000'000);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == '1') CHECK(p[i + 1] == '0');
}

TEST_CASE("substitution streams load from json") {
    const char* doc = R"({
        "alphabet": ["0", "1"],
        "rules": {"0": "01", "1": "0"},
        "seed": "0"
    })";
    auto s = make_stream_json(doc);
    CHECK(s->prefix(15) == "010010100100101");

    const char* rs_doc = R"({
        "alphabet": ["a", "b", "c", "d"],
        "rules": {"a": "ab", "b": "ac", "c": "db", "d": "dc"},
        "coding": {"a": "0", "b": "0", "c": "1", "d": "1"},
        "seed": "a"
    })";
    auto rs = make_stream_json(rs_doc);
    CHECK(rs->prefix(16) == "0001001000011101");

    CHECK_THROWS_AS(make_stream_json("{"), fibmap::ParseError);
    CHECK_THROWS_AS(make_stream_json(R"({"alphabet":["0"],"rules":{"0":"1"},"seed":"0"})"),
                    fibmap::UnknownLetter);
    CHECK_THROWS_AS(make_stream("weierstrass"), fibmap::UnknownName);
}
