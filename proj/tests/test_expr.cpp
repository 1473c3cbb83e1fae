#include "random_support.hpp"
#include "virasoro/expr.hpp"

#include <doctest.h>

using namespace virasoro;
using virasoro::testing::random_homogeneous;
using virasoro::testing::random_rat;
using virasoro::testing::uniform_int;

namespace {

EnvElem mono(std::initializer_list<int> parts, const Rat& c = Rat(1)) { return EnvElem(Partition(parts), c); }

std::string token_of(std::string_view text) {
    try {
        parse_env_elem(text);
    } catch (const ParseError& e) {
        return e.token();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("parse_env_elem basics") {
    CHECK(parse_env_elem("d(-1)") == mono({1}));
    CHECK(parse_env_elem("3*d(-2)^2 + 5*d(-4)") == mono({2, 2}, Rat(3)) + mono({4}, Rat(5)));
    CHECK(parse_env_elem("-1/2*d(-3)*d(-1)") == mono({3, 1}, Rat::parse("-1/2")));
    CHECK(parse_env_elem("7") == EnvElem(Rat(7)));
    CHECK(parse_env_elem("  d( -2 ) ^ 0 ") == EnvElem::unit());
    // Out-of-order factors are normal ordered: d(-1) d(-2) = d(-2) d(-1) - d(-3).
    CHECK(parse_env_elem("d(-1)*d(-2)") == mono({2, 1}) - mono({3}));
    CHECK(parse_env_elem("d(-1) - d(-1)").is_zero());
}

TEST_CASE("parse errors name the offending token") {
    CHECK(token_of("d(-1) +") == "<end>");
    CHECK(token_of("d(1)") == "1)");
    CHECK(token_of("x") == "x");
    CHECK(token_of("2/0*d(-1)") == "0*d(-1)");
    CHECK(token_of("d(-1) d(-2)") == "d(-2)");
    CHECK(token_of("d(-0)") == "0)");
    CHECK(token_of("") == "<end>");
    CHECK_THROWS_AS(parse_env_elem("d(-1)^"), ParseError);
    try {
        parse_env_elem("d(-1) + q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
        CHECK(std::string(e.what()).find("'q'") != std::string::npos);
    }
}

TEST_CASE("printing and re-parsing round-trips") {
    for (int i = 0; i < 300; ++i) {
        EnvElem x;
        for (int t = uniform_int(1, 3); t > 0; --t) x += random_homogeneous(uniform_int(0, 6));
        if (uniform_int(0, 3) == 0) x += EnvElem(random_rat());
        CHECK(parse_env_elem(x.str()) == x);
    }
    CHECK(parse_env_elem(EnvElem().str()).is_zero());
}

TEST_CASE("parse_state") {
    const auto s = parse_state("# a state\n3*d(-2)*d(-1) @v(4)\n - 2 @ v( -1 )  # trailing\n + d(-1)@v(0)");
    REQUIRE(s.size() == 3);
    CHECK(s[0].elem == mono({2, 1}, Rat(3)));
    CHECK(s[0].j == 4);
    CHECK(s[1].elem == EnvElem(Rat(-2)));
    CHECK(s[1].j == -1);
    CHECK(s[2].elem == mono({1}));
    CHECK(s[2].j == 0);
    CHECK_THROWS_AS(parse_state("d(-1)"), ParseError);
    CHECK_THROWS_AS(parse_state(""), ParseError);
    CHECK_THROWS_AS(parse_state("d(-1) @v(2) d(-2) @v(1)"), ParseError);
}
