#include <doctest.h>

#include <random>

#include "bmgame/rational.hpp"

using bmgame::Rat;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(-6, 4) == Rat(-3, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(42).is_integer());
    CHECK_FALSE(Rat(1, 2).is_integer());
    CHECK_THROWS_AS(Rat(1, 0), bmgame::internal_error);
}

TEST_CASE("rational text form") {
    CHECK(Rat(3, 2).to_string() == "3/2");
    CHECK(Rat(-3, 2).to_string() == "-3/2");
    CHECK(Rat(5).to_string() == "5");
    CHECK(Rat(0).to_string() == "0");
    CHECK(Rat::from_half_units(3).to_string() == "3/2");
    CHECK(Rat::from_half_units(4).to_string() == "2");
}

TEST_CASE("rational parsing") {
    CHECK(Rat::parse("2/3") == Rat(2, 3));
    CHECK(Rat::parse("-3/9") == Rat(-1, 3));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("0") == Rat(0));
    CHECK_THROWS_AS(Rat::parse("1/0"), bmgame::parse_error);
    CHECK_THROWS_AS(Rat::parse("abc"), bmgame::parse_error);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), bmgame::parse_error);
    CHECK_THROWS_AS(Rat::parse(""), bmgame::parse_error);
}

TEST_CASE("rational arithmetic identities on random values") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        auto draw = [&] {
            long long num = static_cast<long long>(rng() % 41) - 20;
            long long den = 1 + static_cast<long long>(rng() % 12);
            return Rat(num, den);
        };
        Rat a = draw(), b = draw(), c = draw();
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(Rat::parse(a.to_string()) == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // trichotomy
        int rel = (a < b) + (a == b) + (b < a);
        CHECK(rel == 1);
    }
}
