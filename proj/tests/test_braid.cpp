#include <doctest.h>

#include <random>

#include "hecke/braid.hpp"

using namespace hecke;

TEST_CASE("free_reduce") {
    CHECK(free_reduce(Letters{1, -1}).empty());
    CHECK(free_reduce(Letters{1, 2, -2, 1}) == Letters{1, 1});
    CHECK(free_reduce(Letters{}).empty());
    CHECK(free_reduce(Letters{2, 1, -1, -2, 3}) == Letters{3});
}

TEST_CASE("concat and inverse") {
    CHECK(concat(Word(2, {1}), Word(2, {-1})).empty());
    CHECK(inverse(Word(3, {1, -2})).letters() == Letters{2, -1});
    CHECK(inverse(Word(3, {})).empty());
    CHECK_THROWS_AS(concat(Word(3, {1}), Word(4, {1})), StrandMismatch);
    CHECK_THROWS_AS(Word(3, {3}), IndexOutOfRange);
}

TEST_CASE("concat with inverse is empty") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> len(0, 20), idx(1, 4), sign(0, 1);
    for (int k = 0; k < 200; ++k) {
        Letters w(static_cast<std::size_t>(len(rng)));
        for (int& l : w) l = idx(rng) * (sign(rng) ? 1 : -1);
        Word x(5, w);
        CHECK(concat(x, inverse(x)).empty());
    }
}

TEST_CASE("shift, mirror, ad_delta") {
    Word s = shift(Word(3, {1, -2}));
    CHECK(s.n() == 4);
    CHECK(s.letters() == Letters{2, -3});
    CHECK(shift(Word(2, {})).empty());
    CHECK(shift(shift(Word(2, {1}))).letters() == Letters{3});
    CHECK(mirror(Word(4, {1})).letters() == Letters{3});
    CHECK(mirror(Word(4, {2})).letters() == Letters{2});
    CHECK(mirror(Word(4, {1, -3})).letters() == Letters{3, -1});
    CHECK(ad_delta(Word(4, {1, -2, 1})).letters() == Letters{3, -2, 3});
    CHECK(ad_delta(Word(4, {2})).letters() == Letters{2});
    CHECK(ad_delta(Word(4, {3, -2, 1, -2, 3})).letters() == Letters{1, -2, 3, -2, 1});
    CHECK_THROWS_AS(ad_delta(Word(5, {4})), IndexOutOfRange);
}

TEST_CASE("special elements") {
    CHECK(special("w0", 4).letters() == Letters{3, 2, 1, 1, 2, 3});
    CHECK(special("delta_garside", 4).letters() == Letters{1, 2, 3, 1, 2, 1});
    CHECK(special("c_n", 3).letters() == Letters{1, 2, 1, 2, 1, 2});
    CHECK(special("delta5", 5).letters() == Letters{4, 3, 2, 1, 1, 2, 3, 4});
    CHECK(special("w_plus", 4).letters() == Letters{3, -2, 1, -2, 3});
    CHECK(special("w_minus", 4).letters() == Letters{-3, 2, -1, 2, -3});
    // s = s_2, p = s_1 s_3
    CHECK(special("x_plus", 4).letters() == Letters{2, 1, 3, -2, 1, 3, 2});
    CHECK(special("x_minus", 4).letters() == Letters{-2, -1, -3, 2, -1, -3, -2});
    CHECK(special("y_plus_word", 4).letters() == Letters{2, -1, -3, 2, -1, -3, 2});
    CHECK(special("y_minus_word", 4).letters() == Letters{-2, 1, 3, -2, 1, 3, -2});
    CHECK(special("c_n", 5).size() == 20);
    CHECK_THROWS_AS(special("nope", 4), UnknownName);
    CHECK_THROWS_AS(special("w0", 3), IndexOutOfRange);
}

TEST_CASE("text syntax") {
    CHECK(parse_letters("3 -2 1 -2 3") == Letters{3, -2, 1, -2, 3});
    CHECK(parse_letters("  ").empty());
    CHECK(format_letters({3, -2, 1}) == "3 -2 1");
    CHECK_THROWS_AS(parse_letters("1 x"), ParseError);
    CHECK_THROWS_AS(parse_letters("0"), ParseError);
    CHECK_THROWS_AS(parse_word("4", 4), ParseError);
}

TEST_CASE("term order") {
    CHECK(term_compare({1}, {-1}) < 0);
    CHECK(term_compare({-1}, {2}) < 0);
    CHECK(term_compare({3}, {1, 1}) < 0);
    CHECK(term_compare({1, 2}, {1, 2}) == 0);
}
