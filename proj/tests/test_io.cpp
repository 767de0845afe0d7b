#include <doctest.h>

#include "hecke/algebra.hpp"
#include "hecke/io.hpp"

using namespace hecke;

TEST_CASE("coefficient json") {
    Laurent x = parse_laurent("3*a^2*b*c^-1 - 123456789012345678901234567890*c^4 + 1");
    json j = laurent_to_json(x);
    CHECK(j["terms"][0]["k"].is_string());
    CHECK(laurent_from_json(j) == x);
    CHECK(laurent_from_json(json::parse(R"({"terms":[{"ea":1,"eb":0,"ec":0,"k":2}]})")) == Laurent(2) * Laurent::a());
    CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"terms":[{"ea":1}]})")), FormatError);
    CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"terms":[{"ea":0,"eb":0,"ec":0,"k":"x1"}]})")), FormatError);
}

TEST_CASE("element json") {
    ExactVec v{{1, Laurent::a()}, {2, Laurent::c_pow(-1)}};
    json j = element_to_json(2, v);
    CHECK(j["n"] == 2);
    CHECK(j["terms"][0]["word"] == json::array({1}));
    int n = 0;
    CHECK(element_from_json(j, &n) == v);
    CHECK(n == 2);
    json bad = json::parse(R"({"n":3,"terms":[{"word":[2,2],"coeff":{"terms":[]}}]})");
    CHECK_THROWS_AS(element_from_json(bad), FormatError);

    json m = element_to_json(3, ModVec{{0, 4}}, ModPoint(7, 1, 2, 3));
    CHECK(m["point"]["p"] == 7);
    CHECK(m["terms"][0]["value"] == "4");
}

TEST_CASE("files carry a header") {
    json b = basis_to_json(3);
    CHECK(b["header"]["engine"] == kEngineVersion);
    CHECK(b["header"]["generators"]["A"] == 27);
    CHECK(b["basis"].size() == 24);
    CHECK(file_header()["generators"]["T5"] == json::array({1, 54, 72, 54, 56, 3}));

    ExactMatrix m;
    m.dim = 3;
    m.cols = {ExactVec{{1, 1}}, ExactVec{{0, Laurent::b()}, {1, Laurent::a()}, {2, Laurent::c()}}, ExactVec{{0, 1}}};
    json t = table_to_json(2, 1, m);
    CHECK(t["gen"] == 1);
    CHECK(t["cols"].size() == 3);
    CHECK(laurent_from_json(t["cols"][1][2]["coeff"]) == Laurent::c());
    CHECK(word_to_json(4, {3, -2, 1, -2, 3}).dump() == R"({"n":4,"word":[3,-2,1,-2,3]})");
}
