#include <doctest.h>

#include <algorithm>
#include <set>

#include "hecke/catalog.hpp"

using namespace hecke;

TEST_CASE("basis sizes") {
    CHECK(Catalog::get(2).size() == 3);
    CHECK(Catalog::get(3).size() == 24);
    CHECK(Catalog::get(4).size() == 648);
    CHECK(Catalog::get(5).size() == 155520);
    CHECK_THROWS_AS(Catalog::get(1), LevelOutOfRange);
    CHECK_THROWS_AS(Catalog::get(6), LevelOutOfRange);
}

TEST_CASE("level 2 and 3 bases") {
    const Catalog& c2 = Catalog::get(2);
    CHECK(c2.word(0).empty());
    CHECK(c2.word(1) == Letters{1});
    CHECK(c2.word(2) == Letters{-1});
    const auto& t3 = gens_T3();
    CHECK(t3.size() == 8);
    CHECK(std::count(t3.begin(), t3.end(), Letters{-2, 1, -2}) == 1);
    CHECK(Catalog::get(3).index({-2, 1, -2}).has_value());
}

TEST_CASE("generating sets") {
    const auto& A = gens_A();
    CHECK(A.size() == 27);
    CHECK(A.front().empty());
    CHECK(std::count(A.begin(), A.end(), Letters{3, -2, 1, -2, 3}) == 1);
    CHECK(std::count(A.begin(), A.end(), Letters{-3, 2, -1, 2, -3}) == 1);

    const auto& Ap = gens_Aprime();
    CHECK(Ap.size() == 27);
    CHECK(Ap.front().empty());
    CHECK(std::count(Ap.begin(), Ap.end(), Letters{1}) == 1);
    for (std::size_t i = 0; i < A.size(); ++i) CHECK(ad_delta(Word(4, A[i])).letters() == Ap[i]);

    CHECK(gens_B().size() == 72);
    CHECK(gens_B_stages() == std::vector<std::size_t>{19, 50, 3});

    const auto& T5 = gens_T5();
    CHECK(T5.size() == 240);
    CHECK(gens_T5_strata() == std::vector<std::size_t>{1, 54, 72, 54, 56, 3});
    Letters g5{4, -3, 2, -1, 2, -3, 4, -3, 2, -1, 2, -3, 4};
    CHECK(g5.size() == 13);
    CHECK(std::count(T5.end() - 3, T5.end(), g5) == 1);
}

TEST_CASE("catalog words are reduced, distinct and indexed") {
    for (int n = 2; n <= 5; ++n) {
        const Catalog& cat = Catalog::get(n);
        std::set<Letters> seen;
        std::size_t step = n == 5 ? 37 : 1;
        for (std::size_t i = 0; i < cat.size(); i += step) {
            Letters w = cat.word(i);
            CHECK(free_reduce(w) == w);
            CHECK(cat.index(w) == i);
            seen.insert(w);
        }
        if (n < 5) CHECK(seen.size() == cat.size());
    }
}

TEST_CASE("tower order") {
    const Catalog& c4 = Catalog::get(4);
    const Catalog& c3 = Catalog::get(3);
    auto [u, t] = c4.split(27 * 5 + 3);
    CHECK(u == 5);
    CHECK(t == 3);
    Letters w = c3.word(5);
    w.insert(w.end(), gens_A()[3].begin(), gens_A()[3].end());
    CHECK(c4.word(27 * 5 + 3) == w);
}
