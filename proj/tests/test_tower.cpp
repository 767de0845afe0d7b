#include <doctest.h>

#include <filesystem>
#include <random>

#include "hecke/verify.hpp"

using namespace hecke;

namespace {

Tower& tower() {
    static Tower t;
    return t;
}

ExactVec V(int n, std::initializer_list<std::pair<const char*, Letters>> t) {
    ExactVec acc;
    const Catalog& cat = Catalog::get(n);
    for (const auto& [k, w] : t) acc = axpy(ExactCoeffs{}, acc, ExactVec{{static_cast<std::uint32_t>(*cat.index(w)), 1}}, parse_laurent(k));
    return acc;
}

ExactVec random_element(int n, std::mt19937_64& rng) {
    const Catalog& cat = Catalog::get(n);
    std::uniform_int_distribution<std::size_t> idx(0, cat.size() - 1);
    std::uniform_int_distribution<int> k(-3, 3), e(0, 2), ec(-2, 2);
    ExactVec acc;
    for (int i = 0; i < 3; ++i) {
        Laurent q = Laurent::monomial(k(rng), e(rng), e(rng), ec(rng));
        acc = axpy(ExactCoeffs{}, acc, ExactVec{{static_cast<std::uint32_t>(idx(rng)), 1}}, q);
    }
    return acc;
}

}  // namespace

TEST_CASE("action table columns") {
    auto l2 = tower().exact(2);
    CHECK(l2->table(1).cols[1] == V(2, {{"a", {1}}, {"b", {}}, {"c", {-1}}}));
    CHECK(l2->table(-1).cols[1] == V(2, {{"1", {}}}));
    CHECK(l2->table(1).cols[0] == V(2, {{"1", {1}}}));
}

TEST_CASE("level 3 tables agree with the vector enumeration oracle") {
    EnumStats st;
    auto oracle = oracle_A3(&st);
    auto l3 = tower().exact(3);
    CHECK(st.alive == 24);
    for (int g : {1, -1, 2, -2})
        for (std::size_t j = 0; j < 24; ++j) CHECK(l3->table(g).cols[j] == oracle->table(g).cols[j]);
}

TEST_CASE("multiply") {
    for (int n = 2; n <= 4; ++n) {
        auto lev = tower().exact(n);
        std::mt19937_64 rng(n);
        ExactVec x = random_element(n, rng);
        CHECK(lev->multiply(lev->one(), x) == x);
        CHECK(lev->multiply(x, lev->one()) == x);
        CHECK(lev->multiply(lev->reduce({1}), lev->reduce({-1})) == lev->one());
    }
    auto l4 = tower().exact(4);
    auto w0 = l4->reduce(special("w0", 4).letters());
    for (int g : {1, 2}) CHECK(l4->multiply(w0, l4->reduce({g})) == l4->multiply(l4->reduce({g}), w0));
    CHECK(l4->multiply(w0, l4->reduce({3})) != l4->multiply(l4->reduce({3}), w0));
}

TEST_CASE("phi and psi") {
    for (int n = 2; n <= 3; ++n) {
        auto lev = tower().exact(n);
        CHECK(tower().phi(n, lev->reduce({1})) == lev->reduce({-1}));
        std::mt19937_64 rng(40 + n);
        for (int k = 0; k < 20; ++k) {
            ExactVec x = random_element(n, rng), y = random_element(n, rng);
            CHECK(tower().phi(n, tower().phi(n, x)) == x);
            CHECK(tower().psi(n, tower().psi(n, x)) == x);
            CHECK(tower().phi(n, lev->multiply(x, y)) == lev->multiply(tower().phi(n, x), tower().phi(n, y)));
            CHECK(tower().psi(n, lev->multiply(x, y)) == lev->multiply(tower().psi(n, y), tower().psi(n, x)));
        }
    }
    auto l4 = tower().exact(4);
    Letters d = special("delta_garside", 4).letters();
    CHECK(tower().phi(4, l4->reduce(d)) == l4->reduce(inverse(d)));
}

TEST_CASE("include") {
    CHECK(include_index(2, 0) == 0);
    CHECK(include_index(3, 5) == 5 * 27);
    CHECK(include(3, ExactVec{{0, 1}}) == ExactVec{{0, 1}});
    for (int n = 2; n <= 3; ++n) {
        const Catalog& lo = Catalog::get(n);
        const Catalog& hi = Catalog::get(n + 1);
        for (std::size_t i = 0; i < lo.size(); ++i) CHECK(hi.word(include_index(n, i)) == lo.word(i));
    }
}

TEST_CASE("specialized tables") {
    ModPoint pt(65521, 0, 0, 1);
    for (int n = 2; n <= 4; ++n) {
        auto lev = tower().at_point(n, pt);
        for (std::size_t j = 0; j < lev->dim(); j += n == 4 ? 7 : 1) {
            auto e = lev->unit(j);
            for (int i = 1; i < n; ++i) {
                CHECK(lev->apply(e, {i, i, i}) == e);
                CHECK(lev->apply(e, {i, -i}) == e);
            }
        }
    }
    ExactMatrix m;
    m.dim = 3;
    m.cols = {ExactVec{{0, 1}}, ExactVec{{1, Laurent::c()}, {2, Laurent::a()}}, ExactVec{}};
    auto s = specialize_table<Laurent>(m, ModCoeffs(ModPoint(7, 0, 2, 3)));
    CHECK(s.cols[0] == ModVec{{0, 1}});
    CHECK(s.cols[1] == ModVec{{1, 3}});
}

TEST_CASE("module form agrees with materialized tables at level 4") {
    ModPoint pt(65521, 17, 4242, 999);
    auto lower = tower().at_point(3, pt);
    ModCoeffs f(pt);
    KAlgebra<ModCoeffs> K(f, lower.get());
    Enumerator<ModCoeffs> e(4, f, K, gens_A(), pt.a, pt.b, pt.c);
    auto st = e.run();
    CHECK(st.alive == 27);
    ModuleLevel<ModCoeffs> mod(4, lower, collect_images(e, gens_A().size(), 4));
    auto tabled = tower().at_point(4, pt);
    auto tables = materialize(K, mod.images(), 4);
    for (int g : {1, -1, 2, -2, 3, -3})
        for (std::size_t j = 0; j < 648; j += 5) {
            CHECK(mod.act(mod.unit(j), g) == tabled->act(tabled->unit(j), g));
            CHECK(tables[gen_slot(g)].cols[j] == tabled->act(tabled->unit(j), g));
        }
    auto v = mod.from_blocks(mod.to_blocks(ModVec{{3, 5}, {28, 7}, {600, 1}}));
    CHECK(v == ModVec{{3, 5}, {28, 7}, {600, 1}});
}

TEST_CASE("resume file round trip") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "hecke_resume_test.cbor";
    fs::remove(p);
    ModPoint pt(65521, 0, 0, 1);
    ModVec x;
    {
        Tower t;
        t.set_resume_file(p.string());
        x = t.level5(pt)->reduce({4, 3, 2, 1, -4});
    }
    REQUIRE(fs::exists(p));
    Tower t;
    t.set_resume_file(p.string());
    auto lev = t.level5(pt);
    CHECK(lev->reduce({4, 3, 2, 1, -4}) == x);
    CHECK(t.enum_stats().empty());
    fs::remove(p);
}
