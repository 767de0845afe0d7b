#include "hecke/catalog.hpp"

#include <array>
#include <cstdlib>
#include <memory>
#include <mutex>

namespace hecke {

namespace {

const std::array<int, 2> kSigns{1, -1};
const std::array<int, 3> kExps{0, 1, -1};

Letters cat(std::initializer_list<Letters> parts) {
    Letters out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Letters power(int i, int e) { return e == 0 ? Letters{} : Letters{e * i}; }

std::vector<Letters> build_A() {
    std::vector<Letters> v{{}, {-3, 2, -1, 2, -3}, {3, -2, 1, -2, 3}, {3}, {-3}};
    for (int x : kSigns)
        for (int y : kSigns) v.push_back({3 * x, 2 * y});
    for (int x : kSigns)
        for (int y : kSigns)
            for (int z : kSigns) v.push_back({3 * x, 2 * y, z});
    for (int x : kSigns) v.push_back({3 * x, -2, 1, -2});
    v.push_back({3, -2, 3});
    for (int x : kSigns) v.push_back({3, -2, 3, x});
    v.push_back({3, -2, 3, 1, -2, 1});
    for (int x : kSigns)
        for (int y : kSigns) v.push_back({3, -2, 3, x, 2 * y});
    if (v.size() != 27) throw CountMismatch("gens_A");
    return v;
}

std::vector<Letters> build_B() {
    std::vector<Letters> v{{}};
    for (int head : {2, -2})
        for (int x : kExps)
            for (int y : kExps) v.push_back(cat({{head}, power(1, x), power(3, y)}));
    if (v.size() != 19) throw CountMismatch("gens_B stage 1");
    v.push_back({2, 1, 3, 2});
    v.push_back({-2, -1, -3, -2});
    for (int x : kExps) v.push_back(cat({{2, -1, 2}, power(3, x)}));
    for (int x : kExps) v.push_back(cat({{2, -3, 2}, power(1, x)}));
    for (int x : kExps) v.push_back(cat({{2, 1, -3, -2}, power(1, x)}));
    for (int x : kExps) v.push_back(cat({{2, -1, 3, -2}, power(3, x)}));
    for (const Letters& r : {Letters{2, -1, 3, 2}, Letters{2, -1, -3, 2}, Letters{2, -1, -3, -2}, Letters{-2, 1, 3, -2}})
        for (int x : kExps)
            for (int y : kExps) v.push_back(cat({r, power(1, x), power(3, y)}));
    if (v.size() != 69) throw CountMismatch("gens_B stage 2");
    v.push_back(special("x_plus", 4).letters());
    v.push_back(special("x_minus", 4).letters());
    v.push_back(special("y_minus_word", 4).letters());
    if (v.size() != 72) throw CountMismatch("gens_B");
    return v;
}

std::vector<Letters> build_T5() {
    const auto& A = gens_A();
    const auto& Ap = gens_Aprime();
    const auto& B = gens_B();
    const Letters w0 = special("w0", 4).letters();
    const Letters w0i = inverse(w0);
    const Letters wp = special("w_plus", 4).letters();
    const Letters wm = special("w_minus", 4).letters();
    std::vector<Letters> v{{}};
    for (int s : kSigns)
        for (const auto& x : A) v.push_back(cat({{4 * s}, x}));
    for (const auto& x : B) v.push_back(cat({{4, -3, 4}, x}));
    for (const auto& x : Ap) v.push_back(cat({{4, 3, 2, 2, 3, 4}, x}));
    for (const auto& x : Ap) v.push_back(cat({{-4, -3, -2, -2, -3, -4}, x}));
    v.push_back(cat({{4}, w0, {4}}));
    v.push_back(cat({{-4}, w0i, {-4}}));
    for (const auto& x : A) v.push_back(cat({{4}, w0i, {4}, x}));
    for (const auto& x : A) v.push_back(cat({{-4}, w0, {-4}, x}));
    v.push_back(cat({{4}, wm, {4}, wm, {4}}));
    v.push_back(cat({{4}, wp, {-4}, wp, {4}}));
    v.push_back(cat({{-4}, wm, {4}, wm, {-4}}));
    if (v.size() != 240) throw CountMismatch("gens_T5");
    return v;
}

}  // namespace

const std::vector<Letters>& gens_T2() {
    static const std::vector<Letters> v{{}, {1}, {-1}};
    return v;
}

const std::vector<Letters>& gens_T3() {
    static const std::vector<Letters> v{{}, {2}, {2, 1}, {2, -1}, {-2}, {-2, 1}, {-2, -1}, {-2, 1, -2}};
    return v;
}

const std::vector<Letters>& gens_A() {
    static const std::vector<Letters> v = build_A();
    return v;
}

const std::vector<Letters>& gens_Aprime() {
    static const std::vector<Letters> v = [] {
        std::vector<Letters> out;
        for (const auto& w : gens_A()) out.push_back(ad_delta(Word(4, w)).letters());
        return out;
    }();
    return v;
}

const std::vector<Letters>& gens_B() {
    static const std::vector<Letters> v = build_B();
    return v;
}

const std::vector<Letters>& gens_T5() {
    static const std::vector<Letters> v = build_T5();
    return v;
}

const std::vector<std::size_t>& gens_B_stages() {
    static const std::vector<std::size_t> v{19, 50, 3};
    return v;
}

const std::vector<std::size_t>& gens_T5_strata() {
    static const std::vector<std::size_t> v{1, 54, 72, 54, 56, 3};
    return v;
}

const std::vector<Letters>& tower_gens(int n) {
    switch (n) {
        case 2: return gens_T2();
        case 3: return gens_T3();
        case 4: return gens_A();
        case 5: return gens_T5();
        default: throw LevelOutOfRange(n);
    }
}

Catalog::Catalog(int n) : n_(n), tower_(&tower_gens(n)) {
    for (std::size_t i = 0; i < tower_->size(); ++i) tower_index_.emplace((*tower_)[i], i);
    if (tower_index_.size() != tower_->size()) throw CountMismatch("duplicate tower generator");
    if (n > 2) outer_ = &get(n - 1);
    size_ = (outer_ ? outer_->size() : 1) * tower_->size();
}

const Catalog& Catalog::get(int n) {
    if (n < 2 || n > 5) throw LevelOutOfRange(n);
    static std::array<std::unique_ptr<Catalog>, 6> cache;
    static std::recursive_mutex mu;
    std::lock_guard lock(mu);
    if (!cache[n]) cache[n].reset(new Catalog(n));
    return *cache[n];
}

Letters Catalog::word(std::size_t i) const {
    auto [u, t] = split(i);
    Letters w = outer_ ? outer_->word(u) : Letters{};
    const auto& tw = (*tower_)[t];
    w.insert(w.end(), tw.begin(), tw.end());
    return w;
}

std::optional<std::size_t> Catalog::index(const Letters& w) const {
    // Tower generators at level n are the only part using s_{n-1}.
    std::size_t cut = 0;
    while (cut < w.size() && std::abs(w[cut]) != n_ - 1) ++cut;
    auto it = tower_index_.find(Letters(w.begin() + cut, w.end()));
    if (it == tower_index_.end()) return std::nullopt;
    std::size_t u = 0;
    if (outer_) {
        auto ui = outer_->index(Letters(w.begin(), w.begin() + cut));
        if (!ui) return std::nullopt;
        u = *ui;
    } else if (cut != 0) {
        return std::nullopt;
    }
    return u * tower_->size() + it->second;
}

}  // namespace hecke
