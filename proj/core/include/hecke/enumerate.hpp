#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hecke/level.hpp"

namespace hecke {

struct ClosureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient algebra K for the enumeration: either the scalars themselves
// (lev == nullptr) or A_{n-1} given by its right action.
template <class F>
class KAlgebra {
public:
    using T = typename F::T;
    using Vec = SVec<T>;

    KAlgebra(const F& f, const Level<F>* lev) : f_(f), lev_(lev) {}

    std::size_t dim() const { return lev_ ? lev_->dim() : 1; }
    int n() const { return lev_ ? lev_->n() : 1; }
    Vec one() const { return Vec{{0, f_.one()}}; }
    Vec gen(int h) const { return lev_->reduce({h}); }
    Vec scale(const Vec& y, const T& s) const { return hecke::scale(f_, y, s); }

    Vec mul(const Vec& y, const Vec& z) const {
        if (!lev_) {
            if (y.empty() || z.empty()) return {};
            T v = f_.mul(y[0].second, z[0].second);
            return f_.is_zero(v) ? Vec{} : Vec{{0, v}};
        }
        if (z.size() == 1 && z[0].first == 0) return scale(y, z[0].second);
        if (y.size() == 1 && y[0].first == 0) return scale(z, y[0].second);
        return lev_->multiply(y, z);
    }

    // Two-sided inverse, if one is found: units of F times catalog words
    // always; general elements only over a field.
    std::optional<Vec> inverse(const Vec& y) const {
        if (y.size() == 1) {
            auto r = f_.inverse(y[0].second);
            if (!r) return std::nullopt;
            if (!lev_) return Vec{{0, *r}};
            return scale(lev_->reduce(hecke::inverse(lev_->catalog().word(y[0].first))), *r);
        }
        if constexpr (!F::exact) {
            if (lev_) return solve_inverse(y);
        }
        return std::nullopt;
    }

private:
    // Solve y x = 1 by Gaussian elimination on the left multiplication matrix.
    std::optional<Vec> solve_inverse(const Vec& y) const {
        std::size_t d = dim();
        std::vector<std::vector<T>> m(d, std::vector<T>(d + 1, f_.zero()));
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [i, v] : lev_->apply(y, lev_->catalog().word(j))) m[i][j] = v;
        m[0][d] = f_.one();
        std::vector<std::size_t> pivcol;
        std::size_t r = 0;
        for (std::size_t c = 0; c < d; ++c) {
            std::size_t p = r;
            while (p < d && f_.is_zero(m[p][c])) ++p;
            if (p == d) return std::nullopt;
            std::swap(m[p], m[r]);
            T inv = *f_.inverse(m[r][c]);
            for (std::size_t k = c; k <= d; ++k) m[r][k] = f_.mul(m[r][k], inv);
            for (std::size_t i = 0; i < d; ++i) {
                if (i == r || f_.is_zero(m[i][c])) continue;
                T s = m[i][c];
                for (std::size_t k = c; k <= d; ++k)
                    if (!f_.is_zero(m[r][k])) m[i][k] = f_.sub(m[i][k], f_.mul(s, m[r][k]));
            }
            ++r;
        }
        Vec x;
        for (std::size_t i = 0; i < d; ++i)
            if (!f_.is_zero(m[i][d])) x.emplace_back(static_cast<std::uint32_t>(i), m[i][d]);
        return x;
    }

    const F& f_;
    const Level<F>* lev_;
};

struct EnumStats {
    std::size_t defined = 0;
    std::size_t alive = 0;
    std::size_t eliminations = 0;
    std::size_t deferred = 0;
    double seconds = 0;
};

// Relative vector enumeration: A_n as a left K-module, K = A_{n-1} (or the
// scalars), starting from the cyclic vector e_0 with e_0 h = h e_0 for the
// generators h of K. The words in `tgens` are defined first and protected
// from elimination; closure must leave exactly those alive.
template <class F>
class Enumerator {
public:
    using T = typename F::T;
    using KVec = SVec<T>;
    using MVec = std::vector<std::pair<std::uint32_t, KVec>>;
    using Relation = std::vector<std::pair<T, Letters>>;

    Enumerator(int n, const F& f, const KAlgebra<F>& K, const std::vector<Letters>& tgens, T a, T b, T c)
        : n_(n), f_(f), K_(K), tgens_(tgens) {
        new_coset();
        for (int i = 1; i <= n - 1; ++i) {
            gens_.push_back(i);
            gens_.push_back(-i);
        }
        if (K.n() > 1)
            for (int h = 1; h <= K.n() - 1; ++h)
                for (int s : {1, -1}) cosets_[0].img[gen_slot(s * h)] = MVec{{0, K.gen(s * h)}};
        T one = f.one(), mone = f.neg(f.one());
        for (int i = 1; i <= n - 1; ++i) {
            rels_.push_back({{one, {i, -i}}, {mone, {}}});
            rels_.push_back({{one, {-i, i}}, {mone, {}}});
            rels_.push_back({{one, {i, i, i}}, {f.neg(a), {i, i}}, {f.neg(b), {i}}, {f.neg(c), {}}});
        }
        for (int i = 1; i <= n - 2; ++i) rels_.push_back({{one, {i, i + 1, i}}, {mone, {i + 1, i, i + 1}}});
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j) rels_.push_back({{one, {i, j}}, {mone, {j, i}}});
        for (const auto& w : tgens_) {
            MVec v{{0, K.one()}};
            for (int g : w) v = push(v, g);
            if (v.size() != 1 || v[0].second != K.one())
                throw ClosureFailure("generator word [" + format_letters(w) + "] does not define a fresh vector");
            if (protected_.count(v[0].first)) throw ClosureFailure("generator words coincide");
            protected_.insert(v[0].first);
            tcos_.push_back(v[0].first);
        }
    }

    void set_progress(std::function<void(const EnumStats&)> cb, std::size_t every) {
        progress_ = std::move(cb);
        progress_every_ = every;
    }

    EnumStats run() {
        auto t0 = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < cosets_.size(); ++i) {
            if (cosets_[i].dead) continue;
            for (const auto& r : rels_) {
                if (cosets_[i].dead) break;
                process(scan(static_cast<std::uint32_t>(i), r));
            }
            if (!cosets_[i].dead)
                for (int g : gens_) image(static_cast<std::uint32_t>(i), g);
            if (progress_ && progress_every_ && (i + 1) % progress_every_ == 0) progress_(stats(t0));
        }
        // Relations without an invertible coefficient are retried once the
        // rest has settled; they must vanish for closure.
        for (bool moved = true; moved && !stuck_.empty();) {
            moved = false;
            auto pending = std::move(stuck_);
            stuck_.clear();
            for (auto& r : pending) {
                std::size_t before = stuck_.size();
                process(r);
                if (stuck_.size() == before) moved = true;
            }
        }
        EnumStats s = stats(t0);
        if (!stuck_.empty()) throw ClosureFailure(std::to_string(stuck_.size()) + " relations without invertible pivot");
        std::set<std::uint32_t> alive;
        for (std::size_t i = 0; i < cosets_.size(); ++i)
            if (!cosets_[i].dead) alive.insert(static_cast<std::uint32_t>(i));
        if (alive != protected_)
            throw ClosureFailure("closure left " + std::to_string(alive.size()) + " vectors, expected " +
                                 std::to_string(protected_.size()));
        return s;
    }

    // After run(): e_t g as a combination over generator indices.
    MVec image_of(std::size_t t, int g) {
        std::map<std::uint32_t, std::uint32_t> pos;
        for (std::size_t k = 0; k < tcos_.size(); ++k) pos[tcos_[k]] = static_cast<std::uint32_t>(k);
        MVec v = norm(cosets_[tcos_[t]].img[gen_slot(g)].value());
        MVec out;
        for (auto& [k, y] : v) out.emplace_back(pos.at(k), std::move(y));
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }

    const std::vector<int>& gens() const { return gens_; }

private:
    struct Coset {
        bool dead = false;
        std::vector<std::optional<MVec>> img;
        MVec repl;
    };

    EnumStats stats(std::chrono::steady_clock::time_point t0) const {
        EnumStats s;
        s.defined = cosets_.size();
        for (const auto& c : cosets_) s.alive += !c.dead;
        s.eliminations = eliminations_;
        s.deferred = stuck_.size();
        s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return s;
    }

    std::uint32_t new_coset() {
        cosets_.push_back({false, std::vector<std::optional<MVec>>(2 * (n_ - 1)), {}});
        return static_cast<std::uint32_t>(cosets_.size() - 1);
    }

    static void add_into(std::map<std::uint32_t, KVec>& acc, std::uint32_t k, const KVec& y, const F& f) {
        auto it = acc.find(k);
        if (it == acc.end())
            acc.emplace(k, y);
        else
            it->second = axpy(f, it->second, y, f.one());
    }

    static MVec from_map(std::map<std::uint32_t, KVec>& acc) {
        MVec out;
        for (auto& [k, y] : acc)
            if (!y.empty()) out.emplace_back(k, std::move(y));
        return out;
    }

    MVec norm(const MVec& v) {
        bool clean = true;
        for (const auto& [k, y] : v) clean &= !cosets_[k].dead;
        if (clean) return v;
        std::map<std::uint32_t, KVec> acc;
        std::vector<std::pair<std::uint32_t, KVec>> stack(v.begin(), v.end());
        while (!stack.empty()) {
            auto [k, y] = std::move(stack.back());
            stack.pop_back();
            if (y.empty()) continue;
            if (cosets_[k].dead) {
                for (const auto& [k2, y2] : cosets_[k].repl) stack.emplace_back(k2, K_.mul(y, y2));
            } else {
                add_into(acc, k, y, f_);
            }
        }
        return from_map(acc);
    }

    MVec image(std::uint32_t k, int g) {
        auto& slot = cosets_[k].img[gen_slot(g)];
        if (!slot) {
            std::uint32_t m = new_coset();
            cosets_[k].img[gen_slot(g)] = MVec{{m, K_.one()}};
            cosets_[m].img[gen_slot(-g)] = MVec{{k, K_.one()}};
            return MVec{{m, K_.one()}};
        }
        MVec v = norm(*slot);
        cosets_[k].img[gen_slot(g)] = v;
        return v;
    }

    MVec push(const MVec& v, int g) {
        std::map<std::uint32_t, KVec> acc;
        for (const auto& [k, y] : norm(v))
            for (const auto& [k2, z] : image(k, g)) add_into(acc, k2, K_.mul(y, z), f_);
        return from_map(acc);
    }

    MVec scan(std::uint32_t k, const Relation& r) {
        std::map<std::uint32_t, KVec> acc;
        for (const auto& [coef, w] : r) {
            MVec v{{k, K_.one()}};
            for (int g : w) v = push(v, g);
            for (const auto& [k2, y] : v) add_into(acc, k2, K_.scale(y, coef), f_);
        }
        return from_map(acc);
    }

    void process(MVec rel) {
        std::vector<MVec> pending{std::move(rel)};
        while (!pending.empty()) {
            MVec v = norm(pending.back());
            pending.pop_back();
            if (v.empty()) continue;
            std::vector<std::size_t> order(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                bool px = protected_.count(v[x].first), py = protected_.count(v[y].first);
                if (px != py) return !px;
                return v[x].first > v[y].first;
            });
            std::optional<std::size_t> piv;
            std::optional<KVec> yinv;
            for (std::size_t i : order) {
                yinv = K_.inverse(v[i].second);
                if (yinv) {
                    piv = i;
                    break;
                }
            }
            if (!piv) {
                stuck_.push_back(std::move(v));
                continue;
            }
            std::uint32_t p = v[*piv].first;
            KVec minv = K_.scale(*yinv, f_.neg(f_.one()));
            MVec r;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (i != *piv) r.emplace_back(v[i].first, K_.mul(minv, v[i].second));
            ++eliminations_;
            auto olds = std::move(cosets_[p].img);
            cosets_[p].dead = true;
            cosets_[p].repl = r;
            cosets_[p].img.assign(2 * (n_ - 1), std::nullopt);
            for (std::size_t s = 0; s < olds.size(); ++s) {
                if (!olds[s]) continue;
                std::map<std::uint32_t, KVec> acc;
                for (const auto& [k, y] : push(r, slot_gen(static_cast<int>(s)))) add_into(acc, k, y, f_);
                for (const auto& [k, y] : norm(*olds[s])) add_into(acc, k, K_.scale(y, f_.neg(f_.one())), f_);
                pending.push_back(from_map(acc));
            }
        }
    }

    int n_;
    const F& f_;
    const KAlgebra<F>& K_;
    std::vector<Letters> tgens_;
    std::vector<int> gens_;
    std::vector<Relation> rels_;
    std::vector<Coset> cosets_;
    std::set<std::uint32_t> protected_;
    std::vector<std::uint32_t> tcos_;
    std::vector<MVec> stuck_;
    std::size_t eliminations_ = 0;
    std::function<void(const EnumStats&)> progress_;
    std::size_t progress_every_ = 0;
};

// Images of the generating vectors under every signed generator.
template <class F>
using ModuleImages = std::vector<std::vector<typename Enumerator<F>::MVec>>;  // [t][slot]

template <class F>
ModuleImages<F> collect_images(Enumerator<F>& e, std::size_t tcount, int n) {
    ModuleImages<F> out(tcount);
    for (std::size_t t = 0; t < tcount; ++t)
        for (int s = 0; s < 2 * (n - 1); ++s) out[t].push_back(e.image_of(t, slot_gen(s)));
    return out;
}

// Expand module images into full right action tables on the basis
// u * |T| + t, using (b_u e_t) g = sum_k (b_u y_k) e_k.
template <class F>
std::vector<SparseMatrix<typename F::T>> materialize(const KAlgebra<F>& K, const ModuleImages<F>& im, int n) {
    using T = typename F::T;
    std::size_t nt = im.size(), dk = K.dim();
    std::vector<SparseMatrix<T>> tables(2 * (n - 1));
    for (std::size_t s = 0; s < tables.size(); ++s) {
        auto& tab = tables[s];
        tab.dim = nt * dk;
        tab.cols.resize(nt * dk);
        for (std::size_t u = 0; u < dk; ++u) {
            SVec<T> bu{{static_cast<std::uint32_t>(u), K.one()[0].second}};
            for (std::size_t t = 0; t < nt; ++t) {
                SVec<T> col;
                for (const auto& [k, y] : im[t][s])
                    for (auto& [u2, v] : K.mul(bu, y)) col.emplace_back(static_cast<std::uint32_t>(u2 * nt + k), v);
                std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                tab.cols[u * nt + t] = std::move(col);
            }
        }
    }
    return tables;
}

}  // namespace hecke
