#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/ring.hpp"

namespace hecke {

// Coefficient policies. Both expose the same surface so algebra code is
// written once: ExactCoeffs works in R itself, ModCoeffs in F_p at a point.

struct ExactCoeffs {
    using T = Laurent;
    static constexpr bool exact = true;

    T zero() const { return {}; }
    T one() const { return T(1); }
    T from_int(long v) const { return T(v); }
    T from_laurent(const Laurent& x) const { return x; }
    bool is_zero(const T& x) const { return x.is_zero(); }
    bool is_one(const T& x) const { return x.is_one(); }
    T add(const T& x, const T& y) const { return x + y; }
    T sub(const T& x, const T& y) const { return x - y; }
    T mul(const T& x, const T& y) const { return x * y; }
    T neg(const T& x) const { return -x; }
    void add_mul(T& acc, const T& x, const T& y) const { acc += x * y; }
    std::optional<T> inverse(const T& x) const {
        if (!x.is_unit()) return std::nullopt;
        return x.unit_inverse();
    }
    std::string str(const T& x) const { return x.str(); }
};

struct ModCoeffs {
    using T = std::uint32_t;
    static constexpr bool exact = false;
    ModPoint pt;

    explicit ModCoeffs(ModPoint p) : pt(p) {}
    std::uint32_t prime() const { return pt.f.p; }
    T zero() const { return 0; }
    T one() const { return 1; }
    T from_int(long v) const { return pt.f.from_int(v); }
    T from_laurent(const Laurent& x) const { return pt.eval(x); }
    bool is_zero(T x) const { return x == 0; }
    bool is_one(T x) const { return x == 1; }
    T add(T x, T y) const { return pt.f.add(x, y); }
    T sub(T x, T y) const { return pt.f.sub(x, y); }
    T mul(T x, T y) const { return pt.f.mul(x, y); }
    T neg(T x) const { return pt.f.neg(x); }
    void add_mul(T& acc, T x, T y) const { acc = pt.f.add(acc, pt.f.mul(x, y)); }
    std::optional<T> inverse(T x) const {
        if (x == 0) return std::nullopt;
        return pt.f.inv(x);
    }
    std::string str(T x) const { return std::to_string(x); }
};

template <class T>
using SVec = std::vector<std::pair<std::uint32_t, T>>;

// Dense scratch accumulator with a touched list; take() returns a sorted
// sparse vector and resets the scratch.
template <class F>
class Accum {
public:
    using T = typename F::T;
    Accum(const F& f, std::size_t dim) : f_(f), val_(dim), used_(dim, 0) {}

    void add(std::uint32_t i, const T& x) {
        if (!used_[i]) {
            used_[i] = 1;
            touched_.push_back(i);
            val_[i] = x;
        } else {
            val_[i] = f_.add(val_[i], x);
        }
    }
    void add_mul(std::uint32_t i, const T& x, const T& y) {
        if (!used_[i]) {
            used_[i] = 1;
            touched_.push_back(i);
            val_[i] = f_.mul(x, y);
        } else {
            f_.add_mul(val_[i], x, y);
        }
    }
    void add_vec(const SVec<T>& v, const T& s) {
        for (const auto& [i, x] : v) add_mul(i, s, x);
    }
    void add_vec(const SVec<T>& v) {
        for (const auto& [i, x] : v) add(i, x);
    }
    bool empty() const { return touched_.empty(); }

    SVec<T> take() {
        std::sort(touched_.begin(), touched_.end());
        SVec<T> out;
        out.reserve(touched_.size());
        for (auto i : touched_) {
            if (!f_.is_zero(val_[i])) out.emplace_back(i, std::move(val_[i]));
            val_[i] = T{};
            used_[i] = 0;
        }
        touched_.clear();
        return out;
    }

private:
    const F& f_;
    std::vector<T> val_;
    std::vector<char> used_;
    std::vector<std::uint32_t> touched_;
};

template <class F>
SVec<typename F::T> scale(const F& f, const SVec<typename F::T>& v, const typename F::T& s) {
    SVec<typename F::T> out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) {
        auto y = f.mul(s, x);
        if (!f.is_zero(y)) out.emplace_back(i, std::move(y));
    }
    return out;
}

template <class F>
SVec<typename F::T> axpy(const F& f, const SVec<typename F::T>& x, const SVec<typename F::T>& y,
                         const typename F::T& s) {
    // x + s*y, both sorted
    SVec<typename F::T> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            auto v = f.mul(s, y[j].second);
            if (!f.is_zero(v)) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            auto v = x[i].second;
            f.add_mul(v, s, y[j].second);
            if (!f.is_zero(v)) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

inline int gen_slot(int g) { return 2 * (std::abs(g) - 1) + (g < 0 ? 1 : 0); }
inline int slot_gen(int s) { return (s % 2 ? -1 : 1) * (s / 2 + 1); }

}  // namespace hecke
