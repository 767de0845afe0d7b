#pragma once

#include "hecke/enumerate.hpp"

namespace hecke {

// A_n stored as the free left A_{n-1}-module on the tower generators, with
// e_t g = sum_k y_{t,g,k} e_k. The action of g on x = sum_t x_t e_t is
// sum_t sum_k (x_t y_{t,g,k}) e_k; basis index is u * |T_n| + t.
template <class F>
class ModuleLevel : public Level<F> {
public:
    using T = typename F::T;
    using Vec = SVec<T>;
    using MVec = typename Enumerator<F>::MVec;

    ModuleLevel(int n, std::shared_ptr<const Level<F>> lower, ModuleImages<F> images)
        : Level<F>(n, lower->field()), lower_(std::move(lower)), images_(std::move(images)), K_(this->f_, lower_.get()) {
        if (images_.size() != this->catalog().tower_size()) throw std::invalid_argument("wrong number of module generators");
    }

    const Level<F>& lower() const { return *lower_; }
    const ModuleImages<F>& images() const { return images_; }
    const KAlgebra<F>& K() const { return K_; }

    // Block form: coefficient of e_t for each t present.
    MVec to_blocks(const Vec& v) const {
        std::size_t nt = images_.size();
        std::map<std::uint32_t, Vec> b;
        for (const auto& [i, x] : v) b[static_cast<std::uint32_t>(i % nt)].emplace_back(static_cast<std::uint32_t>(i / nt), x);
        MVec out;
        for (auto& [t, y] : b) out.emplace_back(t, std::move(y));
        return out;
    }

    Vec from_blocks(const MVec& m) const {
        std::size_t nt = images_.size();
        Vec out;
        for (const auto& [t, y] : m)
            for (const auto& [u, x] : y) out.emplace_back(static_cast<std::uint32_t>(u * nt + t), x);
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }

    MVec act_blocks(const MVec& x, int g) const {
        std::map<std::uint32_t, Accum<F>> acc;
        int s = gen_slot(g);
        for (const auto& [t, xt] : x)
            for (const auto& [k, y] : images_[t][s]) {
                auto it = acc.try_emplace(k, this->f_, lower_->dim()).first;
                it->second.add_vec(K_.mul(xt, y));
            }
        MVec out;
        for (auto& [k, a] : acc) {
            auto y = a.take();
            if (!y.empty()) out.emplace_back(k, std::move(y));
        }
        return out;
    }

    Vec act(const Vec& v, int g) const override { return from_blocks(act_blocks(to_blocks(v), g)); }

private:
    std::shared_ptr<const Level<F>> lower_;
    ModuleImages<F> images_;
    KAlgebra<F> K_;
};

}  // namespace hecke
