#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hecke/catalog.hpp"
#include "hecke/coeff.hpp"

namespace hecke {

// Column-compressed matrix; column j lists (row, value) sorted by row.
template <class T>
struct SparseMatrix {
    std::size_t dim = 0;
    std::vector<SVec<T>> cols;

    std::size_t nnz() const {
        std::size_t s = 0;
        for (const auto& c : cols) s += c.size();
        return s;
    }
};

// A_n with its right regular representation. Elements are sparse vectors over
// the catalog basis. Subclasses supply the action of one signed generator.
template <class F>
class Level {
public:
    using T = typename F::T;
    using Vec = SVec<T>;

    Level(int n, F f) : n_(n), f_(std::move(f)), cat_(&Catalog::get(n)) {}
    virtual ~Level() = default;

    int n() const { return n_; }
    const F& field() const { return f_; }
    const Catalog& catalog() const { return *cat_; }
    std::size_t dim() const { return cat_->size(); }

    virtual Vec act(const Vec& v, int g) const = 0;

    Vec unit(std::size_t i) const { return Vec{{static_cast<std::uint32_t>(i), f_.one()}}; }
    Vec one() const { return unit(0); }

    Vec apply(Vec v, const Letters& w) const {
        for (int g : w) {
            if (g == 0 || std::abs(g) >= n_) throw IndexOutOfRange("letter outside level");
            v = act(v, g);
        }
        return v;
    }
    // Normal form of a word: the image of 1 under right multiplication.
    Vec reduce(const Letters& w) const { return apply(one(), w); }

    Vec multiply(const Vec& x, const Vec& y) const {
        Accum<F> acc(f_, dim());
        for (const auto& [j, yj] : y) acc.add_vec(apply(x, cat_->word(j)), yj);
        return acc.take();
    }

    Vec add(const Vec& x, const Vec& y) const { return axpy(f_, x, y, f_.one()); }
    Vec sub(const Vec& x, const Vec& y) const { return axpy(f_, x, y, f_.neg(f_.one())); }

protected:
    int n_;
    F f_;
    const Catalog* cat_;
};

// Level backed by explicit action tables for all 2(n-1) signed generators.
template <class F>
class TableLevel : public Level<F> {
public:
    using T = typename F::T;
    using Vec = SVec<T>;
    using Matrix = SparseMatrix<T>;

    TableLevel(int n, F f, std::vector<Matrix> tables)
        : Level<F>(n, std::move(f)), tables_(std::move(tables)) {
        if (tables_.size() != static_cast<std::size_t>(2 * (n - 1)))
            throw std::invalid_argument("wrong number of action tables");
        for (const auto& t : tables_)
            if (t.cols.size() != this->dim()) throw std::invalid_argument("action table has wrong size");
    }

    const Matrix& table(int g) const { return tables_.at(gen_slot(g)); }
    const std::vector<Matrix>& tables() const { return tables_; }

    Vec act(const Vec& v, int g) const override {
        const auto& cols = table(g).cols;
        if (v.size() == 1 && this->f_.is_one(v[0].second)) return cols[v[0].first];
        Accum<F> acc(this->f_, this->dim());
        for (const auto& [j, x] : v) acc.add_vec(cols[j], x);
        return acc.take();
    }

private:
    std::vector<Matrix> tables_;
};

}  // namespace hecke
