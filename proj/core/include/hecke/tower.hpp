#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "hecke/level.hpp"
#include "hecke/rewrite.hpp"

namespace hecke {

using ExactLevel = TableLevel<ExactCoeffs>;
using ExactVec = SVec<Laurent>;
using ExactMatrix = SparseMatrix<Laurent>;

struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ExactVec combo_to_vec(const Combo& c, const Catalog& cat);
Combo vec_to_combo(const ExactVec& v, const Catalog& cat);

// Column j of the table for g is reduce(basis_j g), computed with the rule
// engine. Used for n = 2, 3.
std::vector<ExactMatrix> tables_from_rules(RewriteEngine& engine);

// Entrywise specialization.
template <class T>
SparseMatrix<std::uint32_t> specialize_table(const SparseMatrix<Laurent>& m, const ModCoeffs& f) {
    SparseMatrix<std::uint32_t> out;
    out.dim = m.dim;
    out.cols.resize(m.cols.size());
    for (std::size_t j = 0; j < m.cols.size(); ++j)
        for (const auto& [i, x] : m.cols[j]) {
            auto v = f.from_laurent(x);
            if (v) out.cols[j].emplace_back(i, v);
        }
    return out;
}

// Map the level-n basis into level n+1. Every tower generating set starts
// with the empty word, so basis word u goes to index u * |T_{n+1}|.
std::size_t include_index(int n, std::size_t i);
template <class T>
SVec<T> include(int n, const SVec<T>& v) {
    SVec<T> out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) out.emplace_back(static_cast<std::uint32_t>(include_index(n, i)), x);
    return out;
}

}  // namespace hecke
