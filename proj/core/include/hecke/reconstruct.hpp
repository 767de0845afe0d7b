#pragma once

#include "hecke/enumerate.hpp"
#include "hecke/tower.hpp"

namespace hecke {

using ModMatrix = SparseMatrix<std::uint32_t>;
using ModLevel = TableLevel<ModCoeffs>;

// Tables of A_n over F_p at a point, by relative enumeration over the given
// A_{n-1} tables (already specialized to the same point).
std::vector<ModMatrix> enumerate_tables(int n, const ModLevel& lower, EnumStats* stats = nullptr);
ModLevel specialize_level(const ExactLevel& lev, const ModCoeffs& f);

// Signed length; with deg a = 1, deg b = 2, deg c = 3 the relations are
// homogeneous, so every table entry is a homogeneous element of R.
int word_degree(const Letters& w);

struct ReconstructStats {
    int degree_a = 0;
    int degree_b = 0;
    std::size_t runs = 0;
    std::size_t entries = 0;
};

// Exact tables of A_n from enumerations at c = 1 over (a, b), with
// homogeneity supplying the c exponent. Checked against a fresh enumeration
// at an independent point with a different prime.
std::vector<ExactMatrix> reconstruct_exact_tables(int n, const ExactLevel& lower, ReconstructStats* stats = nullptr);

}  // namespace hecke
