#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hecke/braid.hpp"

namespace hecke {

struct LevelOutOfRange : std::out_of_range {
    explicit LevelOutOfRange(int n) : std::out_of_range("level " + std::to_string(n) + " outside 2..5") {}
};
struct CountMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// Generating sets of each level over the previous one, in index order.
const std::vector<Letters>& gens_T2();
const std::vector<Letters>& gens_T3();
const std::vector<Letters>& gens_A();
const std::vector<Letters>& gens_Aprime();
const std::vector<Letters>& gens_B();
const std::vector<Letters>& gens_T5();

// Sizes of the consecutive blocks of gens_B (3 stages) and gens_T5 (6 strata).
const std::vector<std::size_t>& gens_B_stages();
const std::vector<std::size_t>& gens_T5_strata();

// T_n: the generating set of level n over level n-1.
const std::vector<Letters>& tower_gens(int n);

// Basis of A_n: u + t for u in basis(n-1), t in T_n, index u * |T_n| + t.
class Catalog {
public:
    static const Catalog& get(int n);

    int n() const { return n_; }
    std::size_t size() const { return size_; }
    std::size_t tower_size() const { return tower_->size(); }
    Letters word(std::size_t i) const;
    std::optional<std::size_t> index(const Letters& w) const;
    // (outer index, generator index)
    std::pair<std::size_t, std::size_t> split(std::size_t i) const {
        return {i / tower_->size(), i % tower_->size()};
    }

private:
    explicit Catalog(int n);
    int n_;
    std::size_t size_;
    const std::vector<Letters>* tower_;
    const Catalog* outer_ = nullptr;
    std::unordered_map<Letters, std::size_t, LettersHash> tower_index_;
};

}  // namespace hecke
