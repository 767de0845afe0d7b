#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/io.hpp"

namespace hecke {

struct Claim {
    std::string id;
    std::string statement;
    bool pass = false;
    json witness{};  // set on failure
    double seconds = 0;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Claim> results{};

    bool ok() const;
    std::size_t failures() const;
    void merge(const Report& other);
    json to_json() const;
};

struct VerifyOptions {
    std::uint64_t seed = 20240917;
    int word_pairs = 1000;        // homomorphism pairs per exact level
    int word_pairs_5 = 100;       // homomorphism pairs at level 5
    int random_elements = 200;    // automorphism checks per level
    unsigned threads = 1;
    bool delta_cubed = false;     // stretch check in the a5 suite
    std::vector<ModPoint> points; // level-5 points; empty means default_points(seed)
};

// (a, b, c) = (0, 0, 1) mod 65521 plus two seeded points, one mod 65521 and
// one mod 2^31 - 1.
std::vector<ModPoint> default_points(std::uint64_t seed);

// Right regular representation of A_3 by vector enumeration over R from the
// defining relations alone, with the 24 catalog words as the basis.
std::shared_ptr<const ExactLevel> oracle_A3(EnumStats* stats = nullptr);

// Sum of coef * (x . word) over the terms of a relation.
template <class F>
SVec<typename F::T> eval_terms(const Level<F>& lev, const SVec<typename F::T>& x, const Terms& terms) {
    const F& f = lev.field();
    Accum<F> acc(f, lev.dim());
    for (const auto& [coef, w] : terms) acc.add_vec(lev.apply(x, w), f.from_laurent(coef));
    return acc.take();
}

// Defining relations of A_n instantiated at every index: inverse pairs,
// cubic, braid and distant commutation.
std::vector<std::pair<std::string, Terms>> defining_relations(int n);

Report check_identity_lemmas(Tower& tower);
Report check_relations(Tower& tower, int n, unsigned threads = 1);
Report check_relations_at(Tower& tower, int n, const ModPoint& pt, unsigned threads = 1);
Report check_group_specialization(Tower& tower, int n, std::uint32_t prime);
Report check_center_and_automorphisms(Tower& tower, const VerifyOptions& opt);
Report check_center_at_5(Tower& tower, const ModPoint& pt);
Report check_homomorphism(Tower& tower, int n, const VerifyOptions& opt);
Report check_homomorphism_at_5(Tower& tower, const ModPoint& pt, const VerifyOptions& opt);
Report check_tower_inclusion(Tower& tower);
Report check_tower_inclusion_at_5(Tower& tower, const ModPoint& pt);
Report check_delta_cubed(Tower& tower, const ModPoint& pt);

// Suites: identities, relations, group, center, homomorphism, tower, all, a5.
Report run_suite(Tower& tower, const std::string& suite, const VerifyOptions& opt);

}  // namespace hecke

namespace hecke {

// Dimension of A_n over F_p at a point, by vector enumeration: over the
// scalars for n <= 3, over the specialized A_{n-1} above that.
std::size_t specialized_rank(Tower& tower, int n, const ModPoint& pt, EnumStats* stats = nullptr);

}  // namespace hecke
