#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke/braid.hpp"
#include "hecke/catalog.hpp"
#include "hecke/ring.hpp"

namespace hecke {

// Formal R-linear combination of words.
using Combo = std::map<Letters, Laurent, TermLess>;

void combo_add(Combo& acc, const Letters& w, const Laurent& k);

// A relation sum_k coef_k * word_k = 0, written on s_1, s_2 (or on a single
// generator s_1, or on a distant pair s_1, s_3) and instantiated by shifting.
struct Identity {
    enum Kind { single, pair, distant };
    std::string id;
    std::string source;
    Kind kind;
    std::vector<std::pair<Laurent, Letters>> terms;
};

using Terms = std::vector<std::pair<Laurent, Letters>>;

// Substitute s_1 -> s_i, s_2 -> s_{i+1}, s_3 -> s_j.
Terms instantiate(const Identity& id, int i, int j = 0);

// Oriented form of an identity: lhs -> rhs, with every rhs word smaller than
// lhs in the term order.
struct RewriteRule {
    std::string id;
    Letters lhs;
    std::vector<std::pair<Laurent, Letters>> rhs;
    std::string note;
};

// Identities as printed, before orientation. The six-letter expansion is kept
// for checking only; the engine never uses it.
const std::vector<Identity>& base_identities();
const Identity& find_identity(const std::string& id);
RewriteRule orient(const Identity& id);
// Base rule catalog in priority order (free, power, comm, conj, braid, mix,
// alternating four-letter identities).
std::vector<RewriteRule> rule_set();

struct TraceStep {
    std::string rule;
    std::size_t position;
    std::size_t terms;
};

struct IrreducibleWord : std::runtime_error {
    IrreducibleWord(Letters w, std::vector<TraceStep> t)
        : std::runtime_error("no reduction found for word [" + format_letters(w) + "]"),
          word(std::move(w)),
          trace(std::move(t)) {}
    Letters word;
    std::vector<TraceStep> trace;
};

// Use the relation to replace the occurrence of term k's word at position pos
// of w by the other terms. Term k must have a unit coefficient.
Combo replace_term(const Terms& rel, std::size_t k, const Letters& w, std::size_t pos);

class RewriteEngine {
public:
    explicit RewriteEngine(int n, int depth_limit = 32, std::size_t node_limit = 200000);

    int n() const { return n_; }
    // Combination supported on catalog words; throws IrreducibleWord.
    Combo reduce(const Letters& w);
    const std::vector<TraceStep>& last_trace() const { return trace_; }
    std::size_t cache_size() const;
    void clear_cache();
    // Memoized reductions, for the resume file.
    std::vector<std::pair<Letters, Combo>> cache_entries() const;
    void seed_cache(const Letters& w, Combo c);

private:
    struct Instance {
        std::string name;
        Terms terms;
    };
    struct Oriented {
        std::string name;
        Letters lhs;
        std::vector<std::pair<Laurent, Letters>> rhs;
    };

    bool is_basis(const Letters& w) const;
    bool greedy_step(const Letters& w, Combo& out, TraceStep& step) const;
    Combo search(const Letters& w);

    int n_;
    int depth_limit_;
    std::size_t node_limit_;
    const Catalog* cat_;
    std::vector<Instance> moves_;
    std::vector<Oriented> rules_;
    mutable std::mutex mu_;
    std::unordered_map<Letters, Combo, LettersHash> cache_;
    std::vector<TraceStep> trace_;
    int depth_ = 0;
};

}  // namespace hecke
