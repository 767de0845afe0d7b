#include "hecke/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace hecke {

void combo_add(Combo& acc, const Letters& w, const Laurent& k) {
    if (k.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, k);
        return;
    }
    it->second += k;
    if (it->second.is_zero()) acc.erase(it);
}

namespace {

using Side = std::vector<std::pair<std::string, Letters>>;

Identity eq(std::string id, std::string source, Identity::Kind kind, const Side& lhs, const Side& rhs) {
    Identity out{std::move(id), std::move(source), kind, {}};
    for (const auto& [k, w] : lhs) out.terms.emplace_back(parse_laurent(k), w);
    for (const auto& [k, w] : rhs) out.terms.emplace_back(-parse_laurent(k), w);
    return out;
}

std::vector<Identity> build_identities() {
    using K = Identity::Kind;
    const Letters X{-2, 1, -2};
    std::vector<Identity> v;
    v.push_back(eq("R-free.1", "group", K::single, {{"1", {1, -1}}}, {{"1", {}}}));
    v.push_back(eq("R-free.2", "group", K::single, {{"1", {-1, 1}}}, {{"1", {}}}));
    v.push_back(eq("R-power.sq", "quadratic form of the cubic relation", K::single, {{"1", {1, 1}}},
                   {{"a", {1}}, {"b", {}}, {"c", {-1}}}));
    v.push_back(eq("R-power.inv", "inverse square", K::single, {{"1", {-1, -1}}},
                   {{"c^-1", {1}}, {"-a*c^-1", {}}, {"-b*c^-1", {-1}}}));
    v.push_back(eq("R-power.cubic", "cubic relation", K::single, {{"1", {1, 1, 1}}},
                   {{"a", {1, 1}}, {"b", {1}}, {"c", {}}}));
    for (int x : {1, -1})
        for (int y : {1, -1})
            v.push_back(eq("R-comm." + std::string(x > 0 ? "p" : "n") + (y > 0 ? "p" : "n"), "distant commutation",
                           K::distant, {{"1", {3 * x, y}}}, {{"1", {y, 3 * x}}}));
    v.push_back(eq("R-conj.1", "conjugation", K::pair, {{"1", {2, 1, -2}}}, {{"1", {-1, 2, 1}}}));
    v.push_back(eq("R-conj.2", "conjugation", K::pair, {{"1", {2, -1, -2}}}, {{"1", {-1, -2, 1}}}));
    v.push_back(eq("R-conj.3", "conjugation", K::pair, {{"1", {-2, 1, 2}}}, {{"1", {1, 2, -1}}}));
    v.push_back(eq("R-conj.4", "conjugation", K::pair, {{"1", {-2, -1, 2}}}, {{"1", {1, -2, -1}}}));
    v.push_back(eq("R-braid.pos", "braid relation", K::pair, {{"1", {2, 1, 2}}}, {{"1", {1, 2, 1}}}));
    v.push_back(eq("R-braid.neg", "braid relation", K::pair, {{"1", {-2, -1, -2}}}, {{"1", {-1, -2, -1}}}));
    v.push_back(eq("R-mix", "s2 s1^-1 s2 s1 expansion", K::pair, {{"1", {2, -1, 2, 1}}},
                   {{"a", {2, 1, -2}}, {"b", {1, -2}}, {"c", X}}));
    v.push_back(eq("R-hex.printed", "printed six-letter expansion", K::pair, {{"1", {-2, 1, -2, 1, -2, 1}}},
                   {{"-a*c^-1 - a^2*b*c^-2", {1}},
                    {"a*c^-1", {1, 2}},
                    {"a*c^-1", {-1, 2, 1}},
                    {"-a*b*c^-1", X},
                    {"-a*b*c^-1", {-1}},
                    {"a*b*c^-2", {2, 1}},
                    {"1", {-1, 2, -1}},
                    {"-b*c^-1", {-2, 1, -2, 1}},
                    {"-a*b^2*c^-2", {-2, 1}},
                    {"b*c^-1", {-1, 2}},
                    {"-a*c^-1", {1, -2, 1}},
                    {"b*c^-1", {2, -1}},
                    {"-b^2*c^-1", {-2, -1}},
                    {"-b", {-1, -2, -1}}}));
    // The printed expansion is not homogeneous in deg a = 1, deg b = 2,
    // deg c = 3. This reading has the five-letter left side and s1 s2 s1^-1
    // in place of s1 s2; it is kept for checking only.
    v.push_back(eq("R-hex.corrected", "six-letter expansion, homogeneous reading", K::pair, {{"1", {-2, 1, -2, 1, -2}}},
                   {{"-a*c^-1 - a^2*b*c^-2", {1}},
                    {"a*c^-1", {1, 2, -1}},
                    {"a*c^-1", {-1, 2, 1}},
                    {"-a*b*c^-1", X},
                    {"-a*b*c^-1", {-1}},
                    {"a*b*c^-2", {2, 1}},
                    {"1", {-1, 2, -1}},
                    {"-b*c^-1", {-2, 1, -2, 1}},
                    {"-a*b^2*c^-2", {-2, 1}},
                    {"b*c^-1", {-1, 2}},
                    {"-a*c^-1", {1, -2, 1}},
                    {"b*c^-1", {2, -1}},
                    {"-b^2*c^-1", {-2, -1}},
                    {"-b", {-1, -2, -1}}}));
    v.push_back(eq("R-alt4.1", "four-letter identity 1", K::pair, {{"1", {1, -2, 1, -2}}},
                   {{"1", {-2, 1, -2, 1}},
                    {"a*c^-1", {1, 2}},
                    {"-a*c^-1", {2, 1}},
                    {"-a*b*c^-1", {1, -2}},
                    {"a*b*c^-1", {-2, 1}},
                    {"b", {-2, -1}},
                    {"-b", {-1, -2}}}));
    v.push_back(eq("R-alt4.2", "four-letter identity 2", K::pair, {{"1", {2, -1, 2, -1}}},
                   {{"1", {-2, 1, -2, 1}},
                    {"a", {-1, 2, -1}},
                    {"-a", X},
                    {"-a*b*c^-1", {1, -2}},
                    {"a*b*c^-1", {-1, 2}},
                    {"b*c^-1", {1, -2, 1}},
                    {"-b*c^-1", {2, -1, 2}}}));
    v.push_back(eq("R-alt4.3", "four-letter identity 3", K::pair, {{"1", {-1, 2, -1, 2}}},
                   {{"1", {-2, 1, -2, 1}},
                    {"a*c^-1", {1, 2}},
                    {"-a", X},
                    {"-a*c^-1", {2, 1}},
                    {"a", {-1, 2, -1}},
                    {"-a*b*c^-1", {1, -2}},
                    {"b*c^-1", {1, -2, 1}},
                    {"a*b*c^-1", {2, -1}},
                    {"-b*c^-1", {2, -1, 2}},
                    {"b", {-2, -1}},
                    {"-b", {-1, -2}}}));
    v.push_back(eq("R-alt4diff.1", "commutator identity 1", K::pair, {{"1", {1, -2, 1, -2}}, {"-1", {-2, 1, -2, 1}}},
                   {{"a*c^-1", {1, 2}},
                    {"-a*c^-1", {2, 1}},
                    {"-a*b*c^-1", {1, -2}},
                    {"a*b*c^-1", {-2, 1}},
                    {"b", {-2, -1}},
                    {"-b", {-1, -2}}}));
    v.push_back(eq("R-alt4diff.2", "commutator identity 2", K::pair, {{"1", {2, -1, 2, -1}}, {"-1", {-1, 2, -1, 2}}},
                   {{"a*b*c^-1", {-1, 2}},
                    {"-a*c^-1", {1, 2}},
                    {"a*c^-1", {2, 1}},
                    {"-a*b*c^-1", {2, -1}},
                    {"-b", {-2, -1}},
                    {"b", {-1, -2}}}));
    return v;
}

}  // namespace

const std::vector<Identity>& base_identities() {
    static const std::vector<Identity> v = build_identities();
    return v;
}

const Identity& find_identity(const std::string& id) {
    for (const auto& x : base_identities())
        if (x.id == id) return x;
    throw std::out_of_range("unknown identity " + id);
}

Terms instantiate(const Identity& id, int i, int j) {
    Terms out;
    for (const auto& [k, w] : id.terms) {
        Letters m;
        for (int l : w) {
            int a = std::abs(l), s = l > 0 ? 1 : -1;
            int t = a == 1 ? i : a == 2 ? i + 1 : j;
            m.push_back(s * t);
        }
        out.emplace_back(k, std::move(m));
    }
    return out;
}

namespace {

std::size_t largest_term(const Terms& t) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < t.size(); ++k)
        if (term_compare(t[k].second, t[best].second) > 0) best = k;
    return best;
}

// lhs -> rhs from the relation, solving for term k.
Terms solve_for(const Terms& t, std::size_t k) {
    Laurent inv = (-t[k].first).unit_inverse();
    Terms rhs;
    for (std::size_t m = 0; m < t.size(); ++m)
        if (m != k) rhs.emplace_back(inv * t[m].first, t[m].second);
    return rhs;
}

bool is_printed_only(const Identity& id) { return id.id == "R-hex.printed" || id.id == "R-hex.corrected"; }

}  // namespace

RewriteRule orient(const Identity& id) {
    std::size_t k = largest_term(id.terms);
    if (!id.terms[k].first.is_unit()) throw std::logic_error(id.id + ": leading coefficient is not a unit");
    return {id.id, id.terms[k].second, solve_for(id.terms, k), id.source};
}

std::vector<RewriteRule> rule_set() {
    std::vector<RewriteRule> out;
    for (const auto& id : base_identities())
        if (!is_printed_only(id)) out.push_back(orient(id));
    return out;
}

Combo replace_term(const Terms& rel, std::size_t k, const Letters& w, std::size_t pos) {
    const Letters& pat = rel[k].second;
    if (pos + pat.size() > w.size() || !std::equal(pat.begin(), pat.end(), w.begin() + pos))
        throw std::invalid_argument("pattern does not occur at position");
    Combo out;
    for (const auto& [coef, word] : solve_for(rel, k)) {
        Letters r(w.begin(), w.begin() + pos);
        r.insert(r.end(), word.begin(), word.end());
        r.insert(r.end(), w.begin() + pos + pat.size(), w.end());
        combo_add(out, free_reduce(r), coef);
    }
    return out;
}

RewriteEngine::RewriteEngine(int n, int depth_limit, std::size_t node_limit)
    : n_(n), depth_limit_(depth_limit), node_limit_(node_limit), cat_(&Catalog::get(n)) {
    if (depth_limit < 1) throw std::invalid_argument("depth limit must be at least 1");
    for (const auto& id : base_identities()) {
        if (is_printed_only(id)) continue;
        auto add = [&](int i, int j) {
            std::string name = id.id + "@" + std::to_string(i) + (j ? "," + std::to_string(j) : "");
            Terms t = instantiate(id, i, j);
            std::size_t k = largest_term(t);
            rules_.push_back({name, t[k].second, solve_for(t, k)});
            moves_.push_back({name, std::move(t)});
        };
        switch (id.kind) {
            case Identity::single:
                for (int i = 1; i <= n - 1; ++i) add(i, 0);
                break;
            case Identity::pair:
                for (int i = 1; i <= n - 2; ++i) add(i, 0);
                break;
            case Identity::distant:
                for (int i = 1; i <= n - 1; ++i)
                    for (int j = i + 2; j <= n - 1; ++j) add(i, j);
                break;
        }
    }
}

bool RewriteEngine::is_basis(const Letters& w) const { return cat_->index(w).has_value(); }

bool RewriteEngine::greedy_step(const Letters& w, Combo& out, TraceStep& step) const {
    for (const auto& r : rules_) {
        if (r.lhs.size() > w.size()) continue;
        auto it = std::search(w.begin(), w.end(), r.lhs.begin(), r.lhs.end());
        if (it == w.end()) continue;
        std::size_t pos = static_cast<std::size_t>(it - w.begin());
        out.clear();
        for (const auto& [coef, word] : r.rhs) {
            Letters x(w.begin(), it);
            x.insert(x.end(), word.begin(), word.end());
            x.insert(x.end(), it + r.lhs.size(), w.end());
            combo_add(out, free_reduce(x), coef);
        }
        step = {r.name, pos, out.size()};
        return true;
    }
    return false;
}

namespace {

std::string state_key(const Combo& c) {
    std::ostringstream os;
    for (const auto& [w, k] : c) os << format_letters(w) << ':' << k.str() << ';';
    return os.str();
}

}  // namespace

// Breadth-first search over relation applications to the largest offending
// term, until every term is a catalog word or smaller than w.
Combo RewriteEngine::search(const Letters& w) {
    auto bad_term = [&](const Combo& c) -> const Letters* {
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            if (term_compare(it->first, w) < 0) return nullptr;
            if (!is_basis(it->first)) return &it->first;
        }
        return nullptr;
    };
    struct Node {
        Combo state;
        int depth;
        std::vector<TraceStep> path;
    };
    std::deque<Node> queue;
    std::unordered_set<std::string> seen;
    Combo start{{w, Laurent(1)}};
    queue.push_back({start, 0, {}});
    seen.insert(state_key(start));
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        const Letters* bad = bad_term(node.state);
        if (!bad) {
            trace_.insert(trace_.end(), node.path.begin(), node.path.end());
            return node.state;
        }
        if (node.depth >= depth_limit_) continue;
        Letters u = *bad;
        Laurent k = node.state.at(u);
        for (const auto& mv : moves_) {
            for (std::size_t t = 0; t < mv.terms.size(); ++t) {
                const auto& [coef, pat] = mv.terms[t];
                if (pat.empty() || !coef.is_unit() || pat.size() > u.size()) continue;
                for (auto it = u.begin(); (it = std::search(it, u.end(), pat.begin(), pat.end())) != u.end(); ++it) {
                    std::size_t pos = static_cast<std::size_t>(it - u.begin());
                    Combo next = node.state;
                    combo_add(next, u, -k);
                    for (const auto& [v, m] : replace_term(mv.terms, t, u, pos)) combo_add(next, v, k * m);
                    if (!seen.insert(state_key(next)).second) continue;
                    if (seen.size() > node_limit_) throw IrreducibleWord(w, node.path);
                    auto path = node.path;
                    path.push_back({mv.name + "#" + std::to_string(t), pos, next.size()});
                    queue.push_back({std::move(next), node.depth + 1, std::move(path)});
                }
            }
        }
    }
    throw IrreducibleWord(w, trace_);
}

Combo RewriteEngine::reduce(const Letters& input) {
    Letters w = free_reduce(input);
    for (int l : w)
        if (l == 0 || std::abs(l) >= n_) throw IndexOutOfRange("letter outside level " + std::to_string(n_));
    if (depth_ == 0) trace_.clear();
    {
        std::lock_guard lock(mu_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    Combo res;
    if (is_basis(w)) {
        res.emplace(w, Laurent(1));
    } else {
        ++depth_;
        try {
            Combo step_out;
            TraceStep step;
            if (greedy_step(w, step_out, step)) {
                trace_.push_back(step);
            } else {
                step_out = search(w);
            }
            for (const auto& [u, k] : step_out) {
                if (is_basis(u)) {
                    combo_add(res, u, k);
                    continue;
                }
                for (const auto& [v, m] : reduce(u)) combo_add(res, v, k * m);
            }
        } catch (...) {
            --depth_;
            throw;
        }
        --depth_;
    }
    std::lock_guard lock(mu_);
    cache_.emplace(w, res);
    return res;
}

std::size_t RewriteEngine::cache_size() const {
    std::lock_guard lock(mu_);
    return cache_.size();
}

void RewriteEngine::clear_cache() {
    std::lock_guard lock(mu_);
    cache_.clear();
}

std::vector<std::pair<Letters, Combo>> RewriteEngine::cache_entries() const {
    std::lock_guard lock(mu_);
    std::vector<std::pair<Letters, Combo>> out(cache_.begin(), cache_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return term_compare(x.first, y.first) < 0; });
    return out;
}

void RewriteEngine::seed_cache(const Letters& w, Combo c) {
    std::lock_guard lock(mu_);
    cache_[w] = std::move(c);
}

}  // namespace hecke
