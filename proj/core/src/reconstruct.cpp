#include "hecke/reconstruct.hpp"

#include <random>
#include <unordered_map>

namespace hecke {

namespace {

constexpr std::uint32_t kPrime = 2147483647u;
constexpr std::uint32_t kCheckPrime = 2147483629u;

struct Key {
    std::uint32_t slot, col, row;
    bool operator==(const Key&) const = default;
};
struct KeyHash {
    std::size_t operator()(const Key& k) const {
        return (static_cast<std::size_t>(k.slot) * 1000003u + k.col) * 1000003u + k.row;
    }
};

// Newton interpolation at distinct points, returned as monomial coefficients.
std::vector<std::uint32_t> interpolate(const ModP& F, const std::vector<std::uint32_t>& xs,
                                       std::vector<std::uint32_t> ys) {
    std::size_t n = xs.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i)
            ys[i] = F.mul(F.sub(ys[i], ys[i - 1]), F.inv(F.sub(xs[i], xs[i - k])));
    std::vector<std::uint32_t> poly(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // poly = poly * (x - xs[k]) + ys[k]
        std::vector<std::uint32_t> next(n, 0);
        for (std::size_t d = 0; d + 1 < n; ++d) {
            next[d + 1] = F.add(next[d + 1], poly[d]);
            next[d] = F.sub(next[d], F.mul(poly[d], xs[k]));
        }
        next[0] = F.add(next[0], ys[k]);
        poly = std::move(next);
    }
    return poly;
}

int poly_degree(const std::vector<std::uint32_t>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
}

class Sampler {
public:
    Sampler(int n, const ExactLevel& lower) : n_(n), lower_(lower) {}

    std::vector<ModMatrix> at(std::uint32_t p, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        ++runs_;
        ModCoeffs f(ModPoint(p, a, b, c));
        ModLevel low = specialize_level(lower_, f);
        return enumerate_tables(n_, low);
    }

    std::vector<std::uint32_t> values(const std::vector<ModMatrix>& t) {
        std::vector<std::uint32_t> out(keys_.size(), 0);
        for (std::uint32_t s = 0; s < t.size(); ++s)
            for (std::uint32_t j = 0; j < t[s].cols.size(); ++j)
                for (const auto& [i, v] : t[s].cols[j]) {
                    auto it = index_.find({s, j, i});
                    if (it == index_.end()) {
                        if (frozen_) throw IntegrityError("table support differs between sample points");
                        index_.emplace(Key{s, j, i}, keys_.size());
                        keys_.push_back({s, j, i});
                        out.push_back(v);
                    } else {
                        out[it->second] = v;
                    }
                }
        return out;
    }

    void freeze() { frozen_ = true; }
    const std::vector<Key>& keys() const { return keys_; }
    std::size_t runs() const { return runs_; }

private:
    int n_;
    const ExactLevel& lower_;
    std::vector<Key> keys_;
    std::unordered_map<Key, std::size_t, KeyHash> index_;
    bool frozen_ = false;
    std::size_t runs_ = 0;
};

}  // namespace

ModLevel specialize_level(const ExactLevel& lev, const ModCoeffs& f) {
    std::vector<ModMatrix> t;
    for (const auto& m : lev.tables()) t.push_back(specialize_table<std::uint32_t>(m, f));
    return ModLevel(lev.n(), f, std::move(t));
}

std::vector<ModMatrix> enumerate_tables(int n, const ModLevel& lower, EnumStats* stats) {
    const ModCoeffs& f = lower.field();
    KAlgebra<ModCoeffs> K(f, &lower);
    const auto& tg = tower_gens(n);
    Enumerator<ModCoeffs> e(n, f, K, tg, f.pt.a, f.pt.b, f.pt.c);
    EnumStats s = e.run();
    if (stats) *stats = s;
    return materialize(K, collect_images(e, tg.size(), n), n);
}

int word_degree(const Letters& w) {
    int d = 0;
    for (int l : w) d += l > 0 ? 1 : -1;
    return d;
}

std::vector<ExactMatrix> reconstruct_exact_tables(int n, const ExactLevel& lower, ReconstructStats* stats) {
    const ModP F{kPrime};
    const Catalog& cat = Catalog::get(n);
    Sampler sampler(n, lower);
    std::mt19937 rng(20240917u);
    std::uniform_int_distribution<std::uint32_t> dist(1000, kPrime - 1);

    // Degree bounds in a and in b, at c = 1, by sampling until stable.
    auto detect = [&](bool in_a) {
        std::uint32_t other = dist(rng);
        for (std::size_t N = 8;; N *= 2) {
            std::vector<std::uint32_t> xs;
            std::vector<std::vector<std::uint32_t>> vals;
            for (std::size_t i = 0; i < N; ++i) {
                std::uint32_t x = static_cast<std::uint32_t>(3 + 7 * i);
                xs.push_back(x);
                vals.push_back(sampler.values(in_a ? sampler.at(kPrime, x, other, 1) : sampler.at(kPrime, other, x, 1)));
            }
            int deg = -1;
            for (std::size_t e = 0; e < sampler.keys().size(); ++e) {
                std::vector<std::uint32_t> ys;
                for (const auto& v : vals) ys.push_back(e < v.size() ? v[e] : 0);
                deg = std::max(deg, poly_degree(interpolate(F, xs, ys)));
            }
            if (deg + 3 <= static_cast<int>(N)) return deg;
            if (N > 64) throw IntegrityError("degree detection did not stabilize");
        }
    };
    int da = detect(true);
    int db = detect(false);
    sampler.freeze();

    std::vector<std::uint32_t> as, bs;
    for (int i = 0; i <= da; ++i) as.push_back(static_cast<std::uint32_t>(5 + 11 * i));
    for (int j = 0; j <= db; ++j) bs.push_back(static_cast<std::uint32_t>(4 + 13 * j));
    std::vector<std::vector<std::vector<std::uint32_t>>> grid(as.size());
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = 0; j < bs.size(); ++j) grid[i].push_back(sampler.values(sampler.at(kPrime, as[i], bs[j], 1)));

    const auto& keys = sampler.keys();
    std::vector<ExactMatrix> out(2 * (n - 1));
    for (auto& m : out) {
        m.dim = cat.size();
        m.cols.resize(cat.size());
    }
    std::vector<int> degs(cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) degs[i] = word_degree(cat.word(i));
    const BigInt half = kPrime / 2;
    for (std::size_t e = 0; e < keys.size(); ++e) {
        // interpolate in a for each b, then in b for each a-degree
        std::vector<std::vector<std::uint32_t>> in_a(bs.size());
        for (std::size_t j = 0; j < bs.size(); ++j) {
            std::vector<std::uint32_t> ys;
            for (std::size_t i = 0; i < as.size(); ++i) ys.push_back(grid[i][j][e]);
            in_a[j] = interpolate(F, as, ys);
        }
        const Key& k = keys[e];
        int target = degs[k.col] + (slot_gen(static_cast<int>(k.slot)) > 0 ? 1 : -1) - degs[k.row];
        std::vector<Laurent::Term> terms;
        for (int x = 0; x <= da; ++x) {
            std::vector<std::uint32_t> ys;
            for (std::size_t j = 0; j < bs.size(); ++j) ys.push_back(in_a[j][x]);
            auto pb = interpolate(F, bs, ys);
            for (int y = 0; y <= db; ++y) {
                if (pb[y] == 0) continue;
                int rest = target - x - 2 * y;
                if (rest % 3 != 0) throw IntegrityError("table entry is not homogeneous");
                BigInt v = pb[y];
                if (v > half) v -= kPrime;
                terms.push_back({{x, y, rest / 3}, v});
            }
        }
        Laurent val = Laurent::from_terms(std::move(terms));
        if (!val.is_zero()) out[k.slot].cols[k.col].emplace_back(k.row, std::move(val));
    }
    for (auto& m : out)
        for (auto& col : m.cols)
            std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    // Independent check at a random point with c != 1 and another prime.
    std::uniform_int_distribution<std::uint32_t> dist2(2, kCheckPrime - 1);
    std::uint32_t a = dist2(rng), b = dist2(rng), c = dist2(rng);
    ModCoeffs f(ModPoint(kCheckPrime, a, b, c));
    auto direct = sampler.at(kCheckPrime, a, b, c);
    for (std::size_t s = 0; s < out.size(); ++s)
        if (specialize_table<std::uint32_t>(out[s], f).cols != direct[s].cols)
            throw IntegrityError("reconstructed table disagrees with enumeration at a check point");
    if (stats) *stats = {da, db, sampler.runs(), keys.size()};
    return out;
}

}  // namespace hecke
