#include "hecke/tower.hpp"

namespace hecke {

ExactVec combo_to_vec(const Combo& c, const Catalog& cat) {
    ExactVec out;
    for (const auto& [w, k] : c) {
        auto i = cat.index(w);
        if (!i) throw IntegrityError("word [" + format_letters(w) + "] is not a catalog word");
        out.emplace_back(static_cast<std::uint32_t>(*i), k);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

Combo vec_to_combo(const ExactVec& v, const Catalog& cat) {
    Combo out;
    for (const auto& [i, k] : v) combo_add(out, cat.word(i), k);
    return out;
}

std::vector<ExactMatrix> tables_from_rules(RewriteEngine& engine) {
    const Catalog& cat = Catalog::get(engine.n());
    std::vector<ExactMatrix> tables(2 * (engine.n() - 1));
    for (int s = 0; s < static_cast<int>(tables.size()); ++s) {
        int g = slot_gen(s);
        tables[s].dim = cat.size();
        tables[s].cols.resize(cat.size());
        for (std::size_t j = 0; j < cat.size(); ++j) {
            Letters w = cat.word(j);
            w.push_back(g);
            tables[s].cols[j] = combo_to_vec(engine.reduce(w), cat);
        }
    }
    return tables;
}

std::size_t include_index(int n, std::size_t i) {
    if (n < 2 || n > 4) throw LevelOutOfRange(n + 1);
    return i * Catalog::get(n + 1).tower_size();
}

}  // namespace hecke
