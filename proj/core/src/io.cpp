#include "hecke/io.hpp"

namespace hecke {

json laurent_to_json(const Laurent& x) {
    json terms = json::array();
    for (const auto& t : x.terms())
        terms.push_back({{"ea", t.m.ea}, {"eb", t.m.eb}, {"ec", t.m.ec}, {"k", t.k.str()}});
    return {{"terms", terms}};
}

Laurent laurent_from_json(const json& j) {
    std::vector<Laurent::Term> terms;
    try {
        for (const auto& t : j.at("terms")) {
            const auto& k = t.at("k");
            BigInt v = k.is_string() ? BigInt(k.get<std::string>()) : BigInt(k.get<long long>());
            terms.push_back({{t.at("ea").get<int>(), t.at("eb").get<int>(), t.at("ec").get<int>()}, v});
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad coefficient: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw FormatError(std::string("bad coefficient: ") + e.what());
    }
    return Laurent::from_terms(std::move(terms));
}

json file_header() {
    return {{"engine", kEngineVersion},
            {"generators",
             {{"T2", gens_T2().size()},
              {"T3", gens_T3().size()},
              {"A", gens_A().size()},
              {"B", gens_B_stages()},
              {"T5", gens_T5_strata()}}}};
}

json word_to_json(int n, const Letters& w) { return {{"n", n}, {"word", w}}; }

json element_to_json(int n, const SVec<Laurent>& v) {
    const Catalog& cat = Catalog::get(n);
    json terms = json::array();
    for (const auto& [i, k] : v) terms.push_back({{"word", cat.word(i)}, {"coeff", laurent_to_json(k)}});
    return {{"n", n}, {"terms", terms}};
}

json element_to_json(int n, const SVec<std::uint32_t>& v, const ModPoint& at) {
    const Catalog& cat = Catalog::get(n);
    json terms = json::array();
    for (const auto& [i, k] : v) terms.push_back({{"word", cat.word(i)}, {"value", std::to_string(k)}});
    return {{"n", n},
            {"point", {{"p", at.f.p}, {"a", at.a}, {"b", at.b}, {"c", at.c}}},
            {"terms", terms}};
}

SVec<Laurent> element_from_json(const json& j, int* n_out) {
    try {
        int n = j.at("n").get<int>();
        const Catalog& cat = Catalog::get(n);
        SVec<Laurent> out;
        for (const auto& t : j.at("terms")) {
            auto w = t.at("word").get<Letters>();
            auto i = cat.index(w);
            if (!i) throw FormatError("word [" + format_letters(w) + "] is not a basis word");
            out.emplace_back(static_cast<std::uint32_t>(*i), laurent_from_json(t.at("coeff")));
        }
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        if (n_out) *n_out = n;
        return out;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad element: ") + e.what());
    }
}

json basis_to_json(int n) {
    const Catalog& cat = Catalog::get(n);
    json words = json::array();
    for (std::size_t i = 0; i < cat.size(); ++i) words.push_back(cat.word(i));
    return {{"header", file_header()}, {"n", n}, {"basis", words}};
}

json table_to_json(int n, int g, const SparseMatrix<Laurent>& m) {
    json cols = json::array();
    for (const auto& c : m.cols) {
        json col = json::array();
        for (const auto& [i, k] : c) col.push_back({{"row", i}, {"coeff", laurent_to_json(k)}});
        cols.push_back(std::move(col));
    }
    return {{"header", file_header()}, {"n", n}, {"gen", g}, {"cols", cols}};
}

json table_to_json(int n, int g, const SparseMatrix<std::uint32_t>& m, const ModPoint& at) {
    json cols = json::array();
    for (const auto& c : m.cols) {
        json col = json::array();
        for (const auto& [i, k] : c) col.push_back({{"row", i}, {"value", std::to_string(k)}});
        cols.push_back(std::move(col));
    }
    return {{"header", file_header()},
            {"n", n},
            {"gen", g},
            {"point", {{"p", at.f.p}, {"a", at.a}, {"b", at.b}, {"c", at.c}}},
            {"cols", cols}};
}

}  // namespace hecke
