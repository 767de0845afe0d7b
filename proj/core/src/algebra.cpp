#include "hecke/algebra.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hecke/io.hpp"

namespace hecke {

std::string point_key(const ModPoint& pt) {
    return std::to_string(pt.f.p) + ":" + std::to_string(pt.a) + ":" + std::to_string(pt.b) + ":" +
           std::to_string(pt.c);
}

Tower::Tower(int depth_limit) : depth_limit_(depth_limit) {
    if (depth_limit < 1) throw std::invalid_argument("depth limit must be at least 1");
}

void Tower::log(const std::string& msg) const {
    if (verbose_) std::cerr << "[tower] " << msg << std::endl;
}

void Tower::set_resume_file(std::string path) {
    resume_path_ = std::move(path);
    load_resume();
}

RewriteEngine& Tower::engine(int n) {
    if (n < 2 || n > 5) throw LevelOutOfRange(n);
    auto& e = engines_[n];
    if (!e) e = std::make_unique<RewriteEngine>(n, depth_limit_);
    return *e;
}

std::shared_ptr<const ExactLevel> Tower::exact(int n) {
    if (n < 2 || n > 4) throw LevelOutOfRange(n);
    if (auto it = exact_.find(n); it != exact_.end()) return it->second;
    std::shared_ptr<const ExactLevel> lev;
    if (n <= 3) {
        lev = std::make_shared<ExactLevel>(n, ExactCoeffs{}, tables_from_rules(engine(n)));
    } else if (stored_exact4_) {
        log("level 4 tables from resume file");
        lev = std::make_shared<ExactLevel>(4, ExactCoeffs{}, *stored_exact4_);
        stored_exact4_.reset();
    } else {
        log("reconstructing level 4 tables");
        lev = std::make_shared<ExactLevel>(4, ExactCoeffs{}, reconstruct_exact_tables(4, *exact(3), &rstats_));
        exact_[4] = lev;
        save_resume();
    }
    exact_[n] = lev;
    return lev;
}

std::shared_ptr<const Level<ModCoeffs>> Tower::at_point(int n, const ModPoint& pt) {
    if (n == 5) return level5(pt);
    std::string key = std::to_string(n) + "@" + point_key(pt);
    if (auto it = points_.find(key); it != points_.end()) return it->second;
    auto lev = std::make_shared<ModLevel>(specialize_level(*exact(n), ModCoeffs(pt)));
    points_[key] = lev;
    return lev;
}

std::shared_ptr<const Mod5Level> Tower::level5(const ModPoint& pt) {
    std::string key = point_key(pt);
    if (auto it = level5_.find(key); it != level5_.end()) return it->second;
    auto lower = at_point(4, pt);
    ModCoeffs f(pt);
    std::shared_ptr<const Mod5Level> lev;
    if (auto it = stored_images_.find(key); it != stored_images_.end()) {
        log("level 5 module at " + key + " from resume file");
        lev = std::make_shared<Mod5Level>(5, lower, std::move(it->second));
        stored_images_.erase(it);
    } else {
        log("enumerating level 5 module at " + key);
        KAlgebra<ModCoeffs> K(f, lower.get());
        Enumerator<ModCoeffs> e(5, f, K, gens_T5(), pt.a, pt.b, pt.c);
        if (verbose_)
            e.set_progress(
                [](const EnumStats& s) {
                    std::cerr << "[tower]   defined " << s.defined << " alive " << s.alive << " " << s.seconds << "s"
                              << std::endl;
                },
                250);
        estats_[key] = e.run();
        lev = std::make_shared<Mod5Level>(5, lower, collect_images(e, gens_T5().size(), 5));
        level5_[key] = lev;
        save_resume();
    }
    level5_[key] = lev;
    return lev;
}

ExactVec Tower::reduce(int n, const Letters& w) {
    if (n <= 3) return combo_to_vec(engine(n).reduce(w), Catalog::get(n));
    return exact(n)->reduce(w);
}

ExactVec Tower::word_map(int n, const ExactVec& x, bool reverse, bool twist) {
    auto lev = exact(n);
    const Catalog& cat = Catalog::get(n);
    Accum<ExactCoeffs> acc(lev->field(), lev->dim());
    for (const auto& [j, k] : x) {
        Letters w = cat.word(j);
        for (int& l : w) l = -l;
        if (reverse) std::reverse(w.begin(), w.end());
        acc.add_vec(reduce(n, w), twist ? k.phi() : k);
    }
    return acc.take();
}

ExactVec Tower::phi(int n, const ExactVec& x) { return word_map(n, x, false, true); }
ExactVec Tower::psi(int n, const ExactVec& x) { return word_map(n, x, true, true); }
ExactVec Tower::psi_untwisted(int n, const ExactVec& x) { return word_map(n, x, true, false); }

// Resume file: CBOR-encoded json with the level-4 tables and level-5 module
// images keyed by point.

namespace {

json exact_tables_to_json(const std::vector<ExactMatrix>& tabs) {
    json out = json::array();
    for (const auto& m : tabs) {
        json cols = json::array();
        for (const auto& c : m.cols) {
            json col = json::array();
            for (const auto& [i, k] : c)
                for (const auto& t : k.terms()) col.push_back({i, t.m.ea, t.m.eb, t.m.ec, t.k.str()});
            cols.push_back(std::move(col));
        }
        out.push_back(std::move(cols));
    }
    return out;
}

std::vector<ExactMatrix> exact_tables_from_json(const json& j) {
    std::vector<ExactMatrix> out;
    for (const auto& cols : j) {
        ExactMatrix m;
        m.dim = cols.size();
        for (const auto& col : cols) {
            std::map<std::uint32_t, std::vector<Laurent::Term>> entries;
            for (const auto& e : col)
                entries[e[0].get<std::uint32_t>()].push_back(
                    {{e[1].get<int>(), e[2].get<int>(), e[3].get<int>()}, BigInt(e[4].get<std::string>())});
            SVec<Laurent> c;
            for (auto& [i, terms] : entries) c.emplace_back(i, Laurent::from_terms(std::move(terms)));
            m.cols.push_back(std::move(c));
        }
        out.push_back(std::move(m));
    }
    return out;
}

json images_to_json(const ModuleImages<ModCoeffs>& im) {
    json out = json::array();
    for (const auto& per_t : im) {
        json slots = json::array();
        for (const auto& mv : per_t) {
            json blocks = json::array();
            for (const auto& [k, y] : mv) {
                std::vector<std::uint32_t> idx, val;
                for (const auto& [u, v] : y) {
                    idx.push_back(u);
                    val.push_back(v);
                }
                blocks.push_back({k, idx, val});
            }
            slots.push_back(std::move(blocks));
        }
        out.push_back(std::move(slots));
    }
    return out;
}

ModuleImages<ModCoeffs> images_from_json(const json& j) {
    ModuleImages<ModCoeffs> out;
    for (const auto& slots : j) {
        std::vector<Enumerator<ModCoeffs>::MVec> per_t;
        for (const auto& blocks : slots) {
            Enumerator<ModCoeffs>::MVec mv;
            for (const auto& b : blocks) {
                auto idx = b[1].get<std::vector<std::uint32_t>>();
                auto val = b[2].get<std::vector<std::uint32_t>>();
                SVec<std::uint32_t> y;
                for (std::size_t i = 0; i < idx.size(); ++i) y.emplace_back(idx[i], val[i]);
                mv.emplace_back(b[0].get<std::uint32_t>(), std::move(y));
            }
            per_t.push_back(std::move(mv));
        }
        out.push_back(std::move(per_t));
    }
    return out;
}

}  // namespace

void Tower::load_resume() {
    if (resume_path_.empty() || !std::filesystem::exists(resume_path_)) return;
    std::ifstream in(resume_path_, std::ios::binary);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json j;
    try {
        j = json::from_cbor(bytes);
        if (j.at("header").at("engine") != kEngineVersion) throw FormatError("resume file from another engine version");
        if (j.contains("exact4") && !exact_.count(4)) stored_exact4_ = exact_tables_from_json(j["exact4"]);
        for (auto& [key, im] : j.at("points").items())
            if (!level5_.count(key)) stored_images_[key] = images_from_json(im);
    } catch (const json::exception& e) {
        throw FormatError(std::string("unreadable resume file: ") + e.what());
    }
    log("resume file " + resume_path_ + " loaded");
}

void Tower::save_resume() {
    if (resume_path_.empty()) return;
    json j;
    j["header"] = file_header();
    if (exact_.count(4))
        j["exact4"] = exact_tables_to_json(exact_[4]->tables());
    else if (stored_exact4_)
        j["exact4"] = exact_tables_to_json(*stored_exact4_);
    j["points"] = json::object();
    for (const auto& [key, lev] : level5_) j["points"][key] = images_to_json(lev->images());
    for (const auto& [key, im] : stored_images_) j["points"][key] = images_to_json(im);
    auto bytes = json::to_cbor(j);
    std::string tmp = resume_path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
    std::filesystem::rename(tmp, resume_path_);
    log("resume file " + resume_path_ + " written");
}

}  // namespace hecke
