// hecke: command-line front end for the cubic Hecke algebra engine.
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "hecke/verify.hpp"

using namespace hecke;

namespace {

enum Exit { ok = 0, failed = 1, irreducible = 2, usage = 64 };

struct Config {
    int n = 3;
    std::uint32_t prime = 0;
    std::optional<long long> a, b, c;
    std::uint64_t seed = 20240917;
    int depth_limit = 32;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string out;
    std::string suite = "all";
    std::string mode = "exact";
    std::string resume;
    int gen = 1;
    bool delta_cubed = false;
    bool verbose = false;
    std::vector<std::string> words;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void emit(const Config& cfg, const json& j) {
    if (cfg.out.empty()) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << j.dump() << "\n";
}

// Point from --prime/--a/--b/--c; missing values are drawn from the seed.
ModPoint point_of(const Config& cfg) {
    std::uint32_t p = cfg.prime ? cfg.prime : 65521;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::uint32_t> d(1, p - 1);
    auto pick = [&](const std::optional<long long>& v) {
        std::uint32_t r = d(rng);
        return v ? ModP{p}.from_int(*v) : r;
    };
    std::uint32_t a = pick(cfg.a), b = pick(cfg.b), c = pick(cfg.c);
    if (c == 0) throw ZeroC();
    return ModPoint(p, a, b, c);
}

bool spec_mode(const Config& cfg) { return cfg.n == 5 || cfg.prime != 0 || cfg.mode == "spec"; }

Tower make_tower(const Config& cfg) {
    Tower t(cfg.depth_limit);
    t.set_verbose(cfg.verbose);
    if (!cfg.resume.empty()) t.set_resume_file(cfg.resume);
    return t;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// A word string, or @file holding an element in JSON.
ExactVec exact_operand(Tower& t, const Config& cfg, const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        int n = 0;
        json j;
        try {
            j = json::parse(read_file(arg.substr(1)));
        } catch (const json::parse_error& e) {
            throw ParseError(e.what());
        }
        auto v = element_from_json(j, &n);
        if (n != cfg.n) throw StrandMismatch();
        return v;
    }
    return t.reduce(cfg.n, parse_word(arg, cfg.n).letters());
}

ModVec spec_operand(Tower& t, const Config& cfg, const ModPoint& pt, const std::string& arg) {
    auto lev = t.at_point(cfg.n, pt);
    if (!arg.empty() && arg[0] == '@') {
        ModVec out;
        for (const auto& [i, k] : exact_operand(t, cfg, arg)) {
            auto v = pt.eval(k);
            if (v) out.emplace_back(i, v);
        }
        return out;
    }
    return lev->reduce(parse_word(arg, cfg.n).letters());
}

int cmd_normalize(const Config& cfg) {
    Tower t = make_tower(cfg);
    if (spec_mode(cfg)) {
        ModPoint pt = point_of(cfg);
        emit(cfg, element_to_json(cfg.n, spec_operand(t, cfg, pt, cfg.words.at(0)), pt));
    } else {
        emit(cfg, element_to_json(cfg.n, exact_operand(t, cfg, cfg.words.at(0))));
    }
    return ok;
}

int cmd_mul(const Config& cfg) {
    Tower t = make_tower(cfg);
    if (spec_mode(cfg)) {
        ModPoint pt = point_of(cfg);
        auto lev = t.at_point(cfg.n, pt);
        auto x = spec_operand(t, cfg, pt, cfg.words.at(0)), y = spec_operand(t, cfg, pt, cfg.words.at(1));
        emit(cfg, element_to_json(cfg.n, lev->multiply(x, y), pt));
    } else {
        auto lev = t.exact(cfg.n);
        auto x = exact_operand(t, cfg, cfg.words.at(0)), y = exact_operand(t, cfg, cfg.words.at(1));
        emit(cfg, element_to_json(cfg.n, lev->multiply(x, y)));
    }
    return ok;
}

int cmd_basis(const Config& cfg) {
    emit(cfg, basis_to_json(cfg.n));
    return ok;
}

int cmd_table(const Config& cfg) {
    if (cfg.gen == 0 || std::abs(cfg.gen) >= cfg.n) throw UsageError("--gen must be a signed index below n");
    Tower t = make_tower(cfg);
    if (cfg.n == 5) {
        // Full level-5 columns are too large to write out; export the images
        // of the module generators, with coefficients in A_4.
        ModPoint pt = point_of(cfg);
        auto lev = t.level5(pt);
        json gens = json::array();
        for (const auto& per_t : lev->images()) {
            json blocks = json::array();
            for (const auto& [k, y] : per_t[gen_slot(cfg.gen)])
                blocks.push_back({{"generator", k}, {"coeff", element_to_json(4, y, pt)}});
            gens.push_back(std::move(blocks));
        }
        emit(cfg, {{"header", file_header()},
                   {"n", 5},
                   {"gen", cfg.gen},
                   {"point", {{"p", pt.f.p}, {"a", pt.a}, {"b", pt.b}, {"c", pt.c}}},
                   {"generators", gens}});
    } else if (spec_mode(cfg)) {
        ModPoint pt = point_of(cfg);
        auto lev = t.exact(cfg.n);
        emit(cfg, table_to_json(cfg.n, cfg.gen, specialize_table<std::uint32_t>(lev->table(cfg.gen), ModCoeffs(pt)), pt));
    } else {
        emit(cfg, table_to_json(cfg.n, cfg.gen, t.exact(cfg.n)->table(cfg.gen)));
    }
    return ok;
}

int cmd_verify(const Config& cfg) {
    Tower t = make_tower(cfg);
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    opt.delta_cubed = cfg.delta_cubed;
    if (cfg.prime) opt.points = {point_of(cfg)};
    Report rep = run_suite(t, cfg.suite, opt);
    for (const auto& c : rep.results)
        std::cerr << (c.pass ? "pass " : "FAIL ") << c.id << " (" << c.seconds << "s)\n";
    emit(cfg, rep.to_json());
    return rep.ok() ? ok : failed;
}

int cmd_rank(const Config& cfg) {
    Tower t = make_tower(cfg);
    ModPoint pt = point_of(cfg);
    EnumStats st;
    std::size_t r = specialized_rank(t, cfg.n, pt, &st);
    emit(cfg, {{"n", cfg.n},
               {"rank", r},
               {"seed", cfg.seed},
               {"point", {{"p", pt.f.p}, {"a", pt.a}, {"b", pt.b}, {"c", pt.c}}},
               {"enumeration", {{"defined", st.defined}, {"alive", st.alive}, {"seconds", st.seconds}}}});
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact normal forms and verification for the cubic Hecke algebras A_2 .. A_5"};
    app.require_subcommand(1);
    Config cfg;

    auto level = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Level (strand count)")->check(CLI::Range(2, 5));
    };
    auto point = [&](CLI::App* sub) {
        sub->add_option("--prime", cfg.prime, "Work over F_p at a point (0: exact over R)");
        sub->add_option("--a", cfg.a, "Value of a at the point");
        sub->add_option("--b", cfg.b, "Value of b at the point");
        sub->add_option("--c", cfg.c, "Value of c at the point");
        sub->add_option("--seed", cfg.seed, "Seed for unspecified point values");
    };
    auto common = [&](CLI::App* sub) {
        sub->add_option("--depth-limit", cfg.depth_limit, "Search depth of the rewrite engine")->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "Output file (default: stdout)");
        sub->add_option("--resume", cfg.resume, "Cache file for level-4 tables and level-5 modules");
        sub->add_flag("--verbose", cfg.verbose, "Progress on stderr");
    };

    auto* normalize = app.add_subcommand("normalize", "Normal form of a braid word");
    level(normalize), point(normalize), common(normalize);
    normalize->add_option("word", cfg.words, "Word such as \"3 -2 1\"")->required()->expected(1);

    auto* mul = app.add_subcommand("mul", "Product of two words or @element.json files");
    level(mul), point(mul), common(mul);
    mul->add_option("operands", cfg.words, "Two words or @files")->required()->expected(2);

    auto* basis = app.add_subcommand("basis", "Export the basis words");
    level(basis), common(basis);

    auto* table = app.add_subcommand("table", "Export the right action table of one generator");
    level(table), point(table), common(table);
    table->add_option("--gen", cfg.gen, "Signed generator index");
    table->add_option("--mode", cfg.mode, "exact or spec")->check(CLI::IsMember({"exact", "spec"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    point(verify), common(verify);
    verify->add_option("--suite", cfg.suite, "identities, relations, center, group, homomorphism, tower, all, a5")
        ->check(CLI::IsMember({"identities", "relations", "center", "group", "homomorphism", "tower", "all", "a5"}));
    verify->add_flag("--delta-cubed", cfg.delta_cubed, "Include the delta^3 check in the a5 suite");

    auto* rank = app.add_subcommand("rank", "Dimension over F_p at a point, by vector enumeration");
    level(rank), point(rank), common(rank);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (cfg.prime && (cfg.prime % 2 == 0 || !is_prime(cfg.prime) || cfg.prime >= (1u << 31)))
            throw UsageError("--prime must be 0 or an odd prime below 2^31");
        if (*normalize) return cmd_normalize(cfg);
        if (*mul) return cmd_mul(cfg);
        if (*basis) return cmd_basis(cfg);
        if (*table) return cmd_table(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*rank) return cmd_rank(cfg);
    } catch (const IrreducibleWord& e) {
        json trace = json::array();
        for (const auto& s : e.trace) trace.push_back({{"rule", s.rule}, {"position", s.position}, {"terms", s.terms}});
        std::cerr << e.what() << "\n" << json{{"word", e.word}, {"trace", trace}}.dump() << "\n";
        return irreducible;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const StrandMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const ZeroC& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failed;
    }
    return usage;
}
