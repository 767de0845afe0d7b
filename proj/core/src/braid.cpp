#include "hecke/braid.hpp"

#include <cstdlib>
#include <sstream>

namespace hecke {

Word::Word(int n, Letters letters) : n_(n), letters_(std::move(letters)) {
    if (n < 2) throw IndexOutOfRange("strand count must be at least 2");
    for (int l : letters_)
        if (l == 0 || std::abs(l) > n - 1)
            throw IndexOutOfRange("letter " + std::to_string(l) + " outside 1.." + std::to_string(n - 1));
}

Letters free_reduce(const Letters& w) {
    Letters out;
    out.reserve(w.size());
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word free_reduce(const Word& w) { return Word(w.n(), free_reduce(w.letters())); }

Word concat(const Word& u, const Word& v) {
    if (u.n() != v.n()) throw StrandMismatch();
    Letters l = u.letters();
    l.insert(l.end(), v.letters().begin(), v.letters().end());
    return Word(u.n(), free_reduce(l));
}

Letters inverse(const Letters& w) {
    Letters out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

Word inverse(const Word& w) { return Word(w.n(), inverse(w.letters())); }

Word shift(const Word& w) {
    Letters l = w.letters();
    for (int& x : l) x += x > 0 ? 1 : -1;
    return Word(w.n() + 1, std::move(l));
}

Word mirror(const Word& w) {
    Letters l = w.letters();
    for (int& x : l) x = x > 0 ? w.n() - x : -(w.n() + x);
    return Word(w.n(), std::move(l));
}

Word ad_delta(const Word& w) {
    Letters l = w.letters();
    for (int& x : l) {
        int i = std::abs(x);
        if (i > 3) throw IndexOutOfRange("ad_delta is defined on s_1, s_2, s_3 only");
        x = x > 0 ? 4 - i : -(4 - i);
    }
    return Word(w.n(), std::move(l));
}

Word embed(const Word& w, int n) {
    if (n < w.n()) throw IndexOutOfRange("cannot embed into fewer strands");
    return Word(n, w.letters());
}

namespace {

Letters repeat(const Letters& w, int k) {
    Letters out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

Letters join(std::initializer_list<Letters> parts) {
    Letters out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// y_n = s_{n-1} ... s_2 s_1^2 s_2 ... s_{n-1}
Letters y_word(int n) {
    Letters out;
    for (int i = n - 1; i >= 1; --i) out.push_back(i);
    for (int i = 1; i <= n - 1; ++i) out.push_back(i);
    return out;
}

Letters c_word(int n) {
    Letters cyc;
    for (int i = 1; i <= n - 1; ++i) cyc.push_back(i);
    return repeat(cyc, n);
}

}  // namespace

Word special(const std::string& name, int n) {
    const Letters s_pos{2}, s_neg{-2}, p_pos{1, 3}, p_neg{-1, -3};
    Letters l;
    int need = 4;
    if (name == "delta_garside") {
        l = {1, 2, 3, 1, 2, 1};
    } else if (name == "w0") {
        l = y_word(4);
    } else if (name == "w_plus") {
        l = {3, -2, 1, -2, 3};
    } else if (name == "w_minus") {
        l = {-3, 2, -1, 2, -3};
    } else if (name == "delta5") {
        l = y_word(5);
        need = 5;
    } else if (name == "c_n") {
        l = c_word(n);
        need = n;
    } else if (name == "y_n") {
        l = y_word(n);
        need = n;
    } else if (name == "x_plus") {
        l = join({s_pos, p_pos, s_neg, p_pos, s_pos});
    } else if (name == "x_minus") {
        l = join({s_neg, p_neg, s_pos, p_neg, s_neg});
    } else if (name == "y_plus_word") {
        l = join({s_pos, p_neg, s_pos, p_neg, s_pos});
    } else if (name == "y_minus_word") {
        l = join({s_neg, p_pos, s_neg, p_pos, s_neg});
    } else {
        throw UnknownName("unknown special element: " + name);
    }
    if (n < need) throw IndexOutOfRange(name + " needs at least " + std::to_string(need) + " strands");
    return Word(n, std::move(l));
}

std::strong_ordering term_compare(const Letters& x, const Letters& y) {
    if (x.size() != y.size()) return x.size() <=> y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        int kx = letter_key(x[i]), ky = letter_key(y[i]);
        if (kx != ky) return kx <=> ky;
    }
    return std::strong_ordering::equal;
}

Letters parse_letters(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    Letters out;
    while (is >> tok) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad letter token '" + tok + "'");
        }
        if (pos != tok.size() || v == 0 || tok[0] == '+') throw ParseError("bad letter token '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

Word parse_word(const std::string& text, int n) {
    Letters l = parse_letters(text);
    for (int x : l)
        if (std::abs(x) > n - 1) throw ParseError("letter " + std::to_string(x) + " out of range for n=" + std::to_string(n));
    return Word(n, std::move(l));
}

std::string format_letters(const Letters& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace hecke
