#include "hecke/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace hecke {

Laurent::Laurent(long v) {
    if (v != 0) terms_.push_back({{0, 0, 0}, BigInt(v)});
}

Laurent Laurent::monomial(const BigInt& k, int ea, int eb, int ec) {
    if (ea < 0 || eb < 0) throw std::invalid_argument("negative exponent of a or b");
    Laurent r;
    if (k != 0) r.terms_.push_back({{ea, eb, ec}, k});
    return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
    for (auto& t : terms)
        if (t.m.ea < 0 || t.m.eb < 0) throw std::invalid_argument("negative exponent of a or b");
    Laurent r;
    r.terms_ = std::move(terms);
    r.canonicalize();
    return r;
}

void Laurent::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.m < y.m; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().k += t.k;
        else
            out.push_back(std::move(t));
        if (out.back().k == 0) out.pop_back();
    }
    // a zero sum can leave a term equal to an earlier one only if it was popped; re-merge is unnecessary
    terms_ = std::move(out);
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_[0].m == Monomial{} && terms_[0].k == 1;
}

bool Laurent::is_unit() const {
    return terms_.size() == 1 && terms_[0].m.ea == 0 && terms_[0].m.eb == 0 &&
           (terms_[0].k == 1 || terms_[0].k == -1);
}

Laurent Laurent::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("not a unit of R: " + str());
    return monomial(terms_[0].k, 0, 0, -terms_[0].m.ec);
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.k = -t.k;
    return r;
}

static std::vector<Laurent::Term> merge_terms(const std::vector<Laurent::Term>& x,
                                              const std::vector<Laurent::Term>& y, bool negate) {
    std::vector<Laurent::Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].m < y[j].m)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].m < x[i].m) {
            out.push_back(y[j++]);
            if (negate) out.back().k = -out.back().k;
        } else {
            BigInt k = negate ? BigInt(x[i].k - y[j].k) : BigInt(x[i].k + y[j].k);
            if (k != 0) out.push_back({x[i].m, std::move(k)});
            ++i;
            ++j;
        }
    }
    return out;
}

Laurent& Laurent::operator+=(const Laurent& y) {
    if (y.terms_.empty()) return *this;
    if (terms_.empty()) return *this = y;
    terms_ = merge_terms(terms_, y.terms_, false);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& y) {
    if (y.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, y.terms_, true);
    return *this;
}

Laurent operator*(const Laurent& x, const Laurent& y) {
    Laurent r;
    if (x.terms_.empty() || y.terms_.empty()) return r;
    if (x.terms_.size() == 1 && y.terms_.size() == 1) {
        const auto& s = x.terms_[0];
        const auto& t = y.terms_[0];
        r.terms_.push_back({{s.m.ea + t.m.ea, s.m.eb + t.m.eb, s.m.ec + t.m.ec}, s.k * t.k});
        return r;
    }
    r.terms_.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& s : x.terms_)
        for (const auto& t : y.terms_)
            r.terms_.push_back({{s.m.ea + t.m.ea, s.m.eb + t.m.eb, s.m.ec + t.m.ec}, s.k * t.k});
    r.canonicalize();
    return r;
}

Laurent Laurent::phi() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        BigInt k = ((t.m.ea + t.m.eb) % 2) ? BigInt(-t.k) : t.k;
        out.push_back({{t.m.eb, t.m.ea, -t.m.ea - t.m.eb - t.m.ec}, std::move(k)});
    }
    return from_terms(std::move(out));
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        BigInt k = t.k;
        bool neg = k < 0;
        if (neg) k = -k;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool constant = t.m == Monomial{};
        bool need_star = false;
        if (k != 1 || constant) {
            os << k;
            need_star = true;
        }
        auto var = [&](char v, int e) {
            if (e == 0) return;
            if (need_star) os << '*';
            os << v;
            if (e != 1) os << '^' << e;
            need_star = true;
        };
        var('a', t.m.ea);
        var('b', t.m.eb);
        var('c', t.m.ec);
    }
    return os.str();
}

std::size_t Laurent::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](std::size_t v) { h = (h ^ v) * 1099511628211ull; };
    for (const auto& t : terms_) {
        mix(static_cast<std::size_t>(t.m.ea));
        mix(static_cast<std::size_t>(t.m.eb));
        mix(static_cast<std::size_t>(t.m.ec));
        mix(std::hash<std::string>{}(t.k.str()));
    }
    return h;
}

// Grammar: sum of terms; term := [int] ['*'] factor ('*' factor)*; factor := (a|b|c)['^' int]
Laurent parse_laurent(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty coefficient");
    std::size_t i = 0;
    auto read_int = [&](bool allow_sign) -> BigInt {
        std::size_t st = i;
        if (allow_sign && i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == st || (i == st + 1 && s[st] == '-')) throw std::invalid_argument("bad integer in: " + text);
        return BigInt(s.substr(st, i - st));
    };
    Laurent r;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected + or - in: " + text);
        }
        first = false;
        BigInt k = 1;
        Monomial m;
        bool any = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            k = read_int(false);
            any = true;
            if (i < s.size() && s[i] == '*') ++i;
        }
        while (i < s.size() && (s[i] == 'a' || s[i] == 'b' || s[i] == 'c')) {
            char v = s[i++];
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = static_cast<int>(read_int(true));
            }
            (v == 'a' ? m.ea : v == 'b' ? m.eb : m.ec) += e;
            any = true;
            if (i < s.size() && s[i] == '*') ++i;
        }
        if (!any) throw std::invalid_argument("bad term in: " + text);
        r += Laurent::monomial(sign * k, m.ea, m.eb, m.ec);
    }
    return r;
}

SpecPoint SpecPoint::mod(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c) {
    SpecPoint s;
    s.p = p;
    ModP f{p};
    s.a = f.from_int(a);
    s.b = f.from_int(b);
    s.c = f.from_int(c);
    return s;
}

Rational eval(const Laurent& x, const SpecPoint& at) {
    if (at.p == 0) {
        if (at.c == 0) throw ZeroC();
        Rational sum = 0;
        for (const auto& t : x.terms()) {
            Rational v = Rational(t.k);
            for (int e = 0; e < t.m.ea; ++e) v *= at.a;
            for (int e = 0; e < t.m.eb; ++e) v *= at.b;
            Rational cc = t.m.ec >= 0 ? at.c : Rational(1) / at.c;
            for (int e = 0; e < std::abs(t.m.ec); ++e) v *= cc;
            sum += v;
        }
        return sum;
    }
    ModP f{at.p};
    auto red = [&](const Rational& q) {
        std::uint32_t num = f.from_big(boost::multiprecision::numerator(q));
        std::uint32_t den = f.from_big(boost::multiprecision::denominator(q));
        if (den == 0) throw std::domain_error("denominator vanishes mod p");
        return f.mul(num, f.inv(den));
    };
    std::uint32_t c = red(at.c);
    if (c == 0) throw ZeroC();
    ModPoint pt(at.p, red(at.a), red(at.b), c);
    return Rational(pt.eval(x));
}

std::uint32_t ModP::pow(std::uint32_t x, std::uint64_t e) const {
    std::uint64_t r = 1 % p, b = x % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t ModP::inv(std::uint32_t x) const {
    if (x % p == 0) throw std::domain_error("inverse of zero mod p");
    std::int64_t t = 0, nt = 1, r = p, nr = x % p;
    while (nr) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t ModP::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t ModP::from_big(const BigInt& v) const {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

ModPoint::ModPoint(std::uint32_t p, std::uint32_t a_, std::uint32_t b_, std::uint32_t c_)
    : f{p}, a(a_ % p), b(b_ % p), c(c_ % p), cinv(0) {
    if (c == 0) throw ZeroC();
    cinv = f.inv(c);
}

std::uint32_t ModPoint::eval(const Laurent& x) const {
    std::uint32_t sum = 0;
    for (const auto& t : x.terms()) {
        std::uint32_t v = f.from_big(t.k);
        v = f.mul(v, f.pow(a, t.m.ea));
        v = f.mul(v, f.pow(b, t.m.eb));
        v = f.mul(v, t.m.ec >= 0 ? f.pow(c, t.m.ec) : f.pow(cinv, -static_cast<std::int64_t>(t.m.ec)));
        sum = f.add(sum, v);
    }
    return sum;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace hecke
