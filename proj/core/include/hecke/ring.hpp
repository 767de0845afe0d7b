#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Monomial {
    int ea = 0;
    int eb = 0;
    int ec = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Element of Z[a, b, c, c^-1]. Terms are kept sorted by (ea, eb, ec) with
// nonzero coefficients, so == is structural.
class Laurent {
public:
    struct Term {
        Monomial m;
        BigInt k;
        bool operator==(const Term&) const = default;
    };

    Laurent() = default;
    Laurent(long v);
    static Laurent monomial(const BigInt& k, int ea, int eb, int ec);
    static Laurent from_terms(std::vector<Term> terms);
    static Laurent a() { return monomial(1, 1, 0, 0); }
    static Laurent b() { return monomial(1, 0, 1, 0); }
    static Laurent c() { return monomial(1, 0, 0, 1); }
    static Laurent c_pow(int e) { return monomial(1, 0, 0, e); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Units of R are exactly the +-c^k.
    bool is_unit() const;
    Laurent unit_inverse() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& y);
    Laurent& operator-=(const Laurent& y);
    Laurent& operator*=(const Laurent& y) { return *this = *this * y; }
    friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
    friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }
    friend Laurent operator*(const Laurent& x, const Laurent& y);
    bool operator==(const Laurent& y) const { return terms_ == y.terms_; }

    // a -> -b/c, b -> -a/c, c -> 1/c
    Laurent phi() const;

    std::string str() const;
    std::size_t hash() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

Laurent parse_laurent(const std::string& text);

// Target of a specialization: p = 0 means Q, otherwise F_p.
struct SpecPoint {
    std::uint32_t p = 0;
    Rational a = 0, b = 0, c = 1;
    static SpecPoint mod(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c);
};

struct ZeroC : std::domain_error {
    ZeroC() : std::domain_error("specialization has c = 0") {}
};

// Over F_p the result is the canonical representative in [0, p).
Rational eval(const Laurent& x, const SpecPoint& at);

// Arithmetic mod a prime below 2^31.
struct ModP {
    std::uint32_t p;
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
        std::uint32_t s = x + y;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return x >= y ? x - y : x + p - y; }
    std::uint32_t neg(std::uint32_t x) const { return x ? p - x : 0; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p);
    }
    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t x) const;
    std::uint32_t from_int(std::int64_t v) const;
    std::uint32_t from_big(const BigInt& v) const;
};

struct ModPoint {
    ModP f;
    std::uint32_t a, b, c, cinv;
    ModPoint(std::uint32_t p, std::uint32_t a, std::uint32_t b, std::uint32_t c);
    std::uint32_t eval(const Laurent& x) const;
};

bool is_prime(std::uint64_t n);

}  // namespace hecke
