#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lattix {

// gmpxx has no long long overloads; on this platform long is 64-bit.
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

inline std::size_t hash_mpz(const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b97f4a7c15ULL;
    const std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
        h = (h * 1099511628211ULL) ^ mpz_getlimbn(z.get_mpz_t(), i);
    return h;
}

// Exact rational in canonical form: positive denominator, gcd(|num|, den) = 1,
// zero represented as 0/1. Equality and hashing are structural on the canonical
// form; no operation ever goes through floating point.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT: implicit integer promotion is intended
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat reciprocal() const {
        if (is_zero()) throw std::invalid_argument("Rat: reciprocal of zero");
        return Rat(den(), num());
    }
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }
    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    int cmp(const Rat& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()); }

    // For thresholds and report output only; never used in equality or counting.
    double approx() const { return v_.get_d(); }

    std::string to_string() const {
        std::string s = num().get_str();
        if (!is_integer()) s += "/" + den().get_str();
        return s;
    }

    // Accepts "p", "-p", "p/q", "-p/q".
    static Rat parse(std::string_view text);
    // Accepts plain decimals such as "2", "1.5", "-0.25" (exact, base 10).
    static Rat parse_decimal(std::string_view text);

    std::size_t hash() const { return hash_mpz(num()) * 31 + hash_mpz(den()); }

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_; // kept canonical: GMP mpq arithmetic preserves canonical form
};

// Canonical rational from a (possibly unreduced, possibly negative-denominator)
// fraction.
inline Rat canonical(const mpz_class& num, const mpz_class& den) { return Rat(num, den); }
inline Rat canonical(long num, long den) { return Rat(num, den); }

// The unique coprime (s, t) with k = s/t for a positive rational k.
inline std::pair<mpz_class, mpz_class> st_of(const Rat& k) {
    if (k.sign() <= 0) throw std::invalid_argument("st_of: k must be positive");
    return {k.num(), k.den()};
}

inline Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        mpz_class n;
        if (n.set_str(std::string(text), 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + std::string(text) + "'");
        return Rat(n);
    }
    mpz_class n, d;
    if (n.set_str(std::string(text.substr(0, slash)), 10) != 0 ||
        d.set_str(std::string(text.substr(slash + 1)), 10) != 0)
        throw std::invalid_argument("Rat: cannot parse '" + std::string(text) + "'");
    if (d == 0) throw std::invalid_argument("Rat: zero denominator in '" + std::string(text) + "'");
    return Rat(n, d);
}

inline Rat Rat::parse_decimal(std::string_view text) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return parse(text);
    bool neg = !text.empty() && text[0] == '-';
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (frac.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("Rat: cannot parse decimal '" + std::string(text) + "'");
    digits += frac;
    mpz_class n;
    if (n.set_str(digits, 10) != 0)
        throw std::invalid_argument("Rat: cannot parse decimal '" + std::string(text) + "'");
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    (void)neg; // sign already part of `digits`
    return Rat(n, d);
}

} // namespace lattix
