#pragma once

#include "lattix/quadext.hpp"
#include "lattix/rational.hpp"

#include <variant>

namespace lattix {

// Exact number: a rational or an element of one fixed real quadratic
// extension. Kept normalized: a QuadExt with zero radical part collapses to
// the plain rational, so structural equality is value equality.
class Number {
public:
    Number() : v_(Rat()) {}
    Number(Rat r) : v_(std::move(r)) {}        // NOLINT
    Number(long n) : v_(Rat(n)) {}             // NOLINT
    Number(QuadExt q) {
        if (q.is_rational()) v_ = q.rational_part();
        else v_ = std::move(q);
    }

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    const Rat& as_rat() const {
        if (!is_rational()) throw std::invalid_argument("Number: not rational");
        return std::get<Rat>(v_);
    }
    const QuadExt& as_quad() const {
        if (is_rational()) throw std::invalid_argument("Number: not a quadratic irrational");
        return std::get<QuadExt>(v_);
    }

    bool is_zero() const { return is_rational() && as_rat().is_zero(); }
    int sign() const { return is_rational() ? as_rat().sign() : std::get<QuadExt>(v_).sign(); }
    Number abs() const { return sign() < 0 ? -*this : *this; }

    Number operator-() const {
        return is_rational() ? Number(-as_rat()) : Number(-std::get<QuadExt>(v_));
    }
    Number operator+(const Number& o) const { return apply(o, [](auto&& x, auto&& y) { return x + y; }); }
    Number operator-(const Number& o) const { return apply(o, [](auto&& x, auto&& y) { return x - y; }); }
    Number operator*(const Number& o) const { return apply(o, [](auto&& x, auto&& y) { return x * y; }); }
    Number operator/(const Number& o) const {
        if (o.is_zero()) throw std::invalid_argument("Number: division by zero");
        return apply(o, [](auto&& x, auto&& y) { return x / y; });
    }

    bool operator==(const Number& o) const {
        if (is_rational() != o.is_rational()) return false; // normalization makes kinds disjoint
        if (is_rational()) return as_rat() == o.as_rat();
        return std::get<QuadExt>(v_) == std::get<QuadExt>(o.v_);
    }
    bool operator!=(const Number& o) const { return !(*this == o); }

    int cmp(const Number& o) const {
        if (is_rational() && o.is_rational()) return as_rat().cmp(o.as_rat());
        long d = is_rational() ? std::get<QuadExt>(o.v_).radicand() : std::get<QuadExt>(v_).radicand();
        return promote(d).cmp(o.promote(d));
    }
    bool operator<(const Number& o) const { return cmp(o) < 0; }
    bool operator<=(const Number& o) const { return cmp(o) <= 0; }
    bool operator>(const Number& o) const { return cmp(o) > 0; }
    bool operator>=(const Number& o) const { return cmp(o) >= 0; }

    QuadExt promote(long d) const {
        if (is_rational()) return QuadExt(as_rat(), Rat(0), d);
        return std::get<QuadExt>(v_);
    }

    double approx() const { return is_rational() ? as_rat().approx() : std::get<QuadExt>(v_).approx(); }

    std::string to_string() const {
        return is_rational() ? as_rat().to_string() : std::get<QuadExt>(v_).to_string();
    }

    // Parses the formats produced by to_string: "p/q" or "p/q+r/s*sqrt(d)"
    // (with "-" for a negative radical part and "/1" omitted).
    static Number parse(std::string_view text);

    std::size_t hash() const {
        if (is_rational()) return as_rat().hash();
        return std::get<QuadExt>(v_).hash() ^ 0x517cc1b727220a95ULL;
    }

private:
    template <typename F>
    Number apply(const Number& o, F&& f) const {
        if (is_rational() && o.is_rational()) return Number(f(as_rat(), o.as_rat()));
        long d = is_rational() ? std::get<QuadExt>(o.v_).radicand() : std::get<QuadExt>(v_).radicand();
        return Number(f(promote(d), o.promote(d)));
    }

    std::variant<Rat, QuadExt> v_;
};

struct NumberHash {
    std::size_t operator()(const Number& n) const { return n.hash(); }
};

inline Number Number::parse(std::string_view text) {
    auto star = text.find("*sqrt(");
    if (star == std::string_view::npos) return Number(Rat::parse(text));
    if (text.back() != ')') throw std::invalid_argument("Number: cannot parse '" + std::string(text) + "'");
    long d = std::stol(std::string(text.substr(star + 6, text.size() - star - 7)));
    std::string_view head = text.substr(0, star);
    // Split "a+b" / "a-b" at the sign introducing the radical coefficient:
    // the last '+' or '-' not in position 0 and not directly after '/'.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') { split = i; break; }
    }
    if (split == std::string_view::npos)
        throw std::invalid_argument("Number: cannot parse '" + std::string(text) + "'");
    Rat a = Rat::parse(head.substr(0, split));
    Rat b = Rat::parse(head.substr(split + 1));
    if (head[split] == '-') b = -b;
    return Number(QuadExt(a, b, d));
}

} // namespace lattix
