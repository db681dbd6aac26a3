#pragma once

#include "lattix/rational.hpp"

#include <cmath>

namespace lattix {

// True iff d is a valid radicand for a real quadratic extension: a positive
// squarefree integer >= 2 (so sqrt(d) is irrational).
inline bool valid_radicand(long d) {
    if (d < 2) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

// Element a + b*sqrt(d) of the real quadratic extension Q(sqrt(d)), exact.
// All elements taking part in one computation must share the same d; mixing
// radicands throws. b may be zero here; the Number wrapper collapses that
// case back to a plain rational.
class QuadExt {
public:
    QuadExt(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (!valid_radicand(d)) throw std::invalid_argument("QuadExt: d must be squarefree and >= 2");
    }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    long radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt operator+(const QuadExt& o) const { check_d(o); return QuadExt(a_ + o.a_, b_ + o.b_, d_); }
    QuadExt operator-(const QuadExt& o) const { check_d(o); return QuadExt(a_ - o.a_, b_ - o.b_, d_); }
    QuadExt operator*(const QuadExt& o) const {
        check_d(o);
        return QuadExt(a_ * o.a_ + b_ * o.b_ * Rat(d_), a_ * o.b_ + b_ * o.a_, d_);
    }
    QuadExt operator/(const QuadExt& o) const {
        check_d(o);
        if (o.is_zero()) throw std::invalid_argument("QuadExt: division by zero");
        // Multiply by the conjugate; the norm a^2 - b^2 d is nonzero for
        // nonzero elements because d is not a square.
        Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * Rat(d_);
        return QuadExt((a_ * o.a_ - b_ * o.b_ * Rat(d_)) / norm, (b_ * o.a_ - a_ * o.b_) / norm, d_);
    }

    bool operator==(const QuadExt& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    // Exact sign of a + b*sqrt(d), decided with integer squares only.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 vs b^2 d; the larger magnitude wins.
        int c = (a_ * a_).cmp(b_ * b_ * Rat(d_));
        if (c == 0) return 0; // impossible for valid d, kept for safety
        return c > 0 ? sa : sb;
    }

    int cmp(const QuadExt& o) const { check_d(o); return (*this - o).sign(); }
    bool operator<(const QuadExt& o) const { return cmp(o) < 0; }

    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    double approx() const;

    std::string to_string() const {
        std::string s = a_.to_string();
        s += b_.sign() < 0 ? "-" : "+";
        s += b_.abs().to_string();
        s += "*sqrt(" + std::to_string(d_) + ")";
        return s;
    }

    std::size_t hash() const { return (a_.hash() * 131 + b_.hash()) * 131 + static_cast<std::size_t>(d_); }

private:
    void check_d(const QuadExt& o) const {
        if (d_ != o.d_) throw std::invalid_argument("QuadExt: mismatched radicands");
    }
    Rat a_, b_;
    long d_;
};

inline double QuadExt::approx() const {
    return a_.approx() + b_.approx() * std::sqrt(static_cast<double>(d_));
}

// Exact product in the same extension (errors on mismatched d).
inline QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }

} // namespace lattix
