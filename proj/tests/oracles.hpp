// Test-only brute-force oracles, written directly from the definitions and
// kept independent of the library's fast paths.
#pragma once

#include "lattix/geom.hpp"
#include "lattix/number.hpp"

#include <numeric>
#include <vector>

namespace oracle {

using lattix::GridSpec;
using lattix::Line;
using lattix::Number;
using lattix::ProductSet;
using lattix::Rat;

// |{(x,y) in [m]^2 : x/y = k}| by direct scan.
inline long long r_mm(long long m, const Rat& k) {
    long long count = 0;
    for (long long x = 1; x <= m; ++x)
        for (long long y = 1; y <= m; ++y)
            if (Rat(x, y) == k) ++count;
    return count;
}

// |{(x,y,z,w) in [m]^4 : (xy)/(zw) = k}| by direct scan; tiny m only.
inline long long r2_mm(long long m, const Rat& k) {
    long long count = 0;
    for (long long x = 1; x <= m; ++x)
        for (long long y = 1; y <= m; ++y)
            for (long long z = 1; z <= m; ++z)
                for (long long w = 1; w <= m; ++w)
                    if (Rat(x * y, z * w) == k) ++count;
    return count;
}

inline long long add_energy(const std::vector<Number>& a) {
    long long count = 0;
    for (const auto& p : a)
        for (const auto& q : a)
            for (const auto& r : a)
                for (const auto& s : a)
                    if (p + q == r + s) ++count;
    return count;
}

inline long long mult_energy(const std::vector<Number>& a) {
    long long count = 0;
    for (const auto& p : a)
        for (const auto& q : a)
            for (const auto& r : a)
                for (const auto& s : a)
                    if (p * q == r * s) ++count;
    return count;
}

inline long long mult_energy_bipartite(const std::vector<Number>& a, const std::vector<Number>& b) {
    long long count = 0;
    for (const auto& p : a)
        for (const auto& q : b)
            for (const auto& r : a)
                for (const auto& s : b)
                    if (p * q == r * s) ++count;
    return count;
}

inline long long phi(long long n) {
    long long count = 0;
    for (long long i = 1; i <= n; ++i)
        if (std::gcd(i, n) == 1) ++count;
    return count;
}

inline long long phi_m(long long m, long long n) {
    long long count = 0;
    for (long long a = 1; a <= m; ++a)
        if (std::gcd(a, n) == 1) ++count;
    return count;
}

// Grid points on a line by scanning every column.
inline long long grid_line_count(const GridSpec& g, const Line& line) {
    long long count = 0;
    if (line.slope.is_vertical()) {
        for (long long x = 1; x <= g.w; ++x)
            if (line.intercept == Number(x)) count += g.h;
        return count;
    }
    for (long long x = 1; x <= g.w; ++x) {
        const Number y = line.y_at(Number(x));
        for (long long yy = 1; yy <= g.h; ++yy)
            if (y == Number(yy)) ++count;
    }
    return count;
}

// Incidences by substituting every point into every line.
inline long long incidences(const ProductSet& p, const std::vector<Line>& lines) {
    long long count = 0;
    const auto as = p.A.values();
    const auto bs = p.B.values();
    for (const auto& line : lines)
        for (const auto& a : as)
            for (const auto& b : bs)
                if (line.contains(a, b)) ++count;
    return count;
}

} // namespace oracle
