#pragma once

#include "lattix/errors.hpp"
#include "lattix/numberset.hpp"

#include <optional>
#include <string>

namespace lattix {

// Default cap for the O(n^4) quadruple-enumeration oracles.
inline constexpr std::size_t kEnergyOracleCap = 60;

// r_{[m]/[m]}(k): pairs (x, y) in [m]^2 with x/y = k, closed form
// floor(m / max(s(k), t(k))).
long long r_mm(long long m, const Rat& k);

// r^(2)_{[m]/[m]}(k): quadruples (x,y,z,w) in [m]^4 with (xy)/(zw) = k,
// counted exactly through the multiset of pair products of [m]^2.
long long r2_mm(long long m, const Rat& k, long long m_cap = 512);

// Hashed energies: group pair sums (or products) by exact key, sum of
// squared multiplicities.
long long add_energy(const NumberSet& A);
long long mult_energy(const NumberSet& A);
long long mult_energy_bipartite(const NumberSet& A, const NumberSet& B);

// Quadruple-enumeration oracles; reject inputs above the cap.
long long add_energy_oracle(const NumberSet& A, std::size_t cap = kEnergyOracleCap);
long long mult_energy_oracle(const NumberSet& A, std::size_t cap = kEnergyOracleCap);
long long mult_energy_bipartite_oracle(const NumberSet& A, const NumberSet& B,
                                       std::size_t cap = kEnergyOracleCap);

// E^x(A, [n]+x) for a shift that is rational or a quadratic irrational.
// Requires 0 not in A.
long long shifted_mult_energy(const NumberSet& A, long n, const Number& x);

// r_{x,n}(y) = |{(p,q) in [n]^2 : y = (p+x)/(q+x)}| for irrational x.
long long r_xn(const QuadExt& x, long n, const Number& y);

// Rescales A (0 not in A) to a set B of nonzero integers with |B| = |A| and
// E^x(A,[n]) <= E^x(B,[n]) for every n: partition into classes under
// "positive rational ratio", spread classes by powers of m, clear
// denominators. The output is n-independent.
NumberSet normalize_to_integers(const NumberSet& A);

NumberSet sumset(const NumberSet& A);

struct EnergyReport {
    long long size_a = 0;
    long long size_b = 0;
    long long additive = 0;
    long long multiplicative = 0;
    long long sumset_size = 0;
    std::string method; // "hashed" or "oracle"
    std::optional<long long> bipartite; // E^x(A, [m]) when an interval is given
    std::optional<long long> shifted;   // E^x(A, [m]+x) when a shift is given
};

EnergyReport energy_report(const NumberSet& A, std::optional<long> interval,
                           std::optional<Number> shift, bool use_oracle);

} // namespace lattix
