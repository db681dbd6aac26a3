#pragma once

#include "lattix/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace lattix {

// Sieve-backed tables of phi, omega (distinct prime divisors) and the Mobius
// function for 1..limit. Built once, immutable afterwards.
struct TotientTable {
    std::uint32_t limit = 0;
    std::vector<std::uint32_t> phi;   // index 1..limit
    std::vector<std::uint8_t> omega;
    std::vector<std::int8_t> mobius;

    static TotientTable build(std::uint32_t limit);
};

// Euler totient by trial-division factorization. n = 0 is invalid.
std::uint64_t phi(std::uint64_t n);

// Number of distinct prime divisors; omega(1) = 0.
std::uint64_t omega(std::uint64_t n);

// phi_m(n) = |{a in [m] : gcd(a, n) = 1}| via the Mobius sum over squarefree
// divisors of n: sum_{e | rad(n)} mu(e) * floor(m/e).
std::uint64_t phi_m(std::uint64_t m, std::uint64_t n);

// Direct gcd count; the oracle for phi_m.
std::uint64_t phi_m_bruteforce(std::uint64_t m, std::uint64_t n);

struct TotientSums {
    mpz_class sum_phi;       // sum of phi(j), j <= n
    mpz_class sum_two_omega; // sum of 2^omega(j), j <= n
    // Exact rational sum of phi(j)/j, computed only when n <= exact_cap (the
    // denominator grows like lcm(1..n)).
    std::optional<Rat> phi_over_j;
    // Certified integer bounds for sum phi(j)/j with denominator 2^32:
    // lo/2^32 <= true sum <= hi/2^32. Pure integer arithmetic.
    mpz_class phi_over_j_lo;
    mpz_class phi_over_j_hi;
};

TotientSums totient_sum(const TotientTable& table, std::uint64_t n, std::uint64_t exact_cap = 20000);
TotientSums totient_sum(std::uint64_t n, std::uint64_t exact_cap = 20000);

// All coprime pairs (s, t) with t in [t_lo, t_hi] and 1 <= s <= floor(s_bound(t)),
// sorted by (t, s). A bound below 1 contributes nothing; an empty range gives
// an empty list.
std::vector<std::pair<long long, long long>> coprime_pairs(
    long long t_lo, long long t_hi, const std::function<Rat(long long)>& s_bound);

} // namespace lattix
