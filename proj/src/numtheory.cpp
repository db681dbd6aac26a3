#include "lattix/numtheory.hpp"

#include <numeric>

namespace lattix {

TotientTable TotientTable::build(std::uint32_t limit) {
    if (limit < 1) throw std::invalid_argument("TotientTable: limit must be positive");
    TotientTable t;
    t.limit = limit;
    t.phi.assign(limit + 1, 0);
    t.omega.assign(limit + 1, 0);
    t.mobius.assign(limit + 1, 0);
    t.phi[1] = 1;
    t.mobius[1] = 1;

    std::vector<std::uint32_t> primes;
    primes.reserve(limit / 12 + 16);
    std::vector<bool> composite(limit + 1, false);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            t.phi[i] = i - 1;
            t.omega[i] = 1;
            t.mobius[i] = -1;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                t.phi[ip] = t.phi[i] * p;
                t.omega[ip] = t.omega[i];
                t.mobius[ip] = 0;
                break;
            }
            t.phi[ip] = t.phi[i] * (p - 1);
            t.omega[ip] = t.omega[i] + 1;
            t.mobius[ip] = static_cast<std::int8_t>(-t.mobius[i]);
        }
    }
    return t;
}

namespace {

// Distinct prime divisors by trial division.
std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

std::uint64_t phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("phi: n must be positive");
    std::uint64_t result = n;
    for (std::uint64_t p : distinct_primes(n)) result -= result / p;
    return result;
}

std::uint64_t omega(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("omega: n must be positive");
    return distinct_primes(n).size();
}

std::uint64_t phi_m(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("phi_m: arguments must be positive");
    const auto ps = distinct_primes(n);
    // Inclusion-exclusion over the squarefree divisors of n.
    std::uint64_t even = 0, odd = 0;
    const std::size_t k = ps.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::uint64_t d = 1;
        bool overflow = false;
        int bits = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i)) {
                ++bits;
                if (d > m) { overflow = true; break; }
                d *= ps[i];
            }
        }
        const std::uint64_t term = overflow ? 0 : m / d;
        (bits % 2 == 0 ? even : odd) += term;
    }
    return even - odd;
}

std::uint64_t phi_m_bruteforce(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("phi_m: arguments must be positive");
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= m; ++a)
        if (std::gcd(a, n) == 1) ++count;
    return count;
}

TotientSums totient_sum(const TotientTable& table, std::uint64_t n, std::uint64_t exact_cap) {
    if (n == 0) throw std::invalid_argument("totient_sum: n must be positive");
    if (n > table.limit) throw std::invalid_argument("totient_sum: n exceeds table limit");

    TotientSums out;
    unsigned long long sum_phi = 0, sum_two_omega = 0, lo = 0, hi = 0;
    const unsigned long long K = 1ULL << 32;
    const bool exact = n <= exact_cap;

    // Exact sum of phi(j)/j held as num/den with den = lcm(1..j), updated
    // incrementally so no per-step gcd of huge numerators is needed.
    mpz_class num = 0, den = 1;

    for (std::uint64_t j = 1; j <= n; ++j) {
        const unsigned long long pj = table.phi[j];
        sum_phi += pj;
        sum_two_omega += 1ULL << table.omega[j];
        const unsigned long long scaled = pj * K;
        lo += scaled / j;
        hi += scaled / j + (scaled % j != 0 ? 1 : 0);
        if (exact) {
            const unsigned long long g = std::gcd(static_cast<unsigned long long>(mpz_fdiv_ui(den.get_mpz_t(), j)), j);
            // den' = lcm(den, j) = den * (j/g) where g = gcd(den, j); since
            // den is a multiple of every j' < j, gcd(den, j) = gcd(den mod j, j).
            const unsigned long long grow = j / (g == 0 ? j : g);
            if (grow > 1) {
                den *= static_cast<unsigned long>(grow);
                num *= static_cast<unsigned long>(grow);
            }
            mpz_class term = den / j;
            term *= static_cast<unsigned long>(pj);
            num += term;
        }
    }
    static_assert(sizeof(unsigned long) == 8, "64-bit accumulators expected");
    out.sum_phi = static_cast<unsigned long>(sum_phi);
    out.sum_two_omega = static_cast<unsigned long>(sum_two_omega);
    out.phi_over_j_lo = static_cast<unsigned long>(lo);
    out.phi_over_j_hi = static_cast<unsigned long>(hi);
    if (exact) out.phi_over_j = Rat(num, den);
    return out;
}

TotientSums totient_sum(std::uint64_t n, std::uint64_t exact_cap) {
    return totient_sum(TotientTable::build(static_cast<std::uint32_t>(n)), n, exact_cap);
}

std::vector<std::pair<long long, long long>> coprime_pairs(
    long long t_lo, long long t_hi, const std::function<Rat(long long)>& s_bound) {
    std::vector<std::pair<long long, long long>> out;
    if (t_lo < 1) t_lo = 1;
    for (long long t = t_lo; t <= t_hi; ++t) {
        const Rat bound = s_bound(t);
        if (bound.sign() <= 0) continue;
        const mpz_class smax_z = bound.floor();
        if (!smax_z.fits_slong_p())
            throw std::invalid_argument("coprime_pairs: bound too large to enumerate");
        const long long smax = smax_z.get_si();
        for (long long s = 1; s <= smax; ++s)
            if (std::gcd(s, t) == 1) out.emplace_back(s, t);
    }
    return out;
}

} // namespace lattix
