#include "lattix/energy.hpp"

#include <unordered_map>

namespace lattix {

namespace {

long long sum_of_squared_multiplicities(const std::unordered_map<Number, long long, NumberHash>& counts) {
    long long total = 0;
    for (const auto& [key, c] : counts) total += c * c;
    return total;
}

void require_nonzero(const NumberSet& A, const char* what) {
    if (A.contains(Number(0)))
        throw std::invalid_argument(std::string(what) + ": set must not contain 0");
}

} // namespace

long long r_mm(long long m, const Rat& k) {
    if (m < 1) throw std::invalid_argument("r_mm: m must be positive");
    auto [s, t] = st_of(k); // throws for k <= 0
    const mpz_class& top = s >= t ? s : t;
    if (top > to_mpz(m)) return 0;
    mpz_class q = to_mpz(m) / top;
    return q.get_si();
}

long long r2_mm(long long m, const Rat& k, long long m_cap) {
    if (m < 1) throw std::invalid_argument("r2_mm: m must be positive");
    if (m > m_cap) throw resource_limit_error("r2_mm: m exceeds the oracle cap");
    auto [sz, tz] = st_of(k);
    const long long mm = m * m;
    if (sz > to_mpz(mm) || tz > to_mpz(mm)) return 0;
    const long long s = sz.get_si(), t = tz.get_si();

    // prod_count[v] = |{(x,y) in [m]^2 : x*y = v}|
    std::vector<long long> prod_count(static_cast<std::size_t>(mm) + 1, 0);
    for (long long x = 1; x <= m; ++x)
        for (long long y = 1; y <= m; ++y) ++prod_count[x * y];

    // (xy)/(zw) = s/t with gcd(s,t)=1 iff xy = s*u and zw = t*u for some u >= 1.
    long long total = 0;
    const long long u_max = mm / std::max(s, t);
    for (long long u = 1; u <= u_max; ++u) total += prod_count[s * u] * prod_count[t * u];
    return total;
}

long long add_energy(const NumberSet& A) {
    std::unordered_map<Number, long long, NumberHash> sums;
    const auto vals = A.values();
    sums.reserve(vals.size() * vals.size());
    for (const auto& a : vals)
        for (const auto& b : vals) ++sums[a + b];
    return sum_of_squared_multiplicities(sums);
}

long long mult_energy(const NumberSet& A) {
    std::unordered_map<Number, long long, NumberHash> prods;
    const auto vals = A.values();
    prods.reserve(vals.size() * vals.size());
    for (const auto& a : vals)
        for (const auto& b : vals) ++prods[a * b];
    return sum_of_squared_multiplicities(prods);
}

long long mult_energy_bipartite(const NumberSet& A, const NumberSet& B) {
    std::unordered_map<Number, long long, NumberHash> prods;
    const auto as = A.values();
    const auto bs = B.values();
    prods.reserve(as.size() * bs.size());
    for (const auto& a : as)
        for (const auto& b : bs) ++prods[a * b];
    return sum_of_squared_multiplicities(prods);
}

namespace {

long long quadruple_oracle(const std::vector<Number>& left, const std::vector<Number>& right,
                           bool additive) {
    std::vector<Number> pair_vals;
    pair_vals.reserve(left.size() * right.size());
    for (const auto& a : left)
        for (const auto& b : right) pair_vals.push_back(additive ? a + b : a * b);
    long long count = 0;
    for (const auto& p : pair_vals)
        for (const auto& q : pair_vals)
            if (p == q) ++count;
    return count;
}

} // namespace

long long add_energy_oracle(const NumberSet& A, std::size_t cap) {
    if (A.size() > cap) throw resource_limit_error("add_energy_oracle: set exceeds oracle cap");
    const auto vals = A.values();
    return quadruple_oracle(vals, vals, true);
}

long long mult_energy_oracle(const NumberSet& A, std::size_t cap) {
    if (A.size() > cap) throw resource_limit_error("mult_energy_oracle: set exceeds oracle cap");
    const auto vals = A.values();
    return quadruple_oracle(vals, vals, false);
}

long long mult_energy_bipartite_oracle(const NumberSet& A, const NumberSet& B, std::size_t cap) {
    if (A.size() * B.size() > cap * cap)
        throw resource_limit_error("mult_energy_bipartite_oracle: sets exceed oracle cap");
    return quadruple_oracle(A.values(), B.values(), false);
}

long long shifted_mult_energy(const NumberSet& A, long n, const Number& x) {
    if (n < 1) throw std::invalid_argument("shifted_mult_energy: n must be positive");
    require_nonzero(A, "shifted_mult_energy");
    std::unordered_map<Number, long long, NumberHash> prods;
    const auto as = A.values();
    prods.reserve(as.size() * static_cast<std::size_t>(n));
    for (const auto& a : as)
        for (long i = 1; i <= n; ++i) ++prods[a * (Number(i) + x)];
    return sum_of_squared_multiplicities(prods);
}

long long r_xn(const QuadExt& x, long n, const Number& y) {
    if (x.is_rational()) throw std::invalid_argument("r_xn: x must be irrational");
    if (n < 1) throw std::invalid_argument("r_xn: n must be positive");
    const Number xs{x};
    long long count = 0;
    // y = (p+x)/(q+x) iff p = y*(q+x) - x; for each q check whether that p is
    // an integer in [n].
    for (long q = 1; q <= n; ++q) {
        const Number p = y * (Number(q) + xs) - xs;
        if (!p.is_rational()) continue;
        const Rat& pr = p.as_rat();
        if (!pr.is_integer()) continue;
        if (pr.num() >= 1 && pr.num() <= n) ++count;
    }
    return count;
}

namespace {

// Smallest integer >= v, decided exactly.
mpz_class ceil_number(const Number& v) {
    if (v.is_rational()) return v.as_rat().ceil();
    mpz_class c(static_cast<long>(std::ceil(v.approx())));
    while (Number(Rat(c)) < v) ++c;
    while (Number(Rat(mpz_class(c - 1))) >= v) --c;
    return c;
}

} // namespace

NumberSet normalize_to_integers(const NumberSet& A) {
    require_nonzero(A, "normalize_to_integers");
    const auto vals = A.values();
    if (vals.empty()) return NumberSet();

    // Equivalence classes under a ~ b iff b/a is a positive rational.
    std::vector<std::vector<Number>> classes;
    std::vector<Number> reps; // smallest-magnitude member, used as the scaling anchor
    for (const auto& v : vals) {
        bool placed = false;
        for (std::size_t j = 0; j < classes.size(); ++j) {
            const Number q = v / reps[j];
            if (q.is_rational() && q.sign() > 0) {
                classes[j].push_back(v);
                if (v.abs() < reps[j].abs()) reps[j] = v;
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({v});
            reps.push_back(v);
        }
    }

    Number max_abs = vals.front().abs();
    for (const auto& v : vals)
        if (v.abs() > max_abs) max_abs = v.abs();
    mpz_class m = ceil_number(max_abs);
    if (m < 10) m = 10;

    // Class j is rescaled by m^{10(j-1)} / rep_j, which sends it to positive
    // rationals >= m^{10(j-1)}. If classes still collide (huge in-class
    // spread), grow m and retry; the spread is fixed, so this terminates.
    for (;;) {
        std::vector<Rat> scaled;
        scaled.reserve(vals.size());
        mpz_class power = 1;
        mpz_class m10;
        mpz_pow_ui(m10.get_mpz_t(), m.get_mpz_t(), 10);
        for (std::size_t j = 0; j < classes.size(); ++j) {
            for (const auto& v : classes[j]) {
                const Number ratio = v / reps[j]; // positive rational by construction
                scaled.push_back(Rat(power) * ratio.as_rat());
            }
            power *= m10;
        }
        std::sort(scaled.begin(), scaled.end());
        if (std::adjacent_find(scaled.begin(), scaled.end()) == scaled.end()) {
            mpz_class common_den = 1;
            for (const auto& r : scaled) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), r.den().get_mpz_t());
            std::vector<Number> ints;
            ints.reserve(scaled.size());
            for (const auto& r : scaled) ints.emplace_back(r * Rat(common_den));
            return NumberSet::of(std::move(ints));
        }
        m *= 10;
    }
}

NumberSet sumset(const NumberSet& A) {
    const auto vals = A.values();
    std::vector<Number> sums;
    sums.reserve(vals.size() * vals.size());
    for (const auto& a : vals)
        for (const auto& b : vals) sums.push_back(a + b);
    return NumberSet::of(std::move(sums));
}

EnergyReport energy_report(const NumberSet& A, std::optional<long> interval,
                           std::optional<Number> shift, bool use_oracle) {
    EnergyReport r;
    r.size_a = static_cast<long long>(A.size());
    r.size_b = interval ? *interval : r.size_a;
    r.method = use_oracle ? "oracle" : "hashed";
    if (use_oracle) {
        r.additive = add_energy_oracle(A);
        r.multiplicative = mult_energy_oracle(A);
    } else {
        r.additive = add_energy(A);
        r.multiplicative = mult_energy(A);
    }
    r.sumset_size = static_cast<long long>(sumset(A).size());
    if (interval) {
        const NumberSet I = NumberSet::interval(*interval);
        r.bipartite = use_oracle ? mult_energy_bipartite_oracle(A, I) : mult_energy_bipartite(A, I);
        if (shift) r.shifted = shifted_mult_energy(A, *interval, *shift);
    }
    return r;
}

} // namespace lattix
