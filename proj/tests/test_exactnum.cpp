#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattix/number.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace lattix;

TEST_CASE("canonical form") {
    CHECK(canonical(4, 6) == Rat(2, 3));
    CHECK(canonical(-4, -6) == Rat(2, 3));
    CHECK(canonical(0, 5) == Rat(0));
    CHECK(canonical(0, 5).den() == 1);
    CHECK(canonical(3, -9) == Rat(-1, 3));
    CHECK(canonical(3, -9).den() == 3);
    CHECK_THROWS_AS(canonical(1, 0), std::invalid_argument);
}

TEST_CASE("canonical is scale invariant") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 300; ++i) {
        long p = d(rng), q = d(rng), k = d(rng);
        if (q == 0 || k == 0) continue;
        CHECK(canonical(p, q) == canonical(k * p, k * q));
    }
}

TEST_CASE("st_of") {
    auto [s, t] = st_of(Rat(10, 4));
    CHECK(s == 5);
    CHECK(t == 2);
    CHECK(st_of(Rat(1)) == std::pair<mpz_class, mpz_class>(1, 1));
    CHECK(st_of(Rat(7, 3)) == std::pair<mpz_class, mpz_class>(7, 3));
    CHECK_THROWS_AS(st_of(Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(st_of(Rat(-2, 3)), std::invalid_argument);
}

TEST_CASE("st_of reconstructs and is coprime") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(1, 400);
    for (int i = 0; i < 300; ++i) {
        const Rat k(d(rng), d(rng));
        auto [s, t] = st_of(k);
        CHECK(Rat(s, t) == k);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("radicand validation") {
    CHECK(valid_radicand(2));
    CHECK(valid_radicand(3));
    CHECK(valid_radicand(6));
    CHECK(valid_radicand(10));
    CHECK_FALSE(valid_radicand(1));
    CHECK_FALSE(valid_radicand(4));
    CHECK_FALSE(valid_radicand(9));
    CHECK_FALSE(valid_radicand(12));
    CHECK_THROWS_AS(QuadExt(Rat(1), Rat(1), 4), std::invalid_argument);
}

TEST_CASE("quad_mul") {
    const QuadExt a(Rat(1), Rat(1), 2);  // 1 + sqrt(2)
    const QuadExt b(Rat(1), Rat(-1), 2); // 1 - sqrt(2)
    CHECK(quad_mul(a, b) == QuadExt(Rat(-1), Rat(0), 2));
    const QuadExt r2(Rat(0), Rat(1), 2);
    CHECK(quad_mul(r2, r2) == QuadExt(Rat(2), Rat(0), 2));
    CHECK(quad_mul(a, a) == QuadExt(Rat(3), Rat(2), 2));
    CHECK_THROWS_AS(quad_mul(a, QuadExt(Rat(1), Rat(1), 3)), std::invalid_argument);
}

TEST_CASE("quadext division and sign") {
    const QuadExt a(Rat(1), Rat(1), 2);
    const QuadExt q = a / QuadExt(Rat(3), Rat(-1), 2);
    CHECK(q * QuadExt(Rat(3), Rat(-1), 2) == a);
    CHECK(QuadExt(Rat(-1), Rat(1), 2).sign() > 0);  // sqrt(2) > 1
    CHECK(QuadExt(Rat(-2), Rat(1), 2).sign() < 0);  // sqrt(2) < 2
    CHECK(QuadExt(Rat(3), Rat(-2), 2).sign() > 0);  // 3 > 2 sqrt(2)... 9 > 8
    CHECK(QuadExt(Rat(0), Rat(0), 2).sign() == 0);
    CHECK_THROWS_AS(a / QuadExt(Rat(0), Rat(0), 2), std::invalid_argument);
}

TEST_CASE("quadext agrees with floating point") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-12, 12);
    const long rads[] = {2, 3, 5, 7};
    for (int i = 0; i < 400; ++i) {
        const long dd = rads[i % 4];
        const QuadExt x(Rat(d(rng), 1 + std::abs(d(rng))), Rat(d(rng), 1 + std::abs(d(rng))), dd);
        const QuadExt y(Rat(d(rng), 1 + std::abs(d(rng))), Rat(d(rng), 1 + std::abs(d(rng))), dd);
        CHECK(std::abs((x + y).approx() - (x.approx() + y.approx())) < 1e-9);
        CHECK(std::abs((x * y).approx() - (x.approx() * y.approx())) < 1e-9);
        CHECK(((x - y).sign() > 0) == (x.approx() - y.approx() > 1e-12 ? true : (x - y).sign() > 0));
    }
}

TEST_CASE("number normalization and arithmetic") {
    const Number a{QuadExt(Rat(1), Rat(1), 2)};
    const Number b{QuadExt(Rat(1), Rat(-1), 2)};
    CHECK((a * b).is_rational()); // conjugates multiply to -1
    CHECK(a * b == Number(-1));
    CHECK(a + Number(1) == Number(QuadExt(Rat(2), Rat(1), 2)));
    CHECK(Number(Rat(1, 2)) * Number(4) == Number(2));
    CHECK_THROWS_AS(a / Number(0), std::invalid_argument);
    CHECK_THROWS_AS(a + Number(QuadExt(Rat(0), Rat(1), 3)), std::invalid_argument);
    CHECK(a > Number(2));
    CHECK(Number(Rat(3, 2)) > Number(QuadExt(Rat(0), Rat(1), 2)));
}

TEST_CASE("serialization round trip is bit exact") {
    CHECK(Number(Rat(2, 3)).to_string() == "2/3");
    CHECK(Number(Rat(-7)).to_string() == "-7");
    CHECK(Number(QuadExt(Rat(1, 2), Rat(3), 2)).to_string() == "1/2+3*sqrt(2)");
    CHECK(Number(QuadExt(Rat(0), Rat(-2, 3), 5)).to_string() == "0-2/3*sqrt(5)");

    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(-99, 99);
    for (int i = 0; i < 400; ++i) {
        Number x;
        if (i % 3 == 0) {
            x = Number(Rat(d(rng), 1 + std::abs(d(rng))));
        } else {
            x = Number(QuadExt(Rat(d(rng), 1 + std::abs(d(rng))), Rat(d(rng), 1 + std::abs(d(rng))),
                               i % 2 ? 2 : 7));
        }
        const std::string s = x.to_string();
        CHECK(Number::parse(s) == x);
        CHECK(Number::parse(s).to_string() == s);
    }
}

TEST_CASE("rat parsing") {
    CHECK(Rat::parse("10/4") == Rat(5, 2));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK(Rat::parse_decimal("1.5") == Rat(3, 2));
    CHECK(Rat::parse_decimal("-0.25") == Rat(-1, 4));
    CHECK(Rat::parse_decimal("2") == Rat(2));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
}

TEST_CASE("number parse failure modes") {
    CHECK_THROWS_AS(Number::parse("1/2+*sqrt(2)"), std::invalid_argument);
    CHECK_THROWS_AS(Number::parse("sqrt(2)"), std::invalid_argument); // canonical form required
    CHECK_THROWS_AS(Number::parse("1+2*sqrt(4)"), std::invalid_argument);
    CHECK_THROWS_AS(Number::parse(""), std::invalid_argument);
}

TEST_CASE("exact ordering is total on samples") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(-20, 20);
    std::vector<Number> xs;
    for (int i = 0; i < 60; ++i)
        xs.push_back(i % 2 ? Number(Rat(d(rng), 1 + std::abs(d(rng))))
                           : Number(QuadExt(Rat(d(rng), 3), Rat(d(rng), 3), 2)));
    for (const auto& x : xs)
        for (const auto& y : xs) {
            const int c = x.cmp(y);
            CHECK(c == -y.cmp(x));
            if (c == 0) CHECK(x == y);
            if (x == y) CHECK(x.hash() == y.hash());
        }
}
