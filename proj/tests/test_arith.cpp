#include <doctest.h>

#include <random>

#include "ecq/arith.hpp"

using namespace ecq;

TEST_CASE("is_prime basics") {
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(341)); // 11 * 31, base-2 pseudoprime
    CHECK(is_prime(2));
    CHECK(is_prime(Int("1000000007")));
    CHECK_FALSE(is_prime(Int("1000000007") * Int("1000000009")));
}

TEST_CASE("is_prime agrees with trial division up to 10^6") {
    std::vector<bool> sieve(1'000'001, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= 1'000'000; ++i)
        if (sieve[i])
            for (std::uint64_t j = i * i; j <= 1'000'000; j += i) sieve[j] = false;
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        if (is_prime(Int((unsigned long)n)) != sieve[n]) {
            CAPTURE(n);
            REQUIRE(is_prime(Int((unsigned long)n)) == sieve[n]);
        }
    }
}

TEST_CASE("primality method metadata") {
    CHECK(primality_method(Int(7)) == PrimalityMethod::Deterministic);
    CHECK(primality_method(primality_deterministic_bound()) == PrimalityMethod::FixedBases64);
}

TEST_CASE("factorize examples") {
    auto f = factorize(123);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 3);
    CHECK(f.factors[1].prime == 41);
    CHECK(f.to_string() == "3*41");

    f = factorize(25);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].prime == 5);
    CHECK(f.factors[0].exponent == 2);

    f = factorize(-12);
    CHECK(f.sign == -1);
    CHECK(f.value() == -12);
    CHECK(f.to_string() == "-2^2*3");

    CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("factorize reconstructs random inputs") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 10'000; ++i) {
        std::uint64_t n = rng() % 1'000'000'000'000ull + 1;
        Int v((unsigned long)n);
        auto f = factorize(v);
        CHECK(f.value() == v);
        for (const auto& pf : f.factors) CHECK(is_prime(pf.prime));
    }
}

TEST_CASE("factorize handles semiprimes beyond trial division") {
    Int n = Int("1000003") * Int("1000033");
    auto f = factorize(n);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 1000003);
    CHECK(f.factors[1].prime == 1000033);
}

TEST_CASE("factorization timeout surfaces as an error") {
    Int n = Int("1000000000000037") * Int("1000000000000091");
    CHECK_THROWS_AS(factorize(n, 10), FactorizationTimeoutError);
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(123));
    CHECK_FALSE(is_squarefree(25));
    CHECK(is_squarefree(1));
    std::mt19937_64 rng(999);
    const unsigned long qs[] = {2, 3, 5, 7, 11, 101};
    for (int i = 0; i < 200; ++i) {
        Int n(rng() % 100000 + 1);
        Int q(qs[rng() % 6]);
        CHECK_FALSE(is_squarefree(n * q * q));
    }
}

TEST_CASE("is_square and isqrt") {
    CHECK(is_square(25));
    CHECK_FALSE(is_square(123));
    CHECK(is_square(0));
    CHECK_FALSE(is_square(-4));
    CHECK(isqrt(Int(123)) == 11);
    Int big = Int("123456789123456789");
    CHECK(isqrt(big * big) == big);
    CHECK(is_square(big * big));
    CHECK_FALSE(is_square(big * big + 1));
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(1, 5) == 1);
    CHECK_THROWS_AS(mod_inverse(2, 4), NotCoprimeError);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
        Int m(rng() % 1'000'000 + 2);
        Int a(rng() % 1'000'000'000);
        Int g = gcd(a, m);
        if (g != 1) {
            CHECK_THROWS_AS(mod_inverse(a, m), NotCoprimeError);
        } else {
            Int u = mod_inverse(a, m);
            CHECK(u >= 0);
            CHECK(u < m);
            CHECK(mod_floor(a * u, m) == 1);
        }
    }
}
