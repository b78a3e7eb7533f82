#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ecq/errors.hpp"

namespace ecq {

using Int = mpz_class;
using Rat = mpq_class;

struct PrimeFactor {
    Int prime;
    unsigned exponent;
};

// Complete factorization: value = sign * prod(prime^exponent), primes strictly
// increasing, every listed prime passes is_prime.
struct Factorization {
    int sign = 1; // +1 or -1
    std::vector<PrimeFactor> factors;

    Int value() const;
    bool squarefree() const;
    // e.g. "3*41", "-2^2*3", "1" for empty
    std::string to_string() const;
};

enum class PrimalityMethod {
    Deterministic, // witness set, exact below the threshold
    FixedBases64,  // Miller-Rabin with 64 fixed prime bases
};

// Inputs below this bound get an exact answer from a known witness set.
inline const Int& primality_deterministic_bound() {
    static const Int bound("3317044064679887385961981"); // exact for first 13 prime bases
    return bound;
}

bool is_prime(const Int& n);
PrimalityMethod primality_method(const Int& n);

inline constexpr std::uint64_t kDefaultFactorBudget = 100'000'000;

// Trial division to 10^6, then Pollard rho (Brent). Throws
// FactorizationTimeoutError when the rho step budget runs out.
Factorization factorize(const Int& n, std::uint64_t step_budget = kDefaultFactorBudget);

bool is_squarefree(const Int& n, std::uint64_t step_budget = kDefaultFactorBudget);

Int isqrt(const Int& n); // floor sqrt, n >= 0
bool is_square(const Int& n);

// u in [0, m) with a*u = 1 (mod m); throws NotCoprimeError.
Int mod_inverse(const Int& a, const Int& m);

// Representative of a mod m in [0, m), m > 0.
Int mod_floor(const Int& a, const Int& m);

} // namespace ecq
