#include "ecq/arith.hpp"

#include <algorithm>
#include <sstream>

namespace ecq {

Int Factorization::value() const {
    Int v = sign;
    for (const auto& f : factors) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        v *= pw;
    }
    return v;
}

bool Factorization::squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimeFactor& f) { return f.exponent == 1; });
}

std::string Factorization::to_string() const {
    std::ostringstream os;
    if (sign < 0) os << '-';
    if (factors.empty()) {
        os << '1';
        return os.str();
    }
    bool first = true;
    for (const auto& f : factors) {
        if (!first) os << '*';
        first = false;
        os << f.prime;
        if (f.exponent > 1) os << '^' << f.exponent;
    }
    return os.str();
}

namespace {

// First 64 primes, used both as the deterministic witness set (first 13
// suffice below the reported bound) and as fixed Miller-Rabin bases beyond.
constexpr unsigned kBases[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

bool miller_rabin(const Int& n, const Int& base) {
    // n odd, n > 2, base reduced mod n; base 0/±1 tells nothing
    Int a = base % n;
    if (a <= 1 || a == n - 1) return true;
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

} // namespace

PrimalityMethod primality_method(const Int& n) {
    return n < primality_deterministic_bound() ? PrimalityMethod::Deterministic
                                               : PrimalityMethod::FixedBases64;
}

bool is_prime(const Int& n) {
    if (n < 0) throw Error("is_prime: negative input");
    if (n < 2) return false;
    for (unsigned p : kBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    size_t nbases = primality_method(n) == PrimalityMethod::Deterministic ? 13 : 64;
    for (size_t i = 0; i < nbases; ++i) {
        if (!miller_rabin(n, Int(kBases[i]))) return false;
    }
    return true;
}

namespace {

// Pollard rho with Brent cycle detection. Returns a non-trivial factor of n
// (n odd composite, not a prime power guard needed by caller). Decrements
// *budget; throws FactorizationTimeoutError when it hits zero.
Int pollard_brent(const Int& n, std::uint64_t* budget) {
    for (Int c = 1;; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x, ys;
        const unsigned long batch = 128;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(Int(batch), Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    if (*budget == 0) throw FactorizationTimeoutError("pollard rho budget exhausted");
                    --*budget;
                    y = (y * y + c) % n;
                    Int t = x - y;
                    q = (q * abs(t)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += batch;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                if (*budget == 0) throw FactorizationTimeoutError("pollard rho budget exhausted");
                --*budget;
                ys = (ys * ys + c) % n;
                Int t = x - ys;
                mpz_gcd(g.get_mpz_t(), Int(abs(t)).get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
        // unlucky c, retry with the next polynomial
    }
}

void factor_rec(const Int& n, std::vector<Int>* out, std::uint64_t* budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        out->push_back(n);
        return;
    }
    // perfect powers split cheaply and can stall rho
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            Int r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), e)) {
                for (unsigned long i = 0; i < e; ++i) factor_rec(r, out, budget);
                return;
            }
        }
    }
    Int g = pollard_brent(n, budget);
    factor_rec(g, out, budget);
    factor_rec(n / g, out, budget);
}

} // namespace

Factorization factorize(const Int& n, std::uint64_t step_budget) {
    if (n == 0) throw Error("factorize: zero input");
    Factorization result;
    Int m = n;
    if (m < 0) {
        result.sign = -1;
        m = -m;
    }
    std::vector<Int> primes;
    // trial division to 10^6
    for (unsigned long p = 2; p <= 1'000'000 && m > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.push_back(Int(p));
            m /= p;
        }
    }
    if (m > 1) {
        if (Int(1'000'000) * 1'000'000 > m) {
            primes.push_back(m); // below the trial bound squared, must be prime
        } else {
            factor_rec(m, &primes, &step_budget);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (const Int& p : primes) {
        if (!result.factors.empty() && result.factors.back().prime == p) {
            ++result.factors.back().exponent;
        } else {
            result.factors.push_back({p, 1});
        }
    }
    return result;
}

bool is_squarefree(const Int& n, std::uint64_t step_budget) {
    if (n < 1) throw Error("is_squarefree: input must be positive");
    return factorize(n, step_budget).squarefree();
}

Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 1) throw Error("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    Int u;
    if (!mpz_invert(u.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw NotCoprimeError("mod_inverse: arguments not coprime");
    return u;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace ecq
