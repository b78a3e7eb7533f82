#include "ecq/quadforms.hpp"

#include <numeric>
#include <set>
#include <unordered_set>
#include <utility>

namespace ecq {

Discriminant::Discriminant(Int delta) : delta_(std::move(delta)) {
    if (delta_ <= 0) throw NonPositiveDiscriminantError("discriminant must be positive");
    Int r = mod_floor(delta_, 4);
    if (r != 0 && r != 1) throw Error("discriminant must be 0 or 1 mod 4");
    if (is_square(delta_)) throw Error("discriminant must not be a perfect square");
    sqrt_ = isqrt(delta_);
}

bool QuadForm::is_primitive() const {
    Int g = gcd(gcd(a, b), c);
    return g == 1;
}

QuadForm inverse(const QuadForm& f) { return {f.a, -f.b, f.c}; }

QuadForm principal_form(const Discriminant& delta) {
    const Int& s = delta.sqrt_floor();
    Int b0 = (mod_floor(s - delta.value(), 2) == 0) ? s : s - 1;
    return {1, b0, (b0 * b0 - delta.value()) / 4};
}

bool is_reduced(const QuadForm& f, const Discriminant& delta) {
    const Int& d = delta.value();
    if (f.b <= 0 || f.b * f.b >= d) return false;
    Int t = 2 * abs(f.a);
    if ((t + f.b) * (t + f.b) <= d) return false;          // 2|a| > sqrt(d) - b
    if (t > f.b && (t - f.b) * (t - f.b) >= d) return false; // 2|a| < sqrt(d) + b
    return true;
}

QuadForm rho(const QuadForm& f, const Discriminant& delta) {
    if (f.c == 0) throw AssertionError("rho: degenerate form");
    const Int& s = delta.sqrt_floor();
    Int ac = abs(f.c);
    Int m = 2 * ac;
    // b' = -b (mod 2|c|), largest value in the window
    Int hi = ac > s ? ac : s; // window (hi - 2|c|, hi]
    Int bp = hi - mod_floor(hi + f.b, m);
    Int num = bp * bp - delta.value();
    if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * f.c).get_mpz_t()))
        throw AssertionError("rho: non-integral continuation");
    return {f.c, bp, num / (4 * f.c)};
}

QuadForm reduce(const QuadForm& f, const Discriminant& delta) {
    QuadForm g = f;
    if (g.discriminant() != delta.value()) throw DiscriminantMismatchError("reduce: wrong discriminant");
    while (!is_reduced(g, delta)) g = rho(g, delta);
    return g;
}

std::vector<QuadForm> reduction_cycle(const QuadForm& f, const Discriminant& delta) {
    QuadForm r = reduce(f, delta);
    std::vector<QuadForm> cyc{r};
    for (QuadForm g = rho(r, delta); !(g == r); g = rho(g, delta)) cyc.push_back(g);
    return cyc;
}

namespace {

// U*a1 + V*a2 + W*s = g = gcd(a1, a2, s)
void bezout3(const Int& a1, const Int& a2, const Int& s, Int* g, Int* U, Int* V, Int* W) {
    Int g1, u1, v1;
    mpz_gcdext(g1.get_mpz_t(), u1.get_mpz_t(), v1.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
    Int uu;
    mpz_gcdext(g->get_mpz_t(), uu.get_mpz_t(), W->get_mpz_t(), g1.get_mpz_t(), s.get_mpz_t());
    *U = uu * u1;
    *V = uu * v1;
}

} // namespace

QuadForm compose(const QuadForm& f, const QuadForm& g, const Discriminant& delta) {
    if (f.discriminant() != delta.value() || g.discriminant() != delta.value())
        throw MixedDiscriminantsError("compose: discriminants differ");
    if (!f.is_primitive() || !g.is_primitive())
        throw ImprimitiveFormError("compose: imprimitive form");
    Int s = (f.b + g.b) / 2;
    Int m = (g.b - f.b) / 2;
    Int G, U, V, W;
    bezout3(f.a, g.a, s, &G, &U, &V, &W);
    Int A = (f.a / G) * (g.a / G);
    Int B = f.b + 2 * (f.a / G) * (U * m - W * f.c);
    B = mod_floor(B, 2 * A);
    Int num = B * B - delta.value();
    if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * A).get_mpz_t()))
        throw AssertionError("compose: composed root congruence failed");
    return reduce({A, B, num / (4 * A)}, delta);
}

bool is_equivalent(const QuadForm& f, const QuadForm& g, const Discriminant& delta) {
    if (f.discriminant() != g.discriminant())
        throw MixedDiscriminantsError("is_equivalent: discriminants differ");
    QuadForm rf = reduce(f, delta);
    QuadForm rg = reduce(g, delta);
    QuadForm cur = rf;
    do {
        if (cur == rg) return true;
        cur = rho(cur, delta);
    } while (!(cur == rf));
    return false;
}

namespace {

bool cycle_has_leading(const QuadForm& f, const Discriminant& delta, bool allow_negative) {
    QuadForm rf = reduce(f, delta);
    QuadForm cur = rf;
    do {
        if (cur.a == 1 || (allow_negative && cur.a == -1)) return true;
        cur = rho(cur, delta);
    } while (!(cur == rf));
    return false;
}

} // namespace

bool is_principal_narrow(const QuadForm& f, const Discriminant& delta) {
    return cycle_has_leading(f, delta, false);
}

bool is_principal_wide_form(const QuadForm& f, const Discriminant& delta) {
    return cycle_has_leading(f, delta, true);
}

namespace {

// 64-bit enumeration of primitive reduced forms and their rho-cycles.
// Valid for delta < 2^62: all intermediates stay within int64/uint64.
ClassNumbers class_number_u64(std::uint64_t d) {
    const std::int64_t s = (std::int64_t)isqrt(Int((unsigned long)d)).get_ui();
    struct F {
        std::int32_t a;
        std::int32_t b;
    };
    auto key = [](std::int64_t a, std::int64_t b) {
        return ((std::uint64_t)(std::uint32_t)(std::int32_t)a << 32) | (std::uint32_t)(std::int32_t)b;
    };
    std::vector<std::uint64_t> prim; // keys of primitive reduced forms with a > 0 and a < 0
    std::uint64_t count = 0;
    const int parity = (int)(d & 1);
    for (std::int64_t b = parity ? 1 : 2; b <= s; b += 2) {
        const std::uint64_t t = (d - (std::uint64_t)(b * b)) / 4;
        std::int64_t amin = (s - b) / 2 + 1;
        if (amin < 1) amin = 1;
        const std::int64_t amax = (s + b) / 2;
        for (std::int64_t a = amin; a <= amax; ++a) {
            if (t % (std::uint64_t)a) continue;
            const std::int64_t c = (std::int64_t)(t / (std::uint64_t)a);
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            prim.push_back(key(a, b));
            prim.push_back(key(-a, b));
            count += 2;
        }
    }
    // rho restricted to reduced forms: |c| <= s always holds in a cycle
    auto rho64 = [&](std::int64_t& a, std::int64_t& b, std::int64_t& c) {
        const std::int64_t ac = c < 0 ? -c : c;
        const std::int64_t m = 2 * ac;
        std::int64_t bp = s - (((s + b) % m) + m) % m;
        const std::int64_t cp = (bp * bp - (std::int64_t)d) / (4 * c);
        a = c;
        b = bp;
        c = cp;
    };
    auto unkey = [](std::uint64_t k, std::int64_t& a, std::int64_t& b) {
        a = (std::int32_t)(k >> 32);
        b = (std::int32_t)(std::uint32_t)k;
    };
    std::unordered_set<std::uint64_t> visited;
    visited.reserve(prim.size() * 2);
    std::uint64_t cycles = 0;
    for (std::uint64_t k : prim) {
        if (visited.count(k)) continue;
        ++cycles;
        std::int64_t a, b;
        unkey(k, a, b);
        std::int64_t c = -(std::int64_t)((d - (std::uint64_t)(b * b)) / 4) / a;
        std::int64_t a0 = a, b0 = b;
        do {
            visited.insert(key(a, b));
            rho64(a, b, c);
        } while (!(a == a0 && b == b0));
    }
    // wide: walk the principal cycle looking for leading coefficient -1
    bool has_m1 = false;
    {
        std::int64_t b0 = ((s ^ (std::int64_t)d) & 1) ? s - 1 : s;
        std::int64_t a = 1, b = b0, c = (b0 * b0 - (std::int64_t)d) / 4;
        const std::int64_t astart = a, bstart = b;
        do {
            if (a == -1) {
                has_m1 = true;
                break;
            }
            rho64(a, b, c);
        } while (!(a == astart && b == bstart));
    }
    ClassNumbers out;
    out.h_narrow = Int((unsigned long)cycles);
    out.h_wide = has_m1 ? out.h_narrow : out.h_narrow / 2;
    out.reduced_form_count = count;
    if (!has_m1 && cycles % 2 != 0) throw AssertionError("class_number: odd narrow count without norm -1 unit");
    return out;
}

// Arbitrary-precision fallback, same structure.
ClassNumbers class_number_mpz(const Discriminant& delta) {
    const Int& d = delta.value();
    const Int& s = delta.sqrt_floor();
    std::set<std::pair<Int, Int>> prim;
    const Int parity = mod_floor(d, 2);
    for (Int b = parity == 1 ? 1 : 2; b <= s; b += 2) {
        Int t = (d - b * b) / 4;
        Int amin = (s - b) / 2 + 1;
        if (amin < 1) amin = 1;
        Int amax = (s + b) / 2;
        for (Int a = amin; a <= amax; ++a) {
            if (!mpz_divisible_p(t.get_mpz_t(), a.get_mpz_t())) continue;
            Int c = t / a;
            if (gcd(gcd(a, b), c) != 1) continue;
            prim.emplace(a, b);
            prim.emplace(-a, b);
        }
    }
    std::set<std::pair<Int, Int>> visited;
    std::uint64_t cycles = 0;
    for (const auto& [a0, b0] : prim) {
        if (visited.count({a0, b0})) continue;
        ++cycles;
        QuadForm f{a0, b0, (b0 * b0 - d) / (4 * a0)};
        QuadForm cur = f;
        do {
            visited.insert({cur.a, cur.b});
            cur = rho(cur, delta);
        } while (!(cur == f));
    }
    bool has_m1 = false;
    {
        QuadForm p = principal_form(delta);
        QuadForm cur = p;
        do {
            if (cur.a == -1) {
                has_m1 = true;
                break;
            }
            cur = rho(cur, delta);
        } while (!(cur == p));
    }
    ClassNumbers out;
    out.h_narrow = Int((unsigned long)cycles);
    out.h_wide = has_m1 ? out.h_narrow : out.h_narrow / 2;
    out.reduced_form_count = prim.size();
    if (!has_m1 && cycles % 2 != 0) throw AssertionError("class_number: odd narrow count without norm -1 unit");
    return out;
}

} // namespace

ClassNumbers class_number(const Discriminant& delta) {
    if (delta.value().fits_ulong_p() && delta.value() < Int(1) << 62)
        return class_number_u64(delta.value().get_ui());
    return class_number_mpz(delta);
}

Int class_order(const QuadForm& f, const Discriminant& delta, std::uint64_t max_steps) {
    if (!f.is_primitive()) throw ImprimitiveFormError("class_order: imprimitive form");
    QuadForm g = reduce(f, delta);
    QuadForm acc = g;
    for (std::uint64_t n = 1; n <= max_steps; ++n) {
        if (is_principal_narrow(acc, delta)) return Int((unsigned long)n);
        acc = compose(acc, g, delta);
    }
    throw Error("class_order: step cap exceeded");
}

} // namespace ecq
