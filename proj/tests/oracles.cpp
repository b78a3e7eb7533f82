#include "oracles.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

long long llsqrt(long long n) {
    long long r = (long long)std::sqrt((double)n);
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct Form {
    long long a, b, c;
    bool operator<(const Form& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
};

bool reduced(const Form& f, long long delta, long long s) {
    if (f.b <= 0 || f.b > s) return false;
    long long t = 2 * (f.a < 0 ? -f.a : f.a);
    // sqrt(delta) - b < t < sqrt(delta) + b, via integer windows
    return t + f.b >= s + 1 && t - f.b <= s;
}

Form step(const Form& f, long long delta, long long s) {
    long long ac = f.c < 0 ? -f.c : f.c;
    long long m = 2 * ac;
    long long hi = ac > s ? ac : s;
    long long bp = hi - (((hi + f.b) % m + m) % m);
    long long cp = (bp * bp - delta) / (4 * f.c);
    return {f.c, bp, cp};
}

Form reduce_form(Form f, long long delta, long long s) {
    while (!reduced(f, delta, s)) f = step(f, delta, s);
    return f;
}

std::vector<Form> cycle_of(Form f, long long delta, long long s) {
    Form r = reduce_form(f, delta, s);
    std::vector<Form> cyc{r};
    for (Form g = step(r, delta, s); !(g == r); g = step(g, delta, s)) cyc.push_back(g);
    return cyc;
}

} // namespace

O1Result o1_class_numbers(long long delta) {
    if (delta <= 0) throw std::invalid_argument("o1: delta must be positive");
    long long s = llsqrt(delta);
    if (s * s == delta) throw std::invalid_argument("o1: delta must be nonsquare");
    // exhaustive: every (a, b) pair with 4a | b^2 - delta, window checked directly
    std::set<Form> forms;
    for (long long b = 1; b <= s; ++b) {
        if ((b & 1) != (delta & 1)) continue;
        for (long long a = 1; a <= s; ++a) {
            if ((b * b - delta) % (4 * a) != 0) continue;
            long long c = (b * b - delta) / (4 * a);
            Form f1{a, b, c}, f2{-a, b, -c};
            if (reduced(f1, delta, s)) forms.insert(f1);
            if (reduced(f2, delta, s)) forms.insert(f2);
        }
    }
    std::set<Form> prim;
    for (const Form& f : forms)
        if (std::gcd(std::gcd(f.a, f.b), f.c) == 1) prim.insert(f);

    // brute-force equivalence closure over the primitive reduced forms
    std::map<Form, long> group;
    long ngroups = 0;
    for (const Form& f : prim) {
        if (group.count(f)) continue;
        long id = ngroups++;
        for (const Form& g : cycle_of(f, delta, s)) group[g] = id;
    }
    // principal group, and whether it absorbs the sign flip
    long long b0 = ((s ^ delta) & 1) ? s - 1 : s;
    Form principal{1, b0, (b0 * b0 - delta) / 4};
    bool has_m1 = false;
    for (const Form& g : cycle_of(principal, delta, s))
        if (g.a == -1) has_m1 = true;

    O1Result r;
    r.h_narrow = ngroups;
    r.h_wide = has_m1 ? ngroups : ngroups / 2;
    r.reduced_form_count = (long)prim.size();
    return r;
}

bool o1_equivalent(long long a1, long long b1, long long c1, long long a2, long long b2,
                   long long c2, long long delta) {
    long long s = llsqrt(delta);
    Form target = reduce_form({a2, b2, c2}, delta, s);
    for (const Form& g : cycle_of({a1, b1, c1}, delta, s))
        if (g == target) return true;
    return false;
}

PellSolution o2_fundamental_unit(long long d) {
    // PQa / continued fraction of sqrt(d); convergents fit u128 for d <= ~10^4
    using u128 = unsigned __int128;
    long long a0 = llsqrt(d);
    if (a0 * a0 == d) throw std::invalid_argument("o2: d must be nonsquare");
    long long m = 0, q = 1, a = a0;
    u128 p_prev = 1, p = (u128)a0, q_prev = 0, qq = 1;
    for (int i = 0; i < 100000; ++i) {
        m = a * q - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        u128 pn = (u128)a * p + p_prev;
        u128 qn = (u128)a * qq + q_prev;
        p_prev = p;
        q_prev = qq;
        p = pn;
        qq = qn;
        if (q == 1) {
            unsigned long long x = (unsigned long long)p_prev;
            unsigned long long y = (unsigned long long)q_prev;
            __int128 n = (__int128)x * x - (__int128)d * y * y;
            if (n != 1 && n != -1) throw std::runtime_error("o2: PQa did not yield a unit");
            return {x, y, n == 1 ? 1 : -1};
        }
    }
    throw std::runtime_error("o2: period not found");
}

namespace {

// Z-module generated by alpha = x + y sqrt(d) and alpha*sqrt(d) over the
// basis (1, sqrt(d)), in Hermite form. Returns (norm, root, content).
void principal_module(long long x, long long y, long long d, long long* norm, long long* root,
                      long long* content) {
    // rows (x, y) and (d y, x); column-2 gcd by integer row operations
    long long a1 = x, b1 = y, a2 = d * y, b2 = x;
    while (b2 != 0) {
        long long t = b1 / b2;
        long long na = a1 - t * a2, nb = b1 - t * b2;
        a1 = a2;
        b1 = b2;
        a2 = na;
        b2 = nb;
    }
    long long g = b1 < 0 ? -b1 : b1;
    long long n = a2 < 0 ? -a2 : a2;
    *content = g;
    if (g == 0 || n % g != 0) {
        *norm = 0;
        *root = 0;
        return;
    }
    *norm = n / g;
    long long B = a1 / b1;
    *root = *norm ? ((B % *norm) + *norm) % *norm : 0;
}

} // namespace

bool o2_principal(long long norm, long long root, long long d) {
    PellSolution unit = o2_fundamental_unit(d);
    // Pell +1 solution (u, v); square the unit if its norm is -1
    unsigned long long u, v;
    if (unit.norm == 1) {
        u = unit.x;
        v = unit.y;
    } else {
        u = unit.x * unit.x + (unsigned long long)d * unit.y * unit.y;
        v = 2 * unit.x * unit.y;
    }
    // Nagell's fundamental-solution bounds for x^2 - d y^2 = +-N:
    //   N > 0: 0 <= y <= v sqrt(N) / sqrt(2(u+1))
    //   N < 0: 0 <  y <= v sqrt(N) / sqrt(2(u-1))
    long double nrm = (long double)norm;
    long double ymax1 = (long double)v * sqrtl(nrm) / sqrtl(2.0L * (u + 1));
    long double ymax2 = (long double)v * sqrtl(nrm) / sqrtl(2.0L * (u - 1));
    long long ymax = (long long)(ymax1 > ymax2 ? ymax1 : ymax2) + 2;

    for (long long y = 0; y <= ymax; ++y) {
        for (int sign = 0; sign < 2; ++sign) {
            long long t = d * y * y + (sign ? -norm : norm);
            if (t < 0) continue;
            long long x = llsqrt(t);
            if (x * x != t) continue;
            for (long long xs : {x, -x}) {
                if (xs == 0 && y == 0) continue;
                long long n2, b2, g;
                principal_module(xs, y, d, &n2, &b2, &g);
                if (g == 1 && n2 == norm && b2 == root) return true;
                if (xs == 0) break;
            }
        }
    }
    return false;
}

} // namespace oracle
