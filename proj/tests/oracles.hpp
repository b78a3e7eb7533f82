#pragma once

// Independent oracles used by the unit and acceptance suites. These are
// deliberately written against small machine integers with their own
// reduction and search code, separate from the library implementation.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

// O1: class numbers by exhaustive reduced-form enumeration plus pairwise
// equivalence closure (bounded cycle walks). Valid for delta up to ~10^9.
struct O1Result {
    long h_narrow;
    long h_wide;
    long reduced_form_count;
};
O1Result o1_class_numbers(long long delta);

// O1 equivalence test between two forms of discriminant delta.
bool o1_equivalent(long long a1, long long b1, long long c1, long long a2, long long b2,
                   long long c2, long long delta);

// O2: wide principality of the ideal [a, B + sqrt(d)] of Z[sqrt(d)] by
// direct generator search: x^2 - d y^2 = +-a with |y| bounded via the
// fundamental unit from the continued fraction of sqrt(d), then a Z-module
// equality check against the ideal.
bool o2_principal(long long norm, long long root, long long d);

// Fundamental solution of x^2 - d y^2 = +-1 (x, y > 0) via PQa.
struct PellSolution {
    unsigned long long x, y;
    int norm; // +1 or -1
};
PellSolution o2_fundamental_unit(long long d);

} // namespace oracle
