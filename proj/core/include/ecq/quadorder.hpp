#pragma once

#include "ecq/quadforms.hpp"

namespace ecq {

// Two-generator ideal [a, B + sqrt(d)] of the order Z[sqrt(d)],
// normalized with a > 0 and 0 <= B < a; requires a | B^2 - d.
struct QuadIdeal {
    Int d;
    Int norm; // a
    Int root; // B

    bool operator==(const QuadIdeal& o) const {
        return d == o.d && norm == o.norm && root == o.root;
    }
};

QuadIdeal make_ideal(const Int& d, const Int& norm, const Int& root);

// Invariants of Q(sqrt(d)) for squarefree d: fundamental discriminant and
// the conductor of Z[sqrt(d)] in the maximal order.
struct FieldData {
    Int d;
    Int fundamental_discriminant; // d if d = 1 mod 4, else 4d
    int conductor;                // 2 if d = 1 mod 4, else 1
};

// Assumes d squarefree (the caller has checked); throws on d <= 1 or square.
FieldData field_data(const Int& d);

// (a, 2B, (B^2 - d)/a), discriminant 4d.
QuadForm ideal_to_form(const QuadIdeal& ideal);

// Inverse up to class; walks one cycle step if the leading coefficient is
// negative. Requires disc(f) = 4d.
QuadIdeal form_to_ideal(const QuadForm& f, const Int& d);

// True iff the ideal has a generator in Z[sqrt(d)] (wide principality):
// the cycle of its form contains a form with leading coefficient +-1.
bool is_principal_wide(const QuadIdeal& ideal);

// Image of the ideal class in the maximal order, as a form of discriminant
// Delta_K. For conductor 2 the ideal is first replaced by an odd-norm
// representative from its cycle; throws NoOddNormRepresentativeError if the
// cycle has none.
QuadForm lift_to_maximal(const QuadIdeal& ideal, const FieldData& field);

} // namespace ecq
