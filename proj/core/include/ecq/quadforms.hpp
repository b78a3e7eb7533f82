#pragma once

#include <cstdint>
#include <vector>

#include "ecq/arith.hpp"

namespace ecq {

// Positive nonsquare discriminant, 0 or 1 mod 4. Caches floor(sqrt(delta)).
class Discriminant {
  public:
    explicit Discriminant(Int delta);

    const Int& value() const { return delta_; }
    const Int& sqrt_floor() const { return sqrt_; }

  private:
    Int delta_;
    Int sqrt_;
};

// Indefinite binary quadratic form a x^2 + b x y + c y^2.
struct QuadForm {
    Int a, b, c;

    Int discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

// (a, -b, c) represents the inverse class.
QuadForm inverse(const QuadForm& f);

QuadForm principal_form(const Discriminant& delta);

// 0 < b < sqrt(delta) and sqrt(delta) - b < 2|a| < sqrt(delta) + b,
// decided by exact integer comparisons.
bool is_reduced(const QuadForm& f, const Discriminant& delta);

// One reduction / cycle step (a,b,c) -> (c,b',c'). From any form this
// reaches a reduced form in finitely many steps, then cycles through the
// reduced forms of the class.
QuadForm rho(const QuadForm& f, const Discriminant& delta);

QuadForm reduce(const QuadForm& f, const Discriminant& delta);

// The full rho-cycle of reduce(f), starting at reduce(f).
std::vector<QuadForm> reduction_cycle(const QuadForm& f, const Discriminant& delta);

// Dirichlet composition; returns a reduced representative of the product class.
QuadForm compose(const QuadForm& f, const QuadForm& g, const Discriminant& delta);

// Narrow (proper) equivalence: reduce(g) occurs in the cycle of reduce(f).
bool is_equivalent(const QuadForm& f, const QuadForm& g, const Discriminant& delta);

// Cycle of f contains leading coefficient +1 (narrow) resp. +-1 (wide).
bool is_principal_narrow(const QuadForm& f, const Discriminant& delta);
bool is_principal_wide_form(const QuadForm& f, const Discriminant& delta);

struct ClassNumbers {
    Int h_narrow;
    Int h_wide;
    std::uint64_t reduced_form_count; // primitive reduced forms
};

// Cycle-count enumeration over all primitive reduced forms. Exact; uses a
// 64-bit fast path when delta fits.
ClassNumbers class_number(const Discriminant& delta);

// Least n >= 1 with f^n principal (narrow). max_steps caps the compose walk.
Int class_order(const QuadForm& f, const Discriminant& delta, std::uint64_t max_steps = 1'000'000);

} // namespace ecq
