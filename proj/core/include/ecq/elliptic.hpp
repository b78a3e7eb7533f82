#pragma once

#include <optional>

#include "ecq/arith.hpp"

namespace ecq {

// y^2 = x^3 + a*x + b over Q, integer coefficients, nonsingular.
class Curve {
  public:
    Curve(Int a, Int b);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    // -16(4a^3 + 27b^2)
    const Int& discriminant() const { return disc_; }

  private:
    Int a_, b_;
    Int disc_;
};

// Affine point or the point at infinity. Rationals kept reduced with
// positive denominator (mpq canonical form).
class Point {
  public:
    static Point infinity() { return Point(); }
    static Point affine(Rat x, Rat y);

    bool is_infinity() const { return inf_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    bool operator==(const Point& o) const;

  private:
    Point() : inf_(true) {}
    bool inf_;
    Rat x_, y_;
};

// Denominator-cleared triple: x = k/e^2, y = m/e^3, e >= 1,
// gcd(k,e) = gcd(m,e) = 1, and m^2 = k^3 + a k e^4 + b e^6 exactly.
struct CanonicalPoint {
    Int k, m, e;
};

bool on_curve(const Curve& c, const Point& p);

Point negate(const Point& p);
Point add(const Curve& c, const Point& p, const Point& q);
Point scalar_mul(const Curve& c, const Int& n, const Point& p);

CanonicalPoint canonicalize(const Curve& c, const Point& p);
Point from_canonical(const CanonicalPoint& cp);

// Order if p is torsion (tested against Mazur's admissible orders
// {1..10, 12}), nullopt if p has infinite order. When an order is found the
// Lutz-Nagell conditions are asserted as a consistency check.
std::optional<unsigned> is_torsion(const Curve& c, const Point& p);

} // namespace ecq
