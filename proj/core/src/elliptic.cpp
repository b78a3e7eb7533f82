#include "ecq/elliptic.hpp"

namespace ecq {

Curve::Curve(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {
    Int t = 4 * a_ * a_ * a_ + 27 * b_ * b_;
    if (t == 0) throw SingularCurveError("4a^3 + 27b^2 = 0");
    disc_ = -16 * t;
}

Point Point::affine(Rat x, Rat y) {
    Point p;
    p.inf_ = false;
    x.canonicalize();
    y.canonicalize();
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
}

bool Point::operator==(const Point& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return x_ == o.x_ && y_ == o.y_;
}

bool on_curve(const Curve& c, const Point& p) {
    if (p.is_infinity()) return true;
    const Rat& x = p.x();
    const Rat& y = p.y();
    return y * y == x * x * x + Rat(c.a()) * x + Rat(c.b());
}

Point negate(const Point& p) {
    if (p.is_infinity()) return p;
    return Point::affine(p.x(), -p.y());
}

Point add(const Curve& c, const Point& p, const Point& q) {
    if (!on_curve(c, p) || !on_curve(c, q)) throw NotOnCurveError("add: point not on curve");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rat lambda;
    if (x1 == x2) {
        if (y1 == -y2) return Point::infinity(); // includes the y = 0 doubling case
        lambda = (3 * x1 * x1 + Rat(c.a())) / (2 * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    Rat x3 = lambda * lambda - x1 - x2;
    Rat y3 = lambda * (x1 - x3) - y1;
    return Point::affine(x3, y3);
}

Point scalar_mul(const Curve& c, const Int& n, const Point& p) {
    if (!on_curve(c, p)) throw NotOnCurveError("scalar_mul: point not on curve");
    Int k = n;
    Point base = p;
    if (k < 0) {
        k = -k;
        base = negate(base);
    }
    Point acc = Point::infinity();
    // double-and-add, msb first
    for (long i = k == 0 ? -1 : (long)mpz_sizeinbase(k.get_mpz_t(), 2) - 1; i >= 0; --i) {
        acc = add(c, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(c, acc, base);
    }
    return acc;
}

CanonicalPoint canonicalize(const Curve& c, const Point& p) {
    if (p.is_infinity() || !on_curve(c, p))
        throw NotOnCurveError("canonicalize: need an affine point on the curve");
    Int dx(p.x().get_den());
    Int dy(p.y().get_den());
    if (!is_square(dx)) throw NonCanonicalDenominatorsError("x denominator is not a square");
    Int e = isqrt(dx);
    if (e * e * e != dy) throw NonCanonicalDenominatorsError("y denominator is not e^3");
    CanonicalPoint cp{Int(p.x().get_num()), Int(p.y().get_num()), e};
    // m^2 = k^3 + a k e^4 + b e^6 is the curve equation with cleared denominators
    Int e2 = cp.e * cp.e;
    if (cp.m * cp.m != cp.k * cp.k * cp.k + c.a() * cp.k * e2 * e2 + c.b() * e2 * e2 * e2)
        throw AssertionError("canonicalize: cleared equation failed");
    return cp;
}

Point from_canonical(const CanonicalPoint& cp) {
    Int e2 = cp.e * cp.e;
    return Point::affine(Rat(cp.k) / Rat(e2), Rat(cp.m) / Rat(e2 * cp.e));
}

std::optional<unsigned> is_torsion(const Curve& c, const Point& p) {
    if (!on_curve(c, p)) throw NotOnCurveError("is_torsion: point not on curve");
    if (p.is_infinity()) return 1u;
    static constexpr unsigned kMazurOrders[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
    Point acc = p;
    unsigned reached = 1;
    for (unsigned n : kMazurOrders) {
        while (reached < n) {
            acc = add(c, acc, p);
            ++reached;
        }
        if (acc.is_infinity()) {
            // Lutz-Nagell: integer coordinates, y = 0 or y^2 | disc(E)
            if (p.x().get_den() != 1 || p.y().get_den() != 1)
                throw AssertionError("torsion point with non-integral coordinates");
            Int y(p.y().get_num());
            if (y != 0 && !mpz_divisible_p(c.discriminant().get_mpz_t(), Int(y * y).get_mpz_t()))
                throw AssertionError("torsion point fails Lutz-Nagell divisibility");
            return n;
        }
    }
    return std::nullopt;
}

} // namespace ecq
