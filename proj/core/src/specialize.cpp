#include "ecq/specialize.hpp"

namespace ecq {

const char* to_string(Status s) {
    switch (s) {
        case Status::Ok: return "Ok";
        case Status::DNonPositive: return "DNonPositive";
        case Status::DSquare: return "DSquare";
        case Status::DNotSquarefree: return "DNotSquarefree";
        case Status::PointAbovePrime: return "PointAbovePrime";
        case Status::NonInvertible: return "NonInvertible";
        case Status::NoOddNormRepresentative: return "NoOddNormRepresentative";
        case Status::FactorizationTimeout: return "FactorizationTimeout";
    }
    return "?";
}

Int discriminant_value(const Curve& c, const Int& p) {
    if (p < 3) throw PrimeTooSmallError("specialization needs p >= 3");
    if (!is_prime(p)) throw NotPrimeError("specialization needs p prime");
    return p * p * p + c.a() * p + c.b();
}

SpecializationResult specialize_point(const Curve& c, const CanonicalPoint& pt, const Int& p,
                                      const SpecializeOptions& opt) {
    SpecializationResult r;
    r.p = p;
    r.order_mode = opt.order_mode;
    r.d = discriminant_value(c, p);
    r.bad_reduction = mpz_divisible_p(Int(4 * c.a() * c.a() * c.a() + 27 * c.b() * c.b()).get_mpz_t(),
                                      p.get_mpz_t());
    r.denominator_prime = mpz_divisible_p(pt.e.get_mpz_t(), p.get_mpz_t());

    // field validity first: positivity, nonsquare, squarefree
    if (r.d <= 0) {
        r.status = Status::DNonPositive;
        return r;
    }
    if (is_square(r.d)) {
        r.status = Status::DSquare;
        return r;
    }
    try {
        r.d_factorization = factorize(r.d, opt.factor_budget);
    } catch (const FactorizationTimeoutError&) {
        r.status = Status::FactorizationTimeout;
        return r;
    }
    r.squarefree = r.d_factorization->squarefree();
    if (!r.squarefree && !opt.order_mode) {
        r.status = Status::DNotSquarefree;
        return r;
    }

    r.A = pt.k - p * pt.e * pt.e;
    if (r.A == 0) {
        r.status = Status::PointAbovePrime;
        return r;
    }
    Int aA = abs(r.A);
    // gcd(k,e) = 1 forces gcd(A,e) = 1, so e^3 is invertible mod |A|
    Int e3 = mod_floor(pt.e * pt.e * pt.e, aA);
    r.B = mod_floor(pt.m * mod_inverse(e3, aA), aA);
    if (!mpz_divisible_p(Int(r.B * r.B - r.d).get_mpz_t(), aA.get_mpz_t()))
        throw AssertionError("specialize: B^2 != d (mod |A|)");

    r.ideal = make_ideal(r.d, aA, r.B);
    r.form = ideal_to_form(*r.ideal);
    if (!r.form->is_primitive()) {
        r.status = Status::NonInvertible;
        return r;
    }
    if (r.squarefree) {
        r.field = field_data(r.d);
        try {
            r.maximal_form = lift_to_maximal(*r.ideal, *r.field);
        } catch (const NoOddNormRepresentativeError&) {
            r.status = Status::NoOddNormRepresentative;
            return r;
        }
    }
    r.status = Status::Ok;
    return r;
}

ClassVerdict class_verdict(const SpecializationResult& r) {
    if (r.status != Status::Ok) throw NotOkError("class_verdict: specialization not Ok");
    ClassVerdict v;
    Discriminant delta(4 * r.d);
    v.order_in_order_class_group = class_order(*r.form, delta);
    if (r.maximal_form) {
        Discriminant dk(r.field->fundamental_discriminant);
        v.order_in_maximal = class_order(*r.maximal_form, dk);
        v.nontrivial = !is_principal_wide_form(*r.maximal_form, dk);
    } else {
        v.nontrivial = !is_principal_wide_form(*r.form, delta);
    }
    return v;
}

std::vector<HomomorphismRow> homomorphism_check(const Curve& c, const Point& p, const Int& prime,
                                                const std::vector<Int>& multiples,
                                                const SpecializeOptions& opt) {
    std::vector<HomomorphismRow> rows;
    SpecializationResult base = specialize_point(c, canonicalize(c, p), prime, opt);
    for (const Int& n : multiples) {
        HomomorphismRow row;
        row.n = n;
        Point q = scalar_mul(c, n, p);
        if (q.is_infinity()) {
            row.status = Status::PointAbovePrime; // nP not affine; nothing to specialize
            rows.push_back(row);
            continue;
        }
        SpecializationResult rn = specialize_point(c, canonicalize(c, q), prime, opt);
        row.status = rn.status;
        if (rn.status == Status::Ok && base.status == Status::Ok) {
            Discriminant delta(4 * base.d);
            // n-th compose power of the base class
            QuadForm pw = principal_form(delta);
            QuadForm g = n >= 0 ? *base.form : inverse(*base.form);
            Int k = abs(n);
            for (Int i = 0; i < k; ++i) pw = compose(pw, g, delta);
            row.comparable = true;
            row.match_narrow = is_equivalent(*rn.form, pw, delta);
            row.match_wide =
                row.match_narrow || is_principal_wide_form(compose(*rn.form, inverse(pw), delta), delta);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace ecq
