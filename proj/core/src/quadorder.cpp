#include "ecq/quadorder.hpp"

namespace ecq {

QuadIdeal make_ideal(const Int& d, const Int& norm, const Int& root) {
    if (d <= 0 || is_square(d)) throw Error("make_ideal: d must be positive nonsquare");
    if (norm <= 0) throw Error("make_ideal: norm must be positive");
    Int b = mod_floor(root, norm);
    if (!mpz_divisible_p(Int(b * b - d).get_mpz_t(), norm.get_mpz_t()))
        throw Error("make_ideal: norm does not divide root^2 - d");
    return {d, norm, b};
}

FieldData field_data(const Int& d) {
    if (d <= 1 || is_square(d)) throw NotSquarefreeError("field_data: d must be squarefree > 1");
    if (mod_floor(d, 4) == 1) return {d, d, 2};
    return {d, 4 * d, 1};
}

QuadForm ideal_to_form(const QuadIdeal& ideal) {
    return {ideal.norm, 2 * ideal.root, (ideal.root * ideal.root - ideal.d) / ideal.norm};
}

QuadIdeal form_to_ideal(const QuadForm& f, const Int& d) {
    if (f.discriminant() != 4 * d) throw DiscriminantMismatchError("form_to_ideal: disc != 4d");
    QuadForm g = f;
    if (g.a < 0) {
        // adjacent cycle form has the opposite leading sign
        Discriminant delta(4 * d);
        g = reduce(g, delta);
        if (g.a < 0) g = rho(g, delta);
    }
    if (mod_floor(g.b, 2) != 0) throw AssertionError("form_to_ideal: odd middle coefficient");
    return make_ideal(d, g.a, g.b / 2);
}

bool is_principal_wide(const QuadIdeal& ideal) {
    QuadForm f = ideal_to_form(ideal);
    if (!f.is_primitive()) throw ImprimitiveFormError("is_principal_wide: non-invertible ideal");
    return is_principal_wide_form(f, Discriminant(4 * ideal.d));
}

QuadForm lift_to_maximal(const QuadIdeal& ideal, const FieldData& field) {
    if (ideal.d != field.d) throw DiscriminantMismatchError("lift_to_maximal: field mismatch");
    QuadForm f = ideal_to_form(ideal);
    Discriminant delta(4 * field.d);
    if (field.conductor == 1) return reduce(f, delta);

    // conductor 2: find an odd-norm representative in the cycle
    QuadForm g = reduce(f, delta);
    if (mod_floor(g.a, 2) == 0) {
        QuadForm cur = rho(g, delta);
        while (!(cur == g) && mod_floor(cur.a, 2) == 0) cur = rho(cur, delta);
        if (cur == g) throw NoOddNormRepresentativeError("lift_to_maximal: cycle is all even norms");
        g = cur;
    }
    // [|a|, B + sqrt d] with a odd lifts to the form (a, b', (b'^2 - d)/(4a))
    // of discriminant d, b' odd with b' = B (mod |a|)
    Int aa = abs(g.a);
    Int B = mod_floor(g.b / 2, aa);
    Int bp = mod_floor(B, 2) == 1 ? B : B + aa;
    Int num = bp * bp - field.d;
    if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * g.a).get_mpz_t()))
        throw AssertionError("lift_to_maximal: lift congruence failed");
    return reduce({g.a, bp, num / (4 * g.a)}, Discriminant(field.fundamental_discriminant));
}

} // namespace ecq
