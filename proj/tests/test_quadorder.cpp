#include <doctest.h>

#include <random>

#include "ecq/quadorder.hpp"
#include "oracles.hpp"

using namespace ecq;

TEST_CASE("ideal normalization") {
    QuadIdeal i = make_ideal(123, 2, 1);
    CHECK(i.norm == 2);
    CHECK(i.root == 1);
    CHECK(make_ideal(123, 2, 3).root == 1); // reduced mod norm
    CHECK_THROWS_AS(make_ideal(123, 2, 0), Error); // 2 does not divide -123
    CHECK_THROWS_AS(make_ideal(25, 2, 1), Error);  // square d
}

TEST_CASE("field data") {
    FieldData f10 = field_data(10);
    CHECK(f10.fundamental_discriminant == 40);
    CHECK(f10.conductor == 1);
    FieldData f5 = field_data(5);
    CHECK(f5.fundamental_discriminant == 5);
    CHECK(f5.conductor == 2);
    // conductor^2 * Delta_K = 4d both ways
    CHECK(Int(f10.conductor * f10.conductor) * f10.fundamental_discriminant == 4 * f10.d);
    CHECK(Int(f5.conductor * f5.conductor) * f5.fundamental_discriminant == 4 * f5.d);
}

TEST_CASE("ideal_to_form examples") {
    CHECK(ideal_to_form(make_ideal(123, 2, 1)) == QuadForm{2, 2, -61});
    CHECK(ideal_to_form(make_ideal(10, 2, 0)) == QuadForm{2, 0, -5});
    QuadForm unit = ideal_to_form(make_ideal(10, 1, 0));
    Discriminant d40(40);
    CHECK(is_equivalent(unit, principal_form(d40), d40));
}

TEST_CASE("form_to_ideal examples") {
    CHECK(form_to_ideal({2, 0, -5}, 10) == make_ideal(10, 2, 0));
    CHECK(form_to_ideal({2, 2, -61}, 123) == make_ideal(123, 2, 1));
    Discriminant d40(40);
    QuadIdeal i = form_to_ideal(principal_form(d40), 10);
    CHECK(is_principal_wide(i));
    CHECK_THROWS_AS(form_to_ideal({2, 2, -61}, 10), DiscriminantMismatchError);
}

TEST_CASE("dictionary round trip on classes") {
    for (long d = 2; d <= 500; ++d) {
        Int dd(d);
        if (is_square(dd)) continue;
        Discriminant delta(4 * dd);
        for (long a = 1; a <= 100; ++a) {
            for (long B = 0; B < a; ++B) {
                if ((Int(B) * B - dd) % a != 0) continue;
                QuadIdeal i = make_ideal(dd, a, B);
                QuadForm f = ideal_to_form(i);
                QuadIdeal back = form_to_ideal(f, dd);
                CHECK(is_equivalent(ideal_to_form(back), f, delta));
            }
        }
        if (d > 50) break; // full range is covered by the acceptance suite
    }
}

TEST_CASE("is_principal_wide examples") {
    CHECK(is_principal_wide(make_ideal(123, 2, 1)));      // generator 11 + sqrt(123)
    CHECK_FALSE(is_principal_wide(make_ideal(10, 2, 0))); // x^2 - 10y^2 = +-2 insoluble
    CHECK(is_principal_wide(make_ideal(10, 1, 0)));
    CHECK_THROWS_AS(is_principal_wide(make_ideal(40, 2, 0)), ImprimitiveFormError);
}

TEST_CASE("is_principal_wide agrees with generator search (spot)") {
    std::mt19937 rng(3);
    int tested = 0;
    while (tested < 150) {
        long d = 2 + (long)(rng() % 199);
        long a = 1 + (long)(rng() % 50);
        long B = (long)(rng() % a);
        Int dd(d);
        if (is_square(dd)) continue;
        if ((Int(B) * B - dd) % a != 0) continue;
        QuadIdeal i = make_ideal(dd, a, B);
        if (!ideal_to_form(i).is_primitive()) continue;
        ++tested;
        CHECK(is_principal_wide(i) == oracle::o2_principal(a, B, d));
    }
}

TEST_CASE("lift_to_maximal") {
    // conductor 1: identity on classes
    QuadIdeal i10 = make_ideal(10, 2, 0);
    QuadForm f = lift_to_maximal(i10, field_data(10));
    Discriminant d40(40);
    CHECK(is_equivalent(f, {2, 0, -5}, d40));

    // d = 1 mod 4: unit ideal lifts to the principal class of Delta_K
    QuadForm u = lift_to_maximal(make_ideal(5, 1, 0), field_data(5));
    Discriminant d5(5);
    CHECK(is_equivalent(u, principal_form(d5), d5));

    // even norm forces an odd-norm cycle representative first
    QuadForm l = lift_to_maximal(make_ideal(341, 4, 1), field_data(341));
    CHECK(l.discriminant() == 341);
    Discriminant d341(341);
    CHECK(is_principal_wide_form(l, d341)); // [4, 1+sqrt(341)] is principal in cl(K)
    CHECK(class_order(l, d341) == 1);
}

TEST_CASE("lift_to_maximal is multiplicative on classes") {
    std::mt19937 rng(9);
    const long ds[] = {5, 13, 17, 21, 29, 65, 85, 221, 341};
    for (long d : ds) {
        Int dd(d);
        FieldData fd = field_data(dd);
        Discriminant delta(4 * dd);
        Discriminant dk(fd.fundamental_discriminant);
        std::vector<QuadIdeal> odd_ideals;
        for (long a = 1; a <= 30; a += 2)
            for (long B = 0; B < a; ++B)
                if ((Int(B) * B - dd) % a == 0 && ideal_to_form(make_ideal(dd, a, B)).is_primitive())
                    odd_ideals.push_back(make_ideal(dd, a, B));
        for (int trial = 0; trial < 8 && odd_ideals.size() >= 2; ++trial) {
            const QuadIdeal& i = odd_ideals[rng() % odd_ideals.size()];
            const QuadIdeal& j = odd_ideals[rng() % odd_ideals.size()];
            QuadForm prod = compose(ideal_to_form(i), ideal_to_form(j), delta);
            QuadForm lhs = lift_to_maximal(form_to_ideal(prod, dd), fd);
            QuadForm rhs = compose(lift_to_maximal(i, fd), lift_to_maximal(j, fd), dk);
            CHECK(is_equivalent(lhs, rhs, dk));
        }
    }
}
