#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncalg/central_fraction.hpp"
#include "test_support.hpp"

using namespace ncalg;
using ncalg::testing::Rng;

static const CatalogEntry &LX() { return catalog(AlgebraId::D_LX); }

static CentralFraction F(const std::string &text, int power) {
    return {&LX(), CenterId::Z, parse_polynomial(text, LX().pres, &LX().distinguished), power};
}

TEST_CASE("fraction arithmetic basics") {
    // q * (q g^-1 / z) = 1 since q^2 g^-1 = z.
    CHECK(frac_equals_scalar(frac_mul(F("q", 0), F("q*g^-1", 1)), Rational(1)));
    CHECK(frac_add(F("x", 0), F("-x", 0)).is_zero());
    CHECK(frac_equals_scalar(frac_commutator(F("z", 1), F("v", 0)), Rational(0)));

    // Denominator powers add exactly.
    CHECK(frac_mul(F("x", 2), F("y", 3)).power() == 5);

    CentralFraction theta_side{&LX(), CenterId::Theta, NcPolynomial::one(), 0};
    CHECK_THROWS_AS(frac_mul(F("x", 0), theta_side), MixedCentersError);
}

TEST_CASE("fraction equality is an equivalence (fuzz)") {
    Rng rng(41);
    const NcPolynomial z = LX().elements.z;
    for (int i = 0; i < 100; ++i) {
        NcPolynomial base = rng.polynomial(LX().pres, 3, 3);
        int p0 = rng.uniform(0, 2);
        // Three representations of the same fraction.
        CentralFraction a{&LX(), CenterId::Z, base, p0};
        CentralFraction b{&LX(), CenterId::Z, multiply(base, z, LX().pres), p0 + 1};
        CentralFraction c{&LX(), CenterId::Z,
                          multiply(multiply(base, z, LX().pres), z, LX().pres), p0 + 2};
        CHECK(frac_equal(a, b));
        CHECK(frac_equal(b, c));
        CHECK(frac_equal(a, c)); // transitivity cross-check
    }
}

TEST_CASE("weyl coordinate brackets: (1,1,0,0,0,0) plus central rows") {
    for (WeylCase which : {WeylCase::A, WeylCase::B, WeylCase::C, WeylCase::D}) {
        for (const auto &row : weyl_bracket_battery(which)) {
            INFO(weyl_case_name(which) << " " << row.label);
            CHECK(row.ok);
        }
    }
}

TEST_CASE("eta sign election") {
    CHECK_FALSE(weyl_coordinates(WeylCase::A).sign_flipped);
    CHECK_FALSE(weyl_coordinates(WeylCase::B).sign_flipped);
    CHECK(weyl_coordinates(WeylCase::A).printed_bracket == 1);
    CHECK(weyl_coordinates(WeylCase::B).printed_bracket == 1);

    // As printed, eta_C = -u q zeta gives [eta, t] = -1; the suite elects
    // the flipped sign. eta_D = u s zeta already satisfies the bracket.
    const WeylCoordinates &c = weyl_coordinates(WeylCase::C);
    CHECK(c.printed_bracket == -1);
    CHECK(c.sign_flipped);
    CHECK(frac_equals_scalar(frac_commutator(c.eta_printed, c.t), Rational(-1)));
    CHECK(frac_equals_scalar(frac_commutator(c.eta, c.t), Rational(1)));

    const WeylCoordinates &d = weyl_coordinates(WeylCase::D);
    CHECK(d.printed_bracket == 1);
    CHECK_FALSE(d.sign_flipped);
}

TEST_CASE("generators are recovered from the coordinates") {
    for (WeylCase which : {WeylCase::A, WeylCase::B, WeylCase::C, WeylCase::D}) {
        auto rows = express_generators(which);
        CHECK(rows.size() == 6);
        for (const auto &row : rows) {
            INFO(weyl_case_name(which) << " " << row.label << " -> " << row.residual);
            CHECK(row.ok);
        }
    }
}

TEST_CASE("spot identities from the A case") {
    const WeylCoordinates &a = weyl_coordinates(WeylCase::A);
    // [p_A, q_A] = 1 and [p_A, t_A] = 0.
    CHECK(frac_equals_scalar(frac_commutator(a.p, a.q), Rational(1)));
    CHECK(frac_equals_scalar(frac_commutator(a.p, a.t), Rational(0)));
    // g = q^2 z^-1 restated: z g - q^2 = 0.
    CHECK(frac_equal(frac_mul(F("g", 0), F("z", 0)), frac_mul(F("q", 0), F("q", 0))));
}
