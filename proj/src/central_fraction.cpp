#include "ncalg/central_fraction.hpp"

#include "ncalg/parser.hpp"

namespace ncalg {

std::string center_name(CenterId c) { return c == CenterId::Z ? "z" : "theta"; }

CentralFraction::CentralFraction(const CatalogEntry *algebra, CenterId center,
                                 NcPolynomial numerator, int power)
    : algebra_(algebra), center_(center), num_(std::move(numerator)), power_(power) {
    if (power < 0)
        throw Error("central fraction wants a non-negative denominator power");
}

const NcPolynomial &CentralFraction::center_polynomial() const {
    return center_ == CenterId::Z ? algebra_->elements.z : algebra_->elements.theta;
}

namespace {

void require_compatible(const CentralFraction &a, const CentralFraction &b) {
    if (a.algebra() != b.algebra() || a.center() != b.center())
        throw MixedCentersError("fractions live over different localizations");
}

NcPolynomial center_power(const CentralFraction &f, int n) {
    return power(f.center_polynomial(), n, f.algebra()->pres);
}

} // namespace

CentralFraction frac_mul(const CentralFraction &a, const CentralFraction &b) {
    require_compatible(a, b);
    return {a.algebra(), a.center(),
            multiply(a.numerator(), b.numerator(), a.algebra()->pres), a.power() + b.power()};
}

CentralFraction frac_add(const CentralFraction &a, const CentralFraction &b) {
    require_compatible(a, b);
    const auto &pres = a.algebra()->pres;
    int n = std::max(a.power(), b.power());
    NcPolynomial num = multiply(a.numerator(), center_power(a, n - a.power()), pres) +
                       multiply(b.numerator(), center_power(b, n - b.power()), pres);
    return {a.algebra(), a.center(), std::move(num), n};
}

CentralFraction frac_neg(const CentralFraction &a) {
    return {a.algebra(), a.center(), -a.numerator(), a.power()};
}

CentralFraction frac_sub(const CentralFraction &a, const CentralFraction &b) {
    return frac_add(a, frac_neg(b));
}

CentralFraction frac_scale(const CentralFraction &a, const Rational &c) {
    return {a.algebra(), a.center(), a.numerator() * c, a.power()};
}

CentralFraction frac_commutator(const CentralFraction &a, const CentralFraction &b) {
    return frac_sub(frac_mul(a, b), frac_mul(b, a));
}

bool frac_equal(const CentralFraction &a, const CentralFraction &b) {
    require_compatible(a, b);
    const auto &pres = a.algebra()->pres;
    NcPolynomial lhs = multiply(a.numerator(), center_power(a, b.power()), pres);
    NcPolynomial rhs = multiply(b.numerator(), center_power(b, a.power()), pres);
    return lhs == rhs;
}

bool frac_equals_scalar(const CentralFraction &a, const Rational &c) {
    return frac_equal(a, {a.algebra(), a.center(), NcPolynomial::constant(c), 0});
}

std::string format_fraction(const CentralFraction &a) {
    std::string num = format_polynomial(a.numerator(), a.algebra()->pres);
    if (a.power() == 0)
        return num;
    return "(" + num + ")*" + center_name(a.center()) + "^-" + std::to_string(a.power());
}

std::string weyl_case_name(WeylCase w) {
    switch (w) {
    case WeylCase::A: return "A";
    case WeylCase::B: return "B";
    case WeylCase::C: return "C";
    case WeylCase::D: return "D";
    }
    return "?";
}

namespace {

struct CaseSetup {
    const CatalogEntry *algebra;
    CenterId center;
    // All numerators below are normal forms in the localized algebra.
    CentralFraction p, q, t, eta_printed;
};

CentralFraction poly_frac(const CatalogEntry *e, CenterId c, const std::string &text, int power) {
    return {e, c, parse_polynomial(text, e->pres, &e->distinguished), power};
}

CaseSetup case_setup(WeylCase which) {
    const CatalogEntry *lx = &catalog(AlgebraId::D_LX);
    const CatalogEntry *lu = &catalog(AlgebraId::D_LU);
    switch (which) {
    case WeylCase::A:
        // p = -2 q^-1 x^-1 y, q, t = q x^-1, eta = -x q^-1 zeta,
        // with q^-1 realized as z^-1 q g^-1.
        return {lx, CenterId::Z, poly_frac(lx, CenterId::Z, "-2*q*g^-1*x^-1*y", 1),
                poly_frac(lx, CenterId::Z, "q", 0), poly_frac(lx, CenterId::Z, "q*x^-1", 0),
                poly_frac(lx, CenterId::Z, "-x*q*g^-1*zeta", 1)};
    case WeylCase::B:
        // Same shape with s and theta; s^-1 = theta^-1 s g^-1.
        return {lx, CenterId::Theta, poly_frac(lx, CenterId::Theta, "-2*s*g^-1*x^-1*y", 1),
                poly_frac(lx, CenterId::Theta, "s", 0),
                poly_frac(lx, CenterId::Theta, "s*x^-1", 0),
                poly_frac(lx, CenterId::Theta, "-x*s*g^-1*zeta", 1)};
    case WeylCase::C:
        return {lu, CenterId::Z, poly_frac(lu, CenterId::Z, "2*q*g^-1*u^-1*v", 1),
                poly_frac(lu, CenterId::Z, "q", 0),
                poly_frac(lu, CenterId::Z, "q*g^-1*u^-1", 1),
                poly_frac(lu, CenterId::Z, "-u*q*zeta", 0)};
    case WeylCase::D:
        return {lu, CenterId::Theta, poly_frac(lu, CenterId::Theta, "2*s*g^-1*u^-1*v", 1),
                poly_frac(lu, CenterId::Theta, "s", 0),
                poly_frac(lu, CenterId::Theta, "s*g^-1*u^-1", 1),
                poly_frac(lu, CenterId::Theta, "u*s*zeta", 0)};
    }
    throw Error("unknown case");
}

WeylCoordinates build_case(WeylCase which) {
    CaseSetup s = case_setup(which);
    WeylCoordinates w;
    w.which = which;
    w.algebra = s.algebra;
    w.center = s.center;
    w.p = s.p;
    w.q = s.q;
    w.t = s.t;
    w.eta_printed = s.eta_printed;

    CentralFraction bracket = frac_commutator(s.eta_printed, s.t);
    if (frac_equals_scalar(bracket, Rational(1))) {
        w.printed_bracket = 1;
        w.eta = s.eta_printed;
        w.sign_flipped = false;
    } else if (frac_equals_scalar(bracket, Rational(-1))) {
        w.printed_bracket = -1;
        w.eta = frac_neg(s.eta_printed);
        w.sign_flipped = true;
    } else {
        throw Error("[eta, t] is neither 1 nor -1 in case " + weyl_case_name(which));
    }
    return w;
}

} // namespace

const WeylCoordinates &weyl_coordinates(WeylCase which) {
    static const WeylCoordinates a = build_case(WeylCase::A);
    static const WeylCoordinates b = build_case(WeylCase::B);
    static const WeylCoordinates c = build_case(WeylCase::C);
    static const WeylCoordinates d = build_case(WeylCase::D);
    switch (which) {
    case WeylCase::A: return a;
    case WeylCase::B: return b;
    case WeylCase::C: return c;
    case WeylCase::D: return d;
    }
    throw Error("unknown case");
}

std::vector<BracketRow> weyl_bracket_battery(WeylCase which) {
    const WeylCoordinates &w = weyl_coordinates(which);
    std::vector<BracketRow> rows;
    auto check = [&](const std::string &label, const CentralFraction &a,
                     const CentralFraction &b, const Rational &expected) {
        CentralFraction bracket = frac_commutator(a, b);
        bool ok = frac_equals_scalar(bracket, expected);
        rows.push_back({label, expected, ok, ok ? "" : format_fraction(bracket)});
    };
    check("[p,q]", w.p, w.q, Rational(1));
    check("[eta,t]", w.eta, w.t, Rational(1));
    check("[p,t]", w.p, w.t, Rational(0));
    check("[p,eta]", w.p, w.eta, Rational(0));
    check("[q,t]", w.q, w.t, Rational(0));
    check("[q,eta]", w.q, w.eta, Rational(0));

    // The center acts centrally on all four coordinates.
    const CatalogEntry *e = w.algebra;
    CentralFraction zc{e, w.center, e->elements.z, 0};
    CentralFraction wc{e, w.center, e->elements.omega, 0};
    const std::pair<std::string, const CentralFraction *> coords[] = {
        {"p", &w.p}, {"q", &w.q}, {"t", &w.t}, {"eta", &w.eta}};
    for (const auto &[name, f] : coords) {
        check("[z," + name + "]", zc, *f, Rational(0));
        check("[omega," + name + "]", wc, *f, Rational(0));
    }
    return rows;
}

std::vector<ExpressRow> express_generators(WeylCase which) {
    const WeylCoordinates &w = weyl_coordinates(which);
    const CatalogEntry *e = w.algebra;
    const auto &pres = e->pres;
    auto gen = [&](const std::string &n) {
        return CentralFraction{e, w.center, parse_polynomial(n, pres, &e->distinguished), 0};
    };

    std::vector<ExpressRow> rows;
    auto check = [&](const std::string &label, const CentralFraction &residual) {
        rows.push_back({label, residual.is_zero() || frac_equals_scalar(residual, Rational(0)),
                        format_fraction(residual)});
    };

    const bool on_x = (which == WeylCase::A || which == WeylCase::B);
    const std::string nq = (which == WeylCase::A || which == WeylCase::C) ? "q" : "s";

    if (on_x) {
        // x t = q', y = -1/2 q' x p, zeta = -t eta (elected sign).
        check("x*t - " + nq, frac_sub(frac_mul(gen("x"), w.t), w.q));
        check("y + 1/2*" + nq + "*x*p",
              frac_add(gen("y"),
                       frac_scale(frac_mul(frac_mul(w.q, gen("x")), w.p), Rational(1, 2))));
        // t*eta = -zeta in the x cases.
        check("zeta + t*eta", frac_add(gen("zeta"), frac_mul(w.t, w.eta)));
        check("u*x - (q - 2 - 2*g)", frac_sub(frac_mul(gen("u"), gen("x")),
                                              gen("q - 2 - 2*g")));
    } else {
        // u q' t = 1, v = 1/2 q' u p, zeta = ± t eta.
        check("u*" + nq + "*t - 1",
              frac_sub(frac_mul(frac_mul(gen("u"), w.q), w.t), gen("1")));
        check("v - 1/2*" + nq + "*u*p",
              frac_sub(gen("v"),
                       frac_scale(frac_mul(frac_mul(w.q, gen("u")), w.p), Rational(1, 2))));
        // t*eta = +zeta in the u cases (elected sign).
        check("zeta - t*eta", frac_sub(gen("zeta"), frac_mul(w.t, w.eta)));
        check("x*u - (q - 2 - 2*g)", frac_sub(frac_mul(gen("x"), gen("u")),
                                              gen("q - 2 - 2*g")));
    }

    // g from the center: z g = q^2 resp. theta g = s^2.
    if (w.center == CenterId::Z)
        check("g*z - q^2", frac_sub(frac_mul(gen("g"), gen("z")), frac_mul(gen("q"), gen("q"))));
    else
        check("g*theta - s^2",
              frac_sub(frac_mul(gen("g"), gen("theta")), frac_mul(gen("s"), gen("s"))));

    // The missing normal generator via the center: q s = omega g.
    check("q*s - omega*g",
          frac_sub(frac_mul(gen("q"), gen("s")), frac_mul(gen("omega"), gen("g"))));

    return rows;
}

} // namespace ncalg
