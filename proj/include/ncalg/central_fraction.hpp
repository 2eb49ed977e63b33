#pragma once

#include "ncalg/catalog.hpp"

namespace ncalg {

enum class CenterId { Z, Theta };

std::string center_name(CenterId c);

// Element a * c^-n of the localization of D_LX / D_LU at the powers of a
// central element c (z or theta). Stored as (numerator, power); no
// automatic reduction. Equality is by cross-multiplication.
class CentralFraction {
  public:
    CentralFraction() = default;
    CentralFraction(const CatalogEntry *algebra, CenterId center, NcPolynomial numerator,
                    int power);

    const CatalogEntry *algebra() const { return algebra_; }
    CenterId center() const { return center_; }
    const NcPolynomial &numerator() const { return num_; }
    int power() const { return power_; }

    bool is_zero() const { return num_.is_zero(); }

    const NcPolynomial &center_polynomial() const;

  private:
    const CatalogEntry *algebra_ = nullptr;
    CenterId center_ = CenterId::Z;
    NcPolynomial num_;
    int power_ = 0;
};

CentralFraction frac_mul(const CentralFraction &a, const CentralFraction &b);
CentralFraction frac_add(const CentralFraction &a, const CentralFraction &b);
CentralFraction frac_sub(const CentralFraction &a, const CentralFraction &b);
CentralFraction frac_neg(const CentralFraction &a);
CentralFraction frac_scale(const CentralFraction &a, const Rational &c);
CentralFraction frac_commutator(const CentralFraction &a, const CentralFraction &b);

bool frac_equal(const CentralFraction &a, const CentralFraction &b);
bool frac_equals_scalar(const CentralFraction &a, const Rational &c);

std::string format_fraction(const CentralFraction &a);

enum class WeylCase { A, B, C, D };

std::string weyl_case_name(WeylCase w);

// Coordinates p, q, t, eta of one localization, with the eta sign elected
// so that [eta, t] = 1. The printed sign and its bracket value are kept
// for the report.
struct WeylCoordinates {
    WeylCase which = WeylCase::A;
    const CatalogEntry *algebra = nullptr;
    CenterId center = CenterId::Z;
    CentralFraction p, q, t, eta;
    CentralFraction eta_printed;
    int printed_bracket = 0; // value of [eta_printed, t]: +1 or -1
    bool sign_flipped = false;
};

const WeylCoordinates &weyl_coordinates(WeylCase which);

struct BracketRow {
    std::string label;
    Rational expected;
    bool ok = false;
    std::string residual; // empty when ok
};

// The six pairwise brackets of {p, q, t, eta}: (1, 1, 0, 0, 0, 0), plus
// centrality of z and omega against all four coordinates.
std::vector<BracketRow> weyl_bracket_battery(WeylCase which);

struct ExpressRow {
    std::string label;
    bool ok = false;
    std::string residual;
};

// Recovers the algebra generators inside the span of the coordinates and
// the center: each identity's two sides subtract to zero.
std::vector<ExpressRow> express_generators(WeylCase which);

} // namespace ncalg
