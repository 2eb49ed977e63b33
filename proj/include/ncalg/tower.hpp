#pragma once

#include "ncalg/polynomial.hpp"
#include "ncalg/ux_rational.hpp"

#include <functional>
#include <vector>

namespace ncalg {

// Skew-polynomial element over the commutative fraction base, in the
// canonical form  sum c_{jk} y^j w^k  with base coefficients on the left
// (w is the top variable: v in T, alpha in the radical tower).
class TowerElement {
  public:
    using Key = std::pair<int, int>; // (y exponent, top exponent)
    using TermMap = std::map<Key, CommBase>;

    TowerElement() = default;

    static TowerElement of(const CommBase &c);
    static TowerElement constant(const Rational &c) { return of(CommBase::constant(c)); }
    static TowerElement variable_y();
    static TowerElement variable_top();

    bool is_zero() const { return terms_.empty(); }
    const TermMap &terms() const { return terms_; }

    void add_term(const Key &k, const CommBase &c);

    bool operator==(const TowerElement &) const = default;

    friend TowerElement operator+(const TowerElement &a, const TowerElement &b);
    friend TowerElement operator-(const TowerElement &a, const TowerElement &b);
    friend TowerElement operator-(TowerElement a);
    friend TowerElement operator*(const TowerElement &a, const Rational &c);

    std::string str(const std::string &top_name = "v") const;

  private:
    TermMap terms_;
};

// One two-step tower over the fraction base: base[y; d1][top; sigma?, d2].
// sigma fixes the base and sends y to y + x/2; when `twisted` is false
// the top variable is a pure derivation extension.
struct TowerAlgebra {
    std::string name;
    bool base_has_h = false;
    bool twisted = true;
    std::string top_name = "v";
    DerivationSpec d1; // action of y on the base
    DerivationSpec d2; // action of the top variable on the base
    TowerElement d2_of_y;

    TowerElement multiply(const TowerElement &a, const TowerElement &b) const;
    TowerElement commutator(const TowerElement &a, const TowerElement &b) const;
    TowerElement pow(const TowerElement &a, int n) const;

    // sigma and d2 on y-polynomials (elements with no top variable).
    TowerElement sigma_s(const TowerElement &s) const;
    TowerElement d2_s(const TowerElement &s) const;
    TowerElement d1_s(const TowerElement &s) const;
};

// T = (k[u,x]<(ux+2)^-1>)[y; d1][v; sigma, d2] with
//   d1(u) = -1/2 ux - 2,  d1(x) = -1/2 x^2,
//   d2(u) = -1/2 u^2,     d2(x) = 3/2 ux + 2,   d2(y) = 3/2 uy - 2.
const TowerAlgebra &tower_T();

// Radical towers: Stilde = base<h>[y; d1] (top variable unused) and
// Ttilde = Stilde[alpha; d2tilde], d2tilde = h * d2 with
// d2tilde(y) = h(3/2 uy - 2).
const TowerAlgebra &tower_Stilde();
const TowerAlgebra &tower_Ttilde();

// The quotient map of D onto T: x, u, y, v fixed, g -> -1/2(ux+2),
// zeta -> (ux+2)^-1 (ux + xv + uy).
TowerElement pi_image(const NcPolynomial &p);
TowerElement pi_generator_image(const std::string &name, int exponent);

struct TowerCheckRow {
    std::string label;
    bool ok = false;
    std::string residual;
};

// Bracket table of T against the quotient presentation.
std::vector<TowerCheckRow> t_relation_checks();

// Every defining relation of D maps to zero, and q, s, z, omega, theta
// all map to zero; random elements of qD + sD map to zero.
std::vector<TowerCheckRow> pi_morphism_checks(int random_samples = 20, uint64_t seed = 7);

// h is invertible, d1(ux+2) = -x(ux+2), h^-1 d1(h) = x/2 and
// h^-1 y h = y + x/2 in Stilde.
std::vector<TowerCheckRow> inner_automorphism_checks();

// mu = -h u^2 (ux+4)^-1, d2' = d2tilde + mu d1 kills u, sends x to
// beta = 2(xu+4)^-1 (ux+2)^2 h, and agrees with beta * d/dx everywhere.
std::vector<TowerCheckRow> invariant_ideal_checks(int random_samples = 20, uint64_t seed = 8);

// Leibniz laws, the fractional-power chain rule, sigma-Leibniz for d2 in
// T, and tower associativity.
std::vector<TowerCheckRow> ore_law_checks(int random_samples = 50, uint64_t seed = 9);

} // namespace ncalg
