#pragma once

#include "ncalg/errors.hpp"
#include "ncalg/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace ncalg {

// Commutative polynomials in u, x over the rationals.
class UxPoly {
  public:
    using Key = std::pair<int, int>; // (u exponent, x exponent)
    using TermMap = std::map<Key, Rational>;

    UxPoly() = default;

    static UxPoly constant(const Rational &c);
    static UxPoly monomial(int ue, int xe, const Rational &c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    const TermMap &terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(int ue, int xe, const Rational &c);

    UxPoly &operator+=(const UxPoly &o);
    UxPoly &operator-=(const UxPoly &o);
    friend UxPoly operator+(UxPoly a, const UxPoly &b) { return a += b; }
    friend UxPoly operator-(UxPoly a, const UxPoly &b) { return a -= b; }
    friend UxPoly operator*(const UxPoly &a, const UxPoly &b);
    friend UxPoly operator*(UxPoly a, const Rational &c);
    friend UxPoly operator-(UxPoly a);

    bool operator==(const UxPoly &) const = default;

    UxPoly derivative_u() const;
    UxPoly derivative_x() const;

    int min_u_exponent() const;
    int min_x_exponent() const;
    UxPoly shifted(int du, int dx) const; // multiply by u^du x^dx (du, dx may be negative)

    // Exact multivariate division; nullopt when the division has a remainder.
    std::optional<UxPoly> divide_exact(const UxPoly &divisor) const;

    std::string str() const; // "u^2*x - 2" style, graded order

  private:
    TermMap terms_;
};

UxPoly ux_plus(const Rational &shift); // u*x + shift

// Rational function in u, x whose denominator is a product of powers of
// the fixed atoms (ux+2), (ux+4), u, x. Fully reduced on construction
// (monomial content and exact atom division), which makes the
// representation canonical: equality is structural.
class Frac {
  public:
    struct Den {
        int uxp2 = 0, uxp4 = 0, u = 0, x = 0;
        bool operator==(const Den &) const = default;
    };

    Frac() = default;
    Frac(UxPoly numerator, Den den);
    static Frac constant(const Rational &c);
    static Frac of(const UxPoly &p) { return Frac(p, {}); }
    static Frac atom_inverse_uxp2(int power = 1);
    static Frac atom_inverse_uxp4(int power = 1);

    bool is_zero() const { return num_.is_zero(); }
    const UxPoly &numerator() const { return num_; }
    const Den &denominator() const { return den_; }

    friend Frac operator+(const Frac &a, const Frac &b);
    friend Frac operator-(const Frac &a, const Frac &b);
    friend Frac operator*(const Frac &a, const Frac &b);
    friend Frac operator*(const Frac &a, const Rational &c);
    friend Frac operator-(const Frac &a);

    bool operator==(const Frac &) const = default;

    // Defined when the reduced numerator is a single monomial.
    std::optional<Frac> try_invert() const;

    std::string str() const;

  private:
    void reduce();

    UxPoly num_;
    Den den_;
};

// Element a + b*h of the radical extension of the fraction field, with
// h^2 = (ux+2)^-1. Plain fraction-base elements keep b = 0. The (a, b)
// pair is unique: equality is componentwise.
class CommBase {
  public:
    CommBase() = default;
    CommBase(Frac a, Frac b) : a_(std::move(a)), b_(std::move(b)) {}
    static CommBase of(const Frac &a) { return {a, Frac()}; }
    static CommBase of(const UxPoly &p) { return {Frac::of(p), Frac()}; }
    static CommBase constant(const Rational &c) { return {Frac::constant(c), Frac()}; }
    static CommBase h(); // 0 + 1*h
    static CommBase h_inverse(); // (ux+2) * h

    const Frac &plain() const { return a_; }
    const Frac &h_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool has_h() const { return !b_.is_zero(); }

    friend CommBase operator+(const CommBase &p, const CommBase &q);
    friend CommBase operator-(const CommBase &p, const CommBase &q);
    friend CommBase operator*(const CommBase &p, const CommBase &q);
    friend CommBase operator*(const CommBase &p, const Rational &c);
    friend CommBase operator-(const CommBase &p);

    bool operator==(const CommBase &) const = default;

    // Multiplies by the conjugate; defined when a^2 - b^2 (ux+2)^-1 inverts.
    std::optional<CommBase> try_invert() const;

    std::string str() const;

  private:
    Frac a_, b_;
};

// A derivation of the base, determined by its values on u and x and
// extended to fractions by the quotient rule and to h by
// d(h) = -1/2 (ux+2)^-1 h d(ux+2).
struct DerivationSpec {
    std::string name;
    CommBase du, dx;
};

CommBase apply_derivation(const DerivationSpec &d, const CommBase &e);

} // namespace ncalg
