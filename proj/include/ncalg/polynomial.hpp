#pragma once

#include "ncalg/monomial.hpp"
#include "ncalg/rational.hpp"

#include <map>

namespace ncalg {

// Sparse monomial -> coefficient map. No zero coefficient is ever stored,
// so equality of polynomials is equality of the maps.
class NcPolynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    NcPolynomial() = default;

    static NcPolynomial zero() { return NcPolynomial(); }

    static NcPolynomial constant(const Rational &c) {
        NcPolynomial p;
        p.add_term(Monomial(), c);
        return p;
    }

    static NcPolynomial one() { return constant(Rational(1)); }

    static NcPolynomial monomial(const Monomial &m, const Rational &c = Rational(1)) {
        NcPolynomial p;
        p.add_term(m, c);
        return p;
    }

    void add_term(const Monomial &m, const Rational &c) {
        if (c == 0)
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap &terms() const { return terms_; }

    Rational coefficient(const Monomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    NcPolynomial &operator+=(const NcPolynomial &other) {
        for (const auto &[m, c] : other.terms_)
            add_term(m, c);
        return *this;
    }

    NcPolynomial &operator-=(const NcPolynomial &other) {
        for (const auto &[m, c] : other.terms_)
            add_term(m, -c);
        return *this;
    }

    NcPolynomial &operator*=(const Rational &c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[m, v] : terms_)
            v *= c;
        return *this;
    }

    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial &b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial &b) { return a -= b; }
    friend NcPolynomial operator*(NcPolynomial a, const Rational &c) { return a *= c; }
    friend NcPolynomial operator*(const Rational &c, NcPolynomial a) { return a *= c; }
    friend NcPolynomial operator-(NcPolynomial a) {
        for (auto &[m, v] : a.terms_)
            v = -v;
        return a;
    }

    bool operator==(const NcPolynomial &) const = default;

  private:
    TermMap terms_;
};

} // namespace ncalg
