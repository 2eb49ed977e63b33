#pragma once

#include "ncalg/errors.hpp"

#include <array>
#include <compare>
#include <cstdint>

namespace ncalg {

// Exponent vector over the generators of one presentation, indexed by
// generator position. Fixed width: at most 8 generators per algebra.
// Exponents may be negative only for invertible generators; that rule is
// enforced by the rewriting engine, not here.
class Monomial {
  public:
    static constexpr int max_generators = 8;

    Monomial() = default;

    int exponent(int pos) const { return e_[static_cast<size_t>(pos)]; }

    void set_exponent(int pos, int value) {
        check_range(value);
        e_[static_cast<size_t>(pos)] = static_cast<int16_t>(value);
    }

    void add_exponent(int pos, int delta) {
        int v = e_[static_cast<size_t>(pos)] + delta;
        check_range(v);
        e_[static_cast<size_t>(pos)] = static_cast<int16_t>(v);
    }

    bool is_identity() const {
        for (int16_t v : e_)
            if (v != 0)
                return false;
        return true;
    }

    // Componentwise product of monomials (exponents add, overflow checked).
    Monomial times(const Monomial &other) const {
        Monomial r = *this;
        for (int i = 0; i < max_generators; ++i)
            if (other.e_[static_cast<size_t>(i)] != 0)
                r.add_exponent(i, other.e_[static_cast<size_t>(i)]);
        return r;
    }

    auto operator<=>(const Monomial &) const = default;

  private:
    static void check_range(int v) {
        if (v > INT16_MAX || v < INT16_MIN)
            throw ExponentOverflowError("monomial exponent overflow");
    }

    std::array<int16_t, max_generators> e_{};
};

} // namespace ncalg
