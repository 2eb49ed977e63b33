#include "ncalg/ux_rational.hpp"

#include <algorithm>
#include <sstream>

namespace ncalg {

UxPoly UxPoly::constant(const Rational &c) { return monomial(0, 0, c); }

UxPoly UxPoly::monomial(int ue, int xe, const Rational &c) {
    UxPoly p;
    p.add_term(ue, xe, c);
    return p;
}

void UxPoly::add_term(int ue, int xe, const Rational &c) {
    if (c == 0)
        return;
    if (ue < 0 || xe < 0)
        throw Error("UxPoly exponents are non-negative");
    Key k{ue, xe};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

UxPoly &UxPoly::operator+=(const UxPoly &o) {
    for (const auto &[k, c] : o.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

UxPoly &UxPoly::operator-=(const UxPoly &o) {
    for (const auto &[k, c] : o.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

UxPoly operator*(const UxPoly &a, const UxPoly &b) {
    UxPoly r;
    for (const auto &[ka, ca] : a.terms_)
        for (const auto &[kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

UxPoly operator*(UxPoly a, const Rational &c) {
    if (c == 0)
        return {};
    for (auto &[k, v] : a.terms_)
        v *= c;
    return a;
}

UxPoly operator-(UxPoly a) {
    for (auto &[k, v] : a.terms_)
        v = -v;
    return a;
}

UxPoly UxPoly::derivative_u() const {
    UxPoly r;
    for (const auto &[k, c] : terms_)
        if (k.first > 0)
            r.add_term(k.first - 1, k.second, c * k.first);
    return r;
}

UxPoly UxPoly::derivative_x() const {
    UxPoly r;
    for (const auto &[k, c] : terms_)
        if (k.second > 0)
            r.add_term(k.first, k.second - 1, c * k.second);
    return r;
}

int UxPoly::min_u_exponent() const {
    int m = INT32_MAX;
    for (const auto &[k, c] : terms_)
        m = std::min(m, k.first);
    return terms_.empty() ? 0 : m;
}

int UxPoly::min_x_exponent() const {
    int m = INT32_MAX;
    for (const auto &[k, c] : terms_)
        m = std::min(m, k.second);
    return terms_.empty() ? 0 : m;
}

UxPoly UxPoly::shifted(int du, int dx) const {
    UxPoly r;
    for (const auto &[k, c] : terms_)
        r.add_term(k.first + du, k.second + dx, c);
    return r;
}

std::optional<UxPoly> UxPoly::divide_exact(const UxPoly &divisor) const {
    if (divisor.is_zero())
        throw Error("division by the zero polynomial");
    if (is_zero())
        return UxPoly();

    auto graded_after = [](const Key &a, const Key &b) {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db)
            return da > db;
        return a > b;
    };
    auto lead = [&](const UxPoly &p) {
        auto best = p.terms_.begin();
        for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
            if (graded_after(it->first, best->first))
                best = it;
        return *best;
    };

    const auto [dk, dc] = lead(divisor);
    UxPoly rem = *this;
    UxPoly quot;
    while (!rem.is_zero()) {
        const auto [rk, rc] = lead(rem);
        if (rk.first < dk.first || rk.second < dk.second)
            return std::nullopt;
        int qu = rk.first - dk.first, qx = rk.second - dk.second;
        Rational qc = rc / dc;
        quot.add_term(qu, qx, qc);
        rem -= divisor * UxPoly::monomial(qu, qx, qc);
    }
    return quot;
}

std::string UxPoly::str() const {
    if (is_zero())
        return "0";
    std::vector<std::pair<Key, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto &a, const auto &b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db)
            return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : ts) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        std::string mono;
        if (k.first) {
            mono += "u";
            if (k.first != 1)
                mono += "^" + std::to_string(k.first);
        }
        if (k.second) {
            if (!mono.empty())
                mono += "*";
            mono += "x";
            if (k.second != 1)
                mono += "^" + std::to_string(k.second);
        }
        if (mono.empty())
            os << to_string(a);
        else if (a == 1)
            os << mono;
        else
            os << to_string(a) << "*" << mono;
        first = false;
    }
    return os.str();
}

UxPoly ux_plus(const Rational &shift) {
    UxPoly p = UxPoly::monomial(1, 1);
    p.add_term(0, 0, shift);
    return p;
}

Frac::Frac(UxPoly numerator, Den den) : num_(std::move(numerator)), den_(den) {
    if (den.uxp2 < 0 || den.uxp4 < 0 || den.u < 0 || den.x < 0)
        throw Error("negative denominator exponent");
    reduce();
}

Frac Frac::constant(const Rational &c) { return Frac(UxPoly::constant(c), {}); }

Frac Frac::atom_inverse_uxp2(int power) { return Frac(UxPoly::constant(1), {power, 0, 0, 0}); }
Frac Frac::atom_inverse_uxp4(int power) { return Frac(UxPoly::constant(1), {0, power, 0, 0}); }

void Frac::reduce() {
    if (num_.is_zero()) {
        den_ = {};
        return;
    }
    int cu = std::min(num_.min_u_exponent(), den_.u);
    int cx = std::min(num_.min_x_exponent(), den_.x);
    if (cu || cx) {
        num_ = num_.shifted(-cu, -cx);
        den_.u -= cu;
        den_.x -= cx;
    }
    while (den_.uxp2 > 0) {
        auto q = num_.divide_exact(ux_plus(2));
        if (!q)
            break;
        num_ = *q;
        --den_.uxp2;
    }
    while (den_.uxp4 > 0) {
        auto q = num_.divide_exact(ux_plus(4));
        if (!q)
            break;
        num_ = *q;
        --den_.uxp4;
    }
}

namespace {

UxPoly scale_to_common(const UxPoly &num, const Frac::Den &own, const Frac::Den &common) {
    UxPoly out = num;
    for (int i = 0; i < common.uxp2 - own.uxp2; ++i)
        out = out * ux_plus(2);
    for (int i = 0; i < common.uxp4 - own.uxp4; ++i)
        out = out * ux_plus(4);
    out = out.shifted(common.u - own.u, common.x - own.x);
    return out;
}

} // namespace

Frac operator+(const Frac &a, const Frac &b) {
    Frac::Den common{std::max(a.den_.uxp2, b.den_.uxp2), std::max(a.den_.uxp4, b.den_.uxp4),
                     std::max(a.den_.u, b.den_.u), std::max(a.den_.x, b.den_.x)};
    UxPoly num = scale_to_common(a.num_, a.den_, common) + scale_to_common(b.num_, b.den_, common);
    return Frac(std::move(num), common);
}

Frac operator-(const Frac &a, const Frac &b) { return a + (-b); }

Frac operator*(const Frac &a, const Frac &b) {
    Frac::Den den{a.den_.uxp2 + b.den_.uxp2, a.den_.uxp4 + b.den_.uxp4, a.den_.u + b.den_.u,
                  a.den_.x + b.den_.x};
    return Frac(a.num_ * b.num_, den);
}

Frac operator*(const Frac &a, const Rational &c) {
    if (c == 0)
        return Frac();
    Frac r = a;
    r.num_ = r.num_ * c;
    return r;
}

Frac operator-(const Frac &a) {
    Frac r = a;
    r.num_ = -r.num_;
    return r;
}

std::optional<Frac> Frac::try_invert() const {
    if (is_zero())
        return std::nullopt;
    // Factor the numerator as c u^i x^j (ux+2)^p (ux+4)^q; anything else
    // is not a unit of the localization.
    UxPoly rest = num_;
    int p2 = 0, p4 = 0;
    for (;;) {
        auto q = rest.divide_exact(ux_plus(2));
        if (!q)
            break;
        rest = *q;
        ++p2;
    }
    for (;;) {
        auto q = rest.divide_exact(ux_plus(4));
        if (!q)
            break;
        rest = *q;
        ++p4;
    }
    if (rest.term_count() != 1)
        return std::nullopt;
    const auto &[k, c] = *rest.terms().begin();
    UxPoly numerator = UxPoly::constant(Rational(1) / c);
    for (int i = 0; i < den_.uxp2; ++i)
        numerator = numerator * ux_plus(2);
    for (int i = 0; i < den_.uxp4; ++i)
        numerator = numerator * ux_plus(4);
    numerator = numerator.shifted(den_.u, den_.x);
    return Frac(std::move(numerator), {p2, p4, k.first, k.second});
}

std::string Frac::str() const {
    std::string s = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    auto atom = [&](const std::string &a, int e) {
        if (e)
            s += "*" + a + "^-" + std::to_string(e);
    };
    atom("(u*x+2)", den_.uxp2);
    atom("(u*x+4)", den_.uxp4);
    atom("u", den_.u);
    atom("x", den_.x);
    return s;
}

CommBase CommBase::h() { return {Frac(), Frac::constant(1)}; }

CommBase CommBase::h_inverse() { return {Frac(), Frac::of(ux_plus(2))}; }

CommBase operator+(const CommBase &p, const CommBase &q) { return {p.a_ + q.a_, p.b_ + q.b_}; }
CommBase operator-(const CommBase &p, const CommBase &q) { return {p.a_ - q.a_, p.b_ - q.b_}; }

CommBase operator*(const CommBase &p, const CommBase &q) {
    // (a1 + b1 h)(a2 + b2 h), h^2 = (ux+2)^-1.
    Frac hh = Frac::atom_inverse_uxp2();
    return {p.a_ * q.a_ + p.b_ * q.b_ * hh, p.a_ * q.b_ + p.b_ * q.a_};
}

CommBase operator*(const CommBase &p, const Rational &c) { return {p.a_ * c, p.b_ * c}; }

CommBase operator-(const CommBase &p) { return {-p.a_, -p.b_}; }

std::optional<CommBase> CommBase::try_invert() const {
    if (is_zero())
        return std::nullopt;
    // Conjugate trick: (a + bh)(a - bh) = a^2 - b^2 (ux+2)^-1 is h-free.
    Frac norm = a_ * a_ - b_ * b_ * Frac::atom_inverse_uxp2();
    auto inv = norm.try_invert();
    if (!inv)
        return std::nullopt;
    return CommBase{a_ * *inv, -(b_ * *inv)};
}

std::string CommBase::str() const {
    if (is_zero())
        return "0";
    std::string s;
    if (!a_.is_zero())
        s = a_.str();
    if (!b_.is_zero()) {
        if (!s.empty())
            s += " + ";
        s += "(" + b_.str() + ")*h";
    }
    return s;
}

namespace {

// d applied to a plain fraction P / (atom powers):
//   d(f) = [d(P) - P * sum_A e_A d(A)/A] / (atom powers).
CommBase derive_frac(const DerivationSpec &d, const Frac &f) {
    if (f.is_zero())
        return {};
    const UxPoly &P = f.numerator();
    CommBase dP = CommBase::of(Frac::of(P.derivative_u())) * d.du +
                  CommBase::of(Frac::of(P.derivative_x())) * d.dx;

    const Frac::Den &den = f.denominator();
    CommBase log_terms; // sum e_A d(A)/A
    const CommBase d_ux = d.du * CommBase::of(UxPoly::monomial(0, 1)) +
                          d.dx * CommBase::of(UxPoly::monomial(1, 0)); // d(ux)
    if (den.uxp2)
        log_terms = log_terms +
                    d_ux * CommBase::of(Frac::atom_inverse_uxp2()) * Rational(den.uxp2);
    if (den.uxp4)
        log_terms = log_terms +
                    d_ux * CommBase::of(Frac::atom_inverse_uxp4()) * Rational(den.uxp4);
    if (den.u)
        log_terms = log_terms +
                    d.du * CommBase::of(Frac(UxPoly::constant(1), {0, 0, 1, 0})) *
                        Rational(den.u);
    if (den.x)
        log_terms = log_terms +
                    d.dx * CommBase::of(Frac(UxPoly::constant(1), {0, 0, 0, 1})) *
                        Rational(den.x);

    CommBase inv_den = CommBase::of(Frac(UxPoly::constant(1), den));
    return (dP - CommBase::of(Frac::of(P)) * log_terms) * inv_den;
}

} // namespace

CommBase apply_derivation(const DerivationSpec &d, const CommBase &e) {
    // d(a + b h) = d(a) + d(b) h + b d(h),
    // d(h) = -1/2 (ux+2)^-1 h d(ux+2).
    CommBase da = derive_frac(d, e.plain());
    if (!e.has_h())
        return da;
    CommBase db = derive_frac(d, e.h_part());
    CommBase d_ux2 = d.du * CommBase::of(UxPoly::monomial(0, 1)) +
                     d.dx * CommBase::of(UxPoly::monomial(1, 0));
    CommBase dh = CommBase::of(Frac::atom_inverse_uxp2()) * CommBase::h() * d_ux2 *
                  Rational(-1, 2);
    return da + db * CommBase::h() + CommBase::of(e.h_part()) * dh;
}

} // namespace ncalg
