#include "ncalg/tensor.hpp"

#include "ncalg/catalog.hpp"
#include "ncalg/parser.hpp"

#include <sstream>

namespace ncalg {

void TensorPolynomial::add_term(const Key &k, const Rational &c) {
    if (c == 0)
        return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TensorPolynomial &TensorPolynomial::operator+=(const TensorPolynomial &other) {
    for (const auto &[k, c] : other.terms_)
        add_term(k, c);
    return *this;
}

TensorPolynomial &TensorPolynomial::operator-=(const TensorPolynomial &other) {
    for (const auto &[k, c] : other.terms_)
        add_term(k, -c);
    return *this;
}

TensorPolynomial TensorPolynomial::unit(int rank) {
    TensorPolynomial t(rank);
    t.add_term({Monomial(), Monomial(), Monomial()}, Rational(1));
    return t;
}

TensorPolynomial TensorPolynomial::simple(const NcPolynomial &left, const NcPolynomial &right) {
    TensorPolynomial t(2);
    for (const auto &[ml, cl] : left.terms())
        for (const auto &[mr, cr] : right.terms())
            t.add_term({ml, mr, Monomial()}, cl * cr);
    return t;
}

TensorPolynomial tensor_multiply(const TensorPolynomial &a, const TensorPolynomial &b,
                                 const AlgebraPresentation &pres) {
    if (a.rank() != b.rank())
        throw Error("tensor rank mismatch");
    const int rank = a.rank();
    TensorPolynomial out(rank);
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            std::array<NcPolynomial, 3> slot;
            for (int s = 0; s < rank; ++s) {
                Word w = word_of_monomial(ka[static_cast<size_t>(s)], pres);
                Word wb = word_of_monomial(kb[static_cast<size_t>(s)], pres);
                w.factors.insert(w.factors.end(), wb.factors.begin(), wb.factors.end());
                slot[static_cast<size_t>(s)] = normal_form(w, pres);
            }
            const Rational cc = ca * cb;
            if (rank == 2) {
                for (const auto &[m1, c1] : slot[0].terms())
                    for (const auto &[m2, c2] : slot[1].terms())
                        out.add_term({m1, m2, Monomial()}, cc * c1 * c2);
            } else {
                for (const auto &[m1, c1] : slot[0].terms())
                    for (const auto &[m2, c2] : slot[1].terms())
                        for (const auto &[m3, c3] : slot[2].terms())
                            out.add_term({m1, m2, m3}, cc * c1 * c2 * c3);
            }
        }
    }
    return out;
}

std::string convention_name(CoproductSpec::Convention c) {
    return c == CoproductSpec::Convention::A ? "A: x⊗g + 1⊗x" : "B: x⊗1 + g⊗x";
}

namespace {

const AlgebraPresentation &dpres() { return catalog(AlgebraId::D).pres; }

NcPolynomial gen_poly(const std::string &name, int e = 1) {
    const AlgebraPresentation &p = dpres();
    return generator_polynomial(p, p.require_position(name), e);
}

// Rank-2 image of one generator power (exponent ±1).
TensorPolynomial generator_delta(int pos, int exp, const CoproductSpec &spec) {
    const AlgebraPresentation &p = dpres();
    const std::string &name = p.generator(pos).name;
    const NcPolynomial one = NcPolynomial::one();
    if (name == "g") {
        NcPolynomial gp = gen_poly("g", exp);
        return TensorPolynomial::simple(gp, gp);
    }
    if (exp != 1)
        throw NegativeExponentError("coproduct of a negative power of '" + name + "'");
    if (name == "x" || name == "y") {
        NcPolynomial t = gen_poly(name);
        if (spec.convention == CoproductSpec::Convention::A)
            return TensorPolynomial::simple(t, gen_poly("g")) + TensorPolynomial::simple(one, t);
        return TensorPolynomial::simple(t, one) + TensorPolynomial::simple(gen_poly("g"), t);
    }
    if (name == "u" || name == "zeta") {
        NcPolynomial t = gen_poly(name);
        return TensorPolynomial::simple(t, one) + TensorPolynomial::simple(one, t);
    }
    if (name == "v") {
        NcPolynomial t = gen_poly(name);
        return TensorPolynomial::simple(t, one) + TensorPolynomial::simple(one, t) +
               TensorPolynomial::simple(gen_poly("zeta"), gen_poly("u"));
    }
    throw UnknownGeneratorError("no coproduct image for generator '" + name + "'");
}

TensorPolynomial delta_of_monomial(const Monomial &m, const CoproductSpec &spec) {
    const AlgebraPresentation &p = dpres();
    TensorPolynomial acc = TensorPolynomial::unit(2);
    for (int pos = 0; pos < p.generator_count(); ++pos) {
        int e = m.exponent(pos);
        if (e == 0)
            continue;
        if (p.generator(pos).name == "g") {
            acc = tensor_multiply(acc, generator_delta(pos, e, spec), p);
        } else {
            for (int k = 0; k < e; ++k)
                acc = tensor_multiply(acc, generator_delta(pos, 1, spec), p);
        }
    }
    return acc;
}

} // namespace

TensorPolynomial delta(const NcPolynomial &p, const CoproductSpec &spec) {
    TensorPolynomial out(2);
    for (const auto &[m, c] : p.terms()) {
        TensorPolynomial dm = delta_of_monomial(m, spec);
        for (const auto &[k, v] : dm.terms())
            out.add_term(k, c * v);
    }
    return out;
}

Rational counit(const NcPolynomial &p) {
    const AlgebraPresentation &pres = dpres();
    const int gpos = pres.require_position("g");
    Rational total(0);
    for (const auto &[m, c] : p.terms()) {
        bool only_g = true;
        for (int pos = 0; pos < pres.generator_count(); ++pos)
            if (pos != gpos && m.exponent(pos) != 0) {
                only_g = false;
                break;
            }
        if (only_g)
            total += c; // ε(g^±1) = 1
    }
    return total;
}

CoproductReport check_coproduct_on_relations(const CoproductSpec &spec) {
    const AlgebraPresentation &p = dpres();
    CoproductReport report;
    for (const SwapRule &rule : p.swap_rules) {
        TensorPolynomial lhs =
            tensor_multiply(generator_delta(rule.hi, 1, spec), generator_delta(rule.lo, 1, spec), p);
        TensorPolynomial rhs = delta(rule.rhs, spec);
        TensorPolynomial residual = lhs - rhs;
        RelationRow row;
        row.relation = p.generator(rule.hi).name + "*" + p.generator(rule.lo).name;
        row.ok = residual.is_zero();
        row.residual = std::move(residual);
        report.rows.push_back(std::move(row));
    }
    return report;
}

ConventionElection elect_convention() {
    ConventionElection e;
    e.report_a = check_coproduct_on_relations({CoproductSpec::Convention::A});
    e.report_b = check_coproduct_on_relations({CoproductSpec::Convention::B});
    const bool a = e.report_a.passed(), b = e.report_b.passed();
    e.exactly_one = (a != b);
    e.winner = a ? CoproductSpec::Convention::A : CoproductSpec::Convention::B;
    return e;
}

namespace {

NcPolynomial counit_contract(const TensorPolynomial &t, int keep_slot) {
    const AlgebraPresentation &p = dpres();
    const int gpos = p.require_position("g");
    NcPolynomial out;
    for (const auto &[k, c] : t.terms()) {
        const Monomial &killed = k[keep_slot == 0 ? 1 : 0];
        bool only_g = true;
        for (int pos = 0; pos < p.generator_count(); ++pos)
            if (pos != gpos && killed.exponent(pos) != 0) {
                only_g = false;
                break;
            }
        if (only_g)
            out.add_term(k[static_cast<size_t>(keep_slot)], c);
    }
    return out;
}

TensorPolynomial expand_slot(const TensorPolynomial &t, int slot, const CoproductSpec &spec) {
    // Applies delta to one slot of a rank-2 tensor, producing rank 3.
    TensorPolynomial out(3);
    for (const auto &[k, c] : t.terms()) {
        TensorPolynomial dm = delta_of_monomial(k[static_cast<size_t>(slot)], spec);
        for (const auto &[dk, dc] : dm.terms()) {
            TensorPolynomial::Key key;
            if (slot == 0)
                key = {dk[0], dk[1], k[1]};
            else
                key = {k[0], dk[0], dk[1]};
            out.add_term(key, c * dc);
        }
    }
    return out;
}

} // namespace

AxiomReport counit_and_coassoc_axioms(const CoproductSpec &spec) {
    const AlgebraPresentation &p = dpres();
    AxiomReport report;
    for (const auto &gen : p.generators) {
        for (int e : {1, -1}) {
            if (e < 0 && !gen.invertible)
                continue;
            std::string label = gen.name + (e < 0 ? "^-1" : "");
            NcPolynomial t = generator_polynomial(p, gen.position, e);
            TensorPolynomial dt = delta(t, spec);
            report.rows.push_back(
                {"(eps⊗id)Δ = id", label, counit_contract(dt, 1) == t});
            report.rows.push_back(
                {"(id⊗eps)Δ = id", label, counit_contract(dt, 0) == t});
            TensorPolynomial left = expand_slot(dt, 0, spec);
            TensorPolynomial right = expand_slot(dt, 1, spec);
            report.rows.push_back({"(Δ⊗id)Δ = (id⊗Δ)Δ", label, left == right});
        }
    }
    return report;
}

bool delta_images_in_og(const CoproductSpec &spec) {
    const AlgebraPresentation &p = dpres();
    const std::vector<int> outside = {p.require_position("y"), p.require_position("zeta"),
                                      p.require_position("v")};
    for (const char *name : {"x", "u", "g"}) {
        TensorPolynomial dt = delta(generator_polynomial(p, p.require_position(name)), spec);
        for (const auto &[k, c] : dt.terms())
            for (int slot = 0; slot < 2; ++slot)
                for (int pos : outside)
                    if (k[static_cast<size_t>(slot)].exponent(pos) != 0)
                        return false;
    }
    return true;
}

std::string format_tensor(const TensorPolynomial &t, const AlgebraPresentation &pres) {
    if (t.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : t.terms()) {
        if (!first)
            os << " + ";
        os << to_string(c) << "·";
        for (int s = 0; s < t.rank(); ++s) {
            if (s)
                os << "⊗";
            os << format_monomial(k[static_cast<size_t>(s)], pres);
        }
        first = false;
    }
    return os.str();
}

} // namespace ncalg
