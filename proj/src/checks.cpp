#include "ncalg/checks.hpp"

#include "ncalg/catalog.hpp"
#include "ncalg/central_fraction.hpp"
#include "ncalg/membership.hpp"
#include "ncalg/tensor.hpp"
#include "ncalg/tower.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <omp.h>
#include <random>
#include <sstream>

namespace ncalg {

std::string status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Report: return "report";
    }
    return "?";
}

namespace {

using nlohmann::ordered_json;

const CatalogEntry &dcat() { return catalog(AlgebraId::D); }

NcPolynomial dparse(const std::string &text) {
    return parse_polynomial(text, dcat().pres, &dcat().distinguished);
}

CheckOutcome ok_outcome(std::vector<std::string> details = {}) {
    return {true, std::move(details)};
}

void expect_zero(CheckOutcome &out, const std::string &label, const NcPolynomial &residual,
                 const AlgebraPresentation &pres) {
    if (residual.is_zero()) {
        out.details.push_back(label + " = 0");
    } else {
        out.ok = false;
        out.details.push_back(label + " != 0: " + format_polynomial(residual, pres));
    }
}

void merge_rows(CheckOutcome &out, const std::vector<TowerCheckRow> &rows) {
    for (const auto &row : rows) {
        if (row.ok) {
            out.details.push_back(row.label);
        } else {
            out.ok = false;
            out.details.push_back("FAIL " + row.label + ": " + row.residual);
        }
    }
}

// ---- individual check runners -------------------------------------------

CheckOutcome run_jordan_relations() {
    CheckOutcome out = ok_outcome();
    for (const auto &name : catalog_names()) {
        const CatalogEntry *e = catalog_by_name(name);
        if (!validate_presentation(e->pres).passed()) {
            out.ok = false;
            out.details.push_back("FAIL validation of " + name);
        } else {
            out.details.push_back("validated " + name);
        }
    }
    // The bracket display defining D.
    const auto &p = dcat().pres;
    const std::vector<std::pair<std::string, std::string>> brackets = {
        {"[u,v]", "1/2*u^2"},   {"[zeta,v]", "-v"},      {"[zeta,u]", "-u"},
        {"[u,y]", "1 - g"},     {"[v,x]", "1 - g + x*u"}, {"[v,y]", "y*u - g*zeta"},
        {"[v,g]", "g*u"},       {"[zeta,y]", "y"},       {"[zeta,x]", "x"},
        {"[x,u]", "0"},         {"[x,g]", "0"},          {"[u,g]", "0"},
        {"[zeta,g]", "0"},      {"[y,x]", "-1/2*x^2"},   {"[g,g^-1]", "0"}};
    for (const auto &[lhs, rhs] : brackets)
        expect_zero(out, lhs + " - (" + rhs + ")",
                    parse_polynomial(lhs, p) - parse_polynomial(rhs, p), p);
    return out;
}

CheckOutcome run_ore_tower() {
    CheckOutcome out = ok_outcome();
    const auto &p = dcat().pres;
    expect_zero(out, "v*zeta - (zeta+1)*v",
                parse_polynomial("v*zeta", p) - parse_polynomial("(zeta + 1)*v", p), p);
    const std::vector<std::pair<std::string, std::string>> d3 = {
        {"g", "g*u"}, {"x", "1 - g + x*u"}, {"u", "-1/2*u^2"}, {"y", "y*u - g*zeta"}};
    for (const auto &[r, image] : d3)
        expect_zero(out, "v*" + r + " - " + r + "*v - d3(" + r + ")",
                    parse_polynomial("v*" + r, p) - parse_polynomial(r + "*v", p) -
                        parse_polynomial(image, p),
                    p);
    // Leibniz law for d1 = [y,-] on the commutative subalgebra.
    std::mt19937_64 rng(101);
    NcPolynomial ygen = parse_polynomial("y", p);
    int failures = 0;
    for (int i = 0; i < 50; ++i) {
        NcPolynomial a, b;
        for (NcPolynomial *t : {&a, &b}) {
            Monomial m;
            m.set_exponent(0, static_cast<int>(rng() % 5) - 2); // g
            m.set_exponent(1, static_cast<int>(rng() % 3));     // x
            m.set_exponent(2, static_cast<int>(rng() % 3));     // u
            t->add_term(m, Rational(1 + static_cast<int>(rng() % 3)));
        }
        NcPolynomial lhs = commutator(ygen, multiply(a, b, p), p);
        NcPolynomial rhs = multiply(commutator(ygen, a, p), b, p) +
                           multiply(a, commutator(ygen, b, p), p);
        if (lhs != rhs)
            ++failures;
    }
    if (failures) {
        out.ok = false;
        out.details.push_back("FAIL d1 Leibniz on " + std::to_string(failures) + "/50 pairs");
    } else {
        out.details.push_back("d1 Leibniz law on 50 random pairs");
    }
    return out;
}

CheckOutcome run_sigma_normal(const char *which) {
    CheckOutcome out = ok_outcome();
    const auto &entry = dcat();
    const NcPolynomial &n = std::string(which) == "q" ? entry.elements.q : entry.elements.s;
    auto r = is_sigma_normal(n, sigma_map(entry), entry.pres);
    if (r.normal) {
        out.details.push_back(std::string(which) + " a = sigma(a) " + which +
                              " on all generators");
    } else {
        out.ok = false;
        out.details.push_back("FAIL at generator " + r.witness->generator + ": " +
                              format_polynomial(r.witness->bracket, entry.pres));
    }
    return out;
}

CheckOutcome run_sigma_squared() {
    CheckOutcome out = ok_outcome();
    const auto &entry = dcat();
    const auto &p = entry.pres;
    AlgebraMap sigma2 = compose(sigma_map(entry), sigma_map(entry));
    for (const auto &gen : p.generators) {
        for (int e : {1, -1}) {
            if (e < 0 && !gen.invertible)
                continue;
            NcPolynomial t = generator_polynomial(p, gen.position, e);
            NcPolynomial conj = multiply(multiply(dparse("g"), t, p), dparse("g^-1"), p);
            expect_zero(out, "sigma^2 - Ad(g) on " + gen.name + (e < 0 ? "^-1" : ""),
                        apply_map(sigma2, t) - conj, p);
        }
    }
    return out;
}

CheckOutcome run_centre_membership() {
    CheckOutcome out = ok_outcome();
    const auto &entry = dcat();
    for (const char *name : {"z", "omega", "theta"}) {
        auto r = is_central(entry.distinguished.at(name), entry.pres);
        if (r.central) {
            out.details.push_back(std::string(name) + " is central (22 brackets checked)");
        } else {
            out.ok = false;
            out.details.push_back(std::string("FAIL [") + name + "," +
                                  r.witness->generator + "] != 0");
        }
    }
    for (const char *name : {"q", "s", "g"}) {
        auto r = is_central(entry.distinguished.count(name) ? entry.distinguished.at(name)
                                                            : dparse(name),
                            entry.pres);
        if (!r.central) {
            out.details.push_back(std::string(name) + " is not central (witness " +
                                  r.witness->generator + ")");
        } else {
            out.ok = false;
            out.details.push_back(std::string("FAIL ") + name + " reported central");
        }
    }
    return out;
}

CheckOutcome run_centre_relation() {
    CheckOutcome out = ok_outcome();
    const auto &e = dcat();
    expect_zero(out, "z*theta - omega^2",
                multiply(e.elements.z, e.elements.theta, e.pres) -
                    multiply(e.elements.omega, e.elements.omega, e.pres),
                e.pres);
    return out;
}

CheckOutcome run_counit_mplus() {
    CheckOutcome out = ok_outcome();
    const auto &el = dcat().elements;
    auto expect_value = [&](const std::string &label, const Rational &got,
                            const Rational &want) {
        if (got == want) {
            out.details.push_back("eps(" + label + ") = " + to_string(want));
        } else {
            out.ok = false;
            out.details.push_back("FAIL eps(" + label + ") = " + to_string(got) +
                                  ", expected " + to_string(want));
        }
    };
    expect_value("q", counit(el.q), 4);
    expect_value("s", counit(el.s), -4);
    expect_value("z", counit(el.z), 16);
    expect_value("omega", counit(el.omega), -16);
    expect_value("theta", counit(el.theta), 16);
    expect_value("z-16", counit(el.mplus_gens[0]), 0);
    expect_value("omega+16", counit(el.mplus_gens[1]), 0);
    expect_value("theta-16", counit(el.mplus_gens[2]), 0);
    return out;
}

CheckOutcome run_hopf_relations() {
    CheckOutcome out = ok_outcome();
    ConventionElection e = elect_convention();
    if (!e.exactly_one) {
        out.ok = false;
        out.details.push_back("FAIL: expected exactly one passing convention");
    }
    out.details.push_back("elected " + convention_name(e.winner));
    const CoproductReport &winner =
        e.winner == CoproductSpec::Convention::A ? e.report_a : e.report_b;
    for (const auto &row : winner.rows) {
        if (row.ok) {
            out.details.push_back("Δ respects " + row.relation);
        } else {
            out.ok = false;
            out.details.push_back("FAIL Δ on " + row.relation);
        }
    }
    // Negative control detail: where the losing convention breaks first.
    const CoproductReport &loser =
        e.winner == CoproductSpec::Convention::A ? e.report_b : e.report_a;
    for (const auto &row : loser.rows)
        if (!row.ok) {
            out.details.push_back("losing convention fails first on " + row.relation);
            break;
        }
    return out;
}

CheckOutcome run_hopf_counit() {
    CheckOutcome out = ok_outcome();
    CoproductSpec spec{elect_convention().winner};
    AxiomReport r = counit_and_coassoc_axioms(spec);
    for (const auto &row : r.rows) {
        if (row.axiom.find("eps") == std::string::npos)
            continue;
        if (row.ok) {
            out.details.push_back(row.axiom + " on " + row.generator);
        } else {
            out.ok = false;
            out.details.push_back("FAIL " + row.axiom + " on " + row.generator);
        }
    }
    // eps is an algebra map on random pairs.
    std::mt19937_64 rng(103);
    const auto &p = dcat().pres;
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        NcPolynomial a, b;
        for (NcPolynomial *t : {&a, &b}) {
            Monomial m;
            for (int k = 0; k < 3; ++k) {
                int pos = static_cast<int>(rng() % 6);
                m.add_exponent(pos, p.is_invertible(pos) && (rng() & 1) ? -1 : 1);
            }
            t->add_term(m, Rational(1 + static_cast<int>(rng() % 2)));
            t->add_term(Monomial(), Rational(static_cast<int>(rng() % 3) - 1));
        }
        if (counit(multiply(a, b, p)) != counit(a) * counit(b))
            ++failures;
    }
    if (failures) {
        out.ok = false;
        out.details.push_back("FAIL eps multiplicativity on " + std::to_string(failures) +
                              "/100 pairs");
    } else {
        out.details.push_back("eps(ab) = eps(a)eps(b) on 100 random pairs");
    }
    return out;
}

CheckOutcome run_hopf_coassoc() {
    CheckOutcome out = ok_outcome();
    CoproductSpec spec{elect_convention().winner};
    AxiomReport r = counit_and_coassoc_axioms(spec);
    for (const auto &row : r.rows) {
        if (row.axiom.find("eps") != std::string::npos)
            continue;
        if (row.ok) {
            out.details.push_back(row.axiom + " on " + row.generator);
        } else {
            out.ok = false;
            out.details.push_back("FAIL " + row.axiom + " on " + row.generator);
        }
    }
    return out;
}

CheckOutcome run_og_sub_bialgebra() {
    CheckOutcome out = ok_outcome();
    CoproductSpec spec{elect_convention().winner};
    if (delta_images_in_og(spec)) {
        out.details.push_back("Δ(x), Δ(u), Δ(g) lie in O(G)⊗O(G)");
    } else {
        out.ok = false;
        out.details.push_back("FAIL: a coproduct image leaves O(G)⊗O(G)");
    }
    // Δ(z) is computable; its shape against z⊗z is reported, not asserted.
    const auto &el = dcat().elements;
    CoproductSpec s2{elect_convention().winner};
    TensorPolynomial dz = delta(el.z, s2);
    TensorPolynomial residual = dz - TensorPolynomial::simple(el.z, el.z);
    out.details.push_back("Δ(z) has " + std::to_string(dz.term_count()) +
                          " terms; Δ(z) - z⊗z has " + std::to_string(residual.term_count()));
    return out;
}

CheckOutcome run_sl2_quotient() {
    CheckOutcome out = ok_outcome();
    const AlgebraMap &pi = sl2_quotient_map();
    MorphismReport r = check_map_is_morphism(pi);
    if (r.passed()) {
        out.details.push_back("all defining relations map to relations of U(sl2)");
    } else {
        out.ok = false;
        for (const auto &f : r.failures)
            out.details.push_back("FAIL on " + f.relation);
    }
    const auto &el = dcat().elements;
    auto expect_const = [&](const std::string &label, const NcPolynomial &img, long want) {
        if (img == NcPolynomial::constant(want)) {
            out.details.push_back(label + " maps to " + std::to_string(want));
        } else {
            out.ok = false;
            out.details.push_back("FAIL " + label + " image");
        }
    };
    expect_const("z", apply_map(pi, el.z), 16);
    expect_const("omega", apply_map(pi, el.omega), -16);
    expect_const("theta", apply_map(pi, el.theta), 16);
    for (const char *t : {"x", "u", "g - 1"})
        if (!apply_map(pi, dparse(t)).is_zero()) {
            out.ok = false;
            out.details.push_back(std::string("FAIL ") + t + " not killed");
        }
    if (out.ok)
        out.details.push_back("O(G)+ is killed");
    return out;
}

CheckOutcome run_adnilp(const char *t) {
    CheckOutcome out = ok_outcome();
    auto orders = ad_nilpotence_order(t, dcat());
    const std::map<std::string, int> expected = {{"g", 1}, {"x", 1}, {"u", 1},
                                                 {"y", 2}, {"zeta", 2}, {"v", 2}};
    for (const auto &[gen, n] : orders) {
        if (expected.at(gen) == n) {
            out.details.push_back("ad(" + std::string(t) + ")^" + std::to_string(n) + "(" +
                                  gen + ") = 0");
        } else {
            out.ok = false;
            out.details.push_back("FAIL order of " + gen + ": " + std::to_string(n));
        }
    }
    return out;
}

CheckOutcome run_weyl(WeylCase which) {
    CheckOutcome out = ok_outcome();
    for (const auto &row : weyl_bracket_battery(which)) {
        if (row.ok) {
            out.details.push_back(row.label + " = " + to_string(row.expected));
        } else {
            out.ok = false;
            out.details.push_back("FAIL " + row.label + " = " + row.residual);
        }
    }
    return out;
}

CheckOutcome run_weyl_express(WeylCase which) {
    CheckOutcome out = ok_outcome();
    for (const auto &row : express_generators(which)) {
        if (row.ok) {
            out.details.push_back(row.label + " = 0");
        } else {
            out.ok = false;
            out.details.push_back("FAIL " + row.label + ": " + row.residual);
        }
    }
    return out;
}

CheckOutcome run_eta_sign_report() {
    CheckOutcome out = ok_outcome();
    for (WeylCase which : {WeylCase::A, WeylCase::B, WeylCase::C, WeylCase::D}) {
        const WeylCoordinates &w = weyl_coordinates(which);
        std::string line = "case " + weyl_case_name(which) + ": printed eta gives [eta,t] = " +
                           std::to_string(w.printed_bracket);
        line += w.sign_flipped ? "; elected the flipped sign" : "; kept as printed";
        out.details.push_back(line);
    }
    return out;
}

MembershipResult member(const NcPolynomial &target, std::vector<NcPolynomial> gens, int bound) {
    MembershipProblem p;
    p.target = target;
    p.generators = std::move(gens);
    p.generator_is_normal.assign(p.generators.size(), true);
    p.bound = bound;
    return solve_membership(p, dcat().pres);
}

std::string witness_text(const MembershipWitness &w) {
    std::string s = "witness:";
    for (size_t i = 0; i < w.cofactors.size(); ++i)
        s += " h" + std::to_string(i + 1) + " = " +
             format_polynomial(w.cofactors[i], dcat().pres) + ";";
    return s;
}

CheckOutcome run_m0_equals_p0sq() {
    CheckOutcome out = ok_outcome();
    const auto &el = dcat().elements;
    const auto &p = dcat().pres;
    for (const auto &check : ideal_square_identities())
        expect_zero(out, check.label, check.residual, p);

    NcPolynomial q2 = multiply(el.q, el.q, p), qs = multiply(el.q, el.s, p);
    NcPolynomial sq = multiply(el.s, el.q, p), s2 = multiply(el.s, el.s, p);
    const std::vector<std::pair<std::string, NcPolynomial>> m0 = {
        {"z", el.z}, {"omega", el.omega}, {"theta", el.theta}};
    for (const auto &[name, target] : m0) {
        MembershipResult r = member(target, {q2, qs, sq, s2}, 2);
        if (auto *w = std::get_if<MembershipWitness>(&r)) {
            out.details.push_back(name + " in (P0)^2 at bound 2; " + witness_text(*w));
        } else {
            out.ok = false;
            out.details.push_back("FAIL " + name + " not found in (P0)^2 at bound 2");
        }
    }
    const std::vector<std::pair<std::string, NcPolynomial>> squares = {
        {"q^2", q2}, {"q*s", qs}, {"s^2", s2}};
    for (const auto &[name, target] : squares) {
        MembershipResult r = member(target, {el.z, el.omega, el.theta}, 2);
        if (auto *w = std::get_if<MembershipWitness>(&r)) {
            out.details.push_back(name + " in m0 D at bound 2; " + witness_text(*w));
        } else {
            out.ok = false;
            out.details.push_back("FAIL " + name + " not found in m0 D at bound 2");
        }
    }
    return out;
}

CheckOutcome run_p1p2_in_p0() {
    CheckOutcome out = ok_outcome();
    const auto &el = dcat().elements;
    const std::vector<std::tuple<std::string, NcPolynomial, int>> targets = {
        {"z", el.z, 3}, {"omega", el.omega, 3}, {"theta", el.theta, 4}};
    for (const auto &[name, target, bound] : targets) {
        MembershipResult r = member(target, {el.q, el.s}, bound);
        if (auto *w = std::get_if<MembershipWitness>(&r)) {
            out.details.push_back(name + " in P0 at bound " + std::to_string(bound) + "; " +
                                  witness_text(*w));
        } else {
            out.ok = false;
            out.details.push_back("FAIL " + name + " not in P0 at bound " +
                                  std::to_string(bound));
        }
    }
    // Degree obstruction: bound 2 is provably too small.
    MembershipResult low = member(el.z, {el.q, el.s}, 2);
    if (std::holds_alternative<NoWitnessAtBound>(low)) {
        out.details.push_back("z has no cofactors at bound 2 (degree obstruction)");
    } else {
        out.ok = false;
        out.details.push_back("FAIL unexpected witness for z at bound 2");
    }
    return out;
}

CheckOutcome run_negative_membership(const char *which) {
    CheckOutcome out = ok_outcome();
    const auto &el = dcat().elements;
    MembershipResult r = std::string(which) == "s-in-qD"
                             ? member(el.s, {el.q}, 4)
                             : member(NcPolynomial::one(), {el.q, el.s}, 4);
    if (auto *n = std::get_if<NoWitnessAtBound>(&r)) {
        out.details.push_back("NoWitnessAtBound(" + std::to_string(n->bound) + "), rank " +
                              std::to_string(n->rank) + ", system " + std::to_string(n->rows) +
                              "x" + std::to_string(n->cols));
        out.details.push_back("inconclusive as a negative: evidence, not proof");
    } else {
        out.ok = false;
        out.details.push_back("FAIL unexpected witness");
    }
    return out;
}

CheckOutcome run_pq_square_claim() {
    CheckOutcome out = ok_outcome();
    const auto &el = dcat().elements;
    const auto &p = dcat().pres;
    NcPolynomial q2 = multiply(el.q, el.q, p);
    for (int bound : {2, 3, 4}) {
        MembershipResult r = member(el.omega, {q2}, bound);
        if (auto *n = std::get_if<NoWitnessAtBound>(&r)) {
            out.details.push_back("omega in q^2 D: NoWitnessAtBound(" +
                                  std::to_string(bound) + "), rank " +
                                  std::to_string(n->rank));
        } else {
            out.details.push_back("omega in q^2 D: witness found at bound " +
                                  std::to_string(bound));
        }
    }
    out.details.push_back("outcome reported only; a witness would force s into qD");
    return out;
}

CheckOutcome run_growth() {
    CheckOutcome out = ok_outcome();
    GrowthTable t = growth_table(12);
    if (t.matches()) {
        out.details.push_back("monomial_count(n) = C(n+6,6) + C(n+5,6) for n <= 12");
    } else {
        out.ok = false;
        for (const auto &row : t.rows)
            if (row.count != row.expected)
                out.details.push_back("FAIL at n = " + std::to_string(row.n));
    }
    for (const auto &row : t.rows)
        out.details.push_back("n = " + std::to_string(row.n) + ": " + row.count.str());
    auto slope = [](int n) {
        double c2 = growth_closed_form(2 * n).convert_to<double>();
        double c1 = growth_closed_form(n).convert_to<double>();
        return std::log2(c2 / c1);
    };
    double prev = 0.0;
    bool trend = true;
    for (int n : {3, 6, 12, 24, 48}) {
        double s = slope(n);
        if (s <= prev || s >= 6.0)
            trend = false;
        prev = s;
    }
    if (trend && slope(48) > 5.5) {
        out.details.push_back("log-slope climbs toward 6 (5.5 < slope(48) < 6)");
    } else {
        out.ok = false;
        out.details.push_back("FAIL growth trend");
    }
    return out;
}

CheckOutcome run_fuzz_assoc() {
    CheckOutcome out = ok_outcome();
    const auto &p = dcat().pres;
    std::mt19937_64 rng(105);
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
        NcPolynomial abc[3];
        for (auto &t : abc) {
            int terms = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < terms; ++j) {
                Monomial m;
                int steps = static_cast<int>(rng() % 4);
                for (int s = 0; s < steps; ++s) {
                    int pos = static_cast<int>(rng() % 6);
                    m.add_exponent(pos, p.is_invertible(pos) && (rng() & 1) ? -1 : 1);
                }
                int c = static_cast<int>(rng() % 5) - 2;
                t.add_term(m, Rational(c == 0 ? 1 : c));
            }
        }
        if (multiply(multiply(abc[0], abc[1], p), abc[2], p) !=
            multiply(abc[0], multiply(abc[1], abc[2], p), p))
            ++failures;
    }
    if (failures) {
        out.ok = false;
        out.details.push_back("FAIL associativity on " + std::to_string(failures) +
                              "/200 triples");
    } else {
        out.details.push_back("associativity on 200 random triples of degree <= 3");
    }
    return out;
}

CheckOutcome run_filtration() {
    CheckOutcome out = ok_outcome();
    const auto &p = dcat().pres;
    std::mt19937_64 rng(106);
    int level_failures = 0, graded_failures = 0;
    for (int i = 0; i < 100; ++i) {
        Monomial ma, mb;
        for (Monomial *m : {&ma, &mb})
            for (int s = 0; s < static_cast<int>(rng() % 4); ++s) {
                int pos = static_cast<int>(rng() % 6);
                m->add_exponent(pos, p.is_invertible(pos) && (rng() & 1) ? -1 : 1);
            }
        NcPolynomial a = NcPolynomial::monomial(ma), b = NcPolynomial::monomial(mb);
        NcPolynomial ab = multiply(a, b, p);
        int la = level_degree(a, p), lb = level_degree(b, p);
        if (!ab.is_zero() && level_degree(ab, p) > la + lb)
            ++level_failures;
        if (la + lb > 0) {
            NcPolynomial bracket = commutator(a, b, p);
            if (!bracket.is_zero() && level_degree(bracket, p) >= la + lb)
                ++graded_failures;
        }
    }
    if (level_failures || graded_failures) {
        out.ok = false;
        out.details.push_back("FAIL filtration: " + std::to_string(level_failures) +
                              " subadditivity, " + std::to_string(graded_failures) +
                              " graded-commutativity");
    } else {
        out.details.push_back("level filtration subadditive on 100 pairs");
        out.details.push_back("associated graded commutes on 100 pairs");
    }
    FuzzReport total = degree_subadditivity_fuzz(100);
    if (total.ok()) {
        out.details.push_back("total-degree subadditivity on 100 pairs");
    } else {
        out.ok = false;
        out.details.push_back("FAIL total-degree subadditivity");
    }
    return out;
}

CheckOutcome run_convention_elected() {
    CheckOutcome out = ok_outcome();
    ConventionElection e = elect_convention();
    out.details.push_back("convention_elected = " + convention_name(e.winner));
    out.details.push_back(e.exactly_one ? "exactly one convention passes"
                                        : "ANOMALY: election not unique");
    out.ok = e.exactly_one;
    return out;
}

std::vector<CheckDescriptor> build_registry() {
    std::vector<CheckDescriptor> reg;
    auto add = [&](std::string id, std::string ref, std::function<CheckOutcome()> fn,
                   bool report_only = false) {
        reg.push_back({std::move(id), std::move(ref), report_only, std::move(fn)});
    };

    add("jordan-relations", "§2.1: defining relations of J, H and D", run_jordan_relations);
    add("ore-tower", "Prop 3.1: iterated Ore extension over k<x,u,g^±1>", run_ore_tower);
    add("sigma-normal-q", "Lemma 2.1(i): q is σ-normal, eq. (2.1)",
        [] { return run_sigma_normal("q"); });
    add("sigma-normal-s", "Lemma 2.1(i): s is σ-normal, eq. (2.1)",
        [] { return run_sigma_normal("s"); });
    add("sigma-squared-adg", "Lemma 2.1(ii): σ² = Ad(g)", run_sigma_squared);
    add("centre-zωθ", "Lemma 2.1(iii): z, ω, θ central", run_centre_membership);
    add("centre-relation", "Theorem 2.2(iv): zθ = ω²", run_centre_relation);
    add("counit-mplus", "Notation 2.4(ii): m+ = <z-16, ω+16, θ-16>", run_counit_mplus);
    add("hopf-relations", "§2.1: Δ extends to an algebra map", run_hopf_relations);
    add("hopf-counit", "§2.1: counit axioms", run_hopf_counit);
    add("hopf-coassoc", "§2.1: coassociativity", run_hopf_coassoc);
    add("og-sub-bialgebra", "Theorem 2.2(i): O(G) closed under Δ", run_og_sub_bialgebra);
    add("sl2-quotient", "Theorem 2.2(ii): D/DO(G)+ ≅ U(sl2)", run_sl2_quotient);
    add("adnilp-x", "Lemma 3.4: ad(x) locally nilpotent", [] { return run_adnilp("x"); });
    add("adnilp-u", "Lemma 3.4: ad(u) locally nilpotent", [] { return run_adnilp("u"); });
    for (WeylCase w : {WeylCase::A, WeylCase::B, WeylCase::C, WeylCase::D}) {
        add("weyl-" + weyl_case_name(w),
            "Lemma 3.6: [p,q] = 1 = [η,t], all other brackets zero",
            [w] { return run_weyl(w); });
        add("weyl-express-" + weyl_case_name(w),
            "Theorem 3.7: generators lie in the coordinate span",
            [w] { return run_weyl_express(w); });
    }
    add("eta-sign-report", "Notation 3.5(iii)/(iv): η sign as printed vs elected",
        run_eta_sign_report, true);
    add("T-relations", "Prop 5.3: bracket table of T", [] {
        CheckOutcome out = ok_outcome();
        merge_rows(out, t_relation_checks());
        return out;
    });
    add("pi-morphism", "Prop 5.3, eqs (up)/(greek)/(gener): π : D → T", [] {
        CheckOutcome out = ok_outcome();
        merge_rows(out, pi_morphism_checks());
        return out;
    });
    add("h-inner", "Lemma 5.6: σ = τ_{h^-1} on the radical extension", [] {
        CheckOutcome out = ok_outcome();
        merge_rows(out, inner_automorphism_checks());
        return out;
    });
    add("invariant-ideal", "Prop 5.9: μ, ∂₂' = β ∂/∂x, β = 2(xu+4)^-1(ux+2)²h", [] {
        CheckOutcome out = ok_outcome();
        merge_rows(out, invariant_ideal_checks());
        return out;
    });
    add("ore-laws", "eq. (1.1) and Prop 5.7: σ-derivation laws; ∂̃₂(y) read as h(3/2 uy - 2)",
        [] {
            CheckOutcome out = ok_outcome();
            merge_rows(out, ore_law_checks());
            return out;
        });
    add("m0-equals-P0sq", "Theorem 1.1(III): m0 D = (P0)²", run_m0_equals_p0sq);
    add("p1p2-in-P0", "Lemma 6.2 context: p1 D, p2 D inside P0", run_p1p2_in_p0);
    add("s-notin-qD", "Theorem 1.2(C) context: s ∉ qD evidence",
        [] { return run_negative_membership("s-in-qD"); });
    add("one-notin-P0", "eq. (5.1): P0 is proper", [] { return run_negative_membership("one"); });
    add("pq-square-claim", "Theorem 1.2(C): ω ∈? q²D at bounds 2..4", run_pq_square_claim,
        true);
    add("growth", "Prop 3.2(iii): GKdim(D) = 6 dimension counts", run_growth);
    add("fuzz-assoc", "PBW confluence evidence: random associativity", run_fuzz_assoc);
    add("filtration", "eqs (3.2)/(3.3): filtration and commutative graded algebra",
        run_filtration);
    add("convention-elected", "§2.1: (g,1)-primitive convention election",
        run_convention_elected, true);

    return reg;
}

} // namespace

const std::vector<CheckDescriptor> &check_registry() {
    static const std::vector<CheckDescriptor> reg = build_registry();
    return reg;
}

bool glob_match(const std::string &pattern, const std::string &text) {
    // Iterative '*' matcher; no other metacharacters.
    size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*')
        ++p;
    return p == pattern.size();
}

std::vector<std::string> matching_check_ids(const std::string &pattern) {
    std::vector<std::string> out;
    for (const auto &d : check_registry())
        if (pattern == "all" || glob_match(pattern, d.id))
            out.push_back(d.id);
    return out;
}

std::vector<CheckReport> run_checks(const std::string &pattern, int jobs) {
    std::vector<const CheckDescriptor *> selected;
    for (const auto &d : check_registry())
        if (pattern == "all" || glob_match(pattern, d.id))
            selected.push_back(&d);

    std::vector<CheckReport> reports(selected.size());
    if (jobs <= 0)
        jobs = omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (size_t i = 0; i < selected.size(); ++i) {
        const CheckDescriptor &d = *selected[i];
        CheckReport r;
        r.id = d.id;
        r.paper_ref = d.paper_ref;
        auto start = std::chrono::steady_clock::now();
        try {
            CheckOutcome outcome = d.runner();
            r.details = std::move(outcome.details);
            r.status = d.report_only ? CheckStatus::Report
                                     : (outcome.ok ? CheckStatus::Pass : CheckStatus::Fail);
        } catch (const std::exception &e) {
            r.status = CheckStatus::Fail;
            r.details.push_back(std::string("exception: ") + e.what());
        }
        auto stop = std::chrono::steady_clock::now();
        r.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        reports[i] = std::move(r);
    }

    std::sort(reports.begin(), reports.end(),
              [](const CheckReport &a, const CheckReport &b) { return a.id < b.id; });
    return reports;
}

std::string elected_convention_name() { return convention_name(elect_convention().winner); }

std::string reports_to_json(const std::vector<CheckReport> &reports, int json_indent) {
    ordered_json root;
    root["version"] = 1;
    root["convention_elected"] = elected_convention_name();
    root["checks"] = ordered_json::array();
    for (const auto &r : reports) {
        ordered_json row;
        row["id"] = r.id;
        row["paper_ref"] = r.paper_ref;
        row["status"] = status_name(r.status);
        row["details"] = r.details;
        row["wall_time_ms"] = r.wall_time_ms;
        root["checks"].push_back(std::move(row));
    }
    return root.dump(json_indent);
}

std::string reports_to_text(const std::vector<CheckReport> &reports) {
    std::ostringstream os;
    size_t width = 0;
    for (const auto &r : reports)
        width = std::max(width, r.id.size());
    for (const auto &r : reports) {
        os << status_name(r.status);
        for (size_t i = status_name(r.status).size(); i < 7; ++i)
            os << ' ';
        os << r.id;
        for (size_t i = r.id.size(); i < width + 2; ++i)
            os << ' ';
        os << "(" << static_cast<long>(r.wall_time_ms) << " ms)  " << r.paper_ref << "\n";
        if (r.status == CheckStatus::Fail || r.status == CheckStatus::Report)
            for (const auto &d : r.details)
                os << "        " << d << "\n";
    }
    return os.str();
}

bool any_failure(const std::vector<CheckReport> &reports) {
    for (const auto &r : reports)
        if (r.status == CheckStatus::Fail)
            return true;
    return false;
}

} // namespace ncalg
