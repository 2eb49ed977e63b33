#include "ncalg/catalog.hpp"

#include <mutex>

namespace ncalg {

namespace {

NcPolynomial rule_rhs(const AlgebraPresentation &pres, const std::string &text) {
    // Rule right-hand sides are written normal-ordered; no rewriting here.
    return polynomial_of_ordered_words(elaborate_words(parse_expression(text), pres), pres);
}

void add_commuting_pairs(AlgebraPresentation &pres,
                         const std::vector<std::pair<std::string, std::string>> &pairs) {
    for (const auto &[hi, lo] : pairs)
        pres.add_swap_rule(hi, lo, rule_rhs(pres, lo + "*" + hi));
}

// Shared relation set of D; x and u invertibility differs per variant.
AlgebraPresentation make_double(const std::string &name, bool invert_x, bool invert_u) {
    AlgebraPresentation p;
    p.name = name;
    p.add_generator("g", true);
    p.add_generator("x", invert_x);
    p.add_generator("u", invert_u);
    p.add_generator("y");
    p.add_generator("zeta");
    p.add_generator("v");

    add_commuting_pairs(p, {{"x", "g"}, {"u", "g"}, {"zeta", "g"}, {"u", "x"}});
    p.add_swap_rule("y", "g", rule_rhs(p, "g*y - g*x"));
    p.add_swap_rule("v", "g", rule_rhs(p, "g*v + g*u"));
    p.add_swap_rule("y", "x", rule_rhs(p, "x*y - 1/2*x^2"));
    p.add_swap_rule("zeta", "x", rule_rhs(p, "x*zeta + x"));
    p.add_swap_rule("v", "x", rule_rhs(p, "x*v + 1 - g + x*u"));
    p.add_swap_rule("y", "u", rule_rhs(p, "u*y - 1 + g"));
    p.add_swap_rule("zeta", "u", rule_rhs(p, "u*zeta - u"));
    p.add_swap_rule("v", "u", rule_rhs(p, "u*v - 1/2*u^2"));
    p.add_swap_rule("zeta", "y", rule_rhs(p, "y*zeta + y"));
    // [v,y] = yu - g*zeta, with yu renormalized: yu = uy - 1 + g.
    p.add_swap_rule("v", "y", rule_rhs(p, "y*v + u*y - 1 + g - g*zeta"));
    p.add_swap_rule("v", "zeta", rule_rhs(p, "zeta*v + v"));

    p.add_inverse_rule("x", "g", rule_rhs(p, "g^-1*x"));
    p.add_inverse_rule("u", "g", rule_rhs(p, "g^-1*u"));
    p.add_inverse_rule("y", "g", rule_rhs(p, "g^-1*y + g^-1*x"));
    p.add_inverse_rule("zeta", "g", rule_rhs(p, "g^-1*zeta"));
    p.add_inverse_rule("v", "g", rule_rhs(p, "g^-1*v - g^-1*u"));

    if (invert_x) {
        p.add_inverse_rule("u", "x", rule_rhs(p, "x^-1*u"));
        p.add_inverse_rule("y", "x", rule_rhs(p, "x^-1*y + 1/2"));
        p.add_inverse_rule("zeta", "x", rule_rhs(p, "x^-1*zeta - x^-1"));
        p.add_inverse_rule("v", "x", rule_rhs(p, "x^-1*v - x^-1*u - x^-2 + g*x^-2"));
    }
    if (invert_u) {
        p.add_inverse_rule("y", "u", rule_rhs(p, "u^-1*y + u^-2 - g*u^-2"));
        p.add_inverse_rule("zeta", "u", rule_rhs(p, "u^-1*zeta + u^-1"));
        p.add_inverse_rule("v", "u", rule_rhs(p, "u^-1*v + 1/2"));
    }

    p.set_level_generators({"y", "zeta", "v"});
    return p;
}

AlgebraPresentation make_jordan() {
    AlgebraPresentation p;
    p.name = "J";
    p.add_generator("x");
    p.add_generator("y");
    p.add_swap_rule("y", "x", rule_rhs(p, "x*y - 1/2*x^2"));
    p.set_level_generators({"y"});
    return p;
}

AlgebraPresentation make_og() {
    AlgebraPresentation p;
    p.name = "OG";
    p.add_generator("g", true);
    p.add_generator("x");
    p.add_generator("u");
    add_commuting_pairs(p, {{"x", "g"}, {"u", "g"}, {"u", "x"}});
    p.add_inverse_rule("x", "g", rule_rhs(p, "g^-1*x"));
    p.add_inverse_rule("u", "g", rule_rhs(p, "g^-1*u"));
    return p;
}

AlgebraPresentation make_bosonization() {
    AlgebraPresentation p;
    p.name = "H";
    p.add_generator("g", true);
    p.add_generator("x");
    p.add_generator("y");
    add_commuting_pairs(p, {{"x", "g"}});
    p.add_swap_rule("y", "g", rule_rhs(p, "g*y - g*x"));
    p.add_swap_rule("y", "x", rule_rhs(p, "x*y - 1/2*x^2"));
    p.add_inverse_rule("x", "g", rule_rhs(p, "g^-1*x"));
    p.add_inverse_rule("y", "g", rule_rhs(p, "g^-1*y + g^-1*x"));
    p.set_level_generators({"y"});
    return p;
}

// e, h, f with [h,e] = e, [h,f] = -f, [f,e]... as inherited from the
// quotient: [e,h] meaning follows [zeta,y] = y, [zeta,v] = -v and the
// image of [v,y].
AlgebraPresentation make_sl2() {
    AlgebraPresentation p;
    p.name = "SL2";
    p.add_generator("e");
    p.add_generator("h");
    p.add_generator("f");
    p.add_swap_rule("h", "e", rule_rhs(p, "e*h + e"));
    p.add_swap_rule("f", "e", rule_rhs(p, "e*f - h"));
    p.add_swap_rule("f", "h", rule_rhs(p, "h*f + f"));
    p.set_level_generators({"e", "h", "f"});
    return p;
}

void attach_distinguished(CatalogEntry &entry) {
    const AlgebraPresentation &p = entry.pres;
    DistinguishedElements &el = entry.elements;
    el.q = parse_polynomial("x*u + 2 + 2*g", p);
    el.s = parse_polynomial("x*v + u*y - 1/2*x*u*zeta + g*zeta - zeta - 2*g - 2", p);
    NcPolynomial ginv = generator_polynomial(p, p.require_position("g"), -1);
    el.z = multiply(multiply(el.q, el.q, p), ginv, p);
    el.omega = multiply(multiply(el.q, el.s, p), ginv, p);
    el.theta = multiply(multiply(el.s, el.s, p), ginv, p);
    el.mplus_gens = {el.z - NcPolynomial::constant(16),
                     el.omega + NcPolynomial::constant(16),
                     el.theta - NcPolynomial::constant(16)};
    el.m0_gens = {el.z, el.omega, el.theta};
    el.p0_gens = {el.q, el.s};
    entry.has_elements = true;

    entry.distinguished["q"] = el.q;
    entry.distinguished["s"] = el.s;
    entry.distinguished["z"] = el.z;
    entry.distinguished["omega"] = el.omega;
    entry.distinguished["theta"] = el.theta;
}

void attach_sigma(CatalogEntry &entry) {
    const AlgebraPresentation &p = entry.pres;
    AlgebraMap sigma;
    sigma.name = "sigma";
    sigma.source = &p;
    sigma.target = &p;
    for (const auto &gen : p.generators) {
        sigma.images[gen.position] = generator_polynomial(p, gen.position);
        if (gen.invertible)
            sigma.inverse_images[gen.position] = generator_polynomial(p, gen.position, -1);
    }
    sigma.set_image("y", parse_polynomial("y + 1/2*x", p));
    sigma.set_image("v", parse_polynomial("v - 1/2*u", p));
    entry.maps.emplace("sigma", std::move(sigma));
    entry.maps.emplace("id", identity_map(p));
}

CatalogEntry build_entry(AlgebraId id) {
    CatalogEntry entry;
    entry.id = id;
    switch (id) {
    case AlgebraId::J:
        entry.id_name = "J";
        entry.pres = make_jordan();
        break;
    case AlgebraId::OG:
        entry.id_name = "OG";
        entry.pres = make_og();
        break;
    case AlgebraId::H:
        entry.id_name = "H";
        entry.pres = make_bosonization();
        break;
    case AlgebraId::D:
        entry.id_name = "D";
        entry.pres = make_double("D", false, false);
        break;
    case AlgebraId::D_LX:
        entry.id_name = "D_LX";
        entry.pres = make_double("D_LX", true, false);
        break;
    case AlgebraId::D_LU:
        entry.id_name = "D_LU";
        entry.pres = make_double("D_LU", false, true);
        break;
    case AlgebraId::SL2:
        entry.id_name = "SL2";
        entry.pres = make_sl2();
        break;
    }

    ValidationReport report = validate_presentation(entry.pres);
    if (!report.passed()) {
        std::string what = "presentation " + entry.pres.name + " failed validation:";
        for (const auto &issue : report.issues)
            what += "\n  " + issue.what;
        throw ValidationError(what);
    }

    if (id == AlgebraId::D || id == AlgebraId::D_LX || id == AlgebraId::D_LU) {
        attach_distinguished(entry);
        attach_sigma(entry);
    }
    return entry;
}

} // namespace

const CatalogEntry &catalog(AlgebraId id) {
    static const CatalogEntry J = build_entry(AlgebraId::J);
    static const CatalogEntry OG = build_entry(AlgebraId::OG);
    static const CatalogEntry H = build_entry(AlgebraId::H);
    static const CatalogEntry D = build_entry(AlgebraId::D);
    static const CatalogEntry D_LX = build_entry(AlgebraId::D_LX);
    static const CatalogEntry D_LU = build_entry(AlgebraId::D_LU);
    static const CatalogEntry SL2 = build_entry(AlgebraId::SL2);
    switch (id) {
    case AlgebraId::J: return J;
    case AlgebraId::OG: return OG;
    case AlgebraId::H: return H;
    case AlgebraId::D: return D;
    case AlgebraId::D_LX: return D_LX;
    case AlgebraId::D_LU: return D_LU;
    case AlgebraId::SL2: return SL2;
    }
    throw Error("unknown algebra id");
}

const CatalogEntry *catalog_by_name(const std::string &name) {
    for (AlgebraId id : {AlgebraId::J, AlgebraId::OG, AlgebraId::H, AlgebraId::D,
                         AlgebraId::D_LX, AlgebraId::D_LU, AlgebraId::SL2}) {
        const CatalogEntry &e = catalog(id);
        if (e.id_name == name)
            return &e;
    }
    return nullptr;
}

std::vector<std::string> catalog_names() {
    return {"J", "OG", "H", "D", "D_LX", "D_LU", "SL2"};
}

const AlgebraMap &sigma_map(const CatalogEntry &entry) {
    auto it = entry.maps.find("sigma");
    if (it == entry.maps.end())
        throw Error("algebra " + entry.id_name + " carries no sigma map");
    return it->second;
}

const AlgebraMap &sl2_quotient_map() {
    static const AlgebraMap pi = [] {
        const CatalogEntry &d = catalog(AlgebraId::D);
        const CatalogEntry &sl2 = catalog(AlgebraId::SL2);
        AlgebraMap m;
        m.name = "pi_sl2";
        m.source = &d.pres;
        m.target = &sl2.pres;
        m.set_image("x", NcPolynomial::zero());
        m.set_image("u", NcPolynomial::zero());
        m.set_image("g", NcPolynomial::one());
        m.set_inverse_image("g", NcPolynomial::one());
        m.set_image("y", generator_polynomial(sl2.pres, sl2.pres.require_position("e")));
        m.set_image("zeta", generator_polynomial(sl2.pres, sl2.pres.require_position("h")));
        m.set_image("v", generator_polynomial(sl2.pres, sl2.pres.require_position("f")));
        return m;
    }();
    return pi;
}

std::map<std::string, int> ad_nilpotence_order(const std::string &t, const CatalogEntry &entry,
                                               int bound) {
    if (bound < 1)
        throw Error("ad_nilpotence_order needs bound >= 1");
    const AlgebraPresentation &p = entry.pres;
    NcPolynomial tp = generator_polynomial(p, p.require_position(t));
    std::map<std::string, int> orders;
    for (const auto &gen : p.generators) {
        NcPolynomial w = generator_polynomial(p, gen.position);
        int n = 0;
        while (n < bound) {
            w = commutator(tp, w, p);
            ++n;
            if (w.is_zero())
                break;
        }
        if (!w.is_zero())
            throw BoundExceededError("ad(" + t + ") not nilpotent on " + gen.name +
                                     " within bound " + std::to_string(bound));
        orders[gen.name] = n;
    }
    return orders;
}

std::vector<IdentityCheck> ideal_square_identities() {
    const CatalogEntry &d = catalog(AlgebraId::D);
    const AlgebraPresentation &p = d.pres;
    const DistinguishedElements &el = d.elements;
    NcPolynomial gp = generator_polynomial(p, p.require_position("g"));
    std::vector<IdentityCheck> checks;
    checks.push_back({"q^2 - z*g", multiply(el.q, el.q, p) - multiply(el.z, gp, p)});
    checks.push_back({"q*s - omega*g", multiply(el.q, el.s, p) - multiply(el.omega, gp, p)});
    checks.push_back({"s*q - omega*g", multiply(el.s, el.q, p) - multiply(el.omega, gp, p)});
    checks.push_back({"s^2 - theta*g", multiply(el.s, el.s, p) - multiply(el.theta, gp, p)});
    checks.push_back({"s*q - q*s", commutator(el.s, el.q, p)});
    return checks;
}

} // namespace ncalg
