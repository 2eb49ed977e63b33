#pragma once

#include "ncalg/morphism.hpp"
#include "ncalg/parser.hpp"

#include <map>
#include <string>

namespace ncalg {

// The algebras in play. D is the Drinfeld double of the Jordan plane J;
// H is the bosonization J#C_inf; OG the commutative Hopf subalgebra
// k<x,u,g^±1>; D_LX / D_LU are D with x resp. u inverted; SL2 is the
// enveloping-algebra quotient target.
enum class AlgebraId { J, OG, H, D, D_LX, D_LU, SL2 };

struct DistinguishedElements {
    NcPolynomial q, s, z, omega, theta;
    std::vector<NcPolynomial> mplus_gens; // z-16, omega+16, theta-16
    std::vector<NcPolynomial> m0_gens;    // z, omega, theta
    std::vector<NcPolynomial> p0_gens;    // q, s
};

struct CatalogEntry {
    AlgebraId id = AlgebraId::D;
    std::string id_name;
    AlgebraPresentation pres;
    DistinguishedTable distinguished;            // name -> normal form
    std::map<std::string, AlgebraMap> maps;      // "sigma" on D-like entries
    DistinguishedElements elements;              // populated on D-like entries
    bool has_elements = false;
};

// Entries are built once (validated) and immutable afterwards.
const CatalogEntry &catalog(AlgebraId id);
const CatalogEntry *catalog_by_name(const std::string &name); // nullptr when absent
std::vector<std::string> catalog_names();

const AlgebraMap &sigma_map(const CatalogEntry &entry);

// D -> SL2: x,u -> 0; g^±1 -> 1; y,zeta,v -> e,h,f.
const AlgebraMap &sl2_quotient_map();

// Smallest N per generator with ad(t)^N(gen) = 0, t in {x, u}.
std::map<std::string, int> ad_nilpotence_order(const std::string &t, const CatalogEntry &entry,
                                               int bound = 8);

struct IdentityCheck {
    std::string label;
    NcPolynomial residual;
};

// q^2 = zg, qs = sq = wg, s^2 = tg, sq = qs; residuals are all zero.
std::vector<IdentityCheck> ideal_square_identities();

} // namespace ncalg
