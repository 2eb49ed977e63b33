#pragma once

#include "ncalg/presentation.hpp"

#include <map>
#include <optional>

namespace ncalg {

// Algebra map given by generator images in the target. Images of the
// inverses of invertible generators must be supplied explicitly.
struct AlgebraMap {
    std::string name;
    const AlgebraPresentation *source = nullptr;
    const AlgebraPresentation *target = nullptr;
    std::map<int, NcPolynomial> images;         // generator position -> image
    std::map<int, NcPolynomial> inverse_images; // invertible position -> image of inverse

    void set_image(const std::string &gen, NcPolynomial img);
    void set_inverse_image(const std::string &gen, NcPolynomial img);
};

AlgebraMap identity_map(const AlgebraPresentation &pres);
AlgebraMap compose(const AlgebraMap &outer, const AlgebraMap &inner);

NcPolynomial apply_map(const AlgebraMap &m, const NcPolynomial &p);

struct MorphismIssue {
    std::string relation; // "hi*lo" of the offending rule
    NcPolynomial residual;
};

struct MorphismReport {
    std::vector<MorphismIssue> failures;
    bool passed() const { return failures.empty(); }
};

// For every swap rule hi*lo = rhs of the source, reports
// NF(m(hi)*m(lo) - m(rhs)) in the target; also checks that images of
// inverse pairs multiply to 1.
MorphismReport check_map_is_morphism(const AlgebraMap &m);

struct CentralityWitness {
    std::string generator; // name, "g^-1" style for inverses
    NcPolynomial bracket;
};

struct CentralityResult {
    bool central = false;
    std::optional<CentralityWitness> witness;
};

// [c, t] = 0 for every generator t and every inverse generator.
CentralityResult is_central(const NcPolynomial &c, const AlgebraPresentation &pres);

struct SigmaNormalResult {
    bool normal = false;
    std::optional<CentralityWitness> witness; // n*t - m(t)*n residual
};

// n*t = m(t)*n for every generator t and every inverse generator.
SigmaNormalResult is_sigma_normal(const NcPolynomial &n, const AlgebraMap &m,
                                  const AlgebraPresentation &pres);

} // namespace ncalg
