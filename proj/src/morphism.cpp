#include "ncalg/morphism.hpp"

namespace ncalg {

void AlgebraMap::set_image(const std::string &gen, NcPolynomial img) {
    images[source->require_position(gen)] = std::move(img);
}

void AlgebraMap::set_inverse_image(const std::string &gen, NcPolynomial img) {
    int pos = source->require_position(gen);
    if (!source->is_invertible(pos))
        throw Error("inverse image for non-invertible generator '" + gen + "'");
    inverse_images[pos] = std::move(img);
}

AlgebraMap identity_map(const AlgebraPresentation &pres) {
    AlgebraMap m;
    m.name = "id";
    m.source = &pres;
    m.target = &pres;
    for (const auto &g : pres.generators) {
        m.images[g.position] = generator_polynomial(pres, g.position);
        if (g.invertible)
            m.inverse_images[g.position] = generator_polynomial(pres, g.position, -1);
    }
    return m;
}

AlgebraMap compose(const AlgebraMap &outer, const AlgebraMap &inner) {
    if (outer.source != inner.target)
        throw Error("compose: middle algebras differ");
    AlgebraMap m;
    m.name = outer.name + "∘" + inner.name;
    m.source = inner.source;
    m.target = outer.target;
    for (const auto &[pos, img] : inner.images)
        m.images[pos] = apply_map(outer, img);
    for (const auto &[pos, img] : inner.inverse_images)
        m.inverse_images[pos] = apply_map(outer, img);
    return m;
}

NcPolynomial apply_map(const AlgebraMap &m, const NcPolynomial &p) {
    NcPolynomial result;
    for (const auto &[mon, coeff] : p.terms()) {
        NcPolynomial acc = NcPolynomial::constant(coeff);
        for (int pos = 0; pos < m.source->generator_count(); ++pos) {
            int e = mon.exponent(pos);
            if (e == 0)
                continue;
            const NcPolynomial *img = nullptr;
            if (e > 0) {
                auto it = m.images.find(pos);
                if (it == m.images.end())
                    throw Error("map '" + m.name + "' lacks an image for generator '" +
                                m.source->generator(pos).name + "'");
                img = &it->second;
            } else {
                auto it = m.inverse_images.find(pos);
                if (it == m.inverse_images.end())
                    throw MissingInverseImageError("map '" + m.name +
                                                   "' lacks an inverse image for generator '" +
                                                   m.source->generator(pos).name + "'");
                img = &it->second;
            }
            for (int k = 0; k < std::abs(e); ++k)
                acc = multiply(acc, *img, *m.target);
        }
        result += acc;
    }
    return result;
}

MorphismReport check_map_is_morphism(const AlgebraMap &m) {
    MorphismReport report;
    for (const SwapRule &rule : m.source->swap_rules) {
        const NcPolynomial hi_img = apply_map(m, generator_polynomial(*m.source, rule.hi));
        const NcPolynomial lo_img = apply_map(m, generator_polynomial(*m.source, rule.lo));
        NcPolynomial residual = multiply(hi_img, lo_img, *m.target) - apply_map(m, rule.rhs);
        if (!residual.is_zero())
            report.failures.push_back({m.source->generator(rule.hi).name + "*" +
                                           m.source->generator(rule.lo).name,
                                       std::move(residual)});
    }
    for (const auto &g : m.source->generators) {
        if (!g.invertible)
            continue;
        auto it = m.inverse_images.find(g.position);
        if (it == m.inverse_images.end())
            continue;
        const NcPolynomial &img = m.images.at(g.position);
        NcPolynomial residual = multiply(img, it->second, *m.target) - NcPolynomial::one();
        if (!residual.is_zero())
            report.failures.push_back({g.name + "*" + g.name + "^-1", std::move(residual)});
    }
    return report;
}

namespace {

// Generator powers t^e for e = +1 and (invertible) e = -1, with a display
// name for witnesses.
std::vector<std::pair<std::string, NcPolynomial>>
generator_probes(const AlgebraPresentation &pres) {
    std::vector<std::pair<std::string, NcPolynomial>> probes;
    for (const auto &g : pres.generators) {
        probes.emplace_back(g.name, generator_polynomial(pres, g.position));
        if (g.invertible)
            probes.emplace_back(g.name + "^-1", generator_polynomial(pres, g.position, -1));
    }
    return probes;
}

} // namespace

CentralityResult is_central(const NcPolynomial &c, const AlgebraPresentation &pres) {
    for (auto &[name, t] : generator_probes(pres)) {
        NcPolynomial bracket = commutator(c, t, pres);
        if (!bracket.is_zero())
            return {false, CentralityWitness{name, std::move(bracket)}};
    }
    return {true, std::nullopt};
}

SigmaNormalResult is_sigma_normal(const NcPolynomial &n, const AlgebraMap &m,
                                  const AlgebraPresentation &pres) {
    for (auto &[name, t] : generator_probes(pres)) {
        NcPolynomial residual = multiply(n, t, pres) - multiply(apply_map(m, t), n, pres);
        if (!residual.is_zero())
            return {false, CentralityWitness{name, std::move(residual)}};
    }
    return {true, std::nullopt};
}

} // namespace ncalg
