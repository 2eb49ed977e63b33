#pragma once

#include "ncalg/presentation.hpp"

#include <array>

namespace ncalg {

// Sparse tensor of rank 2 or 3 over one algebra. Multiplication is
// slotwise with each slot renormalized independently; no braiding.
class TensorPolynomial {
  public:
    using Key = std::array<Monomial, 3>; // slot 3 unused at rank 2
    using TermMap = std::map<Key, Rational>;

    explicit TensorPolynomial(int rank = 2) : rank_(rank) {}

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap &terms() const { return terms_; }

    void add_term(const Key &k, const Rational &c);

    TensorPolynomial &operator+=(const TensorPolynomial &other);
    TensorPolynomial &operator-=(const TensorPolynomial &other);
    friend TensorPolynomial operator+(TensorPolynomial a, const TensorPolynomial &b) {
        return a += b;
    }
    friend TensorPolynomial operator-(TensorPolynomial a, const TensorPolynomial &b) {
        return a -= b;
    }

    bool operator==(const TensorPolynomial &) const = default;

    static TensorPolynomial unit(int rank);
    static TensorPolynomial simple(const NcPolynomial &left, const NcPolynomial &right);

  private:
    int rank_;
    TermMap terms_;
};

TensorPolynomial tensor_multiply(const TensorPolynomial &a, const TensorPolynomial &b,
                                 const AlgebraPresentation &pres);

// The two candidate conventions for the skew-primitive generators x and
// y. g is grouplike, u and zeta are primitive, and
// delta(v) = v⊗1 + 1⊗v + zeta⊗u in either convention.
struct CoproductSpec {
    enum class Convention { A, B }; // A: x⊗g + 1⊗x,  B: x⊗1 + g⊗x
    Convention convention = Convention::B;
};

std::string convention_name(CoproductSpec::Convention c);

// Multiplicative extension of the generator images along each PBW word.
TensorPolynomial delta(const NcPolynomial &p, const CoproductSpec &spec);

Rational counit(const NcPolynomial &p);

struct RelationRow {
    std::string relation;
    TensorPolynomial residual{2};
    bool ok = false;
};

struct CoproductReport {
    std::vector<RelationRow> rows;
    bool passed() const {
        for (const auto &r : rows)
            if (!r.ok)
                return false;
        return true;
    }
};

// delta applied to each defining relation of D: NF⊗(Δ(hi)Δ(lo) − Δ(rhs)).
CoproductReport check_coproduct_on_relations(const CoproductSpec &spec);

struct ConventionElection {
    bool exactly_one = false;
    CoproductSpec::Convention winner = CoproductSpec::Convention::B;
    CoproductReport report_a, report_b;
};

ConventionElection elect_convention();

struct AxiomRow {
    std::string axiom;
    std::string generator;
    bool ok = false;
};

struct AxiomReport {
    std::vector<AxiomRow> rows;
    bool passed() const {
        for (const auto &r : rows)
            if (!r.ok)
                return false;
        return true;
    }
};

// (ε⊗id)Δ = id = (id⊗ε)Δ and (Δ⊗id)Δ = (id⊗Δ)Δ on every generator and
// inverse.
AxiomReport counit_and_coassoc_axioms(const CoproductSpec &spec);

// Δ(x), Δ(u), Δ(g) land in O(G) ⊗ O(G) (no y, zeta, v in either slot).
bool delta_images_in_og(const CoproductSpec &spec);

std::string format_tensor(const TensorPolynomial &t, const AlgebraPresentation &pres);

} // namespace ncalg
