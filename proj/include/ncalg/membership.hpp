#pragma once

#include "ncalg/presentation.hpp"

#include <variant>

namespace ncalg {

// Right-cofactor ideal membership at bounded cofactor degree: does
// target = sum_i gens[i] * h_i have a solution with every h_i of total
// degree <= bound? Sound for normal generators, where the right ideal
// and the two-sided ideal coincide.
struct MembershipProblem {
    NcPolynomial target;
    std::vector<NcPolynomial> generators;
    std::vector<bool> generator_is_normal; // bookkeeping flag, same length
    int bound = 0;
    size_t matrix_cell_cap = 8u << 20;     // rows*cols guard
};

struct MembershipWitness {
    std::vector<NcPolynomial> cofactors;
};

struct NoWitnessAtBound {
    int bound = 0;
    size_t rank = 0;
    size_t rows = 0;
    size_t cols = 0;
};

using MembershipResult = std::variant<MembershipWitness, NoWitnessAtBound>;

// Builds the exact linear system over the PBW coefficients and solves it
// by integer-preserving elimination (deterministic pivoting, graded-lex
// column order). A returned witness has been replayed through
// normal_form. `parallel` selects the OpenMP row-update kernel.
MembershipResult solve_membership(const MembershipProblem &problem,
                                  const AlgebraPresentation &pres, bool parallel = true);

// All PBW monomials of total degree <= bound (invertible exponents count
// by absolute value), in ascending graded-lex order.
std::vector<Monomial> monomials_up_to_degree(const AlgebraPresentation &pres, int bound);

// Exact integer-preserving Gaussian elimination on an augmented sparse
// system; rows are (coefficients, rhs). Exposed for the serial/parallel
// comparison in tests and benchmarks.
struct SparseRow {
    std::map<int, Integer> cols;
    Integer rhs = 0;
};

struct EliminationResult {
    std::vector<SparseRow> rows;           // echelon form
    std::vector<std::pair<int, size_t>> pivots; // (column, row index)
    size_t rank = 0;
    bool consistent = true;
};

EliminationResult eliminate_serial(std::vector<SparseRow> rows, size_t col_count);
EliminationResult eliminate_parallel(std::vector<SparseRow> rows, size_t col_count);

// The assembled linear system of a membership problem: one column per
// (generator, cofactor monomial) pair, one row per result monomial.
struct MembershipSystem {
    std::vector<SparseRow> rows;
    std::vector<std::pair<size_t, Monomial>> columns; // (generator index, monomial)
};

MembershipSystem membership_system(const MembershipProblem &problem,
                                   const AlgebraPresentation &pres);

// Growth counting for the PBW basis of D: 6 exponents, one of them (g)
// ranging over all integers.
Integer binomial(int n, int k);
Integer growth_closed_form(int n); // C(n+6,6) + C(n+5,6)
Integer monomial_count(int n);     // enumerative definition

struct GrowthRow {
    int n = 0;
    Integer count;
    Integer expected;
};

struct GrowthTable {
    std::vector<GrowthRow> rows;
    bool matches() const {
        for (const auto &r : rows)
            if (r.count != r.expected)
                return false;
        return true;
    }
};

GrowthTable growth_table(int max_n);

struct FuzzReport {
    int samples = 0;
    int passed = 0;
    bool ok() const { return samples == passed; }
};

// total_degree(NF(ab)) <= total_degree(a) + total_degree(b) on random pairs.
FuzzReport degree_subadditivity_fuzz(int samples, uint64_t seed = 5);

} // namespace ncalg
