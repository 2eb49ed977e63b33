#pragma once

#include "ncalg/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncalg {

struct GeneratorInfo {
    std::string name;
    int position = 0;
    bool invertible = false;
};

// One rewrite rule hi*lo -> rhs for an out-of-order generator pair
// (position of hi is greater than position of lo). The rhs must contain
// the ordered monomial lo*hi with coefficient 1; every other term must
// have strictly smaller level degree. That shape is the termination
// certificate checked by validate_presentation.
struct SwapRule {
    int hi = 0;
    int lo = 0;
    NcPolynomial rhs;
};

// mover * inverted^-1 -> rhs, for an invertible generator `inverted`
// positioned before `mover`. Validated by the round trip
// normal_form(rhs * inverted) == mover.
struct InverseSwapRule {
    int mover = 0;
    int inverted = 0;
    NcPolynomial rhs;
};

class AlgebraPresentation {
  public:
    std::string name;
    std::vector<GeneratorInfo> generators;
    std::vector<SwapRule> swap_rules;
    std::vector<InverseSwapRule> inverse_rules;
    std::vector<int> level_generators;

    int generator_count() const { return static_cast<int>(generators.size()); }

    int position_of(const std::string &gen_name) const; // -1 when absent
    int require_position(const std::string &gen_name) const;
    const GeneratorInfo &generator(int pos) const { return generators[static_cast<size_t>(pos)]; }
    bool is_invertible(int pos) const { return generators[static_cast<size_t>(pos)].invertible; }
    bool is_level_generator(int pos) const;

    const SwapRule *find_swap(int hi, int lo) const;
    const InverseSwapRule *find_inverse(int mover, int inverted) const;

    // True when the swap rule for (hi, lo) is exactly hi*lo = lo*hi; such
    // pairs commute for every combination of exponent signs.
    bool commutes_trivially(int hi, int lo) const;

    void add_generator(const std::string &gen_name, bool invertible = false);
    void add_swap_rule(const std::string &hi, const std::string &lo, NcPolynomial rhs);
    void add_inverse_rule(const std::string &mover, const std::string &inverted, NcPolynomial rhs);
    void set_level_generators(const std::vector<std::string> &names);
};

// A word is a scalar times a product of generator powers, in the order
// written. Words are the raw (unreduced) input of the rewriting engine.
struct WordFactor {
    int generator = 0;
    int exponent = 0;
    auto operator<=>(const WordFactor &) const = default;
};

struct Word {
    Rational coefficient{1};
    std::vector<WordFactor> factors;
};

using WordSum = std::vector<Word>;

Word word_of_monomial(const Monomial &m, const AlgebraPresentation &pres,
                      const Rational &coefficient = Rational(1));
WordSum words_of_polynomial(const NcPolynomial &p, const AlgebraPresentation &pres);

// Converts a word sum whose words are already normal-ordered into a
// polynomial without invoking the rewriting engine. Fails on unordered
// input; used for rule right-hand sides.
NcPolynomial polynomial_of_ordered_words(const WordSum &words, const AlgebraPresentation &pres);

size_t default_step_budget(); // NCVERIFY_STEP_BUDGET or 10^6

/// Reduces a word sum onto the PBW basis of `pres`. Rewrites the leftmost
/// out-of-order adjacent pair first; every elementary rule application
/// consumes one unit of the step budget.
NcPolynomial normal_form(const WordSum &words, const AlgebraPresentation &pres,
                         size_t step_budget = 0);
NcPolynomial normal_form(const Word &word, const AlgebraPresentation &pres,
                         size_t step_budget = 0);

// Product of two normal-form polynomials, renormalized. `multiply` picks
// the OpenMP kernel for large term counts and falls back to the serial
// reference otherwise; both produce identical results.
NcPolynomial multiply(const NcPolynomial &a, const NcPolynomial &b,
                      const AlgebraPresentation &pres);
NcPolynomial multiply_serial(const NcPolynomial &a, const NcPolynomial &b,
                             const AlgebraPresentation &pres);
NcPolynomial multiply_parallel(const NcPolynomial &a, const NcPolynomial &b,
                               const AlgebraPresentation &pres);

NcPolynomial commutator(const NcPolynomial &a, const NcPolynomial &b,
                        const AlgebraPresentation &pres);
NcPolynomial power(const NcPolynomial &a, int n, const AlgebraPresentation &pres);

// Generator position -> polynomial helpers.
NcPolynomial generator_polynomial(const AlgebraPresentation &pres, int pos, int exponent = 1);

// Max over terms of the total exponent of the level generators.
int level_degree(const NcPolynomial &p, const AlgebraPresentation &pres);
int level_degree(const Monomial &m, const AlgebraPresentation &pres);

// Total degree of the filtration: every exponent counts by absolute value.
int total_degree(const NcPolynomial &p);
int total_degree(const Monomial &m);

struct ValidationIssue {
    std::string what;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool passed() const { return issues.empty(); }
};

// Checks (a) the termination certificate of every swap rule, (b) the
// round trip of every inverse rule, (c) t * t^-1 = t^-1 * t = 1 for every
// invertible generator, (d) rule coverage of all out-of-order pairs.
ValidationReport validate_presentation(const AlgebraPresentation &pres);

// Graded-lex order used for printing and for deterministic column
// layouts: compares total degree first, ties broken by the exponent
// vector. sorted_terms lists the highest term first.
bool graded_lex_less(const Monomial &a, const Monomial &b);
std::vector<std::pair<Monomial, Rational>> sorted_terms(const NcPolynomial &p);

} // namespace ncalg
