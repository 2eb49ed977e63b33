#pragma once

#include "ncalg/presentation.hpp"

#include <map>
#include <string>

namespace ncalg {

// Expression AST for the check grammar:
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*        (implicit '*' only after a literal)
//   factor := atom ('^' int)?
//   atom   := rational | ident | '(' expr ')' | '[' expr ',' expr ']'
// Unicode ζ/ω/θ are accepted as aliases of zeta/omega/theta on input.
struct Expr {
    enum class Kind { Literal, Ident, Sum, Prod, Power, Bracket, Negate };
    Kind kind = Kind::Literal;
    Rational literal{0};
    std::string ident;
    std::vector<Expr> children;
    std::vector<int> signs; // Sum only: +1 / -1 per child
    int exponent = 1;       // Power only
    size_t pos = 0;         // byte offset in the source text
};

Expr parse_expression(const std::string &text);

using DistinguishedTable = std::map<std::string, NcPolynomial>;

// Syntactic elaboration: distributes products and brackets into a word
// sum without rewriting. Identifiers resolve to generators first, then to
// distinguished elements of the table (already in normal form).
WordSum elaborate_words(const Expr &e, const AlgebraPresentation &pres,
                        const DistinguishedTable *distinguished = nullptr);

// parse + elaborate + normal_form.
NcPolynomial parse_polynomial(const std::string &text, const AlgebraPresentation &pres,
                              const DistinguishedTable *distinguished = nullptr);

// Canonical printing: terms in descending graded-lex order, explicit '*',
// '^' only for exponents other than 1, coefficients as p/q.
std::string format_monomial(const Monomial &m, const AlgebraPresentation &pres);
std::string format_polynomial(const NcPolynomial &p, const AlgebraPresentation &pres);

} // namespace ncalg
