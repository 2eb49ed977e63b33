#include "ncalg/membership.hpp"

#include "ncalg/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <omp.h>
#include <random>

namespace ncalg {

std::vector<Monomial> monomials_up_to_degree(const AlgebraPresentation &pres, int bound) {
    std::vector<Monomial> out;
    Monomial current;
    // Depth-first over generator positions; invertible exponents range
    // over [-budget, budget].
    std::function<void(int, int)> walk = [&](int pos, int budget) {
        if (pos == pres.generator_count()) {
            out.push_back(current);
            return;
        }
        const bool inv = pres.is_invertible(pos);
        for (int e = inv ? -budget : 0; e <= budget; ++e) {
            current.set_exponent(pos, e);
            walk(pos + 1, budget - std::abs(e));
        }
        current.set_exponent(pos, 0);
    };
    walk(0, bound);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

namespace {

Integer row_content(const SparseRow &row) {
    Integer g = abs(row.rhs);
    for (const auto &[c, v] : row.cols) {
        g = gcd(g, abs(v));
        if (g == 1)
            break;
    }
    return g;
}

void normalize_row(SparseRow &row) {
    Integer g = row_content(row);
    if (g <= 1)
        return;
    for (auto &[c, v] : row.cols)
        v /= g;
    row.rhs /= g;
}

// row_i <- pivot_coeff * row_i - own_coeff * pivot_row, then content
// reduction. Exact integer arithmetic throughout.
void combine_rows(SparseRow &row, const Integer &own_coeff, const SparseRow &pivot,
                  const Integer &pivot_coeff) {
    SparseRow next;
    next.rhs = pivot_coeff * row.rhs - own_coeff * pivot.rhs;
    for (const auto &[c, v] : row.cols)
        next.cols[c] = pivot_coeff * v;
    for (const auto &[c, v] : pivot.cols) {
        auto it = next.cols.find(c);
        if (it == next.cols.end()) {
            next.cols.emplace(c, -own_coeff * v);
        } else {
            it->second -= own_coeff * v;
            if (it->second == 0)
                next.cols.erase(it);
        }
    }
    normalize_row(next);
    row = std::move(next);
}

EliminationResult eliminate_impl(std::vector<SparseRow> rows, size_t col_count, bool parallel) {
    EliminationResult res;
    std::vector<size_t> active(rows.size());
    std::iota(active.begin(), active.end(), 0);

    for (size_t col = 0; col < col_count; ++col) {
        // Deterministic pivot: first active row with a nonzero entry.
        size_t pivot_at = active.size();
        for (size_t i = 0; i < active.size(); ++i) {
            if (rows[active[i]].cols.count(static_cast<int>(col))) {
                pivot_at = i;
                break;
            }
        }
        if (pivot_at == active.size())
            continue;
        const size_t pivot_row = active[pivot_at];
        active.erase(active.begin() + static_cast<long>(pivot_at));
        res.pivots.emplace_back(static_cast<int>(col), pivot_row);

        const SparseRow &pivot = rows[pivot_row];
        const Integer pivot_coeff = pivot.cols.at(static_cast<int>(col));

        auto update = [&](size_t idx) {
            SparseRow &row = rows[idx];
            auto it = row.cols.find(static_cast<int>(col));
            if (it == row.cols.end())
                return;
            Integer own = it->second;
            combine_rows(row, own, pivot, pivot_coeff);
        };

        if (parallel && active.size() >= 64 && !omp_in_parallel()) {
#pragma omp parallel for schedule(dynamic, 16)
            for (size_t i = 0; i < active.size(); ++i)
                update(active[i]);
        } else {
            for (size_t i : active)
                update(i);
        }
    }

    res.rank = res.pivots.size();
    for (size_t i : active)
        if (rows[i].cols.empty() && rows[i].rhs != 0)
            res.consistent = false;
    res.rows = std::move(rows);
    return res;
}

} // namespace

EliminationResult eliminate_serial(std::vector<SparseRow> rows, size_t col_count) {
    return eliminate_impl(std::move(rows), col_count, false);
}

EliminationResult eliminate_parallel(std::vector<SparseRow> rows, size_t col_count) {
    return eliminate_impl(std::move(rows), col_count, true);
}

MembershipSystem membership_system(const MembershipProblem &problem,
                                   const AlgebraPresentation &pres) {
    if (problem.bound < 0)
        throw Error("membership bound must be >= 0");
    if (problem.generators.empty())
        throw Error("membership needs at least one ideal generator");

    const std::vector<Monomial> cofactor_monomials = monomials_up_to_degree(pres, problem.bound);

    // Columns: (generator index, cofactor monomial), graded-lex within
    // each degree, generator index breaking ties.
    struct Column {
        size_t gen;
        Monomial m;
        NcPolynomial product; // NF(gens[gen] * m)
    };
    std::vector<Column> columns;
    for (const Monomial &m : cofactor_monomials)
        for (size_t i = 0; i < problem.generators.size(); ++i)
            columns.push_back({i, m, NcPolynomial()});

    // Row space: result monomials.
    std::map<Monomial, size_t> row_of;
    for (auto &col : columns) {
        col.product = multiply(problem.generators[col.gen], NcPolynomial::monomial(col.m), pres);
        for (const auto &[m, c] : col.product.terms())
            row_of.emplace(m, 0);
    }
    for (const auto &[m, c] : problem.target.terms())
        row_of.emplace(m, 0);

    if (row_of.size() * columns.size() > problem.matrix_cell_cap)
        throw MatrixTooLargeError("membership matrix " + std::to_string(row_of.size()) + "x" +
                                  std::to_string(columns.size()) + " exceeds the cell cap");

    {
        // Deterministic row order: ascending graded-lex.
        std::vector<Monomial> row_monomials;
        row_monomials.reserve(row_of.size());
        for (const auto &[m, idx] : row_of)
            row_monomials.push_back(m);
        std::sort(row_monomials.begin(), row_monomials.end(), graded_lex_less);
        for (size_t i = 0; i < row_monomials.size(); ++i)
            row_of[row_monomials[i]] = i;
    }

    // Clear denominators with one global scale so every entry is integral.
    MembershipSystem sys;
    sys.rows.resize(row_of.size());
    auto lcm_of = [](const NcPolynomial &p) {
        Integer l = 1;
        for (const auto &[m, c] : p.terms())
            l = lcm(l, den(c));
        return l;
    };
    Integer scale = lcm_of(problem.target);
    for (const auto &col : columns)
        scale = lcm(scale, lcm_of(col.product));

    for (size_t j = 0; j < columns.size(); ++j)
        for (const auto &[m, c] : columns[j].product.terms()) {
            Rational v = c * Rational(scale);
            sys.rows[row_of[m]].cols[static_cast<int>(j)] = num(v);
        }
    for (const auto &[m, c] : problem.target.terms()) {
        Rational v = c * Rational(scale);
        sys.rows[row_of[m]].rhs = num(v);
    }
    sys.columns.reserve(columns.size());
    for (const auto &col : columns)
        sys.columns.emplace_back(col.gen, col.m);
    return sys;
}

MembershipResult solve_membership(const MembershipProblem &problem,
                                  const AlgebraPresentation &pres, bool parallel) {
    MembershipSystem sys = membership_system(problem, pres);
    auto columns = std::move(sys.columns);
    const size_t row_count = sys.rows.size();

    // The row updates are too fine-grained to pay off below a few
    // thousand rows; route small systems to the serial kernel.
    const bool use_parallel = parallel && row_count >= 4096;
    EliminationResult elim = eliminate_impl(std::move(sys.rows), columns.size(), use_parallel);

    if (!elim.consistent)
        return NoWitnessAtBound{problem.bound, elim.rank, row_count, columns.size()};

    // Back substitution over the rationals; free variables are zero.
    std::vector<Rational> solution(columns.size(), Rational(0));
    for (auto it = elim.pivots.rbegin(); it != elim.pivots.rend(); ++it) {
        const auto [col, row_idx] = *it;
        const SparseRow &row = elim.rows[row_idx];
        Rational acc(row.rhs);
        for (const auto &[c, v] : row.cols)
            if (c != col)
                acc -= Rational(v) * solution[static_cast<size_t>(c)];
        solution[static_cast<size_t>(col)] = acc / Rational(row.cols.at(col));
    }

    MembershipWitness witness;
    witness.cofactors.assign(problem.generators.size(), NcPolynomial());
    for (size_t j = 0; j < columns.size(); ++j)
        if (solution[j] != 0)
            witness.cofactors[columns[j].first].add_term(columns[j].second, solution[j]);

    // Replay the witness through the rewriting engine.
    NcPolynomial replay = problem.target;
    for (size_t i = 0; i < problem.generators.size(); ++i)
        replay -= multiply(problem.generators[i], witness.cofactors[i], pres);
    if (!replay.is_zero())
        throw Error("membership witness failed its replay");

    return witness;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

Integer growth_closed_form(int n) { return binomial(n + 6, 6) + binomial(n + 5, 6); }

Integer monomial_count(int n) {
    if (n < 0)
        throw Error("monomial_count wants n >= 0");
    // One integer exponent (counted by absolute value) and five
    // non-negative exponents with total at most n.
    Integer total = 0;
    std::function<Integer(int, int)> count_rest = [&](int vars, int budget) -> Integer {
        // number of vars-tuples of non-negative ints with sum <= budget
        return binomial(budget + vars, vars);
    };
    for (int a = -n; a <= n; ++a)
        total += count_rest(5, n - std::abs(a));
    return total;
}

GrowthTable growth_table(int max_n) {
    GrowthTable t;
    for (int n = 0; n <= max_n; ++n)
        t.rows.push_back({n, monomial_count(n), growth_closed_form(n)});
    return t;
}

FuzzReport degree_subadditivity_fuzz(int samples, uint64_t seed) {
    const AlgebraPresentation &pres = catalog(AlgebraId::D).pres;
    std::mt19937_64 rng(seed);
    auto random_poly = [&]() {
        std::uniform_int_distribution<int> coeff(-2, 2);
        NcPolynomial p;
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < terms; ++i) {
            Monomial m;
            int steps = static_cast<int>(rng() % 4);
            for (int s = 0; s < steps; ++s) {
                int pos = static_cast<int>(rng() % 6);
                m.add_exponent(pos, pres.is_invertible(pos) && (rng() & 1) ? -1 : 1);
            }
            int c = coeff(rng);
            p.add_term(m, Rational(c == 0 ? 1 : c));
        }
        return p;
    };
    FuzzReport report;
    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        NcPolynomial a = random_poly(), b = random_poly();
        NcPolynomial ab = multiply(a, b, pres);
        if (ab.is_zero() || total_degree(ab) <= total_degree(a) + total_degree(b))
            ++report.passed;
    }
    return report;
}

} // namespace ncalg
