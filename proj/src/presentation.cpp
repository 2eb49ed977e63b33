#include "ncalg/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <omp.h>
#include <sstream>

namespace ncalg {

std::string to_string(const Rational &r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

int AlgebraPresentation::position_of(const std::string &gen_name) const {
    for (const auto &g : generators)
        if (g.name == gen_name)
            return g.position;
    return -1;
}

int AlgebraPresentation::require_position(const std::string &gen_name) const {
    int pos = position_of(gen_name);
    if (pos < 0)
        throw UnknownGeneratorError("unknown generator '" + gen_name + "' in algebra " + name);
    return pos;
}

bool AlgebraPresentation::is_level_generator(int pos) const {
    return std::find(level_generators.begin(), level_generators.end(), pos) !=
           level_generators.end();
}

const SwapRule *AlgebraPresentation::find_swap(int hi, int lo) const {
    for (const auto &r : swap_rules)
        if (r.hi == hi && r.lo == lo)
            return &r;
    return nullptr;
}

const InverseSwapRule *AlgebraPresentation::find_inverse(int mover, int inverted) const {
    for (const auto &r : inverse_rules)
        if (r.mover == mover && r.inverted == inverted)
            return &r;
    return nullptr;
}

bool AlgebraPresentation::commutes_trivially(int hi, int lo) const {
    const SwapRule *rule = find_swap(hi, lo);
    if (!rule || rule->rhs.term_count() != 1)
        return false;
    Monomial expect;
    expect.set_exponent(lo, 1);
    expect.add_exponent(hi, 1);
    return rule->rhs.coefficient(expect) == 1;
}

void AlgebraPresentation::add_generator(const std::string &gen_name, bool invertible) {
    if (generator_count() >= Monomial::max_generators)
        throw Error("generator count exceeds " + std::to_string(Monomial::max_generators));
    if (position_of(gen_name) >= 0)
        throw Error("duplicate generator '" + gen_name + "'");
    generators.push_back({gen_name, generator_count(), invertible});
}

void AlgebraPresentation::add_swap_rule(const std::string &hi, const std::string &lo,
                                        NcPolynomial rhs) {
    int hp = require_position(hi), lp = require_position(lo);
    if (hp <= lp)
        throw Error("swap rule must have hi after lo: " + hi + "," + lo);
    swap_rules.push_back({hp, lp, std::move(rhs)});
}

void AlgebraPresentation::add_inverse_rule(const std::string &mover, const std::string &inverted,
                                           NcPolynomial rhs) {
    int mp = require_position(mover), ip = require_position(inverted);
    if (!is_invertible(ip))
        throw Error("inverse rule target '" + inverted + "' is not invertible");
    inverse_rules.push_back({mp, ip, std::move(rhs)});
}

void AlgebraPresentation::set_level_generators(const std::vector<std::string> &names) {
    level_generators.clear();
    for (const auto &n : names)
        level_generators.push_back(require_position(n));
}

Word word_of_monomial(const Monomial &m, const AlgebraPresentation &pres,
                      const Rational &coefficient) {
    Word w;
    w.coefficient = coefficient;
    for (int i = 0; i < pres.generator_count(); ++i)
        if (m.exponent(i) != 0)
            w.factors.push_back({i, m.exponent(i)});
    return w;
}

WordSum words_of_polynomial(const NcPolynomial &p, const AlgebraPresentation &pres) {
    WordSum ws;
    ws.reserve(p.term_count());
    for (const auto &[m, c] : p.terms())
        ws.push_back(word_of_monomial(m, pres, c));
    return ws;
}

NcPolynomial polynomial_of_ordered_words(const WordSum &words, const AlgebraPresentation &pres) {
    NcPolynomial p;
    for (const Word &w : words) {
        Monomial m;
        int prev = -1;
        for (const WordFactor &f : w.factors) {
            if (f.generator < prev)
                throw Error("word is not normal-ordered in " + pres.name);
            if (f.exponent < 0 && !pres.is_invertible(f.generator))
                throw NegativeExponentError("negative exponent on non-invertible generator '" +
                                            pres.generator(f.generator).name + "'");
            m.add_exponent(f.generator, f.exponent);
            prev = f.generator;
        }
        p.add_term(m, w.coefficient);
    }
    return p;
}

size_t default_step_budget() {
    static const size_t budget = [] {
        if (const char *env = std::getenv("NCVERIFY_STEP_BUDGET")) {
            long long v = std::atoll(env);
            if (v > 0)
                return static_cast<size_t>(v);
        }
        return static_cast<size_t>(1000000);
    }();
    return budget;
}

namespace {

void merge_adjacent(std::vector<WordFactor> &fs) {
    size_t out = 0;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].exponent == 0)
            continue;
        if (out > 0 && fs[out - 1].generator == fs[i].generator) {
            fs[out - 1].exponent += fs[i].exponent;
            if (fs[out - 1].exponent == 0)
                --out;
        } else {
            fs[out++] = fs[i];
        }
    }
    fs.resize(out);
}

// Index of the leftmost adjacent inversion, or -1 when normal-ordered.
int leftmost_inversion(const std::vector<WordFactor> &fs) {
    for (size_t i = 0; i + 1 < fs.size(); ++i)
        if (fs[i].generator > fs[i + 1].generator)
            return static_cast<int>(i);
    return -1;
}

void validate_word(const Word &w, const AlgebraPresentation &pres) {
    for (const WordFactor &f : w.factors) {
        if (f.generator < 0 || f.generator >= pres.generator_count())
            throw UnknownGeneratorError("word uses generator index out of range");
        if (f.exponent < 0 && !pres.is_invertible(f.generator))
            throw NegativeExponentError("negative exponent on non-invertible generator '" +
                                        pres.generator(f.generator).name + "'");
    }
}

} // namespace

NcPolynomial normal_form(const WordSum &words, const AlgebraPresentation &pres,
                         size_t step_budget) {
    if (step_budget == 0)
        step_budget = default_step_budget();

    // Pending words are keyed by their factor sequence so that branches
    // reaching the same intermediate word merge coefficients instead of
    // multiplying the workload.
    std::map<std::vector<WordFactor>, Rational> work;
    auto enqueue = [&work](std::vector<WordFactor> fs, Rational coeff) {
        merge_adjacent(fs);
        auto it = work.find(fs);
        if (it == work.end()) {
            work.emplace(std::move(fs), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0)
                work.erase(it);
        }
    };

    for (const Word &w : words) {
        validate_word(w, pres);
        if (w.coefficient != 0)
            enqueue(w.factors, w.coefficient);
    }

    NcPolynomial result;
    size_t steps = 0;

    while (!work.empty()) {
        auto node = work.extract(std::prev(work.end()));
        const std::vector<WordFactor> &factors = node.key();
        const Rational &coefficient = node.mapped();

        int i = leftmost_inversion(factors);
        if (i < 0) {
            Monomial m;
            for (const WordFactor &f : factors)
                m.set_exponent(f.generator, f.exponent);
            result.add_term(m, coefficient);
            continue;
        }

        if (++steps > step_budget)
            throw NonTerminatingError("rewrite step budget exhausted in " + pres.name +
                                      " (budget " + std::to_string(step_budget) + ")");

        const WordFactor left = factors[static_cast<size_t>(i)];
        const WordFactor right = factors[static_cast<size_t>(i + 1)];
        const int hi = left.generator, lo = right.generator;

        // Whole-power swap for trivially commuting pairs; this is also the
        // only supported move when the left factor carries a negative
        // exponent (the catalog never pairs a non-commuting invertible
        // generator to the left of a lower one).
        if (pres.commutes_trivially(hi, lo)) {
            std::vector<WordFactor> swapped = factors;
            std::swap(swapped[static_cast<size_t>(i)], swapped[static_cast<size_t>(i + 1)]);
            enqueue(std::move(swapped), coefficient);
            continue;
        }
        if (left.exponent < 0)
            throw Error("no rule to move " + pres.generator(hi).name +
                        "^-1 past " + pres.generator(lo).name + " in " + pres.name);

        const NcPolynomial *rhs = nullptr;
        int left_rest = left.exponent - 1;
        int right_rest;
        if (right.exponent > 0) {
            const SwapRule *rule = pres.find_swap(hi, lo);
            if (!rule)
                throw Error("missing swap rule " + pres.generator(hi).name + "*" +
                            pres.generator(lo).name + " in " + pres.name);
            rhs = &rule->rhs;
            right_rest = right.exponent - 1;
        } else {
            const InverseSwapRule *rule = pres.find_inverse(hi, lo);
            if (!rule)
                throw Error("missing inverse rule " + pres.generator(hi).name + "*" +
                            pres.generator(lo).name + "^-1 in " + pres.name);
            rhs = &rule->rhs;
            right_rest = right.exponent + 1;
        }

        for (const auto &[m, c] : rhs->terms()) {
            std::vector<WordFactor> fs;
            fs.assign(factors.begin(), factors.begin() + i);
            if (left_rest != 0)
                fs.push_back({hi, left_rest});
            for (int gpos = 0; gpos < pres.generator_count(); ++gpos)
                if (m.exponent(gpos) != 0)
                    fs.push_back({gpos, m.exponent(gpos)});
            if (right_rest != 0)
                fs.push_back({lo, right_rest});
            fs.insert(fs.end(), factors.begin() + i + 2, factors.end());
            enqueue(std::move(fs), coefficient * c);
        }
    }
    return result;
}

NcPolynomial normal_form(const Word &word, const AlgebraPresentation &pres, size_t step_budget) {
    return normal_form(WordSum{word}, pres, step_budget);
}

NcPolynomial generator_polynomial(const AlgebraPresentation &pres, int pos, int exponent) {
    if (exponent < 0 && !pres.is_invertible(pos))
        throw NegativeExponentError("negative exponent on non-invertible generator '" +
                                    pres.generator(pos).name + "'");
    Monomial m;
    m.set_exponent(pos, exponent);
    return NcPolynomial::monomial(m);
}

namespace {

NcPolynomial multiply_range(const std::vector<std::pair<Monomial, Rational>> &a_terms,
                            size_t begin, size_t end, const NcPolynomial &b,
                            const AlgebraPresentation &pres) {
    NcPolynomial acc;
    WordSum ws;
    for (size_t i = begin; i < end; ++i) {
        const auto &[ma, ca] = a_terms[i];
        for (const auto &[mb, cb] : b.terms()) {
            Word w = word_of_monomial(ma, pres, ca * cb);
            Word wb = word_of_monomial(mb, pres);
            w.factors.insert(w.factors.end(), wb.factors.begin(), wb.factors.end());
            ws.push_back(std::move(w));
        }
    }
    return normal_form(ws, pres);
}

} // namespace

NcPolynomial multiply_serial(const NcPolynomial &a, const NcPolynomial &b,
                             const AlgebraPresentation &pres) {
    std::vector<std::pair<Monomial, Rational>> a_terms(a.terms().begin(), a.terms().end());
    return multiply_range(a_terms, 0, a_terms.size(), b, pres);
}

NcPolynomial multiply_parallel(const NcPolynomial &a, const NcPolynomial &b,
                               const AlgebraPresentation &pres) {
    std::vector<std::pair<Monomial, Rational>> a_terms(a.terms().begin(), a.terms().end());
    const int threads = omp_get_max_threads();
    std::vector<NcPolynomial> partial(static_cast<size_t>(threads));
    std::exception_ptr eptr;

#pragma omp parallel num_threads(threads)
    {
        const int t = omp_get_thread_num();
        const size_t n = a_terms.size();
        const size_t chunk = (n + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
        const size_t begin = std::min(n, static_cast<size_t>(t) * chunk);
        const size_t end = std::min(n, begin + chunk);
        try {
            partial[static_cast<size_t>(t)] = multiply_range(a_terms, begin, end, b, pres);
        } catch (...) {
#pragma omp critical
            if (!eptr)
                eptr = std::current_exception();
        }
    }
    if (eptr)
        std::rethrow_exception(eptr);

    NcPolynomial result;
    for (const NcPolynomial &p : partial)
        result += p;
    return result;
}

NcPolynomial multiply(const NcPolynomial &a, const NcPolynomial &b,
                      const AlgebraPresentation &pres) {
    const size_t pairs = a.term_count() * b.term_count();
    if (pairs < 64 || omp_in_parallel() || omp_get_max_threads() < 2)
        return multiply_serial(a, b, pres);
    return multiply_parallel(a, b, pres);
}

NcPolynomial commutator(const NcPolynomial &a, const NcPolynomial &b,
                        const AlgebraPresentation &pres) {
    return multiply(a, b, pres) - multiply(b, a, pres);
}

NcPolynomial power(const NcPolynomial &a, int n, const AlgebraPresentation &pres) {
    if (n < 0)
        throw Error("power() needs a non-negative exponent");
    NcPolynomial r = NcPolynomial::one();
    for (int i = 0; i < n; ++i)
        r = multiply(r, a, pres);
    return r;
}

int level_degree(const Monomial &m, const AlgebraPresentation &pres) {
    int d = 0;
    for (int pos : pres.level_generators)
        d += m.exponent(pos);
    return d;
}

int level_degree(const NcPolynomial &p, const AlgebraPresentation &pres) {
    if (p.is_zero())
        throw ZeroPolynomialError("level_degree of the zero polynomial");
    int d = 0;
    for (const auto &[m, c] : p.terms())
        d = std::max(d, level_degree(m, pres));
    return d;
}

int total_degree(const Monomial &m) {
    int d = 0;
    for (int i = 0; i < Monomial::max_generators; ++i)
        d += std::abs(m.exponent(i));
    return d;
}

int total_degree(const NcPolynomial &p) {
    if (p.is_zero())
        throw ZeroPolynomialError("total_degree of the zero polynomial");
    int d = 0;
    for (const auto &[m, c] : p.terms())
        d = std::max(d, total_degree(m));
    return d;
}

ValidationReport validate_presentation(const AlgebraPresentation &pres) {
    ValidationReport report;
    auto fail = [&](const std::string &what) { report.issues.push_back({what}); };

    // Rule coverage: exactly one swap rule per out-of-order pair.
    for (int lo = 0; lo < pres.generator_count(); ++lo) {
        for (int hi = lo + 1; hi < pres.generator_count(); ++hi) {
            int count = 0;
            for (const auto &r : pres.swap_rules)
                if (r.hi == hi && r.lo == lo)
                    ++count;
            if (count != 1)
                fail("pair (" + pres.generator(hi).name + "," + pres.generator(lo).name +
                     ") has " + std::to_string(count) + " swap rules");
        }
    }

    // Termination certificate per swap rule.
    for (const auto &r : pres.swap_rules) {
        Monomial lead;
        lead.set_exponent(r.lo, 1);
        lead.add_exponent(r.hi, 1);
        if (r.rhs.coefficient(lead) != 1) {
            fail("rule " + pres.generator(r.hi).name + "*" + pres.generator(r.lo).name +
                 " lacks the ordered leading monomial with coefficient 1");
            continue;
        }
        const int lead_level = level_degree(lead, pres);
        for (const auto &[m, c] : r.rhs.terms()) {
            if (m == lead)
                continue;
            if (level_degree(m, pres) >= lead_level)
                fail("rule " + pres.generator(r.hi).name + "*" + pres.generator(r.lo).name +
                     " has a remainder term of level degree >= " + std::to_string(lead_level));
        }
    }

    // Inverse rules round-trip: NF(rhs * inverted) == mover.
    for (const auto &r : pres.inverse_rules) {
        try {
            WordSum ws;
            for (const auto &[m, c] : r.rhs.terms()) {
                Word w = word_of_monomial(m, pres, c);
                w.factors.push_back({r.inverted, 1});
                ws.push_back(std::move(w));
            }
            NcPolynomial round = normal_form(ws, pres);
            if (round != generator_polynomial(pres, r.mover))
                fail("inverse rule " + pres.generator(r.mover).name + "*" +
                     pres.generator(r.inverted).name + "^-1 fails its round trip");
        } catch (const Error &e) {
            fail(std::string("inverse rule round trip raised: ") + e.what());
        }
    }

    // t * t^-1 = t^-1 * t = 1 for invertible t.
    for (const auto &g : pres.generators) {
        if (!g.invertible)
            continue;
        Word w1{Rational(1), {{g.position, 1}, {g.position, -1}}};
        Word w2{Rational(1), {{g.position, -1}, {g.position, 1}}};
        if (normal_form(w1, pres) != NcPolynomial::one() ||
            normal_form(w2, pres) != NcPolynomial::one())
            fail("generator " + g.name + " does not cancel against its inverse");
    }

    return report;
}

bool graded_lex_less(const Monomial &a, const Monomial &b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const NcPolynomial &p) {
    std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(),
              [](const auto &x, const auto &y) { return graded_lex_less(y.first, x.first); });
    return ts;
}

} // namespace ncalg
