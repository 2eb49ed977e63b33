#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncalg/catalog.hpp"
#include "ncalg/membership.hpp"

#include <cmath>
#include <random>
using namespace ncalg;

static const CatalogEntry &D() { return catalog(AlgebraId::D); }

// Independent oracle for the growth count: six explicit loops.
static long brute_force_count(int n) {
    long cnt = 0;
    for (int a = -n; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            for (int c = 0; c <= n; ++c)
                for (int d = 0; d <= n; ++d)
                    for (int e = 0; e <= n; ++e)
                        for (int f = 0; f <= n; ++f)
                            if (std::abs(a) + b + c + d + e + f <= n)
                                ++cnt;
    return cnt;
}

static bool has_witness(const MembershipResult &r) {
    return std::holds_alternative<MembershipWitness>(r);
}

TEST_CASE("q^2 lies in the centre ideal at bound 2") {
    const auto &el = D().elements;
    MembershipProblem p;
    p.target = multiply(el.q, el.q, D().pres);
    p.generators = {el.z, el.omega, el.theta};
    p.generator_is_normal = {true, true, true};
    p.bound = 2;
    MembershipResult r = solve_membership(p, D().pres);
    REQUIRE(has_witness(r));
    // q^2 = z*g is one exact witness; whatever the solver picked has been
    // replayed inside solve_membership already.
    for (const auto &h : std::get<MembershipWitness>(r).cofactors)
        if (!h.is_zero())
            CHECK(total_degree(h) <= 2);
}

TEST_CASE("m0 D = P0^2 in both directions at bound 2") {
    const auto &el = D().elements;
    const auto &pres = D().pres;
    NcPolynomial q2 = multiply(el.q, el.q, pres);
    NcPolynomial qs = multiply(el.q, el.s, pres);
    NcPolynomial sq = multiply(el.s, el.q, pres);
    NcPolynomial s2 = multiply(el.s, el.s, pres);

    std::vector<NcPolynomial> squares = {q2, qs, sq, s2};
    for (const auto &target : el.m0_gens) {
        MembershipProblem p;
        p.target = target;
        p.generators = squares;
        p.generator_is_normal = {true, true, true, true};
        p.bound = 2;
        CHECK(has_witness(solve_membership(p, pres)));
    }
    for (const auto &target : squares) {
        MembershipProblem p;
        p.target = target;
        p.generators = {el.z, el.omega, el.theta};
        p.generator_is_normal = {true, true, true};
        p.bound = 2;
        CHECK(has_witness(solve_membership(p, pres)));
    }
}

TEST_CASE("height-one centre ideals land in P0 at the right bounds") {
    const auto &el = D().elements;
    const auto &pres = D().pres;
    auto member_p0 = [&](const NcPolynomial &target, int bound) {
        MembershipProblem p;
        p.target = target;
        p.generators = {el.q, el.s};
        p.generator_is_normal = {true, true};
        p.bound = bound;
        return solve_membership(p, pres);
    };

    CHECK(has_witness(member_p0(el.z, 3)));
    CHECK(has_witness(member_p0(el.omega, 3)));
    CHECK(has_witness(member_p0(el.theta, 4)));

    // At bound 2 the cofactors cannot exist (degree obstruction).
    CHECK_FALSE(has_witness(member_p0(el.z, 2)));
}

TEST_CASE("negative membership evidence is deterministic") {
    const auto &el = D().elements;
    const auto &pres = D().pres;

    MembershipProblem s_in_q;
    s_in_q.target = el.s;
    s_in_q.generators = {el.q};
    s_in_q.generator_is_normal = {true};
    s_in_q.bound = 4;

    MembershipResult r1 = solve_membership(s_in_q, pres, true);
    MembershipResult r2 = solve_membership(s_in_q, pres, false);
    REQUIRE_FALSE(has_witness(r1));
    REQUIRE_FALSE(has_witness(r2));
    auto n1 = std::get<NoWitnessAtBound>(r1), n2 = std::get<NoWitnessAtBound>(r2);
    CHECK(n1.rank == n2.rank);
    CHECK(n1.rows == n2.rows);
    CHECK(n1.cols == n2.cols);

    MembershipProblem one_in_p0;
    one_in_p0.target = NcPolynomial::one();
    one_in_p0.generators = {el.q, el.s};
    one_in_p0.generator_is_normal = {true, true};
    one_in_p0.bound = 4;
    MembershipResult r3 = solve_membership(one_in_p0, pres);
    REQUIRE_FALSE(has_witness(r3));
    CHECK(std::get<NoWitnessAtBound>(r3).rank > 0);
}

TEST_CASE("matrix cap") {
    MembershipProblem p;
    p.target = NcPolynomial::one();
    p.generators = {D().elements.q};
    p.generator_is_normal = {true};
    p.bound = 4;
    p.matrix_cell_cap = 10;
    CHECK_THROWS_AS(solve_membership(p, D().pres), MatrixTooLargeError);
}

TEST_CASE("serial and parallel elimination agree") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<SparseRow> rows(40);
        for (auto &row : rows) {
            for (int k = 0; k < 6; ++k) {
                int col = static_cast<int>(rng() % 30);
                long v = static_cast<long>(rng() % 7) - 3;
                if (v)
                    row.cols[col] = v;
            }
            row.rhs = static_cast<long>(rng() % 5) - 2;
        }
        EliminationResult a = eliminate_serial(rows, 30);
        EliminationResult b = eliminate_parallel(rows, 30);
        CHECK(a.rank == b.rank);
        CHECK(a.consistent == b.consistent);
        CHECK(a.pivots == b.pivots);
        for (size_t i = 0; i < rows.size(); ++i) {
            CHECK(a.rows[i].cols == b.rows[i].cols);
            CHECK(a.rows[i].rhs == b.rows[i].rhs);
        }
    }
}

TEST_CASE("elimination kernels agree on a real membership system") {
    const auto &el = D().elements;
    MembershipProblem p;
    p.target = NcPolynomial::one();
    p.generators = {el.q, el.s};
    p.generator_is_normal = {true, true};
    p.bound = 3;
    MembershipSystem sys = membership_system(p, D().pres);
    EliminationResult a = eliminate_serial(sys.rows, sys.columns.size());
    EliminationResult b = eliminate_parallel(sys.rows, sys.columns.size());
    CHECK(a.rank == b.rank);
    CHECK(a.consistent == b.consistent);
    CHECK(a.pivots == b.pivots);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].cols == b.rows[i].cols);
        CHECK(a.rows[i].rhs == b.rows[i].rhs);
    }
}

TEST_CASE("growth counts") {
    CHECK(monomial_count(0) == 1);
    CHECK(monomial_count(1) == 8);
    CHECK(monomial_count(2) == 35);

    GrowthTable t = growth_table(12);
    CHECK(t.rows.size() == 13);
    CHECK(t.matches());

    for (int n = 0; n <= 6; ++n)
        CHECK(monomial_count(n) == brute_force_count(n));

    // The local log-slope climbs toward 6.
    auto slope = [](int n) {
        double c2 = static_cast<double>(growth_closed_form(2 * n).convert_to<double>());
        double c1 = static_cast<double>(growth_closed_form(n).convert_to<double>());
        return std::log2(c2 / c1);
    };
    double prev = 0;
    for (int n : {3, 6, 12, 24, 48}) {
        double s = slope(n);
        CHECK(s > prev);
        CHECK(s < 6.0);
        prev = s;
    }
    CHECK(slope(48) > 5.5);
}

TEST_CASE("degree subadditivity fuzz") {
    FuzzReport r = degree_subadditivity_fuzz(100);
    CHECK(r.ok());
    CHECK(r.samples == 100);
}
