#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncalg/catalog.hpp"
#include "ncalg/presentation_io.hpp"
#include "test_support.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace ncalg;
using ncalg::testing::Rng;

static const AlgebraPresentation &D() { return catalog(AlgebraId::D).pres; }

TEST_CASE("grammar basics") {
    CHECK(parse_polynomial("[y,x]", D()) == parse_polynomial("-1/2*x^2", D()));
    CHECK(parse_polynomial("g^-2", D()) ==
          generator_polynomial(D(), D().require_position("g"), -2));
    CHECK(parse_polynomial("1/2x^2", D()) == parse_polynomial("1/2*x^2", D()));
    // Juxtaposition is literal-then-identifier only.
    CHECK_THROWS_AS(parse_polynomial("2(x + y)", D()), ParseError);
}

TEST_CASE("negative powers respect invertibility") {
    CHECK_THROWS_AS(parse_polynomial("x^-1", D()), NegativeExponentError);
    const auto &lx = catalog(AlgebraId::D_LX).pres;
    CHECK(parse_polynomial("x^-1", lx) ==
          generator_polynomial(lx, lx.require_position("x"), -1));
}

TEST_CASE("unicode aliases") {
    CHECK(parse_polynomial("[ζ,v]", D()) == parse_polynomial("-v", D()));
    CHECK(parse_polynomial("ζ", D()) == parse_polynomial("zeta", D()));
}

TEST_CASE("distinguished identifiers") {
    const CatalogEntry &d = catalog(AlgebraId::D);
    CHECK(parse_polynomial("q*s - s*q", d.pres, &d.distinguished).is_zero());
    CHECK(parse_polynomial("z*theta - omega^2", d.pres, &d.distinguished).is_zero());
    CHECK(parse_polynomial("0", d.pres).is_zero());
}

TEST_CASE("errors carry positions") {
    try {
        parse_polynomial("x + ", D());
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse_polynomial("w + 1", D()), UnknownGeneratorError);
    CHECK_THROWS_AS(parse_polynomial("x y", D()), ParseError); // ident juxtaposition
    CHECK_THROWS_AS(parse_polynomial("(x", D()), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^z", D()), ParseError);
}

TEST_CASE("print/parse round trip (fuzz)") {
    Rng rng(51);
    for (int i = 0; i < 200; ++i) {
        NcPolynomial p = rng.polynomial(D(), 4, 5);
        std::string text = format_polynomial(p, D());
        CHECK(parse_polynomial(text, D()) == p);
    }
    CHECK(format_polynomial(NcPolynomial::zero(), D()) == "0");
}

TEST_CASE("printing is canonical") {
    NcPolynomial p = parse_polynomial("v*x", D());
    CHECK(format_polynomial(p, D()) == "x*u + x*v - g + 1");
    CHECK(format_polynomial(parse_polynomial("q*s - s*q", D(),
                                             &catalog(AlgebraId::D).distinguished),
                            D()) == "0");
}

TEST_CASE("presentation files round trip") {
    std::string text = format_presentation(D());
    std::istringstream in(text);
    AlgebraPresentation loaded = load_presentation(in);
    CHECK(loaded.name == D().name);
    REQUIRE(loaded.generator_count() == D().generator_count());
    for (int i = 0; i < D().generator_count(); ++i) {
        CHECK(loaded.generator(i).name == D().generator(i).name);
        CHECK(loaded.generator(i).invertible == D().generator(i).invertible);
    }
    CHECK(loaded.level_generators == D().level_generators);
    REQUIRE(loaded.swap_rules.size() == D().swap_rules.size());
    for (size_t i = 0; i < loaded.swap_rules.size(); ++i)
        CHECK(loaded.swap_rules[i].rhs == D().swap_rules[i].rhs);
    REQUIRE(loaded.inverse_rules.size() == D().inverse_rules.size());

    // Loaded presentations rewrite identically.
    CHECK(parse_polynomial("v*y", loaded) == parse_polynomial("v*y", D()));
}

TEST_CASE("presentation files validate on load") {
    std::istringstream in("algebra bad\ngenerator x\ngenerator y\n"
                          "levels y\nswap y x = x*y + y^2\n");
    CHECK_THROWS_AS(load_presentation(in), ValidationError);
}

TEST_CASE("presentation file on disk") {
    const std::string path = "test_jordan_presentation.txt";
    {
        std::ofstream out(path);
        out << "# the Jordan plane\n"
            << "algebra J2\n"
            << "generator x\n"
            << "generator y\n"
            << "levels y\n"
            << "swap y x = x*y - 1/2*x^2\n";
    }
    AlgebraPresentation p = load_presentation_file(path);
    CHECK(p.name == "J2");
    CHECK(parse_polynomial("y*x", p) == parse_polynomial("x*y - 1/2*x^2", p));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_presentation_file("no_such_file.txt"), Error);
}
