#include "ncalg/catalog.hpp"
#include "ncalg/checks.hpp"
#include "ncalg/membership.hpp"
#include "ncalg/presentation_io.hpp"
#include "ncalg/tower.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

using namespace ncalg;

namespace {

int exit_code_for(const std::vector<CheckReport> &reports) {
    return any_failure(reports) ? 1 : 0;
}

void emit_reports(const std::vector<CheckReport> &reports, const std::string &json_path) {
    std::cout << reports_to_text(reports);
    int pass = 0, fail = 0, report = 0;
    for (const auto &r : reports) {
        if (r.status == CheckStatus::Pass) ++pass;
        else if (r.status == CheckStatus::Fail) ++fail;
        else ++report;
    }
    std::cout << reports.size() << " checks: " << pass << " pass, " << fail << " fail, "
              << report << " report\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out)
            throw Error("cannot write '" + json_path + "'");
        out << reports_to_json(reports) << "\n";
    }
}

// Tower expression elaboration for `nf --algebra T/Stilde/Ttilde`.
TowerElement elaborate_tower(const Expr &e, const TowerAlgebra &alg) {
    switch (e.kind) {
    case Expr::Kind::Literal:
        return TowerElement::constant(e.literal);
    case Expr::Kind::Ident: {
        if (e.ident == "u")
            return TowerElement::of(CommBase::of(UxPoly::monomial(1, 0)));
        if (e.ident == "x")
            return TowerElement::of(CommBase::of(UxPoly::monomial(0, 1)));
        if (e.ident == "y")
            return TowerElement::variable_y();
        if (e.ident == alg.top_name)
            return TowerElement::variable_top();
        if (e.ident == "h" && alg.base_has_h)
            return TowerElement::of(CommBase::h());
        throw UnknownGeneratorError("unknown identifier '" + e.ident + "' in tower " +
                                    alg.name);
    }
    case Expr::Kind::Negate:
        return -elaborate_tower(e.children[0], alg);
    case Expr::Kind::Sum: {
        TowerElement acc;
        for (size_t i = 0; i < e.children.size(); ++i) {
            TowerElement part = elaborate_tower(e.children[i], alg);
            acc = e.signs[i] < 0 ? acc - part : acc + part;
        }
        return acc;
    }
    case Expr::Kind::Prod: {
        TowerElement acc = TowerElement::constant(1);
        for (const Expr &c : e.children)
            acc = alg.multiply(acc, elaborate_tower(c, alg));
        return acc;
    }
    case Expr::Kind::Bracket: {
        TowerElement a = elaborate_tower(e.children[0], alg);
        TowerElement b = elaborate_tower(e.children[1], alg);
        return alg.commutator(a, b);
    }
    case Expr::Kind::Power: {
        TowerElement base = elaborate_tower(e.children[0], alg);
        if (e.exponent >= 0)
            return alg.pow(base, e.exponent);
        if (base.terms().size() == 1 && base.terms().begin()->first == TowerElement::Key{0, 0}) {
            auto inv = base.terms().begin()->second.try_invert();
            if (inv)
                return alg.pow(TowerElement::of(*inv), -e.exponent);
        }
        throw NegativeExponentError("negative power of a non-unit tower element");
    }
    }
    throw Error("unreachable expression kind");
}

const TowerAlgebra *tower_by_name(const std::string &name) {
    if (name == "T")
        return &tower_T();
    if (name == "Stilde")
        return &tower_Stilde();
    if (name == "Ttilde")
        return &tower_Ttilde();
    return nullptr;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"ncverify — exact verification of the Drinfeld double of the Jordan plane"};
    app.require_subcommand(1);

    std::string json_path;
    int jobs = 0;

    auto *cmd_all = app.add_subcommand("all", "run every registered check");
    cmd_all->add_option("--json", json_path, "write the JSON report to FILE");
    cmd_all->add_option("--jobs", jobs, "max concurrent checks");

    std::string pattern = "all";
    auto *cmd_check = app.add_subcommand("check", "run checks matching a glob");
    cmd_check->add_option("pattern", pattern, "check id glob, e.g. 'weyl-*'")->required();
    cmd_check->add_option("--json", json_path, "write the JSON report to FILE");
    cmd_check->add_option("--jobs", jobs, "max concurrent checks");

    std::string algebra = "D", expr_text, pres_file;
    auto *cmd_nf = app.add_subcommand("nf", "normal form of an expression");
    cmd_nf->add_option("--algebra", algebra, "catalog id (J, OG, H, D, D_LX, D_LU, SL2) "
                                             "or tower (T, Stilde, Ttilde)");
    cmd_nf->add_option("--presentation", pres_file, "presentation file instead of a catalog id");
    cmd_nf->add_option("expr", expr_text, "expression in the check grammar")->required();

    std::string ideal_csv, target_text;
    int bound = 2;
    auto *cmd_member = app.add_subcommand("member", "bounded-degree ideal membership");
    cmd_member->add_option("--algebra", algebra, "catalog id (default D)");
    cmd_member->add_option("--ideal", ideal_csv, "comma-separated generators")->required();
    cmd_member->add_option("--target", target_text, "target expression")->required();
    cmd_member->add_option("--bound", bound, "cofactor degree bound");
    cmd_member->add_option("--json", json_path, "write a JSON row to FILE");

    int max_n = 12;
    auto *cmd_growth = app.add_subcommand("growth", "PBW monomial growth table");
    cmd_growth->add_option("--max", max_n, "largest n");
    cmd_growth->add_option("--json", json_path, "write the table to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_all->parsed()) {
            auto reports = run_checks("all", jobs);
            emit_reports(reports, json_path);
            return exit_code_for(reports);
        }

        if (cmd_check->parsed()) {
            if (matching_check_ids(pattern).empty()) {
                std::cerr << "no check matches '" << pattern << "'\n";
                return 2;
            }
            auto reports = run_checks(pattern, jobs);
            emit_reports(reports, json_path);
            return exit_code_for(reports);
        }

        if (cmd_nf->parsed()) {
            if (!pres_file.empty()) {
                AlgebraPresentation pres = load_presentation_file(pres_file);
                std::cout << format_polynomial(parse_polynomial(expr_text, pres), pres) << "\n";
                return 0;
            }
            if (const TowerAlgebra *tower = tower_by_name(algebra)) {
                TowerElement e = elaborate_tower(parse_expression(expr_text), *tower);
                std::cout << e.str(tower->top_name) << "\n";
                return 0;
            }
            const CatalogEntry *entry = catalog_by_name(algebra);
            if (!entry) {
                std::cerr << "unknown algebra '" << algebra << "'\n";
                return 2;
            }
            NcPolynomial p = parse_polynomial(expr_text, entry->pres, &entry->distinguished);
            std::cout << format_polynomial(p, entry->pres) << "\n";
            return 0;
        }

        if (cmd_member->parsed()) {
            const CatalogEntry *entry = catalog_by_name(algebra);
            if (!entry) {
                std::cerr << "unknown algebra '" << algebra << "'\n";
                return 2;
            }
            MembershipProblem problem;
            problem.bound = bound;
            problem.target = parse_polynomial(target_text, entry->pres, &entry->distinguished);
            std::stringstream ss(ideal_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) {
                    problem.generators.push_back(
                        parse_polynomial(item, entry->pres, &entry->distinguished));
                    problem.generator_is_normal.push_back(true);
                }
            MembershipResult result = solve_membership(problem, entry->pres);

            nlohmann::ordered_json row;
            row["algebra"] = entry->id_name;
            row["target"] = target_text;
            row["bound"] = bound;
            if (const auto *w = std::get_if<MembershipWitness>(&result)) {
                std::cout << "witness found:\n";
                row["status"] = "witness";
                auto cof = nlohmann::ordered_json::array();
                for (size_t i = 0; i < w->cofactors.size(); ++i) {
                    std::string text = format_polynomial(w->cofactors[i], entry->pres);
                    std::cout << "  h" << i + 1 << " = " << text << "\n";
                    cof.push_back(text);
                }
                row["cofactors"] = cof;
            } else {
                const auto &n = std::get<NoWitnessAtBound>(result);
                std::cout << "NoWitnessAtBound(" << n.bound << "): rank " << n.rank
                          << ", system " << n.rows << "x" << n.cols
                          << " (inconclusive negative)\n";
                row["status"] = "no-witness-at-bound";
                row["rank"] = n.rank;
                row["rows"] = n.rows;
                row["cols"] = n.cols;
            }
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                out << row.dump(2) << "\n";
            }
            return 0;
        }

        if (cmd_growth->parsed()) {
            GrowthTable table = growth_table(max_n);
            std::cout << "n  count  expected\n";
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto &r : table.rows) {
                std::cout << r.n << "  " << r.count.str() << "  " << r.expected.str() << "\n";
                nlohmann::ordered_json row;
                row["n"] = r.n;
                row["count"] = r.count.str();
                row["expected"] = r.expected.str();
                rows.push_back(row);
            }
            std::cout << (table.matches() ? "matches C(n+6,6) + C(n+5,6)"
                                          : "MISMATCH with the closed form")
                      << "\n";
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                out << rows.dump(2) << "\n";
            }
            return table.matches() ? 0 : 1;
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error at offset " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const UnknownGeneratorError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const NegativeExponentError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
