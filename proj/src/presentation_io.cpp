#include "ncalg/presentation_io.hpp"

#include "ncalg/parser.hpp"

#include <fstream>
#include <sstream>

namespace ncalg {

namespace {

std::vector<std::string> split_words(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

NcPolynomial parse_rhs(const AlgebraPresentation &pres, const std::string &text, int line_no) {
    try {
        return polynomial_of_ordered_words(elaborate_words(parse_expression(text), pres), pres);
    } catch (const Error &e) {
        throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
}

} // namespace

AlgebraPresentation load_presentation(std::istream &in) {
    AlgebraPresentation pres;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::vector<std::string> words = split_words(line);
        if (words.empty())
            continue;
        const std::string &kind = words[0];
        if (kind == "algebra" && words.size() == 2) {
            pres.name = words[1];
        } else if (kind == "generator" && (words.size() == 2 || words.size() == 3)) {
            bool invertible = words.size() == 3 && words[2] == "invertible";
            if (words.size() == 3 && !invertible)
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": expected 'invertible'");
            pres.add_generator(words[1], invertible);
        } else if (kind == "levels") {
            pres.set_level_generators({words.begin() + 1, words.end()});
        } else if ((kind == "swap" || kind == "inverse") && words.size() >= 5 &&
                   words[3] == "=") {
            std::string rhs_text;
            size_t eq = line.find('=');
            rhs_text = line.substr(eq + 1);
            NcPolynomial rhs = parse_rhs(pres, rhs_text, line_no);
            if (kind == "swap")
                pres.add_swap_rule(words[1], words[2], std::move(rhs));
            else
                pres.add_inverse_rule(words[1], words[2], std::move(rhs));
        } else {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": unrecognized directive '" + kind + "'");
        }
    }
    ValidationReport report = validate_presentation(pres);
    if (!report.passed()) {
        std::string what = "presentation " + pres.name + " failed validation:";
        for (const auto &issue : report.issues)
            what += "\n  " + issue.what;
        throw ValidationError(what);
    }
    return pres;
}

AlgebraPresentation load_presentation_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open presentation file '" + path + "'");
    return load_presentation(in);
}

std::string format_presentation(const AlgebraPresentation &pres) {
    std::ostringstream os;
    os << "algebra " << pres.name << "\n";
    for (const auto &g : pres.generators)
        os << "generator " << g.name << (g.invertible ? " invertible" : "") << "\n";
    if (!pres.level_generators.empty()) {
        os << "levels";
        for (int pos : pres.level_generators)
            os << " " << pres.generator(pos).name;
        os << "\n";
    }
    for (const auto &r : pres.swap_rules)
        os << "swap " << pres.generator(r.hi).name << " " << pres.generator(r.lo).name
           << " = " << format_polynomial(r.rhs, pres) << "\n";
    for (const auto &r : pres.inverse_rules)
        os << "inverse " << pres.generator(r.mover).name << " " << pres.generator(r.inverted).name
           << " = " << format_polynomial(r.rhs, pres) << "\n";
    return os.str();
}

} // namespace ncalg
