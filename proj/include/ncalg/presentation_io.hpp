#pragma once

#include "ncalg/presentation.hpp"

#include <iosfwd>
#include <string>

namespace ncalg {

// Declarative presentation files:
//
//   algebra D
//   generator g invertible
//   generator x
//   levels y zeta v
//   swap y x = x*y - 1/2*x^2
//   inverse y g = g^-1*y + g^-1*x
//
// '#' starts a comment. Rule right-hand sides use the expression grammar
// and must be written normal-ordered. The loaded presentation is
// validated before it is returned.
AlgebraPresentation load_presentation(std::istream &in);
AlgebraPresentation load_presentation_file(const std::string &path);
std::string format_presentation(const AlgebraPresentation &pres);

} // namespace ncalg
