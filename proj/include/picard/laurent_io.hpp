#pragma once

#include <string>

#include "picard/laurent.hpp"

namespace picard {

// Deterministic serialization of canonical forms.
//
// JSON:  {"terms":[{"coeff":"a/b","exps":{"PH":k,...}}]} with exps listing
// only nonzero exponents, keys in fixed generator order, terms in canonical
// order. parse_json is a strict inverse on canonical output.
//
// LaTeX: display notation -- PH^2 renders as p^{j}, T0 T1 T2 as
// (t\,t_1\,t_2)^j, U as e^{i\theta}, MINV as \mu(\gamma)^{-1}, EX^k as
// e^{kx}. A common coefficient magnitude shared by two or more terms is
// factored out front.
std::string emit_json(const LaurentPoly& p);
std::string emit_latex(const LaurentPoly& p);

// format is "json" or "latex"; anything else throws std::invalid_argument.
std::string emit(const LaurentPoly& p, const std::string& format);

LaurentPoly parse_json(const std::string& text);

} // namespace picard
