#pragma once

// Canonical textual rendering of field elements, Witt vectors and forms.
// Renderings of elements are valid inputs for the expression parser, and
// parse back to the same value (roundtrip invariant).

#include <string>
#include <vector>

#include "swanlab/differentials.hpp"

namespace swanlab {

std::string render_gf(const GaloisField& gf, const GFElem& a);
std::string render_res(const FieldConfig& F, const ResidueElem& a);
std::string render_lau(const FieldConfig& F, const LaurentElem& a);
std::vector<std::string> render_witt(const FieldConfig& F, const WittVec& x);
// "(a0; a1; ...)" for logs and error messages
std::string render_witt_inline(const FieldConfig& F, const WittVec& x);

// "f*dy + b*dlog(pi)" (log) or "f*dy + a*dpi" (plain)
std::string render_local_form(const FieldConfig& F, const LocalForm& w,
                              Basis basis);
// "(alpha*dy + beta*dlog(pi)) (tensor) pi^(-n)"; plain classes show the
// pi-exponent -(n+1) that the dpi basis carries
std::string render_graded(const FieldConfig& F, const GradedForm& g);

}  // namespace swanlab
