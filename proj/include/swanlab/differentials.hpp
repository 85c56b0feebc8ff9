#pragma once

// Differential forms over the residue field F and over K, the two
// filtrations on forms over K, the Cartier operator, the iterated
// boundary groups, the composite F^m d on Witt vectors, and the
// level-n normal forms of graded classes.

#include <optional>
#include <vector>

#include "swanlab/witt.hpp"

namespace swanlab {

// Log basis {dy, dlog pi}; plain basis {dy, dpi}. Forms over K are stored
// in the log basis; the plain view divides the second coefficient by pi.
enum class Basis { Log, Plain };

// a * dy over F. Identically zero when the residue field is perfect.
struct ResidueForm {
    ResidueElem a;
    bool operator==(const ResidueForm& o) const { return a == o.a; }
};

// f * dy + b * dlog(pi) over K.
struct LocalForm {
    LaurentElem f;
    LaurentElem b;
    bool operator==(const LocalForm& o) const { return f == o.f && b == o.b; }
};

// Graded class at level n:
//   Log:   (alpha * dy + beta * dlog pi) (x) [pi^-n]
//   Plain: (alpha * dy + beta * dpi)     (x) [pi^-(n+1)]
// with alpha, beta in F (alpha is a dy-coefficient, zero for perfect F).
struct GradedForm {
    Basis basis;
    long n;
    ResidueElem alpha;
    ResidueElem beta;
    bool operator==(const GradedForm& o) const {
        return basis == o.basis && n == o.n && alpha == o.alpha && beta == o.beta;
    }
};

// Coefficient table of a graded class in the image of the refined-conductor
// map at its level. layers[j][k-1] (0 <= j < r, 1 <= k <= p-1) parametrize
// the iterated-boundary part; x parametrizes the dlog pi (log) or dpi
// (plain) part.
struct GradedNormalForm {
    Basis basis;
    long n;
    long n0;      // log: n = n0 * p^r with p coprime to n0
    unsigned r;   // log: ord_p(n); plain: ord_p(n+1)
    unsigned rp;  // plain only: ord_p(n)
    std::vector<std::vector<ResidueElem>> layers;
    ResidueElem x;
    bool operator==(const GradedNormalForm& o) const {
        return basis == o.basis && n == o.n && n0 == o.n0 && r == o.r &&
               rp == o.rp && layers == o.layers && x == o.x;
    }
};

// --- forms over F ----------------------------------------------------------

ResidueForm rform_zero(const FieldConfig& F);
bool rform_is_zero(const ResidueForm& w);
ResidueForm rform_add(const FieldConfig& F, const ResidueForm& a,
                      const ResidueForm& b);
ResidueForm rform_neg(const FieldConfig& F, const ResidueForm& a);
ResidueForm rform_scale(const FieldConfig& F, const ResidueElem& c,
                        const ResidueForm& a);
ResidueForm d_residue(const FieldConfig& F, const ResidueElem& a);

// The Cartier operator on forms over F: C(f dy) with f = sum f_j^p y^j is
// f_(p-1) dy. Its kernel is the exact forms.
ResidueForm cartier(const FieldConfig& F, const ResidueForm& w);
// Right inverse: f dy -> f^p y^(p-1) dy.
ResidueForm cartier_inverse(const FieldConfig& F, const ResidueForm& w);
// B_r membership: B_0 = {0}, and B_r = preimage of B_(r-1) under C;
// equivalently ker(C^r) here since every 1-form over F is closed.
bool in_boundary_filtration(const FieldConfig& F, const ResidueForm& w,
                            unsigned r);
// beta = gamma^(p^r) test with witness.
std::optional<ResidueElem> iterated_power_witness(const FieldConfig& F,
                                                  const ResidueElem& beta,
                                                  unsigned r);

// --- forms over K ----------------------------------------------------------

LocalForm kform_zero();
bool kform_is_zero(const LocalForm& w);
LocalForm kform_add(const FieldConfig& F, const LocalForm& a,
                    const LocalForm& b);
LocalForm kform_neg(const FieldConfig& F, const LocalForm& a);
LocalForm kform_scale(const FieldConfig& F, const LaurentElem& c,
                      const LocalForm& a);
// d(sum a_j pi^j) = sum a_j' pi^j dy + sum j a_j pi^j dlog pi.
LocalForm d_local(const FieldConfig& F, const LaurentElem& x);
// The dpi-coefficient view: b * dlog pi = (b / pi) * dpi.
LaurentElem dpi_coefficient(const FieldConfig& F, const LocalForm& w);

// F^m d (x_0..x_m) = sum x_i^(p^(m-i)-1) dx_i. Additive; this is both the
// certificate map for the conductor and the source of every refined value.
LocalForm witt_differential(const FieldConfig& F, const WittVec& x);

// Level-n filtration membership of a form over K.
//   Log:   v(f) >= -n and v(b) >= -n
//   Plain: v(f) >= -(n+1) and v(b/pi) >= -(n+1)
bool form_in_filtration(const LocalForm& w, long n, Basis basis);
// Extract the graded class; NotInFiltrationError when w is not in fil_n.
GradedForm graded_class(const FieldConfig& F, const LocalForm& w, long n,
                        Basis basis);
bool graded_is_zero(const GradedForm& g);
GradedForm graded_neg(const FieldConfig& F, const GradedForm& g);
// The residue of the class: its beta coefficient.
ResidueElem residue_map(const GradedForm& g);

// --- normal forms ----------------------------------------------------------

// Membership + coefficient extraction for the image of the refined-conductor
// map at level n. NotInImageError when the class lies outside.
GradedNormalForm graded_normal_form(const FieldConfig& F, const GradedForm& g);
// Rebuild the graded class from its table (exact right inverse).
GradedForm reassemble_normal_form(const FieldConfig& F,
                                  const GradedNormalForm& nf);
bool normal_form_is_zero(const GradedNormalForm& nf);

// The j-th layer generator: sum_k x_k^(p^(j+1)) y^(k p^j) * k dy/y.
ResidueForm boundary_layer(const FieldConfig& F, unsigned j,
                           const std::vector<ResidueElem>& coeffs);

}  // namespace swanlab
