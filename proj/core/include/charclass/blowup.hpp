#ifndef CHARCLASS_BLOWUP_HPP
#define CHARCLASS_BLOWUP_HPP

#include <optional>

#include "charclass/ideal.hpp"

namespace charclass {

enum class BlowupKind { Rees, Sym, QSym };

// Presentation of a blow-up algebra as (base ring)[T] / ideal, with one
// T-variable per ideal generator. The ambient context is x-block then
// T-block with weights (1,0) / (0,1).
struct BlowupPresentation {
  BlowupKind kind;
  ContextPtr ambient;
  BigradedIdeal ideal;
  std::vector<int> generator_degrees;  // h-degree of each T-variable's image
};

// Bigraded ambient [x-block | T-block] over the given base, with T-names
// derived from the stem (suffixed on collision with base names).
ContextPtr presentation_context(const VarContext& base, std::size_t n_t,
                                const std::string& stem = "T");

// Kernel of R[T] -> R[I t], T_i -> t f_i, by eliminating the parameter t.
BlowupPresentation rees_ideal(const std::vector<Polynomial>& gens,
                              Budget& budget = Budget::current());

// Presentation of Sym over A = R/K of the ideal generated by the images of
// gens: linear forms from syzygy rows of [gens | K] with K-cofactors
// discarded, plus K itself.
BlowupPresentation sym_ideal(const std::vector<Polynomial>& gens,
                             const std::vector<Polynomial>& quotient_rel = {},
                             Budget& budget = Budget::current());

// Kernel of R[T] -> (R/K)[a t] where a is the image of <gens>: eliminates
// the parameter from the graph ideal together with K. With K = 0 this is
// rees_ideal; over a non-domain it presents the Rees algebra of the image.
BlowupPresentation rees_quotient_ideal(const std::vector<Polynomial>& gens,
                                       const std::vector<Polynomial>& quotient_rel,
                                       Budget& budget = Budget::current());

// Quasi-symmetric presentation over A = R/K: the Sym ideal plus the image
// of the Rees ideal of <gens> + K under T-variables of K-generators -> 0.
BlowupPresentation qsym_affine(const std::vector<Polynomial>& gens,
                               const std::vector<Polynomial>& quotient_rel = {},
                               Budget& budget = Budget::current());

// Ideal of the residual to the exceptional divisor in the total transform
// of V(F) inside the blow-up of the base along <y_gens>. Requires F in
// <y_gens>. Saturates by the T-irrelevant ideal, and by the x-irrelevant
// ideal in projective mode.
BigradedIdeal principal_transform(const Polynomial& F, const std::vector<Polynomial>& y_gens,
                                  bool projective = true, Budget& budget = Budget::current());

struct XConditionResult {
  bool holds = false;
  // on failure, a generator of one saturated presentation missing from the other
  std::optional<Polynomial> witness;
};

// Whether Sym and qSym presentations of the singularity ideal over
// A = R/(F) define the same Proj (saturated-ideal equality).
XConditionResult xcondition_check(const Polynomial& F, bool projective = true,
                                  Budget& budget = Budget::current());

// Whether the Rees and symmetric algebras of <gens> in the polynomial base
// ring agree in high degrees (equal T-irrelevant saturations).
bool weak_linearity_check(const std::vector<Polynomial>& gens,
                          Budget& budget = Budget::current());

// Saturation of a presentation ideal by the T-irrelevant ideal (and the
// x-irrelevant ideal in projective mode); shared by the checkers above.
BigradedIdeal proj_saturation(const BigradedIdeal& I, bool projective,
                              Budget& budget = Budget::current());

}  // namespace charclass

#endif
