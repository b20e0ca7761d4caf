#ifndef CHARCLASS_CYCLES_HPP
#define CHARCLASS_CYCLES_HPP

#include <optional>

#include "charclass/blowup.hpp"

namespace charclass {

// A validated hypersurface X = V(F) in P^n. The singularity subscheme is
// generated by the n+1 partials alone: the Euler identity puts F in the
// partials' ideal whenever d is invertible.
struct HypersurfaceData {
  Polynomial F;
  std::size_t n = 0;  // ambient projective dimension
  int d = 0;          // degree of F
  std::vector<Polynomial> partials;
  Ideal jacobian;
};

// Validates homogeneity, invertibility of d, and reducedness (the singular
// locus must have codimension >= 2 in P^n). Non-reduced input is rejected
// with code NON_REDUCED; p | d in prime-field mode with code EULER.
HypersurfaceData make_hypersurface(const Polynomial& F, Budget& budget = Budget::current());

enum class CycleKind { Conormal, Characteristic };

struct CycleData {
  CycleKind kind;
  BigradedIdeal ideal;  // saturated ideal in P^n x P^n
  MultiDegree bidegrees;
};

// Closure of {(x, grad F(x)) : x in X smooth}: <F> plus the 2x2 minors of
// [[T_i],[d_i F]], saturated by the jacobian ideal and both irrelevants.
CycleData conormal_ideal(const HypersurfaceData& h, Budget& budget = Budget::current());

// The quasi-symmetric blow-up cycle: Rees ideal of the partials plus the
// single degree-one cut sum x_i T_i (the image of d*F*t under the Euler
// identity), saturated by both irrelevant ideals.
CycleData charcycle_ideal(const HypersurfaceData& h, Budget& budget = Budget::current());

struct CycleCrossCheck {
  bool match = false;
  MultiDegree charcycle_bidegrees;
  MultiDegree transform_bidegrees;
  // on mismatch, a generator of one saturated ideal missing from the other
  std::optional<Polynomial> first_difference;
};

// Two-path consistency: the characteristic-cycle ideal against the
// principal transform of X in the blow-up along its singularity subscheme.
CycleCrossCheck cycle_cross_check(const HypersurfaceData& h, Budget& budget = Budget::current());

}  // namespace charclass

#endif
