#ifndef CHARCLASS_CHOW_HPP
#define CHARCLASS_CHOW_HPP

#include <vector>

#include <gmpxx.h>

#include "charclass/cycles.hpp"

namespace charclass {

// Element of A(P^n): sum_j coeff[j] H^j. Coefficients stay rational during
// intermediate steps; final characteristic classes must clear denominators.
class ChowClass {
public:
  ChowClass() = default;
  explicit ChowClass(int n) : n_(n), c_(static_cast<std::size_t>(n) + 1, 0) {}
  static ChowClass one(int n) {
    ChowClass r(n);
    r[0] = 1;
    return r;
  }
  static ChowClass hyperplane(int n, int power = 1, const mpq_class& coeff = 1);

  int dim() const { return n_; }
  const mpq_class& operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  mpq_class& operator[](int j) { return c_[static_cast<std::size_t>(j)]; }

  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator-(const ChowClass& o) const;
  // Product truncated past H^n.
  ChowClass operator*(const ChowClass& o) const;
  ChowClass operator*(const mpq_class& s) const;
  // Multiplicative inverse mod H^(n+1); requires a unit constant term.
  ChowClass inverse() const;

  bool operator==(const ChowClass& o) const { return n_ == o.n_ && c_ == o.c_; }

  bool is_integral() const;
  // Integer coefficient vector c_0..c_n; throws if a denominator survives.
  std::vector<long long> integer_coeffs() const;
  std::string to_string() const;

private:
  int n_ = 0;
  std::vector<mpq_class> c_;
};

// (1+H)^(n+1), the total Chern class of TP^n via the Euler sequence.
ChowClass chern_of_projective_space(int n);

enum class SegreKind { Ma, SM };

// s-hat: pushforward of sum_m (h+k)^m cap [cy] to A(P^n), where h+k is the
// tautological class of the twisted blow-up algebra and the pushforward
// keeps exactly the k^n terms.
ChowClass segre_hat(const CycleData& cy, const HypersurfaceData& h);

// Sign-flipped Segre class: s_a = (-1)^(a-1) s-hat_a for a hypersurface
// cycle (flip in every other codimension, folded with the characteristic
// cycle sign). Kind must match the cycle kind (Ma <-> conormal).
ChowClass segre_ma_sm(const CycleData& cy, const HypersurfaceData& h, SegreKind kind);

ChowClass csm_from_cycle(const CycleData& characteristic, const HypersurfaceData& h);
ChowClass cmather_from_cycle(const CycleData& conormal, const HypersurfaceData& h);

ChowClass csm_class(const HypersurfaceData& h, Budget& budget = Budget::current());
ChowClass cmather_class(const HypersurfaceData& h, Budget& budget = Budget::current());
// (1+H)^(n+1) cap dH/(1+dH); for a hypersurface the Fulton and
// Fulton-Johnson classes coincide (the normal cone is the line bundle O(d)).
ChowClass fulton_class(const HypersurfaceData& h);
ChowClass fulton_johnson_class(const HypersurfaceData& h);

// Coefficient of H^n in the CSM class.
long long euler_characteristic(const HypersurfaceData& h, Budget& budget = Budget::current());

// Chow ring of P(E) over P^n for a bundle E of the given rank, presented as
// a free module over A(P^n) with basis 1, xi, ..., xi^(rank-1) and the
// Grothendieck relation sum_i c_i(E) xi^(rank-i) = 0.
struct ProjBundleChowRing {
  int n = 0;
  int rank = 0;       // e + 1
  ChowClass chern;    // c(E), constant term 1

  ProjBundleChowRing(int n, int rank, ChowClass chern);
};

// Class in A(P(E)): sum_j xi^j . eps^*(coeffs[j]).
struct BundleClass {
  std::vector<ChowClass> coeffs;  // size = rank
};

BundleClass xi_power(const ProjBundleChowRing& ring, int j);
// Multiplication by xi with Grothendieck-relation normal form.
BundleClass xi_times(const ProjBundleChowRing& ring, const BundleClass& c);
// eps_*: extraction of the xi^(rank-1) coefficient.
ChowClass bundle_pushforward(const ProjBundleChowRing& ring, const BundleClass& c);

// c(E) cap eps_*((sum_j xi^j) cap C).
ChowClass shadow(const ProjBundleChowRing& ring, const BundleClass& c);

}  // namespace charclass

#endif
