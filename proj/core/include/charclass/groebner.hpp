#ifndef CHARCLASS_GROEBNER_HPP
#define CHARCLASS_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "charclass/polynomial.hpp"

namespace charclass {

// Reduction-step budget. Runaway computations surface as a
// BudgetExhaustedError instead of silent truncation.
class Budget {
public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExhaustedError("reduction-step budget exhausted");
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

  static constexpr std::uint64_t kDefaultLimit = 10'000'000;
  // Thread-local default, honoring CHARCLASS_BUDGET on first use.
  static Budget& current();
  static void set_current_limit(std::uint64_t limit);

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct GBStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_discarded = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t basis_size = 0;
};

class GroebnerBasis {
public:
  GroebnerBasis(std::vector<Polynomial> gens, MonomialOrder order, GBStats stats)
      : gens_(std::move(gens)), order_(order), stats_(stats) {}

  const std::vector<Polynomial>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  const GBStats& stats() const { return stats_; }
  bool is_unit_ideal() const;
  bool is_zero_ideal() const { return gens_.empty(); }
  const Monomial& leading_monomial(std::size_t i) const;

private:
  std::vector<Polynomial> gens_;
  MonomialOrder order_;
  GBStats stats_;
};

// Reduced, monic Groebner basis of <gens>; deterministic for fixed input
// and order (normal selection strategy, Gebauer-Moller pair elimination).
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                             Budget& budget = Budget::current());

// Remainder of multivariate division by the basis; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                       Budget& budget = Budget::current());

// Generators of <gens> not involving the first n_elim context variables,
// via a block-order basis. Results stay in the original context.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t n_elim,
                                  Budget& budget = Budget::current());

struct SyzygyGenerators {
  // each row r satisfies sum_i r[i] * gens[i] = 0
  std::vector<std::vector<Polynomial>> rows;
};

// Generating set of the first syzygy module of gens, by cofactor tracking
// through Buchberger (Schreyer-style), transported to the input generators.
SyzygyGenerators syzygies(const std::vector<Polynomial>& gens,
                          Budget& budget = Budget::current());

}  // namespace charclass

#endif
