#ifndef CHARCLASS_IDEAL_HPP
#define CHARCLASS_IDEAL_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "charclass/groebner.hpp"

namespace charclass {

// Finite generator list with a per-order Groebner cache (append-only).
class Ideal {
public:
  Ideal() = default;
  Ideal(std::vector<Polynomial> gens, ContextPtr ctx, Field field);
  static Ideal zero(ContextPtr ctx, const Field& f) { return Ideal({}, std::move(ctx), f); }

  const std::vector<Polynomial>& generators() const { return gens_; }
  const ContextPtr& context() const { return ctx_; }
  const Field& field() const { return field_; }

  const GroebnerBasis& gb(const MonomialOrder& order = MonomialOrder::grevlex(),
                          Budget& budget = Budget::current()) const;
  bool contains(const Polynomial& f, Budget& budget = Budget::current()) const;
  bool contains_all(const std::vector<Polynomial>& fs,
                    Budget& budget = Budget::current()) const;
  bool is_unit(Budget& budget = Budget::current()) const;
  bool is_zero() const;
  // Equality of ideals (double inclusion via reduced bases).
  bool equals(const Ideal& other, Budget& budget = Budget::current()) const;

private:
  std::vector<Polynomial> gens_;
  ContextPtr ctx_;
  Field field_ = Field::rationals();
  mutable std::shared_ptr<std::map<std::string, GroebnerBasis>> cache_;
};

// (I : g) for a single polynomial, via the t-trick intersection I cap (g).
Ideal ideal_quotient(const Ideal& I, const Polynomial& g, Budget& budget = Budget::current());
// (I : J) = intersection over generators of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J, Budget& budget = Budget::current());
Ideal ideal_intersection(const Ideal& I, const Ideal& J, Budget& budget = Budget::current());
// (I : J^infinity), iterated quotient until the reduced basis stabilizes.
Ideal saturate(const Ideal& I, const Ideal& J, Budget& budget = Budget::current());

// Krull dimension of the quotient ring, from the leading-term ideal
// (maximal independent variable set). Unit ideal -> -1.
int krull_dim(const Ideal& I, Budget& budget = Budget::current());

// Exact division f / g, requiring the remainder to vanish.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g,
                        Budget& budget = Budget::current());

// Splits generators of a (bi)homogeneous ideal into their bihomogeneous
// components (valid since a graded ideal contains each component).
std::vector<Polynomial> split_bihomogeneous(const std::vector<Polynomial>& gens);

// K-polynomial data: Hilbert series = numerator(h,k) / (1-h)^hexp (1-k)^kexp.
struct HilbertSeries {
  std::map<std::pair<int, int>, long long> numerator;
  int h_exponent = 0;
  int k_exponent = 0;
  std::string to_string() const;
  bool operator==(const HilbertSeries&) const = default;
};

HilbertSeries hilbert_series(const Ideal& I, Budget& budget = Budget::current());

/// Bigraded context layout: x-block then T-block, weights (1,0) and (0,1).
ContextPtr make_bigraded_context(const std::vector<std::string>& x_names,
                                 const std::vector<std::string>& t_names);

// Ideal in a product P^n x P^m presented on the bigraded coordinate ring.
class BigradedIdeal {
public:
  BigradedIdeal(Ideal base, std::size_t n_x, std::size_t n_t);

  const Ideal& base() const { return base_; }
  std::size_t x_count() const { return n_x_; }
  std::size_t t_count() const { return n_t_; }
  bool is_bihomogeneous() const;
  Ideal x_irrelevant() const;
  Ideal t_irrelevant() const;
  // Saturation by both irrelevant ideals.
  BigradedIdeal saturate_irrelevant(Budget& budget = Budget::current()) const;

private:
  Ideal base_;
  std::size_t n_x_, n_t_;
};

// Cycle class of V(I) in P^n x P^m: coefficients a_j of the class
// sum_j a_j h^(n-j) k^(m-dim+j), where a_j counts intersections with j
// generic (1,0)-hyperplanes and dim-j generic (0,1)-hyperplanes.
struct MultiDegree {
  int codim = 0;
  std::vector<long long> degrees;  // a_0 .. a_dim
  bool operator==(const MultiDegree&) const = default;
  std::string to_string() const;
};

// Deterministic cycle-class extraction through the K-polynomial of the
// leading-term ideal.
MultiDegree multidegree(const BigradedIdeal& I, Budget& budget = Budget::current());

/// Independent randomized oracle: generic linear sections and stabilized
// point counts. Expects V(I) of pure dimension `dim` after saturation.
MultiDegree bidegrees_by_sections(const BigradedIdeal& I, int dim, std::uint64_t seed,
                                  Budget& budget = Budget::current());

}  // namespace charclass

#endif
