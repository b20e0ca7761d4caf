#ifndef CHARCLASS_POLYNOMIAL_HPP
#define CHARCLASS_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charclass/scalar.hpp"

namespace charclass {

// Ordered variable list with an elimination-block partition and per-variable
// (h,k) weights for bigraded computations. Auxiliary variables (e.g. the
// Rees parameter t) may carry negative h-weight so that graph ideals stay
// bihomogeneous.
class VarContext {
public:
  VarContext(std::vector<std::string> names,
             std::vector<std::size_t> block_sizes = {},
             std::vector<std::pair<int, int>> weights = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }
  const std::pair<int, int>& weight(std::size_t i) const { return weights_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const VarContext& o) const {
    return names_ == o.names_ && block_sizes_ == o.block_sizes_ && weights_ == o.weights_;
  }

private:
  std::vector<std::string> names_;
  std::vector<std::size_t> block_sizes_;
  std::vector<std::pair<int, int>> weights_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

ContextPtr make_context(std::vector<std::string> names,
                        std::vector<std::size_t> block_sizes = {},
                        std::vector<std::pair<int, int>> weights = {});

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  std::pair<int, int> bidegree(const VarContext& ctx) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;
  bool is_one() const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }  // storage order only

private:
  std::vector<int> exps_;
};

// Total multiplicative monomial order with 1 minimal.
// Block orders compare block by block (grevlex within each block); a block
// order whose first block holds the variables to eliminate is an
// elimination order for them.
class MonomialOrder {
public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  static MonomialOrder block(std::vector<std::size_t> block_sizes) {
    return MonomialOrder(Kind::Block, std::move(block_sizes));
  }

  Kind kind() const { return kind_; }
  // >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
  MonomialOrder(Kind k, std::vector<std::size_t> bs) : kind_(k), blocks_(std::move(bs)) {}
  Kind kind_;
  std::vector<std::size_t> blocks_;
};

// Sparse exact-coefficient multivariate polynomial. Terms are kept in a map
// with no zero coefficients; the zero polynomial has an empty map.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Scalar>;

  Polynomial() = default;
  Polynomial(ContextPtr ctx, Field field) : ctx_(std::move(ctx)), field_(field) {}

  static Polynomial zero(ContextPtr ctx, const Field& f) { return Polynomial(std::move(ctx), f); }
  static Polynomial constant(ContextPtr ctx, const Scalar& c);
  static Polynomial variable(ContextPtr ctx, const Field& f, std::size_t i, int power = 1);
  static Polynomial term(ContextPtr ctx, const Scalar& c, Monomial m);

  const ContextPtr& context() const { return ctx_; }
  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& c) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  int total_degree() const;  // -1 for zero
  bool is_homogeneous() const;
  // Bidegree w.r.t. the context weights; nullopt if not bihomogeneous.
  std::optional<std::pair<int, int>> bidegree() const;

  Polynomial partial(std::size_t var) const;
  Polynomial substitute(const std::map<std::size_t, Polynomial>& assignment) const;

  // Reinterprets in a context containing the same-named variables (image
  // context may add variables and differ in blocks/weights).
  Polynomial map_to(const ContextPtr& target) const;
  // Coefficient change Q -> F_p (or identity).
  Polynomial change_field(const Field& f) const;

  std::string to_string() const;

private:
  void check_compatible(const Polynomial& o) const;
  ContextPtr ctx_;
  Field field_ = Field::rationals();
  TermMap terms_;
};

// All monomials of the given (h,k)-bidegree with coefficients drawn uniformly
// from [-bound, bound] \ {0} by a seeded deterministic PRNG.
Polynomial random_form(const ContextPtr& ctx, const Field& field,
                       std::pair<int, int> bidegree, std::uint64_t seed, long bound = 50);

// All monomials of a context with the given bidegree (standard weights).
std::vector<Monomial> monomials_of_bidegree(const VarContext& ctx, std::pair<int, int> bidegree);

}  // namespace charclass

#endif
