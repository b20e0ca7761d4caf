#include "charclass/polynomial.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace charclass {

VarContext::VarContext(std::vector<std::string> names,
                       std::vector<std::size_t> block_sizes,
                       std::vector<std::pair<int, int>> weights)
    : names_(std::move(names)), block_sizes_(std::move(block_sizes)), weights_(std::move(weights)) {
  if (block_sizes_.empty()) block_sizes_ = {names_.size()};
  std::size_t total = 0;
  for (auto b : block_sizes_) total += b;
  if (total != names_.size()) throw UsageError("block partition must cover all variables");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw UsageError("variable names must be unique");
  if (weights_.empty()) weights_.assign(names_.size(), {1, 0});
  if (weights_.size() != names_.size()) throw UsageError("one weight per variable required");
}

std::optional<std::size_t> VarContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names, std::vector<std::size_t> block_sizes,
                        std::vector<std::pair<int, int>> weights) {
  return std::make_shared<const VarContext>(std::move(names), std::move(block_sizes),
                                            std::move(weights));
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

std::pair<int, int> Monomial::bidegree(const VarContext& ctx) const {
  int h = 0, k = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    h += exps_[i] * ctx.weight(i).first;
    k += exps_[i] * ctx.weight(i).second;
  }
  return {h, k};
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  return true;
}

bool Monomial::is_one() const {
  for (int e : exps_)
    if (e) return false;
  return true;
}

namespace {

// a > b by grevlex restricted to [lo, hi).
int grevlex_compare_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // reverse lex: larger = smaller exponent on the last differing variable
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Grevlex:
      return grevlex_compare_range(a, b, 0, a.size());
    case Kind::Block: {
      std::size_t lo = 0;
      for (std::size_t bs : blocks_) {
        int c = grevlex_compare_range(a, b, lo, lo + bs);
        if (c) return c;
        lo += bs;
      }
      return 0;
    }
  }
  return 0;
}

Polynomial Polynomial::constant(ContextPtr ctx, const Scalar& c) {
  Polynomial p(std::move(ctx), c.field());
  p.add_term(Monomial(p.ctx_->size()), c);
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, const Field& f, std::size_t i, int power) {
  if (i >= ctx->size()) throw UsageError("variable index out of range");
  Monomial m(ctx->size());
  m[i] = power;
  Polynomial p(std::move(ctx), f);
  p.add_term(m, Scalar::one(f));
  return p;
}

Polynomial Polynomial::term(ContextPtr ctx, const Scalar& c, Monomial m) {
  Polynomial p(std::move(ctx), c.field());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!same_context(ctx_, o.ctx_) || !(field_ == o.field_))
    throw UsageError("polynomial context or field mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_, field_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(*this);
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(*this);
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(ctx_, field_);
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  Polynomial r(ctx_, field_);
  if (c.is_zero()) return r;
  for (auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_context(ctx_, o.ctx_) && field_ == o.field_ && terms_ == o.terms_;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

std::optional<std::pair<int, int>> Polynomial::bidegree() const {
  if (terms_.empty()) return std::pair<int, int>{0, 0};
  auto d = terms_.begin()->first.bidegree(*ctx_);
  for (auto& [m, c] : terms_)
    if (m.bidegree(*ctx_) != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::partial(std::size_t var) const {
  if (var >= ctx_->size()) throw UsageError("partial: variable index out of range");
  Polynomial r(ctx_, field_);
  for (auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    Monomial m2(m);
    m2[var] = e - 1;
    r.add_term(m2, c * Scalar::from_int(e, field_));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& assignment) const {
  ContextPtr target = ctx_;
  for (auto& [i, p] : assignment) {
    if (i >= ctx_->size()) throw UsageError("substitute: variable index out of range");
    target = p.context();
  }
  Polynomial result = Polynomial::zero(target, field_);
  for (auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = assignment.find(i);
      Polynomial base = it != assignment.end()
                            ? it->second
                            : Polynomial::variable(target, field_, i);
      for (int e = 0; e < m[i]; ++e) term = term * base;
    }
    result = result + term;
  }
  return result;
}

Polynomial Polynomial::map_to(const ContextPtr& target) const {
  // only variables actually occurring need to exist in the target
  std::vector<std::optional<std::size_t>> image(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) image[i] = target->index_of(ctx_->name(i));
  Polynomial r(target, field_);
  for (auto& [m, c] : terms_) {
    Monomial m2(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!image[i])
        throw UsageError("map_to: variable " + ctx_->name(i) + " missing in target context");
      m2[*image[i]] = m[i];
    }
    r.add_term(m2, c);
  }
  return r;
}

Polynomial Polynomial::change_field(const Field& f) const {
  if (f == field_) return *this;
  Polynomial r(ctx_, f);
  for (auto& [m, c] : terms_) {
    if (field_.kind != Field::Kind::Rationals)
      throw UsageError("change_field: only rational -> prime supported");
    r.add_term(m, Scalar::from_mpq(c.rational(), f));
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // display highest-degree terms first
  std::vector<const TermMap::value_type*> ts;
  for (auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
    if (a->first.degree() != b->first.degree()) return a->first.degree() > b->first.degree();
    return b->first < a->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    std::string cs = t->second.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    first = false;
    bool printed_coeff = false;
    if (cs != "1" || t->first.is_one()) {
      os << cs;
      printed_coeff = true;
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      int e = t->first[i];
      if (!e) continue;
      if (printed_coeff || !first_var) os << "*";
      os << ctx_->name(i);
      if (e != 1) os << "^" << e;
      first_var = false;
    }
  }
  return os.str();
}

std::vector<Monomial> monomials_of_bidegree(const VarContext& ctx, std::pair<int, int> bidegree) {
  std::vector<Monomial> out;
  Monomial cur(ctx.size());
  // depth-first over exponent vectors, pruning on remaining bidegree
  auto rec = [&](auto&& self, std::size_t i, int h, int k) -> void {
    if (i == ctx.size()) {
      if (h == 0 && k == 0) out.push_back(cur);
      return;
    }
    auto [wh, wk] = ctx.weight(i);
    int emax = 0;
    if (wh > 0)
      emax = h / wh;
    else if (wk > 0)
      emax = k / wk;
    for (int e = 0; e <= emax; ++e) {
      int nh = h - e * wh, nk = k - e * wk;
      if (nh < 0 || nk < 0) break;
      cur[i] = e;
      self(self, i + 1, nh, nk);
    }
    cur[i] = 0;
  };
  rec(rec, 0, bidegree.first, bidegree.second);
  return out;
}

Polynomial random_form(const ContextPtr& ctx, const Field& field, std::pair<int, int> bidegree,
                       std::uint64_t seed, long bound) {
  if (bound < 1) throw UsageError("random_form: bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 2 * bound);
  Polynomial p(ctx, field);
  for (auto& m : monomials_of_bidegree(*ctx, bidegree)) {
    long v = dist(rng);
    if (v > bound) v = bound - v;  // maps to [-bound, -1]
    p.add_term(m, Scalar::from_int(v, field));
  }
  return p;
}

}  // namespace charclass
