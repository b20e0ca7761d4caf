#include "charclass/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace charclass {

namespace {

std::string order_key(const MonomialOrder& ord) {
  switch (ord.kind()) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::Grevlex: return "grevlex";
    case MonomialOrder::Kind::Block: return "block";
  }
  return "?";
}

}  // namespace

Ideal::Ideal(std::vector<Polynomial> gens, ContextPtr ctx, Field field)
    : ctx_(std::move(ctx)), field_(field),
      cache_(std::make_shared<std::map<std::string, GroebnerBasis>>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_context(g.context(), ctx_) || !(g.field() == field_))
      throw UsageError("ideal generators must share context and field");
    gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::gb(const MonomialOrder& order, Budget& budget) const {
  std::string key = order_key(order);
  auto it = cache_->find(key);
  if (it != cache_->end()) return it->second;
  std::vector<Polynomial> gens = gens_;
  if (gens.empty()) gens.push_back(Polynomial::zero(ctx_, field_));
  auto res = cache_->emplace(key, groebner_basis(gens, order, budget));
  return res.first->second;
}

bool Ideal::contains(const Polynomial& f, Budget& budget) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return normal_form(f, gb(MonomialOrder::grevlex(), budget), budget).is_zero();
}

bool Ideal::contains_all(const std::vector<Polynomial>& fs, Budget& budget) const {
  for (auto& f : fs)
    if (!contains(f, budget)) return false;
  return true;
}

bool Ideal::is_unit(Budget& budget) const {
  return !gens_.empty() && gb(MonomialOrder::grevlex(), budget).is_unit_ideal();
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::equals(const Ideal& other, Budget& budget) const {
  // reduced bases are unique per order
  return gb(MonomialOrder::grevlex(), budget).generators() ==
         other.gb(MonomialOrder::grevlex(), budget).generators();
}

std::vector<Polynomial> split_bihomogeneous(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    std::map<std::pair<int, int>, Polynomial> parts;
    const auto& ctx = *g.context();
    for (auto& [m, c] : g.terms()) {
      auto d = m.bidegree(ctx);
      auto it = parts.find(d);
      if (it == parts.end())
        it = parts.emplace(d, Polynomial::zero(g.context(), g.field())).first;
      it->second.add_term(m, c);
    }
    for (auto& [d, p] : parts) out.push_back(std::move(p));
  }
  return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g, Budget& budget) {
  if (g.is_zero()) throw UsageError("exact_divide: division by zero");
  if (f.is_zero()) return f;
  MonomialOrder ord = MonomialOrder::grevlex();
  // single-divisor division tracking the quotient; remainder must vanish
  Polynomial quotient(f.context(), f.field());
  Polynomial rem = f;
  auto lead = [&](const Polynomial& p) {
    const Monomial* best = nullptr;
    for (auto& [m, c] : p.terms())
      if (!best || ord.less(*best, m)) best = &m;
    return std::make_pair(*best, p.terms().at(*best));
  };
  auto [glm, glc] = lead(g);
  while (!rem.is_zero()) {
    budget.tick();
    auto [rlm, rlc] = lead(rem);
    if (!glm.divides(rlm))
      throw Error(ErrorCode::Internal, "exact_divide: nonzero remainder");
    Polynomial t = Polynomial::term(f.context(), rlc / glc, rlm / glm);
    quotient = quotient + t;
    rem = rem - t * g;
  }
  return quotient;
}

namespace {

struct ExtendedRing {
  ContextPtr ctx;  // [@t, original vars...]
  std::size_t t_index = 0;
};

ExtendedRing extend_with_parameter(const ContextPtr& ctx) {
  std::vector<std::string> names = {"@t"};
  for (auto& n : ctx->names()) names.push_back(n);
  std::vector<std::pair<int, int>> weights = {{0, 0}};
  for (std::size_t i = 0; i < ctx->size(); ++i) weights.push_back(ctx->weight(i));
  return {make_context(std::move(names), {1, ctx->size()}, std::move(weights)), 0};
}

bool all_bihomogeneous(const std::vector<Polynomial>& gens) {
  for (auto& g : gens)
    if (!g.bidegree()) return false;
  return true;
}

}  // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J, Budget& budget) {
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.context(), I.field());
  const ContextPtr& ctx = I.context();
  const Field& field = I.field();
  ExtendedRing ext = extend_with_parameter(ctx);
  Polynomial t = Polynomial::variable(ext.ctx, field, ext.t_index);
  Polynomial one_minus_t = Polynomial::constant(ext.ctx, Scalar::one(field)) - t;
  std::vector<Polynomial> gens;
  for (auto& f : I.generators()) gens.push_back(t * f.map_to(ext.ctx));
  for (auto& g : J.generators()) gens.push_back(one_minus_t * g.map_to(ext.ctx));
  std::vector<Polynomial> inter = eliminate(gens, 1, budget);
  std::vector<Polynomial> back;
  for (auto& p : inter) back.push_back(p.map_to(ctx));
  if (all_bihomogeneous(I.generators()) && all_bihomogeneous(J.generators()))
    back = split_bihomogeneous(back);
  return Ideal(std::move(back), ctx, field);
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& g, Budget& budget) {
  if (g.is_zero()) {
    // (I : 0) = (1)
    return Ideal({Polynomial::constant(I.context(), Scalar::one(I.field()))}, I.context(),
                 I.field());
  }
  if (I.is_zero()) return I;
  Ideal gi({g}, I.context(), I.field());
  Ideal inter = ideal_intersection(I, gi, budget);
  std::vector<Polynomial> quot;
  for (auto& f : inter.generators()) quot.push_back(exact_divide(f, g, budget));
  return Ideal(std::move(quot), I.context(), I.field());
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, Budget& budget) {
  if (J.is_zero())
    return Ideal({Polynomial::constant(I.context(), Scalar::one(I.field()))}, I.context(),
                 I.field());
  bool first = true;
  Ideal acc;
  for (auto& g : J.generators()) {
    Ideal q = ideal_quotient(I, g, budget);
    acc = first ? q : ideal_intersection(acc, q, budget);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J, Budget& budget) {
  Ideal cur = I;
  for (;;) {
    Ideal next = ideal_quotient(cur, J, budget);
    if (next.equals(cur, budget)) return next;
    cur = next;
  }
}

int krull_dim(const Ideal& I, Budget& budget) {
  const auto& gb = I.gb(MonomialOrder::grevlex(), budget);
  std::size_t n = I.context()->size();
  if (gb.is_unit_ideal()) return -1;
  if (gb.is_zero_ideal() || I.is_zero()) return static_cast<int>(n);
  std::vector<std::vector<std::size_t>> supports;
  for (std::size_t i = 0; i < gb.generators().size(); ++i) {
    const Monomial& lm = gb.leading_monomial(i);
    std::vector<std::size_t> sup;
    for (std::size_t v = 0; v < n; ++v)
      if (lm[v] > 0) sup.push_back(v);
    supports.push_back(std::move(sup));
  }
  // maximal independent set: no leading monomial supported inside S
  int best = 0;
  std::vector<bool> in_set(n, false);
  auto rec = [&](auto&& self, std::size_t v, int count) -> void {
    if (count + static_cast<int>(n - v) <= best) return;
    if (v == n) {
      best = std::max(best, count);
      return;
    }
    in_set[v] = true;
    bool ok = true;
    for (auto& sup : supports) {
      bool inside = !sup.empty();
      for (auto s : sup)
        if (!in_set[s]) {
          inside = false;
          break;
        }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) self(self, v + 1, count + 1);
    in_set[v] = false;
    self(self, v + 1, count);
  };
  rec(rec, 0, 0);
  return best;
}

namespace {

using KPoly = std::map<std::pair<int, int>, long long>;

KPoly kp_one() { return {{{0, 0}, 1}}; }

KPoly kp_sub(const KPoly& a, const KPoly& b) {
  KPoly r = a;
  for (auto& [d, c] : b) {
    r[d] -= c;
    if (r[d] == 0) r.erase(d);
  }
  return r;
}

KPoly kp_mul(const KPoly& a, const KPoly& b) {
  KPoly r;
  for (auto& [da, ca] : a)
    for (auto& [db, cb] : b) {
      auto d = std::make_pair(da.first + db.first, da.second + db.second);
      r[d] += ca * cb;
      if (r[d] == 0) r.erase(d);
    }
  return r;
}

KPoly kp_shift(const KPoly& a, std::pair<int, int> d) {
  KPoly r;
  for (auto& [da, ca] : a)
    r[{da.first + d.first, da.second + d.second}] = ca;
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (auto& m : gens) {
    bool redundant = false;
    for (auto& p : out)
      if (p.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

// K-polynomial numerator of a monomial ideal, by the colon recursion
// K(G + m) = K(G) - t^deg(m) K(G : m).
KPoly kpoly(std::vector<Monomial> gens, const VarContext& ctx, Budget& budget) {
  budget.tick();
  gens = minimalize(std::move(gens));
  if (gens.empty()) return kp_one();
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    KPoly r = kp_one();
    for (auto& m : gens)
      r = kp_mul(r, kp_sub(kp_one(), kp_shift(kp_one(), m.bidegree(ctx))));
    return r;
  }
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  for (auto& g : gens) {
    Monomial q(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) q[v] = std::max(0, g[v] - pivot[v]);
    colon.push_back(std::move(q));
  }
  KPoly without = kpoly(gens, ctx, budget);
  KPoly quot = kpoly(std::move(colon), ctx, budget);
  return kp_sub(without, kp_shift(quot, pivot.bidegree(ctx)));
}

std::vector<Monomial> leading_monomials(const Ideal& I, Budget& budget) {
  const auto& gb = I.gb(MonomialOrder::grevlex(), budget);
  std::vector<Monomial> lms;
  if (gb.is_zero_ideal() || I.is_zero()) return lms;
  for (std::size_t i = 0; i < gb.generators().size(); ++i)
    lms.push_back(gb.leading_monomial(i));
  return lms;
}

}  // namespace

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto& [d, c] : numerator) {
    if (!first && c > 0) os << " + ";
    if (c < 0) os << (first ? "-" : " - ");
    long long a = std::abs(c);
    if (a != 1 || (d.first == 0 && d.second == 0)) os << a;
    if (d.first) os << "h" << (d.first != 1 ? "^" + std::to_string(d.first) : "");
    if (d.second) os << "k" << (d.second != 1 ? "^" + std::to_string(d.second) : "");
    first = false;
  }
  if (first) os << "0";
  os << ") / ((1-h)^" << h_exponent << " (1-k)^" << k_exponent << ")";
  return os.str();
}

HilbertSeries hilbert_series(const Ideal& I, Budget& budget) {
  const VarContext& ctx = *I.context();
  HilbertSeries hs;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    auto w = ctx.weight(i);
    if (w == std::pair<int, int>{1, 0})
      ++hs.h_exponent;
    else if (w == std::pair<int, int>{0, 1})
      ++hs.k_exponent;
    else
      throw UsageError("hilbert_series requires standard (1,0)/(0,1) weights");
  }
  // For inhomogeneous ideals this is the K-polynomial of the grevlex
  // leading-term ideal (the associated graded), which is still a
  // presentation-independent invariant.
  hs.numerator = kpoly(leading_monomials(I, budget), ctx, budget);
  return hs;
}

ContextPtr make_bigraded_context(const std::vector<std::string>& x_names,
                                 const std::vector<std::string>& t_names) {
  std::vector<std::string> names = x_names;
  names.insert(names.end(), t_names.begin(), t_names.end());
  std::vector<std::pair<int, int>> weights(x_names.size(), {1, 0});
  weights.insert(weights.end(), t_names.size(), {0, 1});
  return make_context(std::move(names), {x_names.size(), t_names.size()}, std::move(weights));
}

BigradedIdeal::BigradedIdeal(Ideal base, std::size_t n_x, std::size_t n_t)
    : base_(std::move(base)), n_x_(n_x), n_t_(n_t) {
  if (n_x_ + n_t_ != base_.context()->size())
    throw UsageError("bigraded ideal: block sizes must cover the context");
}

bool BigradedIdeal::is_bihomogeneous() const {
  for (auto& g : base_.generators())
    if (!g.bidegree()) return false;
  return true;
}

Ideal BigradedIdeal::x_irrelevant() const {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < n_x_; ++i)
    vars.push_back(Polynomial::variable(base_.context(), base_.field(), i));
  return Ideal(std::move(vars), base_.context(), base_.field());
}

Ideal BigradedIdeal::t_irrelevant() const {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < n_t_; ++i)
    vars.push_back(Polynomial::variable(base_.context(), base_.field(), n_x_ + i));
  return Ideal(std::move(vars), base_.context(), base_.field());
}

BigradedIdeal BigradedIdeal::saturate_irrelevant(Budget& budget) const {
  Ideal s = saturate(base_, x_irrelevant(), budget);
  s = saturate(s, t_irrelevant(), budget);
  return BigradedIdeal(std::move(s), n_x_, n_t_);
}

std::string MultiDegree::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << ")";
  return os.str();
}

MultiDegree multidegree(const BigradedIdeal& I, Budget& budget) {
  if (!I.is_bihomogeneous()) throw UsageError("multidegree requires bihomogeneous generators");
  if (I.base().is_unit(budget))
    throw PreconditionError("IMPROPER", "multidegree of the unit ideal is undefined");
  const VarContext& ctx = *I.base().context();
  KPoly numer = kpoly(leading_monomials(I.base(), budget), ctx, budget);

  // substitute h -> 1-h, k -> 1-k; binomial expansion
  int max_h = 0, max_k = 0;
  for (auto& [d, c] : numer) {
    max_h = std::max(max_h, d.first);
    max_k = std::max(max_k, d.second);
  }
  std::vector<std::vector<long long>> binom(std::max(max_h, max_k) + 1);
  for (int i = 0; i < static_cast<int>(binom.size()); ++i) {
    binom[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  KPoly subbed;
  for (auto& [d, c] : numer) {
    for (int a = 0; a <= d.first; ++a)
      for (int b = 0; b <= d.second; ++b) {
        long long sign = ((a + b) % 2 == 0) ? 1 : -1;
        auto key = std::make_pair(a, b);
        subbed[key] += c * sign * binom[d.first][a] * binom[d.second][b];
        if (subbed[key] == 0) subbed.erase(key);
      }
  }
  int D = -1;
  for (auto& [d, c] : subbed) {
    int total = d.first + d.second;
    if (D < 0 || total < D) D = total;
  }
  if (D < 0) throw Error(ErrorCode::Internal, "multidegree: vanishing K-polynomial");

  int n = static_cast<int>(I.x_count()) - 1;
  int m = static_cast<int>(I.t_count()) - 1;
  int dim = n + m - D;
  if (dim < 0) dim = -1;
  MultiDegree md;
  md.codim = D;
  md.degrees.assign(static_cast<std::size_t>(std::max(0, dim + 1)), 0);
  for (auto& [d, c] : subbed) {
    if (d.first + d.second != D) continue;
    // a_j cuts with (dim-j) generic (1,0)-forms and j (0,1)-forms, so it is
    // the coefficient of h^(n-dim+j) in the lowest part
    int j = d.first - (n - dim);
    if (j >= 0 && j <= dim) md.degrees[static_cast<std::size_t>(j)] = c;
  }
  return md;
}

MultiDegree bidegrees_by_sections(const BigradedIdeal& I, int dim, std::uint64_t seed,
                                  Budget& budget) {
  if (!I.is_bihomogeneous())
    throw UsageError("bidegrees_by_sections requires bihomogeneous generators");
  if (I.base().is_unit(budget))
    throw PreconditionError("IMPROPER", "bidegrees_by_sections of the unit ideal is undefined");
  const ContextPtr& ctx = I.base().context();
  const Field& field = I.base().field();
  int n = static_cast<int>(I.x_count()) - 1;
  int m = static_cast<int>(I.t_count()) - 1;

  MultiDegree md;
  md.codim = n + m - dim;
  md.degrees.assign(static_cast<std::size_t>(dim + 1), 0);

  constexpr int kMaxRetries = 5;
  for (int j = 0; j <= dim; ++j) {
    bool done = false;
    std::string last_failure;
    for (int attempt = 0; attempt < kMaxRetries && !done; ++attempt) {
      std::uint64_t s = seed * 1000003u + static_cast<std::uint64_t>(j) * 1009u +
                        static_cast<std::uint64_t>(attempt);
      std::vector<Polynomial> gens = I.base().generators();
      for (int c = 0; c < dim - j; ++c)
        gens.push_back(random_form(ctx, field, {1, 0}, s + 11u * c + 1));
      for (int c = 0; c < j; ++c) gens.push_back(random_form(ctx, field, {0, 1}, s + 13u * c + 7));
      BigradedIdeal cut(Ideal(std::move(gens), ctx, field), I.x_count(), I.t_count());
      BigradedIdeal sat = cut.saturate_irrelevant(budget);
      if (sat.base().is_unit(budget)) {
        // generic sections miss the variety: this projective degree is 0
        md.degrees[static_cast<std::size_t>(j)] = 0;
        done = true;
        continue;
      }
      int cone_dim = krull_dim(sat.base(), budget);
      if (cone_dim != 2) {
        last_failure = "not equidimensional as assumed (residue of dimension " +
                       std::to_string(cone_dim - 2) + ")";
        continue;
      }
      // point count with multiplicity: stabilized dimension of the (s,s) piece
      std::vector<Monomial> lms = leading_monomials(sat.base(), budget);
      long long prev = -1;
      for (int deg = 1; deg <= 60; ++deg) {
        long long count = 0;
        for (auto& mono : monomials_of_bidegree(*ctx, {deg, deg})) {
          bool in_lt = false;
          for (auto& lm : lms)
            if (lm.divides(mono)) {
              in_lt = true;
              break;
            }
          if (!in_lt) ++count;
        }
        if (count == prev) {
          md.degrees[static_cast<std::size_t>(j)] = count;
          done = true;
          break;
        }
        prev = count;
      }
      if (!done) last_failure = "point count did not stabilize";
    }
    if (!done) throw GenericityError("bidegrees_by_sections: " + last_failure);
  }
  return md;
}

}  // namespace charclass
