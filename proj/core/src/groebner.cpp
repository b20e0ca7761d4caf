#include "charclass/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <list>
#include <utility>

namespace charclass {

Budget& Budget::current() {
  thread_local Budget budget = [] {
    std::uint64_t limit = kDefaultLimit;
    if (const char* env = std::getenv("CHARCLASS_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) limit = v;
    }
    return Budget(limit);
  }();
  return budget;
}

void Budget::set_current_limit(std::uint64_t limit) { current() = Budget(limit); }

bool GroebnerBasis::is_unit_ideal() const {
  return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero();
}

const Monomial& GroebnerBasis::leading_monomial(std::size_t i) const {
  const Polynomial& g = gens_[i];
  const Monomial* best = nullptr;
  for (auto& [m, c] : g.terms())
    if (!best || order_.less(*best, m)) best = &m;
  return *best;
}

namespace {

// Term list sorted descending by the working order.
struct OPoly {
  std::vector<std::pair<Monomial, Scalar>> t;
  bool is_zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().first; }
  const Scalar& lc() const { return t.front().second; }
};

OPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
  OPoly o;
  o.t.assign(p.terms().begin(), p.terms().end());
  std::sort(o.t.begin(), o.t.end(),
            [&](auto& a, auto& b) { return ord.less(b.first, a.first); });
  return o;
}

Polynomial from_ordered(const OPoly& o, const ContextPtr& ctx, const Field& f) {
  Polynomial p(ctx, f);
  for (auto& [m, c] : o.t) p.add_term(m, c);
  return p;
}

// r = a - c * x^m * b, both sorted descending; linear merge.
OPoly subtract_scaled(const OPoly& a, const Scalar& c, const Monomial& m, const OPoly& b,
                      const MonomialOrder& ord) {
  OPoly r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) {
      r.t.push_back(a.t[i++]);
      continue;
    }
    Monomial bm = b.t[j].first * m;
    if (i == a.t.size()) {
      r.t.emplace_back(std::move(bm), -(c * b.t[j].second));
      ++j;
      continue;
    }
    int cmp = ord.compare(a.t[i].first, bm);
    if (cmp > 0) {
      r.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      r.t.emplace_back(std::move(bm), -(c * b.t[j].second));
      ++j;
    } else {
      Scalar s = a.t[i].second - c * b.t[j].second;
      if (!s.is_zero()) r.t.emplace_back(a.t[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

void make_monic(OPoly& p) {
  if (p.is_zero() || p.lc().is_one()) return;
  Scalar inv = p.lc().inverse();
  for (auto& [m, c] : p.t) c = c * inv;
}

// One reduction event: p -> p - coeff * x^mono * basis[index].
struct ReductionStep {
  std::size_t index;
  Monomial mono;
  Scalar coeff;
};

// Full normal form of f against basis; optionally records the steps taken.
OPoly reduce_full(OPoly f, const std::vector<OPoly>& basis, const MonomialOrder& ord,
                  Budget& budget, std::vector<ReductionStep>* trace = nullptr) {
  OPoly rem;
  while (!f.is_zero()) {
    budget.tick();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].is_zero()) continue;
      if (basis[k].lm().divides(f.lm())) {
        Monomial q = f.lm() / basis[k].lm();
        Scalar c = f.lc() / basis[k].lc();
        if (trace) trace->push_back({k, q, c});
        f = subtract_scaled(f, c, q, basis[k], ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.t.push_back(f.t.front());
      f.t.erase(f.t.begin());
    }
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

bool pair_less(const Pair& a, const Pair& b, const MonomialOrder& ord) {
  int c = ord.compare(a.lcm, b.lcm);
  if (c) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

// Gebauer-Moller update: install pairs of the new element h (index t) and
// prune the surviving old pairs.
void gm_update(std::list<Pair>& pairs, const std::vector<OPoly>& basis, std::size_t t,
               GBStats& stats) {
  const Monomial& lt = basis[t].lm();
  std::vector<Pair> cand;
  for (std::size_t i = 0; i < t; ++i) {
    if (basis[i].is_zero()) continue;
    cand.push_back({i, t, Monomial::lcm(basis[i].lm(), lt)});
  }
  // M criterion: drop (i,t) when another candidate's lcm properly divides its lcm.
  std::vector<bool> keep(cand.size(), true);
  for (std::size_t a = 0; a < cand.size(); ++a) {
    for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (cand[b].lcm.divides(cand[a].lcm) && !(cand[b].lcm == cand[a].lcm)) keep[a] = false;
    }
  }
  // F criterion: among equal lcms keep the first.
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = a + 1; b < cand.size(); ++b)
      if (keep[b] && cand[a].lcm == cand[b].lcm) keep[b] = false;
  }
  // B criterion on old pairs.
  for (auto it = pairs.begin(); it != pairs.end();) {
    const Pair& p = *it;
    if (lt.divides(p.lcm) && !(Monomial::lcm(basis[p.i].lm(), lt) == p.lcm) &&
        !(Monomial::lcm(basis[p.j].lm(), lt) == p.lcm)) {
      ++stats.pairs_discarded;
      it = pairs.erase(it);
    } else {
      ++it;
    }
  }
  // Coprime (Buchberger 1) criterion on the survivors.
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (!keep[a]) {
      ++stats.pairs_discarded;
      continue;
    }
    if (basis[cand[a].i].lm().coprime(lt)) {
      ++stats.pairs_discarded;
      continue;
    }
    pairs.push_back(cand[a]);
  }
}

ContextPtr common_context(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw UsageError("generator list must be nonempty");
  ContextPtr ctx = gens[0].context();
  for (auto& g : gens)
    if (!same_context(g.context(), ctx) || !(g.field() == gens[0].field()))
      throw UsageError("generators must share context and field");
  return ctx;
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                             Budget& budget) {
  ContextPtr ctx = common_context(gens);
  Field field = gens[0].field();
  GBStats stats;

  std::vector<OPoly> basis;
  std::list<Pair> pairs;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    OPoly o = to_ordered(g, order);
    o = reduce_full(std::move(o), basis, order, budget);
    if (o.is_zero()) continue;
    make_monic(o);
    basis.push_back(std::move(o));
    gm_update(pairs, basis, basis.size() - 1, stats);
  }

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
      if (pair_less(*it, *best, order)) best = it;
    Pair p = *best;
    pairs.erase(best);
    ++stats.pairs_considered;

    const OPoly& fi = basis[p.i];
    const OPoly& fj = basis[p.j];
    OPoly sp = subtract_scaled(OPoly{}, Scalar::one(field) * Scalar::from_int(-1, field),
                               p.lcm / fi.lm(), fi, order);
    sp = subtract_scaled(sp, fj.lc() / fi.lc() * fi.lc(), p.lcm / fj.lm(), fj, order);
    // sp = (lcm/lm_i) f_i - (lcm/lm_j) f_j, both monic so coefficients are 1
    OPoly h = reduce_full(std::move(sp), basis, order, budget);
    if (h.is_zero()) {
      ++stats.reductions_to_zero;
      continue;
    }
    make_monic(h);
    basis.push_back(std::move(h));
    gm_update(pairs, basis, basis.size() - 1, stats);
  }

  // Auto-reduce: minimalize leading terms, then tail-reduce.
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lm().divides(basis[i].lm()) &&
          (!(basis[i].lm() == basis[j].lm()) || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<OPoly> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = reduce_full(minimal[i], others, order, budget);
    make_monic(reduced[i]);
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OPoly& a, const OPoly& b) { return order.less(a.lm(), b.lm()); });

  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (auto& o : reduced) out.push_back(from_ordered(o, ctx, field));
  stats.basis_size = out.size();
  return GroebnerBasis(std::move(out), order, stats);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, Budget& budget) {
  if (gb.generators().empty()) return f;
  ContextPtr ctx = f.context();
  std::vector<OPoly> basis;
  for (auto& g : gb.generators()) basis.push_back(to_ordered(g, gb.order()));
  OPoly r = reduce_full(to_ordered(f, gb.order()), basis, gb.order(), budget);
  return from_ordered(r, ctx, f.field());
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t n_elim,
                                  Budget& budget) {
  ContextPtr ctx = common_context(gens);
  if (n_elim > ctx->size()) throw UsageError("eliminate: block larger than context");
  MonomialOrder ord = n_elim == 0
                          ? MonomialOrder::grevlex()
                          : MonomialOrder::block({n_elim, ctx->size() - n_elim});
  GroebnerBasis gb = groebner_basis(gens, ord, budget);
  std::vector<Polynomial> out;
  for (auto& g : gb.generators()) {
    bool pure = true;
    for (auto& [m, c] : g.terms())
      for (std::size_t i = 0; i < n_elim && pure; ++i)
        if (m[i] > 0) pure = false;
    if (pure) out.push_back(g);
  }
  return out;
}

SyzygyGenerators syzygies(const std::vector<Polynomial>& gens, Budget& budget) {
  ContextPtr ctx = common_context(gens);
  Field field = gens[0].field();
  MonomialOrder ord = MonomialOrder::grevlex();
  std::size_t r = gens.size();

  auto zero = Polynomial::zero(ctx, field);
  std::vector<OPoly> basis;
  std::vector<std::vector<Polynomial>> cof;  // basis[k] = sum_i cof[k][i] * gens[i]
  for (std::size_t i = 0; i < r; ++i) {
    basis.push_back(to_ordered(gens[i], ord));
    std::vector<Polynomial> row(r, zero);
    row[i] = Polynomial::constant(ctx, Scalar::one(field));
    cof.push_back(std::move(row));
  }

  SyzygyGenerators out;
  auto emit = [&](std::vector<Polynomial> row) {
    bool nonzero = false;
    for (auto& p : row) nonzero = nonzero || !p.is_zero();
    if (nonzero) out.rows.push_back(std::move(row));
  };

  // queue of index pairs; grows as elements are appended
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  auto add_pairs_for = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i)
      if (!basis[i].is_zero()) queue.emplace_back(i, t);
  };
  for (std::size_t t = 1; t < basis.size(); ++t) add_pairs_for(t);

  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [i, j] = queue[q];
    if (basis[i].is_zero() || basis[j].is_zero()) continue;
    budget.tick();
    const Monomial lcm = Monomial::lcm(basis[i].lm(), basis[j].lm());
    if (basis[i].lm().coprime(basis[j].lm())) {
      // Koszul syzygy covers this pair (Buchberger's first criterion).
      std::vector<Polynomial> row(r, zero);
      Polynomial gi = from_ordered(basis[i], ctx, field);
      Polynomial gj = from_ordered(basis[j], ctx, field);
      for (std::size_t a = 0; a < r; ++a) row[a] = gj * cof[i][a] - gi * cof[j][a];
      emit(std::move(row));
      continue;
    }
    Monomial ui = lcm / basis[i].lm();
    Monomial uj = lcm / basis[j].lm();
    Scalar ci = basis[j].lc() / basis[i].lc();
    // sp = c_i * u_i * f_i - u_j * f_j  (leading terms cancel)
    OPoly sp = subtract_scaled(OPoly{}, -ci, ui, basis[i], ord);
    sp = subtract_scaled(sp, Scalar::one(field), uj, basis[j], ord);

    std::vector<Polynomial> combo(r, zero);
    auto mono_i = Polynomial::term(ctx, ci, ui);
    auto mono_j = Polynomial::term(ctx, Scalar::one(field), uj);
    for (std::size_t a = 0; a < r; ++a) combo[a] = mono_i * cof[i][a] - mono_j * cof[j][a];

    std::vector<ReductionStep> trace;
    OPoly h = reduce_full(std::move(sp), basis, ord, budget, &trace);
    for (auto& step : trace) {
      auto mono = Polynomial::term(ctx, step.coeff, step.mono);
      for (std::size_t a = 0; a < r; ++a) combo[a] = combo[a] - mono * cof[step.index][a];
    }
    if (h.is_zero()) {
      emit(std::move(combo));
    } else {
      Scalar inv = h.lc().inverse();
      make_monic(h);
      basis.push_back(std::move(h));
      for (auto& p : combo) p = p * inv;
      cof.push_back(std::move(combo));
      add_pairs_for(basis.size() - 1);
    }
  }
  return out;
}

}  // namespace charclass
