#include "charclass/blowup.hpp"

#include <algorithm>

namespace charclass {

namespace {

std::vector<std::string> fresh_names(const VarContext& base, std::size_t count,
                                     const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string name = stem + std::to_string(i);
    while (base.index_of(name)) name += "_";
    out.push_back(std::move(name));
  }
  return out;
}

ContextPtr common_base(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw UsageError("generator list must be nonempty");
  for (auto& g : gens)
    if (!same_context(g.context(), gens[0].context())) throw UsageError("generators must share a context");
  return gens[0].context();
}

}  // namespace

ContextPtr presentation_context(const VarContext& base, std::size_t n_t,
                                const std::string& stem) {
  std::vector<std::string> x(base.names());
  return make_bigraded_context(x, fresh_names(base, n_t, stem));
}

namespace {

BlowupPresentation rees_presentation(const std::vector<Polynomial>& gens,
                                     const std::vector<Polynomial>& quotient_rel,
                                     Budget& budget) {
  ContextPtr base = common_base(gens);
  const Field& field = gens[0].field();
  std::size_t m = gens.size();
  ContextPtr ambient = presentation_context(*base, m);

  // graph ideal <T_i - t f_i> in [@t | x | T], then eliminate t
  std::vector<std::string> elim_names = {"@t"};
  for (auto& n : ambient->names()) elim_names.push_back(n);
  std::vector<std::pair<int, int>> elim_weights = {{0, 0}};
  for (std::size_t i = 0; i < ambient->size(); ++i) elim_weights.push_back(ambient->weight(i));
  ContextPtr elim_ctx = make_context(std::move(elim_names), {1, ambient->size()},
                                     std::move(elim_weights));

  Polynomial t = Polynomial::variable(elim_ctx, field, 0);
  std::vector<Polynomial> graph;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial Ti = Polynomial::variable(elim_ctx, field, 1 + base->size() + i);
    graph.push_back(Ti - t * gens[i].map_to(elim_ctx));
    degrees.push_back(std::max(0, gens[i].total_degree()));
  }
  for (auto& k : quotient_rel) graph.push_back(k.map_to(elim_ctx));
  std::vector<Polynomial> kernel = eliminate(graph, 1, budget);
  std::vector<Polynomial> out;
  for (auto& p : kernel) out.push_back(p.map_to(ambient));
  Ideal ideal(std::move(out), ambient, field);
  return BlowupPresentation{BlowupKind::Rees, ambient,
                            BigradedIdeal(std::move(ideal), base->size(), m),
                            std::move(degrees)};
}

}  // namespace

BlowupPresentation rees_ideal(const std::vector<Polynomial>& gens, Budget& budget) {
  return rees_presentation(gens, {}, budget);
}

BlowupPresentation rees_quotient_ideal(const std::vector<Polynomial>& gens,
                                       const std::vector<Polynomial>& quotient_rel,
                                       Budget& budget) {
  return rees_presentation(gens, quotient_rel, budget);
}

BlowupPresentation sym_ideal(const std::vector<Polynomial>& gens,
                             const std::vector<Polynomial>& quotient_rel, Budget& budget) {
  ContextPtr base = common_base(gens);
  const Field& field = gens[0].field();
  std::size_t m = gens.size();
  ContextPtr ambient = presentation_context(*base, m);

  std::vector<Polynomial> lifted = gens;
  for (auto& k : quotient_rel) lifted.push_back(k.map_to(base));
  SyzygyGenerators syz = syzygies(lifted, budget);

  std::vector<Polynomial> out;
  for (auto& k : quotient_rel) out.push_back(k.map_to(ambient));
  for (auto& row : syz.rows) {
    Polynomial form = Polynomial::zero(ambient, field);
    for (std::size_t i = 0; i < m; ++i) {
      Polynomial Ti = Polynomial::variable(ambient, field, base->size() + i);
      form = form + row[i].map_to(ambient) * Ti;
    }
    if (!form.is_zero()) out.push_back(std::move(form));
  }
  std::vector<int> degrees;
  for (auto& g : gens) degrees.push_back(std::max(0, g.total_degree()));
  Ideal ideal(std::move(out), ambient, field);
  return BlowupPresentation{BlowupKind::Sym, ambient,
                            BigradedIdeal(std::move(ideal), base->size(), m),
                            std::move(degrees)};
}

BlowupPresentation qsym_affine(const std::vector<Polynomial>& gens,
                               const std::vector<Polynomial>& quotient_rel, Budget& budget) {
  ContextPtr base = common_base(gens);
  const Field& field = gens[0].field();
  std::size_t m = gens.size();

  BlowupPresentation sym = sym_ideal(gens, quotient_rel, budget);
  ContextPtr ambient = sym.ambient;

  // Rees ideal of <gens> + K with auxiliary T-variables for the K-generators,
  // then kill those T-variables.
  std::vector<Polynomial> lifted = gens;
  for (auto& k : quotient_rel) lifted.push_back(k.map_to(base));
  BlowupPresentation rees = rees_ideal(lifted, budget);

  std::vector<Polynomial> out = sym.ideal.base().generators();
  std::map<std::size_t, Polynomial> kill;
  for (std::size_t j = m; j < lifted.size(); ++j)
    kill.emplace(base->size() + j, Polynomial::zero(rees.ambient, field));
  for (auto& g : rees.ideal.base().generators()) {
    Polynomial mapped = g.substitute(kill).map_to(ambient);
    if (!mapped.is_zero()) out.push_back(std::move(mapped));
  }
  Ideal ideal(std::move(out), ambient, field);
  return BlowupPresentation{BlowupKind::QSym, ambient,
                            BigradedIdeal(std::move(ideal), base->size(), m),
                            sym.generator_degrees};
}

BigradedIdeal proj_saturation(const BigradedIdeal& I, bool projective, Budget& budget) {
  Ideal s = saturate(I.base(), I.t_irrelevant(), budget);
  if (projective) s = saturate(s, BigradedIdeal(s, I.x_count(), I.t_count()).x_irrelevant(), budget);
  return BigradedIdeal(std::move(s), I.x_count(), I.t_count());
}

BigradedIdeal principal_transform(const Polynomial& F, const std::vector<Polynomial>& y_gens,
                                  bool projective, Budget& budget) {
  ContextPtr base = common_base(y_gens);
  const Field& field = F.field();
  Ideal Y(y_gens, base, field);
  if (!Y.contains(F, budget))
    throw PreconditionError("NOT_IN_IDEAL", "principal_transform: F does not lie in <y_gens>");

  BlowupPresentation rees = rees_ideal(y_gens, budget);
  std::vector<Polynomial> total = rees.ideal.base().generators();
  total.push_back(F.map_to(rees.ambient));
  Ideal total_ideal(std::move(total), rees.ambient, field);

  std::vector<Polynomial> pulled;
  for (auto& g : y_gens) pulled.push_back(g.map_to(rees.ambient));
  Ideal exceptional(std::move(pulled), rees.ambient, field);

  Ideal residual = ideal_quotient(total_ideal, exceptional, budget);
  BigradedIdeal out(std::move(residual), base->size(), y_gens.size());
  return proj_saturation(out, projective, budget);
}

XConditionResult xcondition_check(const Polynomial& F, bool projective, Budget& budget) {
  if (F.is_zero()) throw UsageError("xcondition_check: F must be nonzero");
  ContextPtr base = F.context();
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < base->size(); ++i) partials.push_back(F.partial(i));
  std::vector<Polynomial> rel = {F};

  BlowupPresentation sym = sym_ideal(partials, rel, budget);
  BlowupPresentation qsym = qsym_affine(partials, rel, budget);

  BigradedIdeal sym_sat = proj_saturation(sym.ideal, projective, budget);
  BigradedIdeal qsym_sat = proj_saturation(qsym.ideal, projective, budget);

  XConditionResult res;
  res.holds = sym_sat.base().equals(qsym_sat.base(), budget);
  if (!res.holds) {
    // qSym contains Sym; a witness is a qSym saturation generator outside Sym's
    for (auto& g : qsym_sat.base().gb(MonomialOrder::grevlex(), budget).generators())
      if (!sym_sat.base().contains(g, budget)) {
        res.witness = g;
        break;
      }
    if (!res.witness)
      for (auto& g : sym_sat.base().gb(MonomialOrder::grevlex(), budget).generators())
        if (!qsym_sat.base().contains(g, budget)) {
          res.witness = g;
          break;
        }
  }
  return res;
}

bool weak_linearity_check(const std::vector<Polynomial>& gens, Budget& budget) {
  BlowupPresentation sym = sym_ideal(gens, {}, budget);
  BlowupPresentation rees = rees_ideal(gens, budget);
  BigradedIdeal sym_sat = proj_saturation(sym.ideal, /*projective=*/false, budget);
  BigradedIdeal rees_sat = proj_saturation(rees.ideal, /*projective=*/false, budget);
  return sym_sat.base().equals(rees_sat.base(), budget);
}

}  // namespace charclass
