#include "charclass/cycles.hpp"

namespace charclass {

HypersurfaceData make_hypersurface(const Polynomial& F, Budget& budget) {
  if (F.is_zero() || F.is_constant())
    throw UsageError("hypersurface: F must be nonconstant");
  if (!F.is_homogeneous())
    throw UsageError("hypersurface: F must be homogeneous");
  const ContextPtr& base = F.context();
  const Field& field = F.field();
  HypersurfaceData h{F, base->size() - 1, F.total_degree(), {}, Ideal()};
  if (h.n < 1) throw UsageError("hypersurface: need at least two variables");
  if (field.kind == Field::Kind::Prime && static_cast<std::uint64_t>(h.d) % field.p == 0)
    throw PreconditionError("EULER",
                            "Euler relation unavailable: characteristic divides deg F");
  for (std::size_t i = 0; i < base->size(); ++i) h.partials.push_back(F.partial(i));
  h.jacobian = Ideal(h.partials, base, field);
  // reducedness: the singular locus must have codimension >= 2, i.e. the
  // affine cone over it has dimension <= n - 1
  if (krull_dim(h.jacobian, budget) > static_cast<int>(h.n) - 1)
    throw PreconditionError("NON_REDUCED", "non-reduced hypersurface rejected");
  if (!h.jacobian.contains(F, budget))
    throw Error(ErrorCode::Internal, "Euler identity failed: F not in its jacobian ideal");
  return h;
}

namespace {

MultiDegree cycle_bidegrees(const BigradedIdeal& sat, const HypersurfaceData& h,
                            Budget& budget) {
  MultiDegree md = multidegree(sat, budget);
  if (md.codim != static_cast<int>(h.n) + 1)
    throw Error(ErrorCode::Internal,
                "cycle has unexpected dimension (codim " + std::to_string(md.codim) + ")");
  return md;
}

}  // namespace

CycleData conormal_ideal(const HypersurfaceData& h, Budget& budget) {
  const ContextPtr& base = h.F.context();
  const Field& field = h.F.field();
  std::size_t m = h.n + 1;
  ContextPtr ambient = presentation_context(*base, m);

  std::vector<Polynomial> gens = {h.F.map_to(ambient)};
  std::vector<Polynomial> dF;
  for (auto& p : h.partials) dF.push_back(p.map_to(ambient));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Polynomial Ti = Polynomial::variable(ambient, field, base->size() + i);
      Polynomial Tj = Polynomial::variable(ambient, field, base->size() + j);
      Polynomial minor = Ti * dF[j] - Tj * dF[i];
      if (!minor.is_zero()) gens.push_back(std::move(minor));
    }

  Ideal raw(std::move(gens), ambient, field);
  std::vector<Polynomial> jac;
  for (auto& p : h.partials) jac.push_back(p.map_to(ambient));
  Ideal sat = saturate(raw, Ideal(std::move(jac), ambient, field), budget);
  BigradedIdeal bi = BigradedIdeal(std::move(sat), base->size(), m).saturate_irrelevant(budget);

  MultiDegree md = cycle_bidegrees(bi, h, budget);
  if (!md.degrees.empty() && md.degrees[0] != h.d)
    throw Error(ErrorCode::Internal, "conormal cycle does not dominate X with degree d");
  return CycleData{CycleKind::Conormal, std::move(bi), std::move(md)};
}

CycleData charcycle_ideal(const HypersurfaceData& h, Budget& budget) {
  const ContextPtr& base = h.F.context();
  const Field& field = h.F.field();
  BlowupPresentation rees = rees_ideal(h.partials, budget);

  Polynomial euler = Polynomial::zero(rees.ambient, field);
  for (std::size_t i = 0; i < base->size(); ++i)
    euler = euler + Polynomial::variable(rees.ambient, field, i) *
                        Polynomial::variable(rees.ambient, field, base->size() + i);

  std::vector<Polynomial> gens = rees.ideal.base().generators();
  gens.push_back(std::move(euler));
  BigradedIdeal bi =
      BigradedIdeal(Ideal(std::move(gens), rees.ambient, field), base->size(), h.n + 1)
          .saturate_irrelevant(budget);
  MultiDegree md = cycle_bidegrees(bi, h, budget);
  return CycleData{CycleKind::Characteristic, std::move(bi), std::move(md)};
}

CycleCrossCheck cycle_cross_check(const HypersurfaceData& h, Budget& budget) {
  CycleData cc = charcycle_ideal(h, budget);
  BigradedIdeal pt = principal_transform(h.F, h.partials, /*projective=*/true, budget);

  CycleCrossCheck report;
  report.charcycle_bidegrees = cc.bidegrees;
  report.transform_bidegrees = multidegree(pt, budget);
  report.match = cc.ideal.base().equals(pt.base(), budget) &&
                 report.charcycle_bidegrees == report.transform_bidegrees;
  if (!report.match) {
    for (auto& g : cc.ideal.base().gb(MonomialOrder::grevlex(), budget).generators())
      if (!pt.base().contains(g, budget)) {
        report.first_difference = g;
        break;
      }
    if (!report.first_difference)
      for (auto& g : pt.base().gb(MonomialOrder::grevlex(), budget).generators())
        if (!cc.ideal.base().contains(g, budget)) {
          report.first_difference = g;
          break;
        }
  }
  return report;
}

}  // namespace charclass
