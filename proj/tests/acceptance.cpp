// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "charclass/chow.hpp"
#include "charclass/parser.hpp"

using namespace charclass;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body();
  } catch (const Error& e) {
    note = std::string(" (") + e.code_name() + ": " + e.what() + ")";
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++g_failures;
  std::printf("%s criterion %02d: %s [%.1fs]%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), s, note.c_str());
  std::fflush(stdout);
}

ContextPtr p2() { return make_context({"x0", "x1", "x2"}); }
ContextPtr p3() { return make_context({"x0", "x1", "x2", "x3"}); }

Polynomial parse(const std::string& s, const ContextPtr& ctx,
                 const Field& f = Field::rationals()) {
  return parse_polynomial(s, ctx, f);
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& ss, const ContextPtr& ctx,
                                  const Field& f = Field::rationals()) {
  std::vector<Polynomial> out;
  for (auto& s : ss) out.push_back(parse(s, ctx, f));
  return out;
}

// The plane-curve fixture set used across several criteria.
const std::vector<std::string> kPlaneFixtures = {
    "x0+x1+x2", "x0^2+x1^2+x2^2", "x0^3+x1^3+x2^3",
    "x0^3+x1^3-x0*x1*x2",   // nodal cubic
    "x1^2*x2-x0^3",         // cuspidal cubic
    "x0^2*x1+x0*x1^2",      // three concurrent lines x0 x1 (x0+x1)
};

// Independent truncated power-series arithmetic over Q, kept separate from
// the library's Chow-ring code on purpose.
using Series = std::vector<mpq_class>;  // coefficient of H^j at index j

Series series_mul(const Series& a, const Series& b) {
  Series r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series series_inverse(const Series& a) {
  Series r(a.size(), 0);
  r[0] = 1 / a[0];
  for (std::size_t m = 1; m < a.size(); ++m) {
    mpq_class acc = 0;
    for (std::size_t i = 1; i <= m; ++i) acc += a[i] * r[m - i];
    r[m] = -acc / a[0];
  }
  return r;
}

// (1+H)^(n+1) . dH / (1+dH), truncated to H^n, as integer coefficients.
std::vector<long long> smooth_class_oracle(int n, int d) {
  std::size_t len = static_cast<std::size_t>(n) + 1;
  Series euler(len, 0);
  // binomial expansion by repeated multiplication
  euler[0] = 1;
  Series one_plus_h(len, 0);
  one_plus_h[0] = 1;
  if (len > 1) one_plus_h[1] = 1;
  for (int i = 0; i <= n; ++i) euler = series_mul(euler, one_plus_h);
  Series denom(len, 0);
  denom[0] = 1;
  if (len > 1) denom[1] = d;
  Series s = series_mul(euler, series_inverse(denom));
  // multiply by dH: shift up by one
  std::vector<long long> out(len, 0);
  for (std::size_t j = 1; j < len; ++j) {
    mpq_class c = s[j - 1] * d;
    if (c.get_den() != 1) throw std::runtime_error("oracle produced a fraction");
    out[j] = static_cast<long long>(c.get_num().get_si());
  }
  return out;
}

std::string fermat(int n, int d) {
  std::string s;
  for (int i = 0; i <= n; ++i)
    s += (i ? "+" : "") + ("x" + std::to_string(i) + "^" + std::to_string(d));
  return s;
}

}  // namespace

int main() {
  criterion(1, "smooth ground truth vs independent expansion", [] {
    struct Case {
      int n, d;
    };
    for (auto c : {Case{2, 1}, Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
      auto t0 = std::chrono::steady_clock::now();
      HypersurfaceData h =
          make_hypersurface(parse(fermat(c.n, c.d), c.n == 2 ? p2() : p3()));
      std::vector<long long> expect = smooth_class_oracle(c.n, c.d);
      if (csm_class(h).integer_coeffs() != expect) return false;
      if (cmather_class(h).integer_coeffs() != expect) return false;
      if (fulton_class(h).integer_coeffs() != expect) return false;
      if (fulton_johnson_class(h).integer_coeffs() != expect) return false;
      double s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (s >= 60.0) return false;
    }
    return true;
  });

  criterion(2, "Euler characteristics of the singular fixtures", [] {
    struct Case {
      const char* f;
      int n;
      long long chi;
    };
    // three concurrent lines: chi = 4 (three P^1's glued at one common
    // point: 3*2 - 2), confirmed by the normalization formula; the stated
    // fixture value 1 is inconsistent with that oracle and is not used
    for (auto c : {Case{"x0^3+x1^3-x0*x1*x2", 2, 1}, Case{"x1^2*x2-x0^3", 2, 2},
                   Case{"x0^2*x1+x0*x1^2", 2, 4},
                   Case{"x0^2+x1^2+x2^2+x3^2", 3, 4}}) {
      auto t0 = std::chrono::steady_clock::now();
      HypersurfaceData h = make_hypersurface(parse(c.f, c.n == 2 ? p2() : p3()));
      if (euler_characteristic(h) != c.chi) return false;
      double s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (s >= 120.0) return false;
    }
    return true;
  });

  criterion(3, "Mather/SM relation with Eu = multiplicity", [] {
    struct Case {
      const char* f;
      long long eu;
    };
    for (auto c : {Case{"x0^3+x1^3-x0*x1*x2", 2}, Case{"x1^2*x2-x0^3", 2},
                   Case{"x0^2*x1+x0*x1^2", 3}}) {
      HypersurfaceData h = make_hypersurface(parse(c.f, p2()));
      ChowClass diff = cmather_class(h) - csm_class(h);
      // one singular point each: cMa - cSM = (Eu - 1) [p]
      if (diff.integer_coeffs() != std::vector<long long>{0, 0, c.eu - 1}) return false;
    }
    return true;
  });

  criterion(4, "two-path agreement charcycle vs principal transform", [] {
    for (auto& f : kPlaneFixtures) {
      CycleCrossCheck res = cycle_cross_check(make_hypersurface(parse(f, p2())));
      if (!res.match) return false;
      if (res.charcycle_bidegrees.degrees != res.transform_bidegrees.degrees) return false;
    }
    CycleCrossCheck quadric =
        cycle_cross_check(make_hypersurface(parse("x0^2+x1^2+x2^2+x3^2", p3())));
    return quadric.match;
  });

  criterion(5, "quotient-ring blow-up examples", [] {
    auto cxy = make_context({"x", "y"});
    auto gens = parse_all({"x", "y"}, cxy);
    auto rel = parse_all({"x*y"}, cxy);
    auto sym = sym_ideal(gens, rel);
    auto qsym = qsym_affine(gens, rel);
    if (!qsym.ideal.base().equals(sym.ideal.base())) return false;
    auto rees = rees_quotient_ideal(gens, rel);
    Polynomial t0t1 = parse("T0*T1", rees.ambient);
    if (!rees.ideal.base().contains(t0t1)) return false;
    if (proj_saturation(qsym.ideal, false).base().contains(t0t1.map_to(qsym.ambient)))
      return false;

    // coplanar three lines: pure dimension 1
    auto cop = qsym_affine(parse_all({"x", "y"}, cxy),
                           parse_all({"x^2*y + x*y^2"}, cxy));
    if (krull_dim(proj_saturation(cop.ideal, false).base()) - 1 != 1) return false;

    // non-coplanar axes: a component of dimension >= 2
    auto cxyz = make_context({"x", "y", "z"});
    auto axes = qsym_affine(parse_all({"x", "y", "z"}, cxyz),
                            parse_all({"x*y", "y*z", "x*z"}, cxyz));
    return krull_dim(proj_saturation(axes.ideal, false).base()) - 1 >= 2;
  });

  criterion(6, "x-condition and weak-linearity verdicts", [] {
    auto cxy = make_context({"x", "y"});
    if (!xcondition_check(parse("x*y", cxy), false).holds) return false;
    if (!xcondition_check(parse("x0*x1*x2", p2()), true).holds) return false;
    if (!xcondition_check(parse("x1^2*x2-x0^3", p2()), true).holds) return false;
    Polynomial F = parse("x^4+x^3*y^2+y^6", cxy);
    return !weak_linearity_check({F, F.partial(0), F.partial(1)});
  });

  criterion(7, "containment chain Sym <= qSym <= Rees", [] {
    auto chain = [](const std::vector<Polynomial>& gens,
                    const std::vector<Polynomial>& rel) {
      auto sym = sym_ideal(gens, rel);
      auto qsym = qsym_affine(gens, rel);
      auto rees = rees_quotient_ideal(gens, rel);
      for (auto& g : sym.ideal.base().generators())
        if (!qsym.ideal.base().contains(g.map_to(qsym.ambient))) return false;
      for (auto& g : qsym.ideal.base().generators())
        if (!rees.ideal.base().contains(g.map_to(rees.ambient))) return false;
      return true;
    };
    auto cxy = make_context({"x", "y"});
    if (!chain(parse_all({"x", "y"}, cxy), parse_all({"x*y"}, cxy))) return false;
    if (!chain(parse_all({"x^2", "x*y", "y^2"}, cxy), {})) return false;
    if (!chain(parse_all({"x", "y"}, cxy), parse_all({"x^2*y + x*y^2"}, cxy))) return false;
    // jacobian ideals on the hypersurface itself for the singular fixtures
    for (auto& f : {"x0^3+x1^3-x0*x1*x2", "x1^2*x2-x0^3", "x0^2*x1+x0*x1^2"}) {
      HypersurfaceData h = make_hypersurface(parse(f, p2()));
      if (!chain(h.partials, {h.F})) return false;
    }
    return true;
  });

  criterion(8, "ambient independence of the saturated Hilbert series", [] {
    auto c2 = make_context({"x", "y"});
    auto c3 = make_context({"x", "y", "z"});
    auto scale = [](std::map<std::pair<int, int>, long long> num) {
      // multiply the numerator by (1-h) to compare across ambient sizes
      std::map<std::pair<int, int>, long long> next;
      for (auto& [d, c] : num) {
        next[d] += c;
        next[{d.first + 1, d.second}] -= c;
      }
      for (auto it = next.begin(); it != next.end();)
        it = it->second == 0 ? next.erase(it) : std::next(it);
      return next;
    };
    auto agree = [&](const std::vector<std::string>& gens,
                     const std::vector<std::string>& rel2) {
      auto small = qsym_affine(parse_all(gens, c2), parse_all(rel2, c2));
      std::vector<std::string> rel3 = rel2;
      rel3.push_back("z");
      auto large = qsym_affine(parse_all(gens, c3), parse_all(rel3, c3));
      HilbertSeries hs =
          hilbert_series(proj_saturation(small.ideal, false).base());
      HilbertSeries hl =
          hilbert_series(proj_saturation(large.ideal, false).base());
      return hl.h_exponent == hs.h_exponent + 1 && hl.k_exponent == hs.k_exponent &&
             hl.numerator == scale(hs.numerator);
    };
    if (!agree({"x", "y"}, {"x*y"})) return false;
    // nodal cubic in the affine chart x2 = 1
    return agree({"3x^2-y", "3y^2-x"}, {"x^3+y^3-x*y"});
  });

  criterion(9, "multidegree vs randomized linear sections, 3 seeds", [] {
    for (auto& f : kPlaneFixtures) {
      HypersurfaceData h = make_hypersurface(parse(f, p2()));
      for (const CycleData& cy : {conormal_ideal(h), charcycle_ideal(h)})
        for (std::uint64_t seed : {1ull, 42ull, 1009ull})
          if (!(bidegrees_by_sections(cy.ideal, 1, seed) == cy.bidegrees)) return false;
    }
    return true;
  });

  criterion(10, "shadow axioms on twisted bundles over P^2", [] {
    // E = T*P^2 (x) O(d) has rank 2, so xi^0 and xi^1 span the basis; the
    // j = 2 case is covered by rank-3 principal-parts bundles (1+(d-1)H)^3
    ChowClass one = ChowClass::one(2);
    for (int d : {1, 2, 3}) {
      ChowClass c(2);
      c[0] = 1;
      c[1] = 2 * d - 3;
      c[2] = d * d - 3 * d + 3;
      ProjBundleChowRing cotangent(2, 2, c);
      for (int j = 0; j < 2; ++j)
        if (!(shadow(cotangent, xi_power(cotangent, j)) == one)) return false;
      ChowClass l = one + ChowClass::hyperplane(2, 1, d - 1);
      ProjBundleChowRing principal(2, 3, l * l * l);
      for (int j = 0; j < 3; ++j)
        if (!(shadow(principal, xi_power(principal, j)) == one)) return false;
    }
    return true;
  });

  criterion(11, "prime-field runs reproduce rational-mode integers", [] {
    Field big = Field::prime(2147483647);
    for (auto& f : kPlaneFixtures) {
      HypersurfaceData hq = make_hypersurface(parse(f, p2()));
      HypersurfaceData hp = make_hypersurface(parse(f, p2(), big));
      if (csm_class(hq).integer_coeffs() != csm_class(hp).integer_coeffs()) return false;
      if (cmather_class(hq).integer_coeffs() != cmather_class(hp).integer_coeffs())
        return false;
      if (conormal_ideal(hq).bidegrees.degrees != conormal_ideal(hp).bidegrees.degrees)
        return false;
    }
    return true;
  });

  criterion(12, "conormal bidegrees match the dual-degree oracles", [] {
    for (int d : {1, 2, 3}) {
      HypersurfaceData h = make_hypersurface(parse(fermat(2, d), p2()));
      std::vector<long long> expect = {d, static_cast<long long>(d) * (d - 1)};
      if (conormal_ideal(h).bidegrees.degrees != expect) return false;
    }
    HypersurfaceData nodal = make_hypersurface(parse("x0^3+x1^3-x0*x1*x2", p2()));
    if (conormal_ideal(nodal).bidegrees.degrees != std::vector<long long>{3, 4})
      return false;
    HypersurfaceData cusp = make_hypersurface(parse("x1^2*x2-x0^3", p2()));
    return conormal_ideal(cusp).bidegrees.degrees == std::vector<long long>{3, 3};
  });

  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures ? 1 : 0;
}
