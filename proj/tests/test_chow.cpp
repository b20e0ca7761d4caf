#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charclass/chow.hpp"
#include "helpers.hpp"

using namespace charclass;
using namespace charclass::testing;

namespace {

ChowClass cls(int n, std::vector<long long> coeffs) {
  ChowClass r(n);
  for (int j = 0; j <= n; ++j)
    r[j] = static_cast<long>(coeffs[static_cast<std::size_t>(j)]);
  return r;
}

}  // namespace

TEST_CASE("Chow ring arithmetic in A(P^n)") {
  ChowClass h = ChowClass::hyperplane(3);
  ChowClass one = ChowClass::one(3);
  CHECK((one + h) * (one + h) == cls(3, {1, 2, 1, 0}));
  // truncation past H^3
  ChowClass p = (one + h) * (one + h) * (one + h) * (one + h) * (one + h);
  CHECK(p == cls(3, {1, 5, 10, 10}));

  // inverse is a genuine unit mod H^4
  ChowClass u = one + h * mpq_class(2) + ChowClass::hyperplane(3, 2, 7);
  CHECK(u * u.inverse() == one);

  CHECK(chern_of_projective_space(2) == cls(2, {1, 3, 3}));

  ChowClass frac(2);
  frac[0] = mpq_class(1, 2);
  CHECK(!frac.is_integral());
  CHECK_THROWS_AS(frac.integer_coeffs(), Error);
}

TEST_CASE("plane curve class fixtures") {
  auto p2 = ctx_p2();
  struct Fix {
    const char* f;
    std::vector<long long> csm, cma;
    long long chi;
  };
  for (auto& fx : {Fix{"x0+x1+x2", {0, 1, 2}, {0, 1, 2}, 2},
                   Fix{"x0^2+x1^2+x2^2", {0, 2, 2}, {0, 2, 2}, 2},
                   Fix{"x0^3+x1^3+x2^3", {0, 3, 0}, {0, 3, 0}, 0},
                   Fix{"x0^3+x1^3-x0*x1*x2", {0, 3, 1}, {0, 3, 2}, 1},
                   Fix{"x1^2*x2-x0^3", {0, 3, 2}, {0, 3, 3}, 2},
                   Fix{"x0^2*x1+x0*x1^2", {0, 3, 4}, {0, 3, 6}, 4}}) {
    HypersurfaceData h = make_hypersurface(P(fx.f, p2));
    CHECK(csm_class(h).integer_coeffs() == fx.csm);
    CHECK(cmather_class(h).integer_coeffs() == fx.cma);
    CHECK(euler_characteristic(h) == fx.chi);
  }
}

TEST_CASE("Fulton class and Milnor numbers") {
  auto p2 = ctx_p2();
  // Fulton class depends only on (n, d); csm - fulton counts Milnor numbers
  struct Fix {
    const char* f;
    long long milnor;
  };
  for (auto& fx : {Fix{"x0^2+x1^2+x2^2", 0},
                   Fix{"x0^3+x1^3-x0*x1*x2", 1},   // one node
                   Fix{"x1^2*x2-x0^3", 2},         // one cusp
                   Fix{"x0^2*x1+x0*x1^2", 4}}) {   // three concurrent lines
    HypersurfaceData h = make_hypersurface(P(fx.f, p2));
    ChowClass fulton = fulton_class(h);
    CHECK(fulton == fulton_johnson_class(h));
    ChowClass diff = csm_class(h) - fulton;
    CHECK(diff.integer_coeffs() == std::vector<long long>{0, 0, fx.milnor});
  }
}

TEST_CASE("local Euler obstructions reconcile csm and cMa") {
  auto p2 = ctx_p2();
  struct Fix {
    const char* f;
    long long eu;  // local Euler obstruction at the unique singular point
  };
  for (auto& fx : {Fix{"x0^3+x1^3-x0*x1*x2", 2},
                   Fix{"x1^2*x2-x0^3", 2},
                   Fix{"x0^2*x1+x0*x1^2", 3}}) {
    HypersurfaceData h = make_hypersurface(P(fx.f, p2));
    ChowClass diff = csm_class(h) - cmather_class(h);
    // csm - cMa = (1 - Eu) [p] supported at the singular point
    CHECK(diff.integer_coeffs() == std::vector<long long>{0, 0, 1 - fx.eu});
  }
}

TEST_CASE("smooth hypersurfaces match the adjunction expansion") {
  struct Fix {
    int n;
    const char* f;
  };
  auto p2 = ctx_p2();
  auto p3 = ctx_p3();
  for (auto& fx : {Fix{2, "x0+x1+x2"}, Fix{2, "x0^2+x1^2+x2^2"},
                   Fix{2, "x0^3+x1^3+x2^3"}, Fix{3, "x0+x1+x2+x3"},
                   Fix{3, "x0^2+x1^2+x2^2+x3^2"}}) {
    HypersurfaceData h = make_hypersurface(P(fx.f, fx.n == 2 ? p2 : p3));
    // c(TX) cap [X] = (1+H)^(n+1) / (1+dH) . dH, expanded independently
    ChowClass dh = ChowClass::hyperplane(fx.n, 1, h.d);
    ChowClass expect =
        chern_of_projective_space(fx.n) * (ChowClass::one(fx.n) + dh).inverse() * dh;
    ChowClass csm = csm_class(h);
    CHECK(csm == expect);
    CHECK(csm == cmather_class(h));
    CHECK(csm == fulton_class(h));
  }
}

TEST_CASE("segre kind must match the cycle kind") {
  auto p2 = ctx_p2();
  HypersurfaceData h = make_hypersurface(P("x0^2+x1^2+x2^2", p2));
  CycleData con = conormal_ideal(h);
  CHECK_THROWS_AS(segre_ma_sm(con, h, SegreKind::SM), UsageError);
}

TEST_CASE("projective bundle pushforward basics") {
  // O + O over P^1: xi^2 = 0, eps_*(xi) = [P^1]
  ProjBundleChowRing trivial(1, 2, ChowClass::one(1));
  CHECK(bundle_pushforward(trivial, xi_power(trivial, 1)) == ChowClass::one(1));
  CHECK(bundle_pushforward(trivial, xi_power(trivial, 0)) == ChowClass(1));

  // xi^rank reduces through the Grothendieck relation
  ProjBundleChowRing tw(1, 2, cls(1, {1, 3}));
  BundleClass xi2 = xi_times(tw, xi_power(tw, 1));
  // xi^2 = -c1 xi (c2 = 0 on P^1 for this choice)
  CHECK(xi2.coeffs[0] == ChowClass(1));
  CHECK(xi2.coeffs[1] == ChowClass::hyperplane(1, 1, -3));
}

TEST_CASE("shadow of xi^j cap [P(E)] is the fundamental class") {
  // rank-2 twisted cotangent bundles over P^2
  for (int d : {1, 2, 3}) {
    ChowClass c(2);
    c[0] = 1;
    c[1] = 2 * d - 3;
    c[2] = d * d - 3 * d + 3;
    ProjBundleChowRing ring(2, 2, c);
    for (int j = 0; j < 2; ++j)
      CHECK(shadow(ring, xi_power(ring, j)) == ChowClass::one(2));
  }
  // rank-3 principal parts bundles: c = (1 + (d-1)H)^3
  for (int d : {1, 2, 3}) {
    ChowClass l = ChowClass::one(2) + ChowClass::hyperplane(2, 1, d - 1);
    ProjBundleChowRing ring(2, 3, l * l * l);
    for (int j = 0; j < 3; ++j)
      CHECK(shadow(ring, xi_power(ring, j)) == ChowClass::one(2));
  }
}

TEST_CASE("classes over a large prime field agree with the rational run") {
  auto p2q = ctx_p2();
  Field big = Field::prime(2147483647);
  for (const char* f : {"x0^3+x1^3-x0*x1*x2", "x1^2*x2-x0^3"}) {
    HypersurfaceData hq = make_hypersurface(P(f, p2q));
    HypersurfaceData hp = make_hypersurface(P(f, p2q, big));
    CHECK(csm_class(hq).integer_coeffs() == csm_class(hp).integer_coeffs());
    CHECK(cmather_class(hq).integer_coeffs() == cmather_class(hp).integer_coeffs());
  }
}

TEST_CASE("sym presentation of the cusp singularity matches the cycle") {
  // the partials form an ideal of linear type on the cuspidal cubic, so the
  // Sym-based presentation already has the characteristic-cycle bidegrees
  auto p2 = ctx_p2();
  HypersurfaceData h = make_hypersurface(P("x1^2*x2-x0^3", p2));
  auto sym = sym_ideal(h.partials, {h.F});
  BigradedIdeal sat = proj_saturation(sym.ideal, true);
  CHECK(multidegree(sat).degrees == charcycle_ideal(h).bidegrees.degrees);
}
