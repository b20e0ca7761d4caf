#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charclass/ideal.hpp"
#include "helpers.hpp"

using namespace charclass;
using namespace charclass::testing;

namespace {

Scalar random_scalar(std::mt19937_64& rng, const Field& f) {
  if (f.kind == Field::Kind::Prime)
    return Scalar::from_int(static_cast<long>(rng() % 1000) - 500, f);
  long num = static_cast<long>(rng() % 2001) - 1000;
  long den = static_cast<long>(rng() % 50) + 1;
  return Scalar::from_mpq(mpq_class(num, den), f);
}

}  // namespace

TEST_CASE("field axioms hold on random triples") {
  std::mt19937_64 rng(42);
  for (const Field& f : {Field::rationals(), Field::prime(65537), Field::prime((1ull << 31) - 1)}) {
    for (int i = 0; i < 200; ++i) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("prime field validation") {
  CHECK_THROWS_AS(Field::prime(4), UsageError);
  CHECK_THROWS_AS(Field::prime(1), UsageError);
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime((1ull << 31) - 1));
}

TEST_CASE("polynomial arithmetic examples") {
  auto ctx = ctx_xy();
  CHECK(P("x+y", ctx) + P("x-y", ctx) == P("2x", ctx));
  CHECK(P("x+y", ctx) * P("x-y", ctx) == P("x^2-y^2", ctx));

  Field f5 = Field::prime(5);
  CHECK(P("2x", ctx, f5) * P("3x", ctx, f5) == P("x^2", ctx, f5));
}

TEST_CASE("context mismatch is a usage error") {
  CHECK_THROWS_AS(P("x", ctx_xy()) + P("x", ctx_xyz()), UsageError);
}

TEST_CASE("partial derivatives") {
  auto ctx = ctx_xyz();
  CHECK(P("x^3-y^2*z", ctx).partial(0) == P("3x^2", ctx));
  CHECK(P("x*y", ctx).partial(0) == P("y", ctx));
  auto c2 = ctx_xy();
  CHECK(P("x^4+x^3*y^2+y^6", c2).partial(1) == P("2x^3*y+6y^5", c2));
}

TEST_CASE("substitution") {
  auto ctx = ctx_xy();
  CHECK(P("x^2+y^2", ctx).substitute({{0, P("1", ctx)}}) == P("1+y^2", ctx));
  CHECK(P("x*y", ctx).substitute({{0, P("0", ctx)}}).is_zero());

  // Euler identity by direct expansion for F = x^3
  Polynomial F = P("x^3", ctx);
  Polynomial lhs = P("x", ctx) * F.partial(0) + P("y", ctx) * F.partial(1);
  CHECK(lhs == P("3x^3", ctx));
}

TEST_CASE("Euler identity on random homogeneous forms") {
  std::mt19937_64 rng(7);
  auto ctx = ctx_xyz();
  Field q = Field::rationals();
  for (int d = 1; d <= 4; ++d)
    for (int trial = 0; trial < 5; ++trial) {
      Polynomial F = random_form(ctx, q, {d, 0}, rng());
      Polynomial sum(ctx, q);
      for (std::size_t i = 0; i < 3; ++i)
        sum = sum + Polynomial::variable(ctx, q, i) * F.partial(i);
      CHECK(sum == F * Scalar::from_int(d, q));
    }
}

TEST_CASE("random_form shape and determinism") {
  auto ctx = make_bigraded_context({"x0", "x1", "x2"}, {"T0", "T1", "T2"});
  Field q = Field::rationals();
  Polynomial lin = random_form(ctx, q, {1, 0}, 99);
  CHECK(lin.term_count() == 3);
  CHECK(lin.bidegree() == std::pair<int, int>{1, 0});
  CHECK(random_form(ctx, q, {1, 0}, 99) == lin);
  CHECK(random_form(ctx, q, {1, 0}, 100) != lin);

  Polynomial tform = random_form(ctx, q, {0, 1}, 5);
  CHECK(tform.bidegree() == std::pair<int, int>{0, 1});
  for (auto& [m, c] : tform.terms())
    for (std::size_t i = 0; i < 3; ++i) CHECK(m[i] == 0);
}

TEST_CASE("monomial orders are multiplicative total orders with 1 minimal") {
  std::mt19937_64 rng(3);
  std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                                       MonomialOrder::block({1, 2})};
  auto random_mono = [&] {
    Monomial m(3);
    for (int i = 0; i < 3; ++i) m[i] = static_cast<int>(rng() % 5);
    return m;
  };
  Monomial one(3);
  for (auto& ord : orders)
    for (int i = 0; i < 300; ++i) {
      Monomial a = random_mono(), b = random_mono(), w = random_mono();
      int c = ord.compare(a, b);
      CHECK(c == -ord.compare(b, a));
      if (c == 0) CHECK(a == b);
      if (c < 0) CHECK(ord.less(a * w, b * w));
      if (!a.is_one()) CHECK(ord.less(one, a));
    }
}

TEST_CASE("parser round trips and errors") {
  auto ctx = ctx_p2();
  CHECK(P("x0^3 - 2*x1^2*x2", ctx) == P("x0^3-2x1^2x2", ctx));
  CHECK(P("1/2 x0 + 1/2 x0", ctx) == P("x0", ctx));
  CHECK(P("(x0+x1)^2", ctx) == P("x0^2+2*x0*x1+x1^2", ctx));
  CHECK_THROWS_AS(P("x0 +", ctx), UsageError);
  CHECK_THROWS_AS(P("w^2", ctx), UsageError);
}

TEST_CASE("change_field reduces rational coefficients") {
  auto ctx = ctx_xy();
  Field f7 = Field::prime(7);
  CHECK(P("8x + 1/2 y", ctx).change_field(f7) == P("x + 4y", ctx, f7));
}
