#include "charclass/chow.hpp"

#include <sstream>

namespace charclass {

ChowClass ChowClass::hyperplane(int n, int power, const mpq_class& coeff) {
  ChowClass r(n);
  if (power <= n) r[power] = coeff;
  return r;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
  if (n_ != o.n_) throw UsageError("Chow classes live in different ambients");
  ChowClass r(n_);
  for (int j = 0; j <= n_; ++j) r[j] = c_[static_cast<std::size_t>(j)] + o[j];
  return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
  if (n_ != o.n_) throw UsageError("Chow classes live in different ambients");
  ChowClass r(n_);
  for (int j = 0; j <= n_; ++j) r[j] = c_[static_cast<std::size_t>(j)] - o[j];
  return r;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
  if (n_ != o.n_) throw UsageError("Chow classes live in different ambients");
  ChowClass r(n_);
  for (int a = 0; a <= n_; ++a)
    for (int b = 0; a + b <= n_; ++b)
      r[a + b] += c_[static_cast<std::size_t>(a)] * o[b];
  return r;
}

ChowClass ChowClass::operator*(const mpq_class& s) const {
  ChowClass r(n_);
  for (int j = 0; j <= n_; ++j) r[j] = c_[static_cast<std::size_t>(j)] * s;
  return r;
}

ChowClass ChowClass::inverse() const {
  if (c_[0] == 0) throw UsageError("ChowClass::inverse: constant term vanishes");
  ChowClass r(n_);
  r[0] = mpq_class(1) / c_[0];
  for (int j = 1; j <= n_; ++j) {
    mpq_class acc = 0;
    for (int i = 1; i <= j; ++i) acc += c_[static_cast<std::size_t>(i)] * r[j - i];
    r[j] = -acc / c_[0];
  }
  return r;
}

bool ChowClass::is_integral() const {
  for (auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

std::vector<long long> ChowClass::integer_coeffs() const {
  std::vector<long long> out;
  for (auto& q : c_) {
    if (q.get_den() != 1)
      throw Error(ErrorCode::Internal, "class coefficient is not an integer: " + q.get_str());
    if (!q.get_num().fits_slong_p())
      throw Error(ErrorCode::Internal, "class coefficient overflows");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

std::string ChowClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= n_; ++j) {
    const mpq_class& q = c_[static_cast<std::size_t>(j)];
    if (q == 0) continue;
    if (!first) os << (q > 0 ? " + " : " - ");
    else if (q < 0) os << "-";
    mpq_class a = abs(q);
    if (a != 1 || j == 0) os << a.get_str();
    if (j >= 1) os << "H";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ChowClass chern_of_projective_space(int n) {
  ChowClass h = ChowClass::one(n) + ChowClass::hyperplane(n);
  ChowClass r = ChowClass::one(n);
  for (int i = 0; i <= n; ++i) r = r * h;
  return r;
}

namespace {

mpq_class binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return mpq_class(r);
}

}  // namespace

ChowClass segre_hat(const CycleData& cy, const HypersurfaceData& h) {
  int n = static_cast<int>(h.n);
  // cycle class sum_j a_j h^(j+1) k^(n-j); multiplying by (h+k)^m and keeping
  // k^n needs k^j from the binomial, landing in H^(m+1)
  ChowClass s(n);
  for (int a = 1; a <= n; ++a)
    for (std::size_t j = 0; j < cy.bidegrees.degrees.size(); ++j)
      s[a] += binom(a - 1, static_cast<int>(j)) * mpq_class(static_cast<long>(cy.bidegrees.degrees[j]));
  return s;
}

ChowClass segre_ma_sm(const CycleData& cy, const HypersurfaceData& h, SegreKind kind) {
  if ((kind == SegreKind::Ma) != (cy.kind == CycleKind::Conormal))
    throw UsageError("segre_ma_sm: cycle kind does not match the requested class");
  ChowClass s = segre_hat(cy, h);
  for (int a = 1; a <= static_cast<int>(h.n); ++a)
    if (a % 2 == 0) s[a] = -s[a];
  return s;
}

namespace {

ChowClass class_from_cycle(const CycleData& cy, const HypersurfaceData& h, SegreKind kind) {
  ChowClass c = chern_of_projective_space(static_cast<int>(h.n)) * segre_ma_sm(cy, h, kind);
  if (!c.is_integral())
    throw Error(ErrorCode::Internal, "characteristic class has non-integer coefficients");
  return c;
}

}  // namespace

ChowClass csm_from_cycle(const CycleData& characteristic, const HypersurfaceData& h) {
  return class_from_cycle(characteristic, h, SegreKind::SM);
}

ChowClass cmather_from_cycle(const CycleData& conormal, const HypersurfaceData& h) {
  return class_from_cycle(conormal, h, SegreKind::Ma);
}

ChowClass csm_class(const HypersurfaceData& h, Budget& budget) {
  return csm_from_cycle(charcycle_ideal(h, budget), h);
}

ChowClass cmather_class(const HypersurfaceData& h, Budget& budget) {
  return cmather_from_cycle(conormal_ideal(h, budget), h);
}

ChowClass fulton_class(const HypersurfaceData& h) {
  int n = static_cast<int>(h.n);
  ChowClass dH = ChowClass::hyperplane(n, 1, h.d);
  ChowClass c = chern_of_projective_space(n) * dH * (ChowClass::one(n) + dH).inverse();
  if (!c.is_integral())
    throw Error(ErrorCode::Internal, "Fulton class has non-integer coefficients");
  return c;
}

ChowClass fulton_johnson_class(const HypersurfaceData& h) { return fulton_class(h); }

long long euler_characteristic(const HypersurfaceData& h, Budget& budget) {
  return csm_class(h, budget).integer_coeffs().back();
}

ProjBundleChowRing::ProjBundleChowRing(int n_, int rank_, ChowClass chern_)
    : n(n_), rank(rank_), chern(std::move(chern_)) {
  if (rank < 1) throw UsageError("projective bundle needs positive rank");
  if (chern.dim() != n || chern[0] != 1)
    throw UsageError("c(E) must live in A(P^n) with constant term 1");
}

BundleClass xi_power(const ProjBundleChowRing& ring, int j) {
  BundleClass c;
  c.coeffs.assign(static_cast<std::size_t>(ring.rank), ChowClass(ring.n));
  c.coeffs[0] = ChowClass::one(ring.n);
  for (int i = 0; i < j; ++i) c = xi_times(ring, c);
  return c;
}

BundleClass xi_times(const ProjBundleChowRing& ring, const BundleClass& c) {
  int e = ring.rank - 1;
  BundleClass r;
  r.coeffs.assign(static_cast<std::size_t>(ring.rank), ChowClass(ring.n));
  for (int j = 0; j < e; ++j) r.coeffs[static_cast<std::size_t>(j + 1)] = c.coeffs[static_cast<std::size_t>(j)];
  // xi^(e+1) = -(c_1 xi^e + ... + c_(e+1))
  const ChowClass& top = c.coeffs[static_cast<std::size_t>(e)];
  for (int i = 1; i <= std::min(ring.rank, ring.n); ++i) {
    if (ring.chern[i] == 0) continue;
    ChowClass ci(ring.n);
    ci[i] = ring.chern[i];
    r.coeffs[static_cast<std::size_t>(ring.rank - i)] =
        r.coeffs[static_cast<std::size_t>(ring.rank - i)] - top * ci;
  }
  return r;
}

ChowClass bundle_pushforward(const ProjBundleChowRing& ring, const BundleClass& c) {
  return c.coeffs[static_cast<std::size_t>(ring.rank - 1)];
}

ChowClass shadow(const ProjBundleChowRing& ring, const BundleClass& c) {
  BundleClass acc = c;
  ChowClass total = bundle_pushforward(ring, acc);
  for (int j = 1; j <= ring.n + ring.rank - 1; ++j) {
    acc = xi_times(ring, acc);
    total = total + bundle_pushforward(ring, acc);
  }
  return ring.chern * total;
}

}  // namespace charclass
