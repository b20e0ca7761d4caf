#include "charclass/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace charclass {

namespace {

class StageClock {
public:
  explicit StageClock(ClassReport& report) : report_(report) {}
  template <typename F>
  auto time(const std::string& stage, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    auto t1 = std::chrono::steady_clock::now();
    report_.timings_ms.emplace_back(
        stage, std::chrono::duration<double, std::milli>(t1 - t0).count());
    return result;
  }

private:
  ClassReport& report_;
};

}  // namespace

ClassReport build_report(const Polynomial& F, std::uint64_t seed, Budget& budget) {
  ClassReport r;
  r.polynomial = F.to_string();
  r.vars = F.context()->names();
  r.field = F.field().to_string();
  r.seed = seed;
  r.budget_limit = budget.limit();

  StageClock clock(r);
  HypersurfaceData h =
      clock.time("validate", [&] { return make_hypersurface(F, budget); });
  r.reduced = true;
  r.degree = h.d;
  r.ambient_dim = static_cast<int>(h.n);

  CycleData con = clock.time("conormal", [&] { return conormal_ideal(h, budget); });
  CycleData cc = clock.time("charcycle", [&] { return charcycle_ideal(h, budget); });
  r.conormal_bidegrees = con.bidegrees.degrees;
  r.charcycle_bidegrees = cc.bidegrees.degrees;

  r.csm = clock.time("csm", [&] { return csm_from_cycle(cc, h).integer_coeffs(); });
  r.cmather =
      clock.time("cmather", [&] { return cmather_from_cycle(con, h).integer_coeffs(); });
  r.fulton = clock.time("fulton", [&] { return fulton_class(h).integer_coeffs(); });
  r.fulton_johnson = r.fulton;
  r.euler_characteristic = r.csm.back();

  r.xcondition = clock.time("xcondition", [&] {
    return xcondition_check(h.F, /*projective=*/true, budget).holds;
  });
  r.weak_linearity =
      clock.time("weaklin", [&] { return weak_linearity_check(h.partials, budget); });
  r.printran_crosscheck =
      clock.time("crosscheck", [&] { return cycle_cross_check(h, budget).match; });
  return r;
}

std::string ClassReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["input"] = {{"polynomial", polynomial},
                {"vars", vars},
                {"field", field},
                {"seed", seed},
                {"budget", budget_limit}};
  j["degree"] = degree;
  j["ambient_dim"] = ambient_dim;
  j["bidegrees"] = {{"conormal", conormal_bidegrees}, {"charcycle", charcycle_bidegrees}};
  j["classes"] = {{"csm", csm},
                  {"cmather", cmather},
                  {"fulton", fulton},
                  {"fulton_johnson", fulton_johnson}};
  j["euler_characteristic"] = euler_characteristic;
  j["verdicts"] = {{"reduced", reduced},
                   {"xcondition", xcondition},
                   {"weak_linearity", weak_linearity},
                   {"printran_crosscheck", printran_crosscheck}};
  nlohmann::ordered_json t;
  for (auto& [stage, ms] : timings_ms) t[stage] = ms;
  j["timings_ms"] = t;
  return j.dump(2);
}

namespace {

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

std::string ClassReport::to_text() const {
  std::ostringstream os;
  os << "hypersurface       " << polynomial << "  (degree " << degree << " in P^"
     << ambient_dim << ", " << field << ")\n";
  os << "conormal bidegrees " << join(conormal_bidegrees) << "\n";
  os << "charcycle bidegrees" << " " << join(charcycle_bidegrees) << "\n";
  os << "csm                " << join(csm) << "\n";
  os << "cmather            " << join(cmather) << "\n";
  os << "fulton             " << join(fulton) << "\n";
  os << "fulton_johnson     " << join(fulton_johnson) << "\n";
  os << "euler              " << euler_characteristic << "\n";
  os << "reduced            " << (reduced ? "true" : "false") << "\n";
  os << "xcondition         " << (xcondition ? "true" : "false") << "\n";
  os << "weak_linearity     " << (weak_linearity ? "true" : "false") << "\n";
  os << "crosscheck         " << (printran_crosscheck ? "true" : "false") << "\n";
  for (auto& [stage, ms] : timings_ms)
    os << "time." << stage << " " << ms << " ms\n";
  return os.str();
}

}  // namespace charclass
