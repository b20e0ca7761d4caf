#ifndef CHARCLASS_REPORT_HPP
#define CHARCLASS_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "charclass/chow.hpp"

namespace charclass {

// Structured result bundle for the full pipeline. Self-contained: re-running
// with the echoed input reproduces it bit-for-bit for a fixed seed.
struct ClassReport {
  static constexpr int kSchema = 1;

  // input echo
  std::string polynomial;
  std::vector<std::string> vars;
  std::string field;
  std::uint64_t seed = 0;
  std::uint64_t budget_limit = 0;

  int degree = 0;
  int ambient_dim = 0;

  std::vector<long long> conormal_bidegrees;
  std::vector<long long> charcycle_bidegrees;

  std::vector<long long> csm;
  std::vector<long long> cmather;
  std::vector<long long> fulton;
  std::vector<long long> fulton_johnson;
  long long euler_characteristic = 0;

  bool reduced = false;
  bool xcondition = false;
  bool weak_linearity = false;
  bool printran_crosscheck = false;

  std::vector<std::pair<std::string, double>> timings_ms;

  std::string to_json() const;
  std::string to_text() const;
};

// Runs the full pipeline: hypersurface validation, both cycles, all four
// classes, and the three verdict checks, with per-stage timings.
ClassReport build_report(const Polynomial& F, std::uint64_t seed,
                         Budget& budget = Budget::current());

}  // namespace charclass

#endif
