#ifndef CHARCLASS_TESTS_HELPERS_HPP
#define CHARCLASS_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "charclass/parser.hpp"

namespace charclass::testing {

inline ContextPtr ctx_xy() { return make_context({"x", "y"}); }
inline ContextPtr ctx_xyz() { return make_context({"x", "y", "z"}); }
inline ContextPtr ctx_p2() { return make_context({"x0", "x1", "x2"}); }
inline ContextPtr ctx_p3() { return make_context({"x0", "x1", "x2", "x3"}); }

inline Polynomial P(const std::string& s, const ContextPtr& ctx,
                    const Field& f = Field::rationals()) {
  return parse_polynomial(s, ctx, f);
}

inline std::vector<Polynomial> Ps(const std::vector<std::string>& ss, const ContextPtr& ctx,
                                  const Field& f = Field::rationals()) {
  std::vector<Polynomial> out;
  for (auto& s : ss) out.push_back(P(s, ctx, f));
  return out;
}

}  // namespace charclass::testing

#endif
