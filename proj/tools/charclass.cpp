// Command-line front end: parses a hypersurface or generator list, runs the
// requested construction, and prints a JSON (or plain-text) report.

#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charclass/parser.hpp"
#include "charclass/report.hpp"

using namespace charclass;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string expr;
  std::string vars;
  std::string mod;             // extra quotient relations for sym/qsym
  std::string field_spec = "q";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::uint64_t budget = 0;    // 0 = keep default / env value
  bool affine = false;
};

Field parse_field(const std::string& spec) {
  if (spec == "q") return Field::rationals();
  if (spec.rfind("fp:", 0) == 0) {
    try {
      return Field::prime(std::stoull(spec.substr(3)));
    } catch (const std::invalid_argument&) {
      throw UsageError("bad prime in --field " + spec);
    } catch (const std::out_of_range&) {
      throw UsageError("prime out of range in --field " + spec);
    }
  }
  throw UsageError("--field must be q or fp:<prime>");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) {
    // trim
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

ContextPtr make_base_context(const Options& opt) {
  auto names = split(opt.vars, ',');
  if (names.empty()) throw UsageError("--vars requires a comma-separated variable list");
  return make_context(names);
}

Polynomial parse_one(const Options& opt, const ContextPtr& ctx, const Field& f) {
  if (opt.expr.empty()) throw UsageError("-e <polynomial> is required");
  return parse_polynomial(opt.expr, ctx, f);
}

std::vector<Polynomial> parse_list(const std::string& text, const ContextPtr& ctx,
                                   const Field& f, const char* what) {
  std::vector<Polynomial> out;
  for (auto& piece : split(text, ';')) out.push_back(parse_polynomial(piece, ctx, f));
  if (out.empty()) throw UsageError(std::string(what) + " requires a ';'-separated list");
  return out;
}

ordered_json input_echo(const Options& opt) {
  return {{"expression", opt.expr},
          {"vars", split(opt.vars, ',')},
          {"field", opt.field_spec},
          {"seed", opt.seed}};
}

ordered_json gens_json(const std::vector<Polynomial>& gens) {
  ordered_json a = ordered_json::array();
  for (auto& g : gens) a.push_back(g.to_string());
  return a;
}

void emit(const Options& opt, const ordered_json& j) {
  if (opt.format == "json") {
    std::printf("%s\n", j.dump(2).c_str());
    return;
  }
  // flat text rendering of the same numbers
  std::function<void(const std::string&, const ordered_json&)> walk =
      [&](const std::string& prefix, const ordered_json& v) {
        if (v.is_object()) {
          for (auto& [k, val] : v.items())
            walk(prefix.empty() ? k : prefix + "." + k, val);
        } else {
          std::printf("%-28s %s\n", prefix.c_str(), v.dump().c_str());
        }
      };
  walk("", j);
}

ordered_json class_command(const std::string& name, const Options& opt) {
  ContextPtr ctx = make_base_context(opt);
  Field f = parse_field(opt.field_spec);
  HypersurfaceData h = make_hypersurface(parse_one(opt, ctx, f));
  ordered_json j;
  j["schema"] = ClassReport::kSchema;
  j["command"] = name;
  j["input"] = input_echo(opt);
  if (name == "csm" || name == "cmather") {
    CycleData cy = (name == "csm") ? charcycle_ideal(h) : conormal_ideal(h);
    ChowClass c = (name == "csm") ? csm_from_cycle(cy, h) : cmather_from_cycle(cy, h);
    j["bidegrees"] = cy.bidegrees.degrees;
    j["class"] = c.integer_coeffs();
    if (name == "csm") j["euler_characteristic"] = c.integer_coeffs().back();
  } else {
    ChowClass c = (name == "fulton") ? fulton_class(h) : fulton_johnson_class(h);
    j["class"] = c.integer_coeffs();
  }
  return j;
}

ordered_json cycle_command(const std::string& name, const Options& opt) {
  ContextPtr ctx = make_base_context(opt);
  Field f = parse_field(opt.field_spec);
  HypersurfaceData h = make_hypersurface(parse_one(opt, ctx, f));
  CycleData cy = (name == "conormal") ? conormal_ideal(h) : charcycle_ideal(h);
  ordered_json j;
  j["schema"] = ClassReport::kSchema;
  j["command"] = name;
  j["input"] = input_echo(opt);
  j["bidegrees"] = cy.bidegrees.degrees;
  j["codim"] = cy.bidegrees.codim;
  j["generators"] = gens_json(cy.ideal.base().gb().generators());
  return j;
}

ordered_json blowup_command(const std::string& name, const Options& opt) {
  ContextPtr ctx = make_base_context(opt);
  Field f = parse_field(opt.field_spec);
  std::vector<Polynomial> gens = parse_list(opt.expr, ctx, f, "-e");
  std::vector<Polynomial> rel;
  if (!opt.mod.empty()) rel = parse_list(opt.mod, ctx, f, "--mod");

  BlowupPresentation p = (name == "rees")  ? rees_ideal(gens)
                         : (name == "sym") ? sym_ideal(gens, rel)
                                           : qsym_affine(gens, rel);
  ordered_json j;
  j["schema"] = ClassReport::kSchema;
  j["command"] = name;
  j["input"] = input_echo(opt);
  j["t_vars"] = [&] {
    ordered_json a = ordered_json::array();
    for (std::size_t i = ctx->size(); i < p.ambient->size(); ++i)
      a.push_back(p.ambient->name(i));
    return a;
  }();
  j["generator_degrees"] = p.generator_degrees;
  j["generators"] = gens_json(p.ideal.base().gb().generators());
  return j;
}

ordered_json xcond_command(const Options& opt) {
  ContextPtr ctx = make_base_context(opt);
  Field f = parse_field(opt.field_spec);
  Polynomial F = parse_one(opt, ctx, f);
  XConditionResult res = xcondition_check(F, !opt.affine);
  ordered_json j;
  j["schema"] = ClassReport::kSchema;
  j["command"] = "xcond";
  j["input"] = input_echo(opt);
  j["holds"] = res.holds;
  if (res.witness) j["witness"] = res.witness->to_string();
  return j;
}

ordered_json weaklin_command(const Options& opt) {
  ContextPtr ctx = make_base_context(opt);
  Field f = parse_field(opt.field_spec);
  std::vector<Polynomial> gens = parse_list(opt.expr, ctx, f, "-e");
  ordered_json j;
  j["schema"] = ClassReport::kSchema;
  j["command"] = "weaklin";
  j["input"] = input_echo(opt);
  j["holds"] = weak_linearity_check(gens);
  return j;
}

ordered_json crosscheck_command(const Options& opt) {
  ContextPtr ctx = make_base_context(opt);
  Field f = parse_field(opt.field_spec);
  HypersurfaceData h = make_hypersurface(parse_one(opt, ctx, f));
  CycleCrossCheck res = cycle_cross_check(h);
  ordered_json j;
  j["schema"] = ClassReport::kSchema;
  j["command"] = "crosscheck";
  j["input"] = input_echo(opt);
  j["match"] = res.match;
  j["charcycle_bidegrees"] = res.charcycle_bidegrees.degrees;
  j["transform_bidegrees"] = res.transform_bidegrees.degrees;
  if (res.first_difference) j["first_difference"] = res.first_difference->to_string();
  return j;
}

int dispatch(const std::string& name, const Options& opt) {
  if (opt.budget) Budget::set_current_limit(opt.budget);
  if (name == "report") {
    ContextPtr ctx = make_base_context(opt);
    Field f = parse_field(opt.field_spec);
    ClassReport r = build_report(parse_one(opt, ctx, f), opt.seed);
    if (opt.format == "json")
      std::printf("%s\n", r.to_json().c_str());
    else
      std::printf("%s", r.to_text().c_str());
    return 0;
  }
  ordered_json j;
  if (name == "csm" || name == "cmather" || name == "fulton" || name == "fj")
    j = class_command(name, opt);
  else if (name == "conormal" || name == "charcycle")
    j = cycle_command(name, opt);
  else if (name == "rees" || name == "sym" || name == "qsym")
    j = blowup_command(name, opt);
  else if (name == "xcond")
    j = xcond_command(opt);
  else if (name == "weaklin")
    j = weaklin_command(opt);
  else if (name == "crosscheck")
    j = crosscheck_command(opt);
  else
    throw UsageError("unknown subcommand " + name);
  emit(opt, j);
  return 0;
}

int error_exit(const Options& opt, const std::string& code, const std::string& category,
               const std::string& message, int status) {
  std::fprintf(stderr, "charclass: %s: %s\n", code.c_str(), message.c_str());
  if (opt.format == "json") {
    ordered_json j;
    j["schema"] = ClassReport::kSchema;
    j["error"] = {{"code", code}, {"category", category}, {"message", message}};
    std::printf("%s\n", j.dump(2).c_str());
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blow-up algebras and characteristic classes of projective hypersurfaces"};
  app.require_subcommand(1);

  Options opt;
  std::string chosen;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"csm", "Chern-Schwartz-MacPherson class of a hypersurface"},
      {"cmather", "Chern-Mather class of a hypersurface"},
      {"fulton", "Fulton class of a hypersurface"},
      {"fj", "Fulton-Johnson class of a hypersurface"},
      {"conormal", "conormal cycle ideal and bidegrees"},
      {"charcycle", "characteristic cycle ideal and bidegrees"},
      {"rees", "Rees ideal of a generator list"},
      {"sym", "symmetric-algebra ideal of a generator list"},
      {"qsym", "quasi-symmetric-algebra ideal of a generator list"},
      {"xcond", "check the x-condition for a hypersurface"},
      {"weaklin", "check weak linearity of a generator list"},
      {"crosscheck", "characteristic cycle vs principal transform"},
      {"report", "run the full pipeline"},
  };
  for (auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("-e,--expr", opt.expr,
                    "polynomial (';'-separated list for ideal subcommands)");
    sub->add_option("--vars", opt.vars, "comma-separated variable names")->required();
    if (name == "sym" || name == "qsym")
      sub->add_option("--mod", opt.mod, "quotient-ring relations (';'-separated)");
    sub->add_option("--field", opt.field_spec, "q or fp:<prime>");
    sub->add_option("--seed", opt.seed, "PRNG seed for randomized checks");
    sub->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", opt.budget, "reduction-step budget override");
    if (name == "xcond" || name == "rees" || name == "sym" || name == "qsym" ||
        name == "weaklin")
      sub->add_flag("--affine", opt.affine, "treat the base ring as affine");
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 3;
  }

  try {
    return dispatch(chosen, opt);
  } catch (const PreconditionError& e) {
    return error_exit(opt, e.detail_code, e.code_name(), e.what(), 1);
  } catch (const BudgetExhaustedError& e) {
    return error_exit(opt, e.code_name(), e.code_name(), e.what(), 2);
  } catch (const UsageError& e) {
    return error_exit(opt, e.code_name(), e.code_name(), e.what(), 3);
  } catch (const Error& e) {
    return error_exit(opt, e.code_name(), e.code_name(), e.what(), 1);
  }
}
