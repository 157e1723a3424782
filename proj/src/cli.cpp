#include "brs/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "brs/example_suite.hpp"
#include "brs/factor.hpp"
#include "brs/json_io.hpp"

namespace brs {

namespace {

struct Options {
  std::string in_path;
  std::string out_path;
  int trunc = 256;
  int depth = 8;
  double tol_grid = 1e-9;
  double tol_limit = 1e-6;
  double tol_exact = 1e-10;
  std::string filter;
};

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("input needs \"") + key + "\"");
  return j.at(key);
}

RationalFunction function_field(const json& j, const char* key) {
  return j.is_object() && j.contains(key) ? rational_from_json(j.at(key)) : rational_from_json(j);
}

double power_field(const json& j) { return j.is_object() && j.contains("r") ? j.at("r").get<double>() : 1.0; }

int truncation(const json& j, const Options& opt) {
  return j.is_object() && j.contains("M") ? j.at("M").get<int>() : opt.trunc;
}

/// A Hardy vector carries "M"; anything else is read as a rational function.
bool is_hardy_vector(const json& f) { return f.is_object() && f.contains("M") && f.contains("coeffs"); }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Inner: return kExitInner;
    case ErrorKind::NotInBall: return kExitNotInBall;
    case ErrorKind::NotMember: return kExitNonMember;
    case ErrorKind::Inconclusive: return kExitInconclusive;
    default: return kExitError;
  }
}

int verdict_exit(Verdict v) {
  return v == Verdict::Member ? kExitOk : v == Verdict::NonMember ? kExitNonMember : kExitInconclusive;
}

json cmd_mate(const json& in) {
  const auto pair = pythagorean_mate(function_field(in, "q"));
  return {{"pair", {{"q", to_json(pair.q)}, {"a", to_json(pair.a)}}}, {"zeros", to_json(boundary_zeros(pair.a))}};
}

json cmd_factor(const json& in) {
  const json& w = in.is_object() && in.contains("w") ? in.at("w") : in;
  return {{"p", to_json(fejer_riesz(trig_from_json(w)))}};
}

json cmd_classify(const json& in) {
  const json& b = in.is_object() && in.contains("b") ? in.at("b") : in;
  return {{"class", to_string(classify(function_field(b, "q")))}};
}

json cmd_kernels(const json& in) {
  const PowerSpace space(rational_from_json(field(in, "q")), power_field(in));
  std::vector<std::pair<cplx, int>> specs;
  if (in.contains("lambda")) {
    specs.emplace_back(complex_from_json(in.at("lambda")), in.value("ell", 0));
  } else {
    for (const auto& [j, ell] : space.zeros().index()) specs.emplace_back(space.zeros().zeros[j].zeta, ell);
  }
  json out = json::array();
  for (const auto& [lambda, ell] : specs) {
    const auto v = space.kernel(lambda, ell);
    json item = {{"lambda", to_json(lambda)}, {"ell", ell}};
    if (space.F().integer_power()) item["closed_form"] = to_json(kernel_rational_form(space, lambda, ell));
    if (in.contains("points")) {
      json values = json::array();
      for (const auto& p : in.at("points")) {
        const cplx z = complex_from_json(p);
        values.push_back({{"z", to_json(z)}, {"v", to_json(v(z))}});
      }
      item["values"] = values;
    }
    out.push_back(item);
  }
  return {{"kernels", out}};
}

json cmd_gram(const json& in) {
  const PowerSpace space(rational_from_json(field(in, "q")), power_field(in));
  std::optional<LimitMethod> method;
  if (in.contains("method")) {
    const auto m = in.at("method").get<std::string>();
    if (m == "rational") method = LimitMethod::Rational;
    else if (m == "radial") method = LimitMethod::RadialExtrapolation;
    else throw Error(ErrorKind::InvalidInput, "method must be \"rational\" or \"radial\"");
  }
  return to_json(gram_matrix(space, method));
}

json cmd_membership(const json& in, const Options& opt, int& code) {
  RationalFunction a;
  if (in.contains("a")) a = rational_from_json(in.at("a"));
  else a = pythagorean_mate(rational_from_json(field(in, "q"))).a;
  const int M = truncation(in, opt);
  const json& f = field(in, "f");
  const HardyVector fv = is_hardy_vector(f) ? hardy_from_json(f) : analytic_coeffs(rational_from_json(f), 4 * M);
  const auto ladder = membership_ladder(a, fv, M);
  code = verdict_exit(ladder.verdict);
  return to_json(ladder);
}

json cmd_decompose(const json& in, const Options& opt) {
  const PowerSpace space(rational_from_json(field(in, "q")), power_field(in));
  const json& f = field(in, "f");
  const auto dec = is_hardy_vector(f) ? decompose(space, hardy_from_json(f))
                                      : decompose(space, rational_from_json(f), truncation(in, opt));
  return to_json(dec);
}

json cmd_corona(const json& in, const Options& opt) {
  const auto q = function_field(in, "q");
  const RationalFunction a = in.is_object() && in.contains("a") ? rational_from_json(in.at("a")) : pythagorean_mate(q).a;
  const int depth = in.is_object() ? in.value("depth", opt.depth) : opt.depth;
  const auto est = corona_infimum(a, q, depth);
  return {{"infimum", est.infimum}, {"slack", est.slack}, {"depth", depth}};
}

json cmd_ratio_bounds(const json& in) {
  const auto rb = mate_modulus_ratio_bounds(rational_from_json(field(in, "q")), power_field(in), in.value("grid", 4096));
  return {{"lo", rb.lo}, {"hi", rb.hi}};
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto items = run_example_suite({opt.tol_exact, opt.tol_grid, opt.tol_limit}, opt.filter);
  int failed = 0;
  out << "brs example suite\n";
  for (const auto& it : items) {
    out << (it.pass ? "PASS " : "FAIL ") << it.group << "/" << it.name << "  " << it.detail << "\n";
    failed += it.pass ? 0 : 1;
  }
  out << items.size() - failed << "/" << items.size() << " passed\n";
  return failed == 0 && !items.empty() ? kExitOk : kExitError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Pythagorean mates, boundary kernels and decompositions for rational ball functions"};
  app.set_config("--config", "", "key=value file with option defaults");
  app.add_option("--in", opt.in_path, "JSON input file (default: stdin)");
  app.add_option("--out", opt.out_path, "output file (default: stdout)");
  app.add_option("--trunc", opt.trunc, "truncation degree M")->check(CLI::PositiveNumber);
  app.add_option("--depth", opt.depth, "corona refinement rounds")->check(CLI::NonNegativeNumber);
  app.add_option("--tol-grid", opt.tol_grid, "tolerance for identities sampled on the circle");
  app.add_option("--tol-limit", opt.tol_limit, "tolerance for boundary limits");
  app.add_option("--tol-exact", opt.tol_exact, "tolerance for closed-form comparisons");
  app.add_option("--filter", opt.filter, "verify: run only groups containing this string");
  app.require_subcommand(1);
  for (const char* name : {"mate", "factor", "classify", "kernels", "gram", "membership", "decompose", "corona",
                           "ratio-bounds", "verify"})
    app.add_subcommand(name)->fallthrough();

  std::vector<std::string> argv_store{"brs"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  std::ofstream out_file;
  if (!opt.out_path.empty()) {
    out_file.open(opt.out_path);
    if (!out_file) {
      err << "cannot open " << opt.out_path << "\n";
      return kExitError;
    }
  }
  std::ostream& sink = opt.out_path.empty() ? out : out_file;

  try {
    if (cmd == "verify") return cmd_verify(opt, sink);

    json input;
    try {
      if (opt.in_path.empty()) {
        input = json::parse(in);
      } else {
        std::ifstream f(opt.in_path);
        if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + opt.in_path);
        input = json::parse(f);
      }
    } catch (const json::parse_error& e) {
      err << "malformed JSON: " << e.what() << "\n";
      return kExitError;
    }

    int code = kExitOk;
    json result;
    if (cmd == "mate") result = cmd_mate(input);
    else if (cmd == "factor") result = cmd_factor(input);
    else if (cmd == "classify") result = cmd_classify(input);
    else if (cmd == "kernels") result = cmd_kernels(input);
    else if (cmd == "gram") result = cmd_gram(input);
    else if (cmd == "membership") result = cmd_membership(input, opt, code);
    else if (cmd == "decompose") result = cmd_decompose(input, opt);
    else if (cmd == "corona") result = cmd_corona(input, opt);
    else result = cmd_ratio_bounds(input);
    sink << result.dump(2) << "\n";
    return code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    if (code == kExitNonMember || code == kExitInconclusive)
      sink << json{{"verdict", code == kExitNonMember ? "non-member" : "inconclusive"}, {"error", e.what()}}.dump(2)
           << "\n";
    err << "error: " << e.what() << "\n";
    return code;
  } catch (const json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace brs
