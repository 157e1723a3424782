#include "brs/json_io.hpp"

namespace brs {

namespace {

std::vector<cplx> complex_list(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of [re, im] pairs");
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

json complex_array(std::span<const cplx> v) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back(to_json(z));
  return arr;
}

}  // namespace

json to_json(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorKind::InvalidInput, "complex numbers must be [re, im] pairs");
}

json to_json(const Polynomial& p) { return {{"coeffs", complex_array(p.coeffs())}}; }

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw Error(ErrorKind::InvalidInput, "polynomial needs \"coeffs\"");
  return Polynomial(complex_list(j.at("coeffs")));
}

json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RationalFunction rational_from_json(const json& j) {
  if (j.is_number()) return RationalFunction(Polynomial::constant(j.get<double>()));
  if (j.is_object() && j.contains("num"))
    return RationalFunction(polynomial_from_json(j.at("num")),
                            j.contains("den") ? polynomial_from_json(j.at("den")) : Polynomial::constant(1.0));
  return RationalFunction(polynomial_from_json(j));
}

json to_json(const TrigPolynomial& w) { return {{"n", w.n()}, {"c", complex_array(w.coeffs())}}; }

TrigPolynomial trig_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("c"))
    throw Error(ErrorKind::InvalidInput, "trig polynomial needs \"n\" and \"c\"");
  const int n = j.at("n").get<int>();
  auto c = complex_list(j.at("c"));
  if (n < 0 || static_cast<int>(c.size()) != 2 * n + 1)
    throw Error(ErrorKind::InvalidInput, "trig polynomial needs 2n + 1 coefficients");
  return TrigPolynomial(n, std::move(c));
}

json to_json(const BoundaryZeroSet& z) {
  json zeros = json::array();
  for (const auto& bz : z.zeros) zeros.push_back({{"zeta", to_json(bz.zeta)}, {"m", bz.m}});
  return {{"zeros", zeros}, {"N", z.N()}};
}

json to_json(const Gram& g) {
  json idx = json::array();
  for (const auto& [j, ell] : g.index) idx.push_back({j, ell});
  json entries = json::array();
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i)
    for (Eigen::Index k = 0; k < g.entries.cols(); ++k) entries.push_back(to_json(g.entries(i, k)));
  return {{"index", idx}, {"entries", entries}};
}

json to_json(const HardyVector& h) { return {{"M", h.M()}, {"coeffs", complex_array(h.coeffs)}}; }

HardyVector hardy_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw Error(ErrorKind::InvalidInput, "Hardy vector needs \"coeffs\"");
  HardyVector h(complex_list(j.at("coeffs")));
  if (h.coeffs.empty()) throw Error(ErrorKind::InvalidInput, "Hardy vector is empty");
  if (j.contains("M")) h = h.resized(j.at("M").get<int>());
  return h;
}

json to_json(const MembershipLadder& m) {
  return {{"verdict", to_string(m.verdict)},
          {"M", m.M},
          {"residual", m.residual},
          {"solution_norm", m.solution_norm},
          {"condition", m.condition}};
}

json to_json(const Decomposition& d) {
  json idx = json::array();
  for (const auto& [j, ell] : d.index) idx.push_back({j, ell});
  json diag = {{"d", complex_array(std::span<const cplx>(d.d.data(), d.d.size()))},
               {"gram_condition", d.gram_condition},
               {"backward_error", d.backward_error},
               {"tail_norm", d.tail_norm},
               {"h_certified", d.h_certified},
               {"h_method", d.h_exact ? "exact-division" : "deconvolution"}};
  if (d.membership) diag["membership"] = to_json(*d.membership);
  json out = {{"index", idx},
              {"c", complex_array(std::span<const cplx>(d.c.data(), d.c.size()))},
              {"h", to_json(d.h)},
              {"diagnostics", diag},
              {"verdict", to_string(d.verdict)}};
  if (d.h_exact) out["h_exact"] = to_json(*d.h_exact);
  return out;
}

}  // namespace brs
