#pragma once

#include <json.hpp>

#include "brs/decomp.hpp"

namespace brs {

using json = nlohmann::json;

// Complex numbers are [re, im] pairs throughout.
json to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const RationalFunction& f);
/// Accepts {"num", "den"}, a polynomial {"coeffs"}, or a bare number.
RationalFunction rational_from_json(const json& j);

json to_json(const TrigPolynomial& w);
TrigPolynomial trig_from_json(const json& j);

json to_json(const BoundaryZeroSet& z);
json to_json(const Gram& g);

json to_json(const HardyVector& h);
HardyVector hardy_from_json(const json& j);

json to_json(const MembershipLadder& m);
json to_json(const Decomposition& d);

}  // namespace brs
