#pragma once

#include "gdlca/derivations.hpp"
#include "gdlca/extensions.hpp"

#include "json.hpp"

namespace gdlca::report {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

/// Rationals are serialized as canonical strings ("3", "-1/12") so they round-trip exactly.
json rational(const Rational& r);
Rational parse_rational_json(const json& j);

json algebra(const GDBialgebra& a);
json vectors(const std::vector<RatVector>& vs);
json cocycle(const GDBialgebra& a, const CentralCocycle& q);
CentralCocycle cocycle_from_json(const json& j);
json cocycle_space(const CocycleSpace& s);
json span_certificate(const SpanComparison& c);
json derivation(const GDBialgebra& a, const DerivationAnsatz& d);
json derivation_space(const DerivationSpace& s);

/// "[L_λ W] = (∂ + 2λ)W + λ^3·c" lines for pairs i ≤ j with a nonzero bracket.
std::vector<std::string> bracket_lines(const GDBialgebra& a, const CentralCocycle& q);

}  // namespace gdlca::report
