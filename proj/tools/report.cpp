#include "report.hpp"

namespace gdlca::report {

json rational(const Rational& r) { return to_string(r); }

Rational parse_rational_json(const json& j) {
  if (!j.is_string()) throw InputError("expected a rational string");
  return gdlca::parse_rational(j.get<std::string>());
}

json algebra(const GDBialgebra& a) {
  return {{"name", a.name()}, {"dim", a.dim()}, {"basis", a.basis_names()}};
}

json vectors(const std::vector<RatVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json row = json::array();
    for (const auto& x : v) row.push_back(rational(x));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> bracket_lines(const GDBialgebra& a, const CentralCocycle& q) {
  std::vector<std::string> out;
  const auto& names = a.basis_names();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      const ExtendedBracket b = extended_bracket(a, q, i, j);
      if (b.module_part.is_zero() && b.central.is_zero()) continue;
      std::string line = "[" + names[i] + "_λ " + names[j] + "] = ";
      const bool has_module = !b.module_part.is_zero();
      if (has_module) line += b.module_part.to_string(names);
      if (!b.central.is_zero()) {
        const std::string c = b.central.to_string();
        line += has_module ? " + " : "";
        line += (b.central.terms().size() == 1 ? c : "(" + c + ")") + "·c";
      }
      out.push_back(std::move(line));
    }
  }
  return out;
}

json cocycle(const GDBialgebra& a, const CentralCocycle& q) {
  json alpha = json::array();
  for (const auto& form : q.alpha) {
    json m = json::array();
    for (const auto& row : form) {
      json r = json::array();
      for (const auto& v : row) r.push_back(rational(v));
      m.push_back(std::move(r));
    }
    alpha.push_back(std::move(m));
  }
  json brackets = json::array();
  const auto& names = a.basis_names();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const ExtendedBracket b = extended_bracket(a, q, i, j);
      if (b.central.is_zero()) continue;
      brackets.push_back({{"left", names[i]}, {"right", names[j]}, {"module", b.module_part.to_string(names)},
                          {"central", b.central.to_string()}});
    }
  }
  return {{"alpha", std::move(alpha)}, {"central_brackets", std::move(brackets)}};
}

CentralCocycle cocycle_from_json(const json& j) {
  CentralCocycle q;
  for (const auto& m : j.at("alpha")) {
    BilinearForm form;
    for (const auto& row : m) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(parse_rational_json(v));
      form.push_back(std::move(r));
    }
    q.alpha.push_back(std::move(form));
  }
  return q;
}

json cocycle_space(const CocycleSpace& s) {
  json basis = json::array();
  for (const auto& q : s.basis) basis.push_back(cocycle(s.algebra, q));
  json out{{"method", method_name(s.method)},
           {"degree_bound", s.degree_bound},
           {"dimension", s.dimension()},
           {"degree_profile", s.degree_profile},
           {"basis", std::move(basis)},
           {"stabilized", s.stabilized},
           {"warnings", s.warnings}};
  if (s.probe_dimension) out["probe_dimension"] = *s.probe_dimension;
  return out;
}

json span_certificate(const SpanComparison& c) {
  auto coords = [](const std::vector<std::optional<RatVector>>& v) {
    json out = json::array();
    for (const auto& x : v) {
      if (!x) {
        out.push_back(nullptr);
        continue;
      }
      json row = json::array();
      for (const auto& r : *x) row.push_back(rational(r));
      out.push_back(std::move(row));
    }
    return out;
  };
  return {{"equal", c.equal()},
          {"rank_theorem", c.rank_a},
          {"rank_direct", c.rank_b},
          {"rank_union", c.rank_union},
          {"theorem_in_direct", coords(c.a_in_b)},
          {"direct_in_theorem", coords(c.b_in_a)}};
}

json derivation(const GDBialgebra& a, const DerivationAnsatz& d) {
  json images = json::object();
  for (std::size_t j = 0; j < a.dim(); ++j) images[a.basis_names()[j]] = d.image(j).to_string(a.basis_names());
  json coeffs = json::array();
  for (const auto& v : d.coeffs()) coeffs.push_back(rational(v));
  return {{"images", std::move(images)}, {"coefficients", std::move(coeffs)}};
}

json derivation_space(const DerivationSpace& s) {
  json basis = json::array(), inner = json::array(), outer = json::array();
  for (const auto& d : s.basis) basis.push_back(derivation(s.algebra, d));
  for (const auto& d : s.inner_basis) inner.push_back(derivation(s.algebra, d));
  for (const auto& d : s.outer_representatives) outer.push_back(derivation(s.algebra, d));
  json out{{"method", method_name(s.method)},
           {"partial_bound", s.partial_bound},
           {"lambda_bound", s.lambda_bound},
           {"dimension", s.dimension()},
           {"inner_dimension", s.inner_dimension()},
           {"outer_dimension_at_bound", s.outer.at_bound},
           {"outer_dimension_at_probe", s.outer.at_probe},
           {"stabilized", s.outer.stabilized()},
           {"basis", std::move(basis)},
           {"inner_basis", std::move(inner)},
           {"outer_representatives", std::move(outer)},
           {"notes", s.notes}};
  out["outer_dimension"] = s.outer.value() ? json(*s.outer.value()) : json("not stabilized");
  return out;
}

}  // namespace gdlca::report
