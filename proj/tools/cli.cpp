#include "cli.hpp"

#include "report.hpp"

#include "gdlca/gdlca.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace gdlca {

namespace {

using report::json;

struct Options {
  bool json_output = false;
  std::uint64_t seed = 0;
  std::string target;
  std::string method = "both";
  unsigned degree = 6;
  unsigned partial_bound = 3;
  unsigned lambda_bound = 4;
  bool assert_simple = false;
  std::size_t cocycle_index = 0;
  long window = 3;
  std::size_t samples = 0;
  std::string catalog_action;
  std::string catalog_name;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GDBialgebra load_unchecked(const std::string& target) {
  const std::string prefix = "catalog:";
  if (target.rfind(prefix, 0) == 0) return catalog_build_spec(target.substr(prefix.size()));
  return to_bialgebra(parse_algebra_document(read_file(target)), Validation::Unchecked);
}

std::vector<Violation> gd_violations(const GDBialgebra& a) {
  std::vector<Violation> all = check_novikov(a);
  for (auto& v : check_lie(a)) all.push_back(std::move(v));
  for (auto& v : check_gd_compat(a)) all.push_back(std::move(v));
  return all;
}

std::string triple(const GDBialgebra& a, std::size_t i, std::size_t j, std::size_t k, bool with_k = true) {
  const auto& n = a.basis_names();
  return "(" + n[i] + "," + n[j] + (with_k ? "," + n[k] : "") + ")";
}

std::string describe_header(const GDBialgebra& a) {
  std::string s = "algebra " + a.name() + " (dim " + std::to_string(a.dim()) + ", basis";
  for (const auto& b : a.basis_names()) s += " " + b;
  return s + ")";
}

std::string profile_text(const std::vector<std::size_t>& profile) {
  std::string s;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    s += (k ? " " : "") + std::string("λ^") + std::to_string(k) + ":" + std::to_string(profile[k]);
  }
  return s;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int check() {
    const GDBialgebra a = load_unchecked(o_.target);
    const QuadraticLCA r = QuadraticLCA::unchecked(a);
    const auto gd = gd_violations(a);
    const auto skew = check_skew(r);
    const auto jac = check_jacobi(r);
    const bool ok = gd.empty() && skew.empty() && jac.empty();
    if (o_.json_output) {
      json vs = json::array();
      for (const auto& v : gd) {
        json res = json::array();
        for (const auto& c : v.residual.coords()) res.push_back(report::rational(c));
        vs.push_back({{"axiom", axiom_name(v.axiom)}, {"triple", {v.i, v.j, v.k}}, {"residual", std::move(res)}});
      }
      for (const auto* list : {&skew, &jac}) {
        for (const auto& v : *list) {
          vs.push_back({{"axiom", v.axiom == ConformalAxiom::SkewSymmetry ? "conformal-skew-symmetry" : "conformal-jacobi"},
                        {"triple", {v.i, v.j, v.k}},
                        {"residual", v.residual.to_string(a.basis_names())}});
        }
      }
      emit_json("check", a, {{"valid", ok}, {"violations", std::move(vs)}});
    } else {
      out_ << describe_header(a) << "\n";
      auto count = [&](const std::string& label, std::size_t n) {
        out_ << "  " << label << ": " << (n == 0 ? "ok" : std::to_string(n) + " violation(s)") << "\n";
      };
      std::size_t per[4] = {0, 0, 0, 0};
      for (const auto& v : gd) ++per[static_cast<int>(v.axiom)];
      count("novikov left-symmetry", per[0]);
      count("novikov right-commutativity", per[1]);
      count("lie jacobi", per[2]);
      count("gd compatibility", per[3]);
      count("conformal skew-symmetry", skew.size());
      count("conformal jacobi", jac.size());
      for (const auto& v : gd) {
        out_ << "  violation " << axiom_name(v.axiom) << " at " << triple(a, v.i, v.j, v.k) << ": residual "
             << ConformalExpr::from_velem(v.residual).to_string(a.basis_names()) << "\n";
      }
      for (const auto& v : skew) {
        out_ << "  violation conformal-skew-symmetry at " << triple(a, v.i, v.j, 0, false) << ": "
             << v.residual.to_string(a.basis_names()) << "\n";
      }
      for (const auto& v : jac) {
        out_ << "  violation conformal-jacobi at " << triple(a, v.i, v.j, v.k) << ": "
             << v.residual.to_string(a.basis_names()) << "\n";
      }
      out_ << (ok ? "valid" : "invalid") << "\n";
    }
    return ok ? kExitOk : kExitViolation;
  }

  int extend() {
    const GDBialgebra a = load_valid();
    const bool run_theorem = o_.method != "direct";
    const bool run_direct = o_.method != "theorem";
    std::optional<CocycleSpace> th, di;
    if (run_theorem) th = solve_extensions_theorem(a);
    if (run_direct) di = solve_extensions_direct(a, o_.degree);
    const CocycleSpace& primary = th ? *th : *di;

    bool verified = true;
    for (const auto* s : {th ? &*th : nullptr, di ? &*di : nullptr}) {
      if (!s) continue;
      for (const auto& q : s->basis) verified = verified && verify_cocycle(a, q).empty();
    }
    std::optional<SpanComparison> cmp;
    if (th && di) cmp = compare_spans(th->vectors(std::max(o_.degree, 3u)), di->vectors(std::max(o_.degree, 3u)));
    const bool hypothesis = spanned_by_products(a);
    const bool disagree = cmp && !cmp->equal();
    std::vector<std::string> warnings;
    if (di) warnings = di->warnings;
    if (disagree && !hypothesis) {
      warnings.push_back("methods differ; the algebra is not spanned by products, so the theorem system is a truncation");
    }
    const int code = (!verified || (disagree && hypothesis)) ? kExitViolation : kExitOk;

    if (o_.json_output) {
      json body;
      if (th) body["theorem"] = report::cocycle_space(*th);
      if (di) body["direct"] = report::cocycle_space(*di);
      if (cmp) {
        body["agreement"] = report::span_certificate(*cmp);
        body["agreement"]["degree_bound"] = std::max(o_.degree, 3u);
        body["agreement"]["coordinates"] = "coordinates in the reduced echelon basis of the other space";
      }
      body["dimension"] = primary.dimension();
      body["spanned_by_products"] = hypothesis;
      body["verified"] = verified;
      body["warnings"] = warnings;
      emit_json("extend", a, std::move(body));
      return code;
    }

    out_ << describe_header(a) << "\n";
    if (th) out_ << "theorem: dimension " << th->dimension() << "\n";
    if (di) {
      out_ << "direct: dimension " << di->dimension() << " at degree bound " << di->degree_bound << " (probe "
           << di->degree_bound + 1 << ": " << *di->probe_dimension << ")\n";
    }
    if (cmp) {
      out_ << "dimension " << th->dimension();
      if (cmp->equal()) out_ << ", methods agree\n";
      else out_ << " (theorem) vs " << di->dimension() << " (direct), methods disagree\n";
    } else {
      out_ << "dimension " << primary.dimension() << "\n";
    }
    out_ << "degree profile: " << profile_text(primary.degree_profile) << "\n";
    out_ << "verification: " << (verified ? "every basis cocycle passes" : "FAILED") << "\n";
    for (std::size_t b = 0; b < primary.basis.size(); ++b) {
      out_ << "cocycle " << b << ":\n";
      for (const auto& line : report::bracket_lines(a, primary.basis[b])) out_ << "  " << line << "\n";
    }
    for (const auto& w : warnings) out_ << "warning: " << w << "\n";
    return code;
  }

  int derive() {
    const GDBialgebra a = load_valid();
    const QuadraticLCA r(a);
    const DerivationSpace direct = solve_derivations_direct(r, o_.partial_bound, o_.lambda_bound);
    std::optional<DerivationSpace> theorem;
    std::optional<SpanComparison> cmp;
    std::string theorem_note;
    try {
      theorem = solve_derivations_theorem(r, o_.lambda_bound, o_.assert_simple);
      std::vector<RatVector> direct_vs = derivation_vectors(direct.basis);
      if (o_.partial_bound != 3) {
        const DerivationSpace d3 = solve_derivations_direct(r, 3, o_.lambda_bound);
        direct_vs = derivation_vectors(d3.basis);
      }
      cmp = compare_spans(derivation_vectors(theorem->basis), direct_vs);
    } catch (const HypothesisError& e) {
      theorem_note = e.what();
    }
    bool verified = true;
    for (const auto& d : direct.basis) verified = verified && verify_derivation(r, d).empty();
    for (const auto& d : direct.inner_basis) verified = verified && verify_derivation(r, d).empty();
    const int code = (!verified || (cmp && !cmp->equal())) ? kExitViolation : kExitOk;

    if (o_.json_output) {
      json body{{"direct", report::derivation_space(direct)}, {"verified", verified}};
      if (theorem) {
        body["theorem"] = report::derivation_space(*theorem);
        body["agreement"] = report::span_certificate(*cmp);
      } else {
        body["theorem_skipped"] = theorem_note;
      }
      body["outer_dimension"] = direct.outer.value() ? json(*direct.outer.value()) : json("not stabilized");
      emit_json("derive", a, std::move(body));
      return code;
    }

    out_ << describe_header(a) << "\n";
    out_ << "derivations at partial bound " << direct.partial_bound << ", λ-bound " << direct.lambda_bound
         << ": dimension " << direct.dimension() << ", inner " << direct.inner_dimension() << "\n";
    if (theorem) {
      out_ << "theorem solver (" << method_name(theorem->method) << "): dimension " << theorem->dimension() << ", "
           << (cmp->equal() ? "agrees with" : "DISAGREES with") << " the direct solver\n";
    } else {
      out_ << "theorem solver skipped: " << theorem_note << "\n";
    }
    out_ << "verification: " << (verified ? "every basis derivation passes" : "FAILED") << "\n";
    if (auto v = direct.outer.value()) {
      if (*v == 0) {
        out_ << "outer dimension 0; CDer = CInn\n";
      } else {
        out_ << "outer dimension " << *v << "; CDer = CInn ⊕ M, M spanned by:\n";
        for (const auto& d : direct.outer_representatives) out_ << "  " << d.to_string(a.basis_names()) << "\n";
      }
    } else {
      out_ << "outer dimension not stabilized: " << direct.outer.at_bound << " at λ-bound " << direct.lambda_bound
           << ", " << direct.outer.at_probe << " at λ-bound " << direct.lambda_bound + 2 << "\n";
    }
    return code;
  }

  int coeff() {
    const GDBialgebra a = load_valid();
    if (o_.window < 1) throw UsageError("--window must be at least 1");
    const CocycleSpace space = solve_extensions_theorem(a);
    if (o_.cocycle_index >= space.dimension()) {
      throw UsageError("--cocycle-index " + std::to_string(o_.cocycle_index) + " out of range; the extension space has dimension " +
                       std::to_string(space.dimension()));
    }
    const CentralCocycle& q = space.basis[o_.cocycle_index];
    const std::size_t samples = o_.samples == 0 ? std::numeric_limits<std::size_t>::max() : o_.samples;
    const auto cocycle_res = check_coeff_cocycle(a, q, o_.window, samples, o_.seed);
    const auto relation_res = coeff_relation_consistency(a, o_.window, q);
    const bool ok = cocycle_res.empty() && relation_res.empty();
    const double g = static_cast<double>(a.dim()) * static_cast<double>(2 * o_.window + 1);
    const bool exhaustive = static_cast<double>(samples) >= g * g * g;

    if (o_.json_output) {
      auto residuals = [](const std::vector<CoeffResidual>& rs) {
        json out = json::array();
        for (const auto& r : rs) {
          json modes = json::array();
          for (const auto& m : r.modes) modes.push_back({m.basis, m.index});
          out.push_back({{"check", r.check}, {"modes", std::move(modes)}, {"detail", r.detail}});
        }
        return out;
      };
      emit_json("coeff", a,
                {{"cocycle_index", o_.cocycle_index},
                 {"cocycle", report::cocycle(a, q)},
                 {"window", o_.window},
                 {"exhaustive", exhaustive},
                 {"samples", exhaustive ? json(nullptr) : json(samples)},
                 {"seed", o_.seed},
                 {"cocycle_residuals", residuals(cocycle_res)},
                 {"relation_residuals", residuals(relation_res)},
                 {"passed", ok}});
      return ok ? kExitOk : kExitViolation;
    }
    out_ << describe_header(a) << "\n";
    out_ << "cocycle " << o_.cocycle_index << ":\n";
    for (const auto& line : report::bracket_lines(a, q)) out_ << "  " << line << "\n";
    out_ << "window " << o_.window << ", " << (exhaustive ? "exhaustive" : std::to_string(samples) + " sampled triples, seed " + std::to_string(o_.seed)) << "\n";
    out_ << "2-cocycle check: " << (cocycle_res.empty() ? "ok" : std::to_string(cocycle_res.size()) + " residual(s)") << "\n";
    out_ << "bracket consistency: " << (relation_res.empty() ? "ok" : std::to_string(relation_res.size()) + " residual(s)") << "\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(cocycle_res.size(), 10); ++i) {
      out_ << "  " << cocycle_res[i].check << ": " << cocycle_res[i].detail << "\n";
    }
    for (std::size_t i = 0; i < std::min<std::size_t>(relation_res.size(), 10); ++i) {
      out_ << "  " << relation_res[i].check << ": " << relation_res[i].detail << "\n";
    }
    return ok ? kExitOk : kExitViolation;
  }

  int catalog() {
    if (o_.catalog_action == "list") {
      if (o_.json_output) {
        json entries = json::array();
        for (const auto& e : catalog_entries()) {
          entries.push_back({{"name", e.name}, {"params", e.params}, {"summary", e.summary}});
        }
        out_ << json{{"schema_version", report::kSchemaVersion}, {"command", "catalog list"}, {"entries", entries}}.dump(2)
             << "\n";
        return kExitOk;
      }
      for (const auto& e : catalog_entries()) {
        out_ << e.name << (e.params.empty() ? "" : " [" + e.params + "]") << "\n    " << e.summary << "\n";
      }
      return kExitOk;
    }
    if (o_.catalog_action == "emit") {
      if (o_.catalog_name.empty()) throw UsageError("catalog emit needs an entry, e.g. 'catalog emit vir'");
      const GDBialgebra a = catalog_build_spec(o_.catalog_name);
      out_ << emit_algebra_file(a, {{"source", "catalog:" + o_.catalog_name}});
      return kExitOk;
    }
    throw UsageError("catalog action must be 'list' or 'emit'");
  }

 private:
  GDBialgebra load_valid() {
    GDBialgebra a = load_unchecked(o_.target);
    auto vs = gd_violations(a);
    if (!vs.empty()) throw AxiomError(std::move(vs));
    return a;
  }

  void emit_json(const std::string& command, const GDBialgebra& a, json body) {
    body["schema_version"] = report::kSchemaVersion;
    body["command"] = command;
    body["algebra"] = report::algebra(a);
    out_ << body.dump(2) << "\n";
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact workbench for quadratic Lie conformal algebras", "gdlca"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_output, "Machine-readable JSON report");
  app.add_option("--seed", o.seed, "Seed for sampled checks");

  auto* check = app.add_subcommand("check", "Check every axiom of an algebra");
  check->add_option("target", o.target, "Algebra file or catalog:NAME[:k=v,...]")->required();

  auto* extend = app.add_subcommand("extend", "Central extensions by a one-dimensional center");
  extend->add_option("target", o.target, "Algebra file or catalog:NAME[:k=v,...]")->required();
  extend->add_option("--method", o.method, "theorem, direct or both")
      ->check(CLI::IsMember({"theorem", "direct", "both"}))
      ->capture_default_str();
  extend->add_option("--degree", o.degree, "λ-degree bound of the direct method")->capture_default_str();

  auto* derive = app.add_subcommand("derive", "Conformal derivations, inner and outer");
  derive->add_option("target", o.target, "Algebra file or catalog:NAME[:k=v,...]")->required();
  derive->add_option("--partial-bound", o.partial_bound, "Largest ∂-power in the ansatz")->capture_default_str();
  derive->add_option("--lambda-bound", o.lambda_bound, "Largest λ-power in the ansatz")->capture_default_str();
  derive->add_flag("--assert-simple", o.assert_simple, "Treat the Novikov algebra as simple for the theorem solver");

  auto* coeff = app.add_subcommand("coeff", "Check the induced 2-cocycle of the coefficient algebra");
  coeff->add_option("target", o.target, "Algebra file or catalog:NAME[:k=v,...]")->required();
  coeff->add_option("--cocycle-index", o.cocycle_index, "Index into the extension basis (from 0)")->required();
  coeff->add_option("--window", o.window, "Mode indices range over [-M, M]")->required();
  coeff->add_option("--samples", o.samples, "Sampled triples; 0 or enough for all triples means exhaustive")
      ->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "List or emit built-in algebras");
  catalog->add_option("action", o.catalog_action, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
  catalog->add_option("name", o.catalog_name, "Entry for emit, e.g. r_alpha_beta:alpha=2,beta=0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner run(o, out);
  try {
    if (check->parsed()) return run.check();
    if (extend->parsed()) return run.extend();
    if (derive->parsed()) return run.derive();
    if (coeff->parsed()) return run.coeff();
    if (catalog->parsed()) return run.catalog();
  } catch (const AxiomError& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gdlca
