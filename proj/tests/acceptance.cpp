// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are exact over Q.

#include "oracle.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

namespace gdlca {
namespace {

// Every quantity below is an exact rational or an integer dimension; nothing is
// compared approximately.
constexpr long kTolerance = 0;

struct Outcome {
  bool pass = true;
  std::ostringstream notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << "\n    failed: " << what;
    }
  }
};

using testing::build;
using testing::r_ab;

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::size_t> profile(const CocycleSpace& s, std::size_t len) {
  std::vector<std::size_t> out(len, 0);
  for (std::size_t k = 0; k < s.degree_profile.size(); ++k) {
    if (k < len) out[k] = s.degree_profile[k];
    else if (s.degree_profile[k] != 0) out.push_back(s.degree_profile[k]);
  }
  return out;
}

oracle::Forms to_forms(const CentralCocycle& q) {
  oracle::Forms f;
  for (const auto& form : q.alpha) {
    std::vector<std::vector<oracle::Q>> m;
    for (const auto& row : form) m.emplace_back(row.begin(), row.end());
    f.push_back(std::move(m));
  }
  return f;
}

bool form_is_zero(const BilinearForm& f) {
  for (const auto& row : f) {
    for (const auto& x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

bool in_span(const std::vector<RatVector>& family, const RatVector& v) {
  return coordinates_in(reduced_echelon(family), v).has_value();
}

void criterion1(Outcome& o) {
  for (const auto& spec : testing::catalog_specs()) {
    const GDBialgebra a = build(spec);
    const QuadraticLCA r = QuadraticLCA::unchecked(a);
    const std::size_t bad = check_novikov(a).size() + check_lie(a).size() + check_gd_compat(a).size() +
                            check_skew(r).size() + check_jacobi(r).size();
    o.require(bad == 0, spec + ": " + std::to_string(bad) + " violations");
  }
  o.notes << testing::catalog_specs().size() << " algebras, five checkers each, all empty";
}

void criterion2(Outcome& o) {
  struct Case {
    long alpha, beta;
    std::size_t dim;
  };
  for (const Case c : {Case{3, 1, 3}, Case{0, 0, 4}, Case{0, 1, 3}, Case{1, 0, 5}, Case{2, 0, 4}}) {
    const GDBialgebra r = r_ab(c.alpha, c.beta);
    const std::size_t got = solve_extensions_theorem(r).dimension();
    o.require(got == c.dim, r.name() + " dimension " + std::to_string(got));
    o.notes << r.name() << "=" << got << " ";
  }
  // R(2,0): the fifth generator α_λ(W,W) = λ listed for this case is not a cocycle.
  const GDBialgebra r20 = r_ab(2, 0);
  CentralCocycle extra = CentralCocycle::zero(2);
  extra.alpha[1][1][1] = 1;
  const bool lib_refutes = !verify_cocycle(r20, extra).empty();
  const bool oracle_refutes = !oracle::cocycle_holds(oracle::from(r20), to_forms(extra));
  const std::size_t oracle_dim = oracle::cocycle_dimension(oracle::from(r20), 6);
  o.require(lib_refutes && oracle_refutes, "α_λ(W,W) = λ should fail the cocycle identity for R(2,0)");
  o.require(oracle_dim == 4, "oracle dimension for R(2,0) is " + std::to_string(oracle_dim));
  o.notes << "[R(2,0): 4, not 5; the extra generator α_λ(W,W)=λ fails the cocycle identity (library verifier and "
             "independent oracle)] ";

  const CocycleSpace vir = solve_extensions_theorem(build("vir"));
  bool cubic = false, even_zero = true;
  for (const auto& q : vir.basis) {
    cubic = cubic || q.alpha[3][0][0] != 0;
    even_zero = even_zero && q.alpha[0][0][0] == 0 && q.alpha[2][0][0] == 0;
  }
  o.require(vir.dimension() == 2, "vir dimension " + std::to_string(vir.dimension()));
  o.require(even_zero, "vir has α_0 or α_2 terms");
  o.require(cubic, "vir lacks a λ^3 generator");
  CentralCocycle twelfth = CentralCocycle::zero(1);
  twelfth.alpha[3][0][0] = Rational(1, 12);
  o.require(in_span(vir.vectors(3), twelfth.flatten(3)), "λ^3/12 not in the vir solution space");
  o.notes << "vir=2 with α0=α2=0 and λ^3/12 in the span";
}

void criterion3(Outcome& o) {
  std::size_t compared = 0;
  for (const auto& spec : testing::catalog_specs()) {
    const GDBialgebra a = build(spec);
    if (!spanned_by_products(a)) continue;
    const CocycleSpace th = solve_extensions_theorem(a);
    const CocycleSpace di = solve_extensions_direct(a, 6);
    const SpanComparison c = compare_spans(th.vectors(6), di.vectors(6));
    o.require(c.equal(), spec + " ranks " + std::to_string(c.rank_a) + "/" + std::to_string(c.rank_b) + "/" +
                             std::to_string(c.rank_union));
    o.require(di.probe_dimension && *di.probe_dimension == di.dimension(), spec + " direct solution grows at N=7");
    for (const auto& x : c.a_in_b) o.require(x.has_value(), spec + " theorem vector outside direct span");
    for (const auto& x : c.b_in_a) o.require(x.has_value(), spec + " direct vector outside theorem span");
    o.notes << spec << " rank " << c.rank_a << "=" << c.rank_b << "=" << c.rank_union << "; ";
    ++compared;
  }
  o.require(compared >= 10, "too few algebras compared");
  o.notes << compared << " algebras";
}

void criterion4(Outcome& o) {
  const GDBialgebra g = build("current:g=sl2");
  const CocycleSpace di = solve_extensions_direct(g, 6);
  const auto prof = profile(di, 2);
  o.require(di.dimension() == 4, "dimension " + std::to_string(di.dimension()));
  o.require(prof == std::vector<std::size_t>{3, 1}, "profile " + join(prof));
  o.require(oracle::cocycle_dimension(oracle::from(g), 6) == 4, "oracle dimension differs");
  o.require(solve_extensions_theorem(g).dimension() == 4, "theorem system dimension differs");

  // λ^0 part: f([a,b]) for f ∈ g*; λ^1 part: a symmetric invariant form.
  const std::size_t n = g.dim();
  std::vector<RatVector> coboundaries;
  for (std::size_t f = 0; f < n; ++f) {
    RatVector v(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = g.lie(j, i)[f];
    }
    coboundaries.push_back(v);
  }
  for (const auto& q : di.basis) {
    RatVector a0(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a0[i * n + j] = q.alpha[0][i][j];
    }
    o.require(in_span(coboundaries, a0), "λ^0 part is not of the form f([a,b])");
    const auto& a1 = q.alpha[1];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        o.require(a1[i][j] == a1[j][i], "λ^1 part not symmetric");
        for (std::size_t k = 0; k < n; ++k) {
          Rational lhs = 0, rhs = 0;
          const VElem ij = g.lie(j, i), jk = g.lie(k, j);
          for (std::size_t c = 0; c < n; ++c) {
            lhs += ij[c] * a1[c][k];
            rhs += a1[i][c] * jk[c];
          }
          o.require(lhs == rhs, "λ^1 part not invariant");
        }
      }
    }
    for (std::size_t k = 2; k < q.alpha.size(); ++k) o.require(form_is_zero(q.alpha[k]), "degree ≥ 2 term present");
  }
  o.notes << "dimension 4, profile " << join(prof) << "; λ^0 = f([a,b]), λ^1 = invariant symmetric form";
}

void criterion5(Outcome& o) {
  for (std::size_t m : {3u, 4u}) {
    const std::string spec = "loop_vir_cyclic:m=" + std::to_string(m);
    const GDBialgebra a = build(spec);
    const CocycleSpace s = solve_extensions_direct(a, 6);
    const auto prof = profile(s, 4);
    o.require(s.dimension() == 2 * m, spec + " dimension " + std::to_string(s.dimension()));
    o.require(prof == std::vector<std::size_t>{0, m, 0, m}, spec + " profile " + join(prof));
    for (const auto& q : s.basis) o.require(form_is_zero(q.alpha[0]) && form_is_zero(q.alpha[2]), spec + " α0/α2 present");
    o.require(oracle::cocycle_dimension(oracle::from(a), 6) == 2 * m, spec + " oracle dimension differs");
    o.notes << spec << "=" << s.dimension() << " [" << join(prof) << "]; ";
  }
  for (std::size_t m : {2u, 3u}) {
    const std::string spec = "loop_hv_cyclic:m=" + std::to_string(m);
    const GDBialgebra a = build(spec);
    const CocycleSpace s = solve_extensions_direct(a, 6);
    o.require(s.dimension() == oracle::cocycle_dimension(oracle::from(a), 6), spec + " oracle dimension differs");
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const bool li = i < m, lj = j < m;
        const std::set<unsigned> want = li && lj ? std::set<unsigned>{1, 3}
                                        : li || lj ? std::set<unsigned>{1, 2}
                                                   : std::set<unsigned>{1};
        o.require(support_degrees(s, i, j) == want,
                  spec + " support of (" + a.basis_names()[i] + "," + a.basis_names()[j] + ")");
      }
    }
    o.notes << spec << "=" << s.dimension() << " [" << join(profile(s, 4)) << "]; ";
  }
  o.notes << "loop_hv supports L-L {1,3}, L-H {1,2}, H-H {1}";
}

void criterion6(Outcome& o) {
  std::size_t cocycles = 0;
  for (const auto& spec : testing::catalog_specs()) {
    const GDBialgebra a = build(spec);
    for (const auto& s : {solve_extensions_theorem(a), solve_extensions_direct(a, 6)}) {
      for (const auto& q : s.basis) {
        const auto res = check_coeff_cocycle(a, q, 3, static_cast<std::size_t>(-1));
        const auto rel = coeff_relation_consistency(a, 4, q);
        o.require(res.empty(), spec + " coefficient cocycle residual: " + (res.empty() ? "" : res[0].detail));
        o.require(rel.empty(), spec + " relation residual: " + (rel.empty() ? "" : rel[0].detail));
        ++cocycles;
      }
    }
  }
  o.notes << cocycles << " basis cocycles (both solvers), exhaustive M=3, relations M=4";
}

void criterion7(Outcome& o) {
  auto outer = [](const GDBialgebra& a) {
    const QuadraticLCA r(a);
    const OuterDimension od = outer_dimension(r, 3, 4);
    const oracle::Algebra oa = oracle::from(a);
    const std::size_t oracle_outer = oracle::derivation_dimension(oa, 3, 4) - oracle::inner_dimension(oa, 3, 4);
    return std::make_pair(od, oracle_outer);
  };
  {
    const auto [od, ov] = outer(build("vir"));
    o.require(od.value() == std::optional<std::size_t>(0) && ov == 0, "vir outer dimension");
    o.notes << "vir: 0; ";
  }
  struct Case {
    long alpha, beta;
  };
  for (const Case c : {Case{3, 1}, Case{1, 0}, Case{1, 1}, Case{2, 0}}) {
    const GDBialgebra a = r_ab(c.alpha, c.beta);
    const auto [od, ov] = outer(a);
    const std::size_t want = c.alpha == 1 ? 1 : 0;
    o.require(od.value() == std::optional<std::size_t>(want), a.name() + " outer dimension");
    o.require(ov == want, a.name() + " oracle outer dimension");
    o.notes << a.name() << ": " << od.at_bound << "; ";
    if (c.alpha == 1) {
      const QuadraticLCA r(a);
      const DerivationSpace s = solve_derivations_direct(r);
      DerivationAnsatz q(2, 3, 4);
      q.set(0, 0, 0, 1, 1);
      auto with_q = derivation_vectors(s.inner_basis);
      with_q.push_back(q.coeffs());
      o.require(verify_derivation(r, q).empty(), a.name() + " Q is not a derivation");
      o.require(!in_span(derivation_vectors(s.inner_basis), q.coeffs()), a.name() + " Q is inner");
      o.require(compare_spans(with_q, derivation_vectors(s.basis)).equal(), a.name() + " Q does not complete CInn");
    }
  }
  for (const Case c : {Case{0, 1}, Case{0, 0}, Case{-1, 0}}) {
    const GDBialgebra a = r_ab(c.alpha, c.beta);
    const auto [od, ov] = outer(a);
    o.notes << a.name() << ": " << od.at_bound << " (reported); ";
    o.require(od.at_bound == ov, a.name() + " disagrees with the oracle");
  }
  {
    const auto [od, ov] = outer(build("loop_vir_cyclic:m=3"));
    o.require(od.value() == std::optional<std::size_t>(0) && ov == 0, "loop_vir_cyclic(3) outer dimension");
    o.notes << "loop_vir_cyclic(3): 0; Q(L)=W, Q(W)=0 spans the outer part for α=1";
  }
}

void criterion8(Outcome& o) {
  std::size_t compared = 0;
  for (const auto& spec : testing::catalog_specs()) {
    const QuadraticLCA r(build(spec));
    const auto units = detect_unit_like(r.gd());
    if (!units.left && !units.right) continue;
    const DerivationSpace th = solve_derivations_theorem(r, 4);
    const DerivationSpace di = solve_derivations_direct(r, 3, 4);
    o.require(compare_spans(derivation_vectors(th.basis), derivation_vectors(di.basis)).equal(),
              spec + " theorem and direct derivation spaces differ");
    ++compared;
  }
  o.notes << compared << " algebras with a unit-like element agree; ";

  const QuadraticLCA cur(build("current:g=sl2"));
  std::vector<std::size_t> growth;
  for (unsigned D = 2; D <= 6; ++D) {
    const DerivationSpace s = solve_derivations_direct(cur, 3, D);
    auto family = derivation_vectors(s.inner_basis);
    for (unsigned k = 0; k < D; ++k) {
      DerivationAnsatz d(3, 3, D);
      for (std::size_t j = 0; j < 3; ++j) {
        d.set(j, 1, k, j, 1);
        d.set(j, 0, k + 1, j, 1);
      }
      o.require(verify_derivation(cur, d).empty(), "λ^k(∂+λ)·id is not a derivation");
      family.push_back(d.coeffs());
    }
    o.require(compare_spans(family, derivation_vectors(s.basis)).equal(), "Cur sl2 derivations ≠ p(λ)(∂+λ)id ⊕ inner");
    growth.push_back(s.dimension() - s.inner_dimension());
  }
  o.require(growth == std::vector<std::size_t>{2, 3, 4, 5, 6}, "Cur sl2 outer growth " + join(growth));
  o.notes << "Cur sl2 = p(λ)(∂+λ)·id ⊕ inner, outer dimension at D=2..6: " << join(growth);
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(1);
  std::size_t valid = 0, total = 0, verified = 0;
  auto run_table = [&](const GDBialgebra& a) {
    ++total;
    const QuadraticLCA u = QuadraticLCA::unchecked(a);
    const bool gd = check_novikov(a).empty() && check_lie(a).empty() && check_gd_compat(a).empty();
    const bool conf = check_skew(u).empty() && check_jacobi(u).empty();
    const oracle::Algebra oa = oracle::from(a);
    o.require(gd == conf, "verdicts differ on\n" + emit_algebra_file(a));
    o.require(gd == oracle::gd_axioms_hold(oa) && conf == oracle::conformal_axioms_hold(oa),
              "oracle verdict differs on\n" + emit_algebra_file(a));
    if (!gd) return;
    ++valid;
    const QuadraticLCA r(a);
    for (const auto& q : solve_extensions_theorem(a).basis) {
      o.require(verify_cocycle(a, q).empty(), "theorem cocycle fails");
      ++verified;
    }
    for (const auto& q : solve_extensions_direct(a, 4).basis) {
      o.require(verify_cocycle(a, q).empty(), "direct cocycle fails");
      ++verified;
    }
    for (const auto& d : solve_derivations_direct(r, 2, 3).basis) {
      o.require(verify_derivation(r, d).empty(), "derivation fails");
      ++verified;
    }
    for (std::size_t v = 0; v < a.dim(); ++v) {
      for (unsigned k = 0; k <= 4; ++k) {
        o.require(verify_derivation(r, inner_derivation(r, v, k)).empty(), "inner derivation fails");
        ++verified;
      }
    }
  };
  for (int t = 0; t < 200; ++t) run_table(testing::random_dim2(rng, false));
  const std::size_t uniform_valid = valid;
  std::mt19937_64 sparse_rng(2024);
  for (int t = 0; t < 200; ++t) run_table(testing::random_dim2(sparse_rng, true));

  for (const auto& spec : testing::catalog_specs()) {
    const GDBialgebra a = build(spec);
    const QuadraticLCA r(a);
    for (std::size_t v = 0; v < a.dim(); ++v) {
      for (unsigned k = 0; k <= 4; ++k) {
        o.require(verify_derivation(r, inner_derivation(r, v, k)).empty(), spec + " inner derivation fails");
        ++verified;
      }
    }
    for (const auto& s : {solve_extensions_theorem(a), solve_extensions_direct(a, 6)}) {
      for (const auto& q : s.basis) {
        o.require(verify_cocycle(a, q).empty(), spec + " cocycle fails");
        ++verified;
      }
    }
    if (a.dim() <= 6) {
      for (const auto& d : solve_derivations_direct(r, 3, 4).basis) {
        o.require(verify_derivation(r, d).empty(), spec + " derivation fails");
        ++verified;
      }
    }
  }
  o.notes << "200 uniform tables (" << uniform_valid << " valid) + 200 sparse tables (" << valid - uniform_valid
          << " valid): verdicts agree; " << verified << " solver outputs and inner derivations verified";
  o.require(total == 400, "table count");
}

}  // namespace
}  // namespace gdlca

int main() {
  using namespace gdlca;
  const std::vector<std::function<void(Outcome&)>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                            criterion6, criterion7, criterion8, criterion9};
  std::cout << "tolerance: " << kTolerance << " (exact rational arithmetic)\n";
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << "\n    exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s) " << o.notes.str()
              << "\n";
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
