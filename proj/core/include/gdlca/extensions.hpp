#pragma once

#include "gdlca/conformal.hpp"
#include "gdlca/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gdlca {

/// Square matrix of a bilinear form on V: form[i][j] = β(a_i, a_j).
using BilinearForm = std::vector<std::vector<Rational>>;

/// The bilinear forms α_0, α_1, ... of a central cocycle α_λ(a,b) = Σ_k λ^k α_k(a,b).
/// Solutions of the theorem system always have exactly four forms (k = 0..3); the
/// direct solver may carry more when its degree bound is larger.
struct CentralCocycle {
  std::vector<BilinearForm> alpha;

  static CentralCocycle zero(std::size_t dim, unsigned degree_bound = 3);

  std::size_t dim() const { return alpha.empty() ? 0 : alpha.front().size(); }
  unsigned degree_bound() const { return static_cast<unsigned>(alpha.size()) - 1; }
  bool is_zero() const;

  /// α_slot(a_i, a_j) = Σ_k slot^k α_k(a_i, a_j).
  FormalPoly evaluate(std::size_t i, std::size_t j, const FormalPoly& slot) const;

  /// Flattened coordinates with index (k·n + i)·n + j, padded with zeros up to `degree_bound`.
  RatVector flatten(unsigned degree_bound) const;
  static CentralCocycle unflatten(const RatVector& v, std::size_t dim, unsigned degree_bound);

  /// Drops trailing all-zero forms above degree 3 (never below four forms).
  CentralCocycle trimmed() const;

  friend bool operator==(const CentralCocycle& a, const CentralCocycle& b) { return a.alpha == b.alpha; }
};

enum class ExtensionMethod { Theorem, Direct };
std::string method_name(ExtensionMethod m);

/// Space of central extensions by a one-dimensional center.
struct CocycleSpace {
  GDBialgebra algebra;
  ExtensionMethod method;
  unsigned degree_bound = 3;
  std::vector<CentralCocycle> basis;
  /// Direct method only: dimension with degree bound N+1, and whether it matched.
  std::optional<std::size_t> probe_dimension;
  bool stabilized = true;
  /// degree_profile[k] = dim{α : α_j = 0 for j > k} - dim{α : α_j = 0 for j ≥ k}.
  std::vector<std::size_t> degree_profile;
  std::vector<std::string> warnings;

  std::size_t dimension() const { return basis.size(); }
  /// Basis flattened with a common degree bound, for span comparisons.
  std::vector<RatVector> vectors(unsigned degree_bound) const;
};

/// Solves the reduced bilinear-form system (parity, α_3 invariance, and the six
/// mixed-degree identities) over the 4n² unknowns α_k(a_i, a_j), k ≤ 3.
CocycleSpace solve_extensions_theorem(const GDBialgebra& a);

/// Brute-force oracle: expands skew-symmetry and the cocycle Jacobi identity for the
/// ansatz α_λ = Σ_{k≤N} λ^k α_k directly through the λ-bracket and collects every λ^p μ^q
/// coefficient. Also solves at N+1 to detect families that do not stabilize.
CocycleSpace solve_extensions_direct(const GDBialgebra& a, unsigned degree_bound = 6);

struct CocycleResidual {
  std::string identity;  // "skew-symmetry" or "jacobi"
  std::size_t i, j, k;
  FormalPoly residual;
};

/// Substitutes α into skew-symmetry and the cocycle Jacobi identity as polynomial
/// identities in (λ, μ) on all basis triples. Empty iff α is a cocycle.
std::vector<CocycleResidual> verify_cocycle(const GDBialgebra& a, const CentralCocycle& q);

struct ExtendedBracket {
  ConformalExpr module_part;
  FormalPoly central;
};

/// [a_i λ a_j] in the central extension: bracket_basis(i, j) plus α_λ(a_i, a_j)𝔠.
ExtendedBracket extended_bracket(const GDBialgebra& a, const CentralCocycle& q, std::size_t i, std::size_t j);

/// Degrees k for which some basis element has α_k(a_i, a_j) ≠ 0.
std::set<unsigned> support_degrees(const CocycleSpace& space, std::size_t i, std::size_t j);

// ---------------------------------------------------------------------------
// Coefficient algebra L(V) and its induced 2-cocycles.

/// Generator a_basis ⊗ t^index.
struct Mode {
  std::size_t basis;
  long index;
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// Linear combination of generators plus a multiple of the central element 𝔠_{-1}.
struct CoeffElement {
  std::map<Mode, Rational> modes;
  Rational central;

  void add(const Mode& m, const Rational& c);
  friend bool operator==(const CoeffElement& a, const CoeffElement& b) {
    return a.modes == b.modes && a.central == b.central;
  }
  std::string to_string(const std::vector<std::string>& basis_names) const;
};

/// Closed form of [a_i ⊗ t^m, a_j ⊗ t^n] in Coeff of the extension:
/// [b,a]_{m+n} + m(a∘b)_{m+n-1} - n(b∘a)_{m+n-1} + Σ_k m(m-1)…(m-k+1) α_k(a,b) δ_{m+n-k+1,0} 𝔠.
CoeffElement coeff_bracket(const GDBialgebra& a, const CentralCocycle& q, const Mode& x, const Mode& y);

struct CoeffResidual {
  std::string check;  // "antisymmetry", "cocycle" or "relation"
  std::vector<Mode> modes;
  std::string detail;
};

/// Antisymmetry and the Lie 2-cocycle identity for π = central part of coeff_bracket, over
/// generators with indices in [-window, window]. Exhaustive when samples ≥ ((2w+1)n)³,
/// otherwise `samples` triples drawn with the given seed.
std::vector<CoeffResidual> check_coeff_cocycle(const GDBialgebra& a, const CentralCocycle& q, long window,
                                               std::size_t samples, std::uint64_t seed = 0);

/// Recomputes every [a_m, b_n] for |m|,|n| ≤ window from the n-th products of the
/// λ-bracket (with (∂x)_k = -k x_{k-1} and 𝔠_k = 0 for k ≠ -1) and compares with
/// coeff_bracket. The central part is included when q is given.
std::vector<CoeffResidual> coeff_relation_consistency(const GDBialgebra& a, long window,
                                                      const std::optional<CentralCocycle>& q = std::nullopt);

}  // namespace gdlca
