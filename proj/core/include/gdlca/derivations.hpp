#pragma once

#include "gdlca/conformal.hpp"
#include "gdlca/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdlca {

/// Raised when the theorem solver's applicability hypothesis cannot be established.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Conformal linear map d_λ(a_j) = Σ_{i≤P, k≤D} ∂^i λ^k v_{j,i,k} with v_{j,i,k} ∈ V.
/// Coordinates are stored flat with index ((j·(P+1) + i)·(D+1) + k)·n + c.
class DerivationAnsatz {
 public:
  DerivationAnsatz() = default;
  DerivationAnsatz(std::size_t dim, unsigned partial_bound, unsigned lambda_bound);
  DerivationAnsatz(std::size_t dim, unsigned partial_bound, unsigned lambda_bound, RatVector coeffs);

  std::size_t dim() const noexcept { return dim_; }
  unsigned partial_bound() const noexcept { return p_; }
  unsigned lambda_bound() const noexcept { return d_; }
  const RatVector& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::size_t index(std::size_t j, unsigned i, unsigned k, std::size_t c) const;
  const Rational& at(std::size_t j, unsigned i, unsigned k, std::size_t c) const { return coeffs_[index(j, i, k, c)]; }
  void set(std::size_t j, unsigned i, unsigned k, std::size_t c, const Rational& v) { coeffs_[index(j, i, k, c)] = v; }

  bool is_zero() const;
  /// Largest ∂-power and λ-power actually used (0 for the zero map).
  unsigned used_partial_degree() const;
  unsigned used_lambda_degree() const;

  /// d_λ(a_j) as an element of V ⊗ Q[∂, λ].
  ConformalExpr image(std::size_t j) const;
  /// Builds the ansatz from images d_λ(a_j); throws InputError if a coefficient is out of bounds
  /// or uses μ.
  static DerivationAnsatz from_images(const std::vector<ConformalExpr>& images, unsigned partial_bound,
                                      unsigned lambda_bound);
  /// Same map with other bounds; throws InputError if it does not fit.
  DerivationAnsatz rebound(unsigned partial_bound, unsigned lambda_bound) const;

  std::string to_string(const std::vector<std::string>& basis_names) const;

  friend bool operator==(const DerivationAnsatz& a, const DerivationAnsatz& b) {
    return a.dim_ == b.dim_ && a.p_ == b.p_ && a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t dim_ = 0;
  unsigned p_ = 0;
  unsigned d_ = 0;
  RatVector coeffs_;
};

struct OuterDimension {
  std::size_t at_bound = 0;       // at (P, D)
  std::size_t at_probe = 0;       // at (P, D+2)
  bool stabilized() const { return at_bound == at_probe; }
  std::optional<std::size_t> value() const {
    return stabilized() ? std::optional<std::size_t>(at_bound) : std::nullopt;
  }
};

enum class DerivationMethod { Direct, Theorem, TheoremReduced };
std::string method_name(DerivationMethod m);

struct DerivationSpace {
  explicit DerivationSpace(GDBialgebra a) : algebra(std::move(a)) {}

  GDBialgebra algebra;
  DerivationMethod method = DerivationMethod::Direct;
  unsigned partial_bound = 3;
  unsigned lambda_bound = 4;
  std::vector<DerivationAnsatz> basis;
  /// Inner derivations that fit the bounds, reduced echelon.
  std::vector<DerivationAnsatz> inner_basis;
  /// Solution vectors completing inner_basis to a basis of the whole space.
  std::vector<DerivationAnsatz> outer_representatives;
  OuterDimension outer;
  std::vector<std::string> notes;

  std::size_t dimension() const { return basis.size(); }
  std::size_t inner_dimension() const { return inner_basis.size(); }
};

/// Expands d_λ[a_μ b] = [(d_λ a)_{λ+μ} b] + [a_μ (d_λ b)] over all basis pairs for the
/// bounded ansatz and returns the full space with inner and outer data.
DerivationSpace solve_derivations_direct(const QuadraticLCA& r, unsigned partial_bound = 3, unsigned lambda_bound = 4);

/// Raw solution vectors only (no inner/outer analysis).
std::vector<DerivationAnsatz> derivation_basis_direct(const QuadraticLCA& r, unsigned partial_bound,
                                                      unsigned lambda_bound);

struct UnitLike {
  VElem element;
  Rational k;
};

struct UnitLikeDetection {
  std::optional<UnitLike> left;   // x∘b = k b for all b
  std::optional<UnitLike> right;  // b∘x = k b for all b
};

UnitLikeDetection detect_unit_like(const GDBialgebra& a);

/// Solves the coefficient system for d^0..d^3 (right-unit-like or asserted simple), or the
/// reduced d^0, d^1 system when a left-unit-like element exists. Results are embedded with
/// partial bound 3. Throws HypothesisError when neither hypothesis holds.
DerivationSpace solve_derivations_theorem(const QuadraticLCA& r, unsigned lambda_bound = 4, bool assert_simple = false);

/// b ↦ (-λ)^k [a_v λ b], with bounds (1, k+1).
DerivationAnsatz inner_derivation(const QuadraticLCA& r, std::size_t v, unsigned k);

/// Inner derivations whose ∂- and λ-degrees fit (P, D), as a reduced echelon basis. Generated by
/// ad(∂^k a_v) for k ≤ D + n + 1 and intersected with the bounded ansatz.
std::vector<DerivationAnsatz> inner_span(const QuadraticLCA& r, unsigned partial_bound, unsigned lambda_bound);

/// dim(solutions) - dim(inner) at (P, D) and at (P, D+2).
OuterDimension outer_dimension(const QuadraticLCA& r, unsigned partial_bound, unsigned lambda_bound);

struct DerivationResidual {
  std::size_t i, j;
  ConformalExpr residual;
};

/// Substitutes d into d_λ[a_μ b] = [(d_λ a)_{λ+μ} b] + [a_μ (d_λ b)] for all basis pairs.
std::vector<DerivationResidual> verify_derivation(const QuadraticLCA& r, const DerivationAnsatz& d);

/// Flat coordinate vectors of a family of ansätze sharing the same bounds.
std::vector<RatVector> derivation_vectors(const std::vector<DerivationAnsatz>& ds);

}  // namespace gdlca
