#pragma once

#include "gdlca/gd_bialgebra.hpp"
#include "gdlca/poly.hpp"

#include <string>
#include <vector>

namespace gdlca {

/// Element Σ p_i(∂, λ, μ) a_i of V ⊗ Q[∂, λ, μ]. The ∂ in a coefficient acts on the
/// module; λ and μ are scalar parameters.
class ConformalExpr {
 public:
  ConformalExpr() = default;
  explicit ConformalExpr(std::size_t dim) : coords_(dim) {}
  explicit ConformalExpr(std::vector<FormalPoly> coords) : coords_(std::move(coords)) {}

  /// p · a_i.
  static ConformalExpr term(std::size_t dim, std::size_t i, const FormalPoly& p);
  /// Embeds v ∈ V with constant coefficients, multiplied by p.
  static ConformalExpr from_velem(const VElem& v, const FormalPoly& p = FormalPoly(Rational(1)));

  std::size_t size() const noexcept { return coords_.size(); }
  const FormalPoly& operator[](std::size_t i) const { return coords_[i]; }
  FormalPoly& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<FormalPoly>& coords() const noexcept { return coords_; }
  bool is_zero() const;

  ConformalExpr& operator+=(const ConformalExpr& o);
  ConformalExpr& operator-=(const ConformalExpr& o);
  /// Scales every coordinate by the polynomial p.
  ConformalExpr& operator*=(const FormalPoly& p);
  friend ConformalExpr operator+(ConformalExpr a, const ConformalExpr& b) { return a += b; }
  friend ConformalExpr operator-(ConformalExpr a, const ConformalExpr& b) { return a -= b; }
  friend ConformalExpr operator*(const FormalPoly& p, ConformalExpr a) { return a *= p; }
  ConformalExpr operator-() const;
  friend bool operator==(const ConformalExpr& a, const ConformalExpr& b) { return a.coords_ == b.coords_; }

  /// Substitutes one symbol in every coordinate.
  ConformalExpr substitute(Symbol target, const FormalPoly& replacement) const;

  /// e.g. "(∂ + 2λ)L + 3W".
  std::string to_string(const std::vector<std::string>& basis_names) const;

 private:
  std::vector<FormalPoly> coords_;
};

/// Quadratic Lie conformal algebra C[∂]V generated by a GD bialgebra.
class QuadraticLCA {
 public:
  /// Requires the bialgebra to satisfy all three axiom checkers (throws AxiomError otherwise).
  explicit QuadraticLCA(GDBialgebra gd);
  /// Wraps a bialgebra without checking it; used to examine corrupted tables.
  static QuadraticLCA unchecked(GDBialgebra gd);

  const GDBialgebra& gd() const noexcept { return gd_; }
  std::size_t dim() const noexcept { return gd_.dim(); }

 private:
  struct NoCheck {};
  QuadraticLCA(GDBialgebra gd, NoCheck) : gd_(std::move(gd)) {}
  GDBialgebra gd_;
};

/// [a_i λ a_j] = ∂(a_j∘a_i) + [a_j, a_i] + λ(a_i∗a_j).
ConformalExpr bracket_basis(const QuadraticLCA& r, std::size_t i, std::size_t j);

/// Same basis bracket with λ replaced by an arbitrary slot polynomial free of ∂.
ConformalExpr bracket_basis_at(const QuadraticLCA& r, std::size_t i, std::size_t j, const FormalPoly& slot);

/// [x_slot y] for general module elements, by bilinearity and sesquilinearity:
/// p(∂) on the left becomes p(-slot), q(∂) on the right becomes q(slot + ∂).
/// Throws InputError if the slot contains ∂.
ConformalExpr bracket_general(const QuadraticLCA& r, const ConformalExpr& x, const ConformalExpr& y,
                              const FormalPoly& slot);

enum class ConformalAxiom { SkewSymmetry, Jacobi };

struct ConformalViolation {
  ConformalAxiom axiom;
  std::size_t i, j, k;  // k unused for skew-symmetry
  ConformalExpr residual;
};

/// [a_i λ a_j] + [a_j μ a_i]|_{μ = -λ-∂} for every basis pair; reports nonzero residuals.
std::vector<ConformalViolation> check_skew(const QuadraticLCA& r);

/// [a λ [b μ c]] - [[a λ b] λ+μ c] - [b μ [a λ c]] for every basis triple.
std::vector<ConformalViolation> check_jacobi(const QuadraticLCA& r);

}  // namespace gdlca
