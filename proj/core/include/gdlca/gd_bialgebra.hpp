#pragma once

#include "gdlca/error.hpp"
#include "gdlca/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gdlca {

/// Element of V, as coordinates in the chosen basis.
class VElem {
 public:
  VElem() = default;
  explicit VElem(std::size_t dim) : coords_(dim) {}
  explicit VElem(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static VElem basis(std::size_t dim, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  bool is_zero() const;

  VElem& operator+=(const VElem& o);
  VElem& operator-=(const VElem& o);
  VElem& operator*=(const Rational& c);
  friend VElem operator+(VElem a, const VElem& b) { return a += b; }
  friend VElem operator-(VElem a, const VElem& b) { return a -= b; }
  friend VElem operator*(const Rational& c, VElem a) { return a *= c; }
  VElem operator-() const;
  friend bool operator==(const VElem& a, const VElem& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Structure-constant tensor: table[i][j][k] is the a_k-coordinate of (a_i op a_j).
using StructureTable = std::vector<std::vector<std::vector<Rational>>>;

enum class Axiom {
  LeftSymmetry,        // (a∘b)∘c - a∘(b∘c) = (b∘a)∘c - b∘(a∘c)
  RightCommutativity,  // (a∘b)∘c = (a∘c)∘b
  Jacobi,              // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
  Compatibility,       // [a∘b,c] - [a∘c,b] + [a,b]∘c - [a,c]∘b - a∘[b,c] = 0
};

std::string axiom_name(Axiom a);

/// One failing basis triple (a_i, a_j, a_k) together with the nonzero residual.
struct Violation {
  Axiom axiom;
  std::size_t i, j, k;
  VElem residual;
};

/// Thrown by validated construction; lists every violated triple.
class AxiomError : public Error {
 public:
  explicit AxiomError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

enum class Validation { Checked, Unchecked };

/// Finite Gel'fand–Dorfman bialgebra (V, ∘, [·,·]) given by structure constants.
/// The Lie bracket is stored only for i < j, so antisymmetry holds by construction.
class GDBialgebra {
 public:
  /// Builds from full n×n×n tables. The Lie table must be antisymmetric. With
  /// Validation::Checked, the Novikov, Jacobi and compatibility identities are verified
  /// on all basis triples and an AxiomError lists any violation.
  static GDBialgebra build(std::string name, std::vector<std::string> basis_names, const StructureTable& novikov,
                           const StructureTable& lie, Validation validation = Validation::Checked);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return basis_names_; }
  std::optional<std::size_t> index_of(const std::string& basis_name) const;

  /// a_i ∘ a_j.
  const VElem& circ(std::size_t i, std::size_t j) const { return novikov_[i * dim() + j]; }
  /// [a_i, a_j].
  VElem lie(std::size_t i, std::size_t j) const;
  VElem basis(std::size_t i) const { return VElem::basis(dim(), i); }

  VElem circ(const VElem& x, const VElem& y) const;
  VElem lie(const VElem& x, const VElem& y) const;

  /// Full tables, in the same layout accepted by build().
  StructureTable novikov_table() const;
  StructureTable lie_table() const;

  friend bool operator==(const GDBialgebra& a, const GDBialgebra& b);

 private:
  GDBialgebra() = default;

  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<VElem> novikov_;                                  // row-major n×n
  std::map<std::pair<std::size_t, std::size_t>, VElem> lie_upper_;  // i < j, nonzero only
};

GDBialgebra gd_build(std::string name, std::vector<std::string> basis_names, const StructureTable& novikov,
                     const StructureTable& lie, Validation validation = Validation::Checked);

std::vector<Violation> check_novikov(const GDBialgebra& a);
std::vector<Violation> check_lie(const GDBialgebra& a);
std::vector<Violation> check_gd_compat(const GDBialgebra& a);

/// x∘y + y∘x.
VElem star(const GDBialgebra& a, const VElem& x, const VElem& y);

/// Zero n×n×n table.
StructureTable zero_table(std::size_t n);

/// Whether V = span{a∘b}.
bool spanned_by_products(const GDBialgebra& a);

}  // namespace gdlca
