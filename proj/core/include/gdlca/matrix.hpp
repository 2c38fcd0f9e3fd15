#pragma once

#include "gdlca/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace gdlca {

/// Dense rational vector.
using RatVector = std::vector<Rational>;

/// Sparse rational matrix, stored row-wise. Zero entries are never stored.
class RatMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  const Row& row(std::size_t r) const { return rows_.at(r); }

  /// Appends a row; entries must be < cols(). Zero entries are dropped.
  std::size_t append_row(const Row& row);

  static RatMatrix from_dense(const std::vector<RatVector>& rows, std::size_t cols);

  /// Product M·x.
  RatVector apply(const RatVector& x) const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Exact basis of {x : Mx = 0}, in reduced row echelon form: each vector has leading
/// coefficient 1 at a column where every other basis vector is zero, and the basis is
/// sorted by that column. The result is a canonical function of the kernel.
std::vector<RatVector> nullspace_basis(const RatMatrix& m);

/// Rank via the same fraction-free elimination used by nullspace_basis.
std::size_t rank(const RatMatrix& m);

/// Reduced row echelon form of the span of `vectors` (zero rows removed). Two lists
/// span the same subspace iff their echelon forms are equal.
std::vector<RatVector> reduced_echelon(std::vector<RatVector> vectors);

/// Coordinates of v in a reduced echelon basis, or nullopt when v is outside the span.
std::optional<RatVector> coordinates_in(const std::vector<RatVector>& echelon_basis, const RatVector& v);

/// Mutual-membership certificate for two subspaces of the same ambient space.
struct SpanComparison {
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::size_t rank_union = 0;
  /// coords_a_in_b[i] = coordinates of a[i] in reduced_echelon(b), when it lies in span(b).
  std::vector<std::optional<RatVector>> a_in_b;
  std::vector<std::optional<RatVector>> b_in_a;

  bool equal() const { return rank_a == rank_b && rank_a == rank_union; }
};

SpanComparison compare_spans(const std::vector<RatVector>& a, const std::vector<RatVector>& b);

}  // namespace gdlca
