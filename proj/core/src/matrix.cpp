#include "gdlca/matrix.hpp"

#include "gdlca/error.hpp"

#include <algorithm>
#include <utility>

namespace gdlca {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

Rational RatMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_.size() || c >= cols_) throw InputError("matrix index out of range");
  if (v == 0) {
    rows_[r].erase(c);
  } else {
    rows_[r][c] = v;
  }
}

void RatMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_.size() || c >= cols_) throw InputError("matrix index out of range");
  if (v == 0) return;
  auto [it, inserted] = rows_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) rows_[r].erase(it);
  }
}

std::size_t RatMatrix::append_row(const Row& row) {
  Row clean;
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw InputError("matrix column out of range");
    if (v != 0) clean.emplace(c, v);
  }
  rows_.push_back(std::move(clean));
  return rows_.size() - 1;
}

RatMatrix RatMatrix::from_dense(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("dense row has wrong length");
    Row row;
    for (std::size_t c = 0; c < cols; ++c) {
      if (r[c] != 0) row.emplace(c, r[c]);
    }
    m.append_row(row);
  }
  return m;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw InputError("vector length does not match matrix columns");
  RatVector y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) y[r] += v * x[c];
  }
  return y;
}

namespace {

// Integer row sorted by column; entries nonzero.
using IntRow = std::vector<std::pair<std::size_t, Integer>>;

IntRow to_primitive_integer_row(const RatMatrix::Row& row) {
  Integer lcm = 1;
  for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  Integer content = 0;
  for (const auto& [c, v] : row) {
    Integer z = v.get_num() * (lcm / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    out.emplace_back(c, std::move(z));
  }
  if (content > 1) {
    for (auto& [c, z] : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

void make_primitive(IntRow& row) {
  Integer content = 0;
  for (const auto& [c, z] : row) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    if (content == 1) return;
  }
  if (content > 1) {
    for (auto& [c, z] : row) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  }
}

// Returns pa*row - ra*pivot with the leading column cancelled.
IntRow eliminate(const IntRow& row, const IntRow& pivot) {
  const Integer& ra = row.front().second;
  const Integer& pa = pivot.front().second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), ra.get_mpz_t(), pa.get_mpz_t());
  const Integer row_scale = pa / g;
  const Integer pivot_scale = ra / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j >= pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, row_scale * row[i].second);
      ++i;
    } else if (i >= row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -pivot_scale * pivot[j].second);
      ++j;
    } else {
      Integer v = row_scale * row[i].second - pivot_scale * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

// Fraction-free forward elimination. Rows are bucketed by leading column; in each
// column the pivot is the row whose leading entry has the smallest magnitude.
std::vector<IntRow> echelonize(const RatMatrix& m) {
  std::vector<std::vector<IntRow>> buckets(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).empty()) continue;
    IntRow row = to_primitive_integer_row(m.row(r));
    buckets[row.front().first].push_back(std::move(row));
  }
  std::vector<IntRow> pivots;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<IntRow> bucket = std::move(buckets[c]);
    if (bucket.empty()) continue;
    std::size_t best = 0;
    for (std::size_t k = 1; k < bucket.size(); ++k) {
      const int cmp = mpz_cmpabs(bucket[k].front().second.get_mpz_t(), bucket[best].front().second.get_mpz_t());
      if (cmp < 0 || (cmp == 0 && bucket[k].size() < bucket[best].size())) best = k;
    }
    std::swap(bucket[best], bucket.front());
    for (std::size_t k = 1; k < bucket.size(); ++k) {
      IntRow reduced = eliminate(bucket[k], bucket.front());
      if (!reduced.empty()) buckets[reduced.front().first].push_back(std::move(reduced));
    }
    pivots.push_back(std::move(bucket.front()));
  }
  return pivots;
}

// Reduced echelon rows over Q from an integer echelon form (pivots sorted by column).
std::vector<RatMatrix::Row> back_substitute(const std::vector<IntRow>& pivots) {
  std::vector<RatMatrix::Row> reduced(pivots.size());
  for (std::size_t idx = pivots.size(); idx-- > 0;) {
    const IntRow& p = pivots[idx];
    RatMatrix::Row row;
    const Rational lead(p.front().second);
    for (const auto& [c, z] : p) row.emplace(c, Rational(z) / lead);
    // Clear entries in later pivot columns using the already reduced rows below.
    for (std::size_t later = idx + 1; later < pivots.size(); ++later) {
      const std::size_t pc = pivots[later].front().first;
      auto it = row.find(pc);
      if (it == row.end()) continue;
      const Rational factor = it->second;
      for (const auto& [c, v] : reduced[later]) {
        auto [jt, inserted] = row.try_emplace(c, -factor * v);
        if (!inserted) {
          jt->second -= factor * v;
          if (jt->second == 0) row.erase(jt);
        }
      }
    }
    reduced[idx] = std::move(row);
  }
  return reduced;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return echelonize(m).size(); }

std::vector<RatVector> nullspace_basis(const RatMatrix& m) {
  const std::size_t n = m.cols();
  const std::vector<IntRow> pivots = echelonize(m);
  const std::vector<RatMatrix::Row> rref = back_substitute(pivots);
  std::vector<bool> is_pivot(n, false);
  for (const auto& p : pivots) is_pivot[p.front().first] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < rref.size(); ++r) {
      auto it = rref[r].find(f);
      if (it != rref[r].end()) v[pivots[r].front().first] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return reduced_echelon(std::move(basis));
}

std::vector<RatVector> reduced_echelon(std::vector<RatVector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw InputError("vectors of different lengths");
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < vectors.size(); ++c) {
    std::size_t sel = r;
    while (sel < vectors.size() && vectors[sel][c] == 0) ++sel;
    if (sel == vectors.size()) continue;
    std::swap(vectors[r], vectors[sel]);
    const Rational inv = 1 / vectors[r][c];
    for (std::size_t k = c; k < n; ++k) vectors[r][k] *= inv;
    for (std::size_t o = 0; o < vectors.size(); ++o) {
      if (o == r || vectors[o][c] == 0) continue;
      const Rational f = vectors[o][c];
      for (std::size_t k = c; k < n; ++k) {
        if (vectors[r][k] != 0) vectors[o][k] -= f * vectors[r][k];
      }
    }
    ++r;
  }
  vectors.resize(r);
  return vectors;
}

std::optional<RatVector> coordinates_in(const std::vector<RatVector>& echelon_basis, const RatVector& v) {
  RatVector coords(echelon_basis.size());
  RatVector residual = v;
  for (std::size_t i = 0; i < echelon_basis.size(); ++i) {
    const RatVector& b = echelon_basis[i];
    std::size_t lead = 0;
    while (lead < b.size() && b[lead] == 0) ++lead;
    if (lead == b.size()) throw InputError("zero vector in echelon basis");
    coords[i] = v.at(lead);
    if (coords[i] == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k] != 0) residual[k] -= coords[i] * b[k];
    }
  }
  for (const auto& x : residual) {
    if (x != 0) return std::nullopt;
  }
  return coords;
}

SpanComparison compare_spans(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  SpanComparison cmp;
  const auto ea = reduced_echelon(a);
  const auto eb = reduced_echelon(b);
  cmp.rank_a = ea.size();
  cmp.rank_b = eb.size();
  std::vector<RatVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  cmp.rank_union = reduced_echelon(std::move(both)).size();
  for (const auto& v : a) cmp.a_in_b.push_back(coordinates_in(eb, v));
  for (const auto& v : b) cmp.b_in_a.push_back(coordinates_in(ea, v));
  return cmp;
}

}  // namespace gdlca
