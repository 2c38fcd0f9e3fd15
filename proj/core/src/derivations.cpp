#include "gdlca/derivations.hpp"

#include <functional>
#include <sstream>

namespace gdlca {

DerivationAnsatz::DerivationAnsatz(std::size_t dim, unsigned partial_bound, unsigned lambda_bound)
    : dim_(dim), p_(partial_bound), d_(lambda_bound), coeffs_(dim * (partial_bound + 1) * (lambda_bound + 1) * dim) {}

DerivationAnsatz::DerivationAnsatz(std::size_t dim, unsigned partial_bound, unsigned lambda_bound, RatVector coeffs)
    : dim_(dim), p_(partial_bound), d_(lambda_bound), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != dim * (partial_bound + 1) * (lambda_bound + 1) * dim) {
    throw InputError("derivation coefficient vector has wrong length");
  }
}

std::size_t DerivationAnsatz::index(std::size_t j, unsigned i, unsigned k, std::size_t c) const {
  if (j >= dim_ || c >= dim_ || i > p_ || k > d_) throw InputError("derivation index out of bounds");
  return ((j * (p_ + 1) + i) * (d_ + 1) + k) * dim_ + c;
}

bool DerivationAnsatz::is_zero() const {
  for (const auto& v : coeffs_) {
    if (v != 0) return false;
  }
  return true;
}

unsigned DerivationAnsatz::used_partial_degree() const {
  unsigned top = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    for (unsigned i = 0; i <= p_; ++i) {
      for (unsigned k = 0; k <= d_; ++k) {
        for (std::size_t c = 0; c < dim_; ++c) {
          if (at(j, i, k, c) != 0) top = std::max(top, i);
        }
      }
    }
  }
  return top;
}

unsigned DerivationAnsatz::used_lambda_degree() const {
  unsigned top = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    for (unsigned i = 0; i <= p_; ++i) {
      for (unsigned k = 0; k <= d_; ++k) {
        for (std::size_t c = 0; c < dim_; ++c) {
          if (at(j, i, k, c) != 0) top = std::max(top, k);
        }
      }
    }
  }
  return top;
}

ConformalExpr DerivationAnsatz::image(std::size_t j) const {
  ConformalExpr out(dim_);
  for (unsigned i = 0; i <= p_; ++i) {
    for (unsigned k = 0; k <= d_; ++k) {
      for (std::size_t c = 0; c < dim_; ++c) {
        const Rational& v = at(j, i, k, c);
        if (v != 0) out[c].add_term({i, k, 0}, v);
      }
    }
  }
  return out;
}

DerivationAnsatz DerivationAnsatz::from_images(const std::vector<ConformalExpr>& images, unsigned partial_bound,
                                               unsigned lambda_bound) {
  const std::size_t n = images.size();
  DerivationAnsatz d(n, partial_bound, lambda_bound);
  for (std::size_t j = 0; j < n; ++j) {
    if (images[j].size() != n) throw InputError("derivation image has wrong dimension");
    for (std::size_t c = 0; c < n; ++c) {
      for (const auto& [e, v] : images[j][c].terms()) {
        if (e[2] != 0) throw InputError("derivation image depends on μ");
        if (e[0] > partial_bound || e[1] > lambda_bound) throw InputError("derivation image exceeds the ansatz bounds");
        d.set(j, e[0], e[1], c, v);
      }
    }
  }
  return d;
}

DerivationAnsatz DerivationAnsatz::rebound(unsigned partial_bound, unsigned lambda_bound) const {
  std::vector<ConformalExpr> images;
  for (std::size_t j = 0; j < dim_; ++j) images.push_back(image(j));
  return from_images(images, partial_bound, lambda_bound);
}

std::string DerivationAnsatz::to_string(const std::vector<std::string>& basis_names) const {
  std::ostringstream os;
  for (std::size_t j = 0; j < dim_; ++j) {
    os << (j ? "; " : "") << "d(" << basis_names.at(j) << ") = " << image(j).to_string(basis_names);
  }
  return os.str();
}

std::string method_name(DerivationMethod m) {
  switch (m) {
    case DerivationMethod::Direct: return "direct";
    case DerivationMethod::Theorem: return "theorem";
    case DerivationMethod::TheoremReduced: return "theorem-reduced";
  }
  return "unknown";
}

std::vector<RatVector> derivation_vectors(const std::vector<DerivationAnsatz>& ds) {
  std::vector<RatVector> out;
  out.reserve(ds.size());
  for (const auto& d : ds) out.push_back(d.coeffs());
  return out;
}

namespace {

using Row = RatMatrix::Row;
// (output coordinate, exponents) -> row over the unknowns.
using RowSet = std::map<std::pair<std::size_t, Exponents>, Row>;

void flush(RatMatrix& m, RowSet& rows) {
  for (auto& [key, row] : rows) {
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
    if (!row.empty()) m.append_row(row);
  }
  rows.clear();
}

void accumulate(RowSet& rows, std::size_t unknown, std::size_t coord, const FormalPoly& p, const Rational& sign) {
  for (const auto& [e, c] : p.terms()) rows[{coord, e}][unknown] += sign * c;
}

std::vector<FormalPoly> powers_of(const FormalPoly& s, unsigned up_to) {
  std::vector<FormalPoly> out;
  out.emplace_back(Rational(1));
  for (unsigned k = 1; k <= up_to; ++k) out.push_back(out.back() * s);
  return out;
}

std::vector<DerivationAnsatz> to_ansatze(const std::vector<RatVector>& vs, std::size_t n, unsigned p, unsigned d) {
  std::vector<DerivationAnsatz> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(n, p, d, v);
  return out;
}

// Adds to `base` every vector of `candidates` that is not yet in its span.
std::vector<RatVector> complement(const std::vector<RatVector>& base, const std::vector<RatVector>& candidates) {
  std::vector<RatVector> current = base;
  std::size_t r = reduced_echelon(current).size();
  std::vector<RatVector> added;
  for (const auto& v : candidates) {
    current.push_back(v);
    const std::size_t r2 = reduced_echelon(current).size();
    if (r2 > r) {
      added.push_back(v);
      r = r2;
    } else {
      current.pop_back();
    }
  }
  return added;
}

void fill_inner_outer(DerivationSpace& s, const QuadraticLCA& r, std::size_t probe_dimension) {
  const std::size_t n = r.dim();
  s.inner_basis = inner_span(r, s.partial_bound, s.lambda_bound);
  const auto raw = derivation_vectors(s.basis);
  const auto inner = derivation_vectors(s.inner_basis);
  const SpanComparison cmp = compare_spans(inner, raw);
  if (cmp.rank_union != cmp.rank_b) s.notes.push_back("inner derivations outside the computed solution space");
  s.outer_representatives = to_ansatze(complement(inner, raw), n, s.partial_bound, s.lambda_bound);
  const std::size_t inner_probe = inner_span(r, s.partial_bound, s.lambda_bound + 2).size();
  s.outer.at_bound = s.basis.size() - s.inner_basis.size();
  s.outer.at_probe = probe_dimension - inner_probe;
  if (!s.outer.stabilized()) {
    std::ostringstream os;
    os << "outer dimension not stabilized: " << s.outer.at_bound << " at λ-bound " << s.lambda_bound << ", "
       << s.outer.at_probe << " at λ-bound " << s.lambda_bound + 2;
    s.notes.push_back(os.str());
  }
}

}  // namespace

std::vector<DerivationAnsatz> derivation_basis_direct(const QuadraticLCA& r, unsigned partial_bound,
                                                      unsigned lambda_bound) {
  const std::size_t n = r.dim();
  const unsigned P = partial_bound, D = lambda_bound;
  const DerivationAnsatz shape(n, P, D);
  const FormalPoly lambda = FormalPoly::lambda(), mu = FormalPoly::mu(), d = FormalPoly::d();
  const auto pl = powers_of(lambda, D);
  const auto pleft = powers_of(-lambda - mu, P);
  const auto pright = powers_of(mu + d, P);
  const FormalPoly shift = d + lambda;

  std::vector<std::vector<ConformalExpr>> b_mu(n), b_sum(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b_mu[i].push_back(bracket_basis_at(r, i, j, mu));
      b_sum[i].push_back(bracket_basis_at(r, i, j, lambda + mu));
    }
  }

  RatMatrix m(0, shape.size());
  RowSet rows;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // d_λ(p(∂, μ) a_t) = p(∂ + λ, μ) d_λ(a_t)
      for (std::size_t t = 0; t < n; ++t) {
        if (b_mu[a][b][t].is_zero()) continue;
        const FormalPoly q = poly_substitute(b_mu[a][b][t], Symbol::Partial, shift);
        for (unsigned i = 0; i <= P; ++i) {
          for (unsigned k = 0; k <= D; ++k) {
            const FormalPoly f = q * FormalPoly::monomial({i, k, 0});
            for (std::size_t c = 0; c < n; ++c) accumulate(rows, shape.index(t, i, k, c), c, f, 1);
          }
        }
      }
      // [(∂^i λ^k a_c)_{λ+μ} b] = λ^k (-λ-μ)^i [a_c λ+μ b]
      for (unsigned i = 0; i <= P; ++i) {
        for (unsigned k = 0; k <= D; ++k) {
          const FormalPoly f = pl[k] * pleft[i];
          for (std::size_t c = 0; c < n; ++c) {
            const ConformalExpr& br = b_sum[c][b];
            for (std::size_t t = 0; t < n; ++t) {
              if (!br[t].is_zero()) accumulate(rows, shape.index(a, i, k, c), t, f * br[t], -1);
            }
          }
        }
      }
      // [a_μ ∂^i λ^k a_c] = λ^k (μ+∂)^i [a_μ a_c]
      for (unsigned i = 0; i <= P; ++i) {
        for (unsigned k = 0; k <= D; ++k) {
          const FormalPoly f = pl[k] * pright[i];
          for (std::size_t c = 0; c < n; ++c) {
            const ConformalExpr& br = b_mu[a][c];
            for (std::size_t t = 0; t < n; ++t) {
              if (!br[t].is_zero()) accumulate(rows, shape.index(b, i, k, c), t, f * br[t], -1);
            }
          }
        }
      }
      flush(m, rows);
    }
  }
  return to_ansatze(nullspace_basis(m), n, P, D);
}

DerivationSpace solve_derivations_direct(const QuadraticLCA& r, unsigned partial_bound, unsigned lambda_bound) {
  DerivationSpace s(r.gd());
  s.method = DerivationMethod::Direct;
  s.partial_bound = partial_bound;
  s.lambda_bound = lambda_bound;
  s.basis = derivation_basis_direct(r, partial_bound, lambda_bound);
  fill_inner_outer(s, r, derivation_basis_direct(r, partial_bound, lambda_bound + 2).size());
  return s;
}

UnitLikeDetection detect_unit_like(const GDBialgebra& a) {
  const std::size_t n = a.dim();
  auto scan = [&](bool left) -> std::optional<UnitLike> {
    // Unknowns c_0..c_{n-1}, k:  Σ_i c_i (a_i∘a_b or a_b∘a_i) - k a_b = 0 for all b.
    RatMatrix m(0, n + 1);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t t = 0; t < n; ++t) {
        Row row;
        for (std::size_t i = 0; i < n; ++i) {
          const Rational& v = left ? a.circ(i, b)[t] : a.circ(b, i)[t];
          if (v != 0) row[i] = v;
        }
        if (t == b) row[n] = -1;
        if (!row.empty()) m.append_row(row);
      }
    }
    for (const auto& v : nullspace_basis(m)) {
      if (v[n] == 0) continue;
      std::vector<Rational> x(v.begin(), v.begin() + static_cast<long>(n));
      VElem elem(std::move(x));
      elem *= 1 / v[n];
      return UnitLike{std::move(elem), Rational(1)};
    }
    return std::nullopt;
  };
  return {scan(true), scan(false)};
}

namespace {

// One equation of the theorem system, instantiated at a basis pair.
class TheoremEquation {
 public:
  TheoremEquation(const DerivationAnsatz& shape, RowSet& rows) : shape_(shape), rows_(rows) {}

  // coef · λ^shift · M(d^i(src)), M given on basis vectors.
  void term(const VElem& src, unsigned i, unsigned shift, const Rational& coef,
            const std::function<VElem(std::size_t)>& map) {
    if (coef == 0 || src.is_zero()) return;
    const std::size_t n = shape_.dim();
    std::vector<VElem> images;
    images.reserve(n);
    for (std::size_t c = 0; c < n; ++c) images.push_back(map(c));
    for (std::size_t p = 0; p < n; ++p) {
      if (src[p] == 0) continue;
      for (unsigned k = 0; k <= shape_.lambda_bound(); ++k) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t t = 0; t < n; ++t) {
            if (images[c][t] == 0) continue;
            rows_[{t, Exponents{0, k + shift, 0}}][shape_.index(p, i, k, c)] += coef * src[p] * images[c][t];
          }
        }
      }
    }
  }

 private:
  const DerivationAnsatz& shape_;
  RowSet& rows_;
};

Rational sgn(unsigned i) { return i % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

DerivationSpace solve_derivations_theorem(const QuadraticLCA& r, unsigned lambda_bound, bool assert_simple) {
  const GDBialgebra& g = r.gd();
  const std::size_t n = g.dim();
  const UnitLikeDetection unit = detect_unit_like(g);
  const bool reduced = unit.left.has_value();
  if (!reduced && !unit.right && !assert_simple) {
    throw HypothesisError(
        "theorem solver not applicable: no element x with x∘b = kb or b∘x = kb (k ≠ 0) for all b, and the Novikov "
        "algebra was not asserted simple");
  }

  auto solve = [&](unsigned D) {
    const DerivationAnsatz sh(n, 3, D);
    RatMatrix m(0, sh.size());
    RowSet rows;
    if (reduced) {
      for (std::size_t j = 0; j < n; ++j) {
        for (unsigned i = 2; i <= 3; ++i) {
          for (unsigned k = 0; k <= D; ++k) {
            for (std::size_t c = 0; c < n; ++c) m.append_row(Row{{sh.index(j, i, k, c), Rational(1)}});
          }
        }
      }
    }
    for (std::size_t ia = 0; ia < n; ++ia) {
      for (std::size_t ib = 0; ib < n; ++ib) {
        const VElem xa = g.basis(ia), xb = g.basis(ib);
        const VElem ba = g.circ(ib, ia), ab = g.circ(ia, ib), astarb = star(g, xa, xb), lie_ba = g.lie(ib, ia);
        const std::function<VElem(std::size_t)> id = [&](std::size_t c) { return g.basis(c); };
        const std::function<VElem(std::size_t)> circ_r_a = [&](std::size_t c) { return g.circ(c, ia); };
        const std::function<VElem(std::size_t)> circ_l_b = [&](std::size_t c) { return g.circ(ib, c); };
        const std::function<VElem(std::size_t)> circ_l_a = [&](std::size_t c) { return g.circ(ia, c); };
        const std::function<VElem(std::size_t)> star_r_a = [&](std::size_t c) { return star(g, g.basis(c), xa); };
        const std::function<VElem(std::size_t)> star_r_b = [&](std::size_t c) { return star(g, g.basis(c), xb); };
        const std::function<VElem(std::size_t)> lie_r_a = [&](std::size_t c) { return g.lie(c, ia); };
        const std::function<VElem(std::size_t)> lie_l_b = [&](std::size_t c) { return g.lie(ib, c); };
        TheoremEquation eq(sh, rows);
        auto next = [&] { flush(m, rows); };

        if (reduced) {
          eq.term(ba, 1, 0, 1, id);
          eq.term(xb, 1, 0, -1, circ_r_a);
          next();
          eq.term(xa, 1, 0, 1, star_r_b);
          eq.term(xb, 1, 0, -1, star_r_a);
          next();
          eq.term(ba, 0, 0, 1, id);
          eq.term(ba, 1, 1, 1, id);
          eq.term(lie_ba, 1, 0, 1, id);
          eq.term(xa, 0, 0, -1, circ_l_b);
          eq.term(xa, 1, 1, 1, circ_l_b);
          eq.term(xb, 0, 0, -1, circ_r_a);
          eq.term(xb, 1, 0, -1, lie_r_a);
          next();
          eq.term(ba, 0, 1, 1, id);
          eq.term(lie_ba, 0, 0, 1, id);
          eq.term(xa, 0, 1, -1, star_r_b);
          eq.term(xa, 1, 2, 1, star_r_b);
          eq.term(xa, 0, 0, -1, lie_l_b);
          eq.term(xa, 1, 1, 1, lie_l_b);
          eq.term(xb, 0, 0, -1, lie_r_a);
          next();
          continue;
        }

        eq.term(ba, 3, 0, 1, id);
        eq.term(xb, 3, 0, -1, circ_r_a);
        next();
        eq.term(ab, 3, 0, 1, id);
        eq.term(xb, 3, 0, -1, circ_r_a);
        next();
        eq.term(xa, 3, 0, 1, circ_l_b);
        eq.term(xb, 3, 0, -1, circ_l_a);
        next();
        eq.term(xb, 3, 0, 2, circ_r_a);
        eq.term(xb, 3, 0, 1, circ_l_a);
        next();
        eq.term(ba, 3, 1, 1, id);
        eq.term(ba, 2, 0, 1, id);
        eq.term(lie_ba, 3, 0, 1, id);
        eq.term(xb, 3, 0, -1, lie_r_a);
        eq.term(xb, 2, 0, -1, circ_r_a);
        next();
        eq.term(astarb, 2, 0, 1, id);
        eq.term(xb, 2, 0, -2, circ_r_a);
        eq.term(xb, 2, 0, -1, star_r_a);
        eq.term(xb, 3, 0, -3, lie_r_a);
        next();
        eq.term(xa, 3, 1, -3, circ_l_b);
        eq.term(xa, 2, 0, 1, circ_l_b);
        eq.term(xb, 2, 0, 1, circ_r_a);
        eq.term(xb, 2, 0, 2, star_r_a);
        eq.term(xb, 3, 0, 3, lie_r_a);
        next();
        eq.term(xa, 3, 1, -4, star_r_b);
        eq.term(xa, 2, 0, 1, star_r_b);
        eq.term(xa, 3, 0, -1, lie_l_b);
        eq.term(xb, 2, 0, 1, star_r_a);
        eq.term(xb, 3, 0, 1, lie_r_a);
        next();
        eq.term(ba, 2, 1, 1, id);
        eq.term(ba, 1, 0, 1, id);
        eq.term(lie_ba, 2, 0, 1, id);
        eq.term(xb, 1, 0, -1, circ_r_a);
        eq.term(xb, 2, 0, -1, lie_r_a);
        next();
        eq.term(astarb, 1, 0, 1, id);
        for (unsigned i = 1; i <= 3; ++i) eq.term(xa, i, i - 1, -sgn(i) * i, circ_l_b);
        eq.term(xb, 1, 0, -1, circ_r_a);
        eq.term(xb, 1, 0, -1, star_r_a);
        eq.term(xb, 2, 0, -2, lie_r_a);
        next();
        for (unsigned i = 1; i <= 3; ++i) eq.term(xa, i, i - 1, sgn(i) * Rational(binomial(i + 1, 2)), star_r_b);
        for (unsigned i = 2; i <= 3; ++i) eq.term(xa, i, i - 2, sgn(i) * Rational(binomial(i, 2)), lie_l_b);
        eq.term(xb, 1, 0, 1, star_r_a);
        eq.term(xb, 2, 0, 1, lie_r_a);
        next();
        eq.term(ba, 1, 1, 1, id);
        eq.term(ba, 0, 0, 1, id);
        eq.term(lie_ba, 1, 0, 1, id);
        for (unsigned i = 0; i <= 3; ++i) eq.term(xa, i, i, -sgn(i), circ_l_b);
        eq.term(xb, 0, 0, -1, circ_r_a);
        eq.term(xb, 1, 0, -1, lie_r_a);
        next();
        eq.term(astarb, 0, 0, 1, id);
        for (unsigned i = 0; i <= 3; ++i) eq.term(xa, i, i, -sgn(i) * (i + 1), star_r_b);
        for (unsigned i = 1; i <= 3; ++i) eq.term(xa, i, i - 1, -sgn(i) * i, lie_l_b);
        eq.term(xb, 0, 0, -1, star_r_a);
        eq.term(xb, 1, 0, -1, lie_r_a);
        next();
        eq.term(ba, 0, 1, 1, id);
        eq.term(lie_ba, 0, 0, 1, id);
        for (unsigned i = 0; i <= 3; ++i) eq.term(xa, i, i + 1, -sgn(i), star_r_b);
        for (unsigned i = 0; i <= 3; ++i) eq.term(xa, i, i, -sgn(i), lie_l_b);
        eq.term(xb, 0, 0, -1, lie_r_a);
        next();
      }
    }
    return to_ansatze(nullspace_basis(m), n, 3, D);
  };

  DerivationSpace s(r.gd());
  s.method = reduced ? DerivationMethod::TheoremReduced : DerivationMethod::Theorem;
  s.partial_bound = 3;
  s.lambda_bound = lambda_bound;
  s.basis = solve(lambda_bound);
  if (reduced) s.notes.push_back("left-unit-like element found; solved the reduced d^0, d^1 system");
  else if (unit.right) s.notes.push_back("right-unit-like element found; solved the full d^0..d^3 system");
  else s.notes.push_back("Novikov algebra asserted simple; solved the full d^0..d^3 system");
  fill_inner_outer(s, r, solve(lambda_bound + 2).size());
  return s;
}

DerivationAnsatz inner_derivation(const QuadraticLCA& r, std::size_t v, unsigned k) {
  if (v >= r.dim()) throw InputError("basis index out of range");
  const FormalPoly factor = poly_pow(-FormalPoly::lambda(), k);
  std::vector<ConformalExpr> images;
  for (std::size_t j = 0; j < r.dim(); ++j) images.push_back(factor * bracket_basis(r, v, j));
  return DerivationAnsatz::from_images(images, 1, k + 1);
}

std::vector<DerivationAnsatz> inner_span(const QuadraticLCA& r, unsigned partial_bound, unsigned lambda_bound) {
  const std::size_t n = r.dim();
  const unsigned top_k = lambda_bound + static_cast<unsigned>(n) + 1;
  const unsigned big_p = std::max(partial_bound, 1u), big_d = top_k + 1;
  std::vector<DerivationAnsatz> gens;
  for (std::size_t v = 0; v < n; ++v) {
    for (unsigned k = 0; k <= top_k; ++k) gens.push_back(inner_derivation(r, v, k).rebound(big_p, big_d));
  }
  const DerivationAnsatz shape(n, big_p, big_d);
  RatMatrix out_of_bounds(0, gens.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (unsigned i = 0; i <= big_p; ++i) {
      for (unsigned k = 0; k <= big_d; ++k) {
        if (i <= partial_bound && k <= lambda_bound) continue;
        for (std::size_t c = 0; c < n; ++c) {
          Row row;
          const std::size_t idx = shape.index(j, i, k, c);
          for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].coeffs()[idx] != 0) row[g] = gens[g].coeffs()[idx];
          }
          if (!row.empty()) out_of_bounds.append_row(row);
        }
      }
    }
  }
  std::vector<RatVector> vectors;
  for (const auto& combo : nullspace_basis(out_of_bounds)) {
    RatVector sum(shape.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (combo[g] == 0) continue;
      for (std::size_t x = 0; x < sum.size(); ++x) {
        if (gens[g].coeffs()[x] != 0) sum[x] += combo[g] * gens[g].coeffs()[x];
      }
    }
    vectors.push_back(DerivationAnsatz(n, big_p, big_d, std::move(sum)).rebound(partial_bound, lambda_bound).coeffs());
  }
  return to_ansatze(reduced_echelon(std::move(vectors)), n, partial_bound, lambda_bound);
}

OuterDimension outer_dimension(const QuadraticLCA& r, unsigned partial_bound, unsigned lambda_bound) {
  OuterDimension o;
  o.at_bound = derivation_basis_direct(r, partial_bound, lambda_bound).size() -
               inner_span(r, partial_bound, lambda_bound).size();
  o.at_probe = derivation_basis_direct(r, partial_bound, lambda_bound + 2).size() -
               inner_span(r, partial_bound, lambda_bound + 2).size();
  return o;
}

std::vector<DerivationResidual> verify_derivation(const QuadraticLCA& r, const DerivationAnsatz& d) {
  const std::size_t n = r.dim();
  if (d.dim() != n) throw InputError("derivation dimension does not match the algebra");
  const FormalPoly lambda = FormalPoly::lambda(), mu = FormalPoly::mu();
  const FormalPoly shift = FormalPoly::d() + lambda;
  const FormalPoly one(Rational(1));
  std::vector<ConformalExpr> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(d.image(j));
  std::vector<DerivationResidual> out;
  for (std::size_t i = 0; i < n; ++i) {
    const ConformalExpr ei = ConformalExpr::term(n, i, one);
    for (std::size_t j = 0; j < n; ++j) {
      const ConformalExpr ej = ConformalExpr::term(n, j, one);
      const ConformalExpr br = bracket_basis_at(r, i, j, mu);
      ConformalExpr lhs(n);
      for (std::size_t t = 0; t < n; ++t) {
        if (br[t].is_zero()) continue;
        lhs += poly_substitute(br[t], Symbol::Partial, shift) * images[t];
      }
      ConformalExpr res =
          lhs - bracket_general(r, images[i], ej, lambda + mu) - bracket_general(r, ei, images[j], mu);
      if (!res.is_zero()) out.push_back({i, j, std::move(res)});
    }
  }
  return out;
}

}  // namespace gdlca
