#include "gdlca/extensions.hpp"

#include <sstream>

namespace gdlca {

CentralCocycle CentralCocycle::zero(std::size_t dim, unsigned degree_bound) {
  CentralCocycle q;
  q.alpha.assign(degree_bound + 1, BilinearForm(dim, std::vector<Rational>(dim)));
  return q;
}

bool CentralCocycle::is_zero() const {
  for (const auto& form : alpha) {
    for (const auto& row : form) {
      for (const auto& v : row) {
        if (v != 0) return false;
      }
    }
  }
  return true;
}

FormalPoly CentralCocycle::evaluate(std::size_t i, std::size_t j, const FormalPoly& slot) const {
  FormalPoly out;
  FormalPoly power(Rational(1));
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const Rational& c = alpha[k].at(i).at(j);
    if (c != 0) out += power * c;
    if (k + 1 < alpha.size()) power = power * slot;
  }
  return out;
}

RatVector CentralCocycle::flatten(unsigned degree_bound) const {
  const std::size_t n = dim();
  if (alpha.size() > degree_bound + 1) {
    for (std::size_t k = degree_bound + 1; k < alpha.size(); ++k) {
      for (const auto& row : alpha[k]) {
        for (const auto& v : row) {
          if (v != 0) throw InputError("cocycle has nonzero form above the requested degree bound");
        }
      }
    }
  }
  RatVector v((degree_bound + 1) * n * n);
  for (std::size_t k = 0; k < alpha.size() && k <= degree_bound; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v[(k * n + i) * n + j] = alpha[k][i][j];
    }
  }
  return v;
}

CentralCocycle CentralCocycle::unflatten(const RatVector& v, std::size_t dim, unsigned degree_bound) {
  if (v.size() != (degree_bound + 1) * dim * dim) throw InputError("cocycle vector has wrong length");
  CentralCocycle q = zero(dim, degree_bound);
  for (std::size_t k = 0; k <= degree_bound; ++k) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) q.alpha[k][i][j] = v[(k * dim + i) * dim + j];
    }
  }
  return q;
}

CentralCocycle CentralCocycle::trimmed() const {
  CentralCocycle q = *this;
  auto form_zero = [](const BilinearForm& f) {
    for (const auto& row : f) {
      for (const auto& v : row) {
        if (v != 0) return false;
      }
    }
    return true;
  };
  while (q.alpha.size() > 4 && form_zero(q.alpha.back())) q.alpha.pop_back();
  return q;
}

std::string method_name(ExtensionMethod m) { return m == ExtensionMethod::Theorem ? "theorem" : "direct"; }

std::vector<RatVector> CocycleSpace::vectors(unsigned bound) const {
  std::vector<RatVector> out;
  out.reserve(basis.size());
  for (const auto& q : basis) out.push_back(q.flatten(bound));
  return out;
}

namespace {

using Row = RatMatrix::Row;

// Unknown α_k(a_i, a_j) for a degree bound N.
struct Unknowns {
  std::size_t n;
  unsigned degree_bound;
  std::size_t index(unsigned k, std::size_t i, std::size_t j) const { return (k * n + i) * n + j; }
  std::size_t count() const { return (degree_bound + 1) * n * n; }
};

// Adds coef·α_k(x, y) to a row, expanding x and y in the basis.
void add_form(Row& row, const Unknowns& u, unsigned k, const VElem& x, const VElem& y, const Rational& coef) {
  if (coef == 0) return;
  for (std::size_t p = 0; p < u.n; ++p) {
    if (x[p] == 0) continue;
    for (std::size_t q = 0; q < u.n; ++q) {
      if (y[q] == 0) continue;
      Rational& slot = row[u.index(k, p, q)];
      slot += coef * x[p] * y[q];
    }
  }
}

void append_nonzero(RatMatrix& m, Row row) {
  for (auto it = row.begin(); it != row.end();) {
    it = it->second == 0 ? row.erase(it) : std::next(it);
  }
  if (!row.empty()) m.append_row(row);
}

// dim F_k for F_k = {x ∈ span(basis) : x has no α_j with j > k}; returns dim F_k - dim F_{k-1}.
std::vector<std::size_t> degree_profile_of(const std::vector<RatVector>& basis, std::size_t n, unsigned bound) {
  const std::size_t block = n * n;
  std::vector<std::size_t> dims(bound + 1);
  for (unsigned k = 0; k <= bound; ++k) {
    RatMatrix m(0, basis.size());
    for (std::size_t col = (k + 1) * block; col < (bound + 1) * block; ++col) {
      Row row;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (basis[b][col] != 0) row[b] = basis[b][col];
      }
      if (!row.empty()) m.append_row(row);
    }
    dims[k] = nullspace_basis(m).size();
  }
  std::vector<std::size_t> profile(bound + 1);
  for (unsigned k = 0; k <= bound; ++k) profile[k] = dims[k] - (k == 0 ? 0 : dims[k - 1]);
  return profile;
}

// Linear map unknown -> polynomial coefficient.
using LinPoly = std::map<std::size_t, FormalPoly>;

void add_lin(LinPoly& acc, std::size_t unknown, const FormalPoly& p) {
  if (p.is_zero()) return;
  FormalPoly& slot = acc[unknown];
  slot += p;
  if (slot.is_zero()) acc.erase(unknown);
}

// α_s(X, Y) = Σ X_i(-s) Y_j(s) Σ_k s^k α_k(a_i, a_j), calling visit(i, j, X_i(-s)Y_j(s)).
template <typename Visit>
void expand_alpha(const ConformalExpr& x, const ConformalExpr& y, const FormalPoly& s, Visit&& visit) {
  const FormalPoly minus_s = -s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    const FormalPoly left = poly_substitute(x[i], Symbol::Partial, minus_s);
    if (left.is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      const FormalPoly right = poly_substitute(y[j], Symbol::Partial, s);
      if (right.is_zero()) continue;
      visit(i, j, left * right);
    }
  }
}

void add_alpha_lin(LinPoly& acc, const Unknowns& u, const ConformalExpr& x, const ConformalExpr& y,
                   const std::vector<FormalPoly>& powers, const Rational& sign) {
  expand_alpha(x, y, powers.at(1), [&](std::size_t i, std::size_t j, const FormalPoly& factor) {
    for (unsigned k = 0; k <= u.degree_bound; ++k) add_lin(acc, u.index(k, i, j), factor * powers[k] * sign);
  });
}

std::vector<FormalPoly> powers_of(const FormalPoly& s, unsigned up_to) {
  std::vector<FormalPoly> out;
  out.emplace_back(Rational(1));
  for (unsigned k = 1; k <= up_to; ++k) out.push_back(out.back() * s);
  return out;
}

// Splits a linear polynomial identity into one row per (λ, μ) monomial.
void append_identity(RatMatrix& m, const LinPoly& acc) {
  std::map<Exponents, Row> rows;
  for (const auto& [unknown, poly] : acc) {
    for (const auto& [e, c] : poly.terms()) rows[e][unknown] += c;
  }
  for (auto& [e, row] : rows) append_nonzero(m, std::move(row));
}

RatMatrix direct_system(const GDBialgebra& a, unsigned bound) {
  const std::size_t n = a.dim();
  const Unknowns u{n, bound};
  const QuadraticLCA r = QuadraticLCA::unchecked(a);
  const FormalPoly lambda = FormalPoly::lambda(), mu = FormalPoly::mu();
  const auto pl = powers_of(lambda, bound);
  const auto pm = powers_of(mu, bound);
  const auto pneg = powers_of(-lambda, bound);
  const auto psum = powers_of(lambda + mu, bound);
  const FormalPoly one(Rational(1));
  RatMatrix m(0, u.count());

  // Skew-symmetry: α_λ(a,b) + α_{-λ}(b,a) = 0.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      LinPoly acc;
      for (unsigned k = 0; k <= bound; ++k) {
        add_lin(acc, u.index(k, i, j), pl[k]);
        add_lin(acc, u.index(k, j, i), pneg[k]);
      }
      append_identity(m, acc);
    }
  }

  // α_λ(a,[b_μ c]) - α_μ(b,[a_λ c]) - α_{λ+μ}([a_λ b], c) = 0.
  std::vector<ConformalExpr> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(ConformalExpr::term(n, i, one));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ConformalExpr ab = bracket_basis_at(r, i, j, lambda);
      for (std::size_t k = 0; k < n; ++k) {
        LinPoly acc;
        add_alpha_lin(acc, u, e[i], bracket_basis_at(r, j, k, mu), pl, Rational(1));
        add_alpha_lin(acc, u, e[j], bracket_basis_at(r, i, k, lambda), pm, Rational(-1));
        add_alpha_lin(acc, u, ab, e[k], psum, Rational(-1));
        append_identity(m, acc);
      }
    }
  }
  return m;
}

std::vector<CentralCocycle> to_cocycles(const std::vector<RatVector>& vs, std::size_t n, unsigned bound) {
  std::vector<CentralCocycle> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(CentralCocycle::unflatten(v, n, bound).trimmed());
  return out;
}

}  // namespace

CocycleSpace solve_extensions_theorem(const GDBialgebra& a) {
  const std::size_t n = a.dim();
  const Unknowns u{n, 3};
  RatMatrix m(0, u.count());
  std::vector<VElem> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(a.basis(i));

  for (unsigned k = 0; k <= 3; ++k) {
    const Rational parity = (k % 2 == 1) ? Rational(1) : Rational(-1);  // (-1)^{k+1}
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Row row;
        row[u.index(k, i, j)] += 1;
        row[u.index(k, j, i)] -= parity;
        append_nonzero(m, std::move(row));
      }
    }
  }

  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ib = 0; ib < n; ++ib) {
      for (std::size_t ic = 0; ic < n; ++ic) {
        const VElem &x = e[ia], &y = e[ib], &z = e[ic];
        const VElem ab = a.circ(ia, ib), ba = a.circ(ib, ia), cb = a.circ(ic, ib);
        const VElem ba_lie = a.lie(ib, ia), cb_lie = a.lie(ic, ib), ca_lie = a.lie(ic, ia);
        const VElem b_star_c = star(a, y, z), a_star_c = star(a, x, z);
        {
          Row row;
          add_form(row, u, 3, x, cb, 1);
          add_form(row, u, 3, ab, z, -1);
          append_nonzero(m, std::move(row));
        }
        {
          Row row;
          add_form(row, u, 3, ab, z, 1);
          add_form(row, u, 3, ba, z, -1);
          append_nonzero(m, std::move(row));
        }
        {
          Row row;
          add_form(row, u, 2, x, cb, 1);
          add_form(row, u, 3, x, cb_lie, 1);
          add_form(row, u, 2, ab, z, -1);
          add_form(row, u, 3, ba_lie, z, -1);
          append_nonzero(m, std::move(row));
        }
        {
          Row row;
          add_form(row, u, 2, x, b_star_c, 1);
          add_form(row, u, 2, ba, z, 1);
          add_form(row, u, 2, ab, z, -2);
          add_form(row, u, 3, ba_lie, z, -3);
          append_nonzero(m, std::move(row));
        }
        {
          Row row;
          add_form(row, u, 1, x, cb, 1);
          add_form(row, u, 2, x, cb_lie, 1);
          add_form(row, u, 1, ab, z, -1);
          add_form(row, u, 2, ba_lie, z, -1);
          append_nonzero(m, std::move(row));
        }
        {
          Row row;
          add_form(row, u, 1, x, b_star_c, 1);
          add_form(row, u, 1, y, a_star_c, -1);
          add_form(row, u, 1, ba, z, 1);
          add_form(row, u, 1, ab, z, -1);
          add_form(row, u, 2, ba_lie, z, -2);
          append_nonzero(m, std::move(row));
        }
        {
          Row row;
          add_form(row, u, 0, x, cb, 1);
          add_form(row, u, 1, x, cb_lie, 1);
          add_form(row, u, 0, y, a_star_c, -1);
          add_form(row, u, 0, ab, z, -1);
          add_form(row, u, 1, ba_lie, z, -1);
          append_nonzero(m, std::move(row));
        }
        {
          Row row;
          add_form(row, u, 0, x, cb_lie, 1);
          add_form(row, u, 0, y, ca_lie, -1);
          add_form(row, u, 0, ba_lie, z, -1);
          append_nonzero(m, std::move(row));
        }
      }
    }
  }

  const auto kernel = nullspace_basis(m);
  CocycleSpace s{a, ExtensionMethod::Theorem, 3, to_cocycles(kernel, n, 3), std::nullopt, true, {}, {}};
  s.degree_profile = degree_profile_of(kernel, n, 3);
  return s;
}

CocycleSpace solve_extensions_direct(const GDBialgebra& a, unsigned degree_bound) {
  const std::size_t n = a.dim();
  const auto kernel = nullspace_basis(direct_system(a, degree_bound));
  const auto probe = nullspace_basis(direct_system(a, degree_bound + 1));
  CocycleSpace s{a, ExtensionMethod::Direct, degree_bound, to_cocycles(kernel, n, degree_bound), probe.size(),
                 probe.size() == kernel.size(), {}, {}};
  s.degree_profile = degree_profile_of(kernel, n, degree_bound);
  if (!s.stabilized) {
    std::ostringstream os;
    os << "unbounded family: dimension " << kernel.size() << " at degree bound " << degree_bound << ", "
       << probe.size() << " at degree bound " << degree_bound + 1;
    s.warnings.push_back(os.str());
  }
  return s;
}

std::vector<CocycleResidual> verify_cocycle(const GDBialgebra& a, const CentralCocycle& q) {
  const std::size_t n = a.dim();
  if (q.dim() != n) throw InputError("cocycle dimension does not match the algebra");
  const QuadraticLCA r = QuadraticLCA::unchecked(a);
  const FormalPoly lambda = FormalPoly::lambda(), mu = FormalPoly::mu(), sum = lambda + mu;
  const FormalPoly one(Rational(1));
  std::vector<CocycleResidual> out;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FormalPoly res = q.evaluate(i, j, lambda) + q.evaluate(j, i, -lambda);
      if (!res.is_zero()) out.push_back({"skew-symmetry", i, j, 0, std::move(res)});
    }
  }

  auto apply = [&](const ConformalExpr& x, const ConformalExpr& y, const FormalPoly& s) {
    FormalPoly total;
    expand_alpha(x, y, s, [&](std::size_t i, std::size_t j, const FormalPoly& f) { total += f * q.evaluate(i, j, s); });
    return total;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const ConformalExpr ei = ConformalExpr::term(n, i, one);
    for (std::size_t j = 0; j < n; ++j) {
      const ConformalExpr ej = ConformalExpr::term(n, j, one);
      const ConformalExpr ab = bracket_basis_at(r, i, j, lambda);
      for (std::size_t k = 0; k < n; ++k) {
        const ConformalExpr ek = ConformalExpr::term(n, k, one);
        FormalPoly res = apply(ei, bracket_basis_at(r, j, k, mu), lambda) -
                         apply(ej, bracket_basis_at(r, i, k, lambda), mu) - apply(ab, ek, sum);
        if (!res.is_zero()) out.push_back({"jacobi", i, j, k, std::move(res)});
      }
    }
  }
  return out;
}

ExtendedBracket extended_bracket(const GDBialgebra& a, const CentralCocycle& q, std::size_t i, std::size_t j) {
  if (i >= a.dim() || j >= a.dim()) throw InputError("basis index out of range");
  return {bracket_basis(QuadraticLCA::unchecked(a), i, j), q.evaluate(i, j, FormalPoly::lambda())};
}

std::set<unsigned> support_degrees(const CocycleSpace& space, std::size_t i, std::size_t j) {
  std::set<unsigned> out;
  for (const auto& q : space.basis) {
    for (std::size_t k = 0; k < q.alpha.size(); ++k) {
      if (q.alpha[k].at(i).at(j) != 0) out.insert(static_cast<unsigned>(k));
    }
  }
  return out;
}

}  // namespace gdlca
