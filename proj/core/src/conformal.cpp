#include "gdlca/conformal.hpp"

#include <sstream>

namespace gdlca {

ConformalExpr ConformalExpr::term(std::size_t dim, std::size_t i, const FormalPoly& p) {
  ConformalExpr e(dim);
  e.coords_.at(i) = p;
  return e;
}

ConformalExpr ConformalExpr::from_velem(const VElem& v, const FormalPoly& p) {
  ConformalExpr e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) e.coords_[i] = p * v[i];
  }
  return e;
}

bool ConformalExpr::is_zero() const {
  for (const auto& p : coords_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

ConformalExpr& ConformalExpr::operator+=(const ConformalExpr& o) {
  if (o.size() != size()) throw InputError("ConformalExpr dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

ConformalExpr& ConformalExpr::operator-=(const ConformalExpr& o) {
  if (o.size() != size()) throw InputError("ConformalExpr dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

ConformalExpr& ConformalExpr::operator*=(const FormalPoly& p) {
  for (auto& c : coords_) {
    if (!c.is_zero()) c = c * p;
  }
  return *this;
}

ConformalExpr ConformalExpr::operator-() const {
  ConformalExpr r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

ConformalExpr ConformalExpr::substitute(Symbol target, const FormalPoly& replacement) const {
  ConformalExpr r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (!coords_[i].is_zero()) r.coords_[i] = poly_substitute(coords_[i], target, replacement);
  }
  return r;
}

std::string ConformalExpr::to_string(const std::vector<std::string>& basis_names) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    const FormalPoly& p = coords_[i];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string ps = p.to_string();
    if (ps == "1") {
      os << basis_names.at(i);
    } else if (ps == "-1") {
      os << "-" << basis_names.at(i);
    } else if (p.terms().size() == 1) {
      os << ps << basis_names.at(i);
    } else {
      os << "(" << ps << ")" << basis_names.at(i);
    }
  }
  return first ? "0" : os.str();
}

QuadraticLCA::QuadraticLCA(GDBialgebra gd) : gd_(std::move(gd)) {
  std::vector<Violation> all = check_novikov(gd_);
  for (auto& v : check_lie(gd_)) all.push_back(std::move(v));
  for (auto& v : check_gd_compat(gd_)) all.push_back(std::move(v));
  if (!all.empty()) throw AxiomError(std::move(all));
}

QuadraticLCA QuadraticLCA::unchecked(GDBialgebra gd) { return QuadraticLCA(std::move(gd), NoCheck{}); }

ConformalExpr bracket_basis_at(const QuadraticLCA& r, std::size_t i, std::size_t j, const FormalPoly& slot) {
  const GDBialgebra& g = r.gd();
  if (i >= g.dim() || j >= g.dim()) throw InputError("basis index out of range");
  const VElem ai = g.basis(i), aj = g.basis(j);
  ConformalExpr out = ConformalExpr::from_velem(g.circ(j, i), FormalPoly::d());
  out += ConformalExpr::from_velem(g.lie(j, i));
  out += ConformalExpr::from_velem(star(g, ai, aj), slot);
  return out;
}

ConformalExpr bracket_basis(const QuadraticLCA& r, std::size_t i, std::size_t j) {
  return bracket_basis_at(r, i, j, FormalPoly::lambda());
}

ConformalExpr bracket_general(const QuadraticLCA& r, const ConformalExpr& x, const ConformalExpr& y,
                              const FormalPoly& slot) {
  const std::size_t n = r.dim();
  if (x.size() != n || y.size() != n) throw InputError("ConformalExpr dimension mismatch");
  if (slot.depends_on(Symbol::Partial)) throw InputError("bracket slot must not contain ∂: " + slot.to_string());
  const FormalPoly minus_slot = -slot;
  const FormalPoly shifted = slot + FormalPoly::d();
  ConformalExpr out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    const FormalPoly left = poly_substitute(x[i], Symbol::Partial, minus_slot);
    if (left.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const FormalPoly right = poly_substitute(y[j], Symbol::Partial, shifted);
      ConformalExpr b = bracket_basis_at(r, i, j, slot);
      if (b.is_zero()) continue;
      out += (left * right) * b;
    }
  }
  return out;
}

std::vector<ConformalViolation> check_skew(const QuadraticLCA& r) {
  std::vector<ConformalViolation> out;
  const FormalPoly reflected = -FormalPoly::lambda() - FormalPoly::d();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) {
      const ConformalExpr lhs = bracket_basis(r, i, j);
      const ConformalExpr rhs = bracket_basis_at(r, j, i, FormalPoly::mu()).substitute(Symbol::Mu, reflected);
      ConformalExpr res = lhs + rhs;
      if (!res.is_zero()) out.push_back({ConformalAxiom::SkewSymmetry, i, j, 0, std::move(res)});
    }
  }
  return out;
}

std::vector<ConformalViolation> check_jacobi(const QuadraticLCA& r) {
  std::vector<ConformalViolation> out;
  const std::size_t n = r.dim();
  const FormalPoly lambda = FormalPoly::lambda();
  const FormalPoly mu = FormalPoly::mu();
  const FormalPoly sum = lambda + mu;
  const FormalPoly one(Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    const ConformalExpr a = ConformalExpr::term(n, i, one);
    for (std::size_t j = 0; j < n; ++j) {
      const ConformalExpr b = ConformalExpr::term(n, j, one);
      const ConformalExpr ab = bracket_general(r, a, b, lambda);
      for (std::size_t k = 0; k < n; ++k) {
        const ConformalExpr c = ConformalExpr::term(n, k, one);
        const ConformalExpr lhs = bracket_general(r, a, bracket_general(r, b, c, mu), lambda);
        const ConformalExpr rhs1 = bracket_general(r, ab, c, sum);
        const ConformalExpr rhs2 = bracket_general(r, b, bracket_general(r, a, c, lambda), mu);
        ConformalExpr res = lhs - rhs1 - rhs2;
        if (!res.is_zero()) out.push_back({ConformalAxiom::Jacobi, i, j, k, std::move(res)});
      }
    }
  }
  return out;
}

}  // namespace gdlca
