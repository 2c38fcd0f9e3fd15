#include "gdlca/gd_bialgebra.hpp"

#include "gdlca/matrix.hpp"

#include <set>
#include <sstream>

namespace gdlca {

VElem VElem::basis(std::size_t dim, std::size_t i) {
  VElem v(dim);
  v.coords_.at(i) = 1;
  return v;
}

bool VElem::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

VElem& VElem::operator+=(const VElem& o) {
  if (o.size() != size()) throw InputError("VElem dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

VElem& VElem::operator-=(const VElem& o) {
  if (o.size() != size()) throw InputError("VElem dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

VElem& VElem::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

VElem VElem::operator-() const {
  VElem r = *this;
  for (auto& x : r.coords_) x = -x;
  return r;
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::LeftSymmetry: return "novikov-left-symmetry";
    case Axiom::RightCommutativity: return "novikov-right-commutativity";
    case Axiom::Jacobi: return "lie-jacobi";
    case Axiom::Compatibility: return "gd-compatibility";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<Violation>& vs) {
  std::ostringstream os;
  os << vs.size() << " axiom violation(s)";
  const std::size_t shown = std::min<std::size_t>(vs.size(), 5);
  for (std::size_t n = 0; n < shown; ++n) {
    os << (n == 0 ? ": " : "; ") << axiom_name(vs[n].axiom) << " at (" << vs[n].i << "," << vs[n].j << ","
       << vs[n].k << ")";
  }
  if (shown < vs.size()) os << "; ...";
  return os.str();
}

void check_shape(const StructureTable& t, std::size_t n, const char* which) {
  const std::string what(which);
  if (t.size() != n) throw InputError(what + " table has wrong outer dimension");
  for (const auto& row : t) {
    if (row.size() != n) throw InputError(what + " table has wrong middle dimension");
    for (const auto& v : row) {
      if (v.size() != n) throw InputError(what + " table has wrong inner dimension");
    }
  }
}

}  // namespace

AxiomError::AxiomError(std::vector<Violation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

GDBialgebra GDBialgebra::build(std::string name, std::vector<std::string> basis_names, const StructureTable& novikov,
                               const StructureTable& lie, Validation validation) {
  const std::size_t n = basis_names.size();
  if (n == 0) throw InputError("algebra must have positive dimension");
  std::set<std::string> seen;
  for (const auto& b : basis_names) {
    if (b.empty()) throw InputError("empty basis name");
    if (!seen.insert(b).second) throw InputError("duplicate basis name '" + b + "'");
  }
  check_shape(novikov, n, "novikov");
  check_shape(lie, n, "lie");

  GDBialgebra a;
  a.name_ = std::move(name);
  a.basis_names_ = std::move(basis_names);
  a.novikov_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.novikov_.emplace_back(novikov[i][j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (lie[i][j][k] != -lie[j][i][k]) {
          throw InputError("lie table is not antisymmetric at (" + a.basis_names_[i] + "," + a.basis_names_[j] +
                           ")");
        }
      }
      if (i == j) continue;
      VElem v(lie[i][j]);
      if (!v.is_zero()) a.lie_upper_.emplace(std::make_pair(i, j), std::move(v));
    }
  }

  if (validation == Validation::Checked) {
    std::vector<Violation> all = check_novikov(a);
    for (auto& v : check_lie(a)) all.push_back(std::move(v));
    for (auto& v : check_gd_compat(a)) all.push_back(std::move(v));
    if (!all.empty()) throw AxiomError(std::move(all));
  }
  return a;
}

GDBialgebra gd_build(std::string name, std::vector<std::string> basis_names, const StructureTable& novikov,
                     const StructureTable& lie, Validation validation) {
  return GDBialgebra::build(std::move(name), std::move(basis_names), novikov, lie, validation);
}

std::optional<std::size_t> GDBialgebra::index_of(const std::string& basis_name) const {
  for (std::size_t i = 0; i < basis_names_.size(); ++i) {
    if (basis_names_[i] == basis_name) return i;
  }
  return std::nullopt;
}

VElem GDBialgebra::lie(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw InputError("basis index out of range");
  if (i == j) return VElem(dim());
  const bool swapped = i > j;
  auto it = lie_upper_.find(swapped ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == lie_upper_.end()) return VElem(dim());
  return swapped ? -it->second : it->second;
}

VElem GDBialgebra::circ(const VElem& x, const VElem& y) const {
  VElem r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      r += (x[i] * y[j]) * circ(i, j);
    }
  }
  return r;
}

VElem GDBialgebra::lie(const VElem& x, const VElem& y) const {
  VElem r(dim());
  for (const auto& [ij, v] : lie_upper_) {
    const auto [i, j] = ij;
    const Rational c = x[i] * y[j] - x[j] * y[i];
    if (c != 0) r += c * v;
  }
  return r;
}

StructureTable GDBialgebra::novikov_table() const {
  StructureTable t = zero_table(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) t[i][j] = circ(i, j).coords();
  }
  return t;
}

StructureTable GDBialgebra::lie_table() const {
  StructureTable t = zero_table(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) t[i][j] = lie(i, j).coords();
  }
  return t;
}

bool operator==(const GDBialgebra& a, const GDBialgebra& b) {
  return a.name_ == b.name_ && a.basis_names_ == b.basis_names_ && a.novikov_ == b.novikov_ &&
         a.lie_upper_ == b.lie_upper_;
}

std::vector<Violation> check_novikov(const GDBialgebra& a) {
  std::vector<Violation> out;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const VElem ai = a.basis(i), aj = a.basis(j), ak = a.basis(k);
        const VElem left = a.circ(a.circ(i, j), ak) - a.circ(ai, a.circ(j, k));
        const VElem right = a.circ(a.circ(j, i), ak) - a.circ(aj, a.circ(i, k));
        VElem r1 = left - right;
        if (!r1.is_zero()) out.push_back({Axiom::LeftSymmetry, i, j, k, std::move(r1)});
        VElem r2 = a.circ(a.circ(i, j), ak) - a.circ(a.circ(i, k), aj);
        if (!r2.is_zero()) out.push_back({Axiom::RightCommutativity, i, j, k, std::move(r2)});
      }
    }
  }
  return out;
}

std::vector<Violation> check_lie(const GDBialgebra& a) {
  std::vector<Violation> out;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        VElem r = a.lie(a.lie(i, j), a.basis(k)) + a.lie(a.lie(j, k), a.basis(i)) + a.lie(a.lie(k, i), a.basis(j));
        if (!r.is_zero()) out.push_back({Axiom::Jacobi, i, j, k, std::move(r)});
      }
    }
  }
  return out;
}

std::vector<Violation> check_gd_compat(const GDBialgebra& a) {
  std::vector<Violation> out;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const VElem x = a.basis(i), y = a.basis(j), z = a.basis(k);
        VElem r = a.lie(a.circ(i, j), z) - a.lie(a.circ(i, k), y) + a.circ(a.lie(i, j), z) - a.circ(a.lie(i, k), y) -
                  a.circ(x, a.lie(j, k));
        if (!r.is_zero()) out.push_back({Axiom::Compatibility, i, j, k, std::move(r)});
      }
    }
  }
  return out;
}

VElem star(const GDBialgebra& a, const VElem& x, const VElem& y) { return a.circ(x, y) + a.circ(y, x); }

StructureTable zero_table(std::size_t n) {
  return StructureTable(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
}

bool spanned_by_products(const GDBialgebra& a) {
  std::vector<RatVector> products;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) products.push_back(a.circ(i, j).coords());
  }
  return reduced_echelon(std::move(products)).size() == a.dim();
}

}  // namespace gdlca
