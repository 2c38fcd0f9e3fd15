#include "gdlca/extensions.hpp"

#include <random>
#include <sstream>

namespace gdlca {

void CoeffElement::add(const Mode& m, const Rational& c) {
  if (c == 0) return;
  Rational& slot = modes[m];
  slot += c;
  if (slot == 0) modes.erase(m);
}

std::string CoeffElement::to_string(const std::vector<std::string>& basis_names) const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& name) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) os << gdlca::to_string(mag) << "·";
    os << name;
  };
  for (const auto& [m, c] : modes) emit(c, basis_names.at(m.basis) + "_" + std::to_string(m.index));
  if (central != 0) emit(central, "c");
  return first ? "0" : os.str();
}

namespace {

Rational central_term(const CentralCocycle& q, const Mode& x, const Mode& y) {
  Rational out;
  for (std::size_t k = 0; k < q.alpha.size(); ++k) {
    if (x.index + y.index - static_cast<long>(k) + 1 != 0) continue;
    const Rational& c = q.alpha[k].at(x.basis).at(y.basis);
    if (c != 0) out += Rational(falling_factorial(x.index, static_cast<unsigned>(k))) * c;
  }
  return out;
}

void add_velem(CoeffElement& out, const VElem& v, long index, const Rational& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) out.add({k, index}, c * v[k]);
  }
}

std::string describe_modes(const std::vector<Mode>& ms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ms.size(); ++i) os << (i ? ", " : "") << "(" << ms[i].basis << "," << ms[i].index << ")";
  return os.str();
}

}  // namespace

CoeffElement coeff_bracket(const GDBialgebra& a, const CentralCocycle& q, const Mode& x, const Mode& y) {
  if (x.basis >= a.dim() || y.basis >= a.dim()) throw InputError("basis index out of range");
  if (q.dim() != a.dim()) throw InputError("cocycle dimension does not match the algebra");
  const long m = x.index, n = y.index;
  CoeffElement out;
  add_velem(out, a.lie(y.basis, x.basis), m + n, 1);
  add_velem(out, a.circ(x.basis, y.basis), m + n - 1, Rational(m));
  add_velem(out, a.circ(y.basis, x.basis), m + n - 1, Rational(-n));
  out.central = central_term(q, x, y);
  return out;
}

std::vector<CoeffResidual> check_coeff_cocycle(const GDBialgebra& a, const CentralCocycle& q, long window,
                                               std::size_t samples, std::uint64_t seed) {
  if (window < 1) throw InputError("window must be at least 1");
  if (samples < 1) throw InputError("samples must be at least 1");
  const std::size_t n = a.dim();
  std::vector<Mode> gens;
  for (std::size_t b = 0; b < n; ++b) {
    for (long m = -window; m <= window; ++m) gens.push_back({b, m});
  }
  const std::size_t g = gens.size();

  // π extended linearly to a combination of modes.
  auto pi = [&](const CoeffElement& u, const Mode& z) {
    Rational s;
    for (const auto& [m, c] : u.modes) s += c * central_term(q, m, z);
    return s;
  };

  std::vector<CoeffResidual> out;
  for (std::size_t s = 0; s < g; ++s) {
    for (std::size_t t = 0; t < g; ++t) {
      const Rational r = central_term(q, gens[s], gens[t]) + central_term(q, gens[t], gens[s]);
      if (r != 0) out.push_back({"antisymmetry", {gens[s], gens[t]}, "π(x,y) + π(y,x) = " + to_string(r)});
    }
  }

  std::vector<CoeffElement> table(g * g);
  const CentralCocycle zero = CentralCocycle::zero(n);
  for (std::size_t s = 0; s < g; ++s) {
    for (std::size_t t = 0; t < g; ++t) table[s * g + t] = coeff_bracket(a, zero, gens[s], gens[t]);
  }
  auto check_triple = [&](std::size_t x, std::size_t y, std::size_t z) {
    const Rational r = pi(table[x * g + y], gens[z]) + pi(table[y * g + z], gens[x]) + pi(table[z * g + x], gens[y]);
    if (r != 0) {
      out.push_back({"cocycle", {gens[x], gens[y], gens[z]}, "π([x,y],z) + π([y,z],x) + π([z,x],y) = " + to_string(r)});
    }
  };

  const double total = static_cast<double>(g) * static_cast<double>(g) * static_cast<double>(g);
  if (static_cast<double>(samples) >= total) {
    for (std::size_t x = 0; x < g; ++x) {
      for (std::size_t y = 0; y < g; ++y) {
        for (std::size_t z = 0; z < g; ++z) check_triple(x, y, z);
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, g - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
      check_triple(x, y, z);
    }
  }
  return out;
}

std::vector<CoeffResidual> coeff_relation_consistency(const GDBialgebra& a, long window,
                                                      const std::optional<CentralCocycle>& q) {
  const std::size_t n = a.dim();
  const CentralCocycle cocycle = q ? *q : CentralCocycle::zero(n);
  if (cocycle.dim() != n) throw InputError("cocycle dimension does not match the algebra");
  std::vector<CoeffResidual> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExtendedBracket br = extended_bracket(a, cocycle, i, j);
      unsigned top = br.central.degree(Symbol::Lambda);
      for (const auto& p : br.module_part.coords()) top = std::max(top, p.degree(Symbol::Lambda));

      for (long m = -window; m <= window; ++m) {
        for (long nn = -window; nn <= window; ++nn) {
          CoeffElement lhs;
          // [a_m, b_n] = Σ_j C(m, j) (a_(j) b)_{m+n-j}, with a_(j) b = j!·[λ^j] of the λ-bracket.
          for (unsigned jj = 0; jj <= top; ++jj) {
            const Rational weight = Rational(binomial(m, jj)) * Rational(falling_factorial(jj, jj));
            if (weight == 0) continue;
            const long idx = m + nn - static_cast<long>(jj);
            for (std::size_t k = 0; k < n; ++k) {
              for (const auto& [e, c] : br.module_part[k].terms()) {
                if (e[1] != jj || e[2] != 0) continue;
                // (∂^p x)_idx = (-1)^p idx(idx-1)…(idx-p+1) x_{idx-p}
                const unsigned p = e[0];
                Rational f = Rational(falling_factorial(idx, p));
                if (p % 2 == 1) f = -f;
                lhs.add({k, idx - static_cast<long>(p)}, weight * c * f);
              }
            }
            if (idx == -1) lhs.central += weight * br.central.coeff({0, jj, 0});
          }
          const CoeffElement rhs = coeff_bracket(a, cocycle, {i, m}, {j, nn});
          if (!(lhs == rhs)) {
            out.push_back({"relation", {Mode{i, m}, Mode{j, nn}},
                           "first principles " + lhs.to_string(a.basis_names()) + " vs closed form " +
                               rhs.to_string(a.basis_names()) + " at " + describe_modes({{i, m}, {j, nn}})});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace gdlca
