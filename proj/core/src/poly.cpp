#include "gdlca/poly.hpp"

#include "gdlca/error.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace gdlca {

Symbol parse_symbol(std::string_view name) {
  if (name == "d" || name == "∂" || name == "partial") return Symbol::Partial;
  if (name == "l" || name == "λ" || name == "lambda") return Symbol::Lambda;
  if (name == "m" || name == "μ" || name == "mu") return Symbol::Mu;
  throw InputError("unknown formal symbol '" + std::string(name) + "'");
}

std::string_view symbol_name(Symbol s) {
  switch (s) {
    case Symbol::Partial: return "∂";
    case Symbol::Lambda: return "λ";
    case Symbol::Mu: return "μ";
  }
  return "?";
}

FormalPoly::FormalPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0, 0}, constant);
}

FormalPoly FormalPoly::symbol(Symbol s) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(s)] = 1;
  return monomial(e);
}

FormalPoly FormalPoly::monomial(const Exponents& e, const Rational& coeff) {
  FormalPoly p;
  p.add_term(e, coeff);
  return p;
}

Rational FormalPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned FormalPoly::degree(Symbol s) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(s)]);
  return d;
}

unsigned FormalPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool FormalPoly::depends_on(Symbol s) const { return degree(s) > 0; }

void FormalPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

FormalPoly& FormalPoly::operator*=(const FormalPoly& o) {
  *this = *this * o;
  return *this;
}

FormalPoly& FormalPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
  FormalPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return r;
}

FormalPoly FormalPoly::operator-() const {
  FormalPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string FormalPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Order by total degree descending, then lexicographically descending.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const unsigned dx = x.first[0] + x.first[1] + x.first[2];
    const unsigned dy = y.first[0] + y.first[1] + y.first[2];
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (constant || mag != 1) os << mag.get_str();
    static constexpr Symbol order[] = {Symbol::Partial, Symbol::Lambda, Symbol::Mu};
    for (Symbol s : order) {
      const unsigned k = e[static_cast<std::size_t>(s)];
      if (k == 0) continue;
      os << symbol_name(s);
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

FormalPoly poly_mul(const FormalPoly& p, const FormalPoly& q) { return p * q; }

FormalPoly poly_pow(const FormalPoly& p, unsigned k) {
  FormalPoly result(Rational(1));
  FormalPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

FormalPoly poly_substitute(const FormalPoly& p, Symbol target, const FormalPoly& replacement) {
  const auto t = static_cast<std::size_t>(target);
  std::vector<FormalPoly> powers{FormalPoly(Rational(1))};
  FormalPoly result;
  for (const auto& [e, c] : p.terms()) {
    const unsigned k = e[t];
    while (powers.size() <= k) powers.push_back(powers.back() * replacement);
    Exponents rest = e;
    rest[t] = 0;
    result += FormalPoly::monomial(rest, c) * powers[k];
  }
  return result;
}

FormalPoly poly_substitute(const FormalPoly& p, std::string_view target, const FormalPoly& replacement) {
  return poly_substitute(p, parse_symbol(target), replacement);
}

}  // namespace gdlca
