#pragma once

#include "gdlca/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace gdlca {

/// The three commuting formal symbols every polynomial in this library may use.
enum class Symbol : std::uint8_t { Partial = 0, Lambda = 1, Mu = 2 };

/// Parses "d"/"∂"/"partial", "l"/"λ"/"lambda", "m"/"μ"/"mu". Throws InputError otherwise.
Symbol parse_symbol(std::string_view name);
std::string_view symbol_name(Symbol s);

/// Exponents of (∂, λ, μ).
using Exponents = std::array<unsigned, 3>;

/// Sparse multivariate polynomial over Q in ∂, λ, μ. Zero coefficients are never stored,
/// so structural equality of the term maps is polynomial equality.
class FormalPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  FormalPoly() = default;
  FormalPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit FormalPoly(long constant) : FormalPoly(Rational(constant)) {}

  static FormalPoly symbol(Symbol s);
  static FormalPoly monomial(const Exponents& e, const Rational& coeff = 1);
  static FormalPoly d() { return symbol(Symbol::Partial); }
  static FormalPoly lambda() { return symbol(Symbol::Lambda); }
  static FormalPoly mu() { return symbol(Symbol::Mu); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Exponents& e) const;
  unsigned degree(Symbol s) const;
  unsigned total_degree() const;
  bool depends_on(Symbol s) const;

  /// Adds c·monomial(e), dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  FormalPoly& operator+=(const FormalPoly& o);
  FormalPoly& operator-=(const FormalPoly& o);
  FormalPoly& operator*=(const FormalPoly& o);
  FormalPoly& operator*=(const Rational& c);

  friend FormalPoly operator+(FormalPoly a, const FormalPoly& b) { return a += b; }
  friend FormalPoly operator-(FormalPoly a, const FormalPoly& b) { return a -= b; }
  friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b);
  friend FormalPoly operator*(FormalPoly a, const Rational& c) { return a *= c; }
  friend FormalPoly operator*(const Rational& c, FormalPoly a) { return a *= c; }
  FormalPoly operator-() const;

  friend bool operator==(const FormalPoly& a, const FormalPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, highest terms first, e.g. "∂ + 2λ" or "λ^3 - 1/2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

FormalPoly poly_mul(const FormalPoly& p, const FormalPoly& q);
FormalPoly poly_pow(const FormalPoly& p, unsigned k);

/// Replaces every occurrence of `target` in p by `replacement` and expands. The
/// replacement may itself contain `target` (e.g. ∂ := ∂ + λ); substitution is
/// applied to the original polynomial only once.
FormalPoly poly_substitute(const FormalPoly& p, Symbol target, const FormalPoly& replacement);
FormalPoly poly_substitute(const FormalPoly& p, std::string_view target, const FormalPoly& replacement);

}  // namespace gdlca
