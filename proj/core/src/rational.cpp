#include "gdlca/rational.hpp"

#include "gdlca/error.hpp"

#include <cctype>

namespace gdlca {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d = 1;
  if (slash != std::string_view::npos) {
    d = Integer(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in rational literal '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer falling_factorial(long m, unsigned k) {
  Integer result = 1;
  for (unsigned i = 0; i < k; ++i) result *= m - static_cast<long>(i);
  return result;
}

Integer binomial(long m, unsigned k) {
  Integer f = falling_factorial(m, k);
  Integer fact = 1;
  for (unsigned i = 2; i <= k; ++i) fact *= i;
  return f / fact;
}

}  // namespace gdlca
