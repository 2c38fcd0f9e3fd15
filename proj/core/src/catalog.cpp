#include "gdlca/catalog.hpp"

#include "gdlca/error.hpp"
#include "gdlca/rational.hpp"

#include <charconv>
#include <set>

namespace gdlca {

namespace {

struct LieAlgebra {
  std::string label;
  std::vector<std::string> basis;
  StructureTable bracket;  // the bracket of g itself
};

LieAlgebra lie_algebra(const std::string& g) {
  if (g == "sl2") {
    LieAlgebra out{"sl2", {"e", "f", "h"}, zero_table(3)};
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
      out.bracket[i][j][k] = v;
      out.bracket[j][i][k] = -v;
    };
    set(0, 1, 2, 1);   // [e,f] = h
    set(2, 0, 0, 2);   // [h,e] = 2e
    set(2, 1, 1, -2);  // [h,f] = -2f
    return out;
  }
  const std::string prefix = "abelian(";
  if (g.rfind(prefix, 0) == 0 && g.size() > prefix.size() + 1 && g.back() == ')') {
    const std::string digits = g.substr(prefix.size(), g.size() - prefix.size() - 1);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1 && n <= 64) {
      LieAlgebra out{g, {}, zero_table(n)};
      for (std::size_t i = 0; i < n; ++i) out.basis.push_back("x" + std::to_string(i + 1));
      return out;
    }
  }
  throw InputError("unknown Lie algebra '" + g + "' (expected sl2 or abelian(N))");
}

void require_params(const std::string& name, const CatalogParams& params, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : params) {
    if (!allowed.count(k)) throw InputError("catalog entry '" + name + "' has no parameter '" + k + "'");
  }
  for (const auto& k : allowed) {
    if (!params.count(k)) throw InputError("catalog entry '" + name + "' requires parameter '" + k + "'");
  }
}

std::size_t positive_int(const std::string& key, const std::string& text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0 || v > 64) {
    throw InputError("parameter '" + key + "' must be an integer between 1 and 64, got '" + text + "'");
  }
  return v;
}

GDBialgebra build_vir() {
  StructureTable nov = zero_table(1);
  nov[0][0][0] = 1;
  return gd_build("vir", {"L"}, nov, zero_table(1), Validation::Checked);
}

GDBialgebra build_current(const LieAlgebra& g) {
  const std::size_t n = g.basis.size();
  StructureTable lie = zero_table(n);
  // [a_λ b] = [b, a]_V, so V carries the opposite bracket and [a_λ b] = [a, b]_g.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) lie[i][j][k] = -g.bracket[i][j][k];
    }
  }
  return gd_build("current(" + g.label + ")", g.basis, zero_table(n), lie, Validation::Checked);
}

GDBialgebra build_vir_current(const LieAlgebra& g) {
  const std::size_t n = g.basis.size() + 1;
  std::vector<std::string> basis{"L"};
  for (const auto& b : g.basis) {
    if (b == "L") throw InputError("Lie algebra basis name clashes with L");
    basis.push_back(b);
  }
  StructureTable nov = zero_table(n), lie = zero_table(n);
  nov[0][0][0] = 1;
  for (std::size_t a = 1; a < n; ++a) nov[a][0][a] = 1;  // a∘L = a
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t k = 1; k < n; ++k) lie[i][j][k] = -g.bracket[i - 1][j - 1][k - 1];
    }
  }
  return gd_build("vir_current(" + g.label + ")", basis, nov, lie, Validation::Checked);
}

GDBialgebra build_r(const Rational& alpha, const Rational& beta) {
  StructureTable nov = zero_table(2), lie = zero_table(2);
  nov[0][0][0] = 1;          // L∘L = L
  nov[0][1][1] = alpha - 1;  // L∘W = (α-1)W
  nov[1][0][1] = 1;          // W∘L = W
  lie[1][0][1] = beta;       // [W,L] = βW
  lie[0][1][1] = -beta;
  return gd_build("r_alpha_beta(" + to_string(alpha) + "," + to_string(beta) + ")", {"L", "W"}, nov, lie,
                  Validation::Checked);
}

GDBialgebra build_loop_vir(std::size_t m) {
  StructureTable nov = zero_table(m);
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < m; ++i) basis.push_back("L" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) nov[i][j][(i + j) % m] = -1;
  }
  return gd_build("loop_vir_cyclic(" + std::to_string(m) + ")", basis, nov, zero_table(m), Validation::Checked);
}

GDBialgebra build_loop_hv(std::size_t m) {
  const std::size_t n = 2 * m;
  StructureTable nov = zero_table(n);
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < m; ++i) basis.push_back("L" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i) basis.push_back("H" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      nov[i][j][(i + j) % m] = 1;              // L_i∘L_j = L_{i+j}
      nov[m + j][i][m + (i + j) % m] = 1;      // H_j∘L_i = H_{i+j}
    }
  }
  return gd_build("loop_hv_cyclic(" + std::to_string(m) + ")", basis, nov, zero_table(n), Validation::Checked);
}

}  // namespace

const std::vector<CatalogInfo>& catalog_entries() {
  static const std::vector<CatalogInfo> entries{
      {"vir", "", "Virasoro conformal algebra: L∘L = L"},
      {"current", "g=sl2|abelian(N)", "current algebra Cur g: trivial Novikov product, [a_λ b] = [a,b]"},
      {"vir_current", "g=sl2|abelian(N)", "Vir ⋉ Cur g: [L_λ a] = (∂+λ)a"},
      {"r_alpha_beta", "alpha=<rational>,beta=<rational>", "rank-two R(α,β): [L_λ W] = (∂+αλ+β)W"},
      {"loop_vir_cyclic", "m=<int>", "loop Virasoro with indices mod m: L_i∘L_j = -L_{i+j}"},
      {"loop_hv_cyclic", "m=<int>", "loop Heisenberg-Virasoro with indices mod m"},
  };
  return entries;
}

GDBialgebra catalog_build(const std::string& name, const CatalogParams& params) {
  if (name == "vir") {
    require_params(name, params, {});
    return build_vir();
  }
  if (name == "current" || name == "vir_current") {
    require_params(name, params, {"g"});
    const LieAlgebra g = lie_algebra(params.at("g"));
    return name == "current" ? build_current(g) : build_vir_current(g);
  }
  if (name == "r_alpha_beta") {
    require_params(name, params, {"alpha", "beta"});
    return build_r(parse_rational(params.at("alpha")), parse_rational(params.at("beta")));
  }
  if (name == "loop_vir_cyclic") {
    require_params(name, params, {"m"});
    return build_loop_vir(positive_int("m", params.at("m")));
  }
  if (name == "loop_hv_cyclic") {
    require_params(name, params, {"m"});
    return build_loop_hv(positive_int("m", params.at("m")));
  }
  throw InputError("unknown catalog entry '" + name + "'");
}

GDBialgebra catalog_build_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  CatalogParams params;
  if (colon != std::string::npos) {
    const std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw InputError("malformed catalog parameter '" + item + "'");
      if (!params.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
        throw InputError("duplicate catalog parameter '" + item.substr(0, eq) + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return catalog_build(name, params);
}

std::string catalog_spec(const std::string& name, const CatalogParams& params) {
  std::string out = name;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  return out;
}

}  // namespace gdlca
