#pragma once

#include "gdlca/gdlca.hpp"

#include <random>
#include <string>
#include <vector>

namespace gdlca::testing {

// Every catalog instance exercised by the suite, as catalog specs.
inline const std::vector<std::string>& catalog_specs() {
  static const std::vector<std::string> specs{
      "vir",
      "current:g=sl2",
      "current:g=abelian(2)",
      "vir_current:g=sl2",
      "r_alpha_beta:alpha=3,beta=1",
      "r_alpha_beta:alpha=0,beta=0",
      "r_alpha_beta:alpha=0,beta=1",
      "r_alpha_beta:alpha=1,beta=0",
      "r_alpha_beta:alpha=1,beta=1",
      "r_alpha_beta:alpha=2,beta=0",
      "loop_vir_cyclic:m=3",
      "loop_vir_cyclic:m=4",
      "loop_hv_cyclic:m=2",
      "loop_hv_cyclic:m=3",
  };
  return specs;
}

inline GDBialgebra build(const std::string& spec) { return catalog_build_spec(spec); }

inline GDBialgebra r_ab(long alpha, long beta) {
  return catalog_build("r_alpha_beta", {{"alpha", std::to_string(alpha)}, {"beta", std::to_string(beta)}});
}

// Dimension-2 Novikov and Lie tables with entries in {-2..2}. With `sparse`, each entry is
// zero with probability 3/4, which yields many more valid bialgebras.
inline GDBialgebra random_dim2(std::mt19937_64& rng, bool sparse) {
  std::uniform_int_distribution<int> entry(-2, 2), coin(0, 3);
  auto draw = [&] { return sparse && coin(rng) != 0 ? 0 : entry(rng); };
  StructureTable nov = zero_table(2), lie = zero_table(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) nov[i][j][k] = draw();
    }
  }
  for (std::size_t k = 0; k < 2; ++k) {
    lie[0][1][k] = draw();
    lie[1][0][k] = -lie[0][1][k];
  }
  return gd_build("random", {"A", "B"}, nov, lie, Validation::Unchecked);
}

}  // namespace gdlca::testing
