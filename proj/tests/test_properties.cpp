#include "oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace gdlca {
namespace {

bool gd_valid(const GDBialgebra& a) {
  return check_novikov(a).empty() && check_lie(a).empty() && check_gd_compat(a).empty();
}

bool conformal_valid(const GDBialgebra& a) {
  const QuadraticLCA r = QuadraticLCA::unchecked(a);
  return check_skew(r).empty() && check_jacobi(r).empty();
}

void check_solvers(const GDBialgebra& a) {
  const QuadraticLCA r(a);
  for (const auto& q : solve_extensions_theorem(a).basis) EXPECT_TRUE(verify_cocycle(a, q).empty());
  for (const auto& q : solve_extensions_direct(a, 4).basis) EXPECT_TRUE(verify_cocycle(a, q).empty());
  const DerivationSpace s = solve_derivations_direct(r, 2, 3);
  for (const auto& d : s.basis) EXPECT_TRUE(verify_derivation(r, d).empty());
  for (std::size_t v = 0; v < a.dim(); ++v) {
    for (unsigned k = 0; k <= 3; ++k) EXPECT_TRUE(verify_derivation(r, inner_derivation(r, v, k)).empty());
  }
}

class RandomTables : public ::testing::TestWithParam<bool> {};

// The bialgebra axioms hold exactly when the generated λ-bracket is a Lie conformal algebra.
TEST_P(RandomTables, AxiomVerdictsAgree) {
  std::mt19937_64 rng(GetParam() ? 2024 : 1);
  std::size_t valid = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const GDBialgebra a = testing::random_dim2(rng, GetParam());
    const bool gd = gd_valid(a);
    const oracle::Algebra o = oracle::from(a);
    EXPECT_EQ(gd, conformal_valid(a)) << emit_algebra_file(a);
    EXPECT_EQ(gd, oracle::gd_axioms_hold(o)) << emit_algebra_file(a);
    EXPECT_EQ(gd, oracle::conformal_axioms_hold(o)) << emit_algebra_file(a);
    if (gd) {
      ++valid;
      check_solvers(a);
    }
  }
  if (GetParam()) EXPECT_GE(valid, 20u);
}

INSTANTIATE_TEST_SUITE_P(Tables, RandomTables, ::testing::Values(false, true),
                         [](const auto& info) { return info.param ? "Sparse" : "Uniform"; });

// Random cocycle candidates: the library verifier and the oracle agree on every one.
TEST(Properties, CocycleVerdictsAgree) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (const std::string spec : {"vir", "r_alpha_beta:alpha=1,beta=0", "r_alpha_beta:alpha=2,beta=0"}) {
    const GDBialgebra a = testing::build(spec);
    const oracle::Algebra o = oracle::from(a);
    const auto basis = solve_extensions_theorem(a).basis;
    for (int trial = 0; trial < 30; ++trial) {
      CentralCocycle q = CentralCocycle::zero(a.dim());
      if (trial % 2 == 0) {
        for (auto& form : q.alpha) {
          for (auto& row : form) {
            for (auto& x : row) x = entry(rng);
          }
        }
      } else {
        for (const auto& b : basis) {
          const int c = entry(rng);
          for (std::size_t k = 0; k < 4; ++k) {
            for (std::size_t i = 0; i < a.dim(); ++i) {
              for (std::size_t j = 0; j < a.dim(); ++j) q.alpha[k][i][j] += c * b.alpha[k][i][j];
            }
          }
        }
      }
      oracle::Forms f;
      for (const auto& form : q.alpha) {
        std::vector<std::vector<oracle::Q>> m;
        for (const auto& row : form) m.emplace_back(row.begin(), row.end());
        f.push_back(m);
      }
      const bool lib = verify_cocycle(a, q).empty();
      EXPECT_EQ(lib, oracle::cocycle_holds(o, f)) << spec;
      if (trial % 2 == 1) EXPECT_TRUE(lib);
    }
  }
}

}  // namespace
}  // namespace gdlca
