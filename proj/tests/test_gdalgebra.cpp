#include "oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace gdlca {
namespace {

TEST(GDBialgebra, VirasoroTable) {
  const GDBialgebra v = testing::build("vir");
  EXPECT_EQ(v.dim(), 1u);
  EXPECT_EQ(v.circ(0, 0), v.basis(0));
  EXPECT_TRUE(v.lie(0, 0).is_zero());
  EXPECT_EQ(v.index_of("L"), 0u);
  EXPECT_FALSE(v.index_of("W").has_value());
}

TEST(GDBialgebra, LieTableIsAntisymmetric) {
  const GDBialgebra r = testing::r_ab(3, 1);
  EXPECT_EQ(r.lie(1, 0), r.basis(1));
  EXPECT_EQ(r.lie(0, 1), -r.basis(1));
  const auto lie = r.lie_table();
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(lie[i][j][k], -lie[j][i][k]);
    }
  }
}

TEST(GDBialgebra, RejectsNonAntisymmetricLieTable) {
  StructureTable lie = zero_table(2);
  lie[0][1][0] = 1;
  EXPECT_THROW(gd_build("x", {"A", "B"}, zero_table(2), lie), InputError);
}

TEST(GDBialgebra, RejectsBadShapes) {
  EXPECT_THROW(gd_build("x", {"A", "B"}, zero_table(1), zero_table(2)), InputError);
  EXPECT_THROW(gd_build("x", {"A", "A"}, zero_table(2), zero_table(2)), InputError);
  EXPECT_THROW(gd_build("x", {}, zero_table(0), zero_table(0)), InputError);
}

TEST(GDBialgebra, CheckedConstructionListsViolations) {
  StructureTable nov = zero_table(2);
  nov[0][0][1] = 1;  // A∘A = B
  nov[1][0][0] = 1;  // B∘A = A
  try {
    gd_build("bad", {"A", "B"}, nov, zero_table(2));
    FAIL() << "expected AxiomError";
  } catch (const AxiomError& e) {
    EXPECT_FALSE(e.violations().empty());
  }
  const GDBialgebra u = gd_build("bad", {"A", "B"}, nov, zero_table(2), Validation::Unchecked);
  const auto vs = check_novikov(u);
  ASSERT_FALSE(vs.empty());
  EXPECT_EQ(vs[0].axiom, Axiom::LeftSymmetry);
}

TEST(GDBialgebra, AxiomNames) {
  EXPECT_EQ(axiom_name(Axiom::LeftSymmetry), "novikov-left-symmetry");
  EXPECT_EQ(axiom_name(Axiom::RightCommutativity), "novikov-right-commutativity");
  EXPECT_EQ(axiom_name(Axiom::Jacobi), "lie-jacobi");
  EXPECT_EQ(axiom_name(Axiom::Compatibility), "gd-compatibility");
}

TEST(GDBialgebra, CatalogSatisfiesAllAxioms) {
  for (const auto& spec : testing::catalog_specs()) {
    const GDBialgebra a = testing::build(spec);
    EXPECT_TRUE(check_novikov(a).empty()) << spec;
    EXPECT_TRUE(check_lie(a).empty()) << spec;
    EXPECT_TRUE(check_gd_compat(a).empty()) << spec;
    EXPECT_TRUE(oracle::gd_axioms_hold(oracle::from(a))) << spec;
  }
}

// Flipping any single structure constant of vir_current(sl2) breaks some identity, and the
// library agrees with the oracle about which tables are still valid.
TEST(GDBialgebra, SingleEntryMutationsAreDetected) {
  const GDBialgebra base = testing::build("vir_current:g=sl2");
  const std::size_t n = base.dim();
  std::size_t broken = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        StructureTable nov = base.novikov_table();
        nov[i][j][k] += 1;
        const GDBialgebra m = gd_build("m", base.basis_names(), nov, base.lie_table(), Validation::Unchecked);
        const bool lib_ok = check_novikov(m).empty() && check_lie(m).empty() && check_gd_compat(m).empty();
        EXPECT_EQ(lib_ok, oracle::gd_axioms_hold(oracle::from(m))) << i << j << k;
        if (!lib_ok) ++broken;
      }
    }
  }
  EXPECT_GT(broken, n * n * n / 2);
}

TEST(GDBialgebra, StarAndSpannedByProducts) {
  const GDBialgebra r = testing::r_ab(2, 0);
  EXPECT_EQ(star(r, r.basis(0), r.basis(1)), Rational(2) * r.basis(1));
  EXPECT_TRUE(spanned_by_products(r));
  EXPECT_TRUE(spanned_by_products(testing::build("vir")));
  EXPECT_FALSE(spanned_by_products(testing::build("current:g=sl2")));
  EXPECT_TRUE(spanned_by_products(testing::build("loop_hv_cyclic:m=2")));
}

TEST(GDBialgebra, GeneralElementOperations) {
  const GDBialgebra r = testing::r_ab(3, 1);
  const VElem x = r.basis(0) + Rational(2) * r.basis(1);
  // (L + 2W)∘(L + 2W) = L + 2·2W + 2W = L + 6W
  EXPECT_EQ(r.circ(x, x), r.basis(0) + Rational(6) * r.basis(1));
  EXPECT_TRUE(r.lie(x, x).is_zero());
}

}  // namespace
}  // namespace gdlca
