#include "cli.hpp"
#include "report.hpp"

#include "gdlca/gdlca.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace gdlca {
namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GDLCA_EXAMPLES_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

TEST(Cli, CheckValidFile) {
  const CliResult r = run({"check", data("r31.alg")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "valid"));
}

TEST(Cli, CheckBadFileListsViolations) {
  const CliResult r = run({"check", data("badfile.alg")});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_TRUE(contains(r.out, "violation novikov-left-symmetry at (A,B,A)"));
  EXPECT_TRUE(contains(r.out, "invalid"));
}

TEST(Cli, CheckJson) {
  const CliResult r = run({"--json", "check", data("badfile.alg")});
  EXPECT_EQ(r.code, kExitViolation);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], report::kSchemaVersion);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_EQ(j["violations"][0]["axiom"], "novikov-left-symmetry");
}

TEST(Cli, ParseErrorsExitTwoWithLocation) {
  const CliResult r = run({"check", data("malformed.alg")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(contains(r.err, "line 5, field 'novikov.j'")) << r.err;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"extend"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate", "vir"}).code, kExitUsage);
  EXPECT_EQ(run({"check", data("missing.alg")}).code, kExitUsage);
  EXPECT_EQ(run({"check", "catalog:nope"}).code, kExitUsage);
  EXPECT_EQ(run({"extend", "catalog:vir", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(run({"coeff", "catalog:vir", "--window", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"coeff", "catalog:vir", "--cocycle-index", "9", "--window", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, ExtendReportsAgreement) {
  const CliResult r = run({"extend", "catalog:r_alpha_beta:alpha=2,beta=0", "--method", "both"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "dimension 4, methods agree"));
  EXPECT_TRUE(contains(r.out, "[L_λ L] = (∂ + 2λ)L + λ^3·c"));
}

TEST(Cli, ExtendOnInvalidAlgebraExitsOne) {
  const CliResult r = run({"extend", data("badfile.alg")});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_TRUE(contains(r.err, "novikov-left-symmetry"));
}

TEST(Cli, ExtendJsonCarriesMutualMembershipCertificate) {
  const CliResult r = run({"--json", "extend", "catalog:vir", "--method", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "extend");
  EXPECT_EQ(j["algebra"]["name"], "vir");
  EXPECT_EQ(j["theorem"]["basis"].size(), 2u);
  EXPECT_EQ(j["direct"]["basis"].size(), 2u);
  const auto& cert = j["agreement"];
  EXPECT_TRUE(cert["equal"].get<bool>());
  EXPECT_EQ(cert["theorem_in_direct"].size(), 2u);
  EXPECT_EQ(cert["direct_in_theorem"].size(), 2u);
  for (const auto& c : cert["theorem_in_direct"]) EXPECT_FALSE(c.is_null());

  // Reconstruct each theorem cocycle from its coordinates in the direct basis.
  std::vector<CentralCocycle> direct;
  for (const auto& q : j["direct"]["basis"]) direct.push_back(report::cocycle_from_json(q));
  for (std::size_t t = 0; t < 2; ++t) {
    const CentralCocycle th = report::cocycle_from_json(j["theorem"]["basis"][t]);
    RatVector sum = CentralCocycle::zero(1, 6).flatten(6);
    const auto echelon = reduced_echelon(
        [&] {
          std::vector<RatVector> vs;
          for (const auto& q : direct) vs.push_back(q.flatten(6));
          return vs;
        }());
    for (std::size_t b = 0; b < echelon.size(); ++b) {
      const Rational c = report::parse_rational_json(cert["theorem_in_direct"][t][b]);
      for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += c * echelon[b][x];
    }
    EXPECT_EQ(sum, th.flatten(6));
  }
}

TEST(Cli, ExtendWarnsOnUnboundedFamily) {
  const CliResult r = run({"extend", "catalog:current:g=abelian(2)", "--method", "direct", "--degree", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "warning: unbounded family"));
}

TEST(Cli, DeriveVirasoro) {
  const CliResult r = run({"derive", "catalog:vir"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "outer dimension 0; CDer = CInn"));
  EXPECT_TRUE(contains(r.out, "agrees with the direct solver"));
}

TEST(Cli, DeriveOuterRepresentative) {
  const CliResult r = run({"derive", "catalog:r_alpha_beta:alpha=1,beta=0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "outer dimension 1"));
  EXPECT_TRUE(contains(r.out, "d(L) = W; d(W) = 0"));
}

TEST(Cli, DeriveNotStabilized) {
  const CliResult r = run({"--json", "derive", "catalog:current:g=sl2", "--lambda-bound", "3"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["outer_dimension"], "not stabilized");
  EXPECT_TRUE(j.contains("theorem_skipped"));
}

TEST(Cli, CoeffExhaustiveAndSampled) {
  const CliResult r = run({"coeff", "catalog:vir", "--cocycle-index", "1", "--window", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "exhaustive"));
  EXPECT_TRUE(contains(r.out, "2-cocycle check: ok"));
  const CliResult a = run({"--json", "--seed", "9", "coeff", "catalog:r_alpha_beta:alpha=1,beta=0", "--cocycle-index", "0",
                     "--window", "4", "--samples", "50"});
  const CliResult b = run({"coeff", "catalog:r_alpha_beta:alpha=1,beta=0", "--cocycle-index", "0", "--window", "4",
                     "--samples", "50", "--seed", "9", "--json"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["seed"], 9);
}

TEST(Cli, CatalogListAndEmit) {
  const CliResult list = run({"catalog", "list"});
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_TRUE(contains(list.out, "loop_hv_cyclic"));
  const CliResult emit = run({"catalog", "emit", "r_alpha_beta:alpha=3,beta=1"});
  ASSERT_EQ(emit.code, kExitOk);
  const GDBialgebra parsed = parse_algebra_file(emit.out);
  EXPECT_EQ(parsed, catalog_build_spec("r_alpha_beta:alpha=3,beta=1"));
  EXPECT_EQ(run({"catalog", "emit"}).code, kExitUsage);
  EXPECT_EQ(run({"catalog", "emit", "nope"}).code, kExitUsage);
}

TEST(Cli, CatalogEmitRoundTripsThroughCheck) {
  for (const auto& e : catalog_entries()) {
    std::string spec = e.name;
    if (e.name == "current" || e.name == "vir_current") spec += ":g=sl2";
    if (e.name == "r_alpha_beta") spec += ":alpha=1,beta=0";
    if (e.name == "loop_vir_cyclic" || e.name == "loop_hv_cyclic") spec += ":m=2";
    const CliResult emit = run({"catalog", "emit", spec});
    ASSERT_EQ(emit.code, kExitOk) << spec;
    EXPECT_EQ(parse_algebra_file(emit.out), catalog_build_spec(spec)) << spec;
  }
}

}  // namespace
}  // namespace gdlca
