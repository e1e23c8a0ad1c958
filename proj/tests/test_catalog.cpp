#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace knopf;

TEST(Catalog, EveryEntryPassesWithDefaults) {
  for (const auto& e : catalog_entries()) {
    const CatalogResult r = run_catalog(e.name);
    for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << e.name << ": " << c.what << " expected " << c.expected << " got " << c.actual;
    EXPECT_FALSE(r.checks.empty()) << e.name;
  }
}

TEST(Catalog, RunsAreDeterministic) {
  for (const char* name : {"watanabe-minus-id", "mu-semidirect-alpha", "uL", "determinantal"})
    EXPECT_EQ(to_json(run_catalog(name)).dump(), to_json(run_catalog(name)).dump()) << name;
}

TEST(Catalog, UlForSmallPrimes) {
  for (long p : {2, 3, 5}) {
    const auto r = run_catalog("uL", {{"p", p}});
    EXPECT_TRUE(r.pass()) << p;
    ASSERT_NE(r.find("unimodular"), nullptr);
    EXPECT_EQ(r.find("unimodular")->actual, "false");
  }
}

TEST(Catalog, ParameterSweeps) {
  for (long l : {2, 3, 4})
    for (long p : {2, 3, 5, 7}) EXPECT_TRUE(run_catalog("mu-semidirect-alpha", {{"l", l}, {"p", p}, {"D", 8}}).pass()) << l << " " << p;
  for (auto [m, n] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}})
    EXPECT_TRUE(run_catalog("determinantal", {{"m", m}, {"n", n}}).pass()) << m << " " << n;
  for (long n : {2, 3, 4, 5, 6}) EXPECT_TRUE(run_catalog("cyclic", {{"n", n}}).pass()) << n;
  for (long p : {2, 3}) EXPECT_TRUE(run_catalog("cyclic", {{"n", 4}, {"p", p}}).pass()) << p;
  EXPECT_TRUE(run_catalog("mu-m-weights", {{"m", 5}, {"w1", 1}, {"w2", 2}, {"w3", 3}}).pass());
}

TEST(Catalog, WarningsForUnsupportedParameters) {
  const auto r = run_catalog("mu-semidirect-alpha", {{"l", 2}, {"p", 5}, {"D", 6}});
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Catalog, RejectsUnknownNamesAndParameters) {
  EXPECT_THROW(run_catalog("no-such-entry"), std::invalid_argument);
  EXPECT_THROW(run_catalog("uL", {{"q", 3}}), std::invalid_argument);
  EXPECT_THROW(run_catalog("uL", {{"p", 4}}), std::invalid_argument);
  EXPECT_THROW(run_catalog("mu-semidirect-cyclic", {{"l", 3}, {"c", 3}, {"s", 2}}), std::invalid_argument);
}

// Catalog expectations must agree with module-level invariants computed here
// directly: knop triviality against unimodularity of the dual, and the
// classification against det triviality for small constant groups.
TEST(Catalog, ExpectationsAgreeWithModuleInvariants) {
  const auto ul = run_catalog("uL", {{"p", 3}});
  const auto G = restricted_lie_scheme(affine_line_lie_algebra(3));
  EXPECT_EQ(ul.find("knop character nontrivial")->actual == "true", !is_unimodular(G->dual()));

  const auto msa = run_catalog("mu-semidirect-alpha");
  const auto S = mu_semidirect_alpha_scheme(3, 5);
  EXPECT_EQ(msa.find("knop character nontrivial iff l does not divide p-1")->actual == "true",
            !is_trivial_character(*S, knop_character(*S)));

  const auto w = run_catalog("watanabe-minus-id");
  EXPECT_EQ(w.details["classification"]["conditions"]["c1"], "holds");
  EXPECT_TRUE(is_small_constant(minus_identity_group()));
}

TEST(Catalog, ExportsLoadBack) {
  const Json e = catalog_export("mu-semidirect-alpha");
  const auto G = scheme_from_json<Fp>(e["scheme"], document_field(e["scheme"], std::nullopt));
  const auto in = module_from_json<Fp>(e["module"], G->field(), G);
  EXPECT_TRUE(verify_comodule(*in.module).ok());
  EXPECT_TRUE(is_trivial_character(*G, det_character(*in.module)));
  const Json u = catalog_export("uL", {{"p", 2}});
  EXPECT_FALSE(is_unimodular(hopf_from_json<Fp>(u["hopf"], FieldSpec::prime(2))));
  EXPECT_THROW(catalog_export("o2-lie-check"), std::invalid_argument);
}
