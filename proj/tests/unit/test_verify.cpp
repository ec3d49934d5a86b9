#include <gtest/gtest.h>

#include <set>

#include "h10m/curve/curve.hpp"
#include "h10m/errors.hpp"
#include "h10m/verify/campaign.hpp"

using namespace h10m::verify;

namespace {

std::set<std::string> families_in(const std::vector<Certificate>& certs) {
  std::set<std::string> out;
  for (const auto& c : certs)
    for (const auto& f : check_families())
      if (c.check_id.rfind(f.prefix + ".", 0) == 0 || c.check_id == f.prefix) out.insert(f.prefix);
  return out;
}

std::vector<Certificate> without_timing(std::vector<Certificate> certs) {
  for (auto& c : certs) c.elapsed_ms = 0;
  return certs;
}

Certificate cert(std::string id, Status s, std::string residual, std::string lemma) {
  return Certificate{std::move(id), {{"lemma", std::move(lemma)}}, s, std::move(residual), 3};
}

}  // namespace

TEST(Config, SuitesAndValidation) {
  EXPECT_EQ(parse_suites("all"), all_suites());
  EXPECT_EQ(parse_suites(" curve, orders ,curve"), (std::vector<std::string>{"curve", "orders"}));
  EXPECT_TRUE(parse_suites("").empty());
  EXPECT_THROW(parse_suites("curve,nope"), h10m::DomainError);

  CampaignConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.max_n = 0;
  EXPECT_THROW(cfg.validate(), h10m::DomainError);
  cfg.max_n = 3;
  cfg.trunc = 7;
  EXPECT_THROW(cfg.validate(), h10m::DomainError);
  cfg.trunc = 8;
  cfg.suites = {"bogus"};
  EXPECT_THROW(cfg.validate(), h10m::DomainError);
}

TEST(Campaign, EmptySuiteListGivesNoCertificates) {
  CampaignConfig cfg;
  auto certs = run_campaign(cfg);
  EXPECT_TRUE(certs.empty());
  EXPECT_FALSE(any_fail(certs));
}

TEST(Campaign, CurveSuiteSmallN) {
  CampaignConfig cfg;
  cfg.suites = {"curve"};
  cfg.max_n = 4;
  auto certs = run_campaign(cfg);
  for (const auto& c : certs) EXPECT_EQ(c.status, Status::Pass) << c.check_id << " " << c.residual;
  auto fams = families_in(certs);
  for (const char* f : {"lemma.liz", "lemma.wellknown", "lemma.productformula", "lemma.mariac",
                        "lemma.quotienttilde", "lemma.poly"})
    EXPECT_TRUE(fams.count(f)) << f;
  std::size_t liz = 0;
  for (const auto& c : certs) liz += c.check_id.rfind("lemma.liz.", 0) == 0;
  EXPECT_EQ(liz, 8u);  // n = ±1..±4
}

TEST(Campaign, PassIffResidualIsZero) {
  CampaignConfig cfg;
  cfg.suites = all_suites();
  cfg.max_n = 6;
  cfg.trunc = 16;
  for (const auto& c : run_campaign(cfg)) EXPECT_EQ(c.status == Status::Pass, c.residual == "0") << c.check_id;
}

TEST(Campaign, DeterministicAcrossJobCounts) {
  CampaignConfig cfg;
  cfg.suites = {"series", "encoder", "orders"};
  cfg.max_n = 5;
  cfg.seed = 11;
  auto one = without_timing(run_campaign(cfg));
  cfg.jobs = 3;
  auto three = without_timing(run_campaign(cfg));
  EXPECT_EQ(one, three);
  for (std::size_t i = 1; i < one.size(); ++i) EXPECT_TRUE(natural_less(one[i - 1].check_id, one[i].check_id));
}

TEST(Campaign, SeedChangesRandomInputsNotVerdicts) {
  CampaignConfig cfg;
  cfg.suites = {"series"};
  cfg.seed = 1;
  auto a = run_campaign(cfg);
  cfg.seed = 2;
  auto b = run_campaign(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].check_id, b[i].check_id);
    EXPECT_EQ(a[i].status, Status::Pass);
    EXPECT_EQ(b[i].status, Status::Pass);
  }
}

TEST(Campaign, MutationIsDetectedInBothSuites) {
  for (const char* suite : {"curve", "uniformization"}) {
    CampaignConfig cfg;
    cfg.suites = {suite};
    cfg.max_n = 3;
    cfg.mutate = true;
    auto certs = run_campaign(cfg);
    EXPECT_TRUE(any_fail(certs)) << suite;
  }
  EXPECT_EQ(h10m::curve::addition_law_mutation(), h10m::curve::AdditionLawMutation::None);
}

TEST(Campaign, EveryFamilyIsReachable) {
  // Each library-level check is driven by some registered family...
  const std::vector<std::string> checks{
      "poly_gcd", "ratfunc_make", "differentiate", "substitute", "evaluate_partial",
      "expand_at", "solve_diff1", "solve_diff2", "represent", "series_residual",
      "add_points", "multiply_point", "check_md", "specialize_tilde", "check_wellknown",
      "check_product_formulas", "check_mariac", "check_quotienttilde",
      "ord_at", "derivative_order_check", "compute_A", "compute_alpha", "alpha_at_singular",
      "check_alphaA_relation",
      "wp", "wp_prime", "xi", "check_functional_equations", "check_group_transfer", "G_prime",
      "check_uniformization_endo", "integrality_witness",
      "parse_diophantine", "encode_integer_predicate", "expand_curve_ops", "expand_neq", "encode_system",
      "render_formula"};
  for (const auto& op : checks) {
    bool found = false;
    for (const auto& f : check_families()) {
      std::string list = ", " + f.exercises + ",";
      found |= list.find(", " + op + ",") != std::string::npos;
    }
    EXPECT_TRUE(found) << op;
  }
  // ...and every family emits certificates from its suite.
  CampaignConfig cfg;
  cfg.suites = all_suites();
  cfg.max_n = 2;
  cfg.trunc = 16;
  auto fams = families_in(run_campaign(cfg));
  for (const auto& f : check_families()) {
    EXPECT_TRUE(fams.count(f.prefix)) << f.prefix;
    EXPECT_NE(std::find(all_suites().begin(), all_suites().end(), f.suite), all_suites().end()) << f.prefix;
  }
}

TEST(Campaign, GroupLawAlphaAtFourZPlusTwoIsAPole) {
  CampaignConfig cfg;
  cfg.suites = {"orders"};
  cfg.max_n = 6;
  for (const auto& c : run_campaign(cfg)) {
    if (c.check_id == "lemma.grouplaw.alpha.n=2" || c.check_id == "lemma.grouplaw.alpha.n=6") {
      EXPECT_EQ(c.status, Status::Undefined);
      EXPECT_NE(c.residual.find("pole"), std::string::npos);
    }
  }
}

TEST(Certificates, JsonRoundTrip) {
  std::vector<Certificate> certs{cert("lemma.liz.n=7", Status::Pass, "0", "Liz"),
                                 cert("lemma.alphaA.n=2", Status::Undefined, "alpha undefined", "alphaA"),
                                 cert("x.y", Status::Fail, "(z + 1)/(z)", "x")};
  EXPECT_EQ(certificates_from_json(certificates_to_json(certs)), certs);
  EXPECT_THROW(certificates_from_json("{}"), h10m::ParseError);
  EXPECT_THROW(certificates_from_json("[{\"check_id\": 1}]"), h10m::ParseError);
  EXPECT_THROW(certificates_from_json(R"([{"check_id":"a","params":{},"status":"MAYBE","residual":"0","elapsed_ms":0}])"),
               h10m::ParseError);
}

TEST(Certificates, SaveToBadPathIsAnError) {
  EXPECT_THROW(save_certificates({}, "/nonexistent-dir/x.json"), h10m::Error);
  EXPECT_THROW(load_certificates("/nonexistent-dir/x.json"), h10m::Error);
}

TEST(Report, Layout) {
  const std::string empty = report({});
  EXPECT_EQ(std::count(empty.begin(), empty.end(), '\n'), 1);

  std::string all_pass = report({cert("lemma.liz.n=1", Status::Pass, "0", "Liz"),
                                 cert("lemma.liz.n=2", Status::Pass, "0", "Liz")});
  EXPECT_EQ(all_pass.find("FAIL"), std::string::npos);
  EXPECT_NE(all_pass.find("Liz"), std::string::npos);

  std::string mixed = report({cert("lemma.a.n=1", Status::Pass, "0", "A"), cert("lemma.b.n=1", Status::Undefined, "u", "B"),
                              cert("lemma.c.n=1", Status::Fail, "1", "C")});
  const auto f = mixed.find("FAIL"), u = mixed.find("UNDEFINED"), p = mixed.find("PASS");
  ASSERT_NE(f, std::string::npos);
  EXPECT_LT(f, u);
  EXPECT_LT(u, p);
}

TEST(NaturalOrder, DigitRunsCompareNumerically) {
  EXPECT_TRUE(natural_less("lemma.liz.n=2", "lemma.liz.n=10"));
  EXPECT_FALSE(natural_less("lemma.liz.n=10", "lemma.liz.n=2"));
  EXPECT_TRUE(natural_less("a.n=3.k=2", "a.n=3.k=11"));
  EXPECT_TRUE(natural_less("a", "a.b"));
  EXPECT_FALSE(natural_less("a", "a"));
  EXPECT_TRUE(natural_less("a.n=-1", "a.n=1"));
}
