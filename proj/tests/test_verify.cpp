#include <doctest.h>

#include <cmath>
#include <numbers>

#include "flatlab/errors.hpp"
#include "flatlab/polyfam.hpp"
#include "flatlab/verify.hpp"

using namespace flatlab;

namespace {
double computed(const VerdictReport& r, const std::string& key) {
  for (const auto& [k, v] : r.computed)
    if (k == key) return v;
  FAIL("missing key " << key);
  return 0.0;
}
}  // namespace

TEST_CASE("statement ids round trip and are ordered") {
  CHECK(all_statements().size() == kStatementCount);
  for (auto id : all_statements()) CHECK(parse_statement_id(to_string(id)) == id);
  CHECK(to_string(StatementId::LemmaSegmentSqrtM) == "lemma-segment-sqrtM");
  CHECK_FALSE(parse_statement_id("thm-l5").has_value());
}

TEST_CASE("flatness characterization examples") {
  const AnalyticPolynomial one(std::vector<std::int32_t>{1}, PolyFamily::Custom);
  const auto c = check_flatness_characterization(one, 1.0);
  CHECK(c.passed);
  CHECK(computed(c, "pow_l1") < 1e-12);
  CHECK(computed(c, "dev_half_alpha") < 1e-12);
  CHECK(check_flatness_characterization(rudin_shapiro_pair(4).first, 1.0).passed);
  CHECK(check_flatness_characterization(fekete(7), 2.0).passed);
  CHECK_THROWS_AS(check_flatness_characterization(one, 3.0), InvalidArgument);
}

TEST_CASE("gauss formula") {
  for (std::uint64_t p : {7, 101, 1009}) {
    const auto r = check_gauss_formula(p);
    CHECK(r.passed);
    CHECK(computed(r, "max_deviation") < 1e-6);
  }
}

TEST_CASE("fekete structure") {
  const auto [r5, l5] = check_fekete_structure(5);
  CHECK(r5.passed);
  CHECK(computed(r5, "palindromic") == 1.0);
  const auto [r7, l7] = check_fekete_structure(7);
  CHECK(r7.passed);
  CHECK(computed(r7, "anti_palindromic") == 1.0);
  CHECK(l7.report_only);
  const auto [r13, l13] = check_fekete_structure(13);
  CHECK(l13.passed);
  const double ratio = computed(l13, "ratio");
  CHECK(ratio > 2.0);
  CHECK(ratio < 4.0);
}

TEST_CASE("littlewood ratio equals 3(p-2)/p") {
  for (std::uint64_t p : {5, 13, 17, 29, 101, 1009}) {
    const auto form = littlewood_form(fekete(p));
    CHECK(form.ratio == doctest::Approx(3.0 * (p - 2.0) / p).epsilon(1e-12));
    CHECK(form.amplitudes.size() == (p - 1) / 2);
  }
  CHECK_THROWS_AS(littlewood_form(fekete(7)), InvalidArgument);
}

TEST_CASE("montgomery lower bound") {
  const auto r = check_montgomery_lower(101);
  CHECK(r.passed);
  CHECK(computed(r, "bound") ==
        doctest::Approx(2.0 / std::numbers::pi * std::sqrt(101.0) * std::log(std::log(101.0))));
  CHECK(computed(r, "grid_sup") > computed(r, "bound"));
  CHECK(check_montgomery_lower(1009).passed);
  CHECK_FALSE(check_montgomery_lower(17).notes.empty());
  CHECK_THROWS_AS(check_montgomery_lower(13), InvalidArgument);
}

TEST_CASE("fekete l4 trend") {
  const auto r = check_fekete_l4_trend({3, 5, 7, 13, 101, 1009});
  CHECK(r.passed);
  CHECK(computed(r, "p1009.deviation") < 0.05);
}

TEST_CASE("singer report is report-only") {
  const auto r = check_singer_flatness({2, 3});
  CHECK(r.report_only);
  CHECK_FALSE(r.counts_as_failure());
  CHECK(computed(r, "p2.q") == 7.0);
  CHECK(computed(r, "p3.positive_fraction") == doctest::Approx(10.0 / 13.0));
}

TEST_CASE("newman-byrnes search is report-only") {
  const auto r = check_newman_byrnes(8);
  CHECK(r.report_only);
  CHECK(computed(r, "N5.min_l4_fourth") == doctest::Approx(29.0 / 25.0));
}

TEST_CASE("segment bound sampling is reproducible") {
  const auto a = check_segment_bound(8, 42, 256);
  const auto b = check_segment_bound(8, 42, 256);
  CHECK(a.computed == b.computed);
  CHECK(a.passed == b.passed);
}

TEST_CASE("segment bound counterexample at N = 0, M = 2") {
  // r_1 z + r_2 z^2 = z + z^2 has modulus 2 > sqrt(2) at z = 1.
  const auto s = sup_norm(rs_segment(0, 2), 16, Scaling::Raw);
  CHECK(s.grid_max == doctest::Approx(2.0));
}

TEST_CASE("quick configuration: every asserted check other than the known ones passes") {
  const auto cfg = VerifyConfig::quick();
  std::set<StatementId> all(all_statements().begin(), all_statements().end());
  const auto reports = run_all(cfg, all);
  REQUIRE(reports.size() == kStatementCount);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto id = reports[i].statement;
    CHECK(id == all_statements()[i]);
    if (id == StatementId::LemmaSegmentSqrtM || id == StatementId::PropMsCorrelations) {
      CHECK_FALSE(reports[i].passed);
      continue;
    }
    INFO(to_string(id) << ": " << reports[i].notes);
    CHECK_FALSE(reports[i].counts_as_failure());
  }
}

TEST_CASE("empty selection yields no reports") {
  CHECK(run_all(VerifyConfig::quick(), {}).empty());
  CHECK(all_passed({}));
}

TEST_CASE("exceptions become failed reports") {
  auto cfg = VerifyConfig::quick();
  cfg.rs_lemma_grid = 100;
  const auto reports = run_all(cfg, {StatementId::LemmaRs5});
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].passed);
  CHECK(reports[0].notes.find("check raised") != std::string::npos);
}

TEST_CASE("default configuration lists") {
  const auto cfg = VerifyConfig::standard();
  CHECK(cfg.truncated_n.front() == 256);
  CHECK(cfg.truncated_n.back() == 24576);
  CHECK(cfg.l4_max_stage == 20);
}
