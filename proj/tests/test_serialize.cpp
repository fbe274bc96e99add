#include <doctest.h>

#include <json.hpp>

#include "flatlab/correlate.hpp"
#include "flatlab/serialize.hpp"

using namespace flatlab;

TEST_CASE("decimal rendering") {
  CHECK(format_decimal(1.0) == "1");
  CHECK(format_decimal(1.0 / 3.0) == "0.333333333333");
  CHECK(format_decimal(kInfinity) == "inf");
  CHECK(format_decimal(-0.0) == "0");
}

TEST_CASE("sequence formats") {
  CHECK(sequence_csv(grs_binary(8)) == "1,1,1,-1,1,1,-1,1\n");
  const auto j = nlohmann::json::parse(sequence_json(legendre_sequence(7)));
  CHECK(j["source"] == "legendre");
  CHECK(j["length"] == 7);
  CHECK(j["values"] == nlohmann::json::array({0, 1, 1, -1, 1, -1, -1}));
}

TEST_CASE("polynomial formats") {
  const auto p = rudin_shapiro_pair(2).first;
  CHECK(polynomial_csv(p) == "index,coefficient\n0,1\n1,1\n2,1\n3,-1\n");
  const auto j = nlohmann::json::parse(polynomial_json(p));
  CHECK(j["family"] == "rudin-shapiro-P");
  CHECK(j["degree"] == 3);
  CHECK(j["normalization"] == 2.0);
}

TEST_CASE("norm scan csv") {
  NormScanRow row{"rs", 1, {4.0, 1.1066819197003215, 512, 0.0}, "ok"};
  CHECK(norm_scan_csv({row}) ==
        "family,stage_or_p,alpha,value,error,status\nrs,1,4,1.1066819197,0,ok\n");
  const auto j = nlohmann::json::parse(norm_profile_json(row.profile));
  CHECK(j["grid_size"] == 512);
  CHECK(j.begin().key() == "alpha");
}

TEST_CASE("merit csv") {
  const auto rows = merit_factor_table(MeritFamily::Grs, {4, 1});
  CHECK(merit_csv(rows) ==
        "family,N,merit_factor_exact,merit_factor_decimal,l4_fourth_normalized\n"
        "grs,4,4,4,5/4\n"
        "grs,1,inf,inf,1\n");
}

TEST_CASE("correlation json") {
  const auto j = nlohmann::json::parse(correlation_json(autocorrelations(grs_binary(4))));
  CHECK(j["c"] == nlohmann::json::array({4, 1, 0, -1}));
  CHECK(j["merit_factor_exact"] == "4");
  CHECK(j["l4_fourth_normalized_exact"] == "5/4");
}

TEST_CASE("verdict json lines group repeated keys") {
  VerdictReport r(StatementId::GaussFormula);
  r.input("p", 7).input("p", 101).value("x", 1.0 / 3.0).rational("q", "1/3");
  r.passed = true;
  const auto text = verdict_json_lines({r, r});
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  const auto j = nlohmann::json::parse(text.substr(0, text.find('\n')));
  CHECK(j["statement"] == "gauss-formula");
  CHECK(j["inputs"]["p"] == nlohmann::json::array({7.0, 101.0}));
  CHECK(j["computed"]["x"].get<double>() == 0.333333333333);
  CHECK(j["exact"]["q"] == "1/3");
  const auto summary = verdict_summary({r});
  CHECK(summary.find("gauss-formula") != std::string::npos);
  CHECK(summary.find("0 failed") != std::string::npos);
}
