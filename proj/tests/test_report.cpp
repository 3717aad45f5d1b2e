#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "singerfac/report.hpp"

using namespace singerfac;

TEST_CASE("count report JSON schema") {
  auto params = GroupParams::make(3, Sign::Unitary, 2, 3);
  CountReport r = make_report(params, 3);
  r.closed_form = mpz_class(81);
  r.character_pipeline = mpz_class(81);
  auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["group"] == "GU_3(2)");
  CHECK(j["n"] == 3);
  CHECK(j["q"] == 2);
  CHECK(j["epsilon"] == -1);
  CHECK(j["x"] == 3);
  CHECK(j["ell"] == 3);
  CHECK(j["closed_form"] == "81");
  CHECK(j["character_pipeline"] == "81");
  CHECK(j["brute_force"].is_null());
  CHECK(j["agree"] == true);
  CHECK_FALSE(j.contains("m"));
  r.m = 2;
  auto j2 = nlohmann::json::parse(to_json(r));
  CHECK(j2["m"] == 2);
}

TEST_CASE("JSON array of reports") {
  auto params = GroupParams::make(2, Sign::Linear, 3, 1);
  std::vector<CountReport> reports(2, make_report(params, 2));
  auto j = nlohmann::json::parse(to_json(reports));
  CHECK(j.is_array());
  CHECK(j.size() == 2);
}

TEST_CASE("CSV header and rows") {
  CHECK(csv_header() == "group,n,q,epsilon,x,ell,m,method,count");
  auto params = GroupParams::make(2, Sign::Linear, 3, 2);
  CountReport r = make_report(params, 2);
  r.closed_form = mpz_class(8);
  r.brute_force = mpz_class(8);
  CHECK(csv_row(r) == "GL_2(3),2,3,+,2,2,,closed,8\nGL_2(3),2,3,+,2,2,,brute,8");
  r.m = 1;
  r.brute_force.reset();
  CHECK(csv_row(r) == "GL_2(3),2,3,+,2,2,1,closed,8");
}

TEST_CASE("text line") {
  auto params = GroupParams::make(2, Sign::Linear, 3, 1);
  CountReport r = make_report(params, 2);
  r.closed_form = mpz_class(4);
  r.agree = true;
  CHECK(to_text(r) == "SL_2(3) ell=2 closed=4 ok");
  r.agree = false;
  CHECK(to_text(r) == "SL_2(3) ell=2 closed=4 MISMATCH");
}

TEST_CASE("ennola and conjecture reports serialize") {
  EnnolaReport report = ennola_check(3, 2, 3, EnnolaScope::Special);
  auto j = nlohmann::json::parse(to_json(report));
  CHECK(j["scope"] == "special");
  CHECK(j["unitary"]["rejected"] == "NoSingerCycle");
  CHECK(j["linear"]["formula_value"] == "49");

  GroupTable table = GroupTable::generate(GroupParams::make(3, Sign::Unitary, 2, 3));
  ConjectureReport conj = conjecture_eigenvalue_check(table, 3, 0);
  auto cj = nlohmann::json::parse(to_json(conj));
  CHECK(cj["exhaustive"] == true);
  CHECK(cj["agreements"] == 9);
  CHECK(cj["findings"].size() == 9);
}
