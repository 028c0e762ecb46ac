#include <doctest.h>

#include "m2coh/report.hpp"

using namespace m2coh;
using json = nlohmann::ordered_json;

TEST_CASE("configuration validation") {
  RunConfig cfg;
  cfg.prime = 4;
  CHECK_THROWS_AS(field_from_config(cfg), NotPrimeError);
  cfg.prime = 3;
  CHECK_THROWS_AS(field_from_config(cfg), CharTooSmallError);
  cfg.prime = 17;
  CHECK_THROWS_AS(field_from_config(cfg), ParseError); // above the default cap
  cfg.max_prime = 17;
  CHECK(field_from_config(cfg).characteristic() == 17);
  cfg.prime = 5;
  cfg.field_ext = {{4, 0}}; // t^2 - 1 is reducible
  CHECK_THROWS_AS(field_from_config(cfg), ReducibleModulusError);
  cfg.field_ext = {{2, 0}};
  CHECK(field_from_config(cfg).order() == 25);
}

TEST_CASE("lambda specifications") {
  RunConfig cfg;
  cfg.prime = 5;
  Field f = field_from_config(cfg);
  SUBCASE("zero") {
    CHECK(lambda_from_config(f, cfg) == zero_vec(f, 5));
  }
  SUBCASE("explicit list") {
    cfg.lambda_spec = "0,0,1,4,0";
    Vec l = lambda_from_config(f, cfg);
    CHECK(l[2] == f.one());
    CHECK(l[3] == f.from_int(4));
    cfg.lambda_spec = "1,2";
    CHECK_THROWS_AS(lambda_from_config(f, cfg), ParseError);
    cfg.lambda_spec = "a,b,c,d,e";
    CHECK_THROWS_AS(lambda_from_config(f, cfg), ParseError);
  }
  SUBCASE("seeded random is deterministic") {
    cfg.lambda_spec = "random:42";
    Vec a = lambda_from_config(f, cfg);
    Vec b = lambda_from_config(f, cfg);
    CHECK(a == b);
    cfg.lambda_spec = "random:43";
    CHECK(lambda_from_config(f, cfg) != a);
    cfg.lambda_spec = "random:x";
    CHECK_THROWS_AS(lambda_from_config(f, cfg), ParseError);
  }
}

TEST_CASE("verify command") {
  RunConfig cfg;
  cfg.prime = 7;
  cfg.lambda_spec = "0,0,0,0,0,0,1";
  CommandResult res = cmd_verify(cfg);
  CHECK(res.ok);
  CHECK(res.doc["results"]["verify"]["all_passed"] == true);

  cfg.tamper = true;
  CommandResult bad = cmd_verify(cfg);
  CHECK_FALSE(bad.ok);
}

TEST_CASE("cohomology command reports the classification dimensions") {
  RunConfig cfg;
  cfg.prime = 5;
  CommandResult res = cmd_cohomology(cfg);
  CHECK(res.ok);
  CHECK(res.doc["results"]["h1"]["dimension"] == 2);
  CHECK(res.doc["results"]["h1_star"]["dimension"] == 2);
  CHECK(res.doc["results"]["h2"]["dimension"] == 3);
  CHECK(res.doc["results"]["h2_star"]["dimension"] == 8);
  CHECK(res.doc["results"]["grade_table_matches"] == true);

  cfg.prime = 11;
  cfg.lambda_spec = "1,0,0,0,0,0,0,0,0,0,0";
  CommandResult r11 = cmd_cohomology(cfg);
  CHECK(r11.ok);
  CHECK(r11.doc["results"]["h2_star"]["dimension"] == 13); // p + 2

  cfg.prime = 7;
  cfg.lambda_spec = "zero";
  CommandResult r7 = cmd_cohomology(cfg);
  CHECK(r7.ok);
  CHECK(r7.doc["results"]["h2_star"]["dimension"] == 10); // p + 3
}

TEST_CASE("extensions command") {
  RunConfig cfg;
  cfg.prime = 5;
  CommandResult res = cmd_extensions(cfg);
  CHECK(res.ok);
  CHECK(res.doc["results"]["extensions"]["count"] == 8);
  const auto& entries = res.doc["results"]["extensions"]["entries"];
  CHECK(entries.size() == 8);
  CHECK(entries[0]["name"] == "E_1");
  // the phi_6 row carries the a1^4 a2 monomial without the 1/2
  bool found_phi6 = false;
  for (const auto& e : entries) {
    if (e["name"] != "(phi_6,~phi_6)") continue;
    found_phi6 = true;
    CHECK(e["p_operation"]["monomials"].size() == 1);
    CHECK(e["p_operation"]["monomials"][0]["coeff"] == 1);
    CHECK(e["p_operation"]["monomials"][0]["exp1"] == 4);
    CHECK(e["p_operation"]["monomials"][0]["exp2"] == 1);
    CHECK(e["p_operation"]["verified"] == true);
  }
  CHECK(found_phi6);
}

TEST_CASE("iso command") {
  RunConfig cfg;
  cfg.prime = 5;
  CommandResult res = cmd_iso(cfg, "1,2,4,3,1", "1,1,1,1,1");
  CHECK(res.ok);
  CHECK(res.doc["isomorphic"] == true);
  CHECK(res.doc["witness"] == 2);

  CommandResult res2 = cmd_iso(cfg, "1,2,4,3,1", "1,2,4,3,1");
  CHECK(res2.doc["witness"] == 1);

  CommandResult res3 = cmd_iso(cfg, "0,0,0,0,0", "1,0,0,0,0");
  CHECK(res3.doc["isomorphic"] == false);
  CHECK(res3.doc["witness"].is_null());

  CHECK_THROWS_AS(cmd_iso(cfg, "1,2", "1,1,1,1,1"), ParseError);
}

TEST_CASE("reports serialize deterministically and round-trip") {
  RunConfig cfg;
  cfg.prime = 5;
  cfg.format = "json";
  for (auto make : {+[](const RunConfig& c) { return cmd_cohomology(c); },
                    +[](const RunConfig& c) { return cmd_verify(c); },
                    +[](const RunConfig& c) { return cmd_extensions(c); }}) {
    CommandResult a = make(cfg);
    CommandResult b = make(cfg);
    std::string sa = render_report(a, cfg);
    CHECK(sa == render_report(b, cfg));
    CHECK(json::parse(sa) == a.doc); // round trip
  }
}

TEST_CASE("latex emission mirrors the extension tables") {
  RunConfig cfg;
  cfg.format = "latex";

  cfg.prime = 5;
  std::string t5 = render_report(cmd_extensions(cfg), cfg);
  CHECK(t5.find("(e^{1,4},0)") != std::string::npos);
  CHECK(t5.find("\\alpha_{1}\\beta_{4}-\\alpha_{4}\\beta_{1}") != std::string::npos);
  CHECK(t5.find("(\\xi,\\tilde \\xi)") != std::string::npos);
  CHECK(t5.find("\\tfrac{1}{2}\\alpha_{1}^{3}\\alpha_{2}^{2}c") != std::string::npos);
  CHECK(t5.find("\\alpha_{1}^{4}\\alpha_{2}c") != std::string::npos);

  cfg.prime = 7;
  std::string t7 = render_report(cmd_extensions(cfg), cfg);
  CHECK(t7.find("(\\eta,0)") != std::string::npos);
  CHECK(t7.find("(\\varphi_{8},\\tilde \\varphi_{8})") != std::string::npos);
  CHECK(t7.find("\\alpha_{1}^{6}\\alpha_{2}c") != std::string::npos);
  CHECK(t7.find("g^{[p]}=0") != std::string::npos);

  cfg.lambda_spec = "1,0,0,0,0,0,0";
  std::string tn = render_report(cmd_extensions(cfg), cfg);
  CHECK(tn.find("g^{[p]}=g^{[p]_{\\mathfrak{m}}}") != std::string::npos);
  CHECK(tn.find("varphi_{8}") == std::string::npos); // no phi_{p+1} row when lambda != 0
}
