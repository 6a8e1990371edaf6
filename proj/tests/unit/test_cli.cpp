#include <doctest.h>

#include "svred/commands.hpp"
#include "svred/errors.hpp"
#include "svred/families.hpp"
#include "svred/session.hpp"

using namespace svred;

namespace {

std::string session_text(const std::string& family, const std::string& params) {
  return cmd_family(family, params).report.at("family") == family
             ? cmd_family(family, params).report.at("session").get<std::string>()
             : std::string();
}

std::string family_doc(const std::string& family, const std::string& params) {
  return cmd_family(family, params).report.dump();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse a small session") {
    auto s = parse_session("ring R = vars x, y; ideal I = x*y, y^2;");
    REQUIRE(s.rings.size() == 1);
    REQUIRE(s.ideals.size() == 1);
    CHECK(s.ideal().ideal.size() == 2);
    CHECK(s.ideal("I").ring == "R");
  }

  TEST_CASE("relations, locality and rational coefficients") {
    auto s = parse_session(
        "# quotient\nring Q = vars x, y, z; rel x^2*y^2 - z^4; local;\n"
        "ideal I = x, y, z;\nideal J = 3/4*x - (y + z)^2, -2;\n");
    const auto& ring = *s.ring("Q").ring;
    CHECK(ring.origin_local());
    CHECK(ring.relations().size() == 1);
    CHECK(s.ideal("J").ideal.generators()[0].to_string(ring.variables()) == "-y^2 - 2*y*z - z^2 + 3/4*x");
  }

  TEST_CASE("printed families re-parse to equal sessions") {
    for (const auto& [name, params] : std::vector<std::pair<std::string, std::string>>{
             {"dual-ci", "2,2"}, {"dual-ci-sum", "2,2+3,2"}, {"even-cycle", "3"}, {"k5", "1,2,3,4"},
             {"binomial", ""}, {"hypersurface", "2"}}) {
      auto bundle = make_family(name, params);
      const std::string text = print_session(make_session(bundle.partition));
      auto s = parse_session(text);
      CHECK(s.ring().ring->same_as(*bundle.ring()));
      CHECK(s.ideal().ideal.generators() == bundle.ideal.generators());
      CHECK(s.partition().partition.parts() == bundle.partition.parts());
      CHECK(print_session(s) == text);
    }
  }

  TEST_CASE("errors carry locations") {
    try {
      parse_session("ring R = vars x, y;\nideal I = x*y, y^2;\npartition P of I = [x*y] [y^2] [x^2];\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 33);
    }
    CHECK_THROWS_AS(parse_session("ring R = vars x;\nideal I = q;"), ParseError);
    CHECK_THROWS_AS(parse_session("ring R = vars x\nideal I = x;"), ParseError);
    CHECK_THROWS_AS(parse_session("ideal I = x;"), ParseError);
    CHECK_THROWS_AS(parse_session("ring R = vars x; ideal I = x; partition P of K = [x];"), ParseError);
    CHECK_THROWS_AS(parse_session("ring R = vars x, x;"), ParseError);
    CHECK_THROWS_AS(parse_session("ring R = vars x; ideal I = x $ 2;"), ParseError);
    try {
      parse_session("ring R = vars x;\n  ideal I = x +;");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 16);
    }
  }

  TEST_CASE("partition arity and structure are checked") {
    CHECK_THROWS_AS(parse_session("ring R = vars x, y; ideal I = x, y; partition P of I = [x, y];"), ParseError);
  }

  TEST_CASE("certificate JSON round trip") {
    for (const auto& bundle : {dual_ci({2, 2}), hypersurface_example(2), even_cycle(2), complete_graph_k5(2, 3, 4, 5)}) {
      auto cert = bundle.certificate();
      auto doc = certificate_to_json(cert);
      auto back = certificate_from_json(Json::parse(doc.dump()));
      CHECK(certificate_to_json(back) == doc);
      CHECK(verify_certificate(back).passed);
    }
  }

  TEST_CASE("exit codes") {
    CHECK(cmd_check(family_doc("dual-ci", "2,2"), "sv").exit_code == kExitPass);
    auto fail = cmd_check(family_doc("hypersurface", "2"), "sv");
    CHECK(fail.exit_code == kExitFailed);
    CHECK(fail.report["failure"]["elements_text"] == Json::array({"x", "y"}));
    CHECK(cmd_check(family_doc("hypersurface", "2"), "b").exit_code == kExitPass);
    CHECK(cmd_check(family_doc("even-cycle", "2"), "ba").exit_code == kExitPass);
    CHECK(cmd_check(family_doc("binomial", ""), "sv").exit_code == kExitFailed);
    CHECK(cmd_check(family_doc("binomial", ""), "b").exit_code == kExitPass);
    CHECK(cmd_check("ring R = vars x;\nideal I = ;", "sv").exit_code == kExitUsage);
    CHECK(cmd_check(family_doc("dual-ci", "2,2"), "zz").exit_code == kExitUsage);
    CHECK(cmd_family("nope", "").exit_code == kExitUsage);
    CHECK(cmd_reduce(family_doc("hypersurface", "2"), std::string("sv")).exit_code == kExitFailed);
    CHECK(cmd_verify(family_doc("k5", "2,3,4,5")).exit_code == kExitPass);
    auto parse_error = cmd_verify("ring R = vars x;\nideal I = y;");
    CHECK(parse_error.exit_code == kExitUsage);
    CHECK(parse_error.report["error"]["line"] == 2);
  }

  TEST_CASE("reduce then verify") {
    auto reduced = cmd_reduce(family_doc("dual-ci", "2,2"));
    REQUIRE(reduced.exit_code == kExitPass);
    auto verified = cmd_verify(reduced.report.dump());
    CHECK(verified.exit_code == kExitPass);
    CHECK(verified.report["oracle_least_s"] == 1);
    auto tampered = reduced.report;
    tampered["certificate"]["witnesses"] = Json::array();
    auto bad = cmd_verify(tampered.dump());
    CHECK(bad.exit_code == kExitFailed);
    CHECK(bad.report["failed_stage"] == "replay");
  }

  TEST_CASE("invariants and search commands") {
    InvariantsRequest req;
    req.certify = true;
    auto inv = cmd_invariants(family_doc("dual-ci", "2,2"), req);
    REQUIRE(inv.exit_code == kExitPass);
    CHECK(inv.report["pd"] == 3);
    CHECK(inv.report["ell_certified"] == 3);
    CHECK(inv.report["minimality"] == "certified-minimal");

    SearchBudget budget;
    budget.r_target = 3;
    auto absent = cmd_search(family_doc("k5", ""), budget);
    CHECK(absent.exit_code == kExitFailed);
    CHECK(absent.report["exhaustive"] == true);
    auto certify = cmd_search(family_doc("even-cycle", "2"), SearchBudget{}, true);
    CHECK(certify.exit_code == kExitPass);
    CHECK(certify.report["report"]["ell_certified"] == 3);
  }

  TEST_CASE("reports are byte-identical across runs") {
    const std::string doc = family_doc("binomial", "");
    CHECK(cmd_verify(doc).report.dump(2) == cmd_verify(doc).report.dump(2));
    CHECK(cmd_check(doc, "b").report.dump(2) == cmd_check(doc, "b").report.dump(2));
    CHECK(session_text("dual-ci", "2,2") == session_text("dual-ci", "2,2"));
  }
}
