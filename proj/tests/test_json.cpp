#include <doctest.h>

#include <fstream>

#include "jordan/cli.hpp"
#include "jordan/json_io.hpp"
#include "jordan/sampling.hpp"
#include "test_util.hpp"

using namespace jordan;
using jordan::testutil::mat;

namespace {

// minimal structural validator mirroring schemas/report.schema.json
void check_report_shape(const Json& r) {
  REQUIRE(r.is_object());
  REQUIRE(r.contains("schema_version"));
  CHECK(r.at("schema_version").is_string());
  REQUIRE(r.contains("exit_code"));
  CHECK(r.at("exit_code").is_number_integer());
  REQUIRE(r.contains("timing_ms"));
  CHECK((r.at("timing_ms").is_null() || r.at("timing_ms").is_number()));
  if (r.contains("verification")) {
    const auto& v = r.at("verification");
    CHECK(v.contains("passed"));
    if (v.contains("checks"))
      for (const auto& c : v.at("checks")) {
        CHECK(c.contains("name"));
        CHECK(c.contains("pass"));
      }
  }
  if (r.contains("error")) {
    CHECK(r.at("error").contains("kind"));
    CHECK(r.at("error").contains("message"));
  }
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("matrix round trip") {
    SquareMatrix m = jordan::testutil::example_operator();
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    Rng rng(149);
    for (int i = 0; i < 20; ++i) {
      SquareMatrix r(3);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) r.at(a, b) = Scalar(rng.rat(20, 13));
      CHECK(matrix_from_json(matrix_to_json(r)) == r);
    }
  }

  TEST_CASE("matrix validation failures") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("{}")), Error);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"n":2,"entries":[["1","2"]]})")),
                    Error);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json::parse(R"x({"n":1,"entries":[["sqrt(2)"]]})x")), Error);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"n":0,"entries":[]})")), Error);
    // decimal entries convert exactly
    SquareMatrix m =
        matrix_from_json(nlohmann::json::parse(R"({"n":1,"entries":[["0.25"]]})"));
    CHECK(m.at(0, 0) == Scalar(make_rat(1, 4)));
  }

  TEST_CASE("poly and spectral serialization") {
    Poly p = jordan::testutil::example_min_poly();
    Json pj = poly_to_json(p);
    CHECK(pj.at("ring") == "rational");
    CHECK(pj.at("coefficients").size() == 5);
    CHECK(pj.at("coefficients")[0] == "8");
    SpectralData s = factor_minimal_polynomial(p, ModeRequest::Exact);
    Json sj = spectral_to_json(s);
    CHECK(sj.at("mode") == "exact");
    CHECK(sj.at("complex_pairs").size() == 1);
    CHECK(sj.at("complex_pairs")[0].at("lambda") == "1+1i");
    CHECK(sj.at("real_roots")[0].at("multiplicity") == 2);
    CHECK_FALSE(sj.contains("precision_bits"));
    SpectralData sn = factor_minimal_polynomial(Poly({Scalar(-2), Scalar(0), Scalar(0), Scalar(1)}),
                                                ModeRequest::Numeric);
    CHECK(spectral_to_json(sn).at("precision_bits") == 53);
  }

  TEST_CASE("projector set serialization carries identity results") {
    SquareMatrix t = jordan::testutil::example_operator();
    SpectralData s = factor_minimal_polynomial(minimal_polynomial(t), ModeRequest::Exact);
    ProjectorSet ps = build_projectors(s);
    Json j = projectors_to_json(ps, verify_projector_identities(ps, t));
    CHECK(j.at("complex_pairs").size() == 1);
    CHECK(j.at("complex_pairs")[0].at("projector").at("coefficients").size() == 4);
    CHECK(j.at("real_roots")[0].at("lambda") == "2");
    CHECK(j.at("identities").at("passed") == true);
  }

  TEST_CASE("lie structure round trip") {
    CHECK(lie_from_json(nlohmann::json::parse(R"({"family":"sl","n":3})")).name() == "sl(3)");
    CHECK(lie_from_json(nlohmann::json::parse(R"({"family":"so","p":2,"q":1})")).name() ==
          "so(2,1)");
    CHECK(lie_from_json(nlohmann::json::parse(R"({"family":"sp","n":4})")).name() == "sp(4)");
    CHECK_THROWS_AS(lie_from_json(nlohmann::json::parse(R"({"family":"e8"})")), Error);
    CHECK(lie_to_json(LieStructure::so(2, 1)).at("p") == 2);
  }

  TEST_CASE("golden request file parses and the report validates") {
    std::ifstream in(std::string(JORDAN_SOURCE_DIR) + "/data/worked_example.json");
    REQUIRE(in.good());
    nlohmann::json req_json = nlohmann::json::parse(in);
    cli::TaskRequest req = cli::parse_request(req_json);
    CHECK(req.operation == "both");
    CHECK(req.mode == ModeRequest::Exact);
    cli::TaskOutcome out = cli::run_request(req);
    CHECK(out.exit_code == 0);
    check_report_shape(out.report);
    CHECK(out.report.at("result").contains("additive"));
    CHECK(out.report.at("result").contains("multiplicative"));
  }

  TEST_CASE("schema files exist and declare the shapes the validator checks") {
    for (const char* name : {"request.schema.json", "report.schema.json"}) {
      std::ifstream in(std::string(JORDAN_SOURCE_DIR) + "/schemas/" + name);
      REQUIRE(in.good());
      nlohmann::json schema = nlohmann::json::parse(in);
      CHECK(schema.contains("$schema"));
      CHECK(schema.contains("properties"));
    }
  }
}
