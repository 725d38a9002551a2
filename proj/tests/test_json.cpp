#include "morsecert/examples.hpp"
#include "morsecert/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace morsecert;

TEST_SUITE("json") {
  TEST_CASE("situations round-trip bit for bit") {
    for (const auto& name : {"raag-1", "raag-3", "hexagon", "hexagon-product"}) {
      const auto s = build_example(parse_example_spec(name));
      const std::string once = dump(to_json(s));
      const auto back = situation_from_json(Json::parse(once));
      CHECK(dump(to_json(back)) == once);
      const auto cert = certify_model_situation(back);
      CHECK(cert.all_passed());
    }
  }

  TEST_CASE("situation files") {
    const std::string path = "roundtrip_situation.json";
    {
      std::ofstream out(path);
      out << dump(to_json(hexagon_example()));
    }
    const auto s = build_example({ExampleSpec::Kind::custom, 1, path});
    CHECK(certify_model_situation(s).order == 8);
    std::remove(path.c_str());
  }

  TEST_CASE("algebraic objects round-trip") {
    DoubledFreeElement g{{FreeWord::parse("a^3 b^-3", Alphabet::letters_ab()), FreeWord{}}, true};
    const auto j = to_json(g);
    CHECK(j.dump() == R"({"coords":["a^3 b^-3","1"],"flip":true})");
    CHECK(element_from_json(j) == g);

    const auto e = phi(1, 2);
    const auto je = to_json(e);
    CHECK(je.dump() == R"({"images":{"x1":"x1 x1 x2","x2":"x1 x2"},"rank":2})");
    CHECK(endo_from_json(je) == e);

    const auto m = abelianization(e);
    CHECK(to_json(m).dump() == "[[2,1],[1,1]]");
    CHECK(matrix_from_json(to_json(m)) == m);

    const auto cert = pingpong_search(abelianization(phi(1, 2)), abelianization(psi(1, 2)), 16);
    REQUIRE(cert.has_value());
    const auto jc = to_json(*cert);
    const auto back = pingpong_from_json(Json::parse(dump(jc)));
    CHECK(back == *cert);
    CHECK(pingpong_verify(back));
    CHECK(jc.at("X_A").at("attracting").at(0).get<std::string>().find('/') != std::string::npos);
  }

  TEST_CASE("certificates serialize") {
    const auto s = hexagon_example();
    const auto j = to_json(s, certify_model_situation(s));
    CHECK(j.at("order") == 8);
    CHECK(j.at("all_passed") == true);
    CHECK(j.at("t") == Json::parse(R"([["1","+"]])"));
    CHECK(j.at("curvature").at("verdict") == "CAT(-1)");
    CHECK(j.at("curvature").at("min_cycle_angle") == "2");
    CHECK(j.at("witness_family").at("sample_heights") == Json::parse("[0,1,2,3,4,5]"));
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices":["v"]})")), InvalidInput);
    CHECK_THROWS_AS(complex_from_json(Json::parse(
                        R"({"vertices":["v"],"edges":[{"id":"a","tail":"v","head":"v"}],"faces":[{"id":"f","boundary":[["a","*"]]}]})")),
                    InvalidInput);
    CHECK_THROWS_AS(element_from_json(Json::parse(R"({"coords":["c"],"flip":false})")), InvalidInput);
    CHECK_THROWS_AS(endo_from_json(Json::parse(R"({"rank":2,"images":{"x3":"x1"}})")), InvalidInput);
    CHECK_THROWS_AS(endo_from_json(Json::parse(R"({"rank":1,"images":{"x1":"x2"}})")), InvalidInput);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]")), InvalidInput);
    CHECK_THROWS_AS(angles_from_json(Json::parse(R"({"f":["1/0"]})")), InvalidInput);
    CHECK_THROWS_AS(situation_from_json(Json::parse(R"({"factors":[]})")), InvalidInput);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
  }
}
