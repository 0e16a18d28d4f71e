#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

TEST_CASE("arrangement JSON round trip") {
  const Json j = Json::parse(R"({"ambient_dim": 3, "vectors": [["1","-1","0"],["0","1/2","-1"]]})");
  const VectorArrangement a = arrangement_from_json(j);
  CHECK(a.dim() == 3);
  CHECK(a.coordinate_vectors()[1] == Vec{0, Rational(1, 2), -1});
  CHECK(matroid_data(arrangement_from_json(to_json(a))) == matroid_data(a));
  CHECK(to_json(arrangement_from_json(to_json(a))) == to_json(a));
}

TEST_CASE("signed arrangement JSON") {
  const SignedArrangement a = signed_arrangement_from_json(Json::parse(R"({"ambient_dim":1,"vectors":[["1"]],"signs":["+"]})"));
  CHECK(a.signs == std::vector<Sign>{Sign::plus});
  CHECK(to_json(a)["signs"] == Json::parse(R"(["+"])"));
  CHECK_THROWS_AS(signed_arrangement_from_json(Json::parse(R"({"ambient_dim":1,"vectors":[["1"]]})")), DomainError);
}

TEST_CASE("graph JSON") {
  const Json j = Json::parse(R"({"vertices":3,"edges":[[1,2],[2,3],[3,1]],"reduced":false})");
  CHECK(matroid_data(arrangement_from_json(j)) == matroid_data(braid()));
  CHECK(to_json(graph_from_json(j)) == j);
  const Json s = Json::parse(R"({"vertices":2,"edges":[[1,2]],"signs":["-"],"reduced":true})");
  CHECK(signed_arrangement_from_json(s).signs == std::vector<Sign>{Sign::minus});
}

TEST_CASE("schema violations") {
  CHECK_THROWS(arrangement_from_json(Json::parse(R"({"ambient_dim":2,"vectors":[["1"]]})")));
  CHECK_THROWS(arrangement_from_json(Json::parse(R"({"vectors":[]})")));
  CHECK_THROWS(load_json_file("/nonexistent/file.json"));
}

TEST_CASE("polynomial JSON") {
  const LaurentPoly p = qpoly(-3, GaussInt(0, -1)) + qpoly(2, 5);
  CHECK(poly_from_json(to_json(p)) == p);
  const Json j = to_json(qpoly(6) + qpoly(4));
  CHECK(j["vars"] == Json::parse(R"(["q"])"));
  CHECK(j["terms"].size() == 2);
}

TEST_CASE("Betti JSON") {
  const BettiTable kink{{{-1, -3}, 1}};
  const Json j = betti_to_json(kink, 2);
  CHECK(j.dump() == R"({"grading_denominator":2,"betti":[{"deg":["-1/2","-3/2"],"dim":1}]})");
  CHECK(betti_from_json(j) == kink);
  const BettiTable baby{{{0, 2}, 1}, {{0, 3}, 1}};
  CHECK(betti_to_json(baby, 1).dump() ==
        R"({"grading_denominator":1,"betti":[{"deg":[0,2],"dim":1},{"deg":[0,3],"dim":1}]})");
  CHECK(betti_from_json(betti_to_json(baby, 1)) == baby);
}

TEST_CASE("Betti tables as text") {
  const std::string t = betti_to_table({{{-1, -3}, 1}}, 2, {"i", "j"});
  CHECK(t.find("-1/2") != std::string::npos);
  CHECK(t.find("-3/2") != std::string::npos);
  CHECK(betti_to_table({}, 1, {"i", "j"}) == "(zero homology)\n");
}

TEST_CASE("move descriptors") {
  const MoveDescriptor m = move_from_json(Json::parse(R"({"kind":"R3","l":1,"m":2,"p":3,"alpha_m":"1","alpha_p":"-1/2"})"));
  CHECK(m.kind == MoveKind::R3);
  CHECK(m.l == 0);
  CHECK(m.p == 2);
  CHECK(m.alpha_p == Rational(-1, 2));
  const Json back = to_json(m);
  CHECK(back["l"] == 1);
  CHECK(back["alpha_p"] == "-1/2");
  CHECK_THROWS(move_from_json(Json::parse(R"({"kind":"R3","l":0,"m":2,"p":3,"alpha_m":"1","alpha_p":"1"})")));
}
