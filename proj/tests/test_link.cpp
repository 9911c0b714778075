// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "germ/link.hpp"

using namespace germ;

static std::string fixtures_dir() {
  const char* env = std::getenv("GERM_FIXTURES");
  return env ? env : "fixtures";
}

static Arrangement load(const std::string& name) {
  std::ifstream in(fixtures_dir() + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return Arrangement::build(load_link(os.str()));
}

static const RatVec kNorth{Rat(0), Rat(0), Rat(1)};
static const RatVec kSouth{Rat(0), Rat(0), Rat(-1)};

TEST_CASE("one great circle") {
  Arrangement a = load("one-great-circle.json");
  CHECK(a.num_vertices() == 4);
  CHECK(a.num_edges() == 4);
  CHECK(a.num_faces() == 2);
  CHECK(a.num_circles() == 1);
  CHECK(a.is_euler_cycle());
  CHECK(a.crossing_distance(kNorth, kSouth) == 1);
  CHECK(a.diameter() == 1);
  CHECK(a.antipodal_parity(kNorth) == 1);
  auto ac = a.antipodal_check();
  CHECK(ac.invariant);
  CHECK(ac.circle_image == std::vector<int>{0});
  auto nr = a.nac();
  CHECK(nr.nac == 1);
  CHECK(!nr.capped);
  CHECK(nr.witness.size() == 1);
}

TEST_CASE("two orthogonal great circles") {
  Arrangement a = load("two-orthogonal.json");
  CHECK(a.num_vertices() == 6);
  CHECK(a.num_edges() == 8);
  CHECK(a.num_faces() == 4);
  CHECK(a.is_euler_cycle());
  CHECK(a.antipodal_parity(RatVec{Rat(1), Rat(1), Rat(1)}) == 0);
  CHECK(a.diameter() == 2);
  CHECK(a.nac().nac == 2);
  for (int f = 0; f < a.num_faces(); ++f)
    CHECK(a.antipodal_parity_face(f) == 0);
}

TEST_CASE("cone link: two disjoint parallel circles") {
  Arrangement a = load("cone.json");
  CHECK(a.num_vertices() == 16);
  CHECK(a.num_edges() == 16);
  CHECK(a.num_faces() == 3);
  CHECK(a.num_circles() == 2);
  CHECK(a.crossing_distance(kNorth, kSouth) == 2);
  CHECK(a.diameter() == 2);
  CHECK(a.antipodal_parity(kNorth) == 0);
  auto ac = a.antipodal_check();
  CHECK(ac.invariant);
  CHECK(ac.circle_image == std::vector<int>{1, 0});  // a swaps the circles
  auto nr = a.nac();
  CHECK(nr.nac == 2);
  CHECK(nr.witness.size() == 2);
}

TEST_CASE("nested pairs: distance accumulates") {
  Arrangement a = load("four-circles-nested.json");
  CHECK(a.num_vertices() == 24);
  CHECK(a.num_edges() == 24);
  CHECK(a.num_faces() == 5);
  CHECK(a.crossing_distance(kNorth, kSouth) == 4);
  CHECK(a.diameter() == 4);
  CHECK(a.antipodal_parity(kNorth) == 0);
  CHECK(a.nac().nac == 4);
}

TEST_CASE("separated pairs: same counts, smaller diameter") {
  Arrangement a = load("four-circles-separated.json");
  CHECK(a.num_vertices() == 24);
  CHECK(a.num_edges() == 24);
  CHECK(a.num_faces() == 5);
  CHECK(a.diameter() == 2);
  CHECK(a.nac().nac == 4);
}

TEST_CASE("crossing distance is a metric and the diameter is attained") {
  for (const char* name : {"two-orthogonal.json", "cone.json",
                           "four-circles-nested.json", "four-circles-separated.json"}) {
    Arrangement a = load(name);
    int n = a.num_faces();
    int best = 0;
    for (int i = 0; i < n; ++i) {
      CHECK(a.crossing_distance(i, i) == 0);
      for (int j = 0; j < n; ++j) {
        int dij = a.crossing_distance(i, j);
        CHECK(dij == a.crossing_distance(j, i));
        if (i != j) CHECK(dij >= 1);
        best = std::max(best, dij);
        for (int k = 0; k < n; ++k)
          CHECK(a.crossing_distance(i, k) <= dij + a.crossing_distance(j, k));
      }
    }
    CHECK(best == a.diameter());
  }
}

TEST_CASE("antipodal parity is constant on antipodal face pairs") {
  for (const char* name :
       {"one-great-circle.json", "two-orthogonal.json", "cone.json",
        "four-circles-nested.json", "four-circles-separated.json"}) {
    Arrangement a = load(name);
    for (int f = 0; f < a.num_faces(); ++f) {
      int g = a.face_antipode(f);
      CHECK(a.face_antipode(g) == f);
      CHECK(a.antipodal_parity_face(f) == a.antipodal_parity_face(g));
      CHECK(a.antipodal_parity_face(f) == a.crossing_distance(f, g) % 2);
    }
  }
}

TEST_CASE("face representatives locate back to their faces") {
  for (const char* name : {"two-orthogonal.json", "cone.json",
                           "four-circles-nested.json", "four-circles-separated.json"}) {
    Arrangement a = load(name);
    const auto& reps = a.face_points();
    REQUIRE((int)reps.size() == a.num_faces());
    for (int f = 0; f < a.num_faces(); ++f) CHECK(a.locate(reps[f]) == f);
  }
}

TEST_CASE("nac witnesses are edge-disjoint closed walks on the link") {
  Arrangement a = load("four-circles-nested.json");
  auto nr = a.nac();
  REQUIRE((int)nr.witness.size() == nr.nac);
  std::set<std::pair<int, int>> used;
  for (const auto& cyc : nr.witness) {
    REQUIRE(cyc.size() >= 2);
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      CHECK(u != v);
      auto key = std::minmax(u, v);
      // vertex pairs identify edges here: the fixtures have no parallel edges
      CHECK(used.insert({key.first, key.second}).second);
    }
  }
}

TEST_CASE("cycle cap yields a capped lower bound") {
  Arrangement a = load("four-circles-nested.json");
  auto nr = a.nac(1);
  CHECK(nr.capped);
  // truncated enumeration can break antipodal orbits: only a lower bound
  CHECK(nr.nac >= 0);
  CHECK(nr.nac <= 4);
  auto nr8 = a.nac(8);
  CHECK(nr8.nac <= 4);
}

TEST_CASE("loader and arrangement reject bad input") {
  CHECK_THROWS_WITH_AS(
      load_link(R"({"circles": [[["1","0","0"],["0","1","1"],["0","0","1"]]]})"),
      doctest::Contains("unit"), Error);
  CHECK_THROWS_AS(load_link("not json"), Error);
  CHECK_THROWS_AS(load_link(R"({"circles": []})"), Error);
  CHECK_THROWS_WITH_AS(
      Arrangement::build(
          load_link(R"({"circles": [[["1","0","0"],["0","1","0"]]]})")),
      doctest::Contains("at least 3"), Error);

  // antipodal consecutive vertices give no well-defined minor arc
  CHECK_THROWS_WITH_AS(
      Arrangement::build(load_link(
          R"({"circles": [[["1","0","0"],["-1","0","0"],["0","0","1"]]]})")),
      doctest::Contains("ill-posed"), Error);

  // two circles sharing a full arc: non-finite intersection
  CHECK_THROWS_WITH_AS(
      Arrangement::build(load_link(
          R"({"circles": [
            [["1","0","0"],["0","1","0"],["0","0","1"]],
            [["1","0","0"],["0","1","0"],["0","0","-1"]]]})")),
      doctest::Contains("non-finite"), Error);
}

TEST_CASE("points on the link are not generic") {
  Arrangement a = load("one-great-circle.json");
  try {
    a.locate(RatVec{Rat(1), Rat(1), Rat(0)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
    CHECK(std::string(e.what()).find("generic") != std::string::npos);
  }
}
