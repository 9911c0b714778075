// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>

#include "germlab.h"
#include "json.hpp"

using J = nlohmann::ordered_json;

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { germlab_string_free(p); }
};

}  // namespace

TEST_CASE("analyze returns a well-formed document") {
  Owned out, err;
  int status = germlab_analyze("poly", "y^2 - x^3", 0, &out.p, &err.p);
  CHECK(status == GERMLAB_OK);
  REQUIRE(out.p);
  J doc = J::parse(std::string(out.p));
  CHECK(doc["schema"] == "germlab-analysis-1");
  const auto& a = doc["analysis"];
  CHECK(a["branches"].size() == 1);
  CHECK(a["multiplicity"]["m"] == 2);
  CHECK(a["multiplicity"]["parity"] == 0);
  CHECK(a["invariant"]["rows"].size() == 1);
  CHECK(!a.contains("oracle"));
}

TEST_CASE("analyze with the oracle section") {
  Owned out, err;
  int status = germlab_analyze("poly", "y", 1, &out.p, &err.p);
  CHECK(status == GERMLAB_OK);
  REQUIRE(out.p);
  J doc = J::parse(std::string(out.p));
  CHECK(doc["analysis"]["oracle"]["parity"] == 1);
  CHECK(doc["analysis"]["oracle"]["agrees_with_exact"] == true);

  Owned out2, err2;
  CHECK(germlab_analyze("param", R"({"branches": [["t^2", "t^3"]]})", 1,
                        &out2.p, &err2.p) == GERMLAB_ERR_PRECONDITION);
  REQUIRE(err2.p);
  CHECK(std::string(err2.p).find("polynomial") != std::string::npos);
}

TEST_CASE("analyze error statuses") {
  Owned out, err;
  CHECK(germlab_analyze("poly", "y^2 + ", 0, &out.p, &err.p) ==
        GERMLAB_ERR_INPUT);
  CHECK(out.p == nullptr);
  REQUIRE(err.p);

  Owned out2, err2;
  CHECK(germlab_analyze("poly", "x^2 + y^2", 0, &out2.p, &err2.p) ==
        GERMLAB_ERR_DEGENERATE);

  Owned out3, err3;
  CHECK(germlab_analyze("blob", "y", 0, &out3.p, &err3.p) ==
        GERMLAB_ERR_INPUT);
}

TEST_CASE("compare distinguishes germs") {
  Owned out, err;
  int status =
      germlab_compare("poly", "y", "poly", "y^3 - x^2", &out.p, &err.p);
  CHECK(status == GERMLAB_ERR_MISMATCH);
  REQUIRE(out.p);  // negative verdict still carries a document
  J doc = J::parse(std::string(out.p));
  CHECK(doc["schema"] == "germlab-compare-1");
  CHECK(doc["bs_equivalent"] == false);

  Owned out2, err2;
  CHECK(germlab_compare("poly", "y^2 - x^3", "poly", "y^2 - x^5", &out2.p,
                        &err2.p) == GERMLAB_OK);
  J doc2 = J::parse(std::string(out2.p));
  CHECK(doc2["bs_equivalent"] == true);
  CHECK(doc2["matching"].size() == 1);

  Owned out3, err3;
  CHECK(germlab_compare("poly", "y^2 - x^3", "param",
                        R"({"branches": [["t^2", "t^3"]]})", &out3.p,
                        &err3.p) == GERMLAB_OK);
}

TEST_CASE("realize and verify") {
  Owned out, err;
  int status = germlab_realize(R"({"rows": [[0, 0, 1]]})", 1, &out.p, &err.p);
  CHECK(status == GERMLAB_OK);
  REQUIRE(out.p);
  J doc = J::parse(std::string(out.p));
  CHECK(doc["schema"] == "germlab-realize-1");
  CHECK(doc["verified"] == true);
  CHECK(doc["polynomial"].is_string());

  Owned out2, err2;
  CHECK(germlab_realize(R"({"rows": [[1, 0, 0]]})", 0, &out2.p, &err2.p) ==
        GERMLAB_ERR_INPUT);

  Owned out3, err3;
  CHECK(germlab_realize("nonsense", 0, &out3.p, &err3.p) == GERMLAB_ERR_INPUT);
}

static const char* kSquareLink =
    R"({"circles": [[["1","0","0"],["0","1","0"],["-1","0","0"],["0","-1","0"]]]})";

TEST_CASE("link analysis") {
  J req;
  req["euler"] = true;
  req["diameter"] = true;
  req["parity"] = true;
  req["parity_point"] = {"0", "0", "1"};
  req["antipodal"] = true;
  req["nac"] = true;
  Owned out, err;
  int status =
      germlab_link(kSquareLink, req.dump().c_str(), &out.p, &err.p);
  CHECK(status == GERMLAB_OK);
  REQUIRE(out.p);
  J doc = J::parse(std::string(out.p));
  CHECK(doc["schema"] == "germlab-link-1");
  CHECK(doc["vertices"] == 4);
  CHECK(doc["edges"] == 4);
  CHECK(doc["faces"] == 2);
  CHECK(doc["euler_cycle"] == true);
  CHECK(doc["diameter"] == 1);
  CHECK(doc["antipodal_parity"] == 1);
  CHECK(doc["antipodal"]["invariant"] == true);
  CHECK(doc["nac"]["value"] == 1);
  CHECK(doc["nac"]["capped"] == false);
}

TEST_CASE("nac on a non-invariant link is a precondition failure") {
  // small circle around the north pole: a(link) is disjoint from the link
  const char* small =
      R"({"circles": [
        [["3/5","0","4/5"],["0","3/5","4/5"],["-3/5","0","4/5"],["0","-3/5","4/5"]]]})";
  J req;
  req["nac"] = true;
  Owned out, err;
  CHECK(germlab_link(small, req.dump().c_str(), &out.p, &err.p) ==
        GERMLAB_ERR_PRECONDITION);
  REQUIRE(err.p);
  CHECK(std::string(err.p).find("antipodally") != std::string::npos);
}

TEST_CASE("cycle cap from the environment") {
  setenv("GERMLAB_CYCLE_CAP", "1", 1);
  J req;
  req["nac"] = true;
  Owned out, err;
  int status = germlab_link(kSquareLink, req.dump().c_str(), &out.p, &err.p);
  unsetenv("GERMLAB_CYCLE_CAP");
  CHECK(status == GERMLAB_OK);
  J doc = J::parse(std::string(out.p));
  // one circle: the single cycle fits inside cap 1 and is not capped short
  CHECK(doc["nac"]["value"] == 1);

  // an explicit request cap takes precedence over the environment
  setenv("GERMLAB_CYCLE_CAP", "1", 1);
  J req2;
  req2["nac"] = true;
  req2["cycle_cap"] = 50;
  Owned out2, err2;
  CHECK(germlab_link(kSquareLink, req2.dump().c_str(), &out2.p, &err2.p) ==
        GERMLAB_OK);
  unsetenv("GERMLAB_CYCLE_CAP");
  J doc2 = J::parse(std::string(out2.p));
  CHECK(doc2["nac"]["capped"] == false);
}

TEST_CASE("version string") {
  CHECK(std::string(germlab_version()).find("germlab") != std::string::npos);
}
