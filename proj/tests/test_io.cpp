#include <doctest.h>

#include "lmsf/json_io.hpp"
#include "lmsf/laguerre.hpp"
#include "lmsf/meixner.hpp"
#include "lmsf/nvariate.hpp"
#include "lmsf/verify.hpp"
#include "support.hpp"

using namespace lmsf;

TEST_CASE("polynomial JSON") {
  const ParamPoly p = param::z() * param::zp() * make_rat(-3, 4) + param::t();
  const io::Json j = io::to_json(p);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0].contains("dz"));
  CHECK(j[0].contains("dzp"));
  CHECK(j[0].contains("dt"));
  CHECK(io::poly_from_json<ZZpTVars>(j) == p);
  CHECK(io::to_json(ParamPoly()).empty());
  const BTPoly q = btparam::b() * make_rat(5, 3) - btparam::t();
  CHECK(io::to_json(q)[0].contains("db"));
  CHECK(io::poly_from_json<BTVars>(io::to_json(q)) == q);
  CHECK_THROWS_AS(io::poly_from_json<ZZpTVars>(io::Json::object()), std::invalid_argument);
}

TEST_CASE("symmetric function JSON round trips") {
  for (const auto& nu : partitions_up_to(4)) {
    const SymFunc& l = laguerre::laguerre_sf(nu);
    CHECK(io::symfunc_from_json(io::to_json(l)) == l);
    const SymFunc& m = meixner::meixner_sf(nu);
    const io::Json j = io::to_json(m);
    CHECK(j["basis"] == "FS");
    CHECK(io::symfunc_from_json(j) == m);
  }
  CHECK(io::partition_from_json(io::to_json(Partition{3, 2, 2})) == Partition{3, 2, 2});
  CHECK(io::to_json(Partition()).empty());
}

TEST_CASE("n-variable polynomial JSON round trips") {
  const auto& fam = nvar::univariate_family(nvar::Kind::Meixner, 4);
  const NVarPoly f = nvar::multivariate_op(Partition{2, 1}, fam, 2);
  const io::Json j = io::to_json(f);
  CHECK(j["N"] == 2);
  CHECK(io::nvarpoly_from_json(j) == f);
}

TEST_CASE("verification reports") {
  const auto report = verify::run_suite("psi", 4);
  CHECK(report.ok());
  const io::Json j = report.to_json();
  CHECK(j["suite"] == "psi");
  CHECK(j["passed"] == true);
  CHECK(j["failures"] == 0);
  CHECK(j["first_counterexample"].is_null());
  CHECK(j["results"].size() == report.cases.size());
  CHECK_THROWS_AS(verify::run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("every verification suite passes at small sizes") {
  for (const auto& info : verify::suites()) {
    const int size = std::min(info.default_max_size, 4);
    const auto report = verify::run_suite(info.name, size);
    CHECK_MESSAGE(report.ok(), info.name);
    CHECK_FALSE(report.cases.empty());
  }
}
