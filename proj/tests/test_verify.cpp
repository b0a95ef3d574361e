#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "limitset/verify.hpp"

#include <set>
#include <string>

using namespace limitset;

TEST_CASE("property suite passes at the default tolerance") {
  const VerifyReport rep = verify_suite(120, 2024, kDefaultTol);
  for (const PropertyResult& p : rep.properties) {
    CHECK_MESSAGE(p.pass, p.name, ": ", p.failures, " failures, max residual ", p.max_residual,
                  " ", p.note);
    CHECK(p.trials > 0);
  }
  CHECK(rep.overall_pass);
  CHECK(rep.properties.size() >= 25);

  // property names are unique
  std::set<std::string> names;
  for (const PropertyResult& p : rep.properties) names.insert(p.name);
  CHECK(names.size() == rep.properties.size());
}

TEST_CASE("property suite is deterministic") {
  const VerifyReport a = verify_suite(60, 7, kDefaultTol);
  const VerifyReport b = verify_suite(60, 7, kDefaultTol);
  CHECK(verify_report_json(a) == verify_report_json(b));
}

TEST_CASE("tolerance is live: a vanishing band breaks detection properties") {
  // with an absurdly small tolerance the parabolic band and the real-point
  // band become undetectable, so the suite must notice and fail
  const VerifyReport rep = verify_suite(60, 2024, 1e-30);
  CHECK_FALSE(rep.overall_pass);
  bool parabolic_failed = false;
  bool real_failed = false;
  for (const PropertyResult& p : rep.properties) {
    if (p.name == "parabolic-band-detection" && !p.pass) parabolic_failed = true;
    if (p.name == "real-point-detection" && !p.pass) real_failed = true;
  }
  CHECK(parabolic_failed);
  CHECK(real_failed);
}

TEST_CASE("frame orientation is reported as a finding, not a failure") {
  const VerifyReport rep = verify_suite(40, 3, kDefaultTol);
  bool found = false;
  for (const std::string& f : rep.findings) {
    if (f.find("det") != std::string::npos) found = true;
  }
  CHECK(found);
  for (const PropertyResult& p : rep.properties) {
    if (p.name == "frame-matrix-isometry") CHECK(p.pass);
  }
}

TEST_CASE("report renderings carry the verdict") {
  const VerifyReport rep = verify_suite(40, 11, kDefaultTol);
  const std::string js = verify_report_json(rep);
  CHECK(js.find("\"overall_pass\"") != std::string::npos);
  CHECK(js.find("\"properties\"") != std::string::npos);
  CHECK(js.find("\"findings\"") != std::string::npos);
  const std::string txt = verify_report_text(rep);
  CHECK(txt.find("pass") != std::string::npos);
}
