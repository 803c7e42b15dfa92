#include <doctest.h>

#include "commgroup/selftest.hpp"

using namespace commgroup;

TEST_CASE("selftest is deterministic and passes") {
  const SelftestConfig cfg{7, 20, 2};
  const auto a = run_selftest(cfg);
  const auto b = run_selftest(cfg);
  CHECK(format_selftest(a) == format_selftest(b));
  CHECK(a.size() == 10);
  for (const auto& r : a) {
    CHECK_MESSAGE(r.ok(), r.name);
    CHECK(r.total > 0);
  }
  const std::string table = format_selftest(a);
  CHECK(table.find("all suites passed") != std::string::npos);
}

TEST_CASE("selftest configuration errors") {
  CHECK_THROWS_AS(run_selftest({1, 0, 2}), Error);
  CHECK_THROWS_AS(run_selftest({1, 5, -1}), Error);
}

TEST_CASE("failure report") {
  SuiteResult bad{"example", 1, 2, {"case 2"}};
  const std::string text = format_selftest({bad});
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("    case 2") != std::string::npos);
  CHECK(text.find("1 suite(s) failed") != std::string::npos);
}
