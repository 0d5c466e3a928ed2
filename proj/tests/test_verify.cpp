#include "doctest.h"
#include "test_helpers.hpp"

using namespace gk1;

TEST_SUITE("verify") {

TEST_CASE("reports are deterministic for fixed trials and seed") {
  verify::Options opt;
  opt.trials = 5;
  opt.seed = 42;
  std::string first = verify::format_report(verify::run_all(opt));
  std::string second = verify::format_report(verify::run_all(opt));
  CHECK(first == second);
  CHECK(first.find("verify: PASS (11/11 suites)") != std::string::npos);
}

TEST_CASE("trials=0 runs the exhaustive portions only") {
  verify::Options opt;
  opt.trials = 0;
  opt.seed = 1;
  auto results = verify::run_all(opt);
  CHECK(verify::all_passed(results));
  for (const auto& r : results) CHECK(r.random_trials == 0);
  std::string report = verify::format_report(results);
  CHECK(report.find("skipped-random, exhaustive-only") != std::string::npos);
}

TEST_CASE("suite filtering") {
  verify::Options opt;
  opt.trials = 2;
  auto results = verify::run_all(opt, {"succ-formula", "serialization"});
  CHECK(results.size() == 2);
  CHECK(results[0].name == "succ-formula");
  CHECK(results[1].name == "serialization");
  CHECK_THROWS_AS(verify::run_all(opt, {"no-such-suite"}), Error);
}

TEST_CASE("a corrupted successor formula is caught and the seed recorded") {
  verify::Options opt;
  opt.trials = 40;
  opt.seed = 9;
  // correct on the small codes the exhaustive sweep covers, wrong beyond them:
  // only the randomized portion can catch it, so a reproduction seed must be
  // reported
  auto corrupted = [](const SuccessorQuery& q) -> std::optional<Word> {
    std::optional<Word> right = succ_formula(q);
    if (q.code.size() > 6 && right) return right->append(q.letter);
    return right;
  };
  verify::SuiteResult r = verify::run_succ_formula_suite(opt, corrupted);
  CHECK_FALSE(r.passed());
  REQUIRE(!r.failures.empty());
  CHECK(r.failures[0].seed != 0);
  CHECK(!r.failures[0].inputs.empty());
  CHECK(!r.failures[0].message.empty());
}

}  // TEST_SUITE
