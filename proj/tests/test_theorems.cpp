#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gril/theorems.hpp"

using namespace gril;

namespace {

std::vector<const Fixture*> just(const std::string& name) {
  const Fixture* f = find_fixture(name);
  REQUIRE(f != nullptr);
  return {f};
}

bool buckets_add_up(const CheckReport& r) {
  return r.passed + r.vacuous + r.expected_counterexamples + r.failures.size() == r.instances;
}

}  // namespace

TEST_CASE("registry covers the canonical list") {
  const auto& canonical = canonical_check_ids();
  const auto& registered = registered_check_ids();
  CHECK(canonical.size() == 31);
  CHECK(registered.size() == 34);
  for (const std::string& id : canonical) {
    CAPTURE(id);
    CHECK(std::find(registered.begin(), registered.end(), id) != registered.end());
  }
  for (const char* extra : {"Ex2", "Ex3", "Ex4"})
    CHECK(std::find(registered.begin(), registered.end(), extra) != registered.end());

  CHECK(run_all({}).empty());
  CHECK(all_fixture_pointers().size() == fixture_catalog().size());

  try {
    run_check("no-such-check", {});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnknownCheck);
  }
}

TEST_CASE("every record balances its buckets and sorts canonically") {
  auto reports = run_all(just("zmod4"));
  REQUIRE(!reports.empty());
  for (const CheckReport& r : reports) {
    CAPTURE(r.check_id);
    CHECK(buckets_add_up(r));
    for (const CheckFailure& cf : r.failures) {
      CAPTURE(cf.instance);
      CHECK(cf.witness != "");
    }
  }
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const CheckReport& a, const CheckReport& b) {
                         return std::tie(a.check_id, a.fixture) < std::tie(b.check_id, b.fixture);
                       }));
  CHECK(all_ok(reports));

  // the ring is graded local, so the local-ring checks must actually engage
  for (const char* id : {"R1", "R1-Cor", "L1"}) {
    auto it = std::find_if(reports.begin(), reports.end(),
                           [&](const CheckReport& r) { return r.check_id == id; });
    REQUIRE(it != reports.end());
    CAPTURE(id);
    CHECK(it->instances > 0);
  }
}

TEST_CASE("recorded one-way gap between the first two conditions") {
  auto reports = run_check("T1-counterexample", just("z50x-trunc"));
  REQUIRE(reports.size() == 1);
  const CheckReport& r = reports[0];
  CHECK(r.ok());
  CHECK(r.instances == 2);
  CHECK(r.expected_counterexamples == 2);
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("2, 5, 5 + X") != std::string::npos);

  // the check is pinned to its fixture; other rings yield no record
  CHECK(run_check("T1-counterexample", just("zmod4")).empty());
}

TEST_CASE("locked gap records for the anchor examples") {
  auto ex2 = run_check("Ex2", all_fixture_pointers());
  REQUIRE(ex2.size() == 2);
  CHECK(ex2[0].fixture == "z12i-q4");
  CHECK(ex2[1].fixture == "z18i-q9");
  for (const CheckReport& r : ex2) {
    CAPTURE(r.fixture);
    CHECK(r.ok());
    CHECK(r.instances == 3);
    CHECK(r.passed == 1);
    CHECK(r.expected_counterexamples == 2);
  }

  auto ex3 = run_check("Ex3", all_fixture_pointers());
  REQUIRE(ex3.size() == 1);
  CHECK(ex3[0].fixture == "boolean-z2p4");
  CHECK(ex3[0].ok());
  CHECK(ex3[0].instances == 3);
  CHECK(ex3[0].vacuous == 1);
  CHECK(ex3[0].expected_counterexamples == 2);

  auto ex4 = run_check("Ex4", all_fixture_pointers());
  REQUIRE(ex4.size() == 2);
  for (const CheckReport& r : ex4) {
    CAPTURE(r.fixture);
    CHECK(r.ok());
    CHECK(r.instances == 3);
    CHECK(r.passed == 1);
    CHECK(r.expected_counterexamples == 2);
  }
}

TEST_CASE("regular decomposition engages on the regular rings") {
  auto reports = run_check("S3-P6", just("zmod6"));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].ok());
  CHECK(reports[0].instances == find_fixture("zmod6")->ring->homogeneous_indices().size());

  // not regular: the check reports an empty slice rather than failing
  auto eps = run_check("S3-P6", just("z2eps"));
  REQUIRE(eps.size() == 1);
  CHECK(eps[0].ok());
  CHECK(eps[0].instances == 0);
}

TEST_CASE("quotient transfer engages on the first anchor") {
  auto reports = run_check("T5i", just("z18i-q9"));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].ok());
  CHECK(reports[0].instances > 0);
}

TEST_CASE("reports serialize deterministically") {
  auto once = report_json(run_check("T6", just("zmod6"))).dump(2);
  auto twice = report_json(run_check("T6", just("zmod6"))).dump(2);
  CHECK(once == twice);
  CHECK(once.find("\"check_id\"") != std::string::npos);

  auto p1 = report_json(run_check("P1.1", just("zmod9"))).dump(2);
  auto p2 = report_json(run_check("P1.1", just("zmod9"))).dump(2);
  CHECK(p1 == p2);
}
