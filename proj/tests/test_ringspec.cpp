#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "gril/ringspec.hpp"

using namespace gril;

namespace {

// phis deliberately omitted: parsing must fall back to the standard five.
const char* kQuadExt = R"({
  "name": "z18i",
  "ring": {"kind": "poly", "base": {"kind": "zmod", "modulus": 18}, "lower": [[1], [0]]},
  "grading": {"group": "cyclic:2", "degrees": {"1": 0, "X": 1}},
  "ideals": {"q2": ["9"]}
})";

std::string replaced(std::string text, const std::string& from, const std::string& to) {
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

// runs the parser on text expected to fail, returning the diagnostic
std::string rejects(Err code, const std::string& text, const Limits& lim = default_limits()) {
  try {
    parse_ring_spec(text, lim);
  } catch (const Error& e) {
    CHECK(e.code() == code);
    return e.what();
  }
  FAIL("expected '", text, "' to be rejected");
  return {};
}

bool mentions(const std::string& msg, const std::string& needle) {
  return msg.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("quadratic extension spec parses to a validated graded ring") {
  RingSpec s = parse_ring_spec(kQuadExt);
  CHECK(s.name == "z18i");
  CHECK(s.ring->ring().size() == 324);
  CHECK(s.ring->validate().ok());
  CHECK(s.group.label_count() == 2);

  REQUIRE(s.degrees.size() == 2);
  CHECK(s.degrees[0] == std::pair<std::string, uint32_t>{"1", 0});
  CHECK(s.degrees[1] == std::pair<std::string, uint32_t>{"X", 1});

  const GradedIdeal* q2 = s.find_ideal("q2");
  REQUIRE(q2 != nullptr);
  CHECK(q2->proper());
  CHECK(q2->size() == 4);
  CHECK(q2->contains(s.ring->ring().index_of(s.ring->ring().parse("9"))));
  CHECK(s.find_ideal("q9") == nullptr);

  REQUIRE(s.phis.size() == 5);
  CHECK(s.phis[0].show() == "empty");
  CHECK(s.phis[1].show() == "zero");
  CHECK(s.phis[2].show() == "power:2");
  CHECK(s.phis[3].show() == "power:3");
  CHECK(s.phis[4].show() == "omega");
}

TEST_CASE("trivially graded residue ring parses") {
  RingSpec s = parse_ring_spec(R"({
    "name": "zmod6",
    "ring": {"kind": "zmod", "modulus": 6},
    "grading": {"group": "trivial", "degrees": {"1": 0}},
    "phis": ["identity"]
  })");
  CHECK(s.ring->ring().size() == 6);
  CHECK(s.ideals.empty());
  REQUIRE(s.phis.size() == 1);
  CHECK(s.phis[0].show() == "identity");
}

TEST_CASE("grading mismatch reports the violating product pair") {
  std::string text = replaced(kQuadExt, "cyclic:2", "cyclic:3");
  std::string msg = rejects(Err::ValidationError, text);
  CHECK(mentions(msg, "(X, X)"));
}

TEST_CASE("malformed document yields a positioned diagnostic") {
  std::string msg = rejects(Err::ParseError, "{\n  \"name\": ,\n}");
  CHECK(mentions(msg, "line 2"));
  CHECK(mentions(msg, "column"));

  CHECK_THROWS_AS(load_ring_spec("/no/such/spec.json"), Error);
}

TEST_CASE("structural defects name the offending path") {
  auto quad = [&](const std::string& from, const std::string& to) {
    return replaced(kQuadExt, from, to);
  };

  CHECK(mentions(rejects(Err::ParseError, R"({"ring": {"kind": "zmod", "modulus": 6}})"),
                 "missing field 'name'"));
  CHECK(mentions(rejects(Err::ParseError, quad("\"kind\": \"poly\"", "\"kind\": \"matrix\"")),
                 "unknown kind 'matrix'"));
  CHECK(mentions(rejects(Err::ParseError, quad("\"modulus\": 18", "\"modulus\": 1")),
                 "ring.base.modulus"));
  CHECK(mentions(rejects(Err::ParseError, quad("\"name\"", "\"label\"")),
                 "unknown field 'label'"));
  CHECK(mentions(rejects(Err::ParseError, quad("\"X\": 1", "\"Y\": 1")),
                 "'Y' is not a basis monomial"));
  CHECK(mentions(rejects(Err::ParseError, quad(", \"X\": 1", "")),
                 "missing a degree for basis monomial 'X'"));
  CHECK(mentions(rejects(Err::ParseError, quad("\"X\": 1", "\"X\": 7")),
                 "degree label 7 is outside the group"));
  CHECK(mentions(rejects(Err::ParseError, quad("cyclic:2", "dihedral:6")),
                 "unknown group 'dihedral:6'"));
  CHECK(mentions(rejects(Err::ParseError, quad("[[1], [0]]", "[[19], [0]]")),
                 "coordinate 19 exceeds modulus 18"));
  CHECK(mentions(rejects(Err::ParseError, quad("[\"9\"]", "[\"1 + Y\"]")),
                 "ideals['q2'][0]"));

  std::string with_phis = replaced(kQuadExt, "\"ideals\"",
                                   "\"phis\": [\"square\"], \"ideals\"");
  CHECK(mentions(rejects(Err::ParseError, with_phis), "unknown reducer 'square'"));
}

TEST_CASE("limits and semantic defects surface as validation errors") {
  Limits lim;
  lim.max_ring_size = 100;
  rejects(Err::ValidationError, kQuadExt, lim);

  std::string text = replaced(kQuadExt, "[\"9\"]", "[\"1 + X\"]");
  std::string msg = rejects(Err::ValidationError, text);
  CHECK(mentions(msg, "not homogeneous"));
}

TEST_CASE("serialization is canonical and round-trips") {
  RingSpec s = parse_ring_spec(kQuadExt);
  auto first = serialize_ring_spec(s);
  CHECK(first["phis"].size() == 5);  // defaults become explicit
  RingSpec again = parse_ring_spec(first.dump());
  CHECK(serialize_ring_spec(again).dump() == first.dump());

  // a monic modulus with zero tail is the same ring as a truncation
  RingSpec t = parse_ring_spec(R"({
    "name": "dual",
    "ring": {"kind": "poly", "base": {"kind": "zmod", "modulus": 4}, "lower": [[0], [0]]},
    "grading": {"group": "bounded_integer:1", "degrees": {"1": 0, "X": 1}}
  })");
  auto canon = serialize_ring_spec(t);
  CHECK(canon["ring"]["kind"] == "truncated");
  CHECK(canon["ring"]["degree"] == 2);
}

TEST_CASE("shipped spec files load and round-trip") {
  for (const std::string name :
       {"z18i", "z12i", "zmod6", "z50x", "boolean-z2p4"}) {
    CAPTURE(name);
    RingSpec s = load_ring_spec(GRIL_SOURCE_DIR "/specs/" + name + ".json");
    CHECK(s.name == name);
    CHECK(s.ring->validate().ok());
    CHECK(!s.ideals.empty());
    auto one = serialize_ring_spec(s);
    auto two = serialize_ring_spec(parse_ring_spec(one.dump()));
    CHECK(one.dump() == two.dump());
  }

  RingSpec b = load_ring_spec(GRIL_SOURCE_DIR "/specs/boolean-z2p4.json");
  REQUIRE(b.ideal_gens.size() == 1);
  REQUIRE(b.ideal_gens[0].second.size() == 1);
  CHECK(b.ideal_gens[0].second[0] == "(1, 0, 0, 0)");
}
