#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gril/cli.hpp"

using namespace gril;
using nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool mentions(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::string spec_path(const std::string& name) {
  return std::string(GRIL_SOURCE_DIR "/specs/") + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::ofstream f(name, std::ios::binary | std::ios::trunc);
  f << text;
  return name;
}

// Interprets the subset of JSON Schema the shipped report schema uses, so
// reports are checked against the schema file itself rather than against a
// hand-copied list of fields.
bool schema_ok(const ordered_json& schema, const ordered_json& value, std::string& why) {
  if (auto it = schema.find("type"); it != schema.end()) {
    const std::string t = *it;
    bool match = (t == "array" && value.is_array()) || (t == "object" && value.is_object()) ||
                 (t == "string" && value.is_string()) ||
                 (t == "integer" && value.is_number_integer()) ||
                 (t == "boolean" && value.is_boolean());
    if (!match) {
      why = "expected " + t + ", got " + value.dump();
      return false;
    }
  }
  if (auto it = schema.find("minimum"); it != schema.end() && value.is_number_integer())
    if (value.get<int64_t>() < it->get<int64_t>()) {
      why = value.dump() + " below minimum";
      return false;
    }
  if (auto it = schema.find("minLength"); it != schema.end() && value.is_string())
    if (value.get<std::string>().size() < it->get<size_t>()) {
      why = value.dump() + " shorter than minLength";
      return false;
    }
  if (value.is_array()) {
    if (auto it = schema.find("items"); it != schema.end())
      for (const auto& elem : value)
        if (!schema_ok(*it, elem, why)) return false;
  }
  if (value.is_object()) {
    if (auto it = schema.find("required"); it != schema.end())
      for (const auto& key : *it)
        if (!value.contains(key.get<std::string>())) {
          why = "missing required field " + key.dump();
          return false;
        }
    auto props = schema.find("properties");
    if (auto it = schema.find("additionalProperties");
        it != schema.end() && *it == false && props != schema.end())
      for (const auto& [key, unused] : value.items())
        if (!props->contains(key)) {
          why = "unexpected field '" + key + "'";
          return false;
        }
    if (props != schema.end())
      for (const auto& [key, sub] : props->items())
        if (value.contains(key) && !schema_ok(sub, value.at(key), why)) return false;
  }
  return true;
}

ordered_json report_schema() {
  std::ifstream f(GRIL_SOURCE_DIR "/data/report.schema.json");
  REQUIRE(f.good());
  return ordered_json::parse(f);
}

}  // namespace

TEST_CASE("usage, help and flag errors") {
  CHECK(run({}).code == 2);
  CHECK(mentions(run({}).err, "no command given"));

  RunResult help = run({"help"});
  CHECK(help.code == 0);
  CHECK(mentions(help.out, "usage: gril"));

  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(mentions(run({"validate"}).err, "--spec"));
  CHECK(run({"classify", "--bogus", "x"}).code == 2);
  CHECK(run({"validate", "--spec"}).code == 2);
  CHECK(run({"validate", "--spec", "a", "--spec", "b"}).code == 2);
  CHECK(run({"verify", "--format", "yaml"}).code == 2);
}

TEST_CASE("validate renders both verdicts and positions input errors") {
  RunResult ok = run({"validate", "--spec", spec_path("z18i.json")});
  CHECK(ok.code == 0);
  CHECK(mentions(ok.out, "PASS"));
  CHECK(mentions(ok.out, "324"));

  RunResult js = run({"validate", "--spec", spec_path("z18i.json"), "--format", "json"});
  CHECK(js.code == 0);
  ordered_json j = ordered_json::parse(js.out);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["elements"] == 324);
  CHECK(j["group"] == "cyclic:2");

  // same ring over the wrong group: the grading law breaks at (X, X)
  std::ifstream src(spec_path("z18i.json"));
  std::stringstream buf;
  buf << src.rdbuf();
  std::string altered = buf.str();
  altered.replace(altered.find("cyclic:2"), 8, "cyclic:3");
  std::string bad = write_temp("cli_bad_group.json", altered);

  RunResult fail = run({"validate", "--spec", bad});
  CHECK(fail.code == 1);
  CHECK(mentions(fail.out, "(X, X)"));
  RunResult fail_js = run({"validate", "--spec", bad, "--format", "json"});
  CHECK(fail_js.code == 1);
  CHECK(ordered_json::parse(fail_js.out)["verdict"] == "FAIL");

  RunResult gone = run({"validate", "--spec", "no_such_file.json"});
  CHECK(gone.code == 2);
  CHECK(mentions(gone.err, "PARSE_ERROR"));

  std::string mangled = write_temp("cli_mangled.json", "{\n  \"name\": ,\n}");
  RunResult syn = run({"validate", "--spec", mangled});
  CHECK(syn.code == 2);
  CHECK(mentions(syn.err, "line 2"));
}

TEST_CASE("ideals enumerates with names attached") {
  RunResult r = run({"ideals", "--spec", spec_path("z18i.json"), "--format", "json"});
  CHECK(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["count"] == 6);
  bool named = false;
  for (const auto& row : j["ideals"])
    if (row.contains("names") && row["names"] == ordered_json::array({"q2"})) {
      named = true;
      CHECK(row["size"] == 4);
      CHECK(row["proper"] == true);
    }
  CHECK(named);

  RunResult t = run({"ideals", "--spec", spec_path("z18i.json")});
  CHECK(t.code == 0);
  CHECK(mentions(t.out, "6 graded ideals"));
  CHECK(mentions(t.out, "= q2"));
  CHECK(mentions(t.out, "(whole ring)"));
}

TEST_CASE("classify decides predicates with witnesses") {
  std::string spec = spec_path("z18i.json");

  RunResult pass = run({"classify", "--spec", spec, "--ideal", "q2", "--predicate",
                        "weakly-1-absorbing"});
  CHECK(pass.code == 0);
  CHECK(mentions(pass.out, "PASS"));

  RunResult fail = run({"classify", "--spec", spec, "--ideal", "q2", "--predicate",
                        "1-absorbing", "--format", "json"});
  CHECK(fail.code == 1);
  ordered_json j = ordered_json::parse(fail.out);
  CHECK(j["verdict"] == "FAIL");
  REQUIRE(j["witness"].size() == 3);
  CHECK(j["witness"][0]["shown"] == "2");
  CHECK(j["witness"][1]["shown"] == "3");
  CHECK(j["witness"][2]["shown"] == "3");

  RunResult vac = run({"classify", "--spec", spec, "--ideal", "q2", "--predicate",
                       "phi-1-absorbing", "--phi", "omega", "--format", "json"});
  CHECK(vac.code == 0);
  CHECK(ordered_json::parse(vac.out)["verdict"] == "VACUOUS");

  RunResult unknown = run({"classify", "--spec", spec, "--ideal", "q2", "--predicate", "huge"});
  CHECK(unknown.code == 2);
  CHECK(mentions(unknown.err, "weakly-prime"));

  RunResult missing_phi =
      run({"classify", "--spec", spec, "--ideal", "q2", "--predicate", "phi-prime"});
  CHECK(missing_phi.code == 2);
  CHECK(mentions(missing_phi.err, "--phi"));

  RunResult missing_both =
      run({"classify", "--spec", spec, "--ideal", "q2", "--predicate", "degree-phi-prime"});
  CHECK(missing_both.code == 2);
  CHECK(mentions(missing_both.err, "--phi and --degree"));

  RunResult no_ideal =
      run({"classify", "--spec", spec, "--ideal", "zz", "--predicate", "prime"});
  CHECK(no_ideal.code == 2);
  CHECK(mentions(no_ideal.err, "it defines: q2"));

  RunResult bad_phi = run({"classify", "--spec", spec, "--ideal", "q2", "--predicate",
                           "phi-prime", "--phi", "square"});
  CHECK(bad_phi.code == 2);
  CHECK(mentions(bad_phi.err, "unknown reducer"));
}

TEST_CASE("triples lists the boundary triple zeros") {
  RunResult r = run({"triples", "--spec", spec_path("z18i.json"), "--ideal", "q2", "--phi",
                     "zero", "--degree", "0", "--format", "json"});
  CHECK(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["count"].get<uint64_t>() > 0);
  CHECK(j["count"] == j["triples"].size());
  bool has = false;
  for (const auto& t : j["triples"]) has = has || t == ordered_json::array({"2", "3", "3"});
  CHECK(has);

  RunResult t = run({"triples", "--spec", spec_path("z18i.json"), "--ideal", "q2", "--phi",
                     "zero", "--degree", "0"});
  CHECK(t.code == 0);
  CHECK(mentions(t.out, "(2, 3, 3)"));

  CHECK(run({"triples", "--spec", spec_path("z18i.json"), "--ideal", "q2", "--phi", "zero"})
            .code == 2);
}

TEST_CASE("verify emits schema-conforming deterministic reports") {
  RunResult r = run({"verify", "--check", "Ex2", "--fixtures", "z18i-q9", "--format", "json"});
  CHECK(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["check_id"] == "Ex2");
  CHECK(j[0]["fixture"] == "z18i-q9");
  CHECK(j[0]["instances"] == 3);
  CHECK(j[0]["expected_counterexamples"] == 2);

  std::string why;
  ordered_json schema = report_schema();
  CHECK_MESSAGE(schema_ok(schema, j, why), why);

  // the checker itself notices a broken record
  ordered_json broken = j;
  broken[0].erase("fixture");
  CHECK(!schema_ok(schema, broken, why));
  broken = j;
  broken[0]["extra"] = 1;
  CHECK(!schema_ok(schema, broken, why));

  RunResult again =
      run({"verify", "--check", "Ex2", "--fixtures", "z18i-q9", "--format", "json"});
  CHECK(again.out == r.out);

  RunResult table = run({"verify", "--check", "Ex2", "--fixtures", "z18i-q9"});
  CHECK(table.code == 0);
  CHECK(mentions(table.out, "ok    Ex2"));
  CHECK(mentions(table.out, "expected=2"));
  CHECK(mentions(table.out, "0 failures"));

  CHECK(run({"verify", "--check", "nope"}).code == 2);
  CHECK(mentions(run({"verify", "--check", "nope"}).err, "UNKNOWN_CHECK"));
  CHECK(run({"verify", "--fixtures", "ghost"}).code == 2);
}

TEST_CASE("fixtures describes the catalog") {
  RunResult r = run({"fixtures", "--list"});
  CHECK(r.code == 0);
  CHECK(mentions(r.out, "17 fixtures"));
  CHECK(mentions(r.out, "z50x-trunc"));

  RunResult js = run({"fixtures", "--format", "json"});
  CHECK(js.code == 0);
  ordered_json j = ordered_json::parse(js.out);
  CHECK(j["count"] == 17);
  CHECK(j["fixtures"].size() == 17);
  CHECK(j["fixtures"][0].contains("elements"));
}

TEST_CASE("ring size bound comes from the environment") {
  setenv("GRIL_MAX_RING_SIZE", "100", 1);
  CHECK(run({"validate", "--spec", spec_path("z18i.json")}).code == 1);
  RunResult classify = run({"classify", "--spec", spec_path("z18i.json"), "--ideal", "q2",
                            "--predicate", "prime"});
  CHECK(classify.code == 2);
  CHECK(mentions(classify.err, "VALIDATION_ERROR"));

  setenv("GRIL_MAX_RING_SIZE", "abc", 1);
  CHECK(run({"validate", "--spec", spec_path("z18i.json")}).code == 2);

  unsetenv("GRIL_MAX_RING_SIZE");
  CHECK(run({"validate", "--spec", spec_path("z18i.json")}).code == 0);
}
