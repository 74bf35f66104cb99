#include "gril/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>

#include <json.hpp>

#include "gril/classify.hpp"
#include "gril/fixtures.hpp"
#include "gril/ringspec.hpp"
#include "gril/theorems.hpp"

namespace gril {
namespace {

using nlohmann::ordered_json;

constexpr const char* kUsage = R"(usage: gril <command> [flags]

commands:
  validate  --spec <file>            check the grading law of a ring spec
  ideals    --spec <file>            enumerate its graded ideals
  classify  --spec <file> --ideal <name> --predicate <id>
            [--phi <selector>] [--degree <g>]
                                     decide one ideal predicate
  triples   --spec <file> --ideal <name> --phi <selector> --degree <g>
                                     list the boundary triple zeros
  verify    [--check <id>] [--fixtures <names>]
                                     run the verification suite on the
                                     built-in catalog
  fixtures  [--list]                 describe the built-in catalog
  help                               print this text

flags:
  --format json|table                report style (default table)
  --fixtures <names>                 comma-separated catalog names

environment:
  GRIL_MAX_RING_SIZE                 overrides the ring size bound when
                                     building --spec files

exit codes: 0 all verdicts pass or match a recorded counterexample,
            1 a verdict is FAIL or a check records an unexpected failure,
            2 unusable input (bad flags, bad spec file, unknown names)
)";

[[noreturn]] void bad_usage(const std::string& why) {
  throw Error(Err::ParseError, why + " (try 'gril help')");
}

struct Invocation {
  std::string command;
  std::map<std::string, std::string> flags;

  bool has(const std::string& name) const { return flags.count(name) != 0; }
  const std::string& get(const std::string& name) const { return flags.at(name); }
  bool json = false;
};

Invocation parse_args(const std::vector<std::string>& args) {
  static const std::set<std::string> value_free = {"list"};
  Invocation inv;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) == 0) {
      std::string name = tok.substr(2);
      std::string value;
      if (auto eq = name.find('='); eq != std::string::npos) {
        value = name.substr(eq + 1);
        name = name.substr(0, eq);
      } else if (value_free.count(name)) {
        value = "yes";
      } else {
        if (i + 1 >= args.size()) bad_usage("flag --" + name + " needs a value");
        value = args[++i];
      }
      if (!inv.flags.emplace(name, value).second) bad_usage("flag --" + name + " given twice");
    } else if (inv.command.empty()) {
      inv.command = tok;
    } else {
      bad_usage("unexpected argument '" + tok + "'");
    }
  }
  std::string fmt = inv.has("format") ? inv.get("format") : "table";
  if (fmt != "table" && fmt != "json") bad_usage("--format must be json or table");
  inv.json = fmt == "json";
  return inv;
}

void allow_flags(const Invocation& inv, std::initializer_list<const char*> allowed) {
  for (const auto& [name, value] : inv.flags) {
    bool ok = name == "format";
    for (const char* a : allowed) ok = ok || name == a;
    if (!ok) bad_usage("unknown flag --" + name + " for '" + inv.command + "'");
  }
}

const std::string& require_flag(const Invocation& inv, const std::string& name) {
  if (!inv.has(name)) bad_usage("'" + inv.command + "' needs --" + name);
  return inv.get(name);
}

uint64_t parse_number(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 18 ||
      text.find_first_not_of("0123456789") != std::string::npos)
    bad_usage(what + " must be a nonnegative integer, got '" + text + "'");
  return std::stoull(text);
}

Limits env_limits() {
  Limits lim;
  if (const char* s = std::getenv("GRIL_MAX_RING_SIZE"))
    lim.max_ring_size = parse_number(s, "GRIL_MAX_RING_SIZE");
  return lim;
}

// Error::what() already carries the "<code>: " prefix; drop it where the
// code is reported through its own channel.
std::string strip_code_prefix(const Error& e) {
  std::string msg = e.what();
  std::string prefix = std::string(err_name(e.code())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  return msg;
}

std::string error_label(Err code) {
  std::string label = err_name(code);
  for (char& c : label) c = c == '-' ? '_' : static_cast<char>(std::toupper(c));
  return label;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string witness_text(const Verdict& v) {
  std::vector<std::string> parts;
  for (const WitnessPart& w : v.witness) parts.push_back(w.role + " = " + w.shown);
  return join(parts);
}

ordered_json witness_json(const Verdict& v) {
  ordered_json out = ordered_json::array();
  for (const WitnessPart& w : v.witness)
    out.push_back(ordered_json{{"role", w.role}, {"shown", w.shown}});
  return out;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

RingSpec load_spec(const Invocation& inv) {
  return load_ring_spec(require_flag(inv, "spec"), env_limits());
}

int cmd_validate(const Invocation& inv, std::ostream& out) {
  const std::string& path = require_flag(inv, "spec");
  try {
    RingSpec s = load_ring_spec(path, env_limits());
    if (inv.json) {
      ordered_json group = serialize_ring_spec(s)["grading"]["group"];
      emit(out, ordered_json{{"command", "validate"},
                             {"spec", s.name},
                             {"elements", s.ring->ring().size()},
                             {"group", group},
                             {"verdict", "PASS"}});
    } else {
      out << "PASS  " << s.name << ": " << s.ring->describe() << ", "
          << s.ring->ring().size() << " elements\n";
    }
    return 0;
  } catch (const Error& e) {
    if (e.code() != Err::ValidationError) throw;
    std::string detail = strip_code_prefix(e);
    if (inv.json)
      emit(out, ordered_json{{"command", "validate"},
                             {"spec", path},
                             {"verdict", "FAIL"},
                             {"detail", detail}});
    else
      out << "FAIL  " << path << ": " << detail << "\n";
    return 1;
  }
}

int cmd_ideals(const Invocation& inv, std::ostream& out) {
  RingSpec s = load_spec(inv);
  const std::vector<GradedIdeal>& all = enumerate_graded_ideals(s.ring);

  auto names_of = [&](const GradedIdeal& ideal) {
    std::vector<std::string> names;
    for (const auto& [n, named] : s.ideals)
      if (named.same_elements(ideal)) names.push_back(n);
    return names;
  };

  if (inv.json) {
    ordered_json rows = ordered_json::array();
    for (const GradedIdeal& ideal : all) {
      ordered_json row{{"show", ideal.show()},
                       {"size", ideal.size()},
                       {"proper", ideal.proper()}};
      std::vector<std::string> names = names_of(ideal);
      if (!names.empty()) row["names"] = names;
      rows.push_back(std::move(row));
    }
    emit(out, ordered_json{{"command", "ideals"},
                           {"spec", s.name},
                           {"count", all.size()},
                           {"ideals", std::move(rows)}});
  } else {
    out << s.name << ": " << all.size() << " graded ideals\n";
    for (const GradedIdeal& ideal : all) {
      out << "  " << std::left << std::setw(12) << ("size=" + std::to_string(ideal.size()))
          << ideal.show();
      if (!ideal.proper()) out << "  (whole ring)";
      std::vector<std::string> names = names_of(ideal);
      if (!names.empty()) out << "  = " << join(names);
      out << "\n";
    }
  }
  return 0;
}

const GradedIdeal& pick_ideal(const Invocation& inv, const RingSpec& s) {
  const std::string& iname = require_flag(inv, "ideal");
  const GradedIdeal* ideal = s.find_ideal(iname);
  if (!ideal) {
    std::vector<std::string> known;
    for (const auto& [n, unused] : s.ideals) known.push_back(n);
    bad_usage("no ideal named '" + iname + "' in " + s.name +
              (known.empty() ? " (it defines none)" : " (it defines: " + join(known) + ")"));
  }
  return *ideal;
}

PhiMap parse_phi_flag(const std::string& sel) {
  std::optional<PhiMap> phi = PhiMap::parse(sel);
  if (!phi)
    bad_usage("unknown reducer '" + sel + "' (expected empty, zero, identity, power:<n> or omega)");
  return *phi;
}

int cmd_classify(const Invocation& inv, std::ostream& out) {
  RingSpec s = load_spec(inv);
  const GradedIdeal& ideal = pick_ideal(inv, s);
  const std::string& iname = require_flag(inv, "ideal");

  std::optional<PhiMap> phi;
  if (inv.has("phi")) phi = parse_phi_flag(inv.get("phi"));
  std::optional<uint32_t> degree;
  if (inv.has("degree"))
    degree = static_cast<uint32_t>(parse_number(inv.get("degree"), "--degree"));

  const std::string& pname = require_flag(inv, "predicate");
  std::optional<PredicateId> pred = PredicateId::parse(pname, phi, degree);
  if (!pred) {
    std::optional<PredicateId> probe = PredicateId::parse(pname, PhiMap::zero_map(), 0);
    if (!probe)
      bad_usage("unknown predicate '" + pname + "' (one of: " + join(PredicateId::names()) + ")");
    std::vector<std::string> need;
    if (probe->needs_phi() && !phi) need.push_back("--phi");
    if (probe->needs_degree() && !degree) need.push_back("--degree");
    bad_usage("predicate '" + pname + "' needs " + join(need, " and "));
  }

  Verdict v = classify_ideal(ideal, *pred);
  if (inv.json) {
    ordered_json row{{"command", "classify"},
                     {"spec", s.name},
                     {"ideal", iname},
                     {"predicate", pred->show()},
                     {"verdict", outcome_name(v.outcome)},
                     {"witness", witness_json(v)}};
    if (!v.notes.empty()) row["notes"] = v.notes;
    emit(out, row);
  } else {
    switch (v.outcome) {
      case Outcome::Pass: out << "PASS  " << iname << " satisfies " << pred->show() << "\n"; break;
      case Outcome::Vacuous:
        out << "PASS  " << iname << " satisfies " << pred->show() << " (vacuously)\n";
        break;
      case Outcome::Fail:
        out << "FAIL  " << iname << " violates " << pred->show() << ": " << witness_text(v)
            << "\n";
        break;
    }
    if (!v.notes.empty()) out << "      " << v.notes << "\n";
  }
  return v.outcome == Outcome::Fail ? 1 : 0;
}

int cmd_triples(const Invocation& inv, std::ostream& out) {
  RingSpec s = load_spec(inv);
  const GradedIdeal& ideal = pick_ideal(inv, s);
  PhiMap phi = parse_phi_flag(require_flag(inv, "phi"));
  auto degree = static_cast<uint32_t>(parse_number(require_flag(inv, "degree"), "--degree"));

  std::vector<TripleZero> found = find_triple_zeros(ideal, degree, phi);
  auto shown = [&](uint64_t x) { return s.ring->show(x); };

  if (inv.json) {
    ordered_json rows = ordered_json::array();
    for (const TripleZero& t : found)
      rows.push_back(ordered_json::array({shown(t.a), shown(t.b), shown(t.c)}));
    emit(out, ordered_json{{"command", "triples"},
                           {"spec", s.name},
                           {"ideal", require_flag(inv, "ideal")},
                           {"phi", phi.show()},
                           {"degree", degree},
                           {"count", found.size()},
                           {"triples", std::move(rows)}});
  } else {
    out << require_flag(inv, "ideal") << " @ degree " << degree << " under " << phi.show()
        << ": " << found.size() << " boundary triples\n";
    for (const TripleZero& t : found)
      out << "  (" << shown(t.a) << ", " << shown(t.b) << ", " << shown(t.c) << ")\n";
  }
  return 0;
}

int cmd_verify(const Invocation& inv, std::ostream& out) {
  std::vector<const Fixture*> fixtures;
  if (inv.has("fixtures")) {
    std::string list = inv.get("fixtures");
    size_t start = 0;
    while (start <= list.size()) {
      size_t comma = list.find(',', start);
      std::string name = list.substr(start, comma == std::string::npos ? comma : comma - start);
      const Fixture* f = find_fixture(name);
      if (!f) bad_usage("no fixture named '" + name + "' (see 'gril fixtures')");
      fixtures.push_back(f);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    fixtures = all_fixture_pointers();
  }

  std::vector<CheckReport> reports =
      inv.has("check") ? run_check(inv.get("check"), fixtures) : run_all(fixtures);

  if (inv.json) {
    emit(out, report_json(reports));
  } else {
    uint64_t instances = 0, passed = 0, vacuous = 0, expected = 0, failures = 0;
    for (const CheckReport& r : reports) {
      instances += r.instances;
      passed += r.passed;
      vacuous += r.vacuous;
      expected += r.expected_counterexamples;
      failures += r.failures.size();
      out << (r.ok() ? "ok    " : "FAIL  ") << std::left << std::setw(19) << r.check_id
          << std::setw(24) << r.fixture << " instances=" << r.instances
          << " passed=" << r.passed;
      if (r.vacuous) out << " vacuous=" << r.vacuous;
      if (r.expected_counterexamples) out << " expected=" << r.expected_counterexamples;
      out << "\n";
      for (const CheckFailure& f : r.failures)
        out << "        " << f.instance << ": " << f.witness << "\n";
      for (const std::string& n : r.notes) out << "        note: " << n << "\n";
    }
    out << reports.size() << " records: " << instances << " instances, " << passed
        << " passed, " << vacuous << " vacuous, " << expected
        << " expected counterexamples, " << failures << " failures\n";
  }
  return all_ok(reports) ? 0 : 1;
}

int cmd_fixtures(const Invocation& inv, std::ostream& out) {
  const std::vector<Fixture>& cat = fixture_catalog();
  if (inv.json) {
    ordered_json rows = ordered_json::array();
    for (const Fixture& f : cat) {
      std::vector<std::string> ideal_names;
      for (const auto& [n, unused] : f.ideals) ideal_names.push_back(n);
      ordered_json phis = ordered_json::array();
      for (const PhiMap& p : f.phis) phis.push_back(p.show());
      rows.push_back(ordered_json{{"name", f.name},
                                  {"elements", f.ring->ring().size()},
                                  {"description", f.ring->describe()},
                                  {"ideals", ideal_names},
                                  {"phis", std::move(phis)},
                                  {"notes", f.notes}});
    }
    emit(out, ordered_json{{"command", "fixtures"},
                           {"count", cat.size()},
                           {"fixtures", std::move(rows)}});
  } else {
    out << cat.size() << " fixtures\n";
    for (const Fixture& f : cat) {
      std::vector<std::string> ideal_names;
      for (const auto& [n, unused] : f.ideals) ideal_names.push_back(n);
      out << "  " << std::left << std::setw(16) << f.name << f.ring->describe() << ", "
          << f.ring->ring().size() << " elements";
      if (!ideal_names.empty()) out << ", ideals: " << join(ideal_names);
      out << "\n";
      if (!f.notes.empty()) out << "      " << f.notes << "\n";
    }
  }
  return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty()) bad_usage("no command given");
  Invocation inv = parse_args(args);
  if (inv.command == "help" || inv.command == "--help" || inv.command == "-h" ||
      (inv.command.empty() && inv.flags.count("help"))) {
    out << kUsage;
    return 0;
  }
  if (inv.command == "validate") {
    allow_flags(inv, {"spec"});
    return cmd_validate(inv, out);
  }
  if (inv.command == "ideals") {
    allow_flags(inv, {"spec"});
    return cmd_ideals(inv, out);
  }
  if (inv.command == "classify") {
    allow_flags(inv, {"spec", "ideal", "predicate", "phi", "degree"});
    return cmd_classify(inv, out);
  }
  if (inv.command == "triples") {
    allow_flags(inv, {"spec", "ideal", "phi", "degree"});
    return cmd_triples(inv, out);
  }
  if (inv.command == "verify") {
    allow_flags(inv, {"check", "fixtures"});
    return cmd_verify(inv, out);
  }
  if (inv.command == "fixtures") {
    allow_flags(inv, {"list"});
    return cmd_fixtures(inv, out);
  }
  bad_usage(inv.command.empty() ? "no command given" : "unknown command '" + inv.command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const Error& e) {
    err << error_label(e.code()) << ": " << strip_code_prefix(e) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "ERROR: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gril
