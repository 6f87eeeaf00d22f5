#include "ordrev/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ordrev/decide.hpp"
#include "ordrev/parser.hpp"
#include "ordrev/report.hpp"
#include "ordrev/witness.hpp"

namespace ordrev {

namespace {

using nlohmann::json;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string describeParseError(const ParseError& e) {
  std::ostringstream os;
  os << "parse error at bytes " << e.span.begin << ".." << e.span.end << ": "
     << e.what();
  if (!e.expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < e.expected.size(); ++i)
      os << (i ? ", " : "") << e.expected[i];
    os << ")";
  }
  return os.str();
}

int cmdDecide(const std::string& path, bool asJson, std::size_t depth,
              bool exitVerdict, std::ostream& out, std::ostream& err) {
  std::string text;
  FamilyPresentation family;
  try {
    text = readFile(path);
    family = parse(text);
  } catch (const ParseError& e) {
    err << describeParseError(e) << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    auto started = std::chrono::steady_clock::now();
    Verdict verdict = decide(family, {true, depth});
    crossCheckVerdict(family, verdict);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - started)
                    .count();
    Report report = makeReport(std::move(verdict), ms);
    if (asJson)
      out << toJson(report).dump(2) << "\n";
    else
      out << humanText(report);
    if (exitVerdict && !report.verdict.reversible) return 3;
    return 0;
  } catch (const InternalInvariantError& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmdOracle(const std::string& path, std::uint64_t maxTarget,
              std::uint64_t maxCoeff, bool asJson, std::ostream& out,
              std::ostream& err) {
  FamilyPresentation family;
  try {
    family = normalize(parse(readFile(path)));
  } catch (const ParseError& e) {
    err << describeParseError(e) << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  FamilyStats stats = split(family);
  json searches = json::array();
  bool any = false;
  for (Orientation o : {Orientation::W, Orientation::WStar}) {
    for (const auto& gamma : stats.limitParts) {
      NatMultiset tails = tailMultiset(family, gamma, o);
      if (tails.empty()) continue;
      auto plan = boundedOracleSearch(tails, {maxTarget, maxCoeff});
      json entry{{"orientation", toText(o)},
                 {"limitPart", toText(gamma)},
                 {"plan", plan ? witnessToJson(*plan) : json(nullptr)}};
      searches.push_back(entry);
      if (plan) any = true;
      if (!asJson) {
        out << "limit part " << toText(gamma) << ", orientation " << toText(o)
            << ": "
            << (plan ? "plan " + witnessToJson(*plan).dump() : std::string("none"))
            << "\n";
      }
    }
  }
  if (asJson)
    out << json{{"bounds", {{"maxTarget", maxTarget}, {"maxCoeff", maxCoeff}}},
                {"planFound", any},
                {"searches", searches}}
               .dump(2)
        << "\n";
  else
    out << (any ? "witness plan found" : "no witness plan within bounds") << "\n";
  return 0;
}

struct SelfTestCase {
  std::string name;
  std::string source;
  bool reversible;
  Clause clause;
};

int cmdSelftest(std::ostream& out, std::ostream& err) {
  const std::vector<SelfTestCase> cases = {
      {"worked-example",
       "wo(1 + 1*n) for n in nat;\n"
       "wo(w) x 14;\n"
       "wo(w + 4) x aleph 1;\n"
       "wo(w + 6) x aleph 3;\n"
       "wo(w + 1 + 2*n) for n in nat;",
       true, Clause::II},
      {"singletons-under-w", "wo(1) x inf; wo(w);", false, Clause::A},
      {"repeated-w2-w4", "wo(w + 2) x inf; wo(w + 4) x inf;", false, Clause::B},
      {"independent-2-5", "wo(2) x inf; wo(5) x inf;", true, Clause::II},
      {"independent-2-5-with-progression",
       "wo(2) x inf; wo(5) x inf; wo(1 + 3*n) for n in nat;", false, Clause::B},
      {"independent-4-10-odd-progression",
       "wo(4) x inf; wo(10) x inf; wo(1 + 2*n) for n in nat;", true, Clause::II},
      {"independent-4-10-even-progression",
       "wo(4) x inf; wo(10) x inf; wo(2 + 2*n) for n in nat;", false, Clause::B},
      {"tails-above-w", "wo(w + 1 + 1*n) for n in nat; wo(w);", true, Clause::I},
      {"mixed-orientations", "wo(w) x 3; rwo(w) x 3;", true, Clause::MixedSplit},
  };

  bool allOk = true;
  for (const auto& c : cases) {
    bool ok = false;
    std::string detail;
    try {
      FamilyPresentation family = parse(c.source);
      Verdict v = decide(family);
      ok = v.reversible == c.reversible && v.clause == c.clause;
      if (!ok)
        detail = "got " + std::string(v.reversible ? "reversible" : "non-reversible") +
                 "/" + toText(v.clause);
      if (ok && !v.reversible) {
        VerifyResult check = verifyWitness(normalize(family), *v.witness);
        if (!check.ok) {
          ok = false;
          detail = "witness rejected: " + check.reason;
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    out << (ok ? "PASS" : "FAIL") << " " << c.name;
    if (!detail.empty()) out << " (" << detail << ")";
    out << "\n";
    allOk = allOk && ok;
  }

  // The closing cardinal contrast: reversible as ordinals, not as cardinals.
  {
    bool ok = false;
    try {
      FamilyPresentation family =
          parse("wo(w + 1 + 1*n) for n in nat; wo(w);");
      ok = decide(family).reversible &&
           !decideCardinalReversible(toCardinals(normalize(family))).reversible;
    } catch (const std::exception& e) {
      err << "selftest error: " << e.what() << "\n";
    }
    out << (ok ? "PASS" : "FAIL") << " ordinal-vs-cardinal-sequence\n";
    allOk = allOk && ok;
  }
  return allOk ? 0 : 1;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"reversibility decision engine for unions of oriented well orders"};
  app.require_subcommand(1);

  std::string decideFile;
  bool decideJson = false;
  std::size_t witnessDepth = kDefaultWitnessDepth;
  bool exitVerdict = false;
  auto* decideCmd = app.add_subcommand("decide", "decide a family file");
  decideCmd->add_option("file", decideFile, "family description file")->required();
  decideCmd->add_flag("--json", decideJson, "machine-readable report");
  decideCmd->add_option("--witness-depth", witnessDepth,
                        "instantiation depth for witness verification")
      ->check(CLI::Range(std::size_t{32}, std::size_t{1} << 20));
  decideCmd->add_flag("--exit-verdict", exitVerdict,
                      "exit 3 when non-reversible");

  std::string oracleFile;
  std::uint64_t maxTarget = 0, maxCoeff = 0;
  bool oracleJson = false;
  auto* oracleCmd =
      app.add_subcommand("oracle", "bounded witness search on the tail multisets");
  oracleCmd->add_option("file", oracleFile, "family description file")->required();
  oracleCmd->add_option("--max-target", maxTarget, "largest merge target")
      ->required();
  oracleCmd->add_option("--max-coeff", maxCoeff, "largest coefficient/index")
      ->required();
  oracleCmd->add_flag("--json", oracleJson, "machine-readable output");

  auto* selftestCmd =
      app.add_subcommand("selftest", "run the embedded golden corpus");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (decideCmd->parsed())
    return cmdDecide(decideFile, decideJson, witnessDepth, exitVerdict, out, err);
  if (oracleCmd->parsed())
    return cmdOracle(oracleFile, maxTarget, maxCoeff, oracleJson, out, err);
  if (selftestCmd->parsed()) return cmdSelftest(out, err);
  return 2;
}

}  // namespace ordrev
