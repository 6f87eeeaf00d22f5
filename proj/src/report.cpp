#include "ordrev/report.hpp"

#include <sstream>

#include "ordrev/decide.hpp"
#include "ordrev/parser.hpp"

namespace ordrev {

using nlohmann::json;

namespace {

std::string natFailureText(const NatFailure& f) {
  if (const auto* indep = std::get_if<IndependenceFailure>(&f)) {
    std::ostringstream os;
    os << indep->value << " decomposes over the other repeated values (";
    bool first = true;
    for (const auto& [gen, coeff] : indep->certificate.coefficients) {
      if (!first) os << " + ";
      first = false;
      os << coeff << "x" << gen;
    }
    os << ")";
    return os.str();
  }
  const auto& gcd = std::get<GcdFailure>(f);
  std::ostringstream os;
  os << "gcd " << gcd.divisor << " divides infinitely many values (progression "
     << gcd.progression.first << " + " << gcd.progression.step << "k)";
  return os.str();
}

void traceSingle(const Verdict& v, std::vector<TraceStep>& trace,
                 const std::string& prefix) {
  if (v.gammaStar)
    trace.push_back({prefix + "max-limit-part", toText(*v.gammaStar)});
  switch (v.clause) {
    case Clause::I:
      trace.push_back({prefix + "finite-to-one", "pass"});
      break;
    case Clause::II:
      trace.push_back({prefix + "finite-to-one", "fail"});
      trace.push_back({prefix + "repeated-type-scan", "pass"});
      trace.push_back({prefix + "tail-sequence", "reversible"});
      break;
    case Clause::A:
      trace.push_back({prefix + "finite-to-one", "fail"});
      trace.push_back(
          {prefix + "repeated-type-scan",
           "fail: type " + toText(v.repeatedBelow->repeatedValue) +
               " repeats below limit part of " +
               toText(v.repeatedBelow->hostValue)});
      break;
    case Clause::B:
      trace.push_back({prefix + "finite-to-one", "fail"});
      trace.push_back({prefix + "repeated-type-scan", "pass"});
      trace.push_back({prefix + "tail-sequence",
                       "fail: " + natFailureText(*v.failedTails->tailVerdict.failure)});
      break;
    default:
      break;
  }
}

std::vector<std::uint64_t> decisiveK(const Verdict& v) {
  if (v.clause == Clause::II && v.tailVerdict) return v.tailVerdict->kValues;
  if (v.clause == Clause::B && v.failedTails)
    return v.failedTails->tailVerdict.kValues;
  return {};
}

json certToJson(const SemigroupCertificate& cert) {
  json coeffs = json::object();
  for (const auto& [gen, coeff] : cert.coefficients)
    coeffs[std::to_string(gen)] = coeff;
  return json{{"target", cert.target}, {"coefficients", coeffs}};
}

SemigroupCertificate certFromJson(const json& j) {
  SemigroupCertificate cert;
  cert.target = j.at("target").get<std::uint64_t>();
  for (const auto& [key, value] : j.at("coefficients").items())
    cert.coefficients[std::stoull(key)] = value.get<std::uint64_t>();
  return cert;
}

json scopeToJson(const std::optional<PlanScope>& scope) {
  if (!scope) return nullptr;
  return json{{"orientation", scope->orientation == Orientation::W ? "w" : "w*"},
              {"limitPart", toText(scope->limitPart)}};
}

Ordinal ordinalFromText(const std::string& text) {
  FamilyPresentation p = parse("wo(" + text + ")");
  return p.entries.at(0).single().value;
}

std::optional<PlanScope> scopeFromJson(const json& j) {
  if (j.is_null()) return std::nullopt;
  PlanScope scope;
  scope.orientation =
      j.at("orientation").get<std::string>() == "w" ? Orientation::W
                                                    : Orientation::WStar;
  std::string limit = j.at("limitPart").get<std::string>();
  scope.limitPart = limit == "0" ? Ordinal{} : ordinalFromText(limit);
  return scope;
}

}  // namespace

Report makeReport(Verdict verdict, double timingMs) {
  Report report;
  report.timingMs = timingMs;
  std::vector<TraceStep>& trace = report.clauseTrace;
  trace.push_back({"normalize", "ok"});
  if (verdict.clause == Clause::MixedSplit) {
    trace.push_back({"orientation-split", "both infinite orientations present"});
    traceSingle(verdict.parts.at(0), trace, "w-part/");
    traceSingle(verdict.parts.at(1), trace, "w*-part/");
  } else {
    trace.push_back({"orientation-split",
                     verdict.orientation == Orientation::W ? "w" : "w*"});
    traceSingle(verdict, trace, "");
  }
  if (verdict.witness)
    trace.push_back({"witness", "constructed and verified"});
  report.verdict = std::move(verdict);
  return report;
}

json witnessToJson(const WitnessPlan& plan) {
  if (const auto* merge = std::get_if<MergeShiftPlan>(&plan)) {
    json parts = json::object();
    for (const auto& [gen, coeff] : merge->parts.coefficients)
      parts[std::to_string(gen)] = coeff;
    json shifts = json::object();
    for (const auto& [gen, shift] : merge->donorShifts)
      shifts[std::to_string(gen)] = shift;
    return json{{"kind", "merge-shift"},
                {"target", merge->targetValue},
                {"parts", parts},
                {"donorShifts", shifts},
                {"targetChainForwardShift", merge->targetChainForwardShift},
                {"scope", scopeToJson(merge->scope)}};
  }
  if (const auto* sparse = std::get_if<SparseChainPlan>(&plan)) {
    return json{{"kind", "sparse-chain"},
                {"g", sparse->g},
                {"source",
                 json{{"first", sparse->source.first},
                      {"step", sparse->source.step},
                      {"copies", sparse->source.copies}}},
                {"k0", sparse->k0},
                {"stride", sparse->stride},
                {"initCert", certToJson(sparse->initCert)},
                {"stepCert", certToJson(sparse->stepCert)},
                {"donorDoubling",
                 std::vector<std::uint64_t>(sparse->donorDoubling.begin(),
                                            sparse->donorDoubling.end())},
                {"scope", scopeToJson(sparse->scope)}};
  }
  const auto& shift = std::get<OrdinalShiftPlan>(plan);
  return json{{"kind", "ordinal-shift"},
              {"host", toText(shift.hostValue)},
              {"repeated", toText(shift.repeatedValue)},
              {"splitGamma", toText(shift.splitGamma)},
              {"orientation", shift.orientation == Orientation::W ? "w" : "w*"}};
}

WitnessPlan witnessFromJson(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "merge-shift") {
    MergeShiftPlan plan;
    plan.targetValue = j.at("target").get<std::uint64_t>();
    plan.parts.target = plan.targetValue;
    for (const auto& [key, value] : j.at("parts").items())
      plan.parts.coefficients[std::stoull(key)] = value.get<std::uint64_t>();
    for (const auto& [key, value] : j.at("donorShifts").items())
      plan.donorShifts[std::stoull(key)] = value.get<std::uint64_t>();
    plan.targetChainForwardShift = j.at("targetChainForwardShift").get<bool>();
    plan.scope = scopeFromJson(j.at("scope"));
    return plan;
  }
  if (kind == "sparse-chain") {
    SparseChainPlan plan;
    plan.g = j.at("g").get<std::uint64_t>();
    plan.source.first = j.at("source").at("first").get<std::uint64_t>();
    plan.source.step = j.at("source").at("step").get<std::uint64_t>();
    plan.source.copies = j.at("source").at("copies").get<std::uint64_t>();
    plan.k0 = j.at("k0").get<std::uint64_t>();
    plan.stride = j.at("stride").get<std::uint64_t>();
    plan.initCert = certFromJson(j.at("initCert"));
    plan.stepCert = certFromJson(j.at("stepCert"));
    for (const auto& v : j.at("donorDoubling"))
      plan.donorDoubling.insert(v.get<std::uint64_t>());
    plan.scope = scopeFromJson(j.at("scope"));
    return plan;
  }
  if (kind != "ordinal-shift") throw Error("unknown witness kind: " + kind);
  OrdinalShiftPlan plan;
  plan.hostValue = ordinalFromText(j.at("host").get<std::string>());
  plan.repeatedValue = ordinalFromText(j.at("repeated").get<std::string>());
  std::string gamma = j.at("splitGamma").get<std::string>();
  plan.splitGamma = gamma == "0" ? Ordinal{} : ordinalFromText(gamma);
  plan.orientation = j.at("orientation").get<std::string>() == "w"
                         ? Orientation::W
                         : Orientation::WStar;
  return plan;
}

json toJson(const Report& report) {
  const Verdict& v = report.verdict;
  json out;
  out["reversible"] = v.reversible;
  out["clause"] = toText(v.clause);
  if (v.clause != Clause::MixedSplit && v.gammaStar)
    out["gammaStar"] = toText(*v.gammaStar);
  else
    out["gammaStar"] = nullptr;
  out["K"] = decisiveK(v);
  out["witness"] = v.witness ? witnessToJson(*v.witness) : json(nullptr);
  json trace = json::array();
  for (const auto& step : report.clauseTrace)
    trace.push_back(json{{"check", step.check}, {"outcome", step.outcome}});
  out["trace"] = trace;
  return out;
}

std::string humanText(const Report& report) {
  const Verdict& v = report.verdict;
  std::ostringstream os;
  os << "verdict: " << (v.reversible ? "reversible" : "non-reversible") << "\n";
  os << "clause: " << toText(v.clause) << "\n";
  if (v.clause != Clause::MixedSplit && v.gammaStar)
    os << "gamma*: " << toText(*v.gammaStar) << "\n";
  auto k = decisiveK(v);
  if (!k.empty()) {
    os << "K: {";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? ", " : "") << k[i];
    os << "}\n";
  }
  for (const auto& step : report.clauseTrace)
    os << "  " << step.check << ": " << step.outcome << "\n";
  if (v.witness) os << "witness: " << witnessToJson(*v.witness).dump() << "\n";
  os << "time: " << report.timingMs << " ms\n";
  return os.str();
}

}  // namespace ordrev
