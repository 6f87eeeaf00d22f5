#ifndef ORDREV_REPORT_HPP
#define ORDREV_REPORT_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "ordrev/verdict.hpp"

namespace ordrev {

struct TraceStep {
  std::string check;
  std::string outcome;
};

struct Report {
  Verdict verdict;
  std::vector<TraceStep> clauseTrace;
  double timingMs = 0.0;
};

// Assembles the ordered check trace from a decided verdict.
Report makeReport(Verdict verdict, double timingMs);

// {"reversible", "clause", "gammaStar", "K", "witness", "trace"} with
// canonical key order; timing is deliberately omitted so that the output is
// byte-stable for golden-file comparison.
nlohmann::json toJson(const Report& report);

nlohmann::json witnessToJson(const WitnessPlan& plan);
WitnessPlan witnessFromJson(const nlohmann::json& j);

std::string humanText(const Report& report);

}  // namespace ordrev

#endif
