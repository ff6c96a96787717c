#include "hh/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace hh {

bool VerificationReport::pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const ReportRecord& r) { return r.status != "fail"; });
}

void VerificationReport::add(const std::string& check, const std::string& instance, bool ok,
                             const std::string& witness, double timing_ms) {
  records.push_back({check, instance, ok ? "pass" : "fail", ok ? "" : witness, timing_ms});
}

void VerificationReport::add_inconclusive(const std::string& check, const std::string& instance,
                                          const std::string& note, double timing_ms) {
  records.push_back({check, instance, "inconclusive", note, timing_ms});
}

void VerificationReport::merge(const VerificationReport& o) {
  records.insert(records.end(), o.records.begin(), o.records.end());
}

std::string ndjson_line(const ReportRecord& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["instance"] = r.instance;
  j["status"] = r.status;
  if (!r.witness.empty()) j["witness"] = r.witness;
  j["timing_ms"] = r.timing_ms;
  return j.dump();
}

}  // namespace hh
