#pragma once

/**
 * Structured check reporting shared by the library verifiers and the CLI:
 * one record per check, NDJSON serialization, pass/fail/inconclusive
 * status with a witness on every failure.
 */

#include <string>
#include <vector>

namespace hh {

struct ReportRecord {
  std::string check;      ///< check family, e.g. "braid equation"
  std::string instance;   ///< instance descriptor, e.g. "I2(4), k=2"
  std::string status;     ///< "pass" | "fail" | "inconclusive"
  std::string witness;    ///< serialized witness; nonempty iff not pass
  double timing_ms = 0;
};

struct VerificationReport {
  std::vector<ReportRecord> records;

  bool pass() const;
  void add(const std::string& check, const std::string& instance, bool ok,
           const std::string& witness = "", double timing_ms = 0);
  void add_inconclusive(const std::string& check, const std::string& instance,
                        const std::string& note, double timing_ms = 0);
  void merge(const VerificationReport& o);
};

/// One NDJSON line (no trailing newline).
std::string ndjson_line(const ReportRecord& r);

}  // namespace hh
