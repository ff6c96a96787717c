// Full acceptance battery: runs the nine verification suites sequentially and
// prints one pass/fail line per suite.  Exit status 0 iff every suite passes.

#include <chrono>
#include <cstdio>
#include <exception>

#include "../tools/battery.hpp"

int main() {
  const std::uint64_t seed = 12345;
  bool all_ok = true;
  for (int k = 1; k <= 9; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    hh::VerificationReport rep;
    try {
      rep = hh::battery::criterion(k, seed);
      ok = rep.pass();
    } catch (const std::exception& e) {
      rep.add("criterion runner", "criterion " + std::to_string(k), false, e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s (%zu checks, %.1fs)\n", ok ? "PASS" : "FAIL", k,
                hh::battery::criterion_title(k).c_str(), rep.records.size(), secs);
    if (!ok) {
      for (const auto& r : rep.records)
        if (r.status != "pass")
          std::printf("       %s | %s | %s | %s\n", r.check.c_str(), r.instance.c_str(),
                      r.status.c_str(), r.witness.c_str());
      all_ok = false;
    }
    std::fflush(stdout);
  }
  std::printf("%s\n", all_ok ? "ACCEPTANCE: all criteria passed"
                             : "ACCEPTANCE: at least one criterion failed");
  return all_ok ? 0 : 1;
}
