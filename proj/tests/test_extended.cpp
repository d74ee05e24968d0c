// Deep-series check, disabled by default: the n = 1500 column-transfer run
// takes on the order of an hour and a few gigabytes.  Set FGROWTH_EXTENDED=1
// to enable it; otherwise the test reports SKIP and exits zero.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "thompsonf/algorithm_b.hpp"
#include "thompsonf/series_analysis.hpp"

using namespace thompsonf;

namespace {

bool digits_check(const Int& v, std::size_t length, const std::string& prefix,
                  const std::string& suffix) {
  std::string s = v.str();
  return s.size() == length && s.compare(0, prefix.size(), prefix) == 0 &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main() {
  const char* flag = std::getenv("FGROWTH_EXTENDED");
  if (flag == nullptr || std::string(flag) != "1") {
    std::puts("SKIP: set FGROWTH_EXTENDED=1 to run the n = 1500 series check");
    return 0;
  }

  auto t0 = std::chrono::steady_clock::now();
  Int f1000, f1500;
  stream_growth(
      1500,
      [&](std::size_t n, const Int& value) {
        if (n == 1000) f1000 = value;
        if (n == 1500) f1500 = value;
        if (n % 100 == 0) {
          double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
          std::cerr << "[extended] n = " << n << " after " << static_cast<long>(dt)
                    << " s\n";
        }
      },
      /*prune=*/true);

  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::printf("%s: %s\n", ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
  };

  check(digits_check(f1000, 419, "7579", "7676"), "f(1000) digit fingerprint");
  check(digits_check(f1500, 628, "7367", "9566"), "f(1500) digit fingerprint");

  Decimal bound = nth_root_decimal(f1500, 1500, 20);
  check(bound.str().compare(0, 7, "2.62167") == 0,
        "f(1500)^(1/1500) = " + bound.str().substr(0, 9) + "...");

  return failures == 0 ? 0 : 1;
}
