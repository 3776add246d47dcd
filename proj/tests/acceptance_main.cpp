// Runs every acceptance check and prints one line per criterion.

#include <cstdio>

#include "qmf/selftest.hpp"

int main() {
  auto results = qmf::run_selftest("");
  std::fputs(qmf::format_selftest_report(results).c_str(), stdout);
  return qmf::selftest_all_passed(results) ? 0 : 1;
}
