// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <cstdio>
#include <filesystem>

#include "cgsb/selftest.hpp"

int main() {
  cgsb::SelftestOptions opt;
  if (std::filesystem::exists(std::filesystem::path(CGSB_DATA_DIR) / "lie")) opt.data_dir = CGSB_DATA_DIR;
  opt.jobs = 2;
  int failed = 0;
  cgsb::run_selftest(opt, [&](const cgsb::CriterionResult& r) {
    std::printf("%s  criterion %d (%s): %s [%.2f s]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
