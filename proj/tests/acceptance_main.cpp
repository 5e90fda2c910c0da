// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "drs/acceptance.hpp"

int main(int argc, char** argv) {
  drs::acceptance::Options opt;
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) opt.seed = std::strtoull(argv[++i], nullptr, 10);
    else if (a == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (a == "--verbose") verbose = true;
  }
  bool ok = true;
  for (int id = 1; id <= drs::acceptance::kNumCriteria; ++id) {
    if (only && id != only) continue;
    auto r = drs::acceptance::run_criterion(id, opt);
    std::cout << r.line() << std::endl;
    if (verbose)
      for (const auto& c : r.checks) std::cout << "       " << c.name << ": " << c.detail << "\n";
    ok = ok && r.pass();
  }
  return ok ? 0 : 1;
}
