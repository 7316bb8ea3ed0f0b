// Acceptance gate: runs every criterion and prints one line per
// criterion. Exit code 0 iff all pass.
//
//  1 golden planar marked-weight polynomials (exact)
//  2 golden 10-vertex twisted-chord table (exact)
//  3 oracle equivalence, point/length x orientable/non-orientable (exact)
//  4 one-backbone recursion equivalence (exact)
//  5 Harer-Zagier recursion and Catalan row (exact)
//  6 shape/diagram change of variables through z^6 (exact)
//  7 KP residuals vanish (exact)
//  8 gl(infinity) operator identities (exact)
//  9 vertex-spectrum derivative link (exact)
// 10 Gaussian trace-moment grid |MC - exact| <= 4 stderr (fixed seed)
// 11 free probability: convolution and length limits (exact)

#include <cstring>
#include <iostream>
#include <string>

#include "chord/checks.hpp"

int main(int argc, char** argv) {
  chord::SuiteOptions opt;
  std::string suite = "all";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--suite" && i + 1 < argc) suite = argv[++i];
    if (arg == "--samples" && i + 1 < argc) opt.samples = std::stol(argv[++i]);
    if (arg == "--seed" && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
  }

  bool allPass = true;
  try {
    for (const auto& r : chord::run_suite(suite, opt)) {
      allPass = allPass && r.pass;
      std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.criterion
                << ": " << r.name
                << (r.detail.empty() ? "" : "  -- " + r.detail) << std::endl;
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance run aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (allPass ? "ALL CRITERIA PASS" : "ACCEPTANCE FAILED") << std::endl;
  return allPass ? 0 : 1;
}
