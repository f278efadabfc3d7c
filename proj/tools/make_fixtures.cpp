// Regenerates fixtures/paper from the standard triangulations. Every
// identity is verified before anything is written.
#include "fixtures.hpp"

#include <cstdio>

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures/paper";
  try {
    snakecalc::PaperSuite suite = snakecalc::build_paper_suite();
    snakecalc::write_suite(suite, dir);
    std::printf("wrote %zu identities and %zu bundles to %s\n", suite.identities.size(),
                suite.bundles.size(), dir.c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fixture generation failed: %s\n", e.what());
    return 1;
  }
  return 0;
}
