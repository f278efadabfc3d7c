#ifndef SNAKECALC_FIXTURES_HPP
#define SNAKECALC_FIXTURES_HPP

#include "calculus.hpp"
#include "json_io.hpp"
#include "orbifold.hpp"

#include <map>
#include <string>
#include <vector>

namespace snakecalc {

// The machine-checked reproduction of the paper's identity chain: graph
// bundles for (g,c) = (1,1), (2,1), (1,2), the identities of Figures 5, 7,
// 8/9 plus the section-4 instances, and a provenance manifest.
struct PaperSuite {
  struct Entry {
    std::string name;
    std::string kind;        // graph | identity | triangulation | curve
    std::string bundle;      // bundle file the entry lives in (graphs)
    std::string provenance;  // PAPER | DERIVED | TRIVIAL
    std::string note;
  };
  struct FlipSequence {
    std::vector<int> flips;  // 1-based mutation directions
    int variable;            // 1-based index of the produced cluster variable
  };
  std::map<std::string, Triangulation> triangulations;       // keyed g{g}c{c}
  std::map<std::string, GraphBundle> bundles;                // keyed g{g}c{c}
  std::map<std::string, std::map<std::string, Curve>> curves;
  std::vector<std::pair<std::string, Identity>> identities;  // (bundle key, identity)
  std::map<std::string, FlipSequence> flip_sequences;        // genus-1 arcs
  std::vector<Entry> manifest;
};

// Builds every fixture and verifies every identity; throws if any fails.
PaperSuite build_paper_suite();

// Computes the coefficient monomial ytilde of the section-4 identity for the
// standard triangulation: the B-free part of U*V divided by y5*x4*x5.
LaurentPoly section4_ytilde(const Triangulation& t, const LaurentPoly& uv);

// Serialization of the suite to a fixture directory (graphs_*.json,
// identities/*.json, manifest.json, triangulation/curve files).
void write_suite(const PaperSuite& suite, const std::string& dir);

// Loading and verification of a fixture directory; `single` verifies one
// identity file (resolving its bundle reference).
SuiteReport verify_suite_dir(const std::string& dir);
VerifyResult verify_identity_file(const std::string& path);
Identity load_identity_file(const std::string& path, GraphBundle& bundle_out);

}  // namespace snakecalc

#endif
