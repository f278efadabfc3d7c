#include <doctest.h>

#include "fixtures.hpp"
#include "json_io.hpp"

#include <filesystem>
#include <set>

using namespace snakecalc;
namespace fs = std::filesystem;

static const std::string kPaperDir = std::string(FIXTURE_DIR) + "/paper";

TEST_CASE("fixture files parse, re-serialize and re-parse identically") {
  for (const auto& entry : fs::recursive_directory_iterator(kPaperDir)) {
    if (entry.path().extension() != ".json") continue;
    json j = json::parse(read_file(entry.path().string()));
    std::string name = entry.path().filename().string();
    if (name.rfind("graphs_", 0) == 0) {
      GraphBundle b = bundle_from_json(j);
      json j2 = bundle_to_json(b);
      CHECK(bundle_to_json(bundle_from_json(j2)) == j2);
      CHECK(j2 == j);
    } else if (name.rfind("triangulation_", 0) == 0) {
      Triangulation t = triangulation_from_json(j);
      CHECK(to_json(triangulation_from_json(to_json(t))) == to_json(t));
      CHECK(to_json(t) == j);
    } else if (name.rfind("curves_", 0) == 0) {
      for (const auto& [cname, jc] : j.items()) {
        Curve c = curve_from_json(jc);
        CHECK(to_json(c) == jc);
      }
    } else if (entry.path().parent_path().filename() == "identities") {
      Identity id = identity_from_json(j);
      json j2 = to_json(id);
      j2["bundle"] = j.at("bundle");
      CHECK(j2 == j);
    }
  }
}

TEST_CASE("every manifest entry carries a provenance tag and resolves") {
  json manifest = json::parse(read_file(kPaperDir + "/manifest.json"));
  std::set<std::string> tags{"PAPER", "DERIVED", "TRIVIAL"};
  std::map<std::string, GraphBundle> bundles;
  std::set<std::string> graph_entries, identity_entries;
  for (const auto& e : manifest.at("entries")) {
    CHECK(tags.count(e.at("provenance").get<std::string>()) == 1);
    std::string kind = e.at("kind").get<std::string>();
    std::string name = e.at("name").get<std::string>();
    if (kind == "graph") {
      std::string bun = e.at("bundle").get<std::string>();
      auto it = bundles.find(bun);
      if (it == bundles.end())
        it = bundles
                 .emplace(bun, bundle_from_json(json::parse(
                                   read_file(kPaperDir + "/graphs_" + bun + ".json"))))
                 .first;
      CHECK_NOTHROW(it->second.get(name));
      graph_entries.insert(bun + "/" + name);
    } else if (kind == "identity") {
      CHECK(fs::exists(kPaperDir + "/identities/" + name + ".json"));
      identity_entries.insert(name);
    }
  }
  // Every non-trivial graph and every identity is covered by the manifest.
  for (const auto& [bun, b] : bundles) {
    for (const auto& [name, g] : b.graphs) {
      if (std::holds_alternative<SnakeGraph>(g) && std::get<SnakeGraph>(g).is_trivial())
        continue;  // bare edges carry no provenance of their own
      CHECK(graph_entries.count(bun + "/" + name) == 1);
    }
  }
  for (const auto& entry : fs::directory_iterator(kPaperDir + "/identities"))
    CHECK(identity_entries.count(entry.path().stem().string()) == 1);
}

TEST_CASE("identity graph references resolve") {
  for (const auto& entry : fs::directory_iterator(kPaperDir + "/identities")) {
    GraphBundle b;
    Identity id = load_identity_file(entry.path().string(), b);
    for (const auto& side : {id.lhs, id.rhs})
      for (const auto& t : side)
        for (const auto& f : t.factors) CHECK_NOTHROW(b.get(f));
  }
}

TEST_CASE("the committed fixture suite verifies") {
  SuiteReport rep = verify_suite_dir(kPaperDir);
  CHECK(rep.lines.size() == 12);
  for (const auto& l : rep.lines) {
    INFO(l.name);
    CHECK(l.ok);
  }
}

TEST_CASE("single identity file verification") {
  VerifyResult r = verify_identity_file(kPaperDir + "/identities/fig5_line1.json");
  CHECK(r.ok);
}

TEST_CASE("fixtures regenerate byte-identically") {
  PaperSuite suite = build_paper_suite();
  fs::path tmp = fs::temp_directory_path() / "snakecalc_fixture_check";
  fs::remove_all(tmp);
  write_suite(suite, tmp.string());
  for (const auto& entry : fs::recursive_directory_iterator(kPaperDir)) {
    if (entry.path().extension() != ".json") continue;
    fs::path rel = fs::relative(entry.path(), kPaperDir);
    CHECK(read_file((tmp / rel).string()) == read_file(entry.path().string()));
  }
  fs::remove_all(tmp);
}

TEST_CASE("seed JSON round-trip") {
  Triangulation t = standard_triangulation(1, 1);
  Seed s = seed_from_triangulation(t);
  json j = to_json(s);
  Seed s2 = seed_from_json(j);
  CHECK(to_json(s2) == j);
  Seed m = mutate(s2, 3);
  CHECK(to_json(seed_from_json(to_json(m))) == to_json(m));
}
