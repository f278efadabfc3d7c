// Command-line front end; talks to the library exclusively through the C API.
#include "snakecalc.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace {

const char* kUsage =
    "usage: snakecalc [--json] <command> [args]\n"
    "\n"
    "commands:\n"
    "  expand <graph.json>                 print the canonical Laurent expansion\n"
    "  matchings <graph.json>              list the (good) perfect matchings\n"
    "  triangulate <genus> <orbifold_pts>  print the standard triangulation\n"
    "  curve-graph <tri.json> <curve.json> print the snake/band graph of a curve\n"
    "  seed <tri.json>                     print the initial seed of a triangulation\n"
    "  mutate <seed.json> <k...>           mutate a seed (1-based directions)\n"
    "  oracle <tri.json> <flips> <k>       cluster variable k after the flip\n"
    "                                      sequence (comma-separated, 1-based)\n"
    "  verify <identity.json>              verify one identity file\n"
    "  verify --suite <dir>                verify a fixture directory\n";

std::string slurp(const char* path) {
  FILE* f = std::fopen(path, "rb");
  if (!f) {
    std::fprintf(stderr, "error: cannot open %s\n", path);
    std::exit(2);
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  std::fclose(f);
  return out;
}

[[noreturn]] void die(sc_ctx* ctx, const char* path = nullptr) {
  if (path)
    std::fprintf(stderr, "error: %s: %s\n", path, sc_last_error(ctx));
  else
    std::fprintf(stderr, "error: %s\n", sc_last_error(ctx));
  std::exit(2);
}

std::vector<int> parse_ints(const char* s) {
  std::vector<int> out;
  std::string cur;
  for (const char* p = s;; ++p) {
    if (*p == ',' || *p == '\0') {
      if (!cur.empty()) out.push_back(std::atoi(cur.c_str()));
      cur.clear();
      if (*p == '\0') break;
    } else {
      cur += *p;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<const char*> args;
  int as_json = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--json") == 0)
      as_json = 1;
    else
      args.push_back(argv[i]);
  }
  if (args.empty()) {
    std::fputs(kUsage, stderr);
    return 2;
  }
  std::string cmd = args[0];
  sc_ctx* ctx = sc_ctx_new();
  char* out = nullptr;

  if (cmd == "expand" || cmd == "matchings") {
    if (args.size() != 2) {
      std::fputs(kUsage, stderr);
      return 2;
    }
    std::string text = slurp(args[1]);
    sc_graph* g = nullptr;
    if (sc_graph_from_json(ctx, text.c_str(), nullptr, &g) != SC_OK) die(ctx, args[1]);
    int rc = cmd == "expand" ? sc_graph_expand(ctx, g, &out)
                             : sc_graph_matchings(ctx, g, as_json, &out);
    if (rc != SC_OK) die(ctx);
    std::printf("%s%s", out, cmd == "expand" ? "\n" : "");
    sc_string_free(out);
    sc_graph_free(g);
  } else if (cmd == "triangulate") {
    if (args.size() != 3) {
      std::fputs(kUsage, stderr);
      return 2;
    }
    sc_tri* t = nullptr;
    if (sc_tri_standard(ctx, std::atoi(args[1]), std::atoi(args[2]), &t) != SC_OK) die(ctx);
    if (sc_tri_to_json(ctx, t, &out) != SC_OK) die(ctx);
    std::printf("%s\n", out);
    sc_string_free(out);
    sc_tri_free(t);
  } else if (cmd == "curve-graph") {
    if (args.size() != 3) {
      std::fputs(kUsage, stderr);
      return 2;
    }
    std::string tri = slurp(args[1]), curve = slurp(args[2]);
    sc_tri* t = nullptr;
    if (sc_tri_from_json(ctx, tri.c_str(), &t) != SC_OK) die(ctx, args[1]);
    sc_graph* g = nullptr;
    if (sc_curve_graph(ctx, t, curve.c_str(), &g) != SC_OK) die(ctx, args[2]);
    if (sc_graph_to_json(ctx, g, &out) != SC_OK) die(ctx);
    std::printf("%s\n", out);
    sc_string_free(out);
    sc_graph_free(g);
    sc_tri_free(t);
  } else if (cmd == "seed") {
    if (args.size() != 2) {
      std::fputs(kUsage, stderr);
      return 2;
    }
    std::string tri = slurp(args[1]);
    sc_tri* t = nullptr;
    if (sc_tri_from_json(ctx, tri.c_str(), &t) != SC_OK) die(ctx, args[1]);
    sc_seed* s = nullptr;
    if (sc_seed_from_tri(ctx, t, &s) != SC_OK) die(ctx);
    if (sc_seed_to_json(ctx, s, &out) != SC_OK) die(ctx);
    std::printf("%s\n", out);
    sc_string_free(out);
    sc_seed_free(s);
    sc_tri_free(t);
  } else if (cmd == "mutate") {
    if (args.size() < 3) {
      std::fputs(kUsage, stderr);
      return 2;
    }
    std::string seed = slurp(args[1]);
    sc_seed* s = nullptr;
    if (sc_seed_from_json(ctx, seed.c_str(), &s) != SC_OK) die(ctx, args[1]);
    std::vector<int> ks;
    for (std::size_t i = 2; i < args.size(); ++i)
      for (int k : parse_ints(args[i])) ks.push_back(k);
    sc_seed* s2 = nullptr;
    if (sc_seed_mutate(ctx, s, ks.data(), static_cast<int>(ks.size()), &s2) != SC_OK) die(ctx);
    if (sc_seed_to_json(ctx, s2, &out) != SC_OK) die(ctx);
    std::printf("%s\n", out);
    sc_string_free(out);
    sc_seed_free(s);
    sc_seed_free(s2);
  } else if (cmd == "oracle") {
    if (args.size() != 4) {
      std::fputs(kUsage, stderr);
      return 2;
    }
    std::string tri = slurp(args[1]);
    sc_tri* t = nullptr;
    if (sc_tri_from_json(ctx, tri.c_str(), &t) != SC_OK) die(ctx, args[1]);
    std::vector<int> flips = parse_ints(args[2]);
    if (sc_oracle(ctx, t, flips.data(), static_cast<int>(flips.size()), std::atoi(args[3]),
                  &out) != SC_OK)
      die(ctx);
    std::printf("%s\n", out);
    sc_string_free(out);
    sc_tri_free(t);
  } else if (cmd == "verify") {
    int all_ok = 0;
    int rc;
    if (args.size() == 3 && std::strcmp(args[1], "--suite") == 0)
      rc = sc_verify_suite(ctx, args[2], as_json, &out, &all_ok);
    else if (args.size() == 2)
      rc = sc_verify_file(ctx, args[1], as_json, &out, &all_ok);
    else {
      std::fputs(kUsage, stderr);
      return 2;
    }
    if (rc != SC_OK) die(ctx);
    std::printf("%s", out);
    if (as_json) std::printf("\n");
    sc_string_free(out);
    sc_ctx_free(ctx);
    return all_ok ? 0 : 1;
  } else {
    std::fprintf(stderr, "unknown subcommand '%s'\n\n%s", cmd.c_str(), kUsage);
    return 2;
  }
  sc_ctx_free(ctx);
  return 0;
}
