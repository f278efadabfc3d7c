#include "snakecalc.h"

#include "fixtures.hpp"
#include "json_io.hpp"

#include <cstring>
#include <set>
#include <string>

using namespace snakecalc;

struct sc_ctx {
  std::string error;
};
struct sc_graph {
  GraphAny g;
  VarTablePtr table;
};
struct sc_tri {
  Triangulation t;
};
struct sc_seed {
  Seed s;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(sc_ctx* ctx, int code, const std::string& msg) {
  if (ctx) ctx->error = msg;
  return code;
}

template <typename F>
int guarded(sc_ctx* ctx, F&& f) {
  try {
    return f();
  } catch (const ring_error& e) {
    return fail(ctx, SC_ERR_PARSE, e.what());
  } catch (const graph_error& e) {
    return fail(ctx, SC_ERR_INVALID, e.what());
  } catch (const orbifold_error& e) {
    return fail(ctx, SC_ERR_INVALID, e.what());
  } catch (const cluster_error& e) {
    return fail(ctx, SC_ERR_DOMAIN, e.what());
  } catch (const calculus_error& e) {
    return fail(ctx, SC_ERR_DOMAIN, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(ctx, SC_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, SC_ERR_IO, e.what());
  }
}

// Variable table from the labels a standalone graph mentions.
VarTablePtr table_for_graph(const GraphAny& g) {
  std::set<std::string> labels;
  auto add_tiles = [&](const SnakeGraph& s) {
    if (s.is_trivial()) {
      labels.insert(*s.trivial_edge);
      return;
    }
    for (const auto& t : s.tiles) {
      labels.insert(t.label);
      for (const auto& e : t.edge) labels.insert(e);
    }
  };
  add_tiles(std::holds_alternative<SnakeGraph>(g) ? std::get<SnakeGraph>(g)
                                                  : std::get<BandGraph>(g).base);
  std::vector<std::string> xs, ys;
  for (const auto& l : labels) {
    xs.push_back("x" + l);
    ys.push_back("y" + l);
  }
  return std::make_shared<VarTable>(std::move(xs), std::move(ys));
}

}  // namespace

sc_ctx* sc_ctx_new(void) { return new sc_ctx; }
void sc_ctx_free(sc_ctx* ctx) { delete ctx; }
const char* sc_last_error(const sc_ctx* ctx) { return ctx ? ctx->error.c_str() : ""; }
void sc_string_free(char* s) { std::free(s); }
void sc_graph_free(sc_graph* g) { delete g; }
void sc_tri_free(sc_tri* t) { delete t; }
void sc_seed_free(sc_seed* s) { delete s; }

int sc_graph_from_json(sc_ctx* ctx, const char* graph_json, const char* x_vars_json,
                       sc_graph** out) {
  return guarded(ctx, [&] {
    GraphAny g = graph_from_json(json::parse(graph_json));
    VarTablePtr table;
    if (x_vars_json) {
      auto xs = json::parse(x_vars_json).get<std::vector<std::string>>();
      std::vector<std::string> ys;
      for (const auto& x : xs) ys.push_back("y" + x.substr(1));
      table = std::make_shared<VarTable>(xs, ys);
    } else {
      table = table_for_graph(g);
    }
    *out = new sc_graph{std::move(g), std::move(table)};
    return SC_OK;
  });
}

int sc_graph_to_json(sc_ctx* ctx, const sc_graph* g, char** out) {
  return guarded(ctx, [&] {
    *out = dup_string(graph_to_json(g->g).dump(1));
    return SC_OK;
  });
}

int sc_graph_expand(sc_ctx* ctx, const sc_graph* g, char** canonical_poly) {
  return guarded(ctx, [&] {
    LaurentPoly v = std::holds_alternative<SnakeGraph>(g->g)
                        ? expansion(g->table, std::get<SnakeGraph>(g->g))
                        : expansion(g->table, std::get<BandGraph>(g->g));
    *canonical_poly = dup_string(v.to_string());
    return SC_OK;
  });
}

int sc_graph_matchings(sc_ctx* ctx, const sc_graph* g, int as_json, char** report) {
  return guarded(ctx, [&] {
    MatchingTable t = std::holds_alternative<SnakeGraph>(g->g)
                          ? analyze(std::get<SnakeGraph>(g->g))
                          : analyze(std::get<BandGraph>(g->g));
    if (as_json) {
      json j;
      j["count"] = t.matchings.size();
      j["minimal"] = t.minimal_index;
      json arr = json::array();
      for (std::size_t i = 0; i < t.matchings.size(); ++i) {
        json jm;
        jm["edges"] = t.matchings[i];
        json labels = json::array();
        for (int e : t.matchings[i]) labels.push_back(t.geom.edges[e].label);
        jm["labels"] = labels;
        jm["height"] = t.heights[i];
        arr.push_back(jm);
      }
      j["matchings"] = arr;
      *report = dup_string(j.dump(1));
    } else {
      std::string out = std::to_string(t.matchings.size()) + " matchings\n";
      for (std::size_t i = 0; i < t.matchings.size(); ++i) {
        out += i == t.minimal_index ? "* " : "  ";
        out += "{";
        for (std::size_t k = 0; k < t.matchings[i].size(); ++k) {
          if (k) out += ",";
          out += std::to_string(t.matchings[i][k]);
        }
        out += "}  ";
        for (std::size_t k = 0; k < t.matchings[i].size(); ++k)
          out += t.geom.edges[t.matchings[i][k]].label + " ";
        out += "\n";
      }
      out += "(* marks the minimal matching)\n";
      *report = dup_string(out);
    }
    return SC_OK;
  });
}

int sc_tri_standard(sc_ctx* ctx, int genus, int orbifold_points, sc_tri** out) {
  return guarded(ctx, [&] {
    *out = new sc_tri{standard_triangulation(genus, orbifold_points)};
    return SC_OK;
  });
}

int sc_tri_from_json(sc_ctx* ctx, const char* tri_json, sc_tri** out) {
  return guarded(ctx, [&] {
    *out = new sc_tri{triangulation_from_json(json::parse(tri_json))};
    return SC_OK;
  });
}

int sc_tri_to_json(sc_ctx* ctx, const sc_tri* t, char** out) {
  return guarded(ctx, [&] {
    *out = dup_string(to_json(t->t).dump(1));
    return SC_OK;
  });
}

int sc_curve_graph(sc_ctx* ctx, const sc_tri* t, const char* curve_json, sc_graph** out) {
  return guarded(ctx, [&] {
    Curve c = curve_from_json(json::parse(curve_json));
    GraphAny g;
    if (c.kind == Curve::Kind::Loop)
      g = band_graph_of(t->t, c);
    else if (c.kind == Curve::Kind::SemiClosed)
      g = band_graph_of(t->t, perturbation_loop(t->t, c));
    else
      g = snake_graph_of(t->t, c);
    *out = new sc_graph{std::move(g), t->t.table};
    return SC_OK;
  });
}

int sc_seed_from_tri(sc_ctx* ctx, const sc_tri* t, sc_seed** out) {
  return guarded(ctx, [&] {
    *out = new sc_seed{seed_from_triangulation(t->t)};
    return SC_OK;
  });
}

int sc_seed_from_json(sc_ctx* ctx, const char* seed_json, sc_seed** out) {
  return guarded(ctx, [&] {
    *out = new sc_seed{seed_from_json(json::parse(seed_json))};
    return SC_OK;
  });
}

int sc_seed_to_json(sc_ctx* ctx, const sc_seed* s, char** out) {
  return guarded(ctx, [&] {
    *out = dup_string(to_json(s->s).dump(1));
    return SC_OK;
  });
}

int sc_seed_mutate(sc_ctx* ctx, const sc_seed* s, const int* ks, int nk, sc_seed** out) {
  return guarded(ctx, [&] {
    Seed cur = s->s;
    for (int i = 0; i < nk; ++i) {
      if (ks[i] < 1) throw cluster_error("mutation indices are 1-based");
      cur = mutate(cur, static_cast<std::size_t>(ks[i] - 1));
    }
    *out = new sc_seed{std::move(cur)};
    return SC_OK;
  });
}

int sc_oracle(sc_ctx* ctx, const sc_tri* t, const int* flips, int nflips, int k, char** out) {
  return guarded(ctx, [&] {
    Seed s = seed_from_triangulation(t->t);
    std::vector<std::size_t> f;
    for (int i = 0; i < nflips; ++i) {
      if (flips[i] < 1) throw cluster_error("flip indices are 1-based");
      f.push_back(static_cast<std::size_t>(flips[i] - 1));
    }
    if (k < 1) throw cluster_error("variable index is 1-based");
    LaurentPoly v = variable_along(s, f, static_cast<std::size_t>(k - 1));
    *out = dup_string(v.to_string());
    return SC_OK;
  });
}

namespace {

int report_out(const SuiteReport& rep, int as_json, char** report, int* all_ok) {
  if (all_ok) *all_ok = rep.all_ok() ? 1 : 0;
  if (as_json) {
    json j;
    j["all_ok"] = rep.all_ok();
    json lines = json::array();
    for (const auto& l : rep.lines) {
      json jl{{"name", l.name}, {"ok", l.ok}, {"ms", l.millis}};
      if (!l.ok) jl["counterexample"] = l.counterexample;
      lines.push_back(jl);
    }
    j["identities"] = lines;
    *report = dup_string(j.dump(1));
  } else {
    *report = dup_string(rep.to_text());
  }
  return SC_OK;
}

}  // namespace

int sc_verify_file(sc_ctx* ctx, const char* path, int as_json, char** report, int* all_ok) {
  return guarded(ctx, [&] {
    GraphBundle b;
    Identity id = load_identity_file(path, b);
    auto t0 = std::chrono::steady_clock::now();
    VerifyResult r = verify(b, id);
    auto t1 = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.lines.push_back({id.name, r.ok,
                         std::chrono::duration<double, std::milli>(t1 - t0).count(),
                         r.counterexample});
    return report_out(rep, as_json, report, all_ok);
  });
}

int sc_verify_suite(sc_ctx* ctx, const char* dir, int as_json, char** report, int* all_ok) {
  return guarded(ctx, [&] {
    SuiteReport rep = verify_suite_dir(dir);
    return report_out(rep, as_json, report, all_ok);
  });
}
