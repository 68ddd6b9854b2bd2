#include "btwc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "btwc/betweenness.hpp"
#include "btwc/centralization.hpp"
#include "btwc/closed_forms.hpp"
#include "btwc/edge_list_io.hpp"
#include "btwc/errors.hpp"
#include "btwc/generators.hpp"
#include "btwc/graph.hpp"
#include "btwc/random_graphs.hpp"

struct btwc_graph {
  btwc::Graph g;
};

struct btwc_scores {
  btwc::ScoreVector sv;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
btwc_status guard(F&& body) noexcept {
  try {
    t_last_error.clear();
    body();
    return BTWC_OK;
  } catch (const btwc::ParamError& e) {
    t_last_error = e.what();
    return BTWC_ERR_ARGUMENT;
  } catch (const btwc::ParseError& e) {
    t_last_error = e.what();
    return BTWC_ERR_PARSE;
  } catch (const btwc::IoError& e) {
    t_last_error = e.what();
    return BTWC_ERR_IO;
  } catch (const btwc::StructureError& e) {
    t_last_error = e.what();
    return BTWC_ERR_STRUCTURE;
  } catch (const btwc::SizeError& e) {
    t_last_error = e.what();
    return BTWC_ERR_SIZE;
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return BTWC_ERR_NOMEM;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return BTWC_ERR_INTERNAL;
  }
}

void check(bool ok, const char* msg) {
  if (!ok) throw btwc::ParamError(msg);
}

// Parses a spec and loads the tree edge file when one is referenced.
btwc::FamilySpec resolve_spec(const char* text) {
  check(text != nullptr, "spec string is null");
  btwc::FamilySpec spec = btwc::parse_family_spec(text);
  if (spec.family == btwc::Family::Tree && !spec.tree_path.empty()) {
    btwc::EdgeListData data = btwc::read_edge_list_file(spec.tree_path);
    spec.tree_edges = std::move(data.edges);
    spec.p1 = data.n;
  }
  return spec;
}

}  // namespace

extern "C" {

const char* btwc_version(void) { return "1.0.0"; }

const char* btwc_last_error(void) { return t_last_error.c_str(); }

void btwc_string_free(char* s) { std::free(s); }

btwc_status btwc_graph_build(int32_t n, const int32_t* endpoints,
                             size_t edge_count, btwc_graph** out) {
  return guard([&] {
    check(out != nullptr, "output pointer is null");
    check(endpoints != nullptr || edge_count == 0, "endpoint array is null");
    std::vector<btwc::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i)
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new btwc_graph{btwc::Graph::build(n, edges)};
  });
}

btwc_status btwc_graph_from_spec(const char* spec, btwc_graph** out) {
  return guard([&] {
    check(out != nullptr, "output pointer is null");
    *out = new btwc_graph{btwc::generate(resolve_spec(spec))};
  });
}

btwc_status btwc_graph_read_file(const char* path, btwc_graph** out) {
  return guard([&] {
    check(out != nullptr, "output pointer is null");
    check(path != nullptr, "path is null");
    btwc::EdgeListData data = btwc::read_edge_list_file(path);
    *out = new btwc_graph{btwc::Graph::build(data.n, data.edges)};
  });
}

btwc_status btwc_graph_format(const btwc_graph* g, char** out) {
  return guard([&] {
    check(g != nullptr, "graph is null");
    check(out != nullptr, "output pointer is null");
    *out = dup_string(btwc::format_edge_list(g->g));
  });
}

void btwc_graph_free(btwc_graph* g) { delete g; }

int32_t btwc_graph_order(const btwc_graph* g) {
  return g ? g->g.num_vertices() : -1;
}

int64_t btwc_graph_size(const btwc_graph* g) {
  return g ? g->g.num_edges() : -1;
}

int btwc_graph_connected(const btwc_graph* g) {
  return g && g->g.is_connected() ? 1 : 0;
}

int btwc_graph_has_edge(const btwc_graph* g, int32_t u, int32_t v) {
  return g && g->g.has_edge(u, v) ? 1 : 0;
}

btwc_status btwc_betweenness(const btwc_graph* g, int threads,
                             btwc_scores** out) {
  return guard([&] {
    check(g != nullptr, "graph is null");
    check(out != nullptr, "output pointer is null");
    *out = new btwc_scores{btwc::betweenness_exact(g->g, threads)};
  });
}

btwc_status btwc_betweenness_bruteforce(const btwc_graph* g, int32_t cap,
                                        btwc_scores** out) {
  return guard([&] {
    check(g != nullptr, "graph is null");
    check(out != nullptr, "output pointer is null");
    *out = new btwc_scores{btwc::betweenness_bruteforce(g->g, cap)};
  });
}

btwc_status btwc_betweenness_float(const btwc_graph* g, int threads,
                                   double* out) {
  return guard([&] {
    check(g != nullptr, "graph is null");
    check(out != nullptr, "output buffer is null");
    auto scores = btwc::betweenness_float(g->g, threads);
    std::memcpy(out, scores.data(), scores.size() * sizeof(double));
  });
}

btwc_status btwc_tree_scores(const btwc_graph* g, btwc_scores** out) {
  return guard([&] {
    check(g != nullptr, "graph is null");
    check(out != nullptr, "output pointer is null");
    *out = new btwc_scores{btwc::tree_scores(g->g)};
  });
}

btwc_status btwc_closed_form(const char* spec, btwc_scores** out) {
  return guard([&] {
    check(out != nullptr, "output pointer is null");
    *out = new btwc_scores{btwc::closed_form(resolve_spec(spec)).per_vertex};
  });
}

btwc_status btwc_closed_form_centralization(const char* spec, char** out) {
  return guard([&] {
    check(out != nullptr, "output pointer is null");
    auto result = btwc::closed_form(resolve_spec(spec));
    check(result.centralization.has_value(),
          "centralization is undefined for orders below 3");
    *out = dup_string(btwc::to_string(*result.centralization));
  });
}

void btwc_scores_free(btwc_scores* s) { delete s; }

int32_t btwc_scores_order(const btwc_scores* s) { return s ? s->sv.n() : -1; }

btwc_status btwc_scores_get(const btwc_scores* s, int32_t v, char** out) {
  return guard([&] {
    check(s != nullptr, "scores handle is null");
    check(out != nullptr, "output pointer is null");
    check(v >= 0 && v < s->sv.n(), "vertex out of range");
    *out = dup_string(btwc::to_string(s->sv.scores[static_cast<size_t>(v)]));
  });
}

btwc_status btwc_scores_get_double(const btwc_scores* s, int32_t v,
                                   double* out) {
  return guard([&] {
    check(s != nullptr, "scores handle is null");
    check(out != nullptr, "output pointer is null");
    check(v >= 0 && v < s->sv.n(), "vertex out of range");
    *out = s->sv.scores[static_cast<size_t>(v)].get_d();
  });
}

btwc_status btwc_scores_relative(const btwc_scores* s, int32_t v, char** out) {
  return guard([&] {
    check(s != nullptr, "scores handle is null");
    check(out != nullptr, "output pointer is null");
    check(v >= 0 && v < s->sv.n(), "vertex out of range");
    auto rel = btwc::relative_centrality(s->sv);
    *out = dup_string(btwc::to_string(rel[static_cast<size_t>(v)]));
  });
}

btwc_status btwc_scores_centralization(const btwc_scores* s, char** out) {
  return guard([&] {
    check(s != nullptr, "scores handle is null");
    check(out != nullptr, "output pointer is null");
    auto summary = btwc::graph_centralization(s->sv);
    *out = dup_string(btwc::to_string(summary.centralization));
  });
}

btwc_status btwc_scores_max_vertex(const btwc_scores* s, int32_t* out) {
  return guard([&] {
    check(s != nullptr, "scores handle is null");
    check(out != nullptr, "output pointer is null");
    check(s->sv.n() > 0, "empty score vector");
    btwc::Vertex best = 0;
    for (btwc::Vertex v = 1; v < s->sv.n(); ++v)
      if (s->sv.scores[v] > s->sv.scores[best]) best = v;
    *out = best;
  });
}

int btwc_scores_equal(const btwc_scores* a, const btwc_scores* b) {
  if (!a || !b || a->sv.n() != b->sv.n()) return 0;
  for (btwc::Vertex v = 0; v < a->sv.n(); ++v)
    if (a->sv.scores[v] != b->sv.scores[v]) return 0;
  return 1;
}

btwc_status btwc_scores_max_abs_diff(const btwc_scores* a,
                                     const btwc_scores* b, char** out) {
  return guard([&] {
    check(a != nullptr && b != nullptr, "scores handle is null");
    check(out != nullptr, "output pointer is null");
    check(a->sv.n() == b->sv.n(), "score vectors differ in order");
    btwc::Rat worst(0);
    for (btwc::Vertex v = 0; v < a->sv.n(); ++v) {
      btwc::Rat d = abs(a->sv.scores[v] - b->sv.scores[v]);
      if (d > worst) worst = d;
    }
    *out = dup_string(btwc::to_string(worst));
  });
}

btwc_status btwc_random_tree(int32_t n, uint64_t seed, btwc_graph** out) {
  return guard([&] {
    check(out != nullptr, "output pointer is null");
    btwc::Rng rng(seed);
    *out = new btwc_graph{btwc::random_tree(n, rng)};
  });
}

btwc_status btwc_random_connected(int32_t n, double p, uint64_t seed,
                                  btwc_graph** out) {
  return guard([&] {
    check(out != nullptr, "output pointer is null");
    btwc::Rng rng(seed);
    *out = new btwc_graph{btwc::random_connected_gnp(n, p, rng)};
  });
}

}  // extern "C"
