#pragma once

#include <random>
#include <string>
#include <vector>

#include "actbij/graph_io.hpp"
#include "actbij/oriented_matroid.hpp"

namespace fixtures {

using actbij::ElementSet;
using actbij::OrderedDigraph;
using actbij::OrientedMatroid;

inline OrderedDigraph digraph(std::vector<std::string> vertices,
                              std::vector<std::pair<std::string, std::string>> edges) {
  return OrderedDigraph{std::move(vertices), std::move(edges)};
}

// 1=ab 2=ac 3=bc, a->b a->c b->c
inline OrderedDigraph k3_graph() { return digraph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}); }

// 1=ab 2=ac 3=bc 4=ad 5=bd 6=cd, all alphabetically forward
inline OrderedDigraph k4_graph() {
  return digraph({"a", "b", "c", "d"},
                 {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"}});
}

// Planar graph whose cyclic flats are 35, 1345 and 246: 3 and 5 parallel.
inline OrderedDigraph flats_example_graph() {
  return digraph({"a", "b", "c", "d"},
                 {{"a", "d"}, {"a", "c"}, {"b", "d"}, {"a", "b"}, {"b", "d"}, {"b", "c"}});
}

inline OrientedMatroid k3() { return actbij::om_from_digraph(k3_graph()); }
inline OrientedMatroid k4() { return actbij::om_from_digraph(k4_graph()); }
inline OrientedMatroid flats_example() { return actbij::om_from_digraph(flats_example_graph()); }

inline ElementSet set(std::initializer_list<int> elems) { return ElementSet::of(elems); }

inline OrientedMatroid isthmus() { return actbij::om_from_lists(1, {}, {{set({1}), {}}}); }
inline OrientedMatroid loop() { return actbij::om_from_lists(1, {{set({1}), {}}}, {}); }

// Random multigraph with up to max_edges edges on 2..max_vertices vertices.
// Loops and parallel edges occur with the given weights.
inline OrderedDigraph random_multigraph(std::mt19937& rng, int min_edges, int max_edges, int max_vertices,
                                        bool allow_loops = true) {
  std::uniform_int_distribution<int> nv_dist(2, max_vertices);
  std::uniform_int_distribution<int> ne_dist(min_edges, max_edges);
  std::uniform_int_distribution<int> coin(0, 9);
  const int nv = nv_dist(rng);
  const int ne = ne_dist(rng);
  std::vector<std::string> vs;
  for (int v = 0; v < nv; ++v) vs.push_back("v" + std::to_string(v));
  std::uniform_int_distribution<int> pick(0, nv - 1);
  std::vector<std::pair<std::string, std::string>> es;
  for (int k = 0; k < ne; ++k) {
    int t = pick(rng), h = pick(rng);
    if (!allow_loops || coin(rng) != 0)
      while (h == t) h = pick(rng);
    es.emplace_back(vs[t], vs[h]);
  }
  return digraph(vs, es);
}

// Random graph whose matroid is connected with at least two elements,
// by rejection.
inline OrderedDigraph random_connected_matroid_graph(std::mt19937& rng, int min_edges, int max_edges,
                                                     int max_vertices) {
  for (;;) {
    auto g = random_multigraph(rng, min_edges, max_edges, max_vertices, false);
    auto m = actbij::om_from_digraph(g);
    if (m.size() >= 2 && actbij::is_connected(m)) return g;
  }
}

}  // namespace fixtures
