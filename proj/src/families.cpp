#include "arbor/families.hpp"

#include <functional>
#include <map>

#include "arbor/errors.hpp"

namespace arbor::families {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph star(int leaves) {
  require(leaves >= 0, "star needs leaves >= 0");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph wheel(int c) {
  require(c >= 3, "wheel needs a cycle of length >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= c; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % c + 1);
  }
  return Graph(c + 1, e);
}

std::vector<VertexSet> wheel7_forests() {
  return {
      VertexSet::of({1, 2, 3, 4, 5, 6}),
      VertexSet::of({5, 6, 7, 1, 2, 3}),
      VertexSet::of({0, 1, 3, 5}),
      VertexSet::of({0, 2, 4, 6}),
      VertexSet::of({0, 7, 2, 4}),
  };
}

Graph subdivided_complete(int t) {
  require(t >= 2, "subdivided complete graph needs t >= 2");
  std::vector<std::pair<int, int>> e;
  int s = t;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j, ++s) {
      e.emplace_back(i, s);
      e.emplace_back(s, j);
    }
  }
  return Graph(s, e);
}

std::pair<VertexSet, VertexSet> subdivided_complete_halves(int t) {
  require(t >= 2, "subdivided complete graph needs t >= 2");
  VertexSet g1, g2;
  int s = t;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j, ++s) {
      g1 |= VertexSet::of({i, s});
      g2 |= VertexSet::of({j, s});
    }
  }
  return {g1, g2};
}

Graph pendant_double_subdivided_complete(int t, int k) {
  require(t >= 2 && k >= 1, "needs t >= 2 and k >= 1");
  std::vector<std::pair<int, int>> e;
  int next = t;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      int a = next++, b = next++;
      e.emplace_back(i, a);
      e.emplace_back(a, b);
      e.emplace_back(b, j);
      for (int p = 0; p < k - 1; ++p) e.emplace_back(a, next++);
    }
  }
  require(next <= kMaxVertices, "graph exceeds the vertex cap");
  return Graph(next, e);
}

std::vector<std::pair<int, int>> balanced_orientation(int t) {
  require(t >= 2, "orientation needs t >= 2");
  int odd = t % 2 == 1 ? t : t - 1;
  // Hierholzer on K_odd, always taking the least unused neighbour.
  std::vector<VertexSet> unused(odd);
  for (int v = 0; v < odd; ++v) unused[v] = VertexSet::range(odd).without(v);
  std::vector<int> stack{0}, circuit;
  while (!stack.empty()) {
    int v = stack.back();
    if (unused[v].empty()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      int w = unused[v].first();
      unused[v].erase(w);
      unused[w].erase(v);
      stack.push_back(w);
    }
  }
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = circuit.size() - 1; i > 0; --i) arcs.emplace_back(circuit[i], circuit[i - 1]);
  if (odd != t) {
    int x = t - 1;
    for (int v = 0; v < odd; ++v) {
      if (v % 2 == 0) {
        arcs.emplace_back(x, v);
      } else {
        arcs.emplace_back(v, x);
      }
    }
  }
  return arcs;
}

std::optional<std::vector<VertexSet>> pendant_double_subdivided_cover(int t, int k) {
  if (t < 2 * k + 2) return std::nullopt;
  // Recompute the numbering used by the generator.
  std::map<std::pair<int, int>, std::pair<int, int>> sub;  // (i,j) -> (a,b)
  VertexSet t1, t2, t3, originals = VertexSet::range(t);
  int next = t;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      int a = next++, b = next++;
      sub[{i, j}] = {a, b};
      t1 |= VertexSet::of({a, b});
      for (int p = 0; p < k - 1; ++p) t1.insert(next++);
    }
  }
  t2 = t3 = originals;
  for (auto [u, v] : balanced_orientation(t)) {
    auto [a, b] = sub.at({std::min(u, v), std::max(u, v)});
    int at_u = u < v ? a : b;
    int at_v = u < v ? b : a;
    t2.insert(at_u);
    t3.insert(at_v);
  }
  return std::vector<VertexSet>{t1, t2, t3};
}

Graph clique_plus_tail(int n, int k) {
  require(n >= 1 && k >= 1, "needs n >= 1 and k >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  }
  for (int v = n; v < n + k - 1; ++v) e.emplace_back(v, v + 1);
  return Graph(n + k, e);
}

Graph saw_graph(int k) {
  require(k >= 2, "saw graph needs k >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < 2 * k; ++i) e.emplace_back(i, i + 1);
  for (int i = 1; i <= 2 * k - 1; ++i) {
    int w = 2 * k + i - 1;
    e.emplace_back(w, i - 1);
    e.emplace_back(w, i);
  }
  return Graph(4 * k - 1, e);
}

Biclique subdivided_biclique(int n) {
  require(n >= 1, "biclique needs n >= 1");
  int total = 2 * n + n * n;
  require(total <= kMaxVertices, "graph exceeds the vertex cap");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int s = 2 * n + i * n + j;
      e.emplace_back(i, s);
      e.emplace_back(s, n + j);
    }
  }
  Biclique b{Graph(total, e), VertexSet::range(total), VertexSet::range(total)};
  for (int i = 1; i < n; ++i) {
    b.t1.erase(i);
    b.t2.erase(n + i);
  }
  return b;
}

Graph triangle_with_pendants() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

Graph td3_extremal(int k) {
  require(k >= 2, "td3 extremal graph needs k >= 2");
  std::vector<std::pair<int, int>> e;
  int z = k;
  for (int y = 1; y <= k - 1; ++y) {
    e.emplace_back(0, y);
    e.emplace_back(z, y);
  }
  for (int leaf = k + 1; leaf <= 2 * k; ++leaf) e.emplace_back(0, leaf);
  return Graph(2 * k + 1, e);
}

namespace {

struct Entry {
  int arity;
  std::function<Graph(const std::vector<int>&)> make;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = {
      {"path", {1, [](const auto& p) { return path(p[0]); }}},
      {"cycle", {1, [](const auto& p) { return cycle(p[0]); }}},
      {"complete", {1, [](const auto& p) { return complete(p[0]); }}},
      {"star", {1, [](const auto& p) { return star(p[0]); }}},
      {"wheel", {1, [](const auto& p) { return wheel(p[0]); }}},
      {"subdivided-complete", {1, [](const auto& p) { return subdivided_complete(p[0]); }}},
      {"pendant-double-subdivided",
       {2, [](const auto& p) { return pendant_double_subdivided_complete(p[0], p[1]); }}},
      {"clique-tail", {2, [](const auto& p) { return clique_plus_tail(p[0], p[1]); }}},
      {"saw", {1, [](const auto& p) { return saw_graph(p[0]); }}},
      {"biclique-sub", {1, [](const auto& p) { return subdivided_biclique(p[0]).graph; }}},
      {"triangle-pendants", {0, [](const auto&) { return triangle_with_pendants(); }}},
      {"td3-extremal", {1, [](const auto& p) { return td3_extremal(p[0]); }}},
  };
  return r;
}

}  // namespace

Graph generate(const std::string& family, const std::vector<int>& params) {
  auto it = registry().find(family);
  if (it == registry().end()) throw InputError("unknown family '" + family + "'");
  if (static_cast<int>(params.size()) != it->second.arity) {
    throw InputError("family '" + family + "' takes " + std::to_string(it->second.arity) + " parameter(s)");
  }
  return it->second.make(params);
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

}  // namespace arbor::families
