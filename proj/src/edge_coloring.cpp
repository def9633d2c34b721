#include <algorithm>

#include "arbor/acyclic_cover.hpp"
#include "arbor/errors.hpp"

namespace arbor {

namespace {

class MisraGries {
 public:
  explicit MisraGries(const Graph& g) : g_(g), n_(g.order()), col_(n_ * n_, -1) {
    for (int v = 0; v < n_; ++v) palette_ = std::max(palette_, g.degree(v) + 1);
  }

  std::vector<int> run() {
    for (const Edge& e : g_.edges()) color_edge(e.u, e.v);
    std::vector<int> out;
    for (const Edge& e : g_.edges()) out.push_back(get(e.u, e.v));
    return out;
  }

 private:
  int get(int a, int b) const { return col_[a * n_ + b]; }
  void set(int a, int b, int c) { col_[a * n_ + b] = col_[b * n_ + a] = c; }

  bool is_free(int v, int c) const {
    for (int w : g_.neighbors(v)) {
      if (get(v, w) == c) return false;
    }
    return true;
  }

  int free_color(int v) const {
    for (int c = 0; c < palette_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw VerificationError("edge colouring ran out of colours");
  }

  int neighbor_with(int v, int c) const {
    for (int w : g_.neighbors(v)) {
      if (get(v, w) == c) return w;
    }
    return -1;
  }

  void color_edge(int u, int v) {
    // Maximal fan at u starting with v.
    std::vector<int> fan{v};
    VertexSet in_fan = VertexSet::single(v);
    for (bool grown = true; grown;) {
      grown = false;
      for (int w : g_.neighbors(u) - in_fan) {
        int c = get(u, w);
        if (c >= 0 && is_free(fan.back(), c)) {
          fan.push_back(w);
          in_fan.insert(w);
          grown = true;
          break;
        }
      }
    }
    int c = free_color(u);
    int d = free_color(fan.back());
    // Invert the cd-path starting at u.
    std::vector<std::pair<int, int>> path;
    int cur = u, want = d;
    for (int next = neighbor_with(cur, want); next >= 0; next = neighbor_with(cur, want)) {
      path.emplace_back(cur, next);
      cur = next;
      want = want == d ? c : d;
      if (path.size() > static_cast<std::size_t>(g_.size())) break;
    }
    for (auto [a, b] : path) set(a, b, get(a, b) == d ? c : d);
    // First fan vertex w with d free whose prefix is still a fan.
    std::size_t stop = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0 && !is_free(fan[i - 1], get(u, fan[i]))) break;
      if (is_free(fan[i], d)) {
        stop = i;
        break;
      }
    }
    if (stop == fan.size()) throw VerificationError("edge colouring fan rotation failed");
    for (std::size_t i = 0; i < stop; ++i) set(u, fan[i], get(u, fan[i + 1]));
    set(u, fan[stop], d);
  }

  const Graph& g_;
  int n_;
  std::vector<int> col_;
  int palette_ = 1;
};

}  // namespace

std::vector<int> edge_coloring(const Graph& g) {
  std::vector<int> colors = MisraGries(g).run();
  int delta = 0;
  for (int v = 0; v < g.order(); ++v) delta = std::max(delta, g.degree(v));
  for (int v = 0; v < g.order(); ++v) {
    std::vector<bool> seen(delta + 1, false);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      if (e.u != v && e.v != v) continue;
      int c = colors[i];
      if (c < 0 || c > delta || seen[c]) throw VerificationError("edge colouring is not proper");
      seen[c] = true;
    }
  }
  return colors;
}

std::vector<std::vector<Edge>> matching_decomposition(const Graph& g) {
  std::vector<int> colors = edge_coloring(g);
  int top = 0;
  for (int c : colors) top = std::max(top, c + 1);
  std::vector<std::vector<Edge>> out(top);
  for (std::size_t i = 0; i < colors.size(); ++i) out[colors[i]].push_back(g.edges()[i]);
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& m) { return m.empty(); }), out.end());
  return out;
}

}  // namespace arbor
