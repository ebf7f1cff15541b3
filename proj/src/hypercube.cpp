#include "uplus/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "uplus/errors.hpp"
#include "uplus/invariant.hpp"

namespace uplus {

SimpleGraph::SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges) : adjacency_(vertex_count) {
  std::set<Edge> unique;
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in simple graph");
    unique.insert(std::minmax(u, v));
  }
  edges_.assign(unique.begin(), unique.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::optional<std::size_t>> SimpleGraph::distances(std::size_t source) const {
  std::vector<std::optional<std::size_t>> dist(vertex_count());
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adjacency_[u])
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

std::optional<std::size_t> SimpleGraph::diameter() const {
  if (vertex_count() == 0) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t s = 0; s < vertex_count(); ++s)
    for (const auto& d : distances(s)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  return best;
}

bool SimpleGraph::is_regular(std::size_t degree) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [degree](const auto& nbrs) { return nbrs.size() == degree; });
}

HypercubeGraph::HypercubeGraph(std::size_t k, std::vector<StarClass> vertices, SimpleGraph graph,
                               std::vector<Color> colors)
    : k_(k), vertices_(std::move(vertices)), graph_(std::move(graph)), colors_(std::move(colors)) {
  if (vertices_.size() != graph_.vertex_count() || colors_.size() != vertices_.size())
    throw std::invalid_argument("vertex, graph and coloring sizes disagree");
}

std::size_t HypercubeGraph::index_of(const StarClass& c) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c);
  if (it == vertices_.end() || *it != c) throw std::out_of_range("class " + c.rep().str() + " is not a vertex");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::string HypercubeGraph::edge_list() const {
  std::ostringstream out;
  for (auto [u, v] : graph_.edges()) out << vertices_[u].rep().str() << ' ' << vertices_[v].rep().str() << '\n';
  return out.str();
}

std::string HypercubeGraph::to_dot() const {
  std::ostringstream out;
  out << "graph gamma_" << k_ + 1 << " {\n";
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const bool black = colors_[v] == Color::Black;
    out << "  " << vertices_[v].rep().str() << " [style=filled, fillcolor=" << (black ? "black" : "white")
        << ", fontcolor=" << (black ? "white" : "black") << "];\n";
  }
  for (auto [u, v] : graph_.edges()) out << "  " << vertices_[u].rep().str() << " -- " << vertices_[v].rep().str() << ";\n";
  out << "}\n";
  return out.str();
}

HypercubeGraph build_graph(std::size_t k) {
  if (k == 0) throw std::invalid_argument("graph requires k >= 1");
  std::vector<StarClass> vertices = graded_component(k + 1);
  std::map<StarClass, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);

  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t d1 = 1; d1 <= k; ++d1) {
    const auto left = graded_component(d1);
    const auto right = graded_component(k + 1 - d1);
    for (const auto& c1 : left)
      for (const auto& c2 : right) {
        auto [s, t] = star_product(c1, c2);
        edges.emplace_back(index.at(s), index.at(t));
      }
  }
  SimpleGraph graph(vertices.size(), edges);

  std::vector<std::optional<Color>> color(vertices.size());
  for (std::size_t root = 0; root < vertices.size(); ++root) {
    if (color[root]) continue;
    color[root] = Color::Black;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      const Color other = *color[u] == Color::Black ? Color::White : Color::Black;
      for (std::size_t v : graph.neighbors(u)) {
        if (!color[v]) {
          color[v] = other;
          queue.push_back(v);
        } else if (*color[v] != other) {
          throw NotBipartiteError("odd cycle through " + vertices[u].rep().str() + " and " + vertices[v].rep().str());
        }
      }
    }
  }
  std::vector<Color> colors;
  colors.reserve(color.size());
  for (const auto& c : color) colors.push_back(*c);
  return HypercubeGraph(k, std::move(vertices), std::move(graph), std::move(colors));
}

SimpleGraph hypercube(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < k; ++b)
      if (const std::size_t u = v ^ (std::size_t{1} << b); v < u) edges.emplace_back(v, u);
  return SimpleGraph(n, edges);
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const SimpleGraph& g, std::size_t k) : g_(g), k_(k), image_(g.vertex_count()), used_(g.vertex_count()) {
    const auto dist = g.distances(0);
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (!dist[v]) throw std::logic_error("disconnected graph reached the search");
      depth_.push_back(*dist[v]);
    }
    order_.resize(g.vertex_count());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return depth_[a] < depth_[b]; });
  }

  bool run() {
    // Q_k is vertex-transitive, so the root may be pinned to 0.
    image_[0] = 0;
    used_[0] = true;
    return extend(1);
  }

 private:
  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const std::size_t v = order_[pos];
    std::size_t parent = 0;
    for (std::size_t u : g_.neighbors(v))
      if (depth_[u] + 1 == depth_[v]) {
        parent = u;
        break;
      }
    for (std::size_t b = 0; b < k_; ++b) {
      const std::size_t cand = image_[parent] ^ (std::size_t{1} << b);
      if (used_[cand] || static_cast<std::size_t>(std::popcount(cand)) != depth_[v]) continue;
      if (!consistent(pos, v, cand)) continue;
      image_[v] = cand;
      used_[cand] = true;
      if (extend(pos + 1)) return true;
      used_[cand] = false;
    }
    return false;
  }

  bool consistent(std::size_t pos, std::size_t v, std::size_t cand) const {
    for (std::size_t i = 0; i < pos; ++i) {
      const std::size_t u = order_[i];
      const bool in_g = g_.adjacent(u, v);
      const bool in_q = std::popcount(image_[u] ^ cand) == 1;
      if (in_g != in_q) return false;
    }
    return true;
  }

  const SimpleGraph& g_;
  std::size_t k_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

bool verify_hypercube_iso(const SimpleGraph& g, std::size_t k) {
  if (k >= 8 * sizeof(std::size_t) - 1) return false;
  if (g.vertex_count() != (std::size_t{1} << k)) return false;
  if (!g.is_regular(k)) return false;
  if (k == 0) return true;
  const auto dist = g.distances(0);
  if (std::any_of(dist.begin(), dist.end(), [](const auto& d) { return !d; })) return false;
  return IsoSearch(g, k).run();
}

bool hypercube_invariants_hold(const SimpleGraph& g, std::size_t k) {
  if (g.vertex_count() != (std::size_t{1} << k) || !g.is_regular(k)) return false;
  const auto diam = g.diameter();
  return diam && *diam == k;
}

}  // namespace uplus
