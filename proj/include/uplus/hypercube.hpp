#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uplus/word.hpp"

namespace uplus {

/// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  SimpleGraph() = default;
  /// Duplicate edges are coalesced; self-loops throw std::invalid_argument.
  SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted, each edge stored once with first < second.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const;

  /// Breadth-first distances from source; unreachable vertices get nullopt.
  std::vector<std::optional<std::size_t>> distances(std::size_t source) const;
  /// nullopt when disconnected or empty.
  std::optional<std::size_t> diameter() const;
  bool is_regular(std::size_t degree) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Edge> edges_;
};

enum class Color { Black, White };

/// The graph on degree-(k+1) star classes, joining the two classes of every
/// two-factor star product, with its proper 2-coloring.
class HypercubeGraph {
 public:
  HypercubeGraph(std::size_t k, std::vector<StarClass> vertices, SimpleGraph graph, std::vector<Color> colors);

  std::size_t k() const noexcept { return k_; }
  const std::vector<StarClass>& vertices() const noexcept { return vertices_; }
  const SimpleGraph& graph() const noexcept { return graph_; }
  Color color(std::size_t v) const { return colors_.at(v); }
  Color color(const StarClass& c) const { return colors_.at(index_of(c)); }
  /// Throws std::out_of_range for a class not in the graph.
  std::size_t index_of(const StarClass& c) const;

  /// One "u v" line per edge, using representative words.
  std::string edge_list() const;
  std::string to_dot() const;

 private:
  std::size_t k_;
  std::vector<StarClass> vertices_;
  SimpleGraph graph_;
  std::vector<Color> colors_;
};

/// Throws std::invalid_argument for k = 0 and NotBipartiteError if the
/// breadth-first 2-coloring finds an odd cycle.
HypercubeGraph build_graph(std::size_t k);

/// The k-dimensional hypercube Q_k on bit strings 0..2^k-1.
SimpleGraph hypercube(std::size_t k);

/// Explicit isomorphism search against Q_k, pruned by degree and by
/// distance from a fixed root.
bool verify_hypercube_iso(const SimpleGraph& g, std::size_t k);
inline bool verify_hypercube_iso(const HypercubeGraph& g) { return verify_hypercube_iso(g.graph(), g.k()); }

/// Necessary conditions only: 2^k vertices, k-regular, diameter k.
bool hypercube_invariants_hold(const SimpleGraph& g, std::size_t k);

}  // namespace uplus
