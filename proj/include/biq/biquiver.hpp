#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace biq {

/// 0-based vertex index. Files and the CLI use 1-based numbering.
using Vertex = int;

enum class ArrowKind { Full, Dashed };

std::string_view to_string(ArrowKind kind);

struct Arrow {
  std::string id;
  Vertex from = 0;
  Vertex to = 0;
  ArrowKind kind = ArrowKind::Full;

  bool is_loop() const { return from == to; }
  bool is_dashed() const { return kind == ArrowKind::Dashed; }

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Vertex dimensions of a representation, indexed like the biquiver's vertices.
using DimensionVector = std::vector<int>;

/// Directed multigraph on vertices 0..t-1 with full and dashed arrows.
/// Loops and parallel arrows are allowed; arrow ids are unique.
class Biquiver {
public:
  Biquiver() = default;
  /// Throws ValidationError on out-of-range endpoints or duplicate ids.
  Biquiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrow_count() const { return arrows_.size(); }
  const Arrow& arrow(std::size_t index) const { return arrows_[index]; }

  /// Position of the arrow with this id; throws ValidationError if absent.
  std::size_t index_of(std::string_view id) const;
  bool has_arrow(std::string_view id) const;

  std::size_t dashed_count() const;

  friend bool operator==(const Biquiver&, const Biquiver&) = default;

private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

/// Parses the biquiver JSON document
///   {"vertices": t, "arrows": [{"id", "from", "to", "kind": "full"|"dashed"}]}
/// with 1-based endpoints. Throws ParseError / ValidationError.
Biquiver parse_biquiver(std::string_view text);

/// Canonical compact JSON; parse_biquiver(serialize_biquiver(g)) == g.
std::string serialize_biquiver(const Biquiver& g);

/// A dashed-parity record for one fundamental cycle (or loop).
struct CycleParity {
  std::vector<std::string> arrows;
  bool odd = false;
};

struct UnderlyingStructure {
  bool connected = false;
  bool is_tree = false;
  std::vector<int> loops;  // loop count per vertex
  /// Unordered vertex pairs (u < v) joined by two or more non-loop arrows.
  std::map<std::pair<Vertex, Vertex>, int> multiedges;
  /// Vertices of degree 1 in the underlying undirected graph (loops count 2).
  std::vector<Vertex> pendant_vertices;
  /// One entry per arrow outside a spanning forest, loops included.
  std::vector<CycleParity> cycles;
};

UnderlyingStructure underlying_structure(const Biquiver& g);

bool is_connected(const Biquiver& g);

/// Undirected degree of every vertex; a loop adds 2.
std::vector<int> degrees(const Biquiver& g);

struct Component {
  Biquiver graph;
  std::vector<Vertex> vertices;  // original index of each vertex of `graph`
};

std::vector<Component> connected_components(const Biquiver& g);

/// Undirected path between two vertices along a spanning forest, as arrow indices.
/// Used by the cycle reports of the structural query and the dash-elimination planner.
class SpanningForest {
public:
  explicit SpanningForest(const Biquiver& g);

  bool in_forest(std::size_t arrow) const { return in_forest_[arrow]; }
  /// Arrow indices on the forest path from u to v (same component required).
  std::vector<std::size_t> path(Vertex u, Vertex v) const;
  Vertex root_of(Vertex v) const;
  const std::vector<Vertex>& order() const { return order_; }
  /// Forest arrow connecting v to its parent, or -1 for roots.
  int parent_arrow(Vertex v) const { return parent_arrow_[v]; }
  Vertex parent(Vertex v) const { return parent_[v]; }

private:
  std::vector<bool> in_forest_;
  std::vector<Vertex> parent_;
  std::vector<int> parent_arrow_;
  std::vector<int> depth_;
  std::vector<Vertex> order_;  // BFS order
};

}  // namespace biq
