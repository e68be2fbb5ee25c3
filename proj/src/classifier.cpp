#include "biq/classifier.hpp"

#include "biq/error.hpp"
#include "biq/tits.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace biq::classify {

std::string DiagramLabel::name() const {
  static constexpr std::array<const char*, 6> prefix{"A", "D", "E", "~A", "~D", "~E"};
  return prefix[static_cast<std::size_t>(family)] + std::to_string(index);
}

std::optional<DiagramLabel> parse_label(std::string_view name) {
  bool extended = !name.empty() && name.front() == '~';
  if (extended)
    name.remove_prefix(1);
  if (name.size() < 2)
    return std::nullopt;
  Family f;
  switch (name.front()) {
    case 'A':
      f = extended ? Family::ExtendedA : Family::A;
      break;
    case 'D':
      f = extended ? Family::ExtendedD : Family::D;
      break;
    case 'E':
      f = extended ? Family::ExtendedE : Family::E;
      break;
    default:
      return std::nullopt;
  }
  int index = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9')
      return std::nullopt;
    index = index * 10 + (ch - '0');
  }
  return DiagramLabel{f, index};
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Finite:
      return "Finite";
    case Kind::TameInfinite:
      return "TameInfinite";
    case Kind::Wild:
      return "Wild";
  }
  return "";
}

namespace {

// Vertices of each branch hanging off `centre`, walking outward until a leaf.
// Returns nullopt if a branch meets another vertex of degree > 2.
std::optional<std::vector<int>> branch_lengths(const std::vector<std::vector<Vertex>>& adj,
                                               const std::vector<int>& deg, Vertex centre) {
  std::vector<int> lengths;
  for (Vertex start : adj[centre]) {
    int len = 0;
    Vertex prev = centre;
    Vertex cur = start;
    while (true) {
      ++len;
      if (deg[cur] == 1)
        break;
      if (deg[cur] != 2)
        return std::nullopt;
      Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::optional<DiagramLabel> tree_shape(const Biquiver& g, const std::vector<int>& deg) {
  const int t = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(t));
  for (const auto& a : g.arrows()) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  std::vector<Vertex> branch;
  int max_deg = 0;
  for (Vertex v = 0; v < t; ++v) {
    max_deg = std::max(max_deg, deg[v]);
    if (deg[v] >= 3)
      branch.push_back(v);
  }
  if (max_deg <= 2)
    return DiagramLabel{Family::A, t};
  if (max_deg > 4)
    return std::nullopt;
  if (max_deg == 4) {
    // ~D4: one centre with four leaves
    if (branch.size() == 1 && t == 5)
      return DiagramLabel{Family::ExtendedD, 4};
    return std::nullopt;
  }
  if (branch.size() == 1) {
    auto lengths = branch_lengths(adj, deg, branch.front());
    if (!lengths)
      return std::nullopt;
    const auto& l = *lengths;
    if (l[0] == 1 && l[1] == 1)
      return DiagramLabel{Family::D, t};
    if (l[0] == 1 && l[1] == 2 && l[2] <= 4)
      return DiagramLabel{Family::E, t};  // E6, E7, E8
    if (l == std::vector<int>{1, 2, 5})
      return DiagramLabel{Family::ExtendedE, 8};
    if (l == std::vector<int>{1, 3, 3})
      return DiagramLabel{Family::ExtendedE, 7};
    if (l == std::vector<int>{2, 2, 2})
      return DiagramLabel{Family::ExtendedE, 6};
    return std::nullopt;
  }
  if (branch.size() == 2) {
    // ~D_{t-1}, t >= 6: two degree-3 vertices, each carrying two leaves.
    for (Vertex b : branch) {
      int leaves = 0;
      for (Vertex w : adj[b])
        if (deg[w] == 1)
          ++leaves;
      if (leaves != 2)
        return std::nullopt;
    }
    return DiagramLabel{Family::ExtendedD, t - 1};
  }
  return std::nullopt;
}

}  // namespace

std::optional<DiagramLabel> diagram_shape(const Biquiver& g) {
  if (!is_connected(g))
    throw PreconditionError("biquiver is not connected");
  const int t = g.vertex_count();
  const auto arrows = static_cast<int>(g.arrow_count());
  auto deg = degrees(g);
  if (arrows == t - 1)
    return tree_shape(g, deg);  // connected with t-1 edges: a tree, so no loops or parallels
  if (arrows == t && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
    return DiagramLabel{Family::ExtendedA, t - 1};
  return std::nullopt;
}

RepType representation_type(const Biquiver& g) {
  auto shape = diagram_shape(g);
  RepType out;
  if (!shape)
    out.kind = Kind::Wild;
  else
    out.kind = shape->is_extended() ? Kind::TameInfinite : Kind::Finite;
  out.diagram = shape;
#ifndef NDEBUG
  auto d = tits::definiteness(tits::gram_matrix(g));
  bool consistent = (out.kind == Kind::Finite) == (d == tits::Definiteness::PositiveDefinite) &&
                    (out.kind != Kind::Wild) == (d != tits::Definiteness::Indefinite);
  if (!consistent)
    throw std::logic_error("shape table disagrees with Tits definiteness for " + serialize_biquiver(g));
#endif
  return out;
}

}  // namespace biq::classify
