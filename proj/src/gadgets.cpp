#include "biq/gadgets.hpp"

#include "biq/error.hpp"

#include <set>

namespace biq::gadgets {

namespace {

std::size_t checked_block_size(const CMatrix& p, const CMatrix& q) {
  if (!p.is_square() || !q.is_square() || p.rows() != q.rows())
    throw ValidationError("P and Q must be square of equal size");
  return p.rows();
}

// Vertices visited by the walk alpha_1..alpha_r, or nullopt if it is not a simple cycle.
std::optional<std::vector<Vertex>> walk_cycle(const Biquiver& g, const std::vector<std::size_t>& arrows) {
  if (arrows.empty())
    return std::nullopt;
  const Arrow& first = g.arrow(arrows.front());
  if (arrows.size() == 1) {
    if (!first.is_loop())
      return std::nullopt;
    return std::vector<Vertex>{first.from};
  }
  for (Vertex start : {first.from, first.to}) {
    std::vector<Vertex> visited{start};
    Vertex cur = start;
    bool ok = true;
    for (std::size_t k : arrows) {
      const Arrow& a = g.arrow(k);
      if (a.is_loop() || (a.from != cur && a.to != cur)) {
        ok = false;
        break;
      }
      cur = a.from == cur ? a.to : a.from;
      visited.push_back(cur);
    }
    if (!ok || cur != start)
      continue;
    visited.pop_back();
    if (std::set<Vertex>(visited.begin(), visited.end()).size() != visited.size())
      continue;
    return visited;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::string>> find_cycle(const Biquiver& g) {
  SpanningForest forest(g);
  for (std::size_t k = 0; k < g.arrow_count(); ++k) {
    if (forest.in_forest(k))
      continue;
    const Arrow& a = g.arrow(k);
    std::vector<std::string> ids;
    if (!a.is_loop())
      for (std::size_t e : forest.path(a.to, a.from))
        ids.push_back(g.arrow(e).id);
    ids.push_back(a.id);
    return ids;
  }
  return std::nullopt;
}

MatrixRepresentation cycle(const Biquiver& g, const std::vector<std::string>& cycle_arrows, const CMatrix& m) {
  if (!m.is_square())
    throw ValidationError("cycle gadget needs a square matrix");
  std::vector<std::size_t> idx;
  for (const auto& id : cycle_arrows)
    idx.push_back(g.index_of(id));
  auto vertices = walk_cycle(g, idx);
  if (!vertices)
    throw ValidationError("designated arrows do not form a simple cycle");
  const auto n = static_cast<int>(m.rows());
  DimensionVector dims(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : *vertices)
    dims[v] = n;
  auto rep = MatrixRepresentation::zero(g, dims);
  std::vector<CMatrix> ms = rep.matrices();
  for (std::size_t k = 0; k + 1 < idx.size(); ++k)
    ms[idx[k]] = CMatrix::identity(static_cast<std::size_t>(n));
  ms[idx.back()] = m;
  return {g, dims, std::move(ms)};
}

MatrixRepresentation cycle(const Biquiver& g, const CMatrix& m) {
  auto ids = find_cycle(g);
  if (!ids)
    throw ValidationError("biquiver has no cycle");
  return cycle(g, *ids, m);
}

Biquiver biquiver(Which which) {
  switch (which) {
    case Which::G1:
      return {2, {{"alpha1", 0, 0, ArrowKind::Dashed}, {"alpha", 0, 1, ArrowKind::Full}}};
    case Which::G2:
      return {2, {{"alpha1", 0, 0, ArrowKind::Dashed}, {"alpha", 1, 0, ArrowKind::Full}}};
    case Which::G3:
      return {1, {{"alpha1", 0, 0, ArrowKind::Full}, {"alpha2", 0, 0, ArrowKind::Dashed}}};
    case Which::G4:
      return {1, {{"alpha1", 0, 0, ArrowKind::Dashed}, {"alpha2", 0, 0, ArrowKind::Dashed}}};
  }
  throw ValidationError("unknown gadget biquiver");
}

MatrixRepresentation companion(Which which, const CMatrix& p, const CMatrix& q) {
  if (which != Which::G1 && which != Which::G2)
    throw ValidationError("companion gadgets live on G1 or G2");
  const std::size_t n = checked_block_size(p, q);
  const CMatrix id = CMatrix::identity(n);
  CMatrix loop(2 * n, 2 * n);
  loop.set_block(0, n, p);
  loop.set_block(n, 0, id);
  loop.set_block(n, n, q);
  CMatrix arrow;
  if (which == Which::G1) {
    arrow = CMatrix(n, 2 * n);
    arrow.set_block(0, n, id);
  } else {
    arrow = CMatrix(2 * n, n);
    arrow.set_block(0, 0, id);
  }
  const int d = static_cast<int>(n);
  return {biquiver(which), {2 * d, d}, {loop, arrow}};
}

MatrixRepresentation shift(Which which, const CMatrix& p, const CMatrix& q) {
  const std::size_t n = checked_block_size(p, q);
  const CMatrix id = CMatrix::identity(n);
  const int d = static_cast<int>(n);
  if (which == Which::G3) {
    CMatrix m(2 * n, 2 * n);
    m.set_block(0, n, id);
    return {biquiver(which), {2 * d}, {m, block_diagonal(p, q)}};
  }
  if (which == Which::G4) {
    CMatrix m(4 * n, 4 * n);
    m.set_block(0, n, id);
    m.set_block(n, 2 * n, id);
    m.set_block(2 * n, 3 * n, id);
    CMatrix nn(4 * n, 4 * n);
    nn.set_block(n, 0, p);
    nn.set_block(3 * n, 2 * n, q);
    return {biquiver(which), {4 * d}, {m, nn}};
  }
  throw ValidationError("shift gadgets live on G3 or G4");
}

BaseChange g4_block_certificate(const CMatrix& s) {
  CMatrix sb = s.conj();
  return {block_diagonal(block_diagonal(s, sb), block_diagonal(s, sb))};
}

}  // namespace biq::gadgets
