#include "biq/conjugation.hpp"

#include "biq/error.hpp"

namespace biq::conjugation {

namespace {

void check_vertex(const Biquiver& g, Vertex u) {
  if (u < 0 || u >= g.vertex_count())
    throw ValidationError("vertex " + std::to_string(u + 1) + " out of range");
}

}  // namespace

Biquiver conjugate_biquiver(const Biquiver& g, Vertex u) {
  check_vertex(g, u);
  std::vector<Arrow> arrows = g.arrows();
  for (auto& a : arrows) {
    if (a.is_loop() || (a.from != u && a.to != u))
      continue;
    a.kind = a.is_dashed() ? ArrowKind::Full : ArrowKind::Dashed;
  }
  return {g.vertex_count(), std::move(arrows)};
}

MatrixRepresentation conjugate_representation(const MatrixRepresentation& a, Vertex u) {
  const Biquiver& g = a.biquiver();
  check_vertex(g, u);
  std::vector<CMatrix> ms = a.matrices();
  for (std::size_t k = 0; k < g.arrow_count(); ++k)
    if (g.arrow(k).from == u)
      ms[k] = ms[k].conj();
  return {conjugate_biquiver(g, u), a.dims(), std::move(ms)};
}

BaseChange transport_isomorphism(std::span<const CMatrix> s, Vertex u) {
  if (u < 0 || static_cast<std::size_t>(u) >= s.size())
    throw ValidationError("vertex " + std::to_string(u + 1) + " out of range");
  BaseChange r(s.begin(), s.end());
  r[u] = r[u].conj();
  return r;
}

EliminationResult dash_elimination_plan(const Biquiver& g) {
  if (!is_connected(g))
    throw PreconditionError("biquiver is not connected");
  for (const auto& a : g.arrows())
    if (a.is_loop() && a.is_dashed())
      return Impossible{"dashed loop at " + std::to_string(a.from + 1) + " ('" + a.id + "')"};

  SpanningForest forest(g);
  std::vector<int> c(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : forest.order()) {
    int e = forest.parent_arrow(v);
    if (e < 0)
      continue;
    c[v] = c[forest.parent(v)] ^ static_cast<int>(g.arrow(static_cast<std::size_t>(e)).is_dashed());
  }
  for (std::size_t k = 0; k < g.arrow_count(); ++k) {
    const Arrow& a = g.arrow(k);
    if (a.is_loop() || forest.in_forest(k))
      continue;
    if ((c[a.from] ^ c[a.to]) != static_cast<int>(a.is_dashed())) {
      std::string ids = a.id;
      for (std::size_t e : forest.path(a.to, a.from))
        ids += "," + g.arrow(e).id;
      return Impossible{"odd dashed parity on cycle <" + ids + ">"};
    }
  }
  ConjugationPlan plan;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (c[v])
      plan.vertices.insert(v);
  return plan;
}

Biquiver apply_plan(const Biquiver& g, const ConjugationPlan& plan) {
  Biquiver out = g;
  for (Vertex v : plan.vertices)
    out = conjugate_biquiver(out, v);
  return out;
}

MatrixRepresentation apply_plan(const MatrixRepresentation& a, const ConjugationPlan& plan) {
  MatrixRepresentation out = a;
  for (Vertex v : plan.vertices)
    out = conjugate_representation(out, v);
  return out;
}

}  // namespace biq::conjugation
