#include "biq/biquiver.hpp"

#include "biq/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace biq {

using json = nlohmann::ordered_json;

std::string_view to_string(ArrowKind kind) { return kind == ArrowKind::Full ? "full" : "dashed"; }

Biquiver::Biquiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ < 1)
    throw ValidationError("a biquiver needs at least one vertex");
  std::set<std::string_view> ids;
  for (const auto& a : arrows_) {
    if (a.from < 0 || a.from >= vertex_count_ || a.to < 0 || a.to >= vertex_count_)
      throw ValidationError("arrow '" + a.id + "': endpoint out of range 1.." + std::to_string(vertex_count_));
    if (!ids.insert(a.id).second)
      throw ValidationError("duplicate arrow id '" + a.id + "'");
  }
}

std::size_t Biquiver::index_of(std::string_view id) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].id == id)
      return k;
  throw ValidationError("unknown arrow id '" + std::string(id) + "'");
}

bool Biquiver::has_arrow(std::string_view id) const {
  return std::any_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.id == id; });
}

std::size_t Biquiver::dashed_count() const {
  return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.is_dashed(); }));
}

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end())
    throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

int int_field(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_number_integer())
    throw ParseError(where + "." + name + ": expected an integer");
  return v.get<int>();
}

}  // namespace

Biquiver parse_biquiver(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("biquiver JSON: " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object())
    throw ParseError("biquiver JSON: top level must be an object");
  int t = int_field(doc, "vertices", "biquiver");
  const json& arrows = field(doc, "arrows", "biquiver");
  if (!arrows.is_array())
    throw ParseError("biquiver.arrows: expected an array");
  std::vector<Arrow> out;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    std::string where = "arrows[" + std::to_string(k) + "]";
    const json& a = arrows[k];
    if (!a.is_object())
      throw ParseError(where + ": expected an object");
    const json& id = field(a, "id", where);
    if (!id.is_string())
      throw ParseError(where + ".id: expected a string");
    const json& kind = field(a, "kind", where);
    if (!kind.is_string() || (kind != "full" && kind != "dashed"))
      throw ParseError(where + ".kind: expected \"full\" or \"dashed\"");
    int from = int_field(a, "from", where);
    int to = int_field(a, "to", where);
    if (from < 1 || from > t)
      throw ValidationError(where + ".from: vertex " + std::to_string(from) + " out of range 1.." + std::to_string(t));
    if (to < 1 || to > t)
      throw ValidationError(where + ".to: vertex " + std::to_string(to) + " out of range 1.." + std::to_string(t));
    out.push_back({id.get<std::string>(), from - 1, to - 1, kind == "full" ? ArrowKind::Full : ArrowKind::Dashed});
  }
  return Biquiver(t, std::move(out));
}

std::string serialize_biquiver(const Biquiver& g) {
  json doc;
  doc["vertices"] = g.vertex_count();
  doc["arrows"] = json::array();
  for (const auto& a : g.arrows())
    doc["arrows"].push_back({{"id", a.id}, {"from", a.from + 1}, {"to", a.to + 1}, {"kind", to_string(a.kind)}});
  return doc.dump();
}

SpanningForest::SpanningForest(const Biquiver& g)
    : in_forest_(g.arrow_count(), false),
      parent_(static_cast<std::size_t>(g.vertex_count()), -1),
      parent_arrow_(static_cast<std::size_t>(g.vertex_count()), -1),
      depth_(static_cast<std::size_t>(g.vertex_count()), -1) {
  const int t = g.vertex_count();
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(t));
  for (std::size_t k = 0; k < g.arrow_count(); ++k) {
    const Arrow& a = g.arrow(k);
    if (a.is_loop())
      continue;
    incident[a.from].push_back(k);
    incident[a.to].push_back(k);
  }
  for (Vertex root = 0; root < t; ++root) {
    if (depth_[root] >= 0)
      continue;
    depth_[root] = 0;
    parent_[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      order_.push_back(u);
      for (std::size_t k : incident[u]) {
        const Arrow& a = g.arrow(k);
        Vertex w = a.from == u ? a.to : a.from;
        if (depth_[w] >= 0)
          continue;
        depth_[w] = depth_[u] + 1;
        parent_[w] = u;
        parent_arrow_[w] = static_cast<int>(k);
        in_forest_[k] = true;
        queue.push_back(w);
      }
    }
  }
}

Vertex SpanningForest::root_of(Vertex v) const {
  while (parent_[v] != v)
    v = parent_[v];
  return v;
}

std::vector<std::size_t> SpanningForest::path(Vertex u, Vertex v) const {
  std::vector<std::size_t> from_u;
  std::vector<std::size_t> from_v;
  while (depth_[u] > depth_[v]) {
    from_u.push_back(static_cast<std::size_t>(parent_arrow_[u]));
    u = parent_[u];
  }
  while (depth_[v] > depth_[u]) {
    from_v.push_back(static_cast<std::size_t>(parent_arrow_[v]));
    v = parent_[v];
  }
  while (u != v) {
    if (parent_[u] == u)
      throw PreconditionError("vertices lie in different components");
    from_u.push_back(static_cast<std::size_t>(parent_arrow_[u]));
    u = parent_[u];
    from_v.push_back(static_cast<std::size_t>(parent_arrow_[v]));
    v = parent_[v];
  }
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

std::vector<int> degrees(const Biquiver& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& a : g.arrows()) {
    ++deg[a.from];
    ++deg[a.to];
  }
  return deg;
}

bool is_connected(const Biquiver& g) {
  SpanningForest forest(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (forest.root_of(v) != 0)
      return false;
  return true;
}

UnderlyingStructure underlying_structure(const Biquiver& g) {
  UnderlyingStructure s;
  SpanningForest forest(g);
  const int t = g.vertex_count();
  s.connected = is_connected(g);
  s.loops.assign(static_cast<std::size_t>(t), 0);
  std::map<std::pair<Vertex, Vertex>, int> pair_count;
  for (const auto& a : g.arrows()) {
    if (a.is_loop())
      ++s.loops[a.from];
    else
      ++pair_count[{std::min(a.from, a.to), std::max(a.from, a.to)}];
  }
  for (const auto& [key, n] : pair_count)
    if (n >= 2)
      s.multiedges[key] = n;
  auto deg = degrees(g);
  for (Vertex v = 0; v < t; ++v)
    if (deg[v] == 1)
      s.pendant_vertices.push_back(v);
  bool any_loop = std::any_of(s.loops.begin(), s.loops.end(), [](int n) { return n > 0; });
  s.is_tree = s.connected && !any_loop && g.arrow_count() == static_cast<std::size_t>(t - 1);

  for (std::size_t k = 0; k < g.arrow_count(); ++k) {
    if (forest.in_forest(k))
      continue;
    const Arrow& a = g.arrow(k);
    CycleParity c;
    c.arrows.push_back(a.id);
    bool odd = a.is_dashed();
    if (!a.is_loop()) {
      for (std::size_t e : forest.path(a.to, a.from)) {
        c.arrows.push_back(g.arrow(e).id);
        odd ^= g.arrow(e).is_dashed();
      }
    }
    c.odd = odd;
    s.cycles.push_back(std::move(c));
  }
  return s;
}

std::vector<Component> connected_components(const Biquiver& g) {
  SpanningForest forest(g);
  std::map<Vertex, std::size_t> by_root;
  std::vector<Component> out;
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Vertex r = forest.root_of(v);
    auto [it, inserted] = by_root.try_emplace(r, out.size());
    if (inserted)
      out.emplace_back();
    auto& comp = out[it->second];
    local[v] = static_cast<int>(comp.vertices.size());
    comp.vertices.push_back(v);
  }
  std::vector<std::vector<Arrow>> arrows(out.size());
  for (const auto& a : g.arrows()) {
    std::size_t c = by_root[forest.root_of(a.from)];
    arrows[c].push_back({a.id, local[a.from], local[a.to], a.kind});
  }
  for (std::size_t c = 0; c < out.size(); ++c)
    out[c].graph = Biquiver(static_cast<int>(out[c].vertices.size()), std::move(arrows[c]));
  return out;
}

}  // namespace biq
