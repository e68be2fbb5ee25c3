#include "biq/io.hpp"

#include "biq/error.hpp"

namespace biq::io {

namespace {

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long>());
  throw ParseError(where + ": expected a rational string \"p/q\"");
}

GaussianRational entry_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(where + ": expected a [re, im] pair");
  try {
    return {rational_from_json(j[0], where), rational_from_json(j[1], where)};
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

json parse_document(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + " JSON: " + e.what());
  }
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back({to_string(m(r, c).re()), to_string(m(r, c).im())});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array())
    throw ParseError(where + ": expected a list of rows");
  // A matrix without columns may be written as [] regardless of its row count.
  if (cols == 0 && j.empty())
    return {rows, 0};
  if (j.size() != rows)
    throw ValidationError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array())
      throw ParseError(where + "[" + std::to_string(r) + "]: expected a row");
    if (row.size() != cols)
      throw ValidationError(where + "[" + std::to_string(r) + "]: expected " + std::to_string(cols) + " entries, got " +
                            std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = entry_from_json(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

CMatrix square_matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array())
    throw ParseError(where + ": expected a list of rows");
  return matrix_from_json(j, j.size(), j.size(), where);
}

json biquiver_to_json(const Biquiver& g) { return json::parse(serialize_biquiver(g)); }

json representation_to_json(const MatrixRepresentation& a, bool embed_biquiver) {
  json doc;
  if (embed_biquiver)
    doc["biquiver"] = biquiver_to_json(a.biquiver());
  doc["dims"] = a.dims();
  json ms = json::object();
  const Biquiver& g = a.biquiver();
  for (std::size_t k = 0; k < g.arrow_count(); ++k)
    ms[g.arrow(k).id] = matrix_to_json(a.matrix(k));
  doc["matrices"] = std::move(ms);
  return doc;
}

MatrixRepresentation representation_from_json(const json& doc, const std::optional<Biquiver>& given) {
  if (!doc.is_object())
    throw ParseError("representation JSON: top level must be an object");
  Biquiver g;
  if (given) {
    g = *given;
  } else {
    auto it = doc.find("biquiver");
    if (it == doc.end())
      throw ParseError("representation JSON: no biquiver given and no embedded \"biquiver\" key");
    g = parse_biquiver(it->dump());
  }
  auto dims_it = doc.find("dims");
  if (dims_it == doc.end() || !dims_it->is_array())
    throw ParseError("representation.dims: expected an array of integers");
  DimensionVector dims;
  for (const auto& d : *dims_it) {
    if (!d.is_number_integer())
      throw ParseError("representation.dims: expected integers");
    dims.push_back(d.get<int>());
  }
  if (dims.size() != static_cast<std::size_t>(g.vertex_count()))
    throw ValidationError("representation.dims: " + std::to_string(dims.size()) + " entries for " +
                          std::to_string(g.vertex_count()) + " vertices");
  for (int d : dims)
    if (d < 0)
      throw ValidationError("representation.dims: negative dimension");
  auto ms_it = doc.find("matrices");
  if (ms_it == doc.end() || !ms_it->is_object())
    throw ParseError("representation.matrices: expected an object keyed by arrow id");
  for (const auto& [id, _] : ms_it->items())
    if (!g.has_arrow(id))
      throw ValidationError("representation.matrices: unknown arrow '" + id + "'");
  std::vector<CMatrix> ms;
  for (const auto& arr : g.arrows()) {
    const auto rows = static_cast<std::size_t>(dims[arr.to]);
    const auto cols = static_cast<std::size_t>(dims[arr.from]);
    auto it = ms_it->find(arr.id);
    if (it == ms_it->end()) {
      if (rows * cols != 0)
        throw ValidationError("representation.matrices: missing matrix for arrow '" + arr.id + "'");
      ms.emplace_back(rows, cols);
      continue;
    }
    ms.push_back(matrix_from_json(*it, rows, cols, "matrices." + arr.id));
  }
  return {g, std::move(dims), std::move(ms)};
}

MatrixRepresentation parse_representation(std::string_view text, const std::optional<Biquiver>& g) {
  return representation_from_json(parse_document(text, "representation"), g);
}

json base_change_to_json(std::span<const CMatrix> s) {
  json out = json::object();
  for (std::size_t v = 0; v < s.size(); ++v)
    out[std::to_string(v + 1)] = matrix_to_json(s[v]);
  return out;
}

BaseChange base_change_from_json(const json& j, const DimensionVector& dims) {
  if (!j.is_object())
    throw ParseError("certificate: expected an object keyed by vertex number");
  BaseChange s;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    const auto n = static_cast<std::size_t>(dims[v]);
    const std::string key = std::to_string(v + 1);
    auto it = j.find(key);
    if (it == j.end()) {
      if (n != 0)
        throw ValidationError("certificate: missing matrix for vertex " + key);
      s.emplace_back(0, 0);
      continue;
    }
    s.push_back(matrix_from_json(*it, n, n, "certificate." + key));
  }
  return s;
}

json iso_result_to_json(const IsoResult& r) {
  json out;
  out["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::Yes)
    out["certificate"] = base_change_to_json(r.certificate);
  out["reason"] = r.reason;
  out["hom_dimension"] = r.hom_dimension;
  out["trials"] = r.trials;
  out["bound"] = r.coeff_bound;
  if (r.verdict == Verdict::ProbablyNo)
    out["failure_bound"] = to_string(r.failure_bound);
  return out;
}

json decomposition_to_json(const Decomposition& d) {
  json out;
  json summands = json::array();
  for (std::size_t k = 0; k < d.summands.size(); ++k) {
    json s = representation_to_json(d.summands[k], false);
    s["status"] = to_string(d.leaf_status[k]);
    summands.push_back(std::move(s));
  }
  out["summands"] = std::move(summands);
  out["certificate"] = base_change_to_json(d.certificate);
  return out;
}

}  // namespace biq::io
