#pragma once

#include "biq/morphisms.hpp"
#include "biq/representation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace biq::io {

using json = nlohmann::ordered_json;

/// Row list of [re, im] rational-string pairs.
json matrix_to_json(const CMatrix& m);
/// Shape is checked against rows x cols; `where` prefixes error messages.
/// Throws ParseError on malformed entries, ValidationError on shape mismatch.
CMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where);
/// Square matrix of any size.
CMatrix square_matrix_from_json(const json& j, const std::string& where);

json biquiver_to_json(const Biquiver& g);

/// {"dims": [...], "matrices": {id: matrix}} and, if requested, "biquiver".
json representation_to_json(const MatrixRepresentation& a, bool embed_biquiver);
/// The biquiver comes from `g` if given, else from an embedded "biquiver" key.
MatrixRepresentation parse_representation(std::string_view text, const std::optional<Biquiver>& g);
MatrixRepresentation representation_from_json(const json& doc, const std::optional<Biquiver>& g);

/// {"1": S_1, "2": S_2, ...} with 1-based vertex keys.
json base_change_to_json(std::span<const CMatrix> s);
BaseChange base_change_from_json(const json& j, const DimensionVector& dims);

json iso_result_to_json(const IsoResult& r);
json decomposition_to_json(const Decomposition& d);

/// Parses a document, turning syntax errors into ParseError with a position.
json parse_document(std::string_view text, const std::string& what);

}  // namespace biq::io
