#pragma once

#include "biq/biquiver.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace biq::classify {

enum class Family { A, D, E, ExtendedA, ExtendedD, ExtendedE };

/// A Dynkin or extended Dynkin label. `index` is the subscript: A3, D5, E6,
/// ~A0 (one loop), ~D4, ~E8. Extended labels have index+1 vertices.
struct DiagramLabel {
  Family family = Family::A;
  int index = 0;

  bool is_extended() const { return family >= Family::ExtendedA; }
  int vertex_count() const { return is_extended() ? index + 1 : index; }
  /// "A3", "D4", "E6", "~A2", "~D5", "~E7".
  std::string name() const;

  friend bool operator==(const DiagramLabel&, const DiagramLabel&) = default;
};

std::optional<DiagramLabel> parse_label(std::string_view name);

enum class Kind { Finite, TameInfinite, Wild };

std::string_view to_string(Kind kind);

struct RepType {
  Kind kind = Kind::Wild;
  std::optional<DiagramLabel> diagram;  // present iff kind != Wild

  friend bool operator==(const RepType&, const RepType&) = default;
};

/// Recognises the underlying undirected multigraph (kinds and directions ignored).
/// Throws PreconditionError when g is disconnected.
std::optional<DiagramLabel> diagram_shape(const Biquiver& g);

/// Finite for Dynkin shapes, TameInfinite for extended Dynkin shapes, Wild otherwise.
/// Builds without NDEBUG also cross-check the verdict against Tits definiteness.
RepType representation_type(const Biquiver& g);

}  // namespace biq::classify
