#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "attractor/strings.hpp"

namespace attractor {

enum class Shape { string, circular, set };

std::string_view to_string(Shape shape);
/// Throws InvalidParameter on unknown names.
Shape parse_shape(std::string_view name);
Shape shape_of(const Instance& instance);

/// Output of one attractor-problem transformation: the target instance, the
/// offset added to the source budget, and where every target site came from.
struct TransformResult {
  Instance source;
  Instance target;
  std::size_t size_offset = 0;
  /// Indexed like all_sites(target); nullopt marks a forced delimiter site.
  std::vector<std::optional<Site>> position_map;
  /// Fresh symbols introduced, in order (#1, #2, ...).
  std::vector<SymbolId> delimiters;

  const std::optional<Site>& source_of(Site target_site) const;
  std::vector<Site> forced_sites() const;
};

/// T1 #1 T2 ... #(m-1) Tm, offset m-1.
TransformResult set_to_string(const StringSet& texts, std::optional<SymbolId> first_fresh = {});
/// Circular T#, offset 1.
TransformResult string_to_circular(const Text& text, std::optional<SymbolId> first_fresh = {});
/// TTT, offset 0; target positions reduce modulo n.
TransformResult circular_to_string(const CircularText& text);
/// Circular T1 #1 ... Tm #m, offset m.
TransformResult set_to_circular(const StringSet& texts, std::optional<SymbolId> first_fresh = {});
/// {T}, offset 0.
TransformResult string_to_set(const Text& text);
/// {TTT}, offset 0.
TransformResult circular_to_set(const CircularText& text);
/// Identity on any shape.
TransformResult identity_transform(const Instance& instance);

/// Dispatches on (source shape, target shape) following the equivalence table.
TransformResult transform(const Instance& source, Shape target,
                          std::optional<SymbolId> first_fresh = {});

/// Maps a valid target marking back to a valid source marking of size
/// |marking| - size_offset (or smaller when several target sites collapse to
/// one source site). Throws CertificateRejected with the uncovered witness when
/// the target marking is not a k-attractor of the target.
Marking lift_solution(const TransformResult& tr, const Marking& target_marking, std::size_t k,
                      bool sharp = false);

/// Source marking -> target marking: the image of every source site plus
/// every forced site.
Marking embed_solution(const TransformResult& tr, const Marking& source_marking);

}  // namespace attractor
