#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "attractor/colored_graph.hpp"
#include "attractor/sat.hpp"
#include "attractor/strings.hpp"
#include "attractor/transforms.hpp"

namespace attractor {

/// Literal slot j (0..2) of clause i (0-based).
struct LiteralSlot {
  std::uint32_t clause = 0;
  std::uint32_t index = 0;
  friend auto operator<=>(const LiteralSlot&, const LiteralSlot&) = default;
};

/// Where a variable occurs, each pair ordered by (clause, index).
struct VariableOccurrences {
  std::array<LiteralSlot, 2> positive;
  std::array<LiteralSlot, 2> negative;
};

/// Throws InvalidParameter listing the violations unless the formula is a
/// valid (3,B2) instance.
std::vector<VariableOccurrences> occurrences_of(const Cnf& cnf);

/// (3,B2)-SAT -> colorful edge cover. Per clause c_i: vertex c_i, three
/// intermediates c_{i,j} and three literal vertices l_{i,j} joined by color-0
/// edges; per variable x_a two color-a edges joining its two positive and its
/// two negative literal vertices.
struct CecReduction {
  Cnf formula;
  ColoredGraph graph;
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;
  /// n + |phi| = 5n, reached iff the formula is satisfiable.
  std::size_t predicted_cover = 0;
  std::vector<VariableOccurrences> occurrences;

  static VertexId clause_vertex(std::uint32_t i) { return 7 * i; }
  static VertexId intermediate_vertex(std::uint32_t i, std::uint32_t j) { return 7 * i + 1 + j; }
  static VertexId literal_vertex(std::uint32_t i, std::uint32_t j) { return 7 * i + 4 + j; }
  /// Edge {c_i, c_{i,j}}.
  static std::uint32_t spoke_edge(std::uint32_t i, std::uint32_t j) { return 6 * i + 2 * j; }
  /// Edge {c_{i,j}, l_{i,j}}.
  static std::uint32_t leg_edge(std::uint32_t i, std::uint32_t j) { return 6 * i + 2 * j + 1; }
  /// Color-a edge between the positive (resp. negative) literal vertices of x_a, a >= 1.
  std::uint32_t positive_edge(std::uint32_t a) const;
  std::uint32_t negative_edge(std::uint32_t a) const;
};

CecReduction sat_to_cec(const Cnf& cnf);

/// Five edges per variable following the true or false pattern. Throws
/// CertificateRejected naming a falsified clause.
EdgeSelection assignment_to_cover(const CecReduction& reduction, const Assignment& assignment);

/// Reads x_a from which color-a edge is selected. The cover must be valid and
/// of size exactly 5n (CertificateRejected otherwise); a result that does not
/// satisfy the formula raises SoundnessError.
Assignment cover_to_assignment(const CecReduction& reduction, const EdgeSelection& cover);

/// (3,B2)-SAT -> 2-attractor over a set of 2n+6 strings, plus the stitched
/// single string. Symbols: C_1..C_m = 0..m-1, L_1..L_3 = m..m+2,
/// ~L_1..~L_3 = m+3..m+5, X_1..X_n = m+6..m+n+5, delimiters after that.
struct AttractorReduction {
  Cnf formula;
  StringSet strings;
  TransformResult stitched;
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;
  /// 5n + 6 on the string set, 7n + 11 on the stitched string.
  std::size_t predicted_set_attractor = 0;
  std::size_t predicted_string_attractor = 0;
  std::vector<VariableOccurrences> occurrences;
  /// Display names for every symbol including delimiters.
  std::vector<std::string> glyphs;

  SymbolId clause_symbol(std::uint32_t i) const { return i; }
  SymbolId literal_symbol(std::uint32_t j, bool negated) const {
    return static_cast<SymbolId>(num_clauses + (negated ? 3 : 0) + j);
  }
  SymbolId variable_symbol(std::uint32_t a) const {
    return static_cast<SymbolId>(num_clauses + 6 + a - 1);
  }
  /// 1-based text indices.
  std::uint32_t positive_text(std::uint32_t a) const { return 2 * a - 1; }
  std::uint32_t negative_text(std::uint32_t a) const { return 2 * a; }
  std::uint32_t auxiliary_text(std::uint32_t t) const {
    return static_cast<std::uint32_t>(2 * num_vars + 1 + t);
  }
  const Text& stitched_text() const { return std::get<Text>(stitched.target); }
};

AttractorReduction sat_to_attractor(const Cnf& cnf);

/// Set marking of size exactly 5n+6. Throws CertificateRejected naming a
/// falsified clause.
Marking assignment_to_marking(const AttractorReduction& reduction, const Assignment& assignment);

/// x_a is true iff position 4 of x_a's positive string is marked. The marking
/// must be a valid 2-set attractor of size exactly 5n+6.
Assignment marking_to_assignment(const AttractorReduction& reduction, const Marking& marking);

/// Same for a marking of the stitched string (size 7n+11), lifted first.
Assignment string_marking_to_assignment(const AttractorReduction& reduction,
                                        const Marking& marking);

struct Interval {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool contains(std::size_t v) const { return lower <= v && v <= upper; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// [21m/4 + 11 + ceil(u/2), 21m/4 + 11 + u] for the optimal attractor of the
/// stitched reduction string, u = clauses left unsatisfied by a MAX-SAT optimum.
Interval gap_bounds(std::size_t m, std::size_t u);

}  // namespace attractor
