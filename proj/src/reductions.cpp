#include "attractor/reductions.hpp"

#include <algorithm>

#include "attractor/error.hpp"

namespace attractor {

std::vector<VariableOccurrences> occurrences_of(const Cnf& cnf) {
  const auto report = validate_3b2(cnf);
  if (!report.ok()) {
    std::string msg = "not a (3,B2) instance:";
    for (const auto& v : report.violations) msg += " " + v.describe() + ";";
    throw InvalidParameter(msg);
  }
  std::vector<std::vector<LiteralSlot>> pos(cnf.num_vars + 1);
  std::vector<std::vector<LiteralSlot>> neg(cnf.num_vars + 1);
  for (std::uint32_t i = 0; i < cnf.clauses.size(); ++i) {
    for (std::uint32_t j = 0; j < 3; ++j) {
      const auto& lit = cnf.clauses[i][j];
      (lit.positive ? pos : neg)[lit.var].push_back({i, j});
    }
  }
  std::vector<VariableOccurrences> out;
  for (std::uint32_t v = 1; v <= cnf.num_vars; ++v) {
    // Already in (clause, index) order from the scan above.
    out.push_back({{pos[v][0], pos[v][1]}, {neg[v][0], neg[v][1]}});
  }
  return out;
}

namespace {

void require_satisfying(const Cnf& cnf, const Assignment& assignment) {
  if (assignment.size() != cnf.num_vars) {
    throw CertificateRejected("assignment has " + std::to_string(assignment.size()) +
                              " values for " + std::to_string(cnf.num_vars) + " variables");
  }
  if (auto c = first_unsatisfied_clause(cnf, assignment)) {
    throw CertificateRejected("assignment falsifies clause " + std::to_string(*c + 1));
  }
}

void check_satisfies(const Cnf& cnf, const Assignment& assignment) {
  if (first_unsatisfied_clause(cnf, assignment)) {
    throw SoundnessError("certificate decoded to an assignment that does not satisfy the formula");
  }
}

}  // namespace

std::uint32_t CecReduction::positive_edge(std::uint32_t a) const {
  return static_cast<std::uint32_t>(6 * num_clauses + 2 * (a - 1));
}

std::uint32_t CecReduction::negative_edge(std::uint32_t a) const {
  return positive_edge(a) + 1;
}

CecReduction sat_to_cec(const Cnf& cnf) {
  auto occ = occurrences_of(cnf);
  const std::size_t m = cnf.clauses.size();
  const std::size_t n = cnf.num_vars;
  std::vector<ColoredEdge> edges;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < 3; ++j) {
      edges.push_back({CecReduction::clause_vertex(i), CecReduction::intermediate_vertex(i, j), 0});
      edges.push_back(
          {CecReduction::intermediate_vertex(i, j), CecReduction::literal_vertex(i, j), 0});
    }
  }
  for (std::uint32_t a = 1; a <= n; ++a) {
    const auto& o = occ[a - 1];
    edges.push_back({CecReduction::literal_vertex(o.positive[0].clause, o.positive[0].index),
                     CecReduction::literal_vertex(o.positive[1].clause, o.positive[1].index), a});
    edges.push_back({CecReduction::literal_vertex(o.negative[0].clause, o.negative[0].index),
                     CecReduction::literal_vertex(o.negative[1].clause, o.negative[1].index), a});
  }
  return CecReduction{cnf,   ColoredGraph(7 * m, n + 1, std::move(edges)), n, m, 5 * n,
                      std::move(occ)};
}

EdgeSelection assignment_to_cover(const CecReduction& reduction, const Assignment& assignment) {
  require_satisfying(reduction.formula, assignment);
  std::vector<std::uint32_t> edges;
  for (std::uint32_t a = 1; a <= reduction.num_vars; ++a) {
    const auto& o = reduction.occurrences[a - 1];
    // The true side takes both spokes and its color edge; the other side
    // covers its intermediates with legs.
    const bool value = assignment.value(a);
    const auto& chosen = value ? o.positive : o.negative;
    const auto& other = value ? o.negative : o.positive;
    for (const auto& s : chosen) edges.push_back(CecReduction::spoke_edge(s.clause, s.index));
    edges.push_back(value ? reduction.positive_edge(a) : reduction.negative_edge(a));
    for (const auto& s : other) edges.push_back(CecReduction::leg_edge(s.clause, s.index));
  }
  EdgeSelection cover(std::move(edges));
  if (cover.size() != reduction.predicted_cover || !verify_colorful_cover(reduction.graph, cover)) {
    throw SoundnessError("assignment pattern did not produce a colorful edge cover of size 5n");
  }
  return cover;
}

Assignment cover_to_assignment(const CecReduction& reduction, const EdgeSelection& cover) {
  if (cover.size() != reduction.predicted_cover) {
    throw CertificateRejected("cover has size " + std::to_string(cover.size()) + ", expected " +
                              std::to_string(reduction.predicted_cover));
  }
  const auto verdict = verify_colorful_cover(reduction.graph, cover);
  if (!verdict) {
    throw CertificateRejected(verdict.missing_vertex
                                  ? "vertex " + std::to_string(*verdict.missing_vertex) +
                                        " is not covered"
                                  : "color " + std::to_string(*verdict.missing_color) +
                                        " is missing");
  }
  std::vector<bool> values(reduction.num_vars);
  for (std::uint32_t a = 1; a <= reduction.num_vars; ++a) {
    values[a - 1] = cover.contains(reduction.positive_edge(a));
  }
  Assignment assignment(std::move(values));
  check_satisfies(reduction.formula, assignment);
  return assignment;
}

AttractorReduction sat_to_attractor(const Cnf& cnf) {
  auto occ = occurrences_of(cnf);
  AttractorReduction r{cnf, StringSet({Text{}}), {}, cnf.num_vars, cnf.clauses.size(), 0, 0,
                       std::move(occ), {}};
  const auto n = static_cast<std::uint32_t>(r.num_vars);

  std::vector<Text> texts;
  for (std::uint32_t a = 1; a <= n; ++a) {
    const auto& o = r.occurrences[a - 1];
    for (bool negated : {false, true}) {
      const auto& slots = negated ? o.negative : o.positive;
      const SymbolId c1 = r.clause_symbol(slots[0].clause);
      const SymbolId c2 = r.clause_symbol(slots[1].clause);
      texts.push_back(Text{c1, c1, r.literal_symbol(slots[0].index, negated), r.variable_symbol(a),
                           r.literal_symbol(slots[1].index, negated), c2, c2});
    }
  }
  for (std::uint32_t j = 0; j < 3; ++j) {
    for (bool negated : {false, true}) {
      const SymbolId s = r.literal_symbol(j, negated);
      texts.push_back(Text{s, s});
    }
  }
  r.strings = StringSet(std::move(texts));
  const auto first_delimiter = static_cast<SymbolId>(r.num_clauses + 6 + n);
  r.stitched = set_to_string(r.strings, first_delimiter);
  r.predicted_set_attractor = 5 * r.num_vars + 6;
  r.predicted_string_attractor = r.predicted_set_attractor + r.stitched.size_offset;

  for (std::size_t i = 1; i <= r.num_clauses; ++i) r.glyphs.push_back("C" + std::to_string(i));
  for (int j = 1; j <= 3; ++j) r.glyphs.push_back("L" + std::to_string(j));
  for (int j = 1; j <= 3; ++j) r.glyphs.push_back("~L" + std::to_string(j));
  for (std::uint32_t a = 1; a <= n; ++a) r.glyphs.push_back("X" + std::to_string(a));
  for (std::size_t d = 1; d <= r.stitched.delimiters.size(); ++d) {
    r.glyphs.push_back("#" + std::to_string(d));
  }
  return r;
}

Marking assignment_to_marking(const AttractorReduction& reduction, const Assignment& assignment) {
  require_satisfying(reduction.formula, assignment);
  std::vector<Site> sites;
  for (std::uint32_t a = 1; a <= reduction.num_vars; ++a) {
    const bool value = assignment.value(a);
    const std::uint32_t on = value ? reduction.positive_text(a) : reduction.negative_text(a);
    const std::uint32_t off = value ? reduction.negative_text(a) : reduction.positive_text(a);
    for (std::uint32_t p : {2u, 4u, 6u}) sites.push_back({on, p});
    for (std::uint32_t p : {3u, 5u}) sites.push_back({off, p});
  }
  for (std::uint32_t t = 0; t < 6; ++t) sites.push_back({reduction.auxiliary_text(t), 1});
  Marking marking(std::move(sites));
  if (marking.size() != reduction.predicted_set_attractor ||
      !verify_attractor(reduction.strings, marking, 2)) {
    throw SoundnessError("assignment pattern did not produce a 2-set attractor of size 5n+6");
  }
  return marking;
}

Assignment marking_to_assignment(const AttractorReduction& reduction, const Marking& marking) {
  if (marking.size() != reduction.predicted_set_attractor) {
    throw CertificateRejected("marking has size " + std::to_string(marking.size()) +
                              ", expected " + std::to_string(reduction.predicted_set_attractor));
  }
  const auto verdict = verify_attractor(reduction.strings, marking, 2);
  if (!verdict) throw CertificateRejected("marking is not a 2-set attractor", verdict.witness);
  std::vector<bool> values(reduction.num_vars);
  for (std::uint32_t a = 1; a <= reduction.num_vars; ++a) {
    values[a - 1] = marking.contains(Site{reduction.positive_text(a), 4});
  }
  Assignment assignment(std::move(values));
  check_satisfies(reduction.formula, assignment);
  return assignment;
}

Assignment string_marking_to_assignment(const AttractorReduction& reduction,
                                        const Marking& marking) {
  if (marking.size() != reduction.predicted_string_attractor) {
    throw CertificateRejected("marking has size " + std::to_string(marking.size()) +
                              ", expected " +
                              std::to_string(reduction.predicted_string_attractor));
  }
  return marking_to_assignment(reduction, lift_solution(reduction.stitched, marking, 2));
}

Interval gap_bounds(std::size_t m, std::size_t u) {
  if (m % 4 != 0) {
    throw InvalidParameter("clause count " + std::to_string(m) + " is not divisible by 4");
  }
  if (u > m) throw InvalidParameter("u exceeds the clause count");
  const std::size_t base = 21 * m / 4 + 11;
  return Interval{base + (u + 1) / 2, base + u};
}

}  // namespace attractor
