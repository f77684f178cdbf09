#include "attractor/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "attractor/attractor_solvers.hpp"
#include "attractor/error.hpp"
#include "attractor/io.hpp"
#include "attractor/reductions.hpp"

namespace attractor {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "attractor-kit/1";
constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Options {
  bool json = false;
  std::string input;
  std::string shape;
  std::string k = "2";
  bool sharp = false;
  std::string method;
  std::uint64_t budget = kDefaultBudget;
  std::string marking;
  std::string edges;
  std::string assignment;
  std::string cover;
  bool stitched = false;
  std::string from;
  std::string via;
  std::string out;
  std::string stitched_out;
  std::string provenance;
  std::uint32_t vars = 3;
  std::uint32_t trials = 1;
  std::uint64_t seed = 1;
  bool allow_duplicates = false;
};

// Ordered key/value report; human mode prints "key: value" lines.
class Report {
 public:
  explicit Report(std::string command) { doc_["schema"] = kSchema; doc_["command"] = std::move(command); }

  template <typename T>
  void set(const std::string& key, T&& value) {
    doc_[key] = std::forward<T>(value);
  }

  void print(std::ostream& out, bool json) const {
    if (json) {
      out << doc_.dump(2) << "\n";
      return;
    }
    for (const auto& [key, value] : doc_.items()) {
      if (key == "schema") continue;
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }

 private:
  Json doc_;
};

std::optional<Shape> shape_option(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_shape(s);
}

std::size_t resolve_k(const std::string& k, const Instance& instance) {
  if (k == "full") return std::max<std::size_t>(1, full_length(instance));
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), value);
  if (ec != std::errc() || ptr != k.data() + k.size() || value == 0) {
    throw InvalidParameter("--k expects a positive integer or 'full', got '" + k + "'");
  }
  return value;
}

SymbolId next_free(const Instance& instance, const SymbolTable& symbols) {
  SymbolId next = static_cast<SymbolId>(symbols.size());
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        auto scan = [&](const Word& w) {
          for (auto s : w) next = std::max<SymbolId>(next, s + 1);
        };
        if constexpr (std::is_same_v<T, StringSet>) {
          for (const auto& t : inst.texts()) scan(t.symbols());
        } else {
          scan(inst.symbols());
        }
      },
      instance);
  return next;
}

SymbolTable extend_with_delimiters(SymbolTable symbols, const std::vector<SymbolId>& delimiters) {
  for (std::size_t d = 0; d < delimiters.size(); ++d) {
    std::string glyph = "#" + std::to_string(d + 1);
    while (symbols.find(glyph)) glyph += "'";
    symbols.assign(delimiters[d], glyph);
  }
  return symbols;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int verify() {
    const auto doc = read_instance_file(o_.input, shape_option(o_.shape));
    symbols_ = doc.symbols;
    const auto k = resolve_k(o_.k, doc.instance);
    const auto marking = parse_marking(o_.marking);
    const auto verdict = verify_attractor(doc.instance, marking, k, o_.sharp);
    Report r("verify");
    r.set("shape", to_string(shape_of(doc.instance)));
    r.set("k", k);
    r.set("sharp", o_.sharp);
    r.set("marking", format_marking(marking, is_set(doc.instance)));
    r.set("verdict", verdict.valid ? "valid" : "invalid");
    if (verdict.witness) r.set("witness", doc.symbols.render(*verdict.witness));
    r.print(out_, o_.json);
    return verdict.valid ? kExitOk : kExitInvalid;
  }

  int solve() {
    const auto doc = read_instance_file(o_.input, shape_option(o_.shape));
    symbols_ = doc.symbols;
    const auto& inst = doc.instance;
    const auto k = resolve_k(o_.k, inst);
    const std::string method = o_.method.empty() ? "exact" : o_.method;
    const ExactOptions options{o_.budget};
    Marking marking;
    SolveStatus status = SolveStatus::optimal;
    std::optional<std::uint64_t> nodes;

    if (method == "exact") {
      auto sol = min_attractor_exact(inst, k, o_.sharp, options);
      marking = std::move(sol.marking);
      status = sol.status;
      nodes = sol.nodes;
    } else if (method == "greedy") {
      marking = min_attractor_greedy(inst, k, o_.sharp);
    } else if (method == "k1") {
      if (k != 1 || o_.sharp || !std::holds_alternative<Text>(inst)) {
        throw InvalidParameter("method k1 needs a plain string with --k 1");
      }
      marking = min_1_attractor(std::get<Text>(inst));
    } else if (method == "sharp2" || method == "cec") {
      const bool sharp2 = method == "sharp2";
      if (k != 2 || o_.sharp != sharp2 || std::holds_alternative<CircularText>(inst)) {
        throw InvalidParameter("method " + method + " needs --k 2" + (sharp2 ? " --sharp" : "") +
                               " on a string or string set");
      }
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (!std::is_same_v<T, CircularText>) {
              if (sharp2) {
                marking = min_sharp2_attractor(x);
              } else {
                auto sol = min_2attractor_via_cec(x, options);
                marking = std::move(sol.marking);
                status = sol.status;
              }
            }
          },
          inst);
    } else {
      throw InvalidParameter("unknown method '" + method + "'");
    }
    if (!verify_attractor(inst, marking, k, o_.sharp)) {
      throw SoundnessError("solver returned a marking that is not an attractor");
    }

    Report r("solve");
    r.set("shape", to_string(shape_of(inst)));
    r.set("k", k);
    r.set("sharp", o_.sharp);
    r.set("method", method);
    r.set("budget", o_.budget);
    r.set("status", status == SolveStatus::optimal ? (method == "greedy" ? "heuristic" : "optimal")
                                                   : "budget_exceeded");
    if (nodes) r.set("nodes", *nodes);
    r.set("size", marking.size());
    r.set("marking", format_marking(marking, is_set(inst)));
    r.print(out_, o_.json);
    return status == SolveStatus::optimal ? kExitOk : kExitBudget;
  }

  int transform() {
    const auto doc = read_instance_file(o_.input, shape_option(o_.from));
    const auto target = parse_shape(o_.via);
    const auto tr = attractor::transform(doc.instance, target, next_free(doc.instance, doc.symbols));
    const auto target_symbols = extend_with_delimiters(doc.symbols, tr.delimiters);
    write_file(o_.out, format_instance_json({tr.target, target_symbols}));
    if (!o_.provenance.empty()) {
      write_file(o_.provenance, format_transform_sidecar(tr, doc.symbols, target_symbols));
    }
    std::string delimiters;
    for (auto d : tr.delimiters) delimiters += (delimiters.empty() ? "" : ",") + target_symbols.glyph(d);
    Report r("transform");
    r.set("from", to_string(shape_of(doc.instance)));
    r.set("via", to_string(target));
    r.set("size_offset", tr.size_offset);
    r.set("delimiters", delimiters);
    r.set("forced", format_marking(Marking(tr.forced_sites()), target == Shape::set));
    r.set("target_length", total_sites(tr.target));
    r.set("out", o_.out);
    if (!o_.provenance.empty()) r.set("provenance", o_.provenance);
    r.print(out_, o_.json);
    return kExitOk;
  }

  int lift() {
    const auto sidecar = parse_transform_sidecar(read_file(o_.provenance));
    symbols_ = sidecar.target_symbols;
    const auto& tr = sidecar.result;
    const auto k = resolve_k(o_.k, tr.target);
    const auto target_marking = parse_marking(o_.marking);
    const auto lifted = lift_solution(tr, target_marking, k, o_.sharp);
    Report r("lift");
    r.set("k", k);
    r.set("sharp", o_.sharp);
    r.set("target_size", target_marking.size());
    r.set("size_offset", tr.size_offset);
    r.set("size", lifted.size());
    r.set("marking", format_marking(lifted, is_set(tr.source)));
    r.print(out_, o_.json);
    return kExitOk;
  }

  int graph_build() {
    const auto doc = read_instance_file(o_.input, shape_option(o_.shape));
    const StringSet texts = std::visit(
        [](const auto& x) -> StringSet {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, StringSet>) {
            return x;
          } else if constexpr (std::is_same_v<T, Text>) {
            return StringSet({x});
          } else {
            throw InvalidParameter("the 2-substring graph is defined for strings and string sets");
          }
        },
        doc.instance);
    const auto sg = build_2substring_graph(texts);
    write_file(o_.out, format_graph(graph_document(sg, doc.symbols)));
    if (!o_.provenance.empty()) write_file(o_.provenance, format_substring_graph_sidecar(sg, doc.symbols));
    Report r("graph build");
    r.set("vertices", sg.graph.num_vertices());
    r.set("edges", sg.graph.num_edges());
    r.set("colors", sg.graph.num_colors());
    r.set("out", o_.out);
    if (!o_.provenance.empty()) r.set("provenance", o_.provenance);
    r.print(out_, o_.json);
    return kExitOk;
  }

  int graph_solve() {
    const auto doc = parse_graph(read_file(o_.input));
    const std::string method = o_.method.empty() ? "colorful" : o_.method;
    GraphCoverResult result;
    if (method == "colorful") {
      result = min_colorful_cover_exact(doc.graph, ExactOptions{o_.budget});
      if (!verify_colorful_cover(doc.graph, result.selection)) {
        throw SoundnessError("solver returned a selection that is not a colorful edge cover");
      }
    } else if (method == "plain") {
      result.selection = min_edge_cover_exact(doc.graph);
      if (!is_edge_cover(doc.graph, result.selection)) {
        throw SoundnessError("solver returned a selection that is not an edge cover");
      }
    } else {
      throw InvalidParameter("unknown method '" + method + "', expected colorful or plain");
    }
    Report r("graph solve");
    r.set("method", method);
    r.set("budget", o_.budget);
    r.set("status", result.status == SolveStatus::optimal ? "optimal" : "budget_exceeded");
    if (method == "colorful") r.set("nodes", result.nodes);
    r.set("size", result.size());
    r.set("edges", format_edge_list(result.selection));
    r.print(out_, o_.json);
    return result.status == SolveStatus::optimal ? kExitOk : kExitBudget;
  }

  int graph_verify() {
    const auto doc = parse_graph(read_file(o_.input));
    const auto selection = parse_edge_list(o_.edges);
    const std::string method = o_.method.empty() ? "colorful" : o_.method;
    Report r("graph verify");
    r.set("method", method);
    r.set("edges", format_edge_list(selection));
    bool valid = false;
    if (method == "plain") {
      valid = is_edge_cover(doc.graph, selection);
    } else if (method == "colorful") {
      const auto verdict = verify_colorful_cover(doc.graph, selection);
      valid = verdict.valid;
      auto label = [](const std::vector<std::string>& labels, std::uint32_t id) {
        return id < labels.size() ? std::to_string(id) + " (" + labels[id] + ")" : std::to_string(id);
      };
      if (verdict.missing_vertex) r.set("uncovered_vertex", label(doc.vertex_labels, *verdict.missing_vertex));
      if (verdict.missing_color) r.set("missing_color", label(doc.color_labels, *verdict.missing_color));
    } else {
      throw InvalidParameter("unknown method '" + method + "', expected colorful or plain");
    }
    r.set("verdict", valid ? "valid" : "invalid");
    r.print(out_, o_.json);
    return valid ? kExitOk : kExitInvalid;
  }

  int graph_deloop() {
    const auto doc = parse_graph(read_file(o_.input));
    const auto le = eliminate_self_loops(doc.graph);
    GraphDocument result{le.graph, doc.vertex_labels, doc.color_labels};
    if (le.size_offset > 0) {
      if (!result.vertex_labels.empty()) {
        result.vertex_labels.push_back("x");
        result.vertex_labels.push_back("y");
      }
      if (!result.color_labels.empty()) result.color_labels.push_back("b");
    }
    write_file(o_.out, format_graph(result));
    Report r("graph deloop");
    r.set("loops", std::count_if(doc.graph.edges().begin(), doc.graph.edges().end(),
                                 [](const ColoredEdge& e) { return e.is_loop(); }));
    r.set("size_offset", le.size_offset);
    r.set("vertices", le.graph.num_vertices());
    r.set("edges", le.graph.num_edges());
    r.set("out", o_.out);
    r.print(out_, o_.json);
    return kExitOk;
  }

  int reduce(const std::string& kind) {
    const auto cnf = parse_dimacs(read_file(o_.input));
    Report r("reduce " + kind);
    r.set("vars", cnf.num_vars);
    r.set("clauses", cnf.clauses.size());
    if (kind == "sat2cec") {
      const auto red = sat_to_cec(cnf);
      write_file(o_.out, format_graph(cec_document(red)));
      if (!o_.provenance.empty()) write_file(o_.provenance, cec_provenance(red).dump(2) + "\n");
      r.set("vertices", red.graph.num_vertices());
      r.set("edges", red.graph.num_edges());
      r.set("colors", red.graph.num_colors());
      r.set("predicted_cover", red.predicted_cover);
    } else {
      const auto red = sat_to_attractor(cnf);
      const SymbolTable symbols(red.glyphs);
      write_file(o_.out, format_instance_json({red.strings, symbols}));
      if (!o_.stitched_out.empty()) {
        write_file(o_.stitched_out, format_instance_json({red.stitched.target, symbols}));
      }
      if (!o_.provenance.empty()) {
        write_file(o_.provenance, format_transform_sidecar(red.stitched, symbols, symbols));
      }
      r.set("strings", red.strings.count());
      r.set("stitched_length", red.stitched_text().size());
      r.set("predicted_set_attractor", red.predicted_set_attractor);
      r.set("predicted_string_attractor", red.predicted_string_attractor);
    }
    r.set("out", o_.out);
    if (!o_.stitched_out.empty()) r.set("stitched_out", o_.stitched_out);
    if (!o_.provenance.empty()) r.set("provenance", o_.provenance);
    r.print(out_, o_.json);
    return kExitOk;
  }

  int certify(const std::string& kind) {
    const auto cnf = parse_dimacs(read_file(o_.input));
    const bool from_assignment = !o_.assignment.empty();
    Report r("certify " + kind);
    if (kind == "sat2cec") {
      if (from_assignment == !o_.cover.empty()) {
        throw InvalidParameter("give exactly one of --assignment and --cover");
      }
      const auto red = sat_to_cec(cnf);
      if (from_assignment) {
        const auto cover = assignment_to_cover(red, parse_assignment(o_.assignment, cnf.num_vars));
        r.set("size", cover.size());
        r.set("cover", format_edge_list(cover));
      } else {
        const auto assignment = cover_to_assignment(red, parse_edge_list(o_.cover));
        r.set("assignment", format_assignment(assignment));
      }
    } else {
      if (from_assignment == !o_.marking.empty()) {
        throw InvalidParameter("give exactly one of --assignment and --marking");
      }
      const auto red = sat_to_attractor(cnf);
      symbols_ = SymbolTable(red.glyphs);
      r.set("target", o_.stitched ? "stitched" : "set");
      if (from_assignment) {
        auto marking = assignment_to_marking(red, parse_assignment(o_.assignment, cnf.num_vars));
        if (o_.stitched) {
          marking = embed_solution(red.stitched, marking);
          if (marking.size() != red.predicted_string_attractor ||
              !verify_attractor(red.stitched_text(), marking, 2)) {
            throw SoundnessError("embedded marking is not a 2-attractor of the stitched string");
          }
        }
        r.set("size", marking.size());
        r.set("marking", format_marking(marking, !o_.stitched));
      } else {
        const auto marking = parse_marking(o_.marking);
        const auto assignment = o_.stitched ? string_marking_to_assignment(red, marking)
                                            : marking_to_assignment(red, marking);
        r.set("assignment", format_assignment(assignment));
      }
    }
    r.print(out_, o_.json);
    return kExitOk;
  }

  int sat_validate() {
    const auto cnf = parse_dimacs(read_file(o_.input));
    const auto report = validate_3b2(cnf);
    Report r("sat validate");
    r.set("vars", cnf.num_vars);
    r.set("clauses", cnf.clauses.size());
    r.set("verdict", report.ok() ? "balanced" : "unbalanced");
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back(v.describe());
    if (!report.ok()) r.set("violations", violations);
    r.print(out_, o_.json);
    return report.ok() ? kExitOk : kExitInvalid;
  }

  int sat_generate() {
    const auto cnf = generate_3b2(o_.vars, o_.seed, o_.allow_duplicates);
    const auto text = format_dimacs(
        cnf, {"balanced (3,B2) instance", "vars " + std::to_string(o_.vars) + " seed " + std::to_string(o_.seed)});
    if (!o_.out.empty()) {
      write_file(o_.out, text);
      Report r("sat generate");
      r.set("vars", cnf.num_vars);
      r.set("clauses", cnf.clauses.size());
      r.set("seed", o_.seed);
      r.set("out", o_.out);
      r.print(out_, o_.json);
    } else if (o_.json) {
      Report r("sat generate");
      r.set("vars", cnf.num_vars);
      r.set("clauses", cnf.clauses.size());
      r.set("seed", o_.seed);
      r.set("dimacs", text);
      r.print(out_, true);
    } else {
      out_ << text;
    }
    return kExitOk;
  }

  int sat_solve() {
    const auto cnf = parse_dimacs(read_file(o_.input));
    const auto sat = solve_sat_bruteforce(cnf);
    const auto max = max_sat_bruteforce(cnf);
    if (sat && first_unsatisfied_clause(cnf, *sat)) {
      throw SoundnessError("brute force returned a falsifying assignment");
    }
    Report r("sat solve");
    r.set("vars", cnf.num_vars);
    r.set("clauses", cnf.clauses.size());
    r.set("satisfiable", sat.has_value());
    if (sat) r.set("assignment", format_assignment(*sat));
    r.set("max_satisfied", max.max_satisfied);
    r.set("max_assignment", format_assignment(max.assignment));
    r.print(out_, o_.json);
    return kExitOk;
  }

  int experiment_gap() {
    const std::string method = o_.method.empty() ? "exact" : o_.method;
    if (method != "cec" && method != "exact") {
      throw InvalidParameter("unknown method '" + method + "', expected cec or exact");
    }
    std::ostringstream csv;
    csv << "seed,n,m,sat,u,predicted,exact,lower,upper,within_bounds\n";
    bool exceeded = false;
    for (std::uint32_t t = 0; t < o_.trials; ++t) {
      const std::uint64_t seed = o_.seed + t;
      const auto cnf = generate_3b2(o_.vars, seed);
      const auto red = sat_to_attractor(cnf);
      const auto m = cnf.clauses.size();
      const auto u = m - max_sat_bruteforce(cnf).max_satisfied;
      const auto bounds = gap_bounds(m, u);
      Marking marking;
      SolveStatus status;
      if (method == "cec") {
        auto sol = min_2attractor_via_cec(red.stitched_text(), ExactOptions{o_.budget});
        marking = std::move(sol.marking);
        status = sol.status;
      } else {
        auto sol = min_attractor_exact(red.stitched_text(), 2, false, ExactOptions{o_.budget});
        marking = std::move(sol.marking);
        status = sol.status;
      }
      if (!verify_attractor(red.stitched_text(), marking, 2)) {
        throw SoundnessError("solver returned a marking that is not an attractor");
      }
      const bool optimal = status == SolveStatus::optimal;
      exceeded = exceeded || !optimal;
      csv << seed << ',' << cnf.num_vars << ',' << m << ',' << (u == 0 ? 1 : 0) << ',' << u << ','
          << red.predicted_string_attractor << ',' << (optimal ? std::to_string(marking.size()) : "")
          << ',' << bounds.lower << ',' << bounds.upper << ','
          << (optimal ? (bounds.contains(marking.size()) ? "1" : "0") : "") << '\n';
    }
    if (o_.out.empty()) {
      out_ << csv.str();
    } else {
      write_file(o_.out, csv.str());
    }
    if (exceeded) err_ << "budget " << o_.budget << " exceeded on some trial\n";
    return exceeded ? kExitBudget : kExitOk;
  }

  const std::optional<SymbolTable>& symbols() const { return symbols_; }

 private:
  static bool is_set(const Instance& inst) { return std::holds_alternative<StringSet>(inst); }

  static GraphDocument cec_document(const CecReduction& red) {
    GraphDocument doc{red.graph, {}, {}};
    doc.vertex_labels.resize(red.graph.num_vertices());
    for (std::uint32_t i = 0; i < red.num_clauses; ++i) {
      const auto c = "c" + std::to_string(i + 1);
      doc.vertex_labels[CecReduction::clause_vertex(i)] = c;
      for (std::uint32_t j = 0; j < 3; ++j) {
        doc.vertex_labels[CecReduction::intermediate_vertex(i, j)] = c + "." + std::to_string(j + 1);
        doc.vertex_labels[CecReduction::literal_vertex(i, j)] = "l" + std::to_string(i + 1) + "." + std::to_string(j + 1);
      }
    }
    doc.color_labels.push_back("c");
    for (std::size_t a = 1; a <= red.num_vars; ++a) doc.color_labels.push_back("x" + std::to_string(a));
    return doc;
  }

  static Json cec_provenance(const CecReduction& red) {
    Json vars = Json::array();
    for (std::uint32_t a = 1; a <= red.num_vars; ++a) {
      const auto& o = red.occurrences[a - 1];
      auto slots = [](const std::array<LiteralSlot, 2>& s) {
        return Json::array({Json::array({s[0].clause + 1, s[0].index + 1}),
                            Json::array({s[1].clause + 1, s[1].index + 1})});
      };
      vars.push_back({{"var", a},
                      {"positive_edge", red.positive_edge(a)},
                      {"negative_edge", red.negative_edge(a)},
                      {"positive_slots", slots(o.positive)},
                      {"negative_slots", slots(o.negative)}});
    }
    return Json{{"format", "cec-reduction"},
                {"version", 1},
                {"predicted_cover", red.predicted_cover},
                {"variables", vars}};
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<SymbolTable> symbols_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"String attractor toolkit", "attractor"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Structured output");

  auto add_input = [&](CLI::App* c, const char* what) {
    c->add_option("input", o.input, what)->required()->check(CLI::ExistingFile);
  };
  auto add_k = [&](CLI::App* c) {
    c->add_option("--k", o.k, "Substring length bound, or 'full'")->capture_default_str();
    c->add_flag("--sharp", o.sharp, "Only substrings of length exactly k");
  };

  auto* verify = app.add_subcommand("verify", "Check a marking");
  add_input(verify, "Instance file");
  add_k(verify);
  verify->add_option("--shape", o.shape, "string, circular or set (plain text input)");
  verify->add_option("--marking", o.marking, "Marked positions")->required();

  auto* solve = app.add_subcommand("solve", "Minimum attractor");
  add_input(solve, "Instance file");
  add_k(solve);
  solve->add_option("--shape", o.shape, "string, circular or set (plain text input)");
  solve->add_option("--method", o.method, "exact, greedy, k1, sharp2 or cec");
  solve->add_option("--budget", o.budget, "Node budget")->capture_default_str();

  auto* transform = app.add_subcommand("transform", "Change instance shape");
  add_input(transform, "Instance file");
  transform->add_option("--from", o.from, "Shape of plain text input");
  transform->add_option("--via", o.via, "Target shape")->required();
  transform->add_option("--out", o.out, "Target instance file")->required();
  transform->add_option("--provenance", o.provenance, "Sidecar file");

  auto* lift = app.add_subcommand("lift", "Map a target marking back to the source");
  lift->add_option("--provenance", o.provenance, "Sidecar from transform")->required()->check(CLI::ExistingFile);
  lift->add_option("--marking", o.marking, "Marking of the target")->required();
  add_k(lift);

  auto* graph = app.add_subcommand("graph", "Colored graphs");
  graph->require_subcommand(1);
  auto* gbuild = graph->add_subcommand("build", "2-substring graph of a string or string set");
  add_input(gbuild, "Instance file");
  gbuild->add_option("--shape", o.shape, "string or set (plain text input)");
  gbuild->add_option("--out", o.out, "Graph file")->required();
  gbuild->add_option("--provenance", o.provenance, "Sidecar file");
  auto* gsolve = graph->add_subcommand("solve", "Minimum edge cover");
  add_input(gsolve, "Graph file");
  gsolve->add_option("--method", o.method, "colorful or plain");
  gsolve->add_option("--budget", o.budget, "Node budget")->capture_default_str();
  auto* gverify = graph->add_subcommand("verify", "Check an edge selection");
  add_input(gverify, "Graph file");
  gverify->add_option("--edges", o.edges, "Edge indices")->required();
  gverify->add_option("--method", o.method, "colorful or plain");
  auto* gdeloop = graph->add_subcommand("deloop", "Remove self-loops");
  add_input(gdeloop, "Graph file");
  gdeloop->add_option("--out", o.out, "Graph file")->required();

  auto* reduce = app.add_subcommand("reduce", "Reductions from (3,B2)-SAT");
  reduce->require_subcommand(1);
  for (const char* kind : {"sat2cec", "sat2attr"}) {
    auto* c = reduce->add_subcommand(kind);
    add_input(c, "DIMACS file");
    c->add_option("--out", o.out, "Target file")->required();
    c->add_option("--provenance", o.provenance, "Sidecar file");
    if (std::string(kind) == "sat2attr") c->add_option("--stitched-out", o.stitched_out, "Stitched string file");
  }

  auto* certify = app.add_subcommand("certify", "Convert certificates");
  certify->require_subcommand(1);
  for (const char* kind : {"sat2cec", "sat2attr"}) {
    auto* c = certify->add_subcommand(kind);
    add_input(c, "DIMACS file");
    c->add_option("--assignment", o.assignment, "Signed literals");
    if (std::string(kind) == "sat2cec") {
      c->add_option("--cover", o.cover, "Edge indices");
    } else {
      c->add_option("--marking", o.marking, "Marking");
      c->add_flag("--stitched", o.stitched, "Use the stitched string");
    }
  }

  auto* sat = app.add_subcommand("sat", "(3,B2)-SAT utilities");
  sat->require_subcommand(1);
  auto* svalidate = sat->add_subcommand("validate", "Check the (3,B2) shape");
  add_input(svalidate, "DIMACS file");
  auto* sgenerate = sat->add_subcommand("generate", "Random balanced instance");
  sgenerate->add_option("--vars", o.vars, "Variables (multiple of 3)")->required();
  sgenerate->add_option("--seed", o.seed, "Seed")->capture_default_str();
  sgenerate->add_option("--out", o.out, "DIMACS file");
  sgenerate->add_flag("--allow-duplicates", o.allow_duplicates, "Allow a literal twice in a clause");
  auto* ssolve = sat->add_subcommand("solve", "Brute force SAT and MAX-SAT");
  add_input(ssolve, "DIMACS file");

  auto* experiment = app.add_subcommand("experiment", "Experiments");
  experiment->require_subcommand(1);
  auto* gap = experiment->add_subcommand("gap", "Gap bounds on random instances");
  gap->add_option("--vars", o.vars, "Variables (multiple of 3)")->required();
  gap->add_option("--trials", o.trials, "Trials")->capture_default_str();
  gap->add_option("--seed", o.seed, "First seed")->capture_default_str();
  gap->add_option("--budget", o.budget, "Node budget")->capture_default_str();
  gap->add_option("--method", o.method, "cec or exact");
  gap->add_option("--out", o.out, "CSV file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Runner runner(o, out, err);
  try {
    if (*verify) return runner.verify();
    if (*solve) return runner.solve();
    if (*transform) return runner.transform();
    if (*lift) return runner.lift();
    if (*gbuild) return runner.graph_build();
    if (*gsolve) return runner.graph_solve();
    if (*gverify) return runner.graph_verify();
    if (*gdeloop) return runner.graph_deloop();
    for (auto* c : reduce->get_subcommands()) {
      if (*c) return runner.reduce(c->get_name());
    }
    for (auto* c : certify->get_subcommands()) {
      if (*c) return runner.certify(c->get_name());
    }
    if (*svalidate) return runner.sat_validate();
    if (*sgenerate) return runner.sat_generate();
    if (*ssolve) return runner.sat_solve();
    if (*gap) return runner.experiment_gap();
  } catch (const CertificateRejected& e) {
    err << "rejected: " << e.what() << "\n";
    if (e.witness()) {
      err << "witness: " << (runner.symbols() ? runner.symbols()->render(*e.witness()) : "") << "\n";
    }
    return kExitInvalid;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SoundnessError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "no command\n";
  return kExitUsage;
}

}  // namespace attractor
