#include "attractor/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "attractor/error.hpp"

namespace attractor {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view content) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    auto line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_any(std::string_view s, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < s.size()) {
    const auto end = s.find_first_of(separators, start);
    const auto piece = s.substr(start, end == std::string_view::npos ? end : end - start);
    if (!trim(piece).empty()) out.push_back(trim(piece));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  Int value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

json instance_to_json(const InstanceDocument& doc) {
  json texts = json::array();
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, StringSet>) {
          for (const auto& t : inst.texts()) texts.push_back(t.symbols());
        } else {
          texts.push_back(inst.symbols());
        }
      },
      doc.instance);
  return json{{"format", "attractor-instance"},
              {"version", 1},
              {"shape", std::string(to_string(shape_of(doc.instance)))},
              {"symbols", doc.symbols.glyphs()},
              {"texts", texts}};
}

InstanceDocument instance_from_json(const json& j) {
  try {
    if (j.at("format").get<std::string>() != "attractor-instance") {
      throw ParseError("not an attractor-instance document");
    }
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported instance version");
    const Shape shape = parse_shape(j.at("shape").get<std::string>());
    SymbolTable symbols(j.value("symbols", std::vector<std::string>{}));
    std::vector<Word> words = j.at("texts").get<std::vector<Word>>();
    if (shape != Shape::set && words.size() != 1) {
      throw ParseError("string and circular documents hold exactly one text");
    }
    switch (shape) {
      case Shape::string:
        return {Text(words.front()), std::move(symbols)};
      case Shape::circular:
        return {CircularText(words.front()), std::move(symbols)};
      case Shape::set: {
        std::vector<Text> texts;
        for (auto& w : words) texts.emplace_back(std::move(w));
        return {StringSet(std::move(texts)), std::move(symbols)};
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
  throw ParseError("malformed instance document");
}

json site_json(const std::optional<Site>& s) {
  if (!s) return nullptr;
  return json::array({s->text, s->pos});
}

}  // namespace

SymbolTable::SymbolTable(std::vector<std::string> glyphs) : glyphs_(std::move(glyphs)) {
  std::set<std::string> seen;
  for (const auto& g : glyphs_) {
    if (!seen.insert(g).second) throw InvalidParameter("glyph '" + g + "' is not unique");
  }
}

std::optional<SymbolId> SymbolTable::find(std::string_view glyph) const {
  auto it = std::find(glyphs_.begin(), glyphs_.end(), glyph);
  if (it == glyphs_.end()) return std::nullopt;
  return static_cast<SymbolId>(it - glyphs_.begin());
}

std::string SymbolTable::glyph(SymbolId id) const {
  if (id < glyphs_.size()) return glyphs_[id];
  return "<" + std::to_string(id) + ">";
}

void SymbolTable::assign(SymbolId id, std::string glyph) {
  if (auto existing = find(glyph); existing && *existing != id) {
    throw InvalidParameter("glyph '" + glyph + "' is already used");
  }
  while (glyphs_.size() <= id) glyphs_.push_back("<" + std::to_string(glyphs_.size()) + ">");
  glyphs_[id] = std::move(glyph);
}

bool SymbolTable::all_single_code_point() const {
  return std::all_of(glyphs_.begin(), glyphs_.end(),
                     [](const std::string& g) { return split_code_points(g).size() == 1; });
}

std::string SymbolTable::render(const Word& word) const {
  const bool compact = std::all_of(word.begin(), word.end(), [&](SymbolId s) {
    return s < glyphs_.size() && split_code_points(glyphs_[s]).size() == 1;
  });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i) out += ' ';
    out += glyph(word[i]);
  }
  return out;
}

std::vector<std::string> split_code_points(std::string_view utf8) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < utf8.size()) {
    const auto lead = static_cast<unsigned char>(utf8[i]);
    std::size_t len = 0;
    if (lead < 0x80) {
      len = 1;
    } else if ((lead >> 5) == 0x6) {
      len = 2;
    } else if ((lead >> 4) == 0xE) {
      len = 3;
    } else if ((lead >> 3) == 0x1E) {
      len = 4;
    } else {
      throw ParseError("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > utf8.size()) throw ParseError("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(utf8[i + k]) >> 6) != 0x2) {
        throw ParseError("invalid UTF-8 continuation byte");
      }
    }
    out.emplace_back(utf8.substr(i, len));
    i += len;
  }
  return out;
}

InstanceDocument parse_plain_instance(std::string_view content, Shape shape) {
  std::vector<std::vector<std::string>> lines;
  for (auto line : split_lines(content)) {
    if (trim(line).empty()) continue;
    lines.push_back(split_code_points(line));
  }
  std::set<std::string> distinct;
  for (const auto& l : lines) distinct.insert(l.begin(), l.end());
  SymbolTable symbols(std::vector<std::string>(distinct.begin(), distinct.end()));
  auto encode = [&](const std::vector<std::string>& glyphs) {
    Word w;
    for (const auto& g : glyphs) w.push_back(*symbols.find(g));
    return w;
  };

  if (shape == Shape::set) {
    if (lines.empty()) throw ParseError("a string set needs at least one line");
    std::vector<Text> texts;
    for (const auto& l : lines) texts.emplace_back(encode(l));
    return {StringSet(std::move(texts)), std::move(symbols)};
  }
  if (lines.size() > 1) {
    throw ParseError("expected one line for a " + std::string(to_string(shape)) + " instance, got " +
                     std::to_string(lines.size()));
  }
  Word w = lines.empty() ? Word{} : encode(lines.front());
  if (shape == Shape::circular) {
    if (w.empty()) throw ParseError("a circular instance must be non-empty");
    return {CircularText(std::move(w)), std::move(symbols)};
  }
  return {Text(std::move(w)), std::move(symbols)};
}

InstanceDocument parse_instance_json(std::string_view content) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return instance_from_json(j);
}

InstanceDocument parse_instance(std::string_view content, std::optional<Shape> shape) {
  const auto body = trim(content);
  if (!body.empty() && body.front() == '{') {
    auto doc = parse_instance_json(content);
    if (shape && *shape != shape_of(doc.instance)) {
      throw ParseError("document shape is " + std::string(to_string(shape_of(doc.instance))) +
                       ", requested " + std::string(to_string(*shape)));
    }
    return doc;
  }
  return parse_plain_instance(content, shape.value_or(Shape::string));
}

std::string format_instance_json(const InstanceDocument& doc) {
  return instance_to_json(doc).dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << content;
}

InstanceDocument read_instance_file(const std::filesystem::path& path, std::optional<Shape> shape) {
  return parse_instance(read_file(path), shape);
}

Marking parse_marking(std::string_view text) {
  std::vector<Site> sites;
  for (auto item : split_any(text, ", \t\n")) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      sites.push_back(Site{1, parse_int<std::uint32_t>(item, "position")});
    } else {
      sites.push_back(Site{parse_int<std::uint32_t>(item.substr(0, colon), "text index"),
                           parse_int<std::uint32_t>(item.substr(colon + 1), "position")});
    }
  }
  return Marking(std::move(sites));
}

std::string format_marking(const Marking& marking, bool set_form) {
  std::string out;
  for (const auto& s : marking.sites()) {
    if (!out.empty()) out += ',';
    if (set_form) out += std::to_string(s.text) + ":";
    out += std::to_string(s.pos);
  }
  return out;
}

EdgeSelection parse_edge_list(std::string_view text) {
  std::vector<std::uint32_t> edges;
  for (auto item : split_any(text, ", \t\n")) edges.push_back(parse_int<std::uint32_t>(item, "edge"));
  return EdgeSelection(std::move(edges));
}

std::string format_edge_list(const EdgeSelection& selection) {
  std::string out;
  for (auto e : selection.indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

GraphDocument parse_graph(std::string_view content) {
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> colors;
  bool header = false;
  std::map<std::size_t, std::string> vertex_labels;
  std::map<std::size_t, std::string> color_labels;
  std::vector<ColoredEdge> edges;
  std::size_t line_no = 0;
  for (auto raw : split_lines(content)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto space = line.find_first_of(" \t");
    const auto keyword = line.substr(0, space);
    const auto rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    auto fail = [&](const std::string& why) {
      return ParseError("graph line " + std::to_string(line_no) + ": " + why);
    };
    if (!header) {
      if (keyword != "colored-graph" || rest != "1") throw fail("expected 'colored-graph 1'");
      header = true;
    } else if (keyword == "vertices") {
      vertices = parse_int<std::size_t>(rest, "vertex count");
    } else if (keyword == "colors") {
      colors = parse_int<std::size_t>(rest, "color count");
    } else if (keyword == "vertex-label" || keyword == "color-label") {
      const auto sp = rest.find_first_of(" \t");
      if (sp == std::string_view::npos) throw fail("label without text");
      const auto id = parse_int<std::size_t>(rest.substr(0, sp), "label id");
      (keyword == "vertex-label" ? vertex_labels : color_labels)[id] = std::string(trim(rest.substr(sp)));
    } else if (keyword == "edge") {
      const auto parts = split_any(rest, " \t");
      if (parts.size() != 3) throw fail("edge needs 'u v color'");
      edges.push_back({parse_int<VertexId>(parts[0], "vertex"), parse_int<VertexId>(parts[1], "vertex"),
                       parse_int<ColorId>(parts[2], "color")});
    } else {
      throw fail("unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!header || !vertices || !colors) throw ParseError("graph needs header, vertices and colors");
  auto labels = [](const std::map<std::size_t, std::string>& m, std::size_t count) {
    std::vector<std::string> out;
    if (m.empty()) return out;
    out.resize(count);
    for (const auto& [id, text] : m) {
      if (id >= count) throw ParseError("label for undeclared id " + std::to_string(id));
      out[id] = text;
    }
    return out;
  };
  try {
    return GraphDocument{ColoredGraph(*vertices, *colors, std::move(edges)),
                         labels(vertex_labels, *vertices), labels(color_labels, *colors)};
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
}

std::string format_graph(const GraphDocument& doc) {
  std::ostringstream out;
  const auto& g = doc.graph;
  out << "colored-graph 1\n";
  out << "vertices " << g.num_vertices() << "\n";
  out << "colors " << g.num_colors() << "\n";
  for (std::size_t v = 0; v < doc.vertex_labels.size(); ++v) {
    out << "vertex-label " << v << " " << doc.vertex_labels[v] << "\n";
  }
  for (std::size_t c = 0; c < doc.color_labels.size(); ++c) {
    out << "color-label " << c << " " << doc.color_labels[c] << "\n";
  }
  for (const auto& e : g.edges()) out << "edge " << e.u << " " << e.v << " " << e.color << "\n";
  return out.str();
}

GraphDocument graph_document(const SubstringGraph& sg, const SymbolTable& symbols) {
  GraphDocument doc{sg.graph, {}, {}};
  for (const auto& label : sg.vertex_labels) {
    doc.vertex_labels.push_back(symbols.render(Word{label[0], label[1]}));
  }
  for (auto s : sg.color_symbols) doc.color_labels.push_back(symbols.glyph(s));
  return doc;
}

Cnf parse_dimacs(std::string_view content) {
  Cnf cnf;
  std::optional<std::size_t> declared_clauses;
  Clause current;
  bool header = false;
  for (auto raw : split_lines(content)) {
    const auto line = trim(raw);
    if (line.empty() || line.front() == 'c' || line.front() == '%') continue;
    if (line.front() == 'p') {
      const auto parts = split_any(line, " \t");
      if (parts.size() != 4 || parts[1] != "cnf") throw ParseError("malformed DIMACS header");
      cnf.num_vars = parse_int<std::uint32_t>(parts[2], "variable count");
      declared_clauses = parse_int<std::size_t>(parts[3], "clause count");
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before DIMACS header");
    for (auto token : split_any(line, " \t")) {
      const int value = parse_int<int>(token, "literal");
      if (value == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto lit = Literal::from_dimacs(value);
      if (lit.var > cnf.num_vars) {
        throw ParseError("literal " + std::to_string(value) + " exceeds declared variables");
      }
      current.push_back(lit);
    }
  }
  if (!header) throw ParseError("missing DIMACS header");
  if (!current.empty()) cnf.clauses.push_back(std::move(current));
  if (cnf.clauses.size() != *declared_clauses) {
    throw ParseError("header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                     std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

std::string format_dimacs(const Cnf& cnf, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << "\n";
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    for (const auto& lit : clause) out << lit.to_dimacs() << " ";
    out << "0\n";
  }
  return out.str();
}

Assignment parse_assignment(std::string_view text, std::uint32_t num_vars) {
  std::vector<int> seen(num_vars + 1, 0);
  std::vector<bool> values(num_vars, false);
  for (auto item : split_any(text, ", \t\n")) {
    const int value = parse_int<int>(item, "literal");
    if (value == 0) continue;
    const auto lit = Literal::from_dimacs(value);
    if (lit.var > num_vars) throw ParseError("assignment mentions unknown variable " + std::to_string(lit.var));
    if (seen[lit.var]++) throw ParseError("variable " + std::to_string(lit.var) + " assigned twice");
    values[lit.var - 1] = lit.positive;
  }
  for (std::uint32_t v = 1; v <= num_vars; ++v) {
    if (!seen[v]) throw ParseError("variable " + std::to_string(v) + " is unassigned");
  }
  return Assignment(std::move(values));
}

std::string format_assignment(const Assignment& assignment) {
  std::string out;
  for (std::uint32_t v = 1; v <= assignment.size(); ++v) {
    if (!out.empty()) out += ',';
    out += (assignment.value(v) ? "" : "-") + std::to_string(v);
  }
  return out;
}

std::string format_transform_sidecar(const TransformResult& tr, const SymbolTable& source_symbols,
                                     const SymbolTable& target_symbols) {
  json map = json::array();
  for (const auto& s : tr.position_map) map.push_back(site_json(s));
  json forced = json::array();
  for (const auto& s : tr.forced_sites()) forced.push_back(site_json(s));
  json j{{"format", "attractor-transform"},
         {"version", 1},
         {"from", std::string(to_string(shape_of(tr.source)))},
         {"via", std::string(to_string(shape_of(tr.target)))},
         {"size_offset", tr.size_offset},
         {"delimiters", tr.delimiters},
         {"forced", forced},
         {"position_map", map},
         {"source", instance_to_json({tr.source, source_symbols})},
         {"target", instance_to_json({tr.target, target_symbols})}};
  return j.dump(2) + "\n";
}

TransformSidecar parse_transform_sidecar(std::string_view content) {
  try {
    const json j = json::parse(content);
    if (j.at("format").get<std::string>() != "attractor-transform") {
      throw ParseError("not an attractor-transform document");
    }
    auto source = instance_from_json(j.at("source"));
    auto target = instance_from_json(j.at("target"));
    TransformResult tr{source.instance, target.instance, j.at("size_offset").get<std::size_t>(), {},
                       j.at("delimiters").get<std::vector<SymbolId>>()};
    for (const auto& entry : j.at("position_map")) {
      if (entry.is_null()) {
        tr.position_map.emplace_back(std::nullopt);
      } else {
        tr.position_map.emplace_back(Site{entry.at(0).get<std::uint32_t>(), entry.at(1).get<std::uint32_t>()});
      }
    }
    if (tr.position_map.size() != total_sites(tr.target)) {
      throw ParseError("position map does not match the target instance");
    }
    return {std::move(tr), std::move(source.symbols), std::move(target.symbols)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed transform sidecar: ") + e.what());
  }
}

std::string format_substring_graph_sidecar(const SubstringGraph& sg, const SymbolTable& symbols) {
  json edges = json::array();
  for (std::size_t e = 0; e < sg.graph.num_edges(); ++e) {
    json classes = json::array();
    if (sg.edge_classes[e] & kInterior) classes.push_back("interior");
    if (sg.edge_classes[e] & kPrefix) classes.push_back("prefix");
    if (sg.edge_classes[e] & kSuffix) classes.push_back("suffix");
    json occ = json::array();
    for (const auto& s : sg.provenance[e]) occ.push_back(site_json(s));
    edges.push_back({{"index", e},
                     {"label", symbols.glyph(sg.color_symbols[sg.graph.edge(e).color])},
                     {"classes", classes},
                     {"occurrences", occ}});
  }
  json vertices = json::array();
  for (const auto& v : sg.vertex_labels) vertices.push_back(symbols.render(Word{v[0], v[1]}));
  json colors = json::array();
  for (auto s : sg.color_symbols) colors.push_back(symbols.glyph(s));
  json j{{"format", "substring-graph-provenance"},
         {"version", 1},
         {"vertices", vertices},
         {"colors", colors},
         {"edges", edges}};
  return j.dump(2) + "\n";
}

}  // namespace attractor
